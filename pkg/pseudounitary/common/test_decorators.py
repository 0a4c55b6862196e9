# Copyright (c) The pseudounitary developers. All Rights Reserved.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from typing import Callable, Any
from unittest import TestCase
import numpy as np
from . import decorators


class DecoratorTests(TestCase):

    def test_registry(self) -> None:
        commands = decorators.Registry[Callable[[], int]]()
        other = decorators.Registry[Callable[[], int]]()

        @commands.register
        def dummy() -> int:
            return 12

        np.testing.assert_equal(dummy(), 12)
        np.testing.assert_array_equal(list(commands.keys()), ["dummy"])
        np.testing.assert_array_equal(list(other.keys()), [])
        del commands["dummy"]
        np.testing.assert_array_equal(list(commands.keys()), [])

    def test_prefix_and_info(self) -> None:
        commands = decorators.Registry[Callable[[], int]](prefix="cmd_")

        @commands.register_with_info(help="some help", batch=True)
        def cmd_dummy() -> int:
            return 10

        np.testing.assert_equal(cmd_dummy(), 10)
        np.testing.assert_array_equal(list(commands), ["dummy"])
        np.testing.assert_equal(commands.get_info("dummy"), {"help": "some help", "batch": True})
        np.testing.assert_raises(ValueError, commands.get_info, "cmd_dummy")

    def test_registry_error(self) -> None:
        commands = decorators.Registry[Any]()

        @commands.register
        def dummy() -> int:
            return 12

        np.testing.assert_raises(RuntimeError, commands.register, dummy)
