# Copyright (c) The pseudounitary developers. All Rights Reserved.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import inspect
from typing import Iterable, Any, Tuple, Callable
try:
    import pytest
except ImportError:
    pass  # makes most of this module usable without pytest
import numpy as np
import pandas as pd
from .typetools import PathLike
from . import tools


def assert_set_equal(estimate: Iterable[Any], reference: Iterable[Any], err_msg: str = "") -> None:
    """Asserts that both sets are equals, with comprehensive error message.
    This function should only be used in tests.

    Parameters
    ----------
    estimate: iterable
        sequence of elements to compare with the reference set of elements
    reference: iterable
        reference sequence of elements
    """
    estimate, reference = (set(x) for x in [estimate, reference])
    elements = [("additional", estimate - reference), ("missing", reference - estimate)]
    messages = ["  - {} element(s): {}.".format(name, s) for (name, s) in elements if s]
    if messages:
        messages = ([err_msg] if err_msg else []) + ["Sets are not equal:"] + messages
        raise AssertionError("\n".join(messages))


def printed_assert_equal(actual: Any, desired: Any, err_msg: str = '') -> None:
    try:
        np.testing.assert_equal(actual, desired, err_msg=err_msg)
    except AssertionError as e:
        print("\n" + "# " * 12 + "DEBUG MESSAGE " + "# " * 12)
        print(f"Expected: {desired}\nbut got:  {actual}")
        raise e


def assert_matrix_close(actual: Any, desired: Any, rtol: float = 1e-10, atol: float = 1e-12, err_msg: str = "") -> None:
    """Asserts that ||actual - desired|| <= atol + rtol * ||desired|| (Frobenius norms).
    This is a whole-matrix criterion, unlike np.testing.assert_allclose which is entrywise.
    """
    actual, desired = (np.asarray(x, dtype=complex) for x in (actual, desired))
    np.testing.assert_equal(actual.shape, desired.shape, err_msg="Shapes differ")
    error = float(np.linalg.norm(actual - desired))
    bound = atol + rtol * float(np.linalg.norm(desired))
    if not error <= bound:
        raise AssertionError(f"{err_msg}\nMatrices differ: error {error:.3e} > bound {bound:.3e}\n"
                             f"actual:\n{actual}\ndesired:\n{desired}")


def read_table(path: PathLike) -> tools.Selector:
    """Loads a csv table (batch summaries, trajectories) as a Selector
    """
    return tools.Selector(pd.read_csv(str(path)))


def assert_column_close(table: pd.DataFrame, column: str, reference: Any, atol: float) -> None:
    """Asserts that a numeric column matches reference values up to atol
    """
    np.testing.assert_allclose(np.asarray(table.loc[:, column], dtype=complex), np.asarray(reference, dtype=complex), atol=atol)


def assert_multiset_close(actual: Iterable[complex], desired: Iterable[complex], atol: float = 1e-9) -> None:
    """Asserts that two multisets of complex numbers match up to atol (greedy matching)
    """
    remaining = [complex(x) for x in desired]
    actual = [complex(x) for x in actual]
    assert len(actual) == len(remaining), f"Different sizes: {actual} vs {remaining}"
    for value in actual:
        distances = [abs(value - r) for r in remaining]
        k = int(np.argmin(distances))
        if distances[k] > atol:
            raise AssertionError(f"{value} has no match in {remaining} (got {actual})")
        remaining.pop(k)


class parametrized:
    """Named parametrization of pytest tests.

    Each keyword becomes the id of one test case, and its tuple holds one value
    per argument of the decorated function, in the definition order.

    Example
    -------
    @parametrized(small=(2, 4), large=(10, 100))
    def test_square(value, expected): ...
    """

    def __init__(self, **kwargs: Tuple[Any, ...]):
        self.ids = sorted(kwargs)
        self.params = tuple(kwargs[name] for name in self.ids)
        assert self.params, "At least one case must be provided"
        self.num_params = len(self.params[0])
        assert all(isinstance(p, (tuple, list)) for p in self.params)
        assert all(self.num_params == len(p) for p in self.params[1:]), "All cases must have the same length"

    def __call__(self, func: Callable[..., None]) -> Any:  # type is lost here :(
        names = list(inspect.signature(func).parameters.keys())
        assert len(names) == self.num_params, f"Parameter names: {names}"
        values = self.params if self.num_params > 1 else [p[0] for p in self.params]
        return pytest.mark.parametrize(",".join(names), values, ids=self.ids)(func)
