# Copyright (c) The pseudounitary developers. All Rights Reserved.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from typing import Any, Callable, Optional, Dict, TypeVar, MutableMapping, Iterator
import functools


X = TypeVar("X")


class Registry(MutableMapping[str, X]):
    """Named registry of functions (e.g. command line subcommands), usable as a decorator.

    Parameters
    ----------
    prefix: str
        prefix stripped from the function names when registering them
        (e.g. "cmd_" registers cmd_classify as "classify")
    """

    def __init__(self, prefix: str = "") -> None:
        super().__init__()
        self.prefix = prefix
        self.data: Dict[str, X] = {}
        self._information: Dict[str, Dict[str, Any]] = {}

    def _name(self, obj: X) -> str:
        name: str = getattr(obj, "__name__", obj.__class__.__name__)
        if self.prefix and name.startswith(self.prefix):
            name = name[len(self.prefix):]
        return name

    def register(self, obj: X, info: Optional[Dict[str, Any]] = None) -> X:
        """Decorator method for registering functions
        """
        name = self._name(obj)
        if name in self:
            raise RuntimeError(f'Encountered a name collision "{name}"')
        self[name] = obj
        self._information[name] = {} if info is None else dict(info)
        return obj

    def register_with_info(self, **info: Any) -> Callable[[X], X]:
        """Decorator for registering a function together with information about it
        (help string, whether it accepts a directory as input...)
        """
        return functools.partial(self.register, info=info)

    def get_info(self, name: str) -> Dict[str, Any]:
        if name not in self:
            raise ValueError(f'"{name}" is not registered (choose among {sorted(self)}).')
        return self._information.setdefault(name, {})

    def __getitem__(self, key: str) -> X:
        return self.data[key]

    def __setitem__(self, key: str, value: X) -> None:
        self.data[key] = value

    def __delitem__(self, key: str) -> None:
        del self.data[key]
        self._information.pop(key, None)

    def __iter__(self) -> Iterator[str]:
        return iter(self.data)

    def __len__(self) -> int:
        return len(self.data)
