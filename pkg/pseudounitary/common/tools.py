# Copyright (c) The pseudounitary developers. All Rights Reserved.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from collections import abc
from typing import Any, Union, Callable, Sequence, Iterable, Dict, List
import pandas as pd


def complex_to_pair(value: complex) -> List[float]:
    """Serializable [re, im] representation of a complex number
    """
    value = complex(value)
    return [float(value.real), float(value.imag)]


def format_complex(value: complex, digits: int = 6) -> str:
    """Short human readable representation, with signed zeros removed
    """
    value = complex(value)
    real, imag = (0.0 if abs(x) < 10**-(digits + 2) else x for x in (value.real, value.imag))
    if not imag:
        return f"{real:.{digits}g}"
    return f"{real:.{digits}g}{imag:+.{digits}g}j"


class Selector(pd.DataFrame):  # type: ignore
    """Pandas dataframe class with a simplified selection function.
    Used for every tabular output of the package (pairing tables, trajectories, batch summaries).
    """

    def select(self, **kwargs: Union[Any, Sequence[Any], Callable[[Any], bool]]) -> "Selector":  # pylint: disable=arguments-differ
        """Select rows based on a value, a sequence of values or a discriminating function

        Example
        -------
        df.select(status=["error", "negative"])
        will return a new Selector with rows having either "error" or "negative" as status
        """
        df = self
        for name, criterion in kwargs.items():
            if callable(criterion):
                selected = [bool(criterion(x)) for x in df.loc[:, name]]
            elif isinstance(criterion, abc.Iterable) and not isinstance(criterion, str):
                selected = df.loc[:, name].isin(list(criterion))
            else:
                selected = df.loc[:, name].isin([criterion])
            df = df.loc[selected, :]
        return Selector(df)

    @classmethod
    def from_rows(cls, records: Iterable[Dict[str, Any]], columns: Sequence[str]) -> "Selector":
        """Builds a table with a fixed column order (missing fields are NaN)
        """
        return cls(pd.DataFrame(list(records), columns=list(columns)))

    def to_text(self) -> str:
        """Deterministic text rendering (used for stdout reports)
        """
        if self.empty:
            return "(empty)"
        with pd.option_context("display.max_rows", None, "display.max_columns", None, "display.width", 200):
            return str(pd.DataFrame(self).to_string(index=False))
