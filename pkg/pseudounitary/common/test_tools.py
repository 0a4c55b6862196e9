# Copyright (c) The pseudounitary developers. All Rights Reserved.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import tempfile
from pathlib import Path
from typing import Any, List
import numpy as np
from . import tools
from . import testing


def _make_table() -> tools.Selector:
    records = [{"name": "a", "status": "pass", "value": 1.0},
               {"name": "b", "status": "negative", "value": 2.0},
               {"name": "c", "status": "error"}]
    return tools.Selector.from_rows(records, columns=["name", "status", "value"])


@testing.parametrized(
    void=({}, ["a", "b", "c"]),
    value=({"status": "pass"}, ["a"]),
    function=({"name": lambda x: x != "a"}, ["b", "c"]),
    values=({"status": ["error", "negative"]}, ["b", "c"]),
    conditions=({"status": ["error", "negative"], "name": "c"}, ["c"]),
)
def test_selector(criteria: Any, expected: List[str]) -> None:
    df = _make_table()
    selected = df.select(**criteria)
    testing.assert_set_equal(selected.loc[:, "name"], expected)
    assert isinstance(selected, tools.Selector)


def test_selector_csv_and_text() -> None:
    df = _make_table()
    assert np.isnan(df.loc[2, "value"])
    with tempfile.TemporaryDirectory() as folder:
        path = Path(folder) / "table.csv"
        df.to_csv(path, index=False)
        loaded = testing.read_table(path)
    np.testing.assert_array_equal(loaded.columns, ["name", "status", "value"])
    text = df.to_text()
    assert text.splitlines()[0].split() == ["name", "status", "value"]
    assert tools.Selector().to_text() == "(empty)"
    testing.assert_column_close(loaded.select(status="pass"), "value", [1.0], atol=0)


@testing.parametrized(
    real=(2.0, "2"),
    imaginary=(-0.5j, "0-0.5j"),
    noise=(1 + 1e-15j, "1"),
)
def test_format_complex(value: complex, expected: str) -> None:
    np.testing.assert_equal(tools.format_complex(value), expected)
    np.testing.assert_equal(tools.complex_to_pair(value), [complex(value).real, complex(value).imag])
