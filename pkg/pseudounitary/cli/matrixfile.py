# Copyright (c) The pseudounitary developers. All Rights Reserved.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""Matrix files.

The text format is a JSON document {"n": n, "data": [[[re, im], ...], ...], "tol": tol}
(row-major, "tol" optional) with numbers written at full precision (shortest repr,
which round-trips float64 exactly). The CSV format has columns re and im, one row per
entry in row-major order.
"""
import json
import math
from pathlib import Path
from typing import Any, Dict, Optional, Union
import numpy as np
import pandas as pd
from ..common.typetools import PathLike, MatrixLike
from ..common import errors
from ..common import tools
from ..matcore import CMatrix, as_cmatrix, DEFAULT_TOL


class MatrixFileError(errors.InputError):
    """The file could not be parsed as a matrix file
    """


def matrix_to_dict(matrix: Union[CMatrix, MatrixLike], tol: Optional[float] = None) -> Dict[str, Any]:
    data = np.asarray(matrix, dtype=complex)
    output: Dict[str, Any] = {"n": int(data.shape[0]), "data": [[tools.complex_to_pair(z) for z in row] for row in data]}
    if tol is not None:
        output["tol"] = float(tol)
    return output


def matrix_from_dict(document: Any, tol: Optional[float] = None) -> CMatrix:
    """Parses a matrix document. tol overrides the tolerance of the document (default DEFAULT_TOL).

    Raises
    ------
    MatrixFileError
        for malformed documents
    DimensionMismatch
        for non-square data or data inconsistent with n
    """
    if not isinstance(document, dict) or "data" not in document:
        raise MatrixFileError('Matrix document must be an object with a "data" field')
    try:
        rows = [[complex(float(re), float(im)) for re, im in row] for row in document["data"]]
    except (TypeError, ValueError) as e:
        raise MatrixFileError(f"Entries must be [re, im] pairs of numbers ({e})") from e
    n = len(rows)
    if any(len(row) != n for row in rows) or not n:
        raise errors.DimensionMismatch(f"Matrix data must be square and non-empty (got {n} rows of lengths {[len(r) for r in rows]})")
    if document.get("n", n) != n:
        raise errors.DimensionMismatch(f'Field "n" ({document["n"]}) does not match the data dimension ({n})')
    if tol is None:
        tol = float(document.get("tol", DEFAULT_TOL))
    return CMatrix(np.array(rows), tol=tol)


def read_matrix_file(path: PathLike, fmt: Optional[str] = None, tol: Optional[float] = None) -> CMatrix:
    """Reads a matrix file

    Parameters
    ----------
    path: str or Path
        path to the file
    fmt: str or None
        "text" (JSON) or "csv" (default: inferred from the suffix, text unless ".csv")
    tol: float or None
        tolerance of the output, overriding the one recorded in the file
    """
    path = Path(path)
    fmt = ("csv" if path.suffix.lower() == ".csv" else "text") if fmt is None else fmt
    if fmt == "csv":
        return read_csv_matrix(path, tol=tol)
    if fmt != "text":
        raise errors.BadParameter(f'Unknown matrix format "{fmt}"')
    try:
        document = json.loads(path.read_text())
    except json.JSONDecodeError as e:
        raise MatrixFileError(f"{path} is not a valid matrix document ({e})") from e
    return matrix_from_dict(document, tol=tol)


def read_csv_matrix(path: PathLike, tol: Optional[float] = None) -> CMatrix:
    """Reads a CSV file with columns re, im listing the entries in row-major order
    """
    try:
        df = pd.read_csv(str(path))
    except (pd.errors.ParserError, pd.errors.EmptyDataError, UnicodeDecodeError) as e:
        raise MatrixFileError(f"{path} is not a valid CSV matrix ({e})") from e
    if not {"re", "im"} <= set(df.columns):
        raise MatrixFileError(f'CSV matrix files need columns "re" and "im", got {list(df.columns)}')
    try:
        values = df.loc[:, "re"].astype(float).values + 1j * df.loc[:, "im"].astype(float).values
    except ValueError as e:
        raise MatrixFileError(f"Non-numeric entries in {path} ({e})") from e
    n = int(round(math.sqrt(len(values))))
    if not n or n * n != len(values):
        raise errors.DimensionMismatch(f"{len(values)} entries do not form a square matrix")
    return CMatrix(values.reshape(n, n), tol=DEFAULT_TOL if tol is None else tol)


def write_matrix_file(path: PathLike, matrix: Union[CMatrix, MatrixLike], tol: Optional[float] = None) -> None:
    """Writes a matrix document (text format)
    """
    if tol is None and isinstance(matrix, CMatrix):
        tol = matrix.tol
    Path(path).write_text(json.dumps(matrix_to_dict(as_cmatrix(matrix), tol=tol)) + "\n")
