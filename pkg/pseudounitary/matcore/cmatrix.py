# Copyright (c) The pseudounitary developers. All Rights Reserved.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""Dense complex square matrices carrying the tolerance used for every numerical decision,
and the functions deriving all the other thresholds from it.
"""
from typing import Any, Optional, Union
import numpy as np
from ..common.typetools import MatrixLike
from ..common import errors


DEFAULT_TOL = 1e-9


class CMatrix:
    """Immutable dense complex square matrix with an attached tolerance.

    Parameters
    ----------
    data: array-like
        n x n entries (converted to complex, copied and made read-only)
    tol: float
        tolerance used in all rank and equality decisions, 0 <= tol < 1

    Note
    ----
    The matrix behaves as a numpy array through __array__, and matrix products
    with @ return a CMatrix with the tolerance of the left operand.
    """

    __array_ufunc__ = None  # ndarray @ CMatrix defers to __rmatmul__

    def __init__(self, data: MatrixLike, tol: float = DEFAULT_TOL) -> None:
        array = np.array(data, dtype=complex)
        if array.ndim != 2 or array.shape[0] != array.shape[1] or not array.size:
            raise errors.DimensionMismatch(f"Expected a non-empty square matrix but got shape {array.shape}")
        if not np.all(np.isfinite(array)):
            raise errors.BadParameter("Matrix entries must be finite")
        if not 0 <= tol < 1:
            raise errors.BadParameter(f"Tolerance must be in [0, 1) but got {tol}")
        array.setflags(write=False)
        self._data = array
        self.tol = float(tol)

    @property
    def data(self) -> np.ndarray:
        return self._data

    @property
    def n(self) -> int:
        return int(self._data.shape[0])

    def __array__(self, dtype: Any = None, copy: Any = None) -> np.ndarray:
        if dtype is None and not copy:
            return self._data
        return self._data.astype(complex if dtype is None else dtype)

    def like(self, data: MatrixLike) -> "CMatrix":
        """New matrix sharing this matrix tolerance
        """
        return CMatrix(data, tol=self.tol)

    def adjoint(self) -> "CMatrix":
        return self.like(self._data.conj().T)

    def norm(self) -> float:
        """Spectral norm (largest singular value)
        """
        return float(np.linalg.norm(self._data, ord=2))

    def __matmul__(self, other: Union["CMatrix", np.ndarray]) -> "CMatrix":
        return self.like(self._data @ np.asarray(other))

    def __rmatmul__(self, other: np.ndarray) -> "CMatrix":
        return self.like(np.asarray(other) @ self._data)

    def __repr__(self) -> str:
        return f"CMatrix(n={self.n}, tol={self.tol:g},\n{self._data})"


def as_cmatrix(data: Union[CMatrix, MatrixLike], tol: Optional[float] = None) -> CMatrix:
    """Converts to CMatrix. An existing CMatrix keeps its tolerance unless tol is provided.
    """
    if isinstance(data, CMatrix):
        return data if tol is None or tol == data.tol else CMatrix(data.data, tol=tol)
    return CMatrix(data, tol=DEFAULT_TOL if tol is None else tol)


# %% derived tolerances


def cluster_radius(scale: float, tol: float) -> float:
    """Eigenvalues closer than this radius are considered equal
    """
    return max(1e-8, 1e3 * tol) * scale


def rank_threshold(n: int, tol: float, scale: float, power: int = 1) -> float:
    """Singular values of a matrix of norm ~scale**power below this threshold count as zero.
    The threshold is absolute for scales below 1.
    """
    return n * tol * max(scale, 1.0)**power


def spectral_tol(scale: float, tol: float) -> float:
    """Tolerance on eigenvalue positions: unimodularity, inverse-conjugate pairing
    and realness of eigenvalues
    """
    return 1e3 * tol * (1.0 + scale)


def zero_tol(scale: float, tol: float) -> float:
    """Eigenvalues with modulus below this value count as zero
    """
    return tol * max(1.0, scale)


def hermitian_residual(matrix: CMatrix) -> float:
    return float(np.linalg.norm(matrix.data - matrix.data.conj().T, ord=2))


def check_hermitian(matrix: CMatrix) -> None:
    """Raises NotHermitian if ||M - M^dagger|| > tol ||M||
    """
    residual = hermitian_residual(matrix)
    if residual > matrix.tol * matrix.norm():
        raise errors.NotHermitian(f"Matrix is not Hermitian (||M - M^dagger|| = {residual:.3e})")
