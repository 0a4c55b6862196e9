# Copyright (c) The pseudounitary developers. All Rights Reserved.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""Coefficients of one block of a metric operator.

For Jordan blocks J_- (eigenvalue 1/u*) and J_+ (eigenvalue u) of size p, a p x p matrix x
satisfies J_-^dagger x J_+ = x iff for all 1 <= i, j <= p

    u^{-1} x_{i,j-1} + u x_{i-1,j} + x_{i-1,j-1} = 0

(entries with a vanishing index being 0). Unimodular blocks are the case J_- = J_+.
All entries are determined by the last column x_{k,p}: they vanish for i + j <= p and

    x_{i,j} = sum_{k=1}^{i+j-p} C(i-k-1, p-j-1) (-1)^{i-k} u^{p+i-j-k} x_{k,p}

otherwise (j < p), with C(r, s) = 0 for r < s.
"""
import math
from typing import Callable, List, NamedTuple, Optional, Tuple
import numpy as np
import scipy.linalg
from ..common.typetools import VectorLike
from ..common import errors
from ..matcore.cmatrix import DEFAULT_TOL, spectral_tol, zero_tol


class BlockCoefficients(NamedTuple):
    """Coefficients x_{i,j} of one metric block (0-indexed storage of the 1-indexed x_{i,j})
    """
    u: complex
    x: np.ndarray

    @property
    def p(self) -> int:
        return int(self.x.shape[0])

    @property
    def last_column(self) -> np.ndarray:
        return self.x[:, -1]

    def anti_diagonal(self) -> np.ndarray:
        """Entries x_{i,p-i+1}, i = 1..p
        """
        return np.fliplr(self.x).diagonal().copy()

    def is_invertible(self, tol: float = DEFAULT_TOL) -> bool:
        # x is zero above its anti-diagonal: det x = +-product of the anti-diagonal entries
        anti = np.abs(self.anti_diagonal())
        return bool(np.min(anti) > tol * max(1.0, float(np.max(np.abs(self.x)))))

    def residual(self, u_minus: Optional[complex] = None) -> float:
        """||J_-^dagger x J_+ - x||, with J_- of eigenvalue u_minus (default 1/u*)
        """
        u_minus = 1 / np.conj(self.u) if u_minus is None else u_minus
        first, second = (complex(v) * np.eye(self.p) + np.eye(self.p, k=1) for v in (u_minus, self.u))
        return float(np.linalg.norm(first.conj().T @ self.x @ second - self.x, ord=2))


def _check_eigenvalue(u: complex, p: int) -> complex:
    if p < 1:
        raise errors.BadParameter(f"Block size must be positive, got {p}")
    u = complex(u)
    if abs(u) <= zero_tol(1.0, DEFAULT_TOL):
        raise errors.ZeroEigenvalue(f"Block eigenvalue {u} vanishes")
    return u


def solve_block_coeffs(u: complex, p: int, last_column: VectorLike) -> BlockCoefficients:
    """Fills the coefficients of a block from its last column, with the closed form solution
    of the block recurrences.

    Parameters
    ----------
    u: complex
        eigenvalue of the block J_+ (nonzero)
    p: int
        block size
    last_column: array-like
        the p free values x_{k,p}

    Raises
    ------
    ZeroEigenvalue
        if u vanishes
    """
    u = _check_eigenvalue(u, p)
    column = np.array(last_column, dtype=complex).ravel()
    if column.size != p:
        raise errors.DimensionMismatch(f"Expected {p} last column values, got {column.size}")
    x = np.zeros((p, p), dtype=complex)
    x[:, -1] = column
    for i in range(1, p + 1):
        for j in range(max(1, p + 1 - i), p):
            x[i - 1, j - 1] = sum(math.comb(i - k - 1, p - j - 1) * (-1)**(i - k) * u**(p + i - j - k) * column[k - 1]
                                  for k in range(1, i + j - p + 1))
    return BlockCoefficients(u, x)


def recurrence_system(u: complex, p: int) -> Tuple[np.ndarray, Callable[[VectorLike], np.ndarray]]:
    """Dense form of the block recurrences in the p(p-1) entries x_{i,j}, j < p (row-major),
    given the last column.

    Returns
    -------
    np.ndarray
        p^2 x p(p-1) coefficient matrix (one row per equation (i, j))
    Callable
        builds the right hand side from the last column
    """
    u = _check_eigenvalue(u, p)
    full = _recurrence_matrix(u, p)
    free = [i * p + j for i in range(p) for j in range(p - 1)]
    last = [i * p + p - 1 for i in range(p)]

    def rhs(last_column: VectorLike) -> np.ndarray:
        return -full[:, last] @ np.array(last_column, dtype=complex).ravel()

    return full[:, free], rhs


def _recurrence_matrix(u: complex, p: int) -> np.ndarray:
    """Coefficients of the p^2 equations on the p^2 entries of x (row-major)
    """
    matrix = np.zeros((p * p, p * p), dtype=complex)
    for i in range(p):
        for j in range(p):
            row = i * p + j
            for (a, b), coeff in [((i, j - 1), 1 / u), ((i - 1, j), u), ((i - 1, j - 1), 1)]:
                if a >= 0 and b >= 0:
                    matrix[row, a * p + b] = coeff
    return matrix


def solve_recurrence_system(u: complex, p: int, last_column: VectorLike) -> np.ndarray:
    """Coefficients obtained by a dense least squares solve of the recurrences
    (independent of the closed form solution)
    """
    matrix, rhs = recurrence_system(u, p)
    x = np.zeros((p, p), dtype=complex)
    x[:, -1] = np.array(last_column, dtype=complex).ravel()
    if p > 1:
        solution = scipy.linalg.lstsq(matrix, rhs(last_column))[0]
        x[:, :-1] = solution.reshape(p, p - 1)
    return x


def _realified(matrix: np.ndarray) -> np.ndarray:
    """Real form of a complex linear map acting on [Re z; Im z]
    """
    return np.block([[matrix.real, -matrix.imag], [matrix.imag, matrix.real]])


def hermitian_unimodular_coeffs(u: complex, p: int, rho: float = 1.0, sign: int = 1,
                                tol: float = DEFAULT_TOL) -> BlockCoefficients:
    """Hermitian invertible coefficients of a unimodular block, with
    x_{1,p} = sign sqrt((-1)^{p-1}) u^{1-p} rho (principal root: 1 for odd p, i for even p).
    The other last column entries are set to 0 whenever Hermiticity permits it, the system made of
    the recurrences, the Hermiticity conditions x_{j,i} = x_{i,j}* and the fixed x_{1,p} being solved
    in the real and imaginary parts of x.

    Parameters
    ----------
    u: complex
        unimodular eigenvalue
    p: int
        block size
    rho: float
        positive scale of the anti-diagonal
    sign: int
        +1 or -1

    Raises
    ------
    NotUnimodular
        if ||u| - 1| exceeds the spectral tolerance
    BadParameter
        if rho <= 0 or sign is not +1/-1
    """
    u = _check_eigenvalue(u, p)
    if abs(abs(u) - 1) > spectral_tol(1.0, tol):
        raise errors.NotUnimodular(f"Eigenvalue {u} is not unimodular")
    if not rho > 0 or sign not in (1, -1):
        raise errors.BadParameter(f"Expected rho > 0 and sign in (-1, 1), got rho={rho}, sign={sign}")
    u /= abs(u)
    corner = sign * np.sqrt(complex((-1)**(p - 1))) * u**(1 - p) * rho
    if p == 1:
        return BlockCoefficients(u, np.array([[corner.real]], dtype=complex))
    size = p * p
    equations = [_realified(_recurrence_matrix(u, p))]
    targets = [np.zeros(2 * size)]
    real_part: List[np.ndarray] = []  # x_{i,j} - x_{j,i}* = 0
    imag_part: List[np.ndarray] = []
    for i in range(p):
        for j in range(i, p):
            real_row = np.zeros(2 * size)
            real_row[i * p + j] += 1
            real_row[j * p + i] -= 1
            imag_row = np.zeros(2 * size)
            imag_row[size + i * p + j] += 1
            imag_row[size + j * p + i] += 1
            real_part.append(real_row)
            imag_part.append(imag_row)
    equations.append(np.array(real_part + imag_part))
    targets.append(np.zeros(len(real_part) + len(imag_part)))
    fixed = np.zeros((2, 2 * size))
    fixed[0, p - 1] = fixed[1, size + p - 1] = 1
    equations.append(fixed)
    targets.append(np.array([corner.real, corner.imag]))
    threshold = p * tol * (1 + rho)
    for k in range(1, p):  # greedy zeros on the free last column entries
        for offset in (0, size):
            zero = np.zeros((1, 2 * size))
            zero[0, offset + k * p + p - 1] = 1
            candidate_matrix = np.vstack(equations + [zero])
            candidate_target = np.concatenate(targets + [np.zeros(1)])
            solution = scipy.linalg.lstsq(candidate_matrix, candidate_target)[0]
            if np.linalg.norm(candidate_matrix @ solution - candidate_target) <= threshold:
                equations.append(zero)
                targets.append(np.zeros(1))
    matrix, target = np.vstack(equations), np.concatenate(targets)
    solution = scipy.linalg.lstsq(matrix, target)[0]
    if np.linalg.norm(matrix @ solution - target) > threshold:
        raise errors.NonConvergence("Hermiticity conditions could not be satisfied")
    x = (solution[:size] + 1j * solution[size:]).reshape(p, p)
    column = x[:, -1].copy()
    column[0] = corner
    output = solve_block_coeffs(u, p, column)
    assert np.linalg.norm(output.x - output.x.conj().T) <= threshold * max(1.0, np.linalg.norm(output.x)), \
        "Completed coefficients are not Hermitian"
    return output
