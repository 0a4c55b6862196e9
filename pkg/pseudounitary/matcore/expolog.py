# Copyright (c) The pseudounitary developers. All Rights Reserved.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import math
from typing import Optional, Union
import numpy as np
import scipy.linalg
from ..common.typetools import MatrixLike
from ..common import errors
from .cmatrix import CMatrix, as_cmatrix, zero_tol
from .spectral import JordanData, jordan_structure


def expm(M: Union[CMatrix, MatrixLike]) -> CMatrix:
    """Matrix exponential e^M (Pade approximation with scaling and squaring)

    Raises
    ------
    Overflow
        if the result is not representable
    """
    M = as_cmatrix(M)
    with np.errstate(over="ignore", invalid="ignore"):
        try:
            result = scipy.linalg.expm(M.data)
        except (OverflowError, ValueError) as e:
            raise errors.Overflow(f"Matrix exponential overflowed (||M|| = {M.norm():.3e})") from e
    if not np.all(np.isfinite(result)):
        raise errors.Overflow(f"Matrix exponential overflowed (||M|| = {M.norm():.3e})")
    return M.like(result)


def jordan_block_exp(eigenvalue: complex, size: int) -> np.ndarray:
    """Exact exponential of the Jordan block E 1_p + a_p: e^E sum_{l<p} a_p^l / l!
    (upper triangular Toeplitz matrix with entries e^E / l! on the l-th superdiagonal)
    """
    output = np.zeros((size, size), dtype=complex)
    for ell in range(size):
        output += np.eye(size, k=ell) / math.factorial(ell)
    return complex(np.exp(complex(eigenvalue))) * output


def principal_log(value: complex, tol: float = 0.0) -> complex:
    """ln|u| + i Arg(u) with Arg in (-pi, pi]. Values within tol (relative) of the negative
    real axis get Arg = pi.
    """
    value = complex(value)
    if value.real < 0 and abs(value.imag) <= tol * abs(value):
        return complex(math.log(abs(value)), math.pi)
    return complex(np.log(value))


def jordan_block_log(eigenvalue: complex, size: int, log_eigenvalue: Optional[complex] = None) -> np.ndarray:
    """Logarithm of the Jordan block u 1_p + a_p through the finite Mercator series
    log(u) 1_p + sum_{k=1}^{p-1} (-1)^{k+1} (a_p / u)^k / k.

    Parameters
    ----------
    eigenvalue: complex
        the (nonzero) block eigenvalue u
    size: int
        the block size p
    log_eigenvalue: complex or None
        the chosen logarithm of u (principal branch if None)
    """
    u = complex(eigenvalue)
    log_u = principal_log(u) if log_eigenvalue is None else complex(log_eigenvalue)
    output = log_u * np.eye(size, dtype=complex)
    for k in range(1, size):
        output += (-1)**(k + 1) * np.eye(size, k=k) / (k * u**k)
    return output


def logm_principal(M: Union[CMatrix, MatrixLike], jordan: Optional[JordanData] = None) -> CMatrix:
    """Principal logarithm computed block-wise on the Jordan form

    Parameters
    ----------
    M: CMatrix or array-like
        invertible matrix
    jordan: JordanData or None
        precomputed Jordan decomposition of M (numerical decomposition if None)

    Raises
    ------
    Singular
        if an eigenvalue vanishes within tolerance
    """
    M = as_cmatrix(M)
    jd = jordan_structure(M) if jordan is None else jordan
    threshold = zero_tol(jd.scale, M.tol)
    for item in jd.items:
        if abs(item.eigenvalue) <= threshold:
            raise errors.Singular(f"Matrix has eigenvalue {item.eigenvalue:.3e}, no logarithm exists")
    blocks = [jordan_block_log(b.eigenvalue, b.size, principal_log(b.eigenvalue, M.tol)) for b in jd.blocks()]
    return M.like(jd.basis @ scipy.linalg.block_diag(*blocks) @ jd.cobasis.conj().T)
