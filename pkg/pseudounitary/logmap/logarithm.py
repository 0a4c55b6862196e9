# Copyright (c) The pseudounitary developers. All Rights Reserved.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""Pseudo-Hermitian logarithms of pseudo-unitary matrices.

With U = A J A^{-1}, each Jordan block u 1_p + a_p gets the logarithm
i E 1_p + log(1_p + a_p / u), with E = -i log(u) on the principal branch.
E is forced real for unimodular u, and for a pair (u_+, u_-) with u_- = 1/u_+*,
E_- is shifted by a multiple of 2 pi so that it matches E_+*. The resulting
H = A H~ A^{-1} satisfies e^{iH} = U and has a real or conjugate-paired spectrum.
"""
import math
from typing import Dict, List, NamedTuple, Optional, Union
import numpy as np
import scipy.linalg
from ..common.typetools import MatrixLike
from ..common import errors
from ..matcore import CMatrix, as_cmatrix, JordanData, jordan_structure, jordan_block_log, principal_log, expm
from ..pseudospec import pair_spectrum


class Relocation(NamedTuple):
    """Shift E_-' = E_- - 2 pi k of the logarithm of the inner eigenvalue of a pair
    """
    original: complex
    shift: int
    relocated: complex


class LogResult(NamedTuple):
    """H with U = e^{iH}, the relocations applied to paired eigenvalues, and
    the residual ||e^{iH} - U||
    """
    H: CMatrix
    relocations: List[Relocation]
    residual: float


def relocate(log_outer: complex, log_inner: complex) -> Relocation:
    """Shifts log_inner by 2 pi k, with k the integer closest to Re(log_inner - log_outer*) / (2 pi)
    """
    shift = int(round((complex(log_inner) - np.conj(log_outer)).real / (2 * math.pi)))
    return Relocation(complex(log_inner), shift, complex(log_inner) - 2 * math.pi * shift)


def _log_eigenvalue(u: complex, tol: float) -> complex:
    return -1j * principal_log(u, tol)


def pseudo_hermitian_log(U: Union[CMatrix, MatrixLike], jordan: Optional[JordanData] = None) -> LogResult:
    """Pseudo-Hermitian matrix H with U = e^{iH}

    Parameters
    ----------
    U: CMatrix or array-like
        pseudo-unitary matrix
    jordan: JordanData or None
        precomputed Jordan decomposition of U

    Raises
    ------
    NotPseudoUnitary
        if the spectrum of U is not paired
    IllConditioned
        if e^{iH} does not reproduce U within n tol max(1, ||U||)
    """
    U = as_cmatrix(U)
    jd = jordan_structure(U) if jordan is None else jordan
    pairing = pair_spectrum(jd)
    if pairing.unpaired:
        raise errors.NotPseudoUnitary(f"Matrix has no pseudo-Hermitian logarithm ({pairing.verdict().reason.value})",
                                      [u.eigenvalue for u in pairing.unpaired])
    logs: Dict[complex, complex] = {}  # eigenvalue -> E
    for item in pairing.fixed:
        logs[item.eigenvalue] = complex(np.angle(item.eigenvalue))
    relocations: List[Relocation] = []
    for pair in pairing.pairs:
        outer, inner = (_log_eigenvalue(item.eigenvalue, U.tol) for item in pair)
        relocation = relocate(outer, inner)
        relocations.append(relocation)
        logs[pair.first.eigenvalue] = outer
        logs[pair.second.eigenvalue] = relocation.relocated
    blocks = [-1j * jordan_block_log(b.eigenvalue, b.size, log_eigenvalue=1j * logs[b.eigenvalue]) for b in jd.blocks()]
    H = U.like(jd.basis @ scipy.linalg.block_diag(*blocks) @ jd.cobasis.conj().T)
    residual = float(np.linalg.norm(expm(1j * H.data).data - U.data, ord=2))
    bound = U.n * U.tol * max(1.0, U.norm())
    if residual > bound:
        raise errors.IllConditioned(f"Logarithm residual ||e^(iH) - U|| = {residual:.3e} exceeds {bound:.3e}")
    return LogResult(H, relocations, residual)
