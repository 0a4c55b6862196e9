# Copyright (c) The pseudounitary developers. All Rights Reserved.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""Symplectic matrices S^t J S = J. A real matrix is symplectic iff it is
eta_J-pseudo-unitary with eta_J = iJ, so that Sp(2m) is the real subgroup
of a group isomorphic to U(m,m). The eigenvalues of a real symplectic matrix
come in orbits {l, l*, 1/l, 1/l*} with identical Jordan data.
"""
from typing import List, NamedTuple, Optional, Union
import numpy as np
from ..common.typetools import MatrixLike
from ..common import errors
from ..matcore import CMatrix, as_cmatrix, JordanData, JordanItem, jordan_structure, expm, inertia
from ..matcore.cmatrix import spectral_tol
from ..pseudospec import Reason, Verdict, is_eta_pseudo_unitary
from ..pseudospec.verdicts import direct_tolerance


def j_matrix(m: int) -> CMatrix:
    """J = [[0, -1_m], [1_m, 0]]
    """
    if m < 1:
        raise errors.BadParameter(f"m must be positive, got {m}")
    eye, zeros = np.eye(m), np.zeros((m, m))
    return CMatrix(np.block([[zeros, -eye], [eye, zeros]]))


def eta_j(m: int) -> CMatrix:
    """eta_J = iJ, Hermitian with eigenvalues +-1 (multiplicity m each)
    """
    return CMatrix(1j * j_matrix(m).data)


def time_reversal(S: Union[CMatrix, MatrixLike]) -> CMatrix:
    """Entrywise complex conjugation (T S T with T z = z*)
    """
    S = as_cmatrix(S)
    return S.like(S.data.conj())


def _half_dimension(n: int) -> int:
    if n % 2:
        raise errors.DimensionNotEven(f"Symplectic matrices have even dimension, got {n}")
    return n // 2


def hamiltonian_matrix(K: Union[CMatrix, MatrixLike]) -> CMatrix:
    """J K, which exponentiates to a symplectic matrix when K is real symmetric
    """
    K = as_cmatrix(K)
    return K.like(j_matrix(_half_dimension(K.n)).data @ K.data)


def random_symplectic(m: int, rng: Optional[np.random.RandomState] = None) -> np.ndarray:
    """e^{JK} with K real symmetric with entries uniform in [-1, 1]
    """
    rng = np.random.RandomState() if rng is None else rng
    K = rng.uniform(-1, 1, size=(2 * m, 2 * m))
    K = np.triu(K) + np.triu(K, 1).T
    return expm(hamiltonian_matrix(K)).data.real


class SpectralQuadruple(NamedTuple):
    """Orbit of an eigenvalue under conjugation and inversion (1, 2 or 4 distinct values)
    and the Jordan data found at each point of the orbit
    """
    orbit: List[complex]
    members: List[JordanItem]
    missing: List[complex]
    mismatched: bool

    @property
    def valid(self) -> bool:
        return not self.missing and not self.mismatched


class SymplecticReport(NamedTuple):
    is_real: bool
    is_symplectic: bool
    is_eta_j_pseudo_unitary: bool
    quadruples: List[SpectralQuadruple]
    det_check: float
    real_residual: float
    symplectic_residual: float
    eta_j_residual: float


def _symplectic_residual(S: CMatrix) -> float:
    J = j_matrix(_half_dimension(S.n)).data
    return float(np.linalg.norm(S.data.T @ J @ S.data - J, ord=2))


def _orbit(value: complex, tolerance: float) -> List[complex]:
    output: List[complex] = []
    for point in (value, np.conj(value), 1 / value, 1 / np.conj(value)):
        if all(abs(point - p) > tolerance for p in output):
            output.append(complex(point))
    return output


def spectral_quadruples(S: Union[CMatrix, MatrixLike], jordan: Optional[JordanData] = None) -> List[SpectralQuadruple]:
    """Partition of the spectrum of S into orbits {l, l*, 1/l, 1/l*}, each flagged if an orbit
    point is not an eigenvalue or if the geometric multiplicities and Jordan dimensions differ

    Raises
    ------
    DimensionNotEven
        for odd dimensions
    NotSymplectic
        if ||S^t J S - J|| exceeds the symplectic tolerance
    """
    S = as_cmatrix(S)
    residual = _symplectic_residual(S)
    bound = direct_tolerance(S.n, S.tol, S.norm())
    if residual > bound:
        raise errors.NotSymplectic(f"Symplectic residual {residual:.3e} exceeds {bound:.3e}")
    jd = jordan_structure(S) if jordan is None else jordan
    tolerance = spectral_tol(jd.scale, jd.tol)
    remaining = list(jd.items)
    output: List[SpectralQuadruple] = []
    while remaining:
        orbit = _orbit(remaining[0].eigenvalue, tolerance)
        members: List[JordanItem] = []
        missing: List[complex] = []
        for point in orbit:
            distances = [abs(item.eigenvalue - point) for item in remaining]
            if distances and min(distances) <= tolerance:
                members.append(remaining.pop(int(np.argmin(distances))))
            else:
                missing.append(point)
        mismatched = len({tuple(sorted(item.dimensions)) for item in members}) > 1
        output.append(SpectralQuadruple(orbit, members, missing, mismatched))
    return output


def is_symplectic(S: Union[CMatrix, MatrixLike]) -> SymplecticReport:
    """Checks realness (max |Im S_jk| <= tol max(1, ||S||)), S^t J S = J and
    S^dagger eta_J S = eta_J, and computes the spectral quadruples of symplectic matrices

    Raises
    ------
    DimensionNotEven
        for odd dimensions
    """
    S = as_cmatrix(S)
    m = _half_dimension(S.n)
    real_residual = float(np.max(np.abs(S.data.imag)))
    is_real = real_residual <= S.tol * max(1.0, S.norm())
    symplectic_residual = _symplectic_residual(S)
    symplectic = symplectic_residual <= direct_tolerance(S.n, S.tol, S.norm())
    verdict = is_eta_pseudo_unitary(S, eta_j(m))
    quadruples = spectral_quadruples(S) if symplectic else []
    det_check = float(abs(np.linalg.det(S.data) - 1))
    return SymplecticReport(is_real, symplectic, verdict.decision, quadruples, det_check, real_residual,
                            symplectic_residual, verdict.residual)


def sp_in_umm(S: Union[CMatrix, MatrixLike]) -> Verdict:
    """Membership of S in the real subgroup of the eta_J-pseudo-unitary group (isomorphic to U(m,m)),
    i.e. in Sp(2m). The ambient group label is recorded in the verdict info.

    Raises
    ------
    DimensionNotEven
        for odd dimensions
    """
    S = as_cmatrix(S)
    m = _half_dimension(S.n)
    ambient = inertia(eta_j(m)).label
    real_residual = float(np.max(np.abs(S.data.imag)))
    if real_residual > S.tol * max(1.0, S.norm()):
        return Verdict(Reason.NOT_REAL, residual=real_residual, tolerance=S.tol * max(1.0, S.norm()), ambient=ambient)
    verdict = is_eta_pseudo_unitary(S, eta_j(m))
    verdict.info["ambient"] = ambient
    return verdict
