# Copyright (c) The pseudounitary developers. All Rights Reserved.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""Pass/fail decisions on pseudo-unitarity and pseudo-Hermiticity.

Spectral decisions rely on the numerical Jordan structure and on the eigenvalue
tolerance matcore.cmatrix.spectral_tol; direct decisions (for a given metric eta)
compare a residual norm with a bound which is recorded in the Verdict.
"""
from typing import Optional, Union
import numpy as np
from ..common.typetools import MatrixLike
from ..common import errors
from ..matcore import CMatrix, as_cmatrix, JordanData, jordan_structure
from ..matcore.cmatrix import spectral_tol, check_hermitian
from .records import Reason, Verdict
from . import pairing as _pairing


def _metric(eta: Union[CMatrix, MatrixLike], tol: float) -> CMatrix:
    eta = as_cmatrix(eta, tol)
    check_hermitian(eta)
    singular = np.linalg.svd(eta.data, compute_uv=False)
    if singular[-1] <= eta.tol * singular[0]:
        raise errors.Singular(f"Metric is singular (smallest singular value {singular[-1]:.3e})")
    return eta


def direct_tolerance(n: int, tol: float, scale: float) -> float:
    """Relative bound used for ||U^dagger eta U - eta|| / ||eta||
    """
    return n * tol * max(1.0, scale)**2


def is_pseudo_unitary(U: Union[CMatrix, MatrixLike], jordan: Optional[JordanData] = None) -> Verdict:
    """Spectral decision: U is pseudo-unitary iff its eigenvalues are unimodular or come in
    inverse-complex-conjugate pairs with equal geometric multiplicities and Jordan dimensions.

    Parameters
    ----------
    U: CMatrix or array-like
        invertible matrix
    jordan: JordanData or None
        precomputed Jordan structure of U (numerical decomposition if None)
    """
    U = as_cmatrix(U)
    jd = jordan_structure(U) if jordan is None else jordan
    return _pairing.pair_spectrum(jd).verdict()


def is_eta_pseudo_unitary(U: Union[CMatrix, MatrixLike], eta: Union[CMatrix, MatrixLike],
                          residual_tol: Optional[float] = None) -> Verdict:
    """Direct decision U^dagger eta U = eta, i.e. ||U^dagger eta U - eta|| <= residual_tol ||eta||.
    The default residual_tol is n tol max(1, ||U||)^2.

    Raises
    ------
    NotHermitian, Singular
        for an invalid metric
    """
    U = as_cmatrix(U)
    eta = _metric(eta, U.tol)
    if eta.n != U.n:
        raise errors.DimensionMismatch(f"Dimensions of U ({U.n}) and eta ({eta.n}) differ")
    relative = direct_tolerance(U.n, U.tol, U.norm()) if residual_tol is None else residual_tol
    residual = float(np.linalg.norm(U.data.conj().T @ eta.data @ U.data - eta.data, ord=2))
    bound = relative * eta.norm()
    reason = Reason.WITHIN_TOLERANCE if residual <= bound else Reason.RESIDUAL_TOO_LARGE
    return Verdict(reason, residual=residual, tolerance=bound)


def is_pseudo_hermitian(H: Union[CMatrix, MatrixLike], eta: Union[CMatrix, MatrixLike],
                        residual_tol: Optional[float] = None) -> Verdict:
    """Direct decision H^dagger eta = eta H (H is eta-pseudo-Hermitian), with bound
    residual_tol ||eta|| max(1, ||H||) (default residual_tol: n tol)
    """
    H = as_cmatrix(H)
    eta = _metric(eta, H.tol)
    if eta.n != H.n:
        raise errors.DimensionMismatch(f"Dimensions of H ({H.n}) and eta ({eta.n}) differ")
    relative = H.n * H.tol if residual_tol is None else residual_tol
    residual = float(np.linalg.norm(H.data.conj().T @ eta.data - eta.data @ H.data, ord=2))
    bound = relative * eta.norm() * max(1.0, H.norm())
    reason = Reason.WITHIN_TOLERANCE if residual <= bound else Reason.RESIDUAL_TOO_LARGE
    return Verdict(reason, residual=residual, tolerance=bound)


def is_pseudo_hermitian_spectrum(H: Union[CMatrix, MatrixLike], jordan: Optional[JordanData] = None) -> Verdict:
    """Spectral decision: the spectrum of H is real or made of complex-conjugate pairs with
    identical geometric multiplicities and Jordan dimensions
    """
    H = as_cmatrix(H)
    jd = jordan_structure(H) if jordan is None else jordan
    return _pairing.pair_conjugates(jd).verdict()


def det_unimodular(U: Union[CMatrix, MatrixLike], det_tol: Optional[float] = None) -> Verdict:
    """Decides | |det U| - 1 | <= det_tol, a necessary condition for pseudo-unitarity
    (membership in the pseudo-special group). The default det_tol is spectral_tol(||U||, tol).
    """
    U = as_cmatrix(U)
    sign, logabsdet = np.linalg.slogdet(U.data)
    modulus = float(np.exp(logabsdet)) if sign else 0.0
    bound = spectral_tol(U.norm(), U.tol) if det_tol is None else det_tol
    residual = abs(modulus - 1)
    reason = Reason.WITHIN_TOLERANCE if residual <= bound else Reason.RESIDUAL_TOO_LARGE
    return Verdict(reason, residual=residual, tolerance=bound, det_modulus=modulus)


def in_pseudo_special_group(U: Union[CMatrix, MatrixLike]) -> Verdict:
    """Membership of U in the group of matrices with unimodular determinant
    """
    U = as_cmatrix(U)
    verdict = det_unimodular(U)
    verdict.info["group"] = f"SigmaL({U.n},C)"
    return verdict
