# Copyright (c) The pseudounitary developers. All Rights Reserved.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import warnings
from typing import Any, List, NamedTuple, Optional, Sequence, Union
import numpy as np
from ..common.typetools import MatrixLike, VectorLike
from ..common import errors
from ..matcore import CMatrix, as_cmatrix, JordanData, JordanBlock, Inertia, inertia, jordan_structure
from ..pseudospec import SpectralPairing, pair_spectrum
from ..pseudospec.verdicts import direct_tolerance
from .coefficients import BlockCoefficients, solve_block_coeffs, hermitian_unimodular_coeffs


class BlockTerm(NamedTuple):
    """One term of the metric operator: Phi_row x Phi_column^dagger (and its adjoint for
    paired blocks), where Phi_b are the cobasis vectors of block b
    """
    kind: str  # "unimodular" or "paired"
    coefficients: BlockCoefficients
    row: JordanBlock
    column: JordanBlock


class MetricOperator:
    """Hermitian invertible eta with U^dagger eta U = eta, built on the Jordan decomposition
    U = A J A^{-1} as eta = Phi X Phi^dagger (Phi = (A^{-1})^dagger), with X block structured.
    The result depends on the Jordan basis A.

    Parameters
    ----------
    eta: CMatrix
        the metric operator
    eta_inverse: CMatrix
        its inverse A X^{-1} A^dagger
    signature: Inertia
        counts of negative and positive eigenvalues of eta
    terms: list of BlockTerm
        the coefficients of each block
    """

    def __init__(self, eta: CMatrix, eta_inverse: CMatrix, signature: Inertia, terms: List[BlockTerm]) -> None:
        self.eta = eta
        self.eta_inverse = eta_inverse
        self.signature = signature
        self.terms = terms

    @property
    def coefficients(self) -> List[BlockCoefficients]:
        return [t.coefficients for t in self.terms]

    @property
    def label(self) -> str:
        return self.signature.label

    def residual(self, U: Union[CMatrix, MatrixLike]) -> float:
        """||U^dagger eta U - eta||
        """
        U = np.asarray(U)
        return float(np.linalg.norm(U.conj().T @ self.eta.data @ U - self.eta.data, ord=2))

    def inverse_residual(self) -> float:
        """||eta eta^{-1} - 1||
        """
        return float(np.linalg.norm(self.eta.data @ self.eta_inverse.data - np.eye(self.eta.n), ord=2))

    def __repr__(self) -> str:
        return f"MetricOperator({self.label}, blocks={[(t.kind, t.coefficients.p) for t in self.terms]})"


def paired_column_candidates(p: int) -> List[np.ndarray]:
    """Default last columns tried for paired blocks: e_p, e_{p-1}, ..., e_1
    (only e_1 gives an invertible block when p > 1, since det x is proportional to x_{1,p})
    """
    return [np.eye(p, dtype=complex)[:, k] for k in reversed(range(p))]


def _paired_coefficients(u: complex, p: int, column: Optional[VectorLike], tol: float) -> BlockCoefficients:
    if column is not None:
        output = solve_block_coeffs(u, p, column)
        if output.is_invertible(tol):
            return output
        warnings.warn(f"Provided last column makes the paired block of eigenvalue {u:.6g} singular, "
                      "using the default columns instead", errors.SingularBlockWarning)
    for candidate in paired_column_candidates(p):
        output = solve_block_coeffs(u, p, candidate)
        if output.is_invertible(tol):
            return output
    raise errors.SingularBlock(f"No invertible paired block found for eigenvalue {u:.6g}")


def _get(values: Optional[Sequence[Any]], index: int, default: Any) -> Any:
    if values is None or index >= len(values) or values[index] is None:
        return default
    return values[index]


def build_metric(jd: JordanData, pairing: Optional[SpectralPairing] = None, rhos: Optional[Sequence[float]] = None,
                 signs: Optional[Sequence[int]] = None,
                 paired_columns: Optional[Sequence[Optional[VectorLike]]] = None) -> MetricOperator:
    """Metric operator of a pseudo-unitary matrix from its Jordan decomposition

    Parameters
    ----------
    jd: JordanData
        Jordan decomposition of U
    pairing: SpectralPairing or None
        spectral pairing of jd (computed if None)
    rhos: sequence of float or None
        anti-diagonal scale of each unimodular block, in block order (default 1)
    signs: sequence of int or None
        sign of each unimodular block (default +1)
    paired_columns: sequence of vectors or None
        last column of each paired block, in pair order (default: first invertible column
        of paired_column_candidates). A column making the block singular is replaced with
        a SingularBlockWarning.

    Returns
    -------
    MetricOperator
        eta, eta^{-1} and the signature of eta

    Raises
    ------
    NotPseudoUnitary
        if some eigenvalues are not paired
    IllConditioned
        if the assembled eta does not satisfy U^dagger eta U = eta or eta eta^{-1} = 1
        within tolerance
    """
    pairing = pair_spectrum(jd) if pairing is None else pairing
    if pairing.unpaired:
        raise errors.NotPseudoUnitary(f"Matrix is not pseudo-unitary ({pairing.verdict().reason.value})",
                                      [u.eigenvalue for u in pairing.unpaired])
    n, tol = jd.n, jd.tol
    X = np.zeros((n, n), dtype=complex)
    X_inverse = np.zeros((n, n), dtype=complex)
    terms: List[BlockTerm] = []
    unimodular_blocks = [b for item in pairing.fixed for b in jd.item_blocks(item)]
    for k, block in enumerate(unimodular_blocks):
        coeffs = hermitian_unimodular_coeffs(block.eigenvalue, block.size, rho=_get(rhos, k, 1.0),
                                             sign=_get(signs, k, 1), tol=tol)
        X[block.columns, block.columns] = coeffs.x
        X_inverse[block.columns, block.columns] = np.linalg.inv(coeffs.x)
        terms.append(BlockTerm("unimodular", coeffs, block, block))
    paired_blocks = [(outer, inner) for pair in pairing.pairs
                     for outer, inner in zip(*(sorted(jd.item_blocks(item), key=lambda b: -b.size) for item in pair))]
    for k, (outer, inner) in enumerate(paired_blocks):
        assert outer.size == inner.size, "Paired blocks must have the same size"
        coeffs = _paired_coefficients(outer.eigenvalue, outer.size, _get(paired_columns, k, None), tol)
        inverse = np.linalg.inv(coeffs.x)
        X[inner.columns, outer.columns] = coeffs.x
        X[outer.columns, inner.columns] = coeffs.x.conj().T
        X_inverse[outer.columns, inner.columns] = inverse
        X_inverse[inner.columns, outer.columns] = inverse.conj().T
        terms.append(BlockTerm("paired", coeffs, inner, outer))
    eta = jd.cobasis @ X @ jd.cobasis.conj().T
    eta = (eta + eta.conj().T) / 2
    eta_inverse = jd.basis @ X_inverse @ jd.basis.conj().T
    eta_inverse = (eta_inverse + eta_inverse.conj().T) / 2
    output = MetricOperator(CMatrix(eta, tol=tol), CMatrix(eta_inverse, tol=tol), inertia(CMatrix(eta, tol=tol)), terms)
    U = jd.matrix()
    bound = direct_tolerance(n, tol, jd.scale) * output.eta.norm()
    residual = output.residual(U)
    if residual > bound:
        raise errors.IllConditioned(f"Metric residual ||U^dagger eta U - eta|| = {residual:.3e} exceeds {bound:.3e}")
    if output.inverse_residual() > n * tol * max(1.0, float(np.linalg.cond(X))):
        raise errors.IllConditioned(f"Assembled inverse residual {output.inverse_residual():.3e} is too large")
    return output


def find_metric(U: Union[CMatrix, MatrixLike], **kwargs: Any) -> MetricOperator:
    """Metric operator of U, computing its Jordan decomposition (see build_metric for the parameters)
    """
    return build_metric(jordan_structure(as_cmatrix(U)), **kwargs)


def classify_group(eta: Union[CMatrix, MatrixLike]) -> Inertia:
    """Signature (p, q) of eta and transformer A with A^dagger eta_{p,q} A = eta, so that the
    eta-pseudo-unitary matrices are A^{-1} U(p,q) A. The label is U(n) when p = 0 or q = 0.

    Raises
    ------
    NotHermitian, Singular
        for an invalid metric
    """
    return inertia(eta)


def congruence_transport(eta: Union[CMatrix, MatrixLike], transformer: Union[CMatrix, MatrixLike]) -> CMatrix:
    """A^dagger eta A: U is eta-pseudo-unitary iff A^{-1} U A is (A^dagger eta A)-pseudo-unitary

    Raises
    ------
    Singular
        if A is not invertible
    DimensionMismatch
        if the sizes differ
    """
    eta = as_cmatrix(eta)
    transformer = as_cmatrix(transformer, eta.tol)
    if eta.n != transformer.n:
        raise errors.DimensionMismatch(f"Dimensions of eta ({eta.n}) and A ({transformer.n}) differ")
    singular = np.linalg.svd(transformer.data, compute_uv=False)
    if singular[-1] <= transformer.tol * singular[0]:
        raise errors.Singular(f"Transformer is singular (smallest singular value {singular[-1]:.3e})")
    return eta.like(transformer.data.conj().T @ eta.data @ transformer.data)
