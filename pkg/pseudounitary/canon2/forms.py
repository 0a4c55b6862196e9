# Copyright (c) The pseudounitary developers. All Rights Reserved.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""Canonical forms of 2 x 2 pseudo-unitary matrices.

A 2 x 2 matrix U is pseudo-unitary iff U = A^{-1} D A with D one of

    D1 = diag(e^{i theta}, e^{i(phi - theta)})
    D2 = diag(r e^{i theta}, e^{i theta} / r),  r > 1
    D3 = [[e^{i theta}, 1], [0, e^{i theta}]]

The metric operators of D1 are diagonal (any Hermitian invertible eta if D1 is
proportional to the identity), those of D2 are off-diagonal and those of D3 are
[[0, +-i r e^{-i theta}], [-+i r e^{i theta}, b]].
"""
import enum
import math
from typing import List, Optional, Union
import numpy as np
from ..common.typetools import MatrixLike
from ..common import errors
from ..matcore import CMatrix, as_cmatrix, jordan_structure, jordan_block
from ..matcore.cmatrix import spectral_tol
from ..pseudospec import pair_spectrum
from ..metric import congruence_transport


class FormKind(enum.Enum):
    D1 = "D1"
    D2 = "D2"
    D3 = "D3"
    NOT_PSEUDO_UNITARY = "NotPseudoUnitary"


_FAMILIES = {FormKind.D1: "diag(a, b) with a, b nonzero reals",
             FormKind.D2: "[[0, xi], [xi*, 0]] with xi nonzero complex",
             FormKind.D3: "[[0, sign i r e^(-i theta)], [-sign i r e^(i theta), b]] with r > 0, sign = +-1, b real",
             FormKind.NOT_PSEUDO_UNITARY: "none"}


class CanonicalForm2:
    """Canonical form D of a 2 x 2 matrix U = A^{-1} D A

    Parameters
    ----------
    kind: FormKind
        D1, D2, D3 or NotPseudoUnitary
    theta: float
        argument in (-pi, pi] of the first eigenvalue of D
    phi: float
        sum of the arguments of the eigenvalues (D1 only), in (-2 pi, 2 pi]
    r: float
        modulus of the first eigenvalue (D2 only, r > 1)
    transformer: np.ndarray or None
        the matrix A (None if U is not pseudo-unitary)
    unrestricted: bool
        whether e^{i phi} = e^{2 i theta} for D1, in which case D is proportional to
        the identity and any Hermitian invertible eta is a metric operator
    witness: list of complex
        unpaired eigenvalues when U is not pseudo-unitary
    residual: float
        ||A^{-1} D A - U||
    """

    def __init__(self, kind: FormKind, theta: float = 0.0, phi: float = 0.0, r: float = 1.0,
                 transformer: Optional[np.ndarray] = None, unrestricted: bool = False,
                 witness: Optional[List[complex]] = None, residual: float = 0.0) -> None:
        self.kind = kind
        self.theta = float(theta)
        self.phi = float(phi)
        self.r = float(r)
        self.transformer = transformer
        self.unrestricted = unrestricted
        self.witness = [] if witness is None else witness
        self.residual = residual

    @property
    def metric_family(self) -> str:
        if self.kind == FormKind.D1 and self.unrestricted:
            return "[[a, xi], [xi*, b]] with a, b real and ab != |xi|^2"
        return _FAMILIES[self.kind]

    def _check(self) -> None:
        if self.kind == FormKind.NOT_PSEUDO_UNITARY:
            raise errors.NotPseudoUnitary("Matrix has no pseudo-unitary canonical form", self.witness)

    def matrix(self) -> np.ndarray:
        """The canonical matrix D
        """
        self._check()
        phase = np.exp(1j * self.theta)
        if self.kind == FormKind.D1:
            return np.diag([phase, np.exp(1j * (self.phi - self.theta))])
        if self.kind == FormKind.D2:
            return np.diag([self.r * phase, phase / self.r])
        return jordan_block(phase, 2)

    def to_original(self, matrix: MatrixLike) -> np.ndarray:
        """A^{-1} M A, e.g. the logarithm of U from the logarithm of D
        """
        self._check()
        assert self.transformer is not None
        return np.linalg.solve(self.transformer, np.asarray(matrix) @ self.transformer)

    def metric_to_original(self, eta: Union[CMatrix, MatrixLike]) -> CMatrix:
        """A^dagger eta A, a metric operator of U when eta is one of D
        """
        self._check()
        assert self.transformer is not None
        return congruence_transport(eta, self.transformer)

    def __repr__(self) -> str:
        if self.kind == FormKind.NOT_PSEUDO_UNITARY:
            return f"CanonicalForm2(NotPseudoUnitary, witness={self.witness})"
        return f"CanonicalForm2({self.kind.value}, theta={self.theta:.6g}, phi={self.phi:.6g}, r={self.r:.6g})"


def canonical_form_2x2(U: Union[CMatrix, MatrixLike]) -> CanonicalForm2:
    """Canonical form of an invertible 2 x 2 matrix.
    D1 for two unimodular eigenvalues, D2 for an inverse-conjugate pair (r > 1, the
    eigenvalue of modulus r first), D3 for a single Jordan block with unimodular
    eigenvalue, NotPseudoUnitary otherwise.

    Raises
    ------
    DimensionMismatch
        if U is not 2 x 2
    IllConditioned
        if A^{-1} D A does not reproduce U
    """
    U = as_cmatrix(U)
    if U.n != 2:
        raise errors.DimensionMismatch(f"Expected a 2 x 2 matrix, got {U.n} x {U.n}")
    jd = jordan_structure(U)
    pairing = pair_spectrum(jd)
    if pairing.unpaired:
        return CanonicalForm2(FormKind.NOT_PSEUDO_UNITARY, witness=[u.eigenvalue for u in pairing.unpaired])
    blocks = list(jd.blocks())
    unrestricted = False
    if pairing.pairs:
        outer, inner = (jd.item_blocks(item)[0] for item in pairing.pairs[0])
        blocks = [outer, inner]
        kind, theta, phi, r = FormKind.D2, float(np.angle(outer.eigenvalue)), 0.0, abs(outer.eigenvalue)
    elif blocks[0].size == 2:
        kind, theta, phi, r = FormKind.D3, float(np.angle(blocks[0].eigenvalue)), 0.0, 1.0
    else:
        first, second = (float(np.angle(b.eigenvalue)) for b in blocks)
        kind, theta, phi, r = FormKind.D1, first, first + second, 1.0
        unrestricted = abs(np.exp(1j * phi) - np.exp(2j * theta)) <= spectral_tol(1.0, U.tol)
    columns = [c for b in blocks for c in range(b.start, b.start + b.size)]
    transformer = jd.cobasis[:, columns].conj().T
    form = CanonicalForm2(kind, theta, phi, r, transformer=transformer, unrestricted=unrestricted)
    form.residual = float(np.linalg.norm(form.to_original(form.matrix()) - U.data, ord=2))
    bound = spectral_tol(U.norm(), U.tol) * float(np.linalg.cond(transformer))
    if form.residual > bound:
        raise errors.IllConditioned(f"Canonical form residual {form.residual:.3e} exceeds {bound:.3e}")
    return form


def metric_family_2x2(form: CanonicalForm2, a: float = 1.0, b: Optional[float] = None, xi: Optional[complex] = None,
                      r: float = 1.0, sign: int = 1) -> CMatrix:
    """Metric operator of the canonical matrix D of a form

    Parameters
    ----------
    form: CanonicalForm2
        the canonical form
    a, b: float
        diagonal entries for D1 (defaults 1, 1), lower diagonal entry for D3 (default 0)
    xi: complex or None
        off-diagonal entry for D2 (default 1) and for D1 proportional to the identity (default 0)
    r: float
        positive modulus of the off-diagonal entries for D3
    sign: int
        sign (+1 or -1) of the upper off-diagonal entry +-i r e^{-i theta} for D3

    Raises
    ------
    BadParameter
        for parameters outside the family
    NotPseudoUnitary
        if the form has kind NotPseudoUnitary
    """
    form._check()
    if np.imag(a) or (b is not None and np.imag(b)):
        raise errors.BadParameter(f"Diagonal entries must be real, got a={a}, b={b}")
    a = float(np.real(a))
    b = None if b is None else float(np.real(b))
    if form.kind == FormKind.D1:
        b = 1.0 if b is None else b
        xi = 0.0 if xi is None else complex(xi)
        if not form.unrestricted:
            if xi:
                raise errors.BadParameter("Metric operators of D1 with e^(i phi) != e^(2 i theta) are diagonal")
            if not a or not b:
                raise errors.BadParameter(f"Diagonal entries must be nonzero, got a={a}, b={b}")
        if abs(a * b - abs(xi)**2) <= 1e-12 * max(abs(a * b), abs(xi)**2):
            raise errors.BadParameter("Metric operator must be invertible (ab != |xi|^2)")
        return CMatrix([[a, xi], [np.conj(xi), b]])
    if form.kind == FormKind.D2:
        xi = 1.0 if xi is None else complex(xi)
        if not xi:
            raise errors.BadParameter("xi must be nonzero")
        return CMatrix([[0, xi], [np.conj(xi), 0]])
    if not r > 0 or sign not in (1, -1):
        raise errors.BadParameter(f"Expected r > 0 and sign in (-1, 1), got r={r}, sign={sign}")
    corner = sign * 1j * r * np.exp(-1j * form.theta)
    return CMatrix([[0, corner], [np.conj(corner), 0.0 if b is None else b]])


def log_2x2(form: CanonicalForm2) -> CMatrix:
    """Logarithm H_D with e^{iH_D} = D: diag(theta, phi - theta) for D1,
    diag(theta - i ln r, theta + i ln r) for D2 and [[theta, -i e^{-i theta}], [0, theta]] for D3

    Raises
    ------
    NotPseudoUnitary
        if the form has kind NotPseudoUnitary
    """
    form._check()
    theta = form.theta
    if form.kind == FormKind.D1:
        return CMatrix(np.diag([theta, form.phi - theta]))
    if form.kind == FormKind.D2:
        return CMatrix(np.diag([theta - 1j * math.log(form.r), theta + 1j * math.log(form.r)]))
    return CMatrix([[theta, -1j * np.exp(-1j * theta)], [0, theta]])


def similar_d3_generator(theta: float) -> CMatrix:
    """[[theta, theta / (e^{i theta} - 1)], [0, theta]], whose exponential e^{iH} has a single
    Jordan block of eigenvalue e^{i theta}: it is similar to D3 but differs from it
    (log_2x2 provides the exact logarithm)

    Raises
    ------
    BadParameter
        if e^{i theta} = 1
    """
    denominator = np.exp(1j * theta) - 1
    if abs(denominator) < 1e-12:
        raise errors.BadParameter(f"Undefined for theta = {theta} (e^(i theta) = 1)")
    return CMatrix([[theta, theta / denominator], [0, theta]])
