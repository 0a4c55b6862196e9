# Copyright (c) The pseudounitary developers. All Rights Reserved.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""The harmonic oscillator x'' + omega^2 x = 0 as the two-level Schroedinger equation
i hbar dPsi/dt = H Psi with Psi = (x + i lam x', x - i lam x') and

    H = hbar / 2 [[lam omega^2 + 1/lam, lam omega^2 - 1/lam], [-lam omega^2 + 1/lam, -lam omega^2 - 1/lam]]

H is pseudo-Hermitian for real omega^2, diagonalizable unless omega = 0.
"""
import math
import warnings
from typing import Any, List, NamedTuple, Optional, Sequence, Tuple, Union
import numpy as np
import scipy.linalg
from ..common.typetools import MatrixLike
from ..common import errors
from ..common import tools
from ..matcore import CMatrix, as_cmatrix, inertia
from ..matcore.cmatrix import DEFAULT_TOL, check_hermitian
from ..metric import find_metric
from ..canon2 import FormKind
from ..logmap import evolve


class OscillatorModel:
    """Oscillator of squared frequency omega_sq, time scale lam and action unit hbar

    Parameters
    ----------
    omega_sq: float
        real squared frequency (1 / time^2)
    lam: float
        positive time scale
    hbar: float
        positive action unit
    """

    def __init__(self, omega_sq: float, lam: float = 1.0, hbar: float = 1.0, tol: float = DEFAULT_TOL) -> None:
        self.omega_sq = float(omega_sq)
        self.lam = float(lam)
        self.hbar = float(hbar)
        a, b = self.lam * self.omega_sq, 1 / self.lam
        self.H = CMatrix(self.hbar / 2 * np.array([[a + b, a - b], [-a + b, -a - b]]), tol=tol)

    @property
    def tol(self) -> float:
        return self.H.tol

    def state(self, x: complex, v: complex, t: float = 0.0) -> "OscState":
        return OscState(t, np.array([x + 1j * self.lam * v, x - 1j * self.lam * v], dtype=complex), self.lam)

    def closed_form(self, x0: complex, v0: complex, t: float) -> Tuple[complex, complex]:
        """Position and velocity solving x'' + omega^2 x = 0
        """
        if self.omega_sq > 0:
            omega = math.sqrt(self.omega_sq)
            return (x0 * math.cos(omega * t) + v0 / omega * math.sin(omega * t),
                    -x0 * omega * math.sin(omega * t) + v0 * math.cos(omega * t))
        if self.omega_sq < 0:
            kappa = math.sqrt(-self.omega_sq)
            return (x0 * math.cosh(kappa * t) + v0 / kappa * math.sinh(kappa * t),
                    x0 * kappa * math.sinh(kappa * t) + v0 * math.cosh(kappa * t))
        return x0 + v0 * t, v0

    def __repr__(self) -> str:
        return f"OscillatorModel(omega_sq={self.omega_sq:g}, lam={self.lam:g}, hbar={self.hbar:g})"


class OscState(NamedTuple):
    """Two-component state Psi = (x + i lam v, x - i lam v) at time t
    """
    t: float
    psi: np.ndarray
    lam: float

    @property
    def x(self) -> complex:
        return complex((self.psi[0] + self.psi[1]) / 2)

    @property
    def v(self) -> complex:
        return complex((self.psi[0] - self.psi[1]) / (2j * self.lam))


class OscillatorRegime(NamedTuple):
    """Spectral type of an oscillator Hamiltonian and its admissible dynamical groups
    """
    kind: FormKind
    diagonalizable: bool
    real_spectrum: bool
    metric_family: str
    groups: Tuple[str, ...]
    metric: CMatrix


class Conservation(NamedTuple):
    """Values <Psi(t), eta Psi(t)>, validity of eta (H^dagger eta = eta H) and
    largest drift from the first value
    """
    values: np.ndarray
    valid: bool
    drift: float


def build_oscillator(omega_sq: Union[float, complex], lam: float = 1.0, hbar: float = 1.0,
                     tol: float = DEFAULT_TOL) -> OscillatorModel:
    """Oscillator model, with traceless H and det H = -hbar^2 omega^2

    Raises
    ------
    BadParameter
        if omega_sq is not real and finite, or lam or hbar is not positive
    """
    if isinstance(omega_sq, complex):
        if omega_sq.imag:
            raise errors.BadParameter(f"omega^2 must be real, got {omega_sq}")
        omega_sq = omega_sq.real
    if not np.isfinite(omega_sq):
        raise errors.BadParameter(f"omega^2 must be finite, got {omega_sq}")
    if not lam > 0 or not hbar > 0:
        raise errors.BadParameter(f"lam and hbar must be positive, got lam={lam}, hbar={hbar}")
    model = OscillatorModel(omega_sq, lam, hbar, tol=tol)
    H = model.H.data
    scale = max(1.0, model.H.norm())
    assert abs(np.trace(H)) <= tol * scale, "Hamiltonian must be traceless"
    assert abs(np.linalg.det(H) + hbar**2 * model.omega_sq) <= tol * scale**2, "Unexpected determinant"
    return model


_FAMILIES = {FormKind.D1: "diagonal", FormKind.D2: "off-diagonal", FormKind.D3: "anti-diagonal (nilpotent)"}


def classify_oscillator(model: OscillatorModel) -> OscillatorRegime:
    """Regime of the oscillator: omega^2 > 0 gives a real diagonalizable spectrum (groups U(2) and U(1,1)),
    omega^2 < 0 a conjugate pair (group U(1,1) only), omega = 0 a nilpotent H (group U(1,1) only).
    The recorded metric is built on the Jordan decomposition of e^{-i t0 H / hbar}, with omega t0 < 1.
    """
    if model.omega_sq > 0:
        kind, groups = FormKind.D1, ("U(2)", "U(1,1)")
    elif model.omega_sq < 0:
        kind, groups = FormKind.D2, ("U(1,1)",)
    else:
        kind, groups = FormKind.D3, ("U(1,1)",)
    reference_time = 1 / (1 + math.sqrt(abs(model.omega_sq)))
    metric = find_metric(evolve(model.H.data / model.hbar, reference_time)).eta
    return OscillatorRegime(kind, kind != FormKind.D3, kind != FormKind.D2, _FAMILIES[kind], groups, metric)


def simulate(model: OscillatorModel, x0: complex, v0: complex, times: Sequence[float]) -> List[OscState]:
    """States Psi(t) = e^{-itH/hbar} Psi(0) for each time (exact exponentials)

    Raises
    ------
    Overflow
        for large |t| |omega| when omega^2 < 0
    """
    initial = model.state(x0, v0)
    return [OscState(float(t), evolve(model.H.data / model.hbar, t).data @ initial.psi, model.lam) for t in times]


def closed_form_position(model: OscillatorModel, x0: complex, v0: complex, t: float) -> complex:
    return model.closed_form(x0, v0, t)[0]


def _pseudo_hermitian_residual(model: OscillatorModel, eta: CMatrix) -> float:
    H = model.H.data
    return float(np.linalg.norm(H.conj().T @ eta.data - eta.data @ H, ord=2))


def conserved_inner_product(model: OscillatorModel, states: Sequence[OscState],
                            eta: Union[CMatrix, MatrixLike]) -> Conservation:
    """Pseudo-norms <Psi(t), eta Psi(t)> along a trajectory. They are constant when eta is a
    metric operator of H; otherwise a MetricMismatchWarning is issued.

    Raises
    ------
    NotHermitian
        if eta is not Hermitian
    """
    eta = as_cmatrix(eta, model.tol)
    check_hermitian(eta)
    residual = _pseudo_hermitian_residual(model, eta)
    valid = residual <= 2 * model.tol * eta.norm() * max(1.0, model.H.norm())
    if not valid:
        warnings.warn(f"eta is not a metric operator of H (||H^dagger eta - eta H|| = {residual:.3e}), "
                      "inner products are not conserved", errors.MetricMismatchWarning)
    values = np.array([np.vdot(s.psi, eta.data @ s.psi).real for s in states])
    drift = float(np.max(np.abs(values - values[0]))) if values.size else 0.0
    return Conservation(values, valid, drift)


def valid_metrics(model: OscillatorModel) -> List[CMatrix]:
    """Basis of the real vector space of Hermitian eta with H^dagger eta = eta H
    (eta = [[a, c + id], [c - id, b]] solving a real linear system in (a, b, c, d))
    """
    hermitian_basis = [np.array(m, dtype=complex) for m in ([[1, 0], [0, 0]], [[0, 0], [0, 1]],
                                                            [[0, 1], [1, 0]], [[0, 1j], [-1j, 0]])]
    H = model.H.data
    columns = []
    for basis in hermitian_basis:
        image = (H.conj().T @ basis - basis @ H).ravel()
        columns.append(np.concatenate([image.real, image.imag]))
    system = np.column_stack(columns) / max(1.0, model.H.norm())
    kernel = scipy.linalg.null_space(system, rcond=model.tol)
    return [CMatrix(sum(c * m for c, m in zip(vector, hermitian_basis)), tol=model.tol) for vector in kernel.T]


def positive_metric(model: OscillatorModel) -> Optional[CMatrix]:
    """A positive-definite valid metric operator, or None if there is none.
    On the span of the valid metrics, det(sum_i c_i eta_i) is the quadratic form
    Q_ij = (tr eta_i tr eta_j - tr(eta_i eta_j)) / 2, and a positive-definite eta
    exists iff Q has a positive eigenvalue.
    """
    basis = valid_metrics(model)
    if not basis:
        return None
    matrices = [b.data for b in basis]
    Q = np.array([[(np.trace(a) * np.trace(b) - np.trace(a @ b)).real / 2 for b in matrices] for a in matrices])
    values, vectors = np.linalg.eigh(Q)
    if values[-1] <= model.tol * max(1.0, float(np.max(np.abs(values)))):
        return None
    eta = sum(c * m for c, m in zip(vectors[:, -1], matrices))
    if np.trace(eta).real < 0:
        eta = -eta
    output = CMatrix(eta, tol=model.tol)
    assert inertia(output).signature == (0, 2), "Expected a positive-definite metric"
    return output


def trajectory_table(states: Sequence[OscState], values: Optional[Sequence[float]] = None) -> tools.Selector:
    """Table with columns t, x, v and inner_product (NaN without values). Position and velocity
    are stored as real numbers when their imaginary parts vanish.
    """
    values = [float("nan")] * len(states) if values is None else list(values)
    positions = np.array([s.x for s in states])
    velocities = np.array([s.v for s in states])
    real = not (np.any(np.abs(positions.imag) > 1e-12 * np.max(np.abs(positions), initial=1.0)) or
                np.any(np.abs(velocities.imag) > 1e-12 * np.max(np.abs(velocities), initial=1.0)))
    rows: List[Any] = [{"t": s.t, "x": x.real if real else x, "v": v.real if real else v, "inner_product": value}
                       for s, x, v, value in zip(states, positions, velocities, values)]
    return tools.Selector.from_rows(rows, columns=["t", "x", "v", "inner_product"])
