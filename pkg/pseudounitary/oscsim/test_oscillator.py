# Copyright (c) The pseudounitary developers. All Rights Reserved.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import warnings
import numpy as np
import pytest
from ..common import testing
from ..common import errors
from ..canon2 import FormKind
from ..logmap import evolve
from ..matcore import inertia
from ..pseudospec import is_eta_pseudo_unitary
from . import oscillator

SIGMA3 = np.diag([1.0, -1.0])


@testing.parametrized(
    oscillating=(4.0, .5, 2.0),
    unbounded=(-1.0, 1.0, 1.0),
    free=(0.0, 3.0, .1),
)
def test_build_oscillator(omega_sq: float, lam: float, hbar: float) -> None:
    model = oscillator.build_oscillator(omega_sq, lam=lam, hbar=hbar)
    np.testing.assert_almost_equal(np.trace(model.H.data), 0)
    np.testing.assert_almost_equal(np.linalg.det(model.H.data), -hbar**2 * omega_sq)


def test_build_oscillator_eigenvalues() -> None:
    model = oscillator.build_oscillator(4.0)
    np.testing.assert_allclose(sorted(np.linalg.eigvals(model.H.data).real), [-2, 2])


@testing.parametrized(
    complex_frequency=(1 + 1j, 1.0, 1.0),
    infinite=(np.inf, 1.0, 1.0),
    negative_scale=(1.0, -1.0, 1.0),
    zero_hbar=(1.0, 1.0, 0.0),
)
def test_build_oscillator_errors(omega_sq: complex, lam: float, hbar: float) -> None:
    with pytest.raises(errors.BadParameter):
        oscillator.build_oscillator(omega_sq, lam=lam, hbar=hbar)


@testing.parametrized(
    oscillating=(4.0, FormKind.D1, ("U(2)", "U(1,1)"), True),
    unbounded=(-1.0, FormKind.D2, ("U(1,1)",), True),
    free=(0.0, FormKind.D3, ("U(1,1)",), False),
)
def test_classify_oscillator(omega_sq: float, kind: FormKind, groups: tuple, diagonalizable: bool) -> None:
    model = oscillator.build_oscillator(omega_sq, lam=.7)
    regime = oscillator.classify_oscillator(model)
    np.testing.assert_equal(regime.kind, kind)
    np.testing.assert_equal(regime.groups, groups)
    np.testing.assert_equal(regime.diagonalizable, diagonalizable)
    np.testing.assert_equal(inertia(regime.metric).label, groups[0])
    for t in (.5, 1, 2):
        assert is_eta_pseudo_unitary(evolve(model.H.data / model.hbar, t), regime.metric).decision


@testing.parametrized(
    cosine=(1.0, 1.0, 0.0, np.pi / 2, 0.0),
    hyperbolic=(-1.0, 1.0, 0.0, 1.0, np.cosh(1)),
    free=(0.0, 0.0, 1.0, 2.5, 2.5),
)
def test_simulate_examples(omega_sq: float, x0: float, v0: float, t: float, expected: float) -> None:
    model = oscillator.build_oscillator(omega_sq)
    state = oscillator.simulate(model, x0, v0, [t])[0]
    np.testing.assert_allclose(state.x, expected, atol=1e-9)
    np.testing.assert_almost_equal(state.x, oscillator.closed_form_position(model, x0, v0, t))


@testing.parametrized(
    oscillating=(2.3, .8, 1.5),
    unbounded=(-.6, 1.3, .5),
    free=(0.0, 2.0, 1.0),
)
def test_schroedinger_newton_equivalence(omega_sq: float, lam: float, hbar: float) -> None:
    model = oscillator.build_oscillator(omega_sq, lam=lam, hbar=hbar)
    times = np.linspace(0, 10, 100)
    for state in oscillator.simulate(model, 1.2, -.4, times):
        x, v = model.closed_form(1.2, -.4, state.t)
        assert abs(state.x - x) <= 1e-9 * (1 + abs(x))
        assert abs(state.v - v) <= 1e-9 * (1 + abs(v))
        assert abs(state.x.imag) < 1e-9 * (1 + abs(x))


def test_simulate_overflow() -> None:
    model = oscillator.build_oscillator(-1e6)
    with pytest.raises(errors.Overflow):
        oscillator.simulate(model, 1, 0, [1e3])


@testing.parametrized(
    oscillating=(1.0,),
    unbounded=(-1.0,),
    free=(0.0,),
)
def test_sigma3_conservation(omega_sq: float) -> None:
    model = oscillator.build_oscillator(omega_sq, lam=1.3)
    states = oscillator.simulate(model, 1.0, 1j, np.linspace(0, 10 if omega_sq >= 0 else 3, 50))
    with warnings.catch_warnings():
        warnings.simplefilter("error", errors.MetricMismatchWarning)
        conservation = oscillator.conserved_inner_product(model, states, SIGMA3)
    assert conservation.valid
    assert abs(conservation.values[0]) > .1
    assert conservation.drift <= 1e-10 * abs(conservation.values[0]) + 1e-12


def test_metric_mismatch() -> None:
    model = oscillator.build_oscillator(1.0, lam=2.0)
    states = oscillator.simulate(model, 1.0, .5, np.linspace(0, 10, 20))
    with pytest.warns(errors.MetricMismatchWarning):
        conservation = oscillator.conserved_inner_product(model, states, np.eye(2))
    assert not conservation.valid
    assert conservation.drift > 1e-3
    with pytest.raises(errors.NotHermitian):
        oscillator.conserved_inner_product(model, states, [[1, 1], [0, 1]])


@testing.parametrized(
    oscillating=(3.0, True),
    unbounded=(-2.0, False),
    free=(0.0, False),
)
def test_valid_metrics(omega_sq: float, positive: bool) -> None:
    model = oscillator.build_oscillator(omega_sq, lam=.6, hbar=2.0)
    basis = oscillator.valid_metrics(model)
    np.testing.assert_equal(len(basis), 2)
    H = model.H.data
    for eta in basis:
        testing.assert_matrix_close(H.conj().T @ eta.data, eta.data @ H, atol=1e-10)
        testing.assert_matrix_close(eta, eta.data.conj().T)
    eta = oscillator.positive_metric(model)
    np.testing.assert_equal(eta is not None, positive)
    if eta is not None:
        assert np.all(np.linalg.eigvalsh(eta.data) > 0)
        states = oscillator.simulate(model, .3, 1.1, np.linspace(0, 10, 30))
        conservation = oscillator.conserved_inner_product(model, states, eta)
        assert conservation.drift <= 1e-10 * abs(conservation.values[0]) + 1e-12


def test_trajectory_table() -> None:
    model = oscillator.build_oscillator(1.0)
    states = oscillator.simulate(model, 1.0, 0.0, [0, np.pi])
    values = oscillator.conserved_inner_product(model, states, SIGMA3).values
    table = oscillator.trajectory_table(states, values)
    np.testing.assert_equal(list(table.columns), ["t", "x", "v", "inner_product"])
    testing.assert_column_close(table, "x", [1, -1], atol=1e-9)
    testing.assert_column_close(table, "inner_product", [0, 0], atol=1e-9)
    np.testing.assert_equal(table.loc[:, "x"].dtype, np.float64)


def test_state_recovery() -> None:
    state = oscillator.build_oscillator(1.0, lam=2.0).state(.5, -1.5)
    np.testing.assert_almost_equal([state.x, state.v], [.5, -1.5])
