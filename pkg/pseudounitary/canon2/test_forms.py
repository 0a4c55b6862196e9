# Copyright (c) The pseudounitary developers. All Rights Reserved.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from typing import Any, Dict
import numpy as np
import pytest
from ..common import testing
from ..common import errors
from ..matcore import expm, jordan_structure
from ..metric import classify_group
from ..pseudospec import is_pseudo_unitary, is_eta_pseudo_unitary, generators
from . import forms
from .forms import FormKind


@testing.parametrized(
    d1=(np.diag([np.exp(1j * np.pi / 4), np.exp(1j * np.pi / 6)]), FormKind.D1, np.pi / 4, np.pi / 4 + np.pi / 6, 1),
    d2=(np.diag([3 * np.exp(1j * np.pi / 7), np.exp(1j * np.pi / 7) / 3]), FormKind.D2, np.pi / 7, 0, 3),
    d2_swapped=(np.diag([np.exp(.5j) / 2, 2 * np.exp(.5j)]), FormKind.D2, .5, 0, 2),
    d3=([[np.exp(1.1j), 1], [0, np.exp(1.1j)]], FormKind.D3, 1.1, 0, 1),
)
def test_canonical_form_2x2(U: Any, kind: FormKind, theta: float, phi: float, r: float) -> None:
    form = forms.canonical_form_2x2(U)
    np.testing.assert_equal(form.kind, kind)
    np.testing.assert_almost_equal([form.theta, form.phi, form.r], [theta, phi, r])
    testing.assert_matrix_close(form.to_original(form.matrix()), U, rtol=1e-9)
    np.testing.assert_almost_equal(abs(np.linalg.det(form.matrix())), 1, decimal=12)


def test_not_pseudo_unitary() -> None:
    form = forms.canonical_form_2x2(np.diag([2, 3]))
    np.testing.assert_equal(form.kind, FormKind.NOT_PSEUDO_UNITARY)
    testing.assert_multiset_close(form.witness, [2, 3])
    for func in (forms.log_2x2, forms.metric_family_2x2):
        with pytest.raises(errors.NotPseudoUnitary):
            func(form)  # type: ignore


def test_proportional_to_identity() -> None:
    form = forms.canonical_form_2x2(np.exp(.3j) * np.eye(2))
    np.testing.assert_equal(form.kind, FormKind.D1)
    assert form.unrestricted
    eta = forms.metric_family_2x2(form, a=1, b=-1, xi=1j)
    np.testing.assert_equal(classify_group(eta).label, "U(1,1)")
    with pytest.raises(errors.BadParameter):
        forms.metric_family_2x2(form, a=1, b=1, xi=1)


def test_dimension_mismatch() -> None:
    with pytest.raises(errors.DimensionMismatch):
        forms.canonical_form_2x2(np.eye(3))


def test_trichotomy_consistency() -> None:
    rng = np.random.RandomState(42)
    for k in range(200):
        if k % 2:
            U = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        else:
            U, _ = generators.random_pseudo_unitary(rng, dimension=2)
        form = forms.canonical_form_2x2(U)
        np.testing.assert_equal(form.kind != FormKind.NOT_PSEUDO_UNITARY, is_pseudo_unitary(U).decision)
        if form.kind != FormKind.NOT_PSEUDO_UNITARY:
            assert is_eta_pseudo_unitary(U, form.metric_to_original(forms.metric_family_2x2(form))).decision


@testing.parametrized(
    d1_definite=(np.diag([np.exp(.2j), np.exp(-1j)]), {"a": 1, "b": 2}, np.diag([1, 2]), "U(2)"),
    d1_indefinite=(np.diag([np.exp(.2j), np.exp(-1j)]), {"a": 1, "b": -2}, np.diag([1, -2]), "U(1,1)"),
    d2=(np.diag([2, .5]), {"xi": 1}, [[0, 1], [1, 0]], "U(1,1)"),
    d3=([[np.exp(.7j), 1], [0, np.exp(.7j)]], {}, [[0, 1j * np.exp(-.7j)], [-1j * np.exp(.7j), 0]], "U(1,1)"),
    d3_minus=([[np.exp(.7j), 1], [0, np.exp(.7j)]], {"r": 2, "sign": -1, "b": 3},
              [[0, -2j * np.exp(-.7j)], [2j * np.exp(.7j), 3]], "U(1,1)"),
)
def test_metric_family_2x2(U: Any, params: Dict[str, Any], expected: Any, label: str) -> None:
    form = forms.canonical_form_2x2(U)
    eta = forms.metric_family_2x2(form, **params)
    testing.assert_matrix_close(eta, expected)
    D = form.matrix()
    testing.assert_matrix_close(D.conj().T @ eta.data @ D, eta, rtol=1e-12, atol=1e-12)
    np.testing.assert_equal(classify_group(eta).label, label)


@testing.parametrized(
    d1_off_diagonal=(np.diag([np.exp(.2j), np.exp(-1j)]), {"xi": 1}),
    d1_zero=(np.diag([np.exp(.2j), np.exp(-1j)]), {"a": 0}),
    d2_zero=(np.diag([2, .5]), {"xi": 0}),
    d3_radius=([[1j, 1], [0, 1j]], {"r": -1}),
    d3_sign=([[1j, 1], [0, 1j]], {"sign": 2}),
    d1_complex_diagonal=(np.diag([np.exp(.2j), np.exp(-1j)]), {"a": 1 + 1j}),
    d3_complex_diagonal=([[1j, 1], [0, 1j]], {"b": 1j}),
)
def test_metric_family_2x2_errors(U: Any, params: Dict[str, Any]) -> None:
    form = forms.canonical_form_2x2(U)
    with pytest.raises(errors.BadParameter):
        forms.metric_family_2x2(form, **params)


@testing.parametrized(
    d1=(np.diag([np.exp(1j * np.pi / 4), np.exp(1j * np.pi / 4)]), np.diag([np.pi / 4, np.pi / 4])),
    d2=(np.diag([2, .5]), np.diag([-1j * np.log(2), 1j * np.log(2)])),
    d3=([[np.exp(1j * np.pi / 3), 1], [0, np.exp(1j * np.pi / 3)]],
        [[np.pi / 3, -1j * np.exp(-1j * np.pi / 3)], [0, np.pi / 3]]),
)
def test_log_2x2(U: Any, expected: Any) -> None:
    form = forms.canonical_form_2x2(U)
    H = forms.log_2x2(form)
    testing.assert_matrix_close(H, expected)
    np.testing.assert_allclose(expm(1j * H.data).data, form.matrix(), atol=1e-12)
    testing.assert_matrix_close(expm(1j * form.to_original(H.data)), U, rtol=1e-9)


def test_similar_d3_generator() -> None:
    theta = np.pi / 3
    H = forms.similar_d3_generator(theta)
    exponential = expm(1j * H.data).data
    jd = jordan_structure(exponential)
    np.testing.assert_equal([i.dimensions for i in jd.items], [(2,)])
    np.testing.assert_almost_equal(jd.items[0].eigenvalue, np.exp(1j * theta))
    assert abs(exponential[0, 1] - 1) > .1
    with pytest.raises(errors.BadParameter):
        forms.similar_d3_generator(0)
