# Copyright (c) The pseudounitary developers. All Rights Reserved.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from ..common import testing
from ..common import errors
from ..matcore import CMatrix
from ..matcore.generators import random_well_conditioned, similar_matrix
from . import verdicts
from . import generators
from .records import Reason


def test_is_pseudo_unitary_identity() -> None:
    verdict = verdicts.is_pseudo_unitary(np.eye(3))
    assert verdict.decision
    np.testing.assert_equal(verdict.reason, Reason.ALL_PAIRED)


def test_is_pseudo_unitary_unpaired() -> None:
    verdict = verdicts.is_pseudo_unitary(np.diag([2j, -.5j]))
    assert not verdict.decision
    np.testing.assert_equal(verdict.reason, Reason.UNPAIRED_EIGENVALUE)
    testing.assert_multiset_close(verdict.witness, [2j, -.5j], atol=1e-12)
    verdict = verdicts.det_unimodular(np.diag([2j, -.5j]))
    assert verdict.decision
    assert verdict.residual <= 1e-12


def test_is_pseudo_unitary_similar_pair() -> None:
    r, theta = 3, np.pi / 5
    matrix, _ = similar_matrix([(r * np.exp(1j * theta), 1), (np.exp(1j * theta) / r, 1)], rng=np.random.RandomState(0))
    assert verdicts.is_pseudo_unitary(matrix).decision


@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 2**31 - 1), positive=st.booleans())
def test_similarity_invariance(seed: int, positive: bool) -> None:
    rng = np.random.RandomState(seed)
    if positive:
        blocks = generators.random_pseudo_unitary_blocks(rng, max_dimension=5)
    else:
        blocks = generators.random_non_pseudo_unitary_blocks(rng, max_dimension=5)
    first, _ = similar_matrix(blocks, rng=rng)
    transformer = random_well_conditioned(first.shape[0], rng)
    second = np.linalg.solve(transformer, first @ transformer)
    decisions = [verdicts.is_pseudo_unitary(m).decision for m in (first, second)]
    np.testing.assert_equal(decisions, [positive, positive])
    if positive:  # necessary condition
        assert verdicts.det_unimodular(first).decision


@testing.parametrized(
    unitary=(np.array([[0, 1j], [1, 0]]), np.eye(2), True),
    symplectic=(np.diag([2, .5]), np.array([[0, -1j], [1j, 0]]), True),
    scaled=(np.diag([2, 2]), np.eye(2), False),
)
def test_is_eta_pseudo_unitary(matrix: np.ndarray, eta: np.ndarray, expected: bool) -> None:
    verdict = verdicts.is_eta_pseudo_unitary(matrix, eta)
    np.testing.assert_equal(verdict.decision, expected)
    if not expected:
        np.testing.assert_equal(verdict.reason, Reason.RESIDUAL_TOO_LARGE)
        np.testing.assert_almost_equal(verdict.residual, 3)


def test_is_eta_pseudo_unitary_errors() -> None:
    with pytest.raises(errors.NotHermitian):
        verdicts.is_eta_pseudo_unitary(np.eye(2), np.array([[1, 1], [0, 1]]))
    with pytest.raises(errors.Singular):
        verdicts.is_eta_pseudo_unitary(np.eye(2), np.diag([1, 0]))
    with pytest.raises(errors.DimensionMismatch):
        verdicts.is_eta_pseudo_unitary(np.eye(2), np.eye(3))


@settings(max_examples=20, deadline=None)
@given(seed=st.integers(0, 2**31 - 1), p=st.integers(0, 2), q=st.integers(1, 2))
def test_group_closure(seed: int, p: int, q: int) -> None:
    rng = np.random.RandomState(seed)
    transformer = random_well_conditioned(p + q, rng)
    eta = transformer.conj().T @ np.diag([-1.0] * p + [1.0] * q) @ transformer
    first, second = (np.linalg.solve(transformer, generators.random_group_element(p, q, rng) @ transformer)
                     for _ in range(2))
    for matrix in (first, second, np.linalg.solve(first, second)):
        assert verdicts.is_eta_pseudo_unitary(matrix, eta).decision


@testing.parametrized(
    hermitian=(np.array([[1, 2 - 1j], [2 + 1j, -3]]), True),
    conjugate_pair=(np.diag([1 + 2j, 1 - 2j]), True),
    defective_real=(np.array([[1, 1], [0, 1]]), True),
    not_paired=(np.diag([1j, 2j]), False),
    mismatched=(np.array([[1j, 1, 0], [0, 1j, 0], [0, 0, -1j]]), False),
)
def test_is_pseudo_hermitian_spectrum(matrix: np.ndarray, expected: bool) -> None:
    np.testing.assert_equal(verdicts.is_pseudo_hermitian_spectrum(matrix).decision, expected)


def test_is_pseudo_hermitian() -> None:
    matrix = np.diag([-1j * np.log(2), 1j * np.log(2)])
    assert verdicts.is_pseudo_hermitian(matrix, np.array([[0, 1], [1, 0]])).decision
    assert not verdicts.is_pseudo_hermitian(matrix, np.eye(2)).decision


@testing.parametrized(
    identity=(np.eye(3), True),
    not_unimodular=(np.diag([2, 1]), False),
    pseudo_special=(np.diag([2j, -.5j]), True),
)
def test_det_unimodular(matrix: np.ndarray, expected: bool) -> None:
    verdict = verdicts.det_unimodular(CMatrix(matrix))
    np.testing.assert_equal(verdict.decision, expected)
    np.testing.assert_almost_equal(verdict.info["det_modulus"], abs(np.linalg.det(matrix)))


def test_in_pseudo_special_group() -> None:
    verdict = verdicts.in_pseudo_special_group(np.diag([2j, -.5j]))
    assert verdict.decision
    np.testing.assert_equal(verdict.info["group"], "SigmaL(2,C)")
    np.testing.assert_equal(verdict.to_dict()["reason"], "WithinTolerance")
