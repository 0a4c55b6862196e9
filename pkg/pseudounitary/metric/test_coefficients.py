# Copyright (c) The pseudounitary developers. All Rights Reserved.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import numpy as np
import pytest
from ..common import testing
from ..common import errors
from . import coefficients


def test_solve_block_coeffs_zeros() -> None:
    x = coefficients.solve_block_coeffs(.3 + 2j, 3, [1, 2, 3]).x
    np.testing.assert_array_equal([x[0, 0], x[0, 1], x[1, 0]], [0, 0, 0])
    np.testing.assert_array_equal(x[:, 2], [1, 2, 3])


def test_solve_block_coeffs_small() -> None:
    output = coefficients.solve_block_coeffs(1, 2, [1, 0])
    np.testing.assert_array_equal(output.x, [[0, 1], [-1, 0]])
    np.testing.assert_equal(output.p, 2)
    np.testing.assert_almost_equal(output.residual(), 0)


@testing.parametrized(
    **{f"p{p}": (p, u) for p, u in [(1, 2.0), (2, 1j), (4, .5 - .5j), (5, np.exp(.3j))]}
)
def test_anti_diagonal_law(p: int, u: complex) -> None:
    column = np.random.RandomState(p).normal(size=p) + 1j
    output = coefficients.solve_block_coeffs(u, p, column)
    expected = [(-1)**i * u**(2 * i) * column[0] for i in range(p)]
    np.testing.assert_allclose(output.anti_diagonal(), expected, rtol=1e-12)
    assert output.is_invertible()


@pytest.mark.parametrize("p", range(1, 7))  # type: ignore
def test_closed_form_matches_dense_solve(p: int) -> None:
    rng = np.random.RandomState(12 + p)
    for _ in range(20):
        u = rng.uniform(.7, 1.4) * np.exp(2j * np.pi * rng.uniform())
        column = rng.normal(size=p) + 1j * rng.normal(size=p)
        expected = coefficients.solve_recurrence_system(u, p, column)
        output = coefficients.solve_block_coeffs(u, p, column)
        np.testing.assert_allclose(output.x, expected, rtol=1e-10, atol=1e-10)
        assert output.residual() < 1e-10 * max(1, np.max(np.abs(output.x)))


def test_recurrence_system_shapes() -> None:
    matrix, rhs = coefficients.recurrence_system(2j, 3)
    np.testing.assert_equal(matrix.shape, (9, 6))
    np.testing.assert_equal(rhs([0, 0, 1]).shape, (9,))


def test_solve_block_coeffs_errors() -> None:
    with pytest.raises(errors.ZeroEigenvalue):
        coefficients.solve_block_coeffs(0, 2, [1, 1])
    with pytest.raises(errors.DimensionMismatch):
        coefficients.solve_block_coeffs(1, 2, [1, 1, 1])
    with pytest.raises(errors.BadParameter):
        coefficients.solve_block_coeffs(1, 0, [])


@testing.parametrized(
    positive=(1, 2.5, [[2.5]]),
    negative=(-1, .5, [[-.5]]),
)
def test_hermitian_unimodular_coeffs_scalar(sign: int, rho: float, expected: np.ndarray) -> None:
    output = coefficients.hermitian_unimodular_coeffs(np.exp(1j), 1, rho=rho, sign=sign)
    np.testing.assert_array_equal(output.x, expected)


@testing.parametrized(
    plus=(1,),
    minus=(-1,),
)
def test_hermitian_unimodular_coeffs_size2(sign: int) -> None:
    theta, rho = np.pi / 3, 1.7
    x = coefficients.hermitian_unimodular_coeffs(np.exp(1j * theta), 2, rho=rho, sign=sign).x
    expected = sign * rho * np.array([[0, 1j * np.exp(-1j * theta)], [-1j * np.exp(1j * theta), 0]])
    testing.assert_matrix_close(x, expected)


def test_hermitian_unimodular_coeffs_size3() -> None:
    output = coefficients.hermitian_unimodular_coeffs(1, 3)
    np.testing.assert_almost_equal(output.x[0, 2], 1)
    np.testing.assert_almost_equal(output.x[2, 0], 1)
    testing.assert_matrix_close(output.x, output.x.conj().T)
    assert output.is_invertible()


@testing.parametrized(
    scalar=(1, 1),
    size2=(2, 1j),
    size3=(3, 1),
    size4=(4, 1j),
    size5=(5, 1),
)
def test_hermitian_unimodular_coeffs_corner(p: int, root: complex) -> None:
    for sign in (1, -1):
        output = coefficients.hermitian_unimodular_coeffs(1, p, rho=2.0, sign=sign)
        np.testing.assert_almost_equal(output.x[0, -1], 2 * sign * root)
        testing.assert_matrix_close(output.x, output.x.conj().T)


@pytest.mark.parametrize("p", range(1, 6))  # type: ignore
def test_hermitian_unimodular_coeffs_random(p: int) -> None:
    rng = np.random.RandomState(p)
    for _ in range(5):
        u = np.exp(2j * np.pi * rng.uniform())
        rho = rng.uniform(.5, 2)
        output = coefficients.hermitian_unimodular_coeffs(u, p, rho=rho, sign=rng.choice([-1, 1]))
        testing.assert_matrix_close(output.x, output.x.conj().T)
        assert output.residual() < 1e-10
        assert output.is_invertible()
        np.testing.assert_almost_equal(abs(output.x[0, -1]), rho)


def test_hermitian_unimodular_coeffs_errors() -> None:
    with pytest.raises(errors.NotUnimodular):
        coefficients.hermitian_unimodular_coeffs(1.1, 2)
    with pytest.raises(errors.BadParameter):
        coefficients.hermitian_unimodular_coeffs(1, 2, rho=0)
    with pytest.raises(errors.BadParameter):
        coefficients.hermitian_unimodular_coeffs(1, 2, sign=2)
