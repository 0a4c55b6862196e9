# Copyright (c) The pseudounitary developers. All Rights Reserved.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from typing import Any
import numpy as np
import pytest
from ..common import testing
from ..common import errors
from . import cmatrix


def test_cmatrix_basics() -> None:
    M = cmatrix.CMatrix([[1, 2j], [0, 3]], tol=1e-6)
    np.testing.assert_equal(M.n, 2)
    np.testing.assert_equal(M.tol, 1e-6)
    assert M.data.dtype == complex
    with pytest.raises(ValueError):
        M.data[0, 0] = 12  # read-only
    np.testing.assert_array_equal(M.adjoint().data, [[1, 0], [-2j, 3]])
    product = M @ np.eye(2)
    assert isinstance(product, cmatrix.CMatrix)
    np.testing.assert_equal(product.tol, 1e-6)
    np.testing.assert_array_equal(np.asarray(product), M.data)
    assert isinstance(np.eye(2) @ M, cmatrix.CMatrix)
    np.testing.assert_almost_equal(cmatrix.CMatrix(np.diag([3, -4])).norm(), 4)


@testing.parametrized(
    not_square=(np.ones((2, 3)), 1e-9, errors.DimensionMismatch),
    vector=(np.ones(3), 1e-9, errors.DimensionMismatch),
    empty=(np.ones((0, 0)), 1e-9, errors.DimensionMismatch),
    nan=([[np.nan]], 1e-9, errors.BadParameter),
    infinite=([[1, np.inf], [0, 1]], 1e-9, errors.BadParameter),
    negative_tol=([[1]], -1.0, errors.BadParameter),
    large_tol=([[1]], 1.0, errors.BadParameter),
)
def test_cmatrix_errors(data: Any, tol: float, error: type) -> None:
    with pytest.raises(error):
        cmatrix.CMatrix(data, tol=tol)


def test_as_cmatrix() -> None:
    M = cmatrix.CMatrix(np.eye(2), tol=1e-5)
    assert cmatrix.as_cmatrix(M) is M
    np.testing.assert_equal(cmatrix.as_cmatrix(M, tol=1e-3).tol, 1e-3)
    np.testing.assert_equal(cmatrix.as_cmatrix([[1]]).tol, cmatrix.DEFAULT_TOL)


def test_check_hermitian() -> None:
    cmatrix.check_hermitian(cmatrix.CMatrix([[1, 1j], [-1j, 2]]))
    with pytest.raises(errors.NotHermitian):
        cmatrix.check_hermitian(cmatrix.CMatrix([[1, 1j], [1j, 2]]))


def test_derived_tolerances() -> None:
    np.testing.assert_almost_equal(cmatrix.cluster_radius(2.0, 1e-9), 2e-6)
    np.testing.assert_almost_equal(cmatrix.cluster_radius(2.0, 1e-14), 2e-8)
    np.testing.assert_almost_equal(cmatrix.rank_threshold(3, 1e-9, 0.5, power=2), 3e-9)
    np.testing.assert_almost_equal(cmatrix.rank_threshold(3, 1e-9, 2.0, power=2), 12e-9)
    np.testing.assert_almost_equal(cmatrix.spectral_tol(1.0, 1e-9), 2e-6)
