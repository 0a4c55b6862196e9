# Copyright (c) The pseudounitary developers. All Rights Reserved.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from typing import NamedTuple, Tuple, Union
import numpy as np
import scipy.linalg
from ..common.typetools import MatrixLike
from ..common import errors
from .cmatrix import CMatrix, as_cmatrix, check_hermitian


class Inertia(NamedTuple):
    """Signature of a Hermitian invertible matrix eta and a transformer A with
    A^dagger eta_{p,q} A = eta (Sylvester's law of inertia)
    """
    negatives: int
    positives: int
    transformer: np.ndarray

    @property
    def signature(self) -> Tuple[int, int]:
        return (self.negatives, self.positives)

    @property
    def label(self) -> str:
        """Name of the group of eta-pseudo-unitary matrices (up to conjugation)
        """
        return group_label(self.negatives, self.positives)


def group_label(p: int, q: int) -> str:
    if not p or not q:
        return f"U({p + q})"
    return f"U({p},{q})"


def canonical_metric(p: int, q: int) -> np.ndarray:
    """eta_{p,q} = diag(-1, ..., -1, 1, ..., 1) with p negative entries
    """
    if p < 0 or q < 0 or not p + q:
        raise errors.BadParameter(f"Invalid signature ({p}, {q})")
    return np.diag([-1.0] * p + [1.0] * q).astype(complex)


def inertia(eta: Union[CMatrix, MatrixLike]) -> Inertia:
    """Counts of negative and positive eigenvalues of a Hermitian invertible matrix

    Raises
    ------
    NotHermitian
        if ||eta - eta^dagger|| > tol ||eta||
    Singular
        if an eigenvalue is below tol ||eta|| in modulus
    """
    eta = as_cmatrix(eta)
    check_hermitian(eta)
    scale = eta.norm()
    hermitian = (eta.data + eta.data.conj().T) / 2
    values, vectors = scipy.linalg.eigh(hermitian)  # ascending: negatives first
    if not scale or np.min(np.abs(values)) <= eta.tol * scale:
        raise errors.Singular(f"Metric is singular (smallest eigenvalue modulus {np.min(np.abs(values)):.3e})")
    negatives = int(np.sum(values < 0))
    transformer = np.sqrt(np.abs(values))[:, None] * vectors.conj().T
    output = Inertia(negatives, eta.n - negatives, transformer)
    residual = np.linalg.norm(transformer.conj().T @ canonical_metric(*output.signature) @ transformer - eta.data, ord=2)
    if residual > eta.n * eta.tol * scale:
        raise errors.IllConditioned(f"Congruence residual {residual:.3e} is too large")
    return output
