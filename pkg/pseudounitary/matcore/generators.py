# Copyright (c) The pseudounitary developers. All Rights Reserved.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from typing import Optional, Sequence, Tuple
import numpy as np
import scipy.linalg
from scipy.stats import unitary_group
from .spectral import jordan_block


def random_well_conditioned(n: int, rng: Optional[np.random.RandomState] = None,
                            condition: float = 4.0) -> np.ndarray:
    """Random complex invertible matrix V diag(s) W with V, W Haar unitaries and
    singular values log-uniform in [1 / sqrt(condition), sqrt(condition)]
    """
    rng = np.random.RandomState() if rng is None else rng
    if n == 1:
        return np.array([[np.exp(2j * np.pi * rng.uniform())]])
    singular = np.exp(rng.uniform(-.5, .5, size=n) * np.log(condition))
    left, right = (unitary_group.rvs(n, random_state=rng) for _ in range(2))
    return (left * singular) @ right


def block_matrix(blocks: Sequence[Tuple[complex, int]]) -> np.ndarray:
    """Block diagonal Jordan matrix from (eigenvalue, size) blocks
    """
    return scipy.linalg.block_diag(*[jordan_block(value, size) for value, size in blocks]).astype(complex)


def similar_matrix(blocks: Sequence[Tuple[complex, int]], rng: Optional[np.random.RandomState] = None,
                   transformer: Optional[np.ndarray] = None) -> Tuple[np.ndarray, np.ndarray]:
    """Matrix A^{-1} J A for a random well-conditioned A (or the provided one)

    Returns
    -------
    np.ndarray
        the matrix A^{-1} J A
    np.ndarray
        the transformer A
    """
    jordan = block_matrix(blocks)
    if transformer is None:
        transformer = random_well_conditioned(jordan.shape[0], rng)
    return np.linalg.solve(transformer, jordan @ transformer), transformer
