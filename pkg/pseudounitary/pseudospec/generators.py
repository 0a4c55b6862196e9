# Copyright (c) The pseudounitary developers. All Rights Reserved.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""Random structured matrices A^{-1} J A with prescribed Jordan blocks J.
Eigenvalues of distinct blocks are kept at least min_separation apart so that the
numerical Jordan structure is well conditioned.
"""
from typing import Any, Callable, List, Optional, Sequence, Tuple
import numpy as np
import scipy.linalg
from ..matcore import canonical_metric
from ..matcore.generators import similar_matrix

Blocks = List[Tuple[complex, int]]


def _separated(rng: np.random.RandomState, sampler: Callable[[], complex], existing: Sequence[complex],
               min_separation: float, partner: Callable[[complex], Optional[complex]] = lambda u: None) -> complex:
    for _ in range(1000):
        value = sampler()
        candidates = [value] + [p for p in [partner(value)] if p is not None]
        if all(abs(c - e) >= min_separation for c in candidates for e in existing):
            if len(candidates) == 1 or abs(candidates[0] - candidates[1]) >= min_separation:
                return value
    raise RuntimeError("Could not sample a well-separated eigenvalue, decrease min_separation")


def _unit(rng: np.random.RandomState) -> complex:
    return complex(np.exp(1j * rng.uniform(-np.pi, np.pi)))


def random_pseudo_unitary_blocks(rng: np.random.RandomState, dimension: Optional[int] = None, max_dimension: int = 6,
                                 max_unimodular_size: int = 4, max_pair_size: int = 3,
                                 min_separation: float = .3) -> Blocks:
    """Jordan blocks of a pseudo-unitary matrix: unimodular blocks and pairs of blocks
    of equal sizes at inverse-complex-conjugate eigenvalues (u, 1/u*), |u| in [1.5, 3]
    """
    n = rng.randint(2, max_dimension + 1) if dimension is None else dimension
    blocks: Blocks = []
    remaining = n
    while remaining:
        values = [b[0] for b in blocks]
        if remaining >= 2 and rng.uniform() < .4:
            size = rng.randint(1, min(max_pair_size, remaining // 2) + 1)
            u = _separated(rng, lambda: rng.uniform(1.5, 3) * _unit(rng), values, min_separation, lambda v: 1 / np.conj(v))
            blocks.extend([(u, size), (1 / np.conj(u), size)])
            remaining -= 2 * size
        else:
            size = rng.randint(1, min(max_unimodular_size, remaining) + 1)
            blocks.append((_separated(rng, lambda: _unit(rng), values, min_separation), size))
            remaining -= size
    return blocks


def random_non_pseudo_unitary_blocks(rng: np.random.RandomState, max_dimension: int = 6, min_separation: float = .3) -> Blocks:
    """Pseudo-unitary blocks plus one simple eigenvalue off the unit circle without partner
    """
    blocks = random_pseudo_unitary_blocks(rng, dimension=rng.randint(1, max_dimension), min_separation=min_separation)
    values = [b[0] for b in blocks]
    radius = rng.choice([rng.uniform(1.5, 3), rng.uniform(1 / 3, 1 / 1.5)])
    orphan = _separated(rng, lambda: radius * _unit(rng), values + [1 / np.conj(v) for v in values], min_separation)
    return blocks + [(orphan, 1)]


def random_pseudo_hermitian_blocks(rng: np.random.RandomState, dimension: Optional[int] = None, max_dimension: int = 6,
                                   max_real_size: int = 3, max_pair_size: int = 2, min_separation: float = .3) -> Blocks:
    """Jordan blocks of a pseudo-Hermitian matrix: real eigenvalues in [-2.5, 2.5] and complex-conjugate
    pairs a +- ib with a in [-2.5, 2.5] and b in [0.3, 1] (so that e^{-iH} keeps separated eigenvalues)
    """
    n = rng.randint(1, max_dimension + 1) if dimension is None else dimension
    blocks: Blocks = []
    remaining = n
    while remaining:
        values = [b[0] for b in blocks]
        if remaining >= 2 and rng.uniform() < .4:
            size = rng.randint(1, min(max_pair_size, remaining // 2) + 1)
            value = _separated(rng, lambda: complex(rng.uniform(-2.5, 2.5), rng.uniform(.3, 1)), values, min_separation, np.conj)
            blocks.extend([(value, size), (np.conj(value), size)])
            remaining -= 2 * size
        else:
            size = rng.randint(1, min(max_real_size, remaining) + 1)
            blocks.append((_separated(rng, lambda: complex(rng.uniform(-2.5, 2.5)), values, min_separation), size))
            remaining -= size
    return blocks


def random_pseudo_unitary(rng: np.random.RandomState, **kwargs: Any) -> Tuple[np.ndarray, Blocks]:
    """Random pseudo-unitary matrix A^{-1} J A and its Jordan blocks
    (see random_pseudo_unitary_blocks for the keyword arguments)
    """
    blocks = random_pseudo_unitary_blocks(rng, **kwargs)
    return similar_matrix(blocks, rng=rng)[0], blocks


def random_pseudo_hermitian(rng: np.random.RandomState, **kwargs: Any) -> Tuple[np.ndarray, Blocks]:
    """Random pseudo-Hermitian matrix A^{-1} J A and its Jordan blocks
    """
    blocks = random_pseudo_hermitian_blocks(rng, **kwargs)
    return similar_matrix(blocks, rng=rng)[0], blocks


def random_group_element(p: int, q: int, rng: np.random.RandomState, scale: float = .5) -> np.ndarray:
    """Random element exp(i eta_{p,q} K) of U(p,q), with K Hermitian with entries of size ~scale
    """
    n = p + q
    hermitian = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    hermitian = scale * (hermitian + hermitian.conj().T) / 2
    return scipy.linalg.expm(1j * canonical_metric(p, q) @ hermitian)
