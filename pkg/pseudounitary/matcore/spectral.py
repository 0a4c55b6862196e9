# Copyright (c) The pseudounitary developers. All Rights Reserved.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""Numerical eigenvalues and Jordan structure.

Eigenvalues come from a complex Schur decomposition and are clustered from coarse
to fine radius: a cluster of k eigenvalues with mean z is kept as one eigenvalue of
algebraic multiplicity k if M - z is numerically singular and dim kernel((M - z)^k) >= k,
and is split at a smaller radius otherwise, down to cluster_radius where clusters are always accepted.
Jordan chains are then extracted from the kernels of (T - z)^l, where T is the restriction of M
to the invariant subspace of the cluster (obtained from a reordered Schur decomposition).
"""
from typing import List, NamedTuple, Optional, Sequence, Tuple, Union, Iterator
import numpy as np
import scipy.linalg
from scipy.cluster import hierarchy
from ..common.typetools import MatrixLike
from ..common import errors
from .cmatrix import CMatrix, as_cmatrix, cluster_radius, rank_threshold, DEFAULT_TOL


class Eigenvalue(NamedTuple):
    value: complex
    multiplicity: int


class JordanItem(NamedTuple):
    """An eigenvalue and the sizes of its Jordan blocks (decreasing order)
    """
    eigenvalue: complex
    dimensions: Tuple[int, ...]

    @property
    def geometric_multiplicity(self) -> int:
        return len(self.dimensions)

    @property
    def algebraic_multiplicity(self) -> int:
        return sum(self.dimensions)


class JordanBlock(NamedTuple):
    """One Jordan block, occupying columns start:start+size of the basis
    """
    eigenvalue: complex
    size: int
    start: int

    @property
    def columns(self) -> slice:
        return slice(self.start, self.start + self.size)


def jordan_block(eigenvalue: complex, size: int) -> np.ndarray:
    """E 1_p + a_p, where a_p has ones on the superdiagonal
    """
    return complex(eigenvalue) * np.eye(size, dtype=complex) + np.eye(size, k=1, dtype=complex)


class JordanData:
    """Jordan decomposition M = A J A^{-1}, with A the basis of generalized eigenvectors
    (one Jordan chain per block, eigenvector first) and the cobasis Phi = (A^{-1})^dagger,
    so that Phi^dagger A = A Phi^dagger = 1.

    Parameters
    ----------
    items: sequence of JordanItem
        eigenvalues and their block sizes, in the order of the basis columns
    basis: array-like
        n x n invertible matrix of generalized eigenvectors
    cobasis: array-like or None
        biorthonormal system, computed from the basis if not provided
    scale: float or None
        norm of the decomposed matrix (computed if not provided)
    tol: float
        tolerance inherited by the matrices derived from this decomposition
    """

    def __init__(self, items: Sequence[JordanItem], basis: MatrixLike, cobasis: Optional[MatrixLike] = None,
                 scale: Optional[float] = None, tol: float = DEFAULT_TOL) -> None:
        self.items = [JordanItem(complex(i.eigenvalue), tuple(int(d) for d in i.dimensions)) for i in items]
        self.basis = np.array(basis, dtype=complex)
        n = self.basis.shape[0]
        if self.basis.shape != (n, n):
            raise errors.DimensionMismatch(f"Basis must be square, got shape {self.basis.shape}")
        if sum(i.algebraic_multiplicity for i in self.items) != n:
            raise errors.DimensionMismatch(f"Jordan dimensions {[i.dimensions for i in self.items]} do not fill dimension {n}")
        if any(d < 1 for i in self.items for d in i.dimensions) or any(not i.dimensions for i in self.items):
            raise errors.BadParameter("Jordan dimensions must be positive")
        if cobasis is None:
            try:
                cobasis = np.linalg.inv(self.basis).conj().T
            except np.linalg.LinAlgError as e:
                raise errors.Singular("Jordan basis is not invertible") from e
        self.cobasis = np.array(cobasis, dtype=complex)
        self.tol = tol
        self.scale = float(np.linalg.norm(self.matrix(), ord=2)) if scale is None else float(scale)

    @property
    def n(self) -> int:
        return int(self.basis.shape[0])

    @classmethod
    def from_blocks(cls, blocks: Sequence[Tuple[complex, int]], basis: Optional[MatrixLike] = None,
                    tol: float = DEFAULT_TOL) -> "JordanData":
        """Structured construction from (eigenvalue, size) blocks, bypassing any numerical decomposition.
        The basis columns follow the order of the blocks (identity basis by default). Blocks with
        equal eigenvalues are grouped into one item, and the basis columns permuted accordingly.
        """
        n = sum(int(size) for _, size in blocks)
        basis = np.eye(n, dtype=complex) if basis is None else np.array(basis, dtype=complex)
        starts = np.cumsum([0] + [int(size) for _, size in blocks])
        groups: List[Tuple[complex, List[int]]] = []
        for k, (value, _) in enumerate(blocks):
            for group_value, indices in groups:
                if group_value == complex(value):
                    indices.append(k)
                    break
            else:
                groups.append((complex(value), [k]))
        items: List[JordanItem] = []
        columns: List[int] = []
        for value, indices in groups:
            indices = sorted(indices, key=lambda k: -int(blocks[k][1]))  # stable, decreasing sizes
            items.append(JordanItem(value, tuple(int(blocks[k][1]) for k in indices)))
            for k in indices:
                columns.extend(range(starts[k], starts[k + 1]))
        return cls(items, basis[:, columns], tol=tol)

    def blocks(self) -> Iterator[JordanBlock]:
        start = 0
        for item in self.items:
            for size in item.dimensions:
                yield JordanBlock(item.eigenvalue, size, start)
                start += size

    def item_blocks(self, item: JordanItem) -> List[JordanBlock]:
        return [b for b in self.blocks() if b.eigenvalue == item.eigenvalue]

    def jordan_matrix(self) -> np.ndarray:
        return scipy.linalg.block_diag(*[jordan_block(b.eigenvalue, b.size) for b in self.blocks()])

    def matrix(self) -> np.ndarray:
        """Reassembled matrix A J Phi^dagger
        """
        return self.basis @ self.jordan_matrix() @ self.cobasis.conj().T

    def biorthonormality_residual(self) -> float:
        eye = np.eye(self.n)
        first = self.cobasis.conj().T @ self.basis - eye
        second = self.basis @ self.cobasis.conj().T - eye
        return float(max(np.linalg.norm(first, ord=2), np.linalg.norm(second, ord=2)))

    def eigenvalues(self) -> List[Eigenvalue]:
        return [Eigenvalue(i.eigenvalue, i.algebraic_multiplicity) for i in self.items]

    def __repr__(self) -> str:
        content = ", ".join(f"{i.eigenvalue:.6g}: {list(i.dimensions)}" for i in self.items)
        return f"JordanData({content})"


# %% eigenvalues


def _schur_diagonal(matrix: np.ndarray) -> np.ndarray:
    if not np.any(np.tril(matrix, -1)):  # already triangular: keep the diagonal order
        return np.diag(matrix).copy()
    try:
        triangular, _ = scipy.linalg.schur(matrix, output="complex")
    except (np.linalg.LinAlgError, ValueError) as e:
        raise errors.NonConvergence(f"Schur decomposition failed: {e}") from e
    return np.diag(triangular)


def _kernel(matrix: np.ndarray, threshold: float) -> np.ndarray:
    """Orthonormal basis (as columns) of the numerical kernel: right singular vectors
    with singular values below the threshold
    """
    _, singular, vh = scipy.linalg.svd(matrix)
    rank = int(np.sum(singular > threshold))
    return vh[rank:].conj().T


def _power_kernel(matrix: np.ndarray, z: complex, power: int, tol: float) -> np.ndarray:
    """Numerical kernel of (M - z)^power
    """
    n = matrix.shape[0]
    shifted = matrix - z * np.eye(n)
    threshold = rank_threshold(n, tol, float(np.linalg.norm(shifted, ord=2)), power)
    return _kernel(np.linalg.matrix_power(shifted, power), threshold)


def _single_link(values: np.ndarray, radius: float) -> List[np.ndarray]:
    """Single-linkage groups of values at the given radius, ordered by first index
    """
    if values.size == 1:
        return [np.array([0])]
    points = np.stack([values.real, values.imag], axis=1)
    labels = hierarchy.fcluster(hierarchy.linkage(points, method="single"), t=radius, criterion="distance")
    groups = [np.flatnonzero(labels == label) for label in np.unique(labels)]
    return sorted(groups, key=lambda g: int(g[0]))


def _is_multiple_eigenvalue(matrix: np.ndarray, z: complex, multiplicity: int, tol: float) -> bool:
    """Checks that z is numerically an eigenvalue with the given algebraic multiplicity
    """
    if not _power_kernel(matrix, z, 1, tol).shape[1]:
        return False
    return bool(_power_kernel(matrix, z, multiplicity, tol).shape[1] >= multiplicity)


def _cluster(matrix: np.ndarray, values: np.ndarray, scale: float, tol: float) -> List[np.ndarray]:
    n = values.size
    fine = cluster_radius(scale, tol)
    if not fine:  # only possible for the zero matrix
        return [np.arange(n)]
    coarse = max(fine, scale * (n * tol)**(1.0 / n))

    def refine(indices: np.ndarray, radius: float) -> List[np.ndarray]:
        output: List[np.ndarray] = []
        for group in _single_link(values[indices], radius):
            members = indices[group]
            k = members.size
            if k == 1 or radius <= fine:
                output.append(members)
            elif _is_multiple_eigenvalue(matrix, complex(np.mean(values[members])), k, tol):
                output.append(members)
            else:
                output.extend(refine(members, max(radius / 10, fine)))
        return output

    return sorted(refine(np.arange(n), coarse), key=lambda g: int(g[0]))


def schur_eigenvalues(M: Union[CMatrix, MatrixLike]) -> List[Eigenvalue]:
    """Eigenvalues with algebraic multiplicities, numerically coincident eigenvalues being
    merged to their mean. Ordering follows the diagonal of the Schur form.

    Parameters
    ----------
    M: CMatrix or array-like
        square matrix (its tolerance drives the clustering)

    Returns
    -------
    list
        Eigenvalue(value, multiplicity) tuples, multiplicities summing to n
    """
    M = as_cmatrix(M)
    values = _schur_diagonal(M.data)
    groups = _cluster(M.data, values, M.norm(), M.tol)
    return [Eigenvalue(complex(np.mean(values[g])), int(g.size)) for g in groups]


def kernel_dim(M: Union[CMatrix, MatrixLike], z: complex, ell: int) -> int:
    """Dimension of kernel((M - z)^ell), computed from the singular values of the explicit power.
    Singular values below n tol max(||M - z||, 1)^ell count as zero.
    """
    M = as_cmatrix(M)
    if ell < 1:
        raise errors.BadParameter(f"Power must be a positive integer, got {ell}")
    return int(_power_kernel(M.data, complex(z), int(ell), M.tol).shape[1])


# %% Jordan chains


def _invariant_subspace(matrix: np.ndarray, means: Sequence[complex], index: int, multiplicity: int) -> Tuple[np.ndarray, np.ndarray]:
    """Orthonormal basis Q of the invariant subspace of the cluster means[index] and the
    restriction T = Q^dagger M Q (upper triangular), from a reordered Schur decomposition
    """
    centers = np.array(means)

    def selected(value: complex) -> bool:
        return bool(np.argmin(np.abs(centers - value)) == index)

    try:
        triangular, unitary, dimension = scipy.linalg.schur(matrix, output="complex", sort=selected)
    except (np.linalg.LinAlgError, ValueError) as e:
        raise errors.NonConvergence(f"Schur decomposition failed: {e}") from e
    if dimension != multiplicity:
        raise errors.IllConditioned(f"Invariant subspace of eigenvalue {means[index]:.6g} has dimension "
                                    f"{dimension} instead of {multiplicity}")
    return unitary[:, :multiplicity], triangular[:multiplicity, :multiplicity]


def _orthogonal_complement_projector(vectors: np.ndarray, n: int) -> np.ndarray:
    if not vectors.shape[1]:
        return np.eye(n, dtype=complex)
    q = scipy.linalg.orth(vectors)
    return np.eye(n, dtype=complex) - q @ q.conj().T


def _jordan_chains(shifted: np.ndarray, noise: float, tol: float) -> List[np.ndarray]:
    """Jordan chains (as m x p arrays, eigenvector first) of a nearly nilpotent m x m matrix S.
    The kernels of S^l are computed with threshold m tol noise max(||S||, 1)^(l - 1),
    where noise is the scale of the rounding errors on S.
    The top vector of each new chain is picked in kernel(S^l) with maximal component orthogonal
    to kernel(S^(l-1)) and to the chains already passing through level l.
    """
    m = shifted.shape[0]
    norm = max(float(np.linalg.norm(shifted, ord=2)), 1.0)
    kernels = [np.zeros((m, 0), dtype=complex)]
    while kernels[-1].shape[1] < m:
        ell = len(kernels)
        kernel = _kernel(np.linalg.matrix_power(shifted, ell), m * tol * noise * norm**(ell - 1))
        if kernel.shape[1] <= kernels[-1].shape[1]:
            dimensions = [k.shape[1] for k in kernels[1:]] + [kernel.shape[1]]
            raise errors.IllConditioned(f"Inconsistent rank sequence (kernel dimensions {dimensions}, "
                                        f"algebraic multiplicity {m})")
        kernels.append(kernel)
    increments = [kernels[l].shape[1] - kernels[l - 1].shape[1] for l in range(1, len(kernels))] + [0]
    if any(a < b for a, b in zip(increments[:-1], increments[1:])):
        raise errors.IllConditioned(f"Rank increments {increments[:-1]} do not form a Jordan structure")
    chains: List[List[np.ndarray]] = []  # each chain is [psi_1, ..., psi_p]
    for level in range(len(kernels) - 1, 0, -1):
        num_new = increments[level - 1] - increments[level]
        if not num_new:
            continue
        existing = [chain[level - 1] for chain in chains]
        span = np.column_stack([kernels[level - 1]] + existing)
        projected = _orthogonal_complement_projector(span, m) @ kernels[level]
        _, _, vh = scipy.linalg.svd(projected)
        tops = kernels[level] @ vh[:num_new].conj().T
        for k in range(num_new):
            chain = [tops[:, k]]
            for _ in range(level - 1):
                chain.insert(0, shifted @ chain[0])
            chains.append(chain)
    return [np.column_stack(chain) for chain in chains]


def _normalized(chain: np.ndarray) -> np.ndarray:
    """Scales a chain so that the geometric mean of its vector norms is 1
    """
    norms = np.linalg.norm(chain, axis=0)
    return chain / np.exp(np.mean(np.log(norms)))


def jordan_structure(M: Union[CMatrix, MatrixLike]) -> JordanData:
    """Numerical Jordan decomposition M = A J A^{-1}

    Parameters
    ----------
    M: CMatrix or array-like
        square matrix, with eigenvalue clusters well separated relative to its tolerance

    Returns
    -------
    JordanData
        eigenvalues, block sizes and biorthonormal basis/cobasis

    Raises
    ------
    IllConditioned
        if clusters are closer than 10 cluster radii, if the rank sequence is not a Jordan
        structure, or if the decomposition does not reproduce M within n tol ||M||
    """
    M = as_cmatrix(M)
    n, tol, scale = M.n, M.tol, M.norm()
    values = _schur_diagonal(M.data)
    groups = _cluster(M.data, values, scale, tol)
    means = [complex(np.mean(values[g])) for g in groups]
    separation = cluster_radius(scale, tol) * 10
    for i, first in enumerate(means):
        for second in means[i + 1:]:
            if abs(first - second) < separation:
                raise errors.IllConditioned(f"Eigenvalues {first:.6g} and {second:.6g} are too close "
                                            f"to be resolved (separation < {separation:.3e})")
    items: List[JordanItem] = []
    columns: List[np.ndarray] = []
    for index, (mean, group) in enumerate(zip(means, groups)):
        if len(means) == 1:
            subspace, restriction = np.eye(n, dtype=complex), M.data
        else:
            subspace, restriction = _invariant_subspace(M.data, means, index, int(group.size))
        shifted = restriction - mean * np.eye(group.size)
        chains = sorted(_jordan_chains(shifted, max(scale, 1.0), tol), key=lambda c: -c.shape[1])
        items.append(JordanItem(mean, tuple(c.shape[1] for c in chains)))
        columns.extend(_normalized(subspace @ c) for c in chains)
    try:
        jd = JordanData(items, np.column_stack(columns), scale=scale, tol=tol)
    except errors.Singular as e:
        raise errors.IllConditioned("Generalized eigenvectors are numerically dependent") from e
    residual = reassembly_residual(jd, M)
    bound = n * tol * max(scale, 1.0)
    if residual > bound:
        raise errors.IllConditioned(f"Jordan decomposition residual {residual:.3e} exceeds {bound:.3e}")
    return jd


def reassembly_residual(jd: JordanData, M: Union[CMatrix, MatrixLike]) -> float:
    """||A J A^{-1} - M||
    """
    return float(np.linalg.norm(jd.matrix() - np.asarray(M), ord=2))
