# Copyright (c) The pseudounitary developers. All Rights Reserved.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from typing import List, Tuple
import numpy as np
import pytest
from ..common import testing
from ..common import errors
from ..matcore import JordanData
from . import pairing
from . import generators
from .records import Reason


def test_pair_spectrum_unimodular() -> None:
    output = pairing.pair_spectrum(JordanData.from_blocks([(1, 1), (1j, 1), (-1, 1)]))
    np.testing.assert_equal([i.eigenvalue for i in output.unimodular], [1, 1j, -1])
    np.testing.assert_equal((len(output.pairs), len(output.unpaired)), (0, 0))
    assert output.verdict().decision


def test_pair_spectrum_not_inverse_conjugates() -> None:
    output = pairing.pair_spectrum(JordanData.from_blocks([(2j, 1), (-.5j, 1)]))
    np.testing.assert_equal([i.eigenvalue for i in output.unpaired], [2j, -.5j])
    verdict = output.verdict()
    assert not verdict.decision
    np.testing.assert_equal(verdict.reason, Reason.UNPAIRED_EIGENVALUE)
    testing.assert_set_equal(verdict.witness, [2j, -.5j])


def test_pair_spectrum_pair() -> None:
    u = 2 * np.exp(1j * np.pi / 3)
    output = pairing.pair_spectrum(JordanData.from_blocks([(u / 4, 1), (u, 1)]))
    np.testing.assert_equal(len(output.pairs), 1)
    np.testing.assert_almost_equal(output.pairs[0].first.eigenvalue, u)
    np.testing.assert_almost_equal(output.pairs[0].second.eigenvalue, u / 4)
    assert output.residual < 1e-15


@testing.parametrized(
    multiplicity=([(2, 2), (.5, 1), (.5, 1)], Reason.MULTIPLICITY_MISMATCH),
    jordan=([(2, 3), (2, 1), (.5, 2), (.5, 2)], Reason.JORDAN_MISMATCH),
    orphan=([(2, 1), (1j, 1)], Reason.UNPAIRED_EIGENVALUE),
    inner_orphan=([(.5j, 1), (1j, 1)], Reason.UNPAIRED_EIGENVALUE),
)
def test_pair_spectrum_failures(blocks: List[Tuple[complex, int]], reason: Reason) -> None:
    verdict = pairing.pair_spectrum(JordanData.from_blocks(blocks)).verdict()
    assert not verdict.decision
    np.testing.assert_equal(verdict.reason, reason)


def test_pair_spectrum_zero_eigenvalue() -> None:
    with pytest.raises(errors.ZeroEigenvalue):
        pairing.pair_spectrum(JordanData.from_blocks([(0, 1), (1, 1)]))


def test_pair_spectrum_deterministic_order() -> None:
    blocks = [(.5, 1), (2j, 1), (2, 1), (.5j, 1), (3, 1), (1 / 3, 1)]
    output = pairing.pair_spectrum(JordanData.from_blocks(blocks))
    np.testing.assert_almost_equal([p.first.eigenvalue for p in output.pairs], [3, 2, 2j])
    np.testing.assert_almost_equal([p.second.eigenvalue for p in output.pairs], [1 / 3, .5, .5j])


@pytest.mark.parametrize("seed", range(10))  # type: ignore
def test_pairing_involution(seed: int) -> None:
    rng = np.random.RandomState(seed)
    blocks = generators.random_pseudo_unitary_blocks(rng)
    output = pairing.pair_spectrum(JordanData.from_blocks(blocks))
    assert not output.unpaired
    for item in output.unimodular:
        np.testing.assert_almost_equal(abs(item.eigenvalue), 1)
    for pair in output.pairs:
        np.testing.assert_almost_equal(1 / np.conj(pair.first.eigenvalue), pair.second.eigenvalue)
        np.testing.assert_equal(pair.first.dimensions, pair.second.dimensions)
        assert abs(pair.first.eigenvalue) > 1


def test_pair_conjugates() -> None:
    output = pairing.pair_conjugates(JordanData.from_blocks([(1 + 2j, 2), (3, 1), (1 - 2j, 2)]))
    np.testing.assert_equal([i.eigenvalue for i in output.fixed], [3])
    np.testing.assert_equal([(p.first.eigenvalue, p.second.eigenvalue) for p in output.pairs], [(1 + 2j, 1 - 2j)])
    assert output.verdict().decision
    output = pairing.pair_conjugates(JordanData.from_blocks([(1j, 1), (2j, 1)]))
    assert not output.verdict().decision


def test_pairing_table() -> None:
    output = pairing.pair_spectrum(JordanData.from_blocks([(2, 2), (.5, 2), (1j, 1), (3j, 1)]))
    table = output.table()
    np.testing.assert_array_equal(table.loc[:, "role"], ["unimodular", "outer", "inner", "unpaired"])
    np.testing.assert_array_equal(table.loc[:, "dimensions"], ["1", "2", "2", "1"])
    np.testing.assert_array_equal(table.select(role="outer").loc[:, "partner"], ["0.5"])
    np.testing.assert_array_equal(table.select(role="unpaired").loc[:, "failure"], ["UnpairedEigenvalue"])
