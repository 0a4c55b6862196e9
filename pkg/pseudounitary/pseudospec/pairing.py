# Copyright (c) The pseudounitary developers. All Rights Reserved.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from typing import Any, Callable, Dict, List, NamedTuple, Optional, Tuple
import numpy as np
from ..common import errors
from ..common import tools
from ..matcore import JordanData, JordanItem
from ..matcore.cmatrix import spectral_tol, zero_tol
from .records import Reason, Verdict


class PairedEigenvalues(NamedTuple):
    """Eigenvalues matched by an involution (u -> 1/u* or u -> u*), with equal Jordan data
    """
    first: JordanItem
    second: JordanItem


class SpectralPairing:
    """Partition of a spectrum into self-paired eigenvalues (unimodular ones for the
    inverse-conjugate involution, real ones for the conjugation), matched pairs and
    unpaired eigenvalues.

    Parameters
    ----------
    fixed: list of JordanItem
        eigenvalues fixed by the involution (within tolerance)
    pairs: list of PairedEigenvalues
        matched eigenvalues (for the inverse-conjugate involution, first is the outer one, |u| > 1)
    unpaired: list of JordanItem
        eigenvalues breaking the pairing
    failures: list of Reason
        one reason per unpaired eigenvalue
    tolerance: float
        tolerance used on eigenvalue positions
    residual: float
        largest defect among the fixed and paired eigenvalues
    """

    def __init__(self, fixed: List[JordanItem], pairs: List[PairedEigenvalues], unpaired: List[JordanItem],
                 failures: List[Reason], tolerance: float, residual: float, involution: str) -> None:
        assert len(failures) == len(unpaired)
        self.fixed = fixed
        self.pairs = pairs
        self.unpaired = unpaired
        self.failures = failures
        self.tolerance = tolerance
        self.residual = residual
        self.involution = involution

    @property
    def unimodular(self) -> List[JordanItem]:
        return self.fixed

    def verdict(self) -> Verdict:
        if not self.unpaired:
            return Verdict(Reason.ALL_PAIRED, residual=self.residual, tolerance=self.tolerance)
        for reason in (Reason.MULTIPLICITY_MISMATCH, Reason.JORDAN_MISMATCH, Reason.UNPAIRED_EIGENVALUE):
            if reason in self.failures:
                break
        return Verdict(reason, witness=[u.eigenvalue for u in self.unpaired], residual=self.residual, tolerance=self.tolerance)

    def table(self) -> tools.Selector:
        """Tabular view with one row per eigenvalue
        """
        fixed_role, first_role, second_role = ("unimodular", "outer", "inner") if self.involution == "inverse" else ("real", "upper", "lower")
        rows = [_row(item, fixed_role, item) for item in self.fixed]
        for pair in self.pairs:
            rows.extend([_row(pair.first, first_role, pair.second), _row(pair.second, second_role, pair.first)])
        rows.extend(_row(item, "unpaired", None, reason) for item, reason in zip(self.unpaired, self.failures))
        return tools.Selector.from_rows(rows, columns=["eigenvalue", "modulus", "role", "partner", "geometric_multiplicity",
                                                       "dimensions", "failure"])

    def __repr__(self) -> str:
        return f"SpectralPairing(fixed={len(self.fixed)}, pairs={len(self.pairs)}, unpaired={len(self.unpaired)})"


def _row(item: JordanItem, role: str, partner: Optional[JordanItem], failure: Optional[Reason] = None) -> Dict[str, Any]:
    return {"eigenvalue": tools.format_complex(item.eigenvalue), "modulus": abs(item.eigenvalue), "role": role,
            "partner": "" if partner is None else tools.format_complex(partner.eigenvalue),
            "geometric_multiplicity": item.geometric_multiplicity,
            "dimensions": " ".join(str(d) for d in item.dimensions), "failure": "" if failure is None else failure.value}


def _match(candidates: List[JordanItem], partners: List[JordanItem], defect: Callable[[complex, complex], float],
           tolerance: float) -> Tuple[List[PairedEigenvalues], List[JordanItem], List[Reason], float]:
    """Greedy matching of candidates (in the provided order) with the remaining partner of smallest defect
    """
    partners = list(partners)
    pairs: List[PairedEigenvalues] = []
    unpaired: List[JordanItem] = []
    failures: List[Reason] = []
    residual = 0.0
    for item in candidates:
        distances = [defect(item.eigenvalue, p.eigenvalue) for p in partners]
        if not distances or min(distances) > tolerance:
            unpaired.append(item)
            failures.append(Reason.UNPAIRED_EIGENVALUE)
            continue
        partner = partners.pop(int(np.argmin(distances)))
        if item.geometric_multiplicity != partner.geometric_multiplicity:
            failure = Reason.MULTIPLICITY_MISMATCH
        elif sorted(item.dimensions) != sorted(partner.dimensions):
            failure = Reason.JORDAN_MISMATCH
        else:
            pairs.append(PairedEigenvalues(item, partner))
            residual = max(residual, min(distances))
            continue
        unpaired.extend([item, partner])
        failures.extend([failure, failure])
    unpaired.extend(partners)
    failures.extend([Reason.UNPAIRED_EIGENVALUE] * len(partners))
    return pairs, unpaired, failures, residual


def pair_spectrum(jd: JordanData) -> SpectralPairing:
    """Splits the spectrum of an invertible matrix into unimodular eigenvalues and
    inverse-complex-conjugate pairs (u, 1/u*), the outer eigenvalues (|u| > 1) being matched
    greedily by decreasing modulus, then increasing argument.

    Raises
    ------
    ZeroEigenvalue
        if an eigenvalue vanishes within tolerance
    """
    tolerance = spectral_tol(jd.scale, jd.tol)
    threshold = zero_tol(jd.scale, jd.tol)
    for item in jd.items:
        if abs(item.eigenvalue) <= threshold:
            raise errors.ZeroEigenvalue(f"Eigenvalue {item.eigenvalue:.3e} vanishes, the matrix is not invertible")
    fixed = [i for i in jd.items if abs(abs(i.eigenvalue) - 1) <= tolerance]
    outer = [i for i in jd.items if abs(i.eigenvalue) - 1 > tolerance]
    inner = [i for i in jd.items if 1 - abs(i.eigenvalue) > tolerance]
    outer.sort(key=lambda i: (-abs(i.eigenvalue), float(np.angle(i.eigenvalue))))
    pairs, unpaired, failures, residual = _match(outer, inner, lambda u, v: abs(u * np.conj(v) - 1), tolerance)
    residual = max([residual] + [abs(abs(i.eigenvalue) - 1) for i in fixed])
    return SpectralPairing(fixed, pairs, unpaired, failures, tolerance, residual, involution="inverse")


def pair_conjugates(jd: JordanData) -> SpectralPairing:
    """Splits the spectrum into real eigenvalues (|Im| within tolerance) and complex-conjugate
    pairs, eigenvalues with positive imaginary part being matched by increasing real part
    """
    tolerance = spectral_tol(jd.scale, jd.tol)
    fixed = [i for i in jd.items if abs(i.eigenvalue.imag) <= tolerance]
    upper = sorted([i for i in jd.items if i.eigenvalue.imag > tolerance], key=lambda i: (i.eigenvalue.real, i.eigenvalue.imag))
    lower = [i for i in jd.items if i.eigenvalue.imag < -tolerance]
    pairs, unpaired, failures, residual = _match(upper, lower, lambda u, v: abs(u - np.conj(v)), tolerance)
    residual = max([residual] + [abs(i.eigenvalue.imag) for i in fixed])
    return SpectralPairing(fixed, pairs, unpaired, failures, tolerance, residual, involution="conjugation")
