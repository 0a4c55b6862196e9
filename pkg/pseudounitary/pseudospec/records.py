# Copyright (c) The pseudounitary developers. All Rights Reserved.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import enum
from typing import Any, Dict, Sequence


class Reason(enum.Enum):
    ALL_PAIRED = "AllPaired"
    WITHIN_TOLERANCE = "WithinTolerance"
    UNPAIRED_EIGENVALUE = "UnpairedEigenvalue"
    MULTIPLICITY_MISMATCH = "MultiplicityMismatch"
    JORDAN_MISMATCH = "JordanMismatch"
    RESIDUAL_TOO_LARGE = "ResidualTooLarge"
    NOT_REAL = "NotReal"


_PASSING = (Reason.ALL_PAIRED, Reason.WITHIN_TOLERANCE)


class Verdict:
    """Structured result of a decision

    Parameters
    ----------
    reason: Reason
        the decision is positive iff the reason is AllPaired or WithinTolerance
    witness: sequence of complex
        offending eigenvalues (or empty)
    residual: float
        residual norm, or largest eigenvalue defect for spectral decisions
    tolerance: float
        bound the residual was compared with
    info: dict
        additional data (group labels...)
    """

    def __init__(self, reason: Reason, witness: Sequence[complex] = (), residual: float = 0.0,
                 tolerance: float = 0.0, **info: Any) -> None:
        self.reason = reason
        self.witness = [complex(w) for w in witness]
        self.residual = float(residual)
        self.tolerance = float(tolerance)
        self.info = info

    @property
    def decision(self) -> bool:
        return self.reason in _PASSING

    def to_dict(self) -> Dict[str, Any]:
        return {"decision": self.decision, "reason": self.reason.value, "witness": [[w.real, w.imag] for w in self.witness],
                "residual": self.residual, "tolerance": self.tolerance, **self.info}

    def __repr__(self) -> str:
        return (f"Verdict({self.decision}, {self.reason.value}, witness={self.witness}, "
                f"residual={self.residual:.3e}, tolerance={self.tolerance:.3e})")
