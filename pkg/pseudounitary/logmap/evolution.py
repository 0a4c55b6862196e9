# Copyright (c) The pseudounitary developers. All Rights Reserved.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from typing import Iterable, List, Union
from ..common.typetools import MatrixLike
from ..matcore import CMatrix, as_cmatrix, JordanData, jordan_structure, jordan_block, expm


def evolve(H: Union[CMatrix, MatrixLike], t: float) -> CMatrix:
    """Evolution operator e^{-itH}. It is eta-pseudo-unitary for all t iff H is eta-pseudo-Hermitian.

    Raises
    ------
    Overflow
        if |t| ||H|| is too large for the exponential to be representable
    """
    H = as_cmatrix(H)
    return H.like(expm(-1j * float(t) * H.data).data)


def evolution_family(H: Union[CMatrix, MatrixLike], times: Iterable[float]) -> List[CMatrix]:
    return [evolve(H, t) for t in times]


def verify_exponential_structure(E: complex, p: int) -> JordanData:
    """Numerical Jordan structure of e^{i(E 1_p + a_p)}: a single block of size p with eigenvalue e^{iE}
    """
    return jordan_structure(expm(1j * jordan_block(E, p)))
