# Copyright (c) The pseudounitary developers. All Rights Reserved.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from .records import Reason, Verdict
from .pairing import SpectralPairing, PairedEigenvalues, pair_spectrum, pair_conjugates
from .verdicts import is_pseudo_unitary, is_eta_pseudo_unitary, is_pseudo_hermitian, is_pseudo_hermitian_spectrum
from .verdicts import det_unimodular, in_pseudo_special_group
