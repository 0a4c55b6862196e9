# Copyright (c) The pseudounitary developers. All Rights Reserved.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from .symplectic import j_matrix, eta_j, time_reversal, hamiltonian_matrix, random_symplectic
from .symplectic import SpectralQuadruple, SymplecticReport, is_symplectic, spectral_quadruples, sp_in_umm
