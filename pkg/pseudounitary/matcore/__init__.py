# Copyright (c) The pseudounitary developers. All Rights Reserved.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from .cmatrix import CMatrix, as_cmatrix, DEFAULT_TOL
from .spectral import Eigenvalue, JordanItem, JordanBlock, JordanData, jordan_block
from .spectral import schur_eigenvalues, jordan_structure, kernel_dim, reassembly_residual
from .expolog import expm, logm_principal, jordan_block_exp, jordan_block_log, principal_log
from .inertia import Inertia, inertia, canonical_metric, group_label
