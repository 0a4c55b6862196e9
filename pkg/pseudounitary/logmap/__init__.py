# Copyright (c) The pseudounitary developers. All Rights Reserved.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from ..pseudospec import is_pseudo_hermitian as is_eta_pseudo_hermitian
from .logarithm import LogResult, Relocation, pseudo_hermitian_log, relocate
from .evolution import evolve, evolution_family, verify_exponential_structure
