# Copyright (c) The pseudounitary developers. All Rights Reserved.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from .coefficients import BlockCoefficients, solve_block_coeffs, hermitian_unimodular_coeffs
from .coefficients import recurrence_system, solve_recurrence_system
from .builder import BlockTerm, MetricOperator, build_metric, find_metric, classify_group, congruence_transport
from .builder import paired_column_candidates
