# Copyright (c) The pseudounitary developers. All Rights Reserved.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from .oscillator import OscillatorModel, OscState, OscillatorRegime, Conservation, build_oscillator
from .oscillator import classify_oscillator, simulate, closed_form_position, conserved_inner_product
from .oscillator import valid_metrics, positive_metric, trajectory_table
