# Copyright (c) The pseudounitary developers. All Rights Reserved.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from .forms import FormKind, CanonicalForm2, canonical_form_2x2, metric_family_2x2, log_2x2, similar_d3_generator
