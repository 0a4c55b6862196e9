# Copyright (c) The pseudounitary developers. All Rights Reserved.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from . import matcore
from . import pseudospec
from . import metric
from . import logmap
from . import canon2
from . import sympl
from . import oscsim
from .matcore import CMatrix, jordan_structure
from .pseudospec import is_pseudo_unitary, is_eta_pseudo_unitary
from .metric import find_metric, classify_group
from .logmap import pseudo_hermitian_log

__all__ = ["matcore", "pseudospec", "metric", "logmap", "canon2", "sympl", "oscsim", "CMatrix", "jordan_structure",
           "is_pseudo_unitary", "is_eta_pseudo_unitary", "find_metric", "classify_group", "pseudo_hermitian_log"]

__version__ = "0.1.0"
