# Copyright (c) The pseudounitary developers. All Rights Reserved.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from .matrixfile import MatrixFileError, read_matrix_file, write_matrix_file, read_csv_matrix
from .commands import registry, execute, Outcome, Status
