# Copyright (c) The pseudounitary developers. All Rights Reserved.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""Exceptions and warnings raised throughout the package.

Numerical failures derive from NumericalError (a RuntimeError), invalid inputs
derive from InputError (a ValueError). The command line maps the two families
onto distinct exit codes.
"""
from typing import Any, Sequence


class NumericalError(RuntimeError):
    """A computation could not be carried out reliably at the requested tolerance.
    """


class NonConvergence(NumericalError):
    pass


class IllConditioned(NumericalError):
    pass


class Singular(NumericalError):
    pass


class Overflow(NumericalError):
    pass


class ZeroEigenvalue(NumericalError):
    pass


class SingularBlock(NumericalError):
    pass


class NotSymplectic(NumericalError):
    pass


class InputError(ValueError):
    """The provided data does not satisfy the preconditions of the operation.
    """


class NotHermitian(InputError):
    pass


class BadParameter(InputError):
    pass


class DimensionMismatch(InputError):
    pass


class DimensionNotEven(DimensionMismatch):
    pass


class NotUnimodular(InputError):
    pass


class NotPseudoUnitary(Exception):
    """Raised by constructions which require a pseudo-unitary input.

    Parameters
    ----------
    message: str
        description of the failure
    eigenvalues: sequence of complex
        the eigenvalues which break the spectral pairing
    """

    def __init__(self, message: str, eigenvalues: Sequence[complex] = ()) -> None:
        super().__init__(message)
        self.eigenvalues = [complex(e) for e in eigenvalues]

    def __reduce__(self) -> Any:  # keeps the eigenvalues through process pools
        return (self.__class__, (self.args[0], self.eigenvalues))


class MetricMismatchWarning(RuntimeWarning):
    """The provided metric operator does not make the Hamiltonian pseudo-Hermitian.
    """


class SingularBlockWarning(RuntimeWarning):
    pass
