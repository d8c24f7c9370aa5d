"""Exceptions raised by noninertial-tangles.

Every domain error derives from ``TangleError`` which itself is a ``ValueError`` so
code that already guards calls with ``except ValueError`` keeps working.
"""


class TangleError(ValueError):
    """Base class for all noninertial-tangles errors."""


class NonHermitianInputError(TangleError):
    """A matrix that must be Hermitian failed the Hermiticity check."""


class EmptyKeepSetError(TangleError):
    """A partial trace was asked to keep no slot."""


class EmptyTransposeSetError(TangleError):
    """A partial transpose was asked to transpose no slot."""


class RegisterError(TangleError):
    """A mode register is not in canonical order or has duplicated slots."""


class InvalidDensityMatrixError(TangleError):
    """A matrix is not Hermitian, unit-trace and positive semidefinite."""


class PartyCountError(TangleError):
    """A state was requested for an unsupported number of parties."""


class UnnormalizedStateError(TangleError):
    """A state vector is not normalized."""


class InvalidScenarioError(TangleError):
    """An acceleration scenario is out of range or does not fit the state."""


class PartyNotInRegisterError(TangleError):
    """A party was referenced that has no slot in the register."""


class IdenticalPartiesError(TangleError):
    """A pair measure was requested for the same party twice."""


class InvalidConfigError(TangleError):
    """A sweep configuration is invalid."""


class NoSignChangeError(TangleError):
    """A threshold bracket does not straddle a root."""
