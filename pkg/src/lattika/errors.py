"""Exception hierarchy for the library."""


class LattikaError(Exception):
    """Base class for all library errors."""


class NotInvertible(LattikaError):
    """Requested a modular inverse of a non-unit."""


class NotPrime(LattikaError):
    """A prime modulus was required but the primality check failed."""


class Unsupported(LattikaError):
    """The operation is defined but deliberately not implemented for this input."""


class ParamMismatch(LattikaError):
    """Operands live in different rings or parameter sets."""


class NttUnavailable(LattikaError):
    """The modulus does not support a negacyclic NTT of this size."""


class NotBinary(LattikaError):
    """A binary polynomial or vector was expected."""


class PlaintextOutOfRange(LattikaError):
    """Plaintext coefficients exceed the plaintext modulus."""


class KeyMismatch(LattikaError):
    """A key does not match the parameters of the data it is applied to."""


class DimMismatch(LattikaError):
    """Vector or matrix shapes are incompatible."""


class Singular(LattikaError):
    """A matrix that must be invertible is singular."""


class BadModuli(LattikaError):
    """Moduli fail the preconditions of a modulus-switching operation."""


class FormatError(LattikaError):
    """A serialized key or ciphertext file is malformed."""
