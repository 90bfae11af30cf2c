"""Exception types shared across the package."""


class FermipermError(Exception):
    """Base class for all errors raised by fermiperm."""


class DimensionError(FermipermError, ValueError):
    """Operands act on different numbers of qubits or modes."""


class ResourceError(FermipermError, RuntimeError):
    """A dense or enumerative operation exceeds its size cap."""


class InvalidEncodingError(FermipermError, ValueError):
    """An encoding matrix is singular or otherwise not a valid bijection."""


class NumberConservationError(FermipermError, ValueError):
    """A fermionic term does not conserve particle number.

    Carries the offending term on the ``term`` attribute.
    """

    def __init__(self, message, term=None):
        super().__init__(message)
        self.term = term


class HamiltonianParseError(FermipermError, ValueError):
    """A Hamiltonian text file could not be parsed.

    Carries the 1-based line number on the ``line_no`` attribute.
    """

    def __init__(self, message, line_no=None):
        super().__init__(message)
        self.line_no = line_no
