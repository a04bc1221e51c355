"""Exception hierarchy shared by every qlattice module."""


class QLatticeError(Exception):
    pass


class ResourceLimitError(QLatticeError):
    """A request exceeds a desk-scale guard (table size, enumeration width)."""

    def __init__(self, message, required=None, limit=None):
        super().__init__(message)
        self.required = required
        self.limit = limit


class DimensionError(QLatticeError, ValueError):
    pass


class InvalidSpecError(QLatticeError, ValueError):
    """Lattice spec failed validation; ``violations`` lists every problem found."""

    def __init__(self, message, violations=()):
        super().__init__(message)
        self.violations = list(violations)


class SpecParseError(QLatticeError, ValueError):
    pass


class BitstringFormatError(QLatticeError, ValueError):
    def __init__(self, message, field_index=None, expected_length=None):
        super().__init__(message)
        self.field_index = field_index
        self.expected_length = expected_length


class ContractError(QLatticeError):
    """An operation was called on a value outside its precondition."""
