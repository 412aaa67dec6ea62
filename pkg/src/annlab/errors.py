"""Exception types shared across the package."""


class AnnlabError(Exception):
    """Base class for all package-specific errors."""


class InvalidModulus(AnnlabError):
    """Requested Z_n with n < 2, or a quotient collapsing to the zero ring."""


class InfiniteQuotient(AnnlabError):
    """A polynomial quotient whose residue ring is not finite."""


class CapExceeded(AnnlabError):
    """An enumeration exceeded its configured size cap."""

    def __init__(self, what: str, size: int, cap: int):
        super().__init__(f"{what}: size {size} exceeds cap {cap}")
        self.what = what
        self.size = size
        self.cap = cap


class RingMismatch(AnnlabError):
    """Operands belong to different rings."""


class ModuleMismatch(AnnlabError):
    """Operands belong to different modules."""


class NotSemisimple(AnnlabError):
    """Field decomposition requested for a ring with a nonzero nilpotent."""


class DegreeOverflow(AnnlabError):
    """A polynomial product exceeds the working degree bound."""


class HypothesisFailed(AnnlabError):
    """A checked statement's hypothesis does not hold on the given instance."""


class UnknownProperty(AnnlabError):
    """Property or variant identifier not present in the registry."""


class DslSyntaxError(AnnlabError):
    """Malformed construction-DSL input."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        super().__init__(f"{line}:{column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class ResolutionError(AnnlabError):
    """A DSL name or element label does not resolve."""
