"""Exception types shared across the package."""


class NchoError(Exception):
    """Base class for all package-specific errors."""


class DomainError(NchoError, ValueError):
    """An input violates a mathematical domain requirement (e.g. Re(alpha) <= 0)."""


class NumericRangeError(NchoError, ArithmeticError):
    """An intermediate quantity overflowed or became non-finite."""


class SpectrumInconsistencyError(NchoError):
    """The characteristic discriminant came out negative beyond tolerance.

    For valid oscillator parameters this cannot happen; seeing it indicates
    a bug or pathological input rather than a physical configuration.
    """


class DegenerateSpectrumError(NchoError):
    """The two normal-mode frequencies coincide and the eigenvector
    formulas are singular; use the closed-form ground-state path instead."""


class SingularConfigurationError(NchoError):
    """A denominator or eigenbasis became numerically singular."""


class GridConfigurationError(NchoError, ValueError):
    """A numerical grid is too small or too coarse for the requested check."""


class UnsupportedCaseError(NchoError, ValueError):
    """Inputs fall outside the restricted domain of a specialized formula."""
