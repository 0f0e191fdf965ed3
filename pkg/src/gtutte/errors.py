"""Exception hierarchy shared by the library and the command line."""


class GTutteError(Exception):
    """Base class for domain errors; ``code`` is the machine-readable name."""

    @property
    def code(self) -> str:
        return type(self).__name__


class DimensionMismatch(GTutteError, ValueError):
    pass


class CapExceeded(GTutteError):
    """A 2^n sublist enumeration was requested above the configured cap."""


class BudgetExceeded(GTutteError):
    """A brute-force sweep over Hom(Gamma, G) would exceed its budget."""


class NonFiniteGroup(GTutteError, ValueError):
    pass


class NonTorsionElement(GTutteError, ValueError):
    pass


class CompactGroup(GTutteError, ValueError):
    pass


class NonPolynomialResult(GTutteError, ArithmeticError):
    pass


class UnsupportedType(GTutteError, ValueError):
    pass


class ParseError(GTutteError, ValueError):
    pass


class HasTorsion(GTutteError, ValueError):
    """An operation that needs a free group Z^l was given one with relations."""
