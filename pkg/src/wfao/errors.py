"""Exception types shared across the package."""


class WFAError(Exception):
    """Base class for errors raised by this package."""


class SemiringMismatch(WFAError, TypeError):
    pass


class CarrierError(WFAError, ValueError):
    pass


class IndexMismatch(WFAError, ValueError):
    """Vectors or matrices indexed by different state lists were combined."""


class UnknownSymbol(WFAError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown symbol"


class IncompatibleSemantics(WFAError, ValueError):
    pass


class NotCrispError(WFAError, ValueError):
    pass


class EnumerationTooLarge(WFAError, ValueError):
    pass


class InvalidAutomaton(WFAError, ValueError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


class ConditionUnsatisfied(WFAError, ValueError):
    """No admissible additive multiplier exists for the sequential-to-Mealy conversion."""

    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class NoTheorem(WFAError, ValueError):
    pass


class FormatError(WFAError, ValueError):
    """A malformed automaton document."""
