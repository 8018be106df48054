"""Exception hierarchy shared by all diagplan modules."""


class DiagplanError(Exception):
    """Base class for all errors raised by this package."""


class ModelError(DiagplanError):
    """Invalid automaton or event definition."""


class ParseError(ModelError):
    """Syntax or semantic error in a DESM model file."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CompositionError(ModelError):
    """Conflicting event attributes between composed components."""


class SpliceError(ModelError):
    """A state selected for check splicing lacks the required label."""


class InconsistentObservation(DiagplanError):
    """An observation with no consistent transition in the diagnoser."""


class RootNotSolvable(DiagplanError):
    """Active-diagnosis session started from a state with no discriminable fault."""


class BudgetExhausted(DiagplanError):
    """No conditional plan exists within the given cost budget."""


class SearchLimitExceeded(DiagplanError):
    """Exhaustive plan evaluation exceeded its node bound."""


class PlanMismatch(DiagplanError):
    """Plan execution observed a response the plan has no branch for."""


class MappingError(DiagplanError):
    """A plan event has no service-call mapping during OBCP rendering."""
