"""Exception types shared across the package."""


class CausalModalError(Exception):
    """Base class for all package errors."""


class ParseError(CausalModalError):
    """Formula syntax error, carrying the byte offset and the expected tokens."""

    def __init__(self, offset, expected, found):
        self.offset = offset
        self.expected = tuple(sorted(expected))
        self.found = found
        super().__init__(
            f"syntax error at byte {offset}: expected one of "
            f"{{{', '.join(self.expected)}}}, found {found!r}"
        )


class UnknownWorld(CausalModalError):
    """A world identifier is not declared in the frame."""


class NotTransitive(CausalModalError):
    """Operation requires a transitive frame."""


class PreconditionFailed(CausalModalError):
    """Inputs do not satisfy a documented precondition; names what is missing."""


class BudgetExceeded(CausalModalError):
    """Exhaustive enumeration would exceed the allowed budget."""

    def __init__(self, required, budget):
        self.required = required
        self.budget = budget
        super().__init__(f"enumeration needs {required} valuations, budget is {budget}")


class UnsupportedAxiom(CausalModalError):
    """No first-order correspondent is implemented for this axiom."""


class DimensionMismatch(CausalModalError):
    """Points do not live in the same space."""


class InvariantViolation(CausalModalError):
    """A causal-frame invariant failed validation; names the invariant."""

    def __init__(self, invariant, witness=None):
        self.invariant = invariant
        self.witness = witness
        detail = f" at {witness}" if witness is not None else ""
        super().__init__(f"causal-frame invariant violated: {invariant}{detail}")


class WitnessSearchExhausted(CausalModalError):
    """A witness search hit its iteration cap; per the existence theorems this
    indicates a defect, not an expected outcome."""
