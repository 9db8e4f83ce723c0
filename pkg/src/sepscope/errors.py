"""Exception types shared across the package."""
from __future__ import annotations


class GraphInputError(ValueError):
    """Malformed graph input: out-of-range vertex, loop, missing edge."""


class Graph6ParseError(GraphInputError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class ParameterError(ValueError):
    """Family parameters outside their admissible range."""


class CreatureAxiomError(ParameterError):
    def __init__(self, axiom: str, detail: str):
        super().__init__(f"creature axiom ({axiom}) violated: {detail}")
        self.axiom = axiom


class CapabilityError(RuntimeError):
    """Input exceeds the hard size cap of an exhaustive routine."""


class BudgetExceeded(RuntimeError):
    """A pruned search ran out of node budget; the answer is unknown."""

    def __init__(self, budget: int):
        super().__init__(f"search budget of {budget} nodes exhausted")
        self.budget = budget


class SeparatorOverflow(RuntimeError):
    """Minimal separator enumeration passed its cap."""

    def __init__(self, cap: int, partial_count: int):
        super().__init__(f"more than {cap} minimal separators")
        self.cap = cap
        self.partial_count = partial_count


class ModelError(ValueError):
    """An induced minor model or witness failed validation."""
