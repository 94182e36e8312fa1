"""Shared exception types."""


class ConsistencyError(RuntimeError):
    """An internal identity that is supposed to be a theorem failed to hold."""


class BudgetExceededError(ValueError):
    """A search space is larger than the configured enumeration budget."""

    def __init__(self, required: int, budget: int):
        super().__init__(
            f"space requires enumerating {required} candidates, budget is {budget}"
        )
        self.required = required
        self.budget = budget


class DistanceMismatchError(RuntimeError):
    """A built matrix failed verification against its predicted distance."""

    def __init__(self, result):
        self.result = result
        super().__init__(
            f"measured d1 {result.profile.d1} != predicted {result.predicted_d1}"
        )
