"""Shared exception types."""

from __future__ import annotations


class BudgetError(ValueError):
    """An enumeration would exceed its configured budget."""

    def __init__(self, required: int, budget: int, what: str = "enumeration"):
        super().__init__(f"{what} needs {required}, which exceeds the budget of {budget}")
        self.required = required
        self.budget = budget
