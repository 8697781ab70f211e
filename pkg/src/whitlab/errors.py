"""Shared exception types for enumeration and verification budgets."""

from __future__ import annotations


class CapExceeded(RuntimeError):
    """An enumeration or closure would exceed its configured cap.

    Carries the cap name so callers (and the CLI exit-code contract) can
    report which limit was hit and what the estimated size was.
    """

    def __init__(self, cap_name: str, cap_value: int, estimate: int):
        self.cap_name = cap_name
        self.cap_value = cap_value
        self.estimate = estimate
        super().__init__(
            f"{cap_name} cap exceeded: estimated {estimate} > cap {cap_value}"
        )


class BudgetExceeded(RuntimeError):
    """A verification run overran its wall-clock budget."""

    def __init__(self, budget_sec: float, elapsed_sec: float):
        self.budget_sec = budget_sec
        self.elapsed_sec = elapsed_sec
        super().__init__(
            f"time budget exceeded: {elapsed_sec:.1f}s elapsed > {budget_sec:.1f}s budget"
        )
