"""Global budgets shared by every module.

Defaults can be overridden per process through environment variables
(``CLUTTERCX_VERTEX_CAP``, ``CLUTTERCX_ENUM_CAP``, ``CLUTTERCX_TIME_LIMIT``)
or per call by passing an explicit :class:`Budget`.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace
from typing import Optional


@dataclass(frozen=True)
class Budget:
    vertex_cap: int = 128
    enum_cap: int = 1_000_000
    time_limit: Optional[float] = None  # seconds; None = unbounded

    @classmethod
    def from_env(cls) -> "Budget":
        b = cls()
        if "CLUTTERCX_VERTEX_CAP" in os.environ:
            b = replace(b, vertex_cap=int(os.environ["CLUTTERCX_VERTEX_CAP"]))
        if "CLUTTERCX_ENUM_CAP" in os.environ:
            b = replace(b, enum_cap=int(os.environ["CLUTTERCX_ENUM_CAP"]))
        if "CLUTTERCX_TIME_LIMIT" in os.environ:
            b = replace(b, time_limit=float(os.environ["CLUTTERCX_TIME_LIMIT"]))
        return b


_budget = Budget.from_env()


def get_budget() -> Budget:
    return _budget


def set_budget(budget: Budget) -> None:
    global _budget
    _budget = budget


class BudgetExceeded(RuntimeError):
    """Raised when a computation would exceed a configured budget."""
