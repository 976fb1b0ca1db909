"""
Search budget - node and wall-clock limits for branch-and-bound

Functional pattern: tick() returns a result carrying the next state
instead of mutating the budget.
"""

import time
from collections.abc import Callable
from dataclasses import dataclass, field

Clock = Callable[[], float]


@dataclass(frozen=True)
class BudgetConfig:
    """
    Search limits

    Attributes:
        max_nodes: Maximum number of expanded search states
        max_seconds: Wall-clock limit (None = unlimited)
    """

    max_nodes: int = 5_000_000
    max_seconds: float | None = 600.0


UNLIMITED = BudgetConfig(max_nodes=2**62, max_seconds=None)


@dataclass(frozen=True)
class Continue:
    """Node allowed - contains the new state"""

    new_state: "SearchBudget"


@dataclass(frozen=True)
class Exhausted:
    """Budget spent - the search must stop and report exhaustive=False"""

    reason: str
    current_state: "SearchBudget"


BudgetResult = Continue | Exhausted


@dataclass(frozen=True)
class SearchBudget:
    """
    Budget state: nodes spent so far and the start time

    The clock is injectable so tests can simulate a timeout.
    """

    config: BudgetConfig = field(default_factory=BudgetConfig)
    nodes: int = 0
    started: float | None = None
    clock: Clock = time.monotonic

    # Wall clock is consulted once per this many nodes
    CLOCK_STRIDE = 1024

    def start(self) -> "SearchBudget":
        return SearchBudget(config=self.config, nodes=0, started=self.clock(), clock=self.clock)

    def tick(self) -> BudgetResult:
        """
        Spend one node

        Returns:
            Continue(new_state) or Exhausted(reason, current_state)
        """
        if self.nodes >= self.config.max_nodes:
            return Exhausted(reason=f"node budget {self.config.max_nodes} spent", current_state=self)
        if (
            self.config.max_seconds is not None
            and self.started is not None
            and self.nodes % self.CLOCK_STRIDE == 0
            and self.elapsed() > self.config.max_seconds
        ):
            return Exhausted(
                reason=f"time budget {self.config.max_seconds}s spent", current_state=self
            )
        return Continue(
            new_state=SearchBudget(
                config=self.config, nodes=self.nodes + 1, started=self.started, clock=self.clock
            )
        )

    def elapsed(self) -> float:
        if self.started is None:
            return 0.0
        return self.clock() - self.started
