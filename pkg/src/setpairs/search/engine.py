"""
Branch-and-bound over sequences of candidates

A candidate c may follow the already placed candidates iff c is in
follows[p] for every placed p, so the candidates that can still be appended
depend only on the placed SET: avail = AND of follows[p]. The engine walks
placed sets depth-first, each set once, and prunes with

- an admissible bound: partial + min over the given groupings of the sum,
  per group, of the largest value still appendable (a valid system uses at
  most one candidate per group);
- dominance: a second visit of the same avail set with no better partial
  value cannot lead anywhere new.

Values are integers (weights scaled by a common denominator).
"""

from collections.abc import Sequence
from dataclasses import dataclass, field

from loguru import logger

from .budget import Continue, SearchBudget


@dataclass(frozen=True)
class SearchOutcome:
    """
    Raw result of one run

    Attributes:
        best: Optimal (or best found) total value
        witness: Candidate indices of one best sequence, in a valid order
        optima: Placed-set bitmasks attaining best (collect_optima only)
        nodes: Expanded states
        exhaustive: The whole space was covered
        stop_reason: Why the budget stopped the run
    """

    best: int
    witness: tuple[int, ...]
    optima: tuple[int, ...] = ()
    nodes: int = 0
    exhaustive: bool = True
    stop_reason: str | None = None


class _BudgetSpent(Exception):
    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


@dataclass
class BranchAndBound:
    """
    Maximize the total value of a valid sequence

    Args:
        values: Non-negative value per candidate
        follows: follows[c] = bitmask of candidates that may come after c
        groupings: Partitions of the candidates (group id per candidate) such
            that a valid sequence never uses two candidates of one group
        prune: Use the bound and dominance (off = plain exhaustive walk)
        collect_optima: Keep every placed set that attains the optimum
        budget: Node / time budget
    """

    values: Sequence[int]
    follows: Sequence[int]
    groupings: Sequence[Sequence[int]] = ()
    prune: bool = True
    collect_optima: bool = False
    budget: SearchBudget = field(default_factory=SearchBudget)

    def __post_init__(self) -> None:
        self._size = len(self.values)
        self._all = (1 << self._size) - 1
        self._follows = [f & ~(1 << c) for c, f in enumerate(self.follows)]
        self._best = 0
        self._witness: tuple[int, ...] = ()
        self._optima: set[int] = {0} if self.collect_optima else set()
        self._visited: set[int] = set()
        self._dominance: dict[int, int] = {}
        self._state = self.budget

    def bound(self, avail: int) -> int:
        """Admissible upper bound on the value still addable from avail"""
        total = 0
        rest = avail
        while rest:
            low = rest & -rest
            total += self.values[low.bit_length() - 1]
            rest ^= low
        for grouping in self.groupings:
            per_group: dict[int, int] = {}
            rest = avail
            while rest:
                low = rest & -rest
                c = low.bit_length() - 1
                if self.values[c] > per_group.get(grouping[c], -1):
                    per_group[grouping[c]] = self.values[c]
                rest ^= low
            total = min(total, sum(per_group.values()))
        return total

    def _tick(self) -> None:
        result = self._state.tick()
        if not isinstance(result, Continue):
            raise _BudgetSpent(result.reason)
        self._state = result.new_state

    def _record(self, placed: int, partial: int, path: list[int]) -> None:
        if partial > self._best:
            self._best = partial
            self._witness = tuple(path)
            if self.collect_optima:
                self._optima = {placed}
            logger.debug(f"search: incumbent {partial} after {self._state.nodes} nodes")
        elif partial == self._best and self.collect_optima:
            self._optima.add(placed)

    def _visit(self, placed: int, avail: int, partial: int, path: list[int]) -> None:
        if placed in self._visited:
            return
        self._visited.add(placed)
        self._tick()
        self._record(placed, partial, path)

        if self.prune:
            seen = self._dominance.get(avail)
            if seen is not None and (
                partial < seen or (partial == seen and not self.collect_optima)
            ):
                return
            self._dominance[avail] = partial if seen is None else max(seen, partial)
            ceiling = partial + self.bound(avail)
            if ceiling < self._best or (ceiling == self._best and not self.collect_optima):
                return

        rest = avail
        while rest:
            low = rest & -rest
            c = low.bit_length() - 1
            rest ^= low
            path.append(c)
            self._visit(placed | low, avail & self._follows[c], partial + self.values[c], path)
            path.pop()

    def run(self) -> SearchOutcome:
        self._state = self.budget.start() if self.budget.started is None else self.budget
        exhaustive, reason = True, None
        try:
            self._visit(0, self._all, 0, [])
        except _BudgetSpent as spent:
            exhaustive, reason = False, spent.reason
            logger.warning(f"search stopped early: {reason}")
        return SearchOutcome(
            best=self._best,
            witness=self._witness,
            optima=tuple(sorted(self._optima)),
            nodes=self._state.nodes,
            exhaustive=exhaustive,
            stop_reason=reason,
        )

    @property
    def elapsed(self) -> float:
        return self._state.elapsed()
