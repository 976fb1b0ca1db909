"""
Ordering feasibility - does some order of a set of pairs make it skew?
"""

from collections.abc import Iterable

from ..core.error_types import ResourceCapError
from ..core.types import SetPair

MAX_ORDERING_PAIRS = 24


def ordering_feasible(pairs: Iterable[SetPair]) -> list[SetPair] | None:
    """
    An order of the pairs that is a skew Bollobás system, or None

    Backtracks over positions: the next pair c must satisfy A_i ∩ B_c ≠ ∅ for
    every placed i. Placed sets already known to be dead ends are skipped.
    Candidates are tried in ascending (A, B) mask order, so the result is
    deterministic.

    Raises:
        ResourceCapError: If more than 24 distinct pairs are given
    """
    items = sorted(set(pairs), key=lambda pair: (pair.a, pair.b))
    if len(items) > MAX_ORDERING_PAIRS:
        raise ResourceCapError(
            "ordering_feasible backtracks over subsets of the pairs",
            limit=MAX_ORDERING_PAIRS,
            requested=len(items),
        )
    if any(pair.a & pair.b for pair in items):
        return None

    size = len(items)
    follows = [
        sum(1 << e for e, later in enumerate(items) if earlier.a & later.b)
        for earlier in items
    ]
    dead: set[int] = set()
    order: list[int] = []

    def extend(placed: int, avail: int) -> bool:
        if placed == (1 << size) - 1:
            return True
        if placed in dead:
            return False
        rest = avail & ~placed
        while rest:
            low = rest & -rest
            c = low.bit_length() - 1
            rest ^= low
            order.append(c)
            if extend(placed | low, avail & follows[c]):
                return True
            order.pop()
        dead.add(placed)
        return False

    if not extend(0, (1 << size) - 1):
        return None
    return [items[c] for c in order]
