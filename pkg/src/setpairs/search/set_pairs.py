"""
Exhaustive / branch-and-bound optima over set-pair systems

Candidates are single (A, B) pairs with |A ∩ B| <= t; candidate e may follow
candidate c iff |A_c ∩ B_e| > t (and, for strong systems, |A_e ∩ B_c| > t).
A valid system never repeats an A or a B, which gives the two groupings the
engine bounds with.
"""

import math
from collections.abc import Callable, Sequence
from fractions import Fraction

from loguru import logger

from ..core.error_types import ResourceCapError, ValidationError
from ..core.types import SetPairSystem, full_mask
from ..core.weights import pair_weight
from .budget import SearchBudget
from .engine import BranchAndBound, SearchOutcome
from .reports import BoundComparison, SearchKind, SearchReport, verify_report

# Ground-size caps per mode
MAX_RESTRICTED_N = 4
MAX_UNRESTRICTED_N = 3
MAX_T_SYSTEM_N = 4

Masks = list[tuple[int, int]]
Follows = Callable[[Masks], list[int]]


def scale_values(values: Sequence[Fraction]) -> tuple[list[int], int]:
    """Integers v_c * L for the least common denominator L"""
    scale = math.lcm(*(value.denominator for value in values)) if values else 1
    return [int(value * scale) for value in values], scale


def _check_n(n: int, cap: int, what: str) -> None:
    if n < 0:
        raise ValidationError(f"n must be >= 0, got {n}", field="n")
    if n > cap:
        raise ResourceCapError(f"{what} is capped at n = {cap}", limit=cap, requested=n)


def full_pairs(n: int) -> Masks:
    full = full_mask(n)
    return [(a, full ^ a) for a in range(1 << n)]


def intersecting_pairs(n: int, t: int) -> Masks:
    """All (A, B) over [n] with |A ∩ B| <= t (t = 0: disjoint pairs)"""
    full = full_mask(n)
    pairs = []
    for a in range(1 << n):
        if t == 0:
            rest = full ^ a
            b = rest
            while True:
                pairs.append((a, b))
                if b == 0:
                    break
                b = (b - 1) & rest
        else:
            pairs.extend((a, b) for b in range(1 << n) if (a & b).bit_count() <= t)
    return pairs


def skew_follows(masks: Masks, t: int = 0) -> list[int]:
    return [
        sum(1 << e for e, (_, b_e) in enumerate(masks) if (a_c & b_e).bit_count() > t)
        for a_c, _ in masks
    ]


def strong_follows(masks: Masks, t: int = 0) -> list[int]:
    return [
        sum(
            1 << e
            for e, (a_e, b_e) in enumerate(masks)
            if (a_c & b_e).bit_count() > t and (a_e & b_c).bit_count() > t
        )
        for a_c, b_c in masks
    ]


def _order(masks: Masks, values: Sequence[Fraction]) -> tuple[Masks, list[Fraction]]:
    """Heaviest candidates first, then larger A, then ascending masks"""
    order = sorted(
        range(len(masks)),
        key=lambda c: (-values[c], -masks[c][0].bit_count(), masks[c]),
    )
    return [masks[c] for c in order], [values[c] for c in order]


def _groupings(masks: Masks) -> list[list[int]]:
    return [[a for a, _ in masks], [b for _, b in masks]]


def _search(
    masks: Masks,
    values: Sequence[Fraction],
    follows: list[int],
    prune: bool,
    collect_optima: bool,
    budget: SearchBudget | None,
) -> tuple[SearchOutcome, int, float]:
    scaled, scale = scale_values(values)
    engine = BranchAndBound(
        values=scaled,
        follows=follows,
        groupings=_groupings(masks),
        prune=prune,
        collect_optima=collect_optima,
        budget=budget or SearchBudget(),
    )
    outcome = engine.run()
    return outcome, scale, engine.elapsed


def _report(
    kind: SearchKind,
    n: int,
    masks: Masks,
    outcome: SearchOutcome,
    scale: int,
    elapsed: float,
    bound: Fraction,
    *,
    t: int | None = None,
    variant: str = "skew",
    mode: str = "unrestricted",
    **extra: object,
) -> SearchReport:
    optimum = Fraction(outcome.best, scale)
    witness = SetPairSystem.from_masks(n, (masks[c] for c in outcome.witness))
    report = SearchReport(
        kind=kind,
        n=n,
        t=t,
        variant=variant,
        mode=mode,
        optimum=str(optimum),
        witness=witness,
        nodes_explored=outcome.nodes,
        wall_time=elapsed,
        exhaustive=outcome.exhaustive,
        bound=str(bound),
        comparison=BoundComparison.of(optimum, bound),
        stop_reason=outcome.stop_reason,
        **extra,  # type: ignore[arg-type]
    )
    logger.info(
        f"{kind.value} n={n}: optimum {report.optimum} vs bound {report.bound} "
        f"({report.comparison.value}), {outcome.nodes} nodes"
    )
    return verify_report(report)


def max_skew_weight(
    n: int,
    restricted: bool = False,
    prune: bool = True,
    budget: SearchBudget | None = None,
) -> SearchReport:
    """
    Maximum weight of a skew Bollobás system on [n]

    Unrestricted mode searches all disjoint pairs (n <= 3); restricted mode
    only complementary pairs (A, [n] \\ A), where every optimum lives (n <= 4).

    Raises:
        ResourceCapError: Above the mode's cap
    """
    cap = MAX_RESTRICTED_N if restricted else MAX_UNRESTRICTED_N
    _check_n(n, cap, "restricted skew search" if restricted else "unrestricted skew search")
    candidates = full_pairs(n) if restricted else intersecting_pairs(n, 0)
    masks, values = _order(candidates, [pair_weight(a.bit_count(), b.bit_count()) for a, b in candidates])
    outcome, scale, elapsed = _search(masks, values, skew_follows(masks), prune, False, budget)
    return _report(
        SearchKind.SKEW_WEIGHT, n, masks, outcome, scale, elapsed, Fraction(n + 1),
        mode="restricted" if restricted else "unrestricted",
    )


def equality_report(n: int, budget: SearchBudget | None = None) -> SearchReport:
    """
    Unrestricted skew search collecting every optimal system, reporting whether
    all of them consist of complementary pairs at weight n + 1

    Raises:
        ResourceCapError: If n > 3
    """
    _check_n(n, MAX_UNRESTRICTED_N, "equality structure search")
    candidates = intersecting_pairs(n, 0)
    masks, values = _order(candidates, [pair_weight(a.bit_count(), b.bit_count()) for a, b in candidates])
    outcome, scale, elapsed = _search(masks, values, skew_follows(masks), True, True, budget)

    full = full_mask(n)
    all_full = all(
        all(masks[c][0] | masks[c][1] == full for c in range(len(masks)) if placed >> c & 1)
        for placed in outcome.optima
    )
    holds = Fraction(outcome.best, scale) == n + 1 and all_full
    return _report(
        SearchKind.EQUALITY, n, masks, outcome, scale, elapsed, Fraction(n + 1),
        equality_holds=holds, optima_count=len(outcome.optima),
    )


def equality_structure(n: int, budget: SearchBudget | None = None) -> bool:
    """
    True iff every optimum skew system on [n] has weight n + 1 and
    B_i = [n] \\ A_i for all i

    Raises:
        ResourceCapError: If n > 3 or the budget ran out before all optima were seen
    """
    report = equality_report(n, budget)
    if not report.exhaustive:
        raise ResourceCapError(f"Equality search on n={n} stopped early: {report.stop_reason}")
    return bool(report.equality_holds)


def max_strong_weight(
    n: int, prune: bool = True, budget: SearchBudget | None = None
) -> SearchReport:
    """
    Maximum weight of a Bollobás system (both directions) on [n]

    Raises:
        ResourceCapError: If n > 3
    """
    _check_n(n, MAX_UNRESTRICTED_N, "strong weight search")
    candidates = intersecting_pairs(n, 0)
    masks, values = _order(candidates, [pair_weight(a.bit_count(), b.bit_count()) for a, b in candidates])
    outcome, scale, elapsed = _search(masks, values, strong_follows(masks), prune, False, budget)
    return _report(
        SearchKind.STRONG_WEIGHT, n, masks, outcome, scale, elapsed, Fraction(1), variant="strong"
    )


def max_t_system_size(
    n: int, t: int, prune: bool = True, budget: SearchBudget | None = None
) -> SearchReport:
    """
    Maximum size of a skew Bollobás t-system on [n]

    Raises:
        ValidationError: If t is outside 0..n
        ResourceCapError: If n > 4
    """
    _check_n(n, MAX_T_SYSTEM_N, "t-system search")
    if not 0 <= t <= n:
        raise ValidationError(f"t must satisfy 0 <= t <= n={n}, got {t}", field="t")
    candidates = intersecting_pairs(n, t)
    masks, values = _order(candidates, [Fraction(1)] * len(candidates))
    outcome, scale, elapsed = _search(masks, values, skew_follows(masks, t), prune, False, budget)
    return _report(
        SearchKind.T_SYSTEM_SIZE, n, masks, outcome, scale, elapsed, Fraction(2 ** (n - t)), t=t
    )
