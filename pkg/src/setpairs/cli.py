"""
Command-line front end

    setpairs verify    --input FILE [--variant skew|strong] [--t T]
    setpairs weight    --input FILE [--variant skew|strong]  (default: the strongest passing)
    setpairs construct {full-power-set,t-system,furedi,lex-dpartitions,composition,saturate} ...
    setpairs certify   --input FILE [--t T] [--uniform]
    setpairs search    {skew-weight,equality,strong-weight,t-system,dpartition} ...

Exit codes: 0 pass, 1 verified-false, 2 input error, 3 resource cap
(including searches that ran out of budget).
"""

import argparse
import json
import sys
import time
from collections.abc import Iterator, Sequence
from fractions import Fraction
from typing import Any

import numpy as np
import pydantic
from loguru import logger
from pydantic import BaseModel, ConfigDict, Field
from tqdm import tqdm

from .constructions import (
    all_full_dpartitions,
    full_power_set_system,
    furedi_construction,
    lex_full_dpartitions,
    saturate,
    saturate_dpartitions,
    t_system_construction,
)
from .core.config import Settings, load_settings
from .core.counting import binomial, format_rational
from .core.error_types import (
    GeneralPositionError,
    InvariantError,
    ParseError,
    ResourceCapError,
    SetPairError,
    ValidationError,
)
from .core.types import DPartitionSystem, SetPairSystem
from .core.weights import dweight, weight
from .exterior import PrimeField, certify_skew_system, certify_uniform_system, lift_set_system
from .search import (
    BoundComparison,
    BudgetConfig,
    SearchBudget,
    SearchReport,
    equality_report,
    max_dpartition_weight,
    max_skew_weight,
    max_strong_weight,
    max_t_system_size,
)
from .storage import ReportArchive, SystemReader, SystemWriter
from .storage.jsonl import System
from .validation import find_dpartition_violation, find_violation

EXIT_PASS = 0
EXIT_FALSE = 1
EXIT_INPUT = 2
EXIT_CAP = 3


class RunConfig(BaseModel):
    """
    Everything needed to replay a command

    Attributes:
        subcommand: verify / weight / construct / certify / search
        target: Construction or search kind, if any
        inputs: Input files
        output: Output file (None = standard output)
        field_modulus: Prime of the coefficient field
        seed: Seed of every random choice
        node_budget / time_budget_s: Search limits
        parameters: Remaining command parameters (n, t, d, variant, ...)
    """

    subcommand: str
    target: str | None = None
    inputs: list[str] = Field(default_factory=list)
    output: str | None = None
    field_modulus: int
    seed: int
    node_budget: int
    time_budget_s: float
    parameters: dict[str, Any] = Field(default_factory=dict)

    model_config = ConfigDict(frozen=True)


def configure_logging(level: str) -> None:
    logger.remove()
    logger.add(
        sys.stderr,
        level=level.upper(),
        format="<green>{time:HH:mm:ss}</green> | <level>{level: <8}</level> | {message}",
    )


def _effective_settings(args: argparse.Namespace) -> Settings:
    """Defaults < .env < environment < flags"""
    settings = load_settings(args.env_file)
    overrides = {
        "field_prime": args.field_prime,
        "seed": args.seed,
        "node_budget": args.node_budget,
        "time_budget_s": args.time_budget,
        "log_level": args.log_level,
    }
    data = settings.model_dump()
    data.update({key: value for key, value in overrides.items() if value is not None})
    return Settings.model_validate(data)


def _run_config(args: argparse.Namespace, settings: Settings) -> RunConfig:
    parameters = {
        key: value
        for key, value in vars(args).items()
        if key
        not in {
            "command", "target", "input", "output", "field_prime", "seed", "node_budget",
            "time_budget", "log_level", "env_file", "progress", "handler",
        }
        and value is not None
    }
    return RunConfig(
        subcommand=args.command,
        target=getattr(args, "target", None),
        inputs=[args.input] if getattr(args, "input", None) else [],
        output=args.output,
        field_modulus=settings.field_prime,
        seed=settings.seed,
        node_budget=settings.node_budget,
        time_budget_s=settings.time_budget_s,
        parameters=parameters,
    )


def _systems(args: argparse.Namespace) -> Iterator[tuple[int, System]]:
    if not getattr(args, "input", None):
        raise ValidationError("--input is required", field="input")
    return iter(tqdm(SystemReader(args.input), desc="systems", unit="sys", disable=not args.progress, file=sys.stderr))


def _write_records(args: argparse.Namespace, records: list[dict[str, Any]]) -> None:
    if args.output is None:
        return
    with SystemWriter(args.output) as writer:
        for record in records:
            writer.write_record(record)


# ----------------------------------------------------------------- verify


def cmd_verify(args: argparse.Namespace, settings: Settings, run: RunConfig) -> int:
    skew = args.variant == "skew"
    t = args.t or 0
    if t < 0:
        raise ValidationError(f"t must be non-negative, got {t}", field="t")
    records = []
    all_pass = True
    for index, (line_number, system) in enumerate(_systems(args), start=1):
        if isinstance(system, DPartitionSystem):
            cell = find_dpartition_violation(system, skew=skew)
            detail = None if cell is None else f"members ({cell[0] + 1}, {cell[1] + 1}) do not orderly overlap"
            verdict = cell is None
            if not skew:
                literal = find_dpartition_violation(system, skew=True) is None
                detail = (detail or "orderly overlap in both directions") + (
                    f"; skew reading {'passes' if literal else 'fails'}"
                )
            violation = None if cell is None else [cell[0] + 1, cell[1] + 1]
        else:
            if t > system.n:
                raise ValidationError(f"t must satisfy 0 <= t <= n={system.n}, got {t}", field="t")
            found = find_violation(system, t=t, skew=skew)
            verdict = found is None
            detail = None if found is None else found.describe()
            violation = None if found is None else [found.i + 1, found.j + 1]

        all_pass = all_pass and verdict
        label = "PASS" if verdict else "FAIL"
        line = f"system {index} (line {line_number}): {label} {args.variant}"
        if detail:
            line += f": {detail}"
        print(line)
        records.append(
            {
                "system": index,
                "line": line_number,
                "variant": args.variant,
                "t": t,
                "verdict": verdict,
                "violation": violation,
                "run": run.model_dump(mode="json"),
            }
        )
    _write_records(args, records)
    return EXIT_PASS if all_pass else EXIT_FALSE


# ----------------------------------------------------------------- weight


def weight_bound(system: System, variant: str | None = None) -> tuple[Fraction, Fraction, str]:
    """
    (weight, applicable bound, suffix naming the bound)

    Without a variant the bound is the strong one when the system passes the
    strong verifier, and the skew one otherwise.
    """
    if variant is None:
        variant = "strong" if _passes_strong(system) else "skew"
    if isinstance(system, DPartitionSystem):
        value = dweight(system)
        if variant == "strong":
            return value, Fraction(system.d - 1), f" for d={system.d} strong"
        return value, Fraction(binomial(system.n + system.d - 1, system.d - 1)), f" for d={system.d} skew"
    value = weight(system)
    if variant == "strong":
        return value, Fraction(1), ""
    return value, Fraction(system.n + 1), ""


def _passes_strong(system: System) -> bool:
    if isinstance(system, DPartitionSystem):
        return system.d >= 2 and find_dpartition_violation(system, skew=False) is None
    return find_violation(system, t=0, skew=False) is None


def cmd_weight(args: argparse.Namespace, settings: Settings, run: RunConfig) -> int:
    records = []
    for index, (line_number, system) in enumerate(_systems(args), start=1):
        value, bound, suffix = weight_bound(system, args.variant)
        comparison = BoundComparison.of(value, bound)
        print(
            f"system {index}: {format_rational(value)} of bound {bound}{suffix} "
            f"({comparison.value.upper()})"
        )
        records.append(
            {
                "system": index,
                "line": line_number,
                "weight": format_rational(value),
                "bound": format_rational(bound),
                "comparison": comparison.value,
                "run": run.model_dump(mode="json"),
            }
        )
    _write_records(args, records)
    return EXIT_PASS


# ----------------------------------------------------------------- construct


def _parts(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise ValidationError(f"--parts must be comma-separated integers, got {text!r}", field="parts") from exc


def _require(args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{name}" for name in names if getattr(args, name, None) is None]
    if missing:
        raise ValidationError(f"{args.target} needs {', '.join(missing)}", field=",".join(missing))


def _constructed(args: argparse.Namespace) -> Iterator[System]:
    target = args.target
    if target == "full-power-set":
        _require(args, "n")
        yield full_power_set_system(args.n)
    elif target == "t-system":
        _require(args, "n", "t")
        yield t_system_construction(args.n, args.t)
    elif target == "furedi":
        _require(args, "a", "b", "t")
        yield furedi_construction(args.a, args.b, args.t)
    elif target == "lex-dpartitions":
        _require(args, "n", "d")
        yield lex_full_dpartitions(args.n, args.d)
    elif target == "composition":
        _require(args, "parts")
        yield all_full_dpartitions(_parts(args.parts))
    elif target == "saturate":
        for _, system in _systems(args):
            if isinstance(system, DPartitionSystem):
                yield saturate_dpartitions(system)
            else:
                yield saturate(system)


def cmd_construct(args: argparse.Namespace, settings: Settings, run: RunConfig) -> int:
    extra = {"run": run.model_dump(mode="json")}
    with SystemWriter(args.output) as writer:
        for system in _constructed(args):
            writer.write(system, extra)
            logger.info(f"{args.target}: wrote a system of size {len(system)} on n={system.n}")
    return EXIT_PASS


# ----------------------------------------------------------------- certify


def cmd_certify(args: argparse.Namespace, settings: Settings, run: RunConfig) -> int:
    field = PrimeField(settings.field_prime)
    t = args.t or 0
    records = []
    all_pass = True
    for index, (_, system) in enumerate(_systems(args), start=1):
        if not isinstance(system, SetPairSystem):
            raise ValidationError("Certificates apply to set-pair systems", field="input")
        pairs = lift_set_system(system, field)
        rng = np.random.default_rng(settings.seed)
        if args.uniform:
            certificate = certify_uniform_system(
                pairs, t, field, rng, seed=settings.seed, max_tries=settings.max_tries
            )
        else:
            certificate = certify_skew_system(
                pairs, t, field, rng, seed=settings.seed, max_tries=settings.max_tries, ambient=system.n
            )
        all_pass = all_pass and certificate.verdict
        summary = (
            f"system {index}: verdict {certificate.verdict}, m={certificate.m}, "
            f"rank={certificate.rank}, bound={certificate.bound}"
        )
        if certificate.violation is not None:
            summary += f", hypothesis fails at cell {tuple(certificate.violation)}"
        print(summary)
        records.append({"certificate": certificate.to_json(), "run": run.model_dump(mode="json")})

    if args.output is not None:
        _write_records(args, records)
    else:
        for record in records:
            print(json.dumps(record))
    return EXIT_PASS if all_pass else EXIT_FALSE


# ----------------------------------------------------------------- search


def _search(args: argparse.Namespace, budget: SearchBudget) -> SearchReport:
    target = args.target
    prune = not args.no_prune
    if target == "skew-weight":
        _require(args, "n")
        return max_skew_weight(args.n, restricted=args.restricted, prune=prune, budget=budget)
    if target == "equality":
        _require(args, "n")
        return equality_report(args.n, budget=budget)
    if target == "strong-weight":
        _require(args, "n")
        return max_strong_weight(args.n, prune=prune, budget=budget)
    if target == "t-system":
        _require(args, "n", "t")
        return max_t_system_size(args.n, args.t, prune=prune, budget=budget)
    _require(args, "n", "d")
    return max_dpartition_weight(args.n, args.d, skew=args.variant == "skew", prune=prune, budget=budget)


def cmd_search(args: argparse.Namespace, settings: Settings, run: RunConfig) -> int:
    budget = SearchBudget(BudgetConfig(max_nodes=settings.node_budget, max_seconds=settings.time_budget_s))
    started = time.time()
    report = _search(args, budget)
    print(report.table())

    document = {
        "run": run.model_dump(mode="json"),
        "report": report.to_json(),
        "timing": {"wall_time": report.wall_time, "started_at": started},
    }
    if args.output is not None:
        with SystemWriter(args.output) as writer:
            writer.write_record(document)
    if args.archive:
        ReportArchive(args.archive).append(report)
        logger.info(f"archived {report.kind.value} into {args.archive}")
    return EXIT_PASS if report.exhaustive else EXIT_CAP


# ----------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="JSON-lines system file ('-' = stdin)")
    common.add_argument("--output", help="Output file (default: stdout only)")
    common.add_argument("--field-prime", type=int, help="Prime modulus of the coefficient field")
    common.add_argument("--seed", type=int, help="Seed for general position sampling")
    common.add_argument("--node-budget", type=int, help="Search node budget")
    common.add_argument("--time-budget", type=float, help="Search wall-clock budget (seconds)")
    common.add_argument("--log-level", help="loguru level (DEBUG, INFO, WARNING, ...)")
    common.add_argument("--env-file", help=".env file with SETPAIRS_* overrides")
    common.add_argument("--progress", action="store_true", help="Progress bar over input systems")
    common.add_argument("--variant", choices=["skew", "strong"], default="skew")
    common.add_argument("--t", type=int, help="Intersection parameter t")
    common.add_argument("--d", type=int, help="Blocks per d-partition")
    common.add_argument("--n", type=int, help="Ground set size")

    parser = argparse.ArgumentParser(
        prog="setpairs",
        description="Bollobás-type set-pair systems: verify, weigh, construct, certify, search",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    commands.add_parser("verify", parents=[common], help="Check systems against a variant")
    weight_command = commands.add_parser(
        "weight", parents=[common], help="Exact weights against their bounds"
    )
    weight_command.set_defaults(variant=None)

    construct = commands.add_parser("construct", parents=[common], help="Write extremal systems")
    construct.add_argument(
        "target",
        choices=["full-power-set", "t-system", "furedi", "lex-dpartitions", "composition", "saturate"],
    )
    construct.add_argument("--a", type=int, help="|A| - t for the uniform construction")
    construct.add_argument("--b", type=int, help="|B| - t for the uniform construction")
    construct.add_argument("--parts", help="Block sizes, e.g. 1,1,1")

    certify = commands.add_parser("certify", parents=[common], help="Exterior-algebra certificates")
    certify.add_argument("--uniform", action="store_true", help="Certify the C(a+b, a) bound")

    search = commands.add_parser("search", parents=[common], help="Exhaustive optima")
    search.add_argument(
        "target", choices=["skew-weight", "equality", "strong-weight", "t-system", "dpartition"]
    )
    search.add_argument("--restricted", action="store_true", help="Complementary pairs only")
    search.add_argument("--no-prune", action="store_true", help="Plain exhaustive walk")
    search.add_argument("--archive", help="Parquet archive directory for the report")
    return parser


HANDLERS = {
    "verify": cmd_verify,
    "weight": cmd_weight,
    "construct": cmd_construct,
    "certify": cmd_certify,
    "search": cmd_search,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        settings = _effective_settings(args)
    except pydantic.ValidationError as exc:
        print(f"error: invalid settings: {exc}", file=sys.stderr)
        return EXIT_INPUT
    configure_logging(settings.log_level)
    run = _run_config(args, settings)

    try:
        return HANDLERS[args.command](args, settings, run)
    except ParseError as exc:
        location = f" (line {exc.line_number})" if exc.line_number is not None else ""
        print(f"error: {exc.message}{location}", file=sys.stderr)
        return EXIT_INPUT
    except (ValidationError, pydantic.ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ResourceCapError, GeneralPositionError) as exc:
        print(f"error: {exc.message} {exc.context}", file=sys.stderr)
        return EXIT_CAP
    except InvariantError as exc:
        logger.error(f"internal consistency check failed: {exc.message} {exc.context}")
        return EXIT_FALSE
    except SetPairError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
