"""Command-line front end.

Exit codes: 0 success, 1 a checked property is unsatisfied, 2 bad input,
3 computational failure (no convergence, generation budget exhausted).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import io
from .argumentation import check_property, filter_library, get_property
from .bench import BenchPlan, desk_plan, full_plan, run_bench, summarize, write_records_csv, write_summary_csv
from .consensus import DEFAULT_EPSILON, DEFAULT_MAX_STEPS, DEFAULT_TIE_TOLERANCE, aggregate_weighting, run_consensus
from .errors import GenerationError, NoUniqueConsensusError, ValidationError
from .trust import DEFAULT_POWER_CHECK, GenerationConfig, diagnose, generate_convergent

EXIT_OK, EXIT_UNSATISFIED, EXIT_INPUT, EXIT_COMPUTE = 0, 1, 2, 3


class InputError(Exception):
    pass


def _load(path: str):
    try:
        return io.read_json(path)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _split(value: str) -> list[str]:
    return [v for v in (s.strip() for s in value.split(",")) if v]


def _parse_sizes(value: str) -> list[int]:
    """``50:500:50`` (inclusive range) or ``50,100,200``."""
    if ":" in value:
        parts = [int(p) for p in value.split(":")]
        if len(parts) == 2:
            parts.append(1)
        start, stop, step = parts
        if step < 1:
            raise argparse.ArgumentTypeError("size step must be >= 1")
        return list(range(start, stop + 1, step))
    return [int(v) for v in _split(value)]


def cmd_check(args) -> int:
    af = io.af_from_json(_load(args.af))
    weightings = io.weightings_from_json(_load(args.weighting))
    props = [get_property(p) for p in _split(args.properties)]
    ok = True
    for w in weightings:
        for p in props:
            verdict = check_property(af, w, p)
            ok &= verdict
            prefix = f"{w.name} " if len(weightings) > 1 else ""
            print(f"{prefix}{p.name}: {str(verdict).lower()}")
    return EXIT_OK if ok else EXIT_UNSATISFIED


def cmd_filter(args) -> int:
    af = io.af_from_json(_load(args.af))
    candidates = io.weightings_from_json(_load(args.weightings))
    lib = filter_library(af, candidates, _split(args.properties))
    _emit(io.dumps([io.weighting_to_json(w) for w in lib]), args.output)
    return EXIT_OK


def cmd_consensus(args) -> int:
    profile = io.profile_from_json(_load(args.profile))
    matrix = io.matrix_from_json(_load(args.matrix))
    af = weightings = None
    if args.af or args.weightings:
        if not (args.af and args.weightings):
            raise InputError("--af and --weightings must be given together")
        af = io.af_from_json(_load(args.af))
        weightings = {w.name: w for w in io.weightings_from_json(_load(args.weightings))}
        missing = [w for w in profile.weightings if w not in weightings]
        if missing:
            raise InputError(f"profile references weightings not in {args.weightings}: {missing}")
        weightings = [weightings[w] for w in profile.weightings]
    problem = diagnose(matrix)
    if problem:
        raise InputError(f"{args.matrix}: {problem}")
    result = run_consensus(matrix, profile, args.epsilon, args.tie_tolerance, af, weightings, args.max_steps)
    _emit(io.dumps(io.result_to_json(result)), args.output)
    if not result.converged:
        print(f"no consensus after {result.steps} squarings (spread {result.spread:.3g})", file=sys.stderr)
        return EXIT_COMPUTE
    return EXIT_OK


def cmd_aggregate(args) -> int:
    af = io.af_from_json(_load(args.af))
    weightings = io.weightings_from_json(_load(args.weightings))
    data = _load(args.scores)
    scores = data["consensus_scores"] if isinstance(data, dict) and "consensus_scores" in data else data
    if not isinstance(scores, dict):
        raise InputError(f"{args.scores}: expected a map of weighting name to score")
    w = aggregate_weighting(af, weightings, {k: float(v) for k, v in scores.items()}, name=args.name)
    _emit(io.dumps(io.weighting_to_json(w)), args.output)
    return EXIT_OK


def cmd_gen_matrix(args) -> int:
    config = GenerationConfig(args.size, args.seed, args.max_power_check, args.sparsity, args.max_attempts)
    try:
        m = generate_convergent(config)
    except GenerationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    _emit(io.dumps(io.matrix_to_json(m)), args.output)
    return EXIT_OK


def cmd_bench(args) -> int:
    if args.sizes is not None:
        sizes = args.sizes
    else:
        sizes = (full_plan() if args.full else desk_plan()).sizes
    plan = BenchPlan(tuple(sizes), tuple(float(e) for e in _split(args.eps)), args.reps, args.seed, args.max_steps)
    records = run_bench(plan, sparsity=args.sparsity, max_power_check=args.max_power_check, workers=args.workers,
                        timing_repeats=args.timing_repeats)
    out = Path(args.output)
    with open(out, "w", newline="") as fh:
        write_records_csv(records, fh)
    summary_path = Path(args.summary) if args.summary else out.with_name(out.stem + "_summary.csv")
    with open(summary_path, "w", newline="") as fh:
        write_summary_csv(summarize(records), fh)
    failed = sum(not r.converged for r in records)
    print(f"{len(records)} records -> {out}, summary -> {summary_path}" + (f" ({failed} not converged)" if failed else ""))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="trustcons", description="Trust-network consensus over argument weightings.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="evaluate properties of weightings over an AF")
    p.add_argument("af")
    p.add_argument("weighting", help="one weighting object or a list")
    p.add_argument("--properties", "-p", default="", help="comma-separated: void,card,self,all_different")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("filter", help="keep the weightings satisfying every property")
    p.add_argument("af")
    p.add_argument("weightings")
    p.add_argument("--properties", "-p", default="")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_filter)

    p = sub.add_parser("consensus", help="compute pi, S*, M* and optionally w*")
    p.add_argument("--profile", required=True)
    p.add_argument("--matrix", required=True)
    p.add_argument("--af")
    p.add_argument("--weightings")
    p.add_argument("--epsilon", type=float, default=DEFAULT_EPSILON)
    p.add_argument("--tie-tolerance", type=float, default=DEFAULT_TIE_TOLERANCE)
    p.add_argument("--max-steps", type=int, default=DEFAULT_MAX_STEPS)
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_consensus)

    p = sub.add_parser("aggregate", help="aggregate weightings with given consensus scores")
    p.add_argument("af")
    p.add_argument("weightings")
    p.add_argument("scores", help="score map or a consensus result file")
    p.add_argument("--name", default="w*")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_aggregate)

    p = sub.add_parser("gen-matrix", help="generate a random trust matrix that reaches consensus")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--sparsity", type=float, default=0.0)
    p.add_argument("--max-power-check", type=int, default=DEFAULT_POWER_CHECK)
    p.add_argument("--max-attempts", type=int, default=1000)
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_gen_matrix)

    p = sub.add_parser("bench", help="time consensus on random matrices of increasing size")
    p.add_argument("--sizes", type=_parse_sizes, help="start:stop:step (inclusive) or a comma list; default 50:500:50")
    p.add_argument("--full", action="store_true", help="sizes 50:2000:50")
    p.add_argument("--eps", default="1e-3,1e-5")
    p.add_argument("--reps", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-steps", type=int, default=DEFAULT_MAX_STEPS)
    p.add_argument("--sparsity", type=float, default=0.0)
    p.add_argument("--max-power-check", type=int, default=DEFAULT_POWER_CHECK)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--timing-repeats", type=int, default=1, help="report the best of this many timed runs")
    p.add_argument("--output", "-o", default="bench.csv")
    p.add_argument("--summary")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (InputError, ValidationError, NoUniqueConsensusError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
