import argparse
import logging
import os
import sys
from typing import List, Optional

from dyckgen.algebra import LSeries
from dyckgen.cluster import exp_log_series, log_genfun_restricted, log_genfun_unbounded, log_secular
from dyckgen.constants import (
    DOUBLE_STEP_DIAMOND,
    METHOD_CLUSTER_EXP,
    METHOD_CONTINUED_FRACTION,
    METHOD_DETERMINANT,
    METHOD_ORACLE,
    STEP_PLAQUETTE,
    VERIFY_SUITES,
    VERSION,
)
from dyckgen.errors import CrossMethodMismatch, DyckgenError, GuardExceeded, SpecOutOfRange
from dyckgen.genfun import ConventionTag, GenSpec, continued_fraction, genfun, genfun_continued, prefactor
from dyckgen.oracle import enumerate_paths, genfun_from_table
from dyckgen.output import SpecEcho, UNBOUNDED, record_from_log, record_from_series, record_from_table, to_csv, to_json
from dyckgen.touchdown import tilde_from_excursion, tilde_genfun
from dyckgen.utils import build_logger
from dyckgen.verify import run_suites, save_log_file, save_to_json

logger = logging.getLogger("dyckgen")

METHODS = (METHOD_DETERMINANT, METHOD_CONTINUED_FRACTION, METHOD_CLUSTER_EXP)


def _ceiling(value: str) -> Optional[int]:
    if value.lower() in (UNBOUNDED, "infinity", "unbounded"):
        return None
    try:
        k = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer or 'inf', got {value!r}")
    if k < 0:
        raise argparse.ArgumentTypeError(f"ceiling must be >= 0, got {k}")
    return k


def _non_negative(value: str) -> int:
    number = int(value)
    if number < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value!r}")
    return number


def _add_spec_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--k", type=_ceiling, required=True, help="Ceiling height, or 'inf' for unbounded paths.")
    parser.add_argument("--m", type=_non_negative, default=0, help="Start height.")
    parser.add_argument("--n", type=_non_negative, default=0, help="End height.")
    parser.add_argument("--max-len", type=_non_negative, required=True, help="Truncation order: longest path length reported.")
    parser.add_argument("--convention", choices=(STEP_PLAQUETTE, DOUBLE_STEP_DIAMOND), default=STEP_PLAQUETTE,
                        help="Report exponents per step and plaquette, or per double step and diamond (halves).")
    parser.add_argument("--format", choices=("json", "csv"), default="json", help="Output format.")
    parser.add_argument("--output", default=None, help="Write to this file instead of stdout.")


def parse_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(prog="dyckgen", description="Generating functions of height-restricted Dyck paths.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {VERSION}")
    parser.add_argument("--verbose", action="store_true", help="Log progress at INFO level.")
    parser.add_argument("--log-file", default=None, help="Also log to this file under $DYCKGEN_LOGDIR.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("genfun", help="Coefficients of G_{k,mn} (or the touchdown series).")
    _add_spec_args(p)
    p.add_argument("--touchdown", action="store_true", help="Include the touchdown marker t (needs m <= n).")
    p.add_argument("--method", choices=METHODS, default=METHOD_DETERMINANT, help="Route used to compute the series.")
    p.add_argument("--cross-check", action="store_true", help="Compute every applicable route and fail with exit 3 on disagreement.")
    p.set_defaults(func=cmd_genfun)

    p = sub.add_parser("table", help="Brute-force path counts N_{k,mn;l,A,s}.")
    _add_spec_args(p)
    p.add_argument("--touchdowns", action="store_true", help="Split counts by number of touchdowns s.")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="Run the identity suites.")
    p.add_argument("--k-max", type=_non_negative, default=3, help="Largest ceiling checked.")
    p.add_argument("--len-max", type=_non_negative, default=10, help="Truncation order of every check.")
    p.add_argument("--suite", choices=VERIFY_SUITES + ("all",), default="all", help="Which suite to run.")
    p.add_argument("--num-processes", type=int, default=1, help="Worker processes for the suite tasks.")
    p.add_argument("--report", default=None, help="Write the full JSON report here (and a .log summary next to it).")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("logseries", help="Cluster-expansion p-polynomials of ln G (or ln F_k).")
    p.add_argument("--k", type=_ceiling, default=None, help="Ceiling height, or 'inf' (default).")
    p.add_argument("--m", type=_non_negative, default=0, help="Start height.")
    p.add_argument("--n", type=_non_negative, default=0, help="End height.")
    p.add_argument("--a-max", type=int, default=6, help="Highest power of z reported.")
    p.add_argument("--secular", action="store_true", help="Report ln F_k instead of ln G_{k,mn}.")
    p.add_argument("--format", choices=("json", "csv"), default="csv", help="Output format.")
    p.add_argument("--output", default=None, help="Write to this file instead of stdout.")
    p.set_defaults(func=cmd_logseries)
    return parser.parse_args(argv)


def _emit(text: str, path: Optional[str]) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if path:
        with open(path, "w", newline="", encoding="utf-8") as file:
            file.write(text)
    else:
        sys.stdout.write(text)


def _render(record, fmt: str) -> str:
    return to_csv(record) if fmt == "csv" else to_json(record)


def compute_series(spec: GenSpec, method: str) -> LSeries:
    """G_{k,mn} by the named route."""
    if method == METHOD_DETERMINANT:
        return genfun(spec).series
    if method == METHOD_CONTINUED_FRACTION:
        return genfun_continued(spec).series
    if method == METHOD_CLUSTER_EXP:
        ordered = spec.ordered()
        d, _ = prefactor(ordered.m, ordered.n)
        a_max = max((spec.L - d) // 2, 1)
        if spec.unbounded and ordered.m == ordered.n == 0:
            return exp_log_series([p.value for p in log_genfun_unbounded(a_max)], L=spec.L)
        return log_genfun_restricted(ordered.ceiling, ordered.m, ordered.n, a_max).to_series(spec.L)
    if method == METHOD_ORACLE:
        return genfun_from_table(enumerate_paths(spec.k, spec.m, spec.n, spec.L)).series
    raise ValueError(f"Unknown method {method!r}")


def compute_touchdown_series(spec: GenSpec, method: str) -> LSeries:
    if method == METHOD_DETERMINANT:
        return tilde_genfun(spec.k, spec.m, spec.n, spec.L).series
    if method == METHOD_ORACLE:
        return genfun_from_table(enumerate_paths(spec.k, spec.m, spec.n, spec.L), touchdowns=True).series
    if spec.m != 0 or spec.n != 0:
        raise SpecOutOfRange(f"The {method} route gives touchdown series for excursions only")
    if method == METHOD_CONTINUED_FRACTION:
        return tilde_from_excursion(continued_fraction(spec.k, spec.L))
    return tilde_from_excursion(compute_series(spec, METHOD_CLUSTER_EXP))


def cross_check(spec: GenSpec, series: LSeries, method: str, touchdown: bool) -> None:
    """Recompute with every other applicable route; raise CrossMethodMismatch on disagreement."""
    compute = compute_touchdown_series if touchdown else compute_series
    for other in METHODS + (METHOD_ORACLE,):
        if other == method:
            continue
        try:
            candidate = compute(spec, other)
        except (SpecOutOfRange, GuardExceeded) as e:
            logger.info(f"cross-check: skipping {other}: {e}")
            continue
        diff = series.first_difference(candidate)
        if diff is not None:
            l, left, right = diff
            raise CrossMethodMismatch(f"{method} and {other} differ at zeta^{l}: {left} != {right}")
        logger.info(f"cross-check: {method} = {other}")


def cmd_genfun(args: argparse.Namespace) -> int:
    spec = GenSpec(args.k, args.m, args.n, args.max_len, ConventionTag(args.convention))
    if args.touchdown:
        series = compute_touchdown_series(spec, args.method)
    else:
        series = compute_series(spec, args.method)
    if args.cross_check:
        cross_check(spec, series, args.method, args.touchdown)
    echo = SpecEcho(k=UNBOUNDED if args.k is None else args.k, m=args.m, n=args.n, max_len=args.max_len,
                    touchdown=args.touchdown)
    _emit(_render(record_from_series(echo, series, args.convention, args.method), args.format), args.output)
    return 0


def cmd_table(args: argparse.Namespace) -> int:
    table = enumerate_paths(args.k, args.m, args.n, args.max_len)
    _emit(_render(record_from_table(table, args.convention, args.touchdowns), args.format), args.output)
    return 0


def cmd_logseries(args: argparse.Namespace) -> int:
    if args.a_max < 1:
        raise SpecOutOfRange(f"--a-max must be >= 1, got {args.a_max}")
    echo = SpecEcho(k=UNBOUNDED if args.k is None else args.k, m=args.m, n=args.n, a_max=args.a_max)
    if args.secular:
        if args.k is None:
            raise SpecOutOfRange("ln F_k needs a finite --k")
        record = record_from_log(echo, log_secular(args.k, args.a_max))
    elif args.k is None and args.m == args.n == 0:
        record = record_from_log(echo, [p.value for p in log_genfun_unbounded(args.a_max)])
    else:
        m, n = sorted((args.m, args.n))
        # the highest level a path contributing to z^a_max can reach
        k = args.a_max + n if args.k is None else args.k
        restricted = log_genfun_restricted(k, m, n, args.a_max)
        record = record_from_log(echo, [p.value for p in restricted.polynomials], (restricted.log_z, restricted.log_q))
    _emit(_render(record, args.format), args.output)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    suites = VERIFY_SUITES if args.suite == "all" else (args.suite,)
    report = run_suites(suites, args.k_max, args.len_max, args.num_processes)
    if args.report:
        output_dir = os.path.dirname(os.path.abspath(args.report))
        os.makedirs(output_dir, exist_ok=True)
        output_name = os.path.basename(args.report)
        save_to_json(output_dir, output_name, report.to_dict())
        save_log_file(output_dir, output_name, report, args)
    sys.stdout.write(report.summary() + "\n")
    return 0 if report.passed else 1


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    build_logger("dyckgen", args.log_file, level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except CrossMethodMismatch as e:
        logger.error(str(e))
        return 3
    except DyckgenError as e:
        sys.stderr.write(f"dyckgen: error: {e}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
