"""Command-line surface: eval, table, compare, bounds, classify.

Output is deterministic byte for byte for identical flags: floats are
printed with 17 significant digits (which round-trips doubles exactly),
CSV uses '.' decimals, ',' separators and Unix newlines, and grid rows
are emitted in order (outer loop over the nu list, inner over x)
regardless of how many worker threads computed them.

Exit codes: 0 success, 2 usage or domain error, 3 tolerance failure.
"""

import argparse
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .errors import DomainError, ToleranceError
from .error_bounds import tail_bound
from .lommel import ImaginaryOrder, classify
from .oracle import oracle_pair
from .series_core import Kind, eval_pair

DEFAULT_TOL = 1e-12
DEFAULT_NUS = "0,0.5,1,1.5,2"
#: round-off allowance used by the compare PASS/FAIL flag, matching the
#: double-precision slack of the oracle-equivalence guarantee
COMPARE_SLACK = 1e-13


@dataclass(frozen=True)
class GridSpec:
    """Evaluation grid: an x range crossed with a list of orders."""

    x_min: float
    x_max: float
    x_steps: int
    nu_list: tuple
    scale: str  # "linear" | "log"


def _fmt(value) -> str:
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def _parse_kind(text: str) -> Kind:
    return Kind.MODIFIED if text == "mod" else Kind.OSCILLATORY


def _parse_nu_list(text: str):
    try:
        values = tuple(float(part) for part in text.split(",") if part.strip() != "")
    except ValueError as exc:
        raise DomainError(f"bad --nu list {text!r}: {exc}") from None
    for v in values:
        if not math.isfinite(v):
            raise DomainError(f"nu must be finite, got {v!r}")
    return values


def _workers() -> int:
    env = os.environ.get("IMBESSEL_THREADS")
    if env is not None:
        try:
            n = int(env)
        except ValueError:
            raise DomainError(f"IMBESSEL_THREADS must be an integer, got {env!r}") from None
        if n < 1:
            raise DomainError(f"IMBESSEL_THREADS must be >= 1, got {n}")
        return n
    return min(8, os.cpu_count() or 1)


def _grid_points(spec: GridSpec):
    if not (spec.x_min > 0.0 and math.isfinite(spec.x_min) and math.isfinite(spec.x_max)):
        raise DomainError("x grid must satisfy 0 < x-min <= x-max")
    if spec.x_min > spec.x_max:
        raise DomainError("x grid must satisfy 0 < x-min <= x-max")
    if spec.x_steps < 1:
        raise DomainError(f"x-steps must be >= 1, got {spec.x_steps}")
    if not spec.nu_list:
        raise DomainError("empty nu list")
    if spec.x_steps == 1:
        return [spec.x_min]
    if spec.scale == "log":
        ratio = math.log(spec.x_max / spec.x_min)
        return [
            spec.x_min * math.exp(i * ratio / (spec.x_steps - 1))
            for i in range(spec.x_steps)
        ]
    step = (spec.x_max - spec.x_min) / (spec.x_steps - 1)
    return [spec.x_min + i * step for i in range(spec.x_steps)]


def _map_ordered(fn, items):
    # Fan out across worker threads; results merge in input order, never
    # completion order, so output bytes are independent of thread count.
    workers = _workers()
    if workers == 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _emit(out, fields, rows, fmt):
    if fmt == "json":
        records = [dict(zip(fields, row)) for row in rows]
        out.write(json.dumps(records, indent=2))
        out.write("\n")
        return
    out.write(",".join(fields))
    out.write("\n")
    for row in rows:
        out.write(",".join(_fmt(v) for v in row))
        out.write("\n")


def cmd_eval(args, out) -> int:
    kind = _parse_kind(args.kind)
    result = eval_pair(kind, args.nu, args.x, args.tol, terms=args.terms)
    fields = ["cos_part", "sin_part", "d_cos", "d_sin", "terms_used", "tail_bound"]
    row = [result.cos_part, result.sin_part, result.d_cos, result.d_sin,
           result.terms_used, result.tail_bound]
    _emit(out, fields, [row], args.format)
    return 0


def cmd_table(args, out) -> int:
    kind = _parse_kind(args.kind)
    spec = GridSpec(args.x_min, args.x_max, args.x_steps,
                    _parse_nu_list(args.nu), args.x_scale)
    xs = _grid_points(spec)
    points = [(nu, x) for nu in spec.nu_list for x in xs]

    def one(point):
        nu, x = point
        r = eval_pair(kind, nu, x, args.tol, terms=args.terms)
        return [x, nu, r.cos_part, r.sin_part, r.d_cos, r.d_sin,
                r.terms_used, r.tail_bound]

    rows = _map_ordered(one, points)
    fields = ["x", "nu", "cos_part", "sin_part", "d_cos", "d_sin", "terms", "bound"]
    _emit(out, fields, rows, args.format)
    return 0


def cmd_compare(args, out) -> int:
    kind = _parse_kind(args.kind)
    spec = GridSpec(args.x_min, args.x_max, args.x_steps,
                    _parse_nu_list(args.nu), args.x_scale)
    xs = _grid_points(spec)
    points = [(nu, x) for nu in spec.nu_list for x in xs]

    def one(point):
        nu, x = point
        r = eval_pair(kind, nu, x, args.tol, terms=args.terms)
        gold_cos, gold_sin = oracle_pair(kind, nu, x, digits=args.oracle_digits)
        err_cos = abs(r.cos_part - gold_cos)
        err_sin = abs(r.sin_part - gold_sin)
        bound = r.tail_bound
        ok = max(err_cos, err_sin) <= bound + COMPARE_SLACK
        within_tol = max(err_cos, err_sin) <= args.tol
        return [x, nu, err_cos, err_sin, bound, ok, within_tol]

    rows = _map_ordered(one, points)
    fields = ["x", "nu", "err_cos", "err_sin", "bound", "ok", "within_tol"]
    _emit(out, fields, rows, args.format)
    max_err = max(max(row[2], row[3]) for row in rows)
    status = "PASS" if all(row[5] for row in rows) else "FAIL"
    out.write(
        f"status={status} points={len(rows)} max_err={_fmt(max_err)} tol={_fmt(args.tol)}\n"
    )
    return 0


def cmd_bounds(args, out) -> int:
    kind = _parse_kind(args.kind)
    try:
        n_list = [int(part) for part in args.terms_list.split(",") if part.strip() != ""]
    except ValueError as exc:
        raise DomainError(f"bad --terms list {args.terms_list!r}: {exc}") from None
    if not n_list:
        raise DomainError("empty --terms list")
    gold_cos, gold_sin = oracle_pair(kind, args.nu, args.x, digits=args.oracle_digits)

    rows = []
    for n in n_list:
        bound = tail_bound(args.nu, args.x, n)
        r = eval_pair(kind, args.nu, args.x, terms=n)
        empirical = max(abs(r.cos_part - gold_cos), abs(r.sin_part - gold_sin))
        rows.append([n, bound, empirical])
    _emit(out, ["N", "tail_bound", "empirical_error"], rows, args.format)
    return 0


def cmd_classify(args, out) -> int:
    sol = classify(args.a, args.b, args.c, args.beta)
    order_type = "imaginary" if isinstance(sol.order, ImaginaryOrder) else "real"
    fields = ["a", "b", "c", "beta", "prefactor_exponent", "gamma", "order_type", "nu"]
    row = [args.a, args.b, args.c, args.beta,
           sol.prefactor_exponent, sol.gamma, order_type, sol.order.nu]
    _emit(out, fields, [row], args.format)
    return 0


def _add_common(p, with_terms=True):
    p.add_argument("--kind", choices=["osc", "mod"], default="osc",
                   help="equation kind: oscillatory (osc) or modified (mod)")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL,
                   help=f"guaranteed truncation tolerance (default {DEFAULT_TOL:g})")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    if with_terms:
        p.add_argument("--terms", type=int, default=None,
                       help="force the term count instead of deriving it from --tol")


def _add_grid(p):
    p.add_argument("--x-min", type=float, default=0.1)
    p.add_argument("--x-max", type=float, default=2.0)
    p.add_argument("--x-steps", type=int, default=8)
    p.add_argument("--x-scale", choices=["linear", "log"], default="linear")
    p.add_argument("--nu", default=DEFAULT_NUS,
                   help="comma-separated list of orders")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="imbessel",
        description="Bessel-type basis functions of pure imaginary order "
                    "with guaranteed truncation bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate the basis pair at one point")
    _add_common(p)
    p.add_argument("--nu", type=float, required=True)
    p.add_argument("--x", type=float, required=True)
    p.set_defaults(run=cmd_eval)

    p = sub.add_parser("table", help="tabulate the pair over a grid")
    _add_common(p)
    _add_grid(p)
    p.set_defaults(run=cmd_table)

    p = sub.add_parser("compare", help="compare against the extended-precision oracle")
    _add_common(p)
    _add_grid(p)
    p.add_argument("--oracle-digits", type=int, default=50)
    p.set_defaults(run=cmd_compare)

    p = sub.add_parser("bounds", help="tail bounds vs empirical error at one point")
    _add_common(p, with_terms=False)
    p.add_argument("--nu", type=float, required=True)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--terms", dest="terms_list", default="2,4,8,16",
                   help="comma-separated term counts")
    p.add_argument("--oracle-digits", type=int, default=50)
    p.set_defaults(run=cmd_bounds)

    p = sub.add_parser("classify", help="classify x^2 y'' + a x y' + (b + c x^(2 beta)) y = 0")
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--b", type=float, required=True)
    p.add_argument("--c", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(run=cmd_classify)

    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args, out)
    except DomainError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    except ToleranceError as exc:
        print(str(exc), file=sys.stderr)
        return 3


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
