"""Command-line front end: ``realclasses {count,series,census,verify,polys}``.

Reports go to stdout, diagnostics to stderr.  Exit status is 0 on success,
1 when a verification or internal cross-check fails, 2 on usage errors
(including exceeded size guards).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import census as cen
from .count import totals
from .errors import ConsistencyError, GuardError
from .ff import field_of_order, norm_one_subgroup, prime_power
from .poly import (
    FILTERS,
    canonical_zeta,
    classify,
    count_self_reciprocal,
    count_zeta_self_reciprocal,
    enumerate_polys,
)
from .series import DEFAULT_ORDER, gen_even_types, gen_real_classes, gen_theorem
from .verify import DEFAULT_CENSUS, DEFAULT_MAX_N, DEFAULT_QS, run_suite

SERIES = {"real": gen_real_classes, "even": gen_even_types, "theorem": gen_theorem}
KIND_NAMES = {"gl": "general_linear", "u": "unitary"}


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def dump_csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def dump_table(header: list[str], rows: list[list]) -> str:
    cells = [header] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def _prime_power_arg(text: str) -> int:
    try:
        q = int(text)
        prime_power(q)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a prime power") from None
    return q


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"{text!r} is negative")
    return v


def _q_list(text: str) -> tuple[int, ...]:
    return tuple(_prime_power_arg(t) for t in text.split(",") if t)


# -- verbs ----------------------------------------------------------------


def cmd_count(args) -> tuple[str, int]:
    rep = totals(args.q, args.n)
    d = rep.to_dict()
    scalar = [k for k in d if k != "per_type"]
    if args.format == "json":
        return dump_json(d), 0
    if args.per_type:
        header = ["partition", "real_type", "sl_type", "pgl_type"]
        rows = [[" ".join(map(str, t["partition"])), t["real_type"], t["sl_type"], t["pgl_type"]] for t in d["per_type"]]
    else:
        header, rows = scalar, [[d[k] for k in scalar]]
    out = dump_csv(header, rows) if args.format == "csv" else dump_table(header, rows)
    return out, 0


def cmd_series(args) -> tuple[str, int]:
    names = list(SERIES) if args.which == "all" else [args.which]
    coeffs = {w: list(SERIES[w](args.q, args.order).coeffs) for w in names}
    if args.format == "json":
        return dump_json({"q": args.q, "order": args.order, **coeffs}), 0
    if len(names) == 1:
        return ",".join(map(str, coeffs[names[0]])) + "\n", 0
    header = ["n"] + names
    rows = [[n] + [coeffs[w][n] for w in names] for n in range(args.order + 1)]
    return (dump_csv(header, rows) if args.format == "csv" else dump_table(header, rows)), 0


def cmd_census(args) -> tuple[str, int]:
    spec = cen.GroupSpec(KIND_NAMES[args.kind], args.n, args.q)
    rep = cen.census_report(spec)
    d = rep.to_dict()
    if args.classes:
        classes = cen.real_flags(cen.conjugacy_classes(spec), spec)
        header = ["class", "size", "real", "det_one", "type", "class_type"]
        rows = [
            [c.index, c.size, int(c.is_real), int(c.det_one), " ".join(map(str, c.class_type.type.parts)), str(c.class_type)]
            for c in classes
        ]
        if args.format == "json":
            d["classes"] = [dict(zip(header, r)) for r in rows]
            return dump_json(d), 0
        return (dump_csv(header, rows) if args.format == "csv" else dump_table(header, rows)), 0
    if args.format == "json":
        return dump_json(d), 0
    header = list(d)
    rows = [[d[k] for k in header]]
    return (dump_csv(header, rows) if args.format == "csv" else dump_table(header, rows)), 0


def cmd_verify(args) -> tuple[str, int]:
    grid = () if args.skip_census else DEFAULT_CENSUS
    checks = run_suite(qs=args.q, max_n=args.max_n, order=args.order, census_grid=grid)
    failed = sum(1 for c in checks if not c.passed)
    code = 1 if failed else 0
    if args.format == "json":
        return dump_json({"passed": not failed, "checks": [c.to_dict() for c in checks]}), code
    if args.format == "csv":
        rows = [[c.name, "PASS" if c.passed else "FAIL", c.detail] for c in checks]
        return dump_csv(["check", "status", "detail"], rows), code
    lines = [
        f"{'PASS' if c.passed else 'FAIL'}  {c.name}  ({c.seconds:.2f}s)" + (f"  [{c.detail}]" if c.detail else "")
        for c in checks
    ]
    lines.append(f"{len(checks) - failed}/{len(checks)} checks passed")
    return "\n".join(lines) + "\n", code


def cmd_polys(args) -> tuple[str, int]:
    q = args.q
    if args.unitary:
        C = norm_one_subgroup(q)
        F, Zgroup = C.ambient, C
    else:
        F = field_of_order(q)
        Zgroup = F
    filters = args.filter or ["all"]
    zeta = args.zeta
    if zeta is None and q % 2:
        zeta = canonical_zeta(Zgroup)
    if "zeta_self_reciprocal" in filters and zeta is None:
        raise ValueError("zeta_self_reciprocal needs odd q")
    if "self_conjugate" in filters and not args.unitary:
        raise ValueError("self_conjugate filter needs --unitary")
    polys = enumerate_polys(F, args.d, *filters, zeta=zeta)
    header = ["poly", "coeffs", "self_reciprocal", "self_conjugate", "zeta_self_reciprocal"]
    rows = []
    for f in polys:
        c = classify(f, q if args.unitary else None, zeta)
        rows.append([str(f), " ".join(map(str, f.coeffs)), c.self_reciprocal, c.self_conjugate, c.zeta_self_reciprocal])
    summary = {
        "q": q,
        "field_order": F.order,
        "degree": args.d,
        "filters": filters,
        "zeta": zeta,
        "count": len(polys),
        "r_qd": count_self_reciprocal(q, args.d),
    }
    if q % 2:
        summary["r_zeta_qd"] = count_zeta_self_reciprocal(q, args.d, "unitary" if args.unitary else "general_linear")
    if args.format == "json":
        summary["polys"] = [dict(zip(header, r)) for r in rows]
        return dump_json(summary), 0
    if args.format == "csv":
        return dump_csv(header, rows), 0
    foot = f"{len(polys)} polynomials; r_{{{q},{args.d}}} = {summary['r_qd']}\n"
    return dump_table(header, rows) + foot, 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="realclasses", description="Real conjugacy class counts for finite linear and unitary groups."
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def fmt(p, default):
        p.add_argument("--format", choices=("json", "csv", "table"), default=default)

    p = sub.add_parser("count", help="closed-form counts for (q, n)")
    p.add_argument("--q", type=_prime_power_arg, required=True)
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--per-type", action="store_true", help="csv/table: one row per partition")
    fmt(p, "json")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("series", help="generating-function coefficients up to u^order")
    p.add_argument("--q", type=_prime_power_arg, required=True)
    p.add_argument("--order", type=_nonneg, default=DEFAULT_ORDER)
    p.add_argument("--which", choices=(*SERIES, "all"), default="theorem")
    fmt(p, "csv")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("census", help="brute-force census of GL(n,q) or U(n,q)")
    p.add_argument("--kind", choices=tuple(KIND_NAMES), default="gl")
    p.add_argument("--q", type=_prime_power_arg, required=True)
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--classes", action="store_true", help="list every class")
    fmt(p, "json")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("verify", help="run the cross-layer verification grid")
    p.add_argument("--q", type=_q_list, default=DEFAULT_QS, help="comma-separated prime powers")
    p.add_argument("--max-n", type=_nonneg, default=DEFAULT_MAX_N)
    p.add_argument("--order", type=_nonneg, default=DEFAULT_ORDER)
    p.add_argument("--skip-census", action="store_true")
    fmt(p, "table")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("polys", help="enumerate and classify monic polynomials")
    p.add_argument("--q", type=_prime_power_arg, required=True)
    p.add_argument("--d", type=_nonneg, required=True)
    p.add_argument("--unitary", action="store_true", help="work over F_{q^2}")
    p.add_argument("--filter", action="append", choices=FILTERS)
    p.add_argument("--zeta", type=int, default=None, help="field code of zeta (default: smallest non-square)")
    fmt(p, "table")
    p.set_defaults(func=cmd_polys)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out, code = args.func(args)
    except ConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return 1
    except (GuardError, ValueError) as exc:
        print(f"{parser.prog} {args.verb}: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
