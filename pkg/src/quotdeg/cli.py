"""Command-line interface: ``quotdeg degree|components|vi|selftest``.

Exit codes: 0 success, 1 usage error, 2 computation error, 3 cross-check or
selftest failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction

from . import checks
from .fixed_points import WeightVector, chow_rank, enumerate_components, euler_characteristic
from .localization import NonGenericWeights, NonIntegralSum, component_contributions
from .vafa import PrecisionError, SelectionRuleError, VIQuery, vi_evaluate, vi_plucker_degree

EXIT_OK, EXIT_USAGE, EXIT_COMPUTE, EXIT_CHECK = 0, 1, 2, 3

log = logging.getLogger("quotdeg")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _weights(text: str) -> WeightVector:
    try:
        return WeightVector(int(x) for x in text.split(","))
    except ValueError as exc:
        msg = str(exc)
        if "strictly increasing" in msg:
            msg = "weights must be strictly increasing"
        raise argparse.ArgumentTypeError(msg) from None


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return v


def _insertions(text: str) -> tuple[int, ...]:
    """``1x16`` or ``1,1,2`` or ``1x14,2``."""
    out: list[int] = []
    try:
        for chunk in text.split(","):
            if "x" in chunk:
                value, count = chunk.split("x")
                out.extend([int(value)] * int(count))
            elif chunk.strip():
                out.append(int(chunk))
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot parse insertions {text!r}") from None
    return tuple(out)


def fraction_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _check(name: str, passed: bool, detail: str = "") -> dict:
    return {"name": name, "status": "pass" if passed else "fail", "detail": detail}


# -- degree ------------------------------------------------------------------

def build_report(d: int, weights, method: str, per_component: bool = False, jobs: int = 1) -> dict:
    report = {"d": d, "weights": list(weights), "method": method, "checks": []}
    bott = vafa = None
    if method in ("bott", "both"):
        contribs = component_contributions(d, weights, jobs=jobs)
        total = sum((c.value for c in contribs), Fraction(0))
        integral = total.denominator == 1
        report["checks"].append(_check("bott_sum_integral", integral, fraction_str(total)))
        if not integral:
            raise NonIntegralSum(f"Bott sum for d={d} is {fraction_str(total)}, not an integer")
        bott = int(total)
        if per_component:
            report["per_component"] = [
                {"pattern": list(c.component.pattern), "contribution": fraction_str(c.value)}
                for c in contribs
            ]
    if method in ("vafa", "both"):
        vafa = vi_plucker_degree(d)
    if method == "both":
        report["checks"].append(_check("bott_equals_vafa", bott == vafa, f"bott={bott} vafa={vafa}"))
    report["total_degree"] = bott if bott is not None else vafa
    return report


def _render_degree(report: dict) -> str:
    lines = [
        f"d = {report['d']}, weights = {tuple(report['weights'])}, method = {report['method']}",
    ]
    for row in report.get("per_component", []):
        lines.append(f"  ({', '.join(row['pattern'])})  {row['contribution']}")
    for chk in report["checks"]:
        lines.append(f"  [{chk['status']}] {chk['name']}: {chk['detail']}")
    lines.append(f"degree = {report['total_degree']}")
    return "\n".join(lines)


def cmd_degree(args) -> int:
    report = build_report(args.d, args.weights, args.method, args.per_component, args.jobs)
    print(dump_json(report) if args.format == "json" else _render_degree(report))
    if any(c["status"] == "fail" for c in report["checks"]):
        return EXIT_CHECK
    return EXIT_OK


# -- components --------------------------------------------------------------

def cmd_components(args) -> int:
    comps = enumerate_components(args.d)
    rows = [
        {"pattern": list(c.pattern), "b": c.b, "a": c.a, "locus": c.locus, "chow_rank": chow_rank(c)}
        for c in comps
    ]
    total = sum(r["chow_rank"] for r in rows)
    chi = euler_characteristic(args.d)
    if args.format == "json":
        print(dump_json({"d": args.d, "components": rows, "count": len(rows),
                         "total_rank": total, "euler_characteristic": chi}))
    else:
        for r in rows:
            print(f"({', '.join(r['pattern'])})  (b,a)=({r['b']},{r['a']})  {r['locus']}  rank {r['chow_rank']}")
        print(f"components: {len(rows)}  total rank: {total}  euler characteristic: {chi}")
    return EXIT_OK if total == chi else EXIT_CHECK


# -- vi ----------------------------------------------------------------------

def cmd_vi(args) -> int:
    try:
        q = VIQuery(args.k, args.n, args.d, args.insertions)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    try:
        res = vi_evaluate(q, force_float=args.force_float, precision_bits=args.precision_bits)
    except SelectionRuleError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        print(dump_json({
            "k": q.k, "n": q.n, "d": q.d, "insertions": list(q.insertions),
            "value": res.value, "path": "exact" if res.exact else "float",
            "precision_bits": res.precision_bits,
        }))
    else:
        print(res.value)
    return EXIT_OK


# -- selftest ----------------------------------------------------------------

def cmd_selftest(args) -> int:
    results = checks.run_battery(quick=args.quick)
    failed = [r for r in results if not r.passed]
    if args.json:
        print(dump_json({"checks": [_check(r.name, r.passed, r.detail) for r in results],
                         "passed": not failed}))
    else:
        for r in results:
            print(f"[{'pass' if r.passed else 'FAIL'}] {r.name}: {r.detail}")
    if failed:
        print(f"selftest failed: {failed[0].name}", file=sys.stderr)
        return EXIT_CHECK
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="quotdeg", description="Pluecker degree of the Quot scheme R_d by Bott localization")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    deg = sub.add_parser("degree", help="compute P_d")
    deg.add_argument("--d", type=_nonneg, required=True)
    deg.add_argument("--weights", type=_weights, default=WeightVector((0, 1, 2, 3)),
                     help="comma-separated, strictly increasing (use --weights=-3,0,2,11 for negatives)")
    deg.add_argument("--method", choices=("bott", "vafa", "both"), default="both")
    deg.add_argument("--per-component", action="store_true")
    deg.add_argument("--format", choices=("text", "json"), default="text")
    deg.add_argument("--jobs", type=int, default=1)
    deg.set_defaults(func=cmd_degree)

    comp = sub.add_parser("components", help="list fixed components of R_d")
    comp.add_argument("--d", type=_nonneg, required=True)
    comp.add_argument("--format", choices=("text", "json"), default="text")
    comp.set_defaults(func=cmd_components)

    vi = sub.add_parser("vi", help="evaluate the Vafa-Intriligator formula")
    vi.add_argument("--k", type=int, required=True)
    vi.add_argument("--n", type=int, required=True)
    vi.add_argument("--d", type=_nonneg, required=True)
    vi.add_argument("--insertions", type=_insertions, required=True, help="e.g. 1x16 or 1,1,2")
    vi.add_argument("--force-float", action="store_true")
    vi.add_argument("--precision-bits", type=int, default=None)
    vi.add_argument("--format", choices=("text", "json"), default="text")
    vi.set_defaults(func=cmd_vi)

    st = sub.add_parser("selftest", help="run the acceptance battery")
    st.add_argument("--quick", action="store_true")
    st.add_argument("--json", action="store_true")
    st.set_defaults(func=cmd_selftest)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"quotdeg: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NonGenericWeights, NonIntegralSum, PrecisionError) as exc:
        print(f"quotdeg: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_COMPUTE


if __name__ == "__main__":
    sys.exit(main())
