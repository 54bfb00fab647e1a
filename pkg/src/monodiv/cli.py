"""Command-line surface.

Every subcommand supports --json; numeric output is always exact decimal
strings (rationals as num/den), never floats.  Exit codes: 0 success,
1 mathematical error, 2 usage error (argparse), 3 budget exhaustion.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import elliptic, newton, poly, reduction, valuation
from .certify import certify as run_certify
from .certify import scan as run_scan
from .certify import survey_family
from .errors import BudgetExceededError, MathDomainError, MonodivError


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _parse_range(text: str) -> tuple[int, int]:
    lo, _, hi = text.partition(":")
    if not _:
        raise argparse.ArgumentTypeError("range must look like LO:HI")
    return int(lo), int(hi)


def _curve_from_args(args) -> elliptic.WeierstrassCurve:
    if args.a_invariants:
        vals = [Fraction(part) for part in args.a_invariants.split(",")]
        if len(vals) != 5:
            raise MathDomainError("--a-invariants needs a1,a2,a3,a4,a6")
        return elliptic.WeierstrassCurve(*vals)
    if args.alpha is None or args.beta is None:
        raise MathDomainError("provide --alpha/--beta or --a-invariants")
    return elliptic.tate_curve(args.alpha, args.beta).weierstrass


def _cmd_divpoly(args) -> int:
    curve = _curve_from_args(args)
    dp = elliptic.psi(curve, args.n)
    if args.json:
        print(_dump({"n": dp.n, "even_part": dp.even_part, "coefficients": dp.poly.to_text()}))
    else:
        print(dp.poly.to_text())
    return 0


def _cmd_fueter(args) -> int:
    curve = elliptic.tate_curve(args.alpha, args.beta)
    dp = elliptic.fueter(curve, args.n)
    if args.json:
        print(_dump({"n": dp.n, "even_part": dp.even_part, "coefficients": dp.poly.to_text()}))
    else:
        print(dp.poly.to_text())
    return 0


def _cmd_reduce(args) -> int:
    if args.prime is not None:
        if args.prime == 2:
            rows = [reduction.classify_two(args.alpha, args.beta)]
        else:
            rows = [reduction.classify_odd(args.alpha, args.beta, args.prime)]
    else:
        rows = reduction.reduction_table(args.alpha, args.beta, budget_ms=args.budget_ms)
    if args.json:
        print(_dump([_reduction_row(r) for r in rows]))
    else:
        print("p      kodaira  f  c  case")
        for r in rows:
            f = "-" if r.f is None else str(r.f)
            c = "-" if r.c is None else str(r.c)
            print(f"{r.p:<6} {str(r.kodaira):<8} {f:<2} {c:<2} {r.case_tag}")
    return 0


def _reduction_row(r: reduction.ReductionData) -> dict:
    return {
        "p": r.p,
        "kodaira": str(r.kodaira),
        "f": r.f,
        "c": r.c,
        "case": r.case_tag,
    }


def _render_polygon(polygon: newton.NewtonPolygon) -> str:
    finite = [(j, v) for j, v in polygon.points if v is not None]
    if not finite:
        return "(no finite points)"
    max_v = max(v for _, v in finite)
    max_j = max(j for j, _ in finite)
    vertices = set()
    for s in polygon.sides:
        vertices.add((s.x0, s.y0))
        vertices.add((s.x1, s.y1))
    lines = []
    for v in range(max_v, -1, -1):
        row = [f"{v:>3} |"]
        for j in range(max_j + 1):
            if (j, v) in vertices:
                row.append(" o")
            elif (j, v) in finite:
                row.append(" *")
            else:
                row.append("  ")
        lines.append("".join(row))
    lines.append("    +" + "--" * (max_j + 1))
    lines.append("     " + "".join(f"{j:>2}" for j in range(max_j + 1)))
    return "\n".join(lines)


def _cmd_newton(args) -> int:
    Phi = poly.PolyInt.from_text(args.poly)
    phi = poly.PolyInt.from_text(args.phi)
    dev = poly.phi_development(Phi, phi)
    polygon = newton.build_polygon(dev, args.prime)
    ind = newton.ind_phi(polygon, phi.degree)
    if args.json:
        print(_dump(polygon.to_json_dict(ind=ind)))
    else:
        print(_render_polygon(polygon))
        for side in polygon.sides:
            print(
                f"side ({side.x0},{side.y0})->({side.x1},{side.y1}) "
                f"slope {side.slope} degree {side.degree}"
            )
        print(f"ind_phi = {ind}")
    return 0


def _cmd_index(args) -> int:
    Phi = poly.PolyInt.from_text(args.poly)
    lifts = [poly.PolyInt.from_text(args.phi)] if args.phi else None
    report = newton.index_report(Phi, args.prime, lifts=lifts)
    if args.json:
        print(
            _dump(
                {
                    "p": report.p,
                    "ind_p_lower_bound": report.ind_p_lower_bound,
                    "exact": report.exact,
                    "per_phi": [
                        {
                            "phi": r.phi.to_text(),
                            "exponent": r.exponent,
                            "a0_val": r.a0_val,
                            "ind_phi": r.ind_phi,
                            "regular": r.regular,
                            "polygon": r.polygon.to_json_dict(),
                        }
                        for r in report.per_phi
                    ],
                }
            )
        )
    else:
        print(f"p = {report.p}: ind_p >= {report.ind_p_lower_bound}"
              f" ({'exact' if report.exact else 'bound only'})")
        for r in report.per_phi:
            print(
                f"  phi = {r.phi.to_text()} (e = {r.exponent}): "
                f"ind_phi = {r.ind_phi}, regular = {r.regular}"
            )
    return 0


def _cmd_certify(args) -> int:
    cert = run_certify(args.alpha, budget_ms=args.budget_ms)
    if cert.reason and "budget" in cert.reason:
        print(cert.reason, file=sys.stderr)
        return 3
    if args.json:
        print(cert.to_json())
    else:
        _print_cert(cert)
    return 0


def _print_cert(cert) -> None:
    print(f"alpha = {cert.alpha}: {cert.verdict}")
    if cert.field_disc is not None:
        print(f"  field discriminant = {cert.field_disc}")
    for row in cert.primes:
        print(
            f"  p = {row.p}: ind_p = {row.ind_p}"
            f" ({'exact' if row.exact else 'bound'}), dedekind maximal = {row.dedekind}"
        )
    if cert.reason:
        print(f"  reason: {cert.reason}")
    for note in cert.trust:
        print(f"  trust: {note}")


def _cmd_scan(args) -> int:
    certs = run_scan(args.min, args.max, jobs=args.jobs, budget_ms=args.budget_ms)
    if args.json:
        print(_dump([c.to_json_dict() for c in certs]))
    else:
        for c in certs:
            line = f"{c.alpha}: {c.verdict}"
            if c.reason:
                line += f" ({c.reason})"
            print(line)
        good = [c.alpha for c in certs if c.verdict == "monogenic"]
        print("monogenic: " + ",".join(str(a) for a in good))
    return 0


def _cmd_survey(args) -> int:
    entries = survey_family(args.family, args.s, args.t, budget_ms=args.budget_ms)
    if args.json:
        print(
            _dump(
                [
                    {
                        "family": e.family,
                        "s": e.s,
                        "t": e.t,
                        "poly": e.poly.to_text(),
                        "predicted_disc": str(e.predicted_disc),
                        "disc_ok": e.disc_ok,
                        "squared_factor": str(e.squared_factor),
                        "verdict": e.verdict,
                    }
                    for e in entries
                ]
            )
        )
    else:
        for e in entries:
            verdict = e.verdict if e.verdict is not None else "skipped"
            ok = "ok" if e.disc_ok else "MISMATCH"
            print(f"{e.family}({e.s},{e.t}): disc {ok}, montes {verdict}")
    return 0


def _cmd_valuation(args) -> int:
    curve = elliptic.tate_curve(args.alpha, args.beta)
    case = valuation.singular_case(curve, args.prime)
    pred_psi = valuation.predicted_valuation(case, args.n)
    pred_f = valuation.predicted_fueter_valuation(case, args.n)
    obs_psi = valuation.observed_psi_valuation(curve, case, args.n)
    obs_f = valuation.observed_fueter_valuation(curve, case, args.n)
    if args.json:
        print(
            _dump(
                {
                    "case": case.tag,
                    "p": case.p,
                    "v": case.v,
                    "n": args.n,
                    "psi": {"predicted": pred_psi, "observed": obs_psi},
                    "fueter": {"predicted": pred_f, "observed": obs_f},
                }
            )
        )
    else:
        print(f"case {case.tag} at p = {case.p} (v = {case.v}), n = {args.n}")
        print(f"  psi:    predicted {pred_psi}, observed {obs_psi}")
        print(f"  fueter: predicted {pred_f}, observed {obs_f}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monodiv",
        description="Exact division-polynomial arithmetic, Newton polygons, "
        "reduction types, and monogenicity certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, budget=False):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        if budget:
            p.add_argument("--budget-ms", type=int, default=None)

    p = sub.add_parser("divpoly", help="division polynomial of a curve")
    p.add_argument("--alpha", type=int)
    p.add_argument("--beta", type=int)
    p.add_argument("--a-invariants", help="a1,a2,a3,a4,a6 (rationals)")
    p.add_argument("--n", type=int, required=True)
    add_common(p)
    p.set_defaults(func=_cmd_divpoly)

    p = sub.add_parser("fueter", help="Fueter polynomial of a Tate-form curve")
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--beta", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    add_common(p)
    p.set_defaults(func=_cmd_fueter)

    p = sub.add_parser("reduce", help="Kodaira/conductor table")
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--beta", type=int, required=True)
    p.add_argument("--prime", type=int)
    add_common(p, budget=True)
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("newton", help="phi-development Newton polygon")
    p.add_argument("--poly", required=True, help="ascending coefficients, comma-separated")
    p.add_argument("--phi", required=True)
    p.add_argument("--prime", type=int, required=True)
    add_common(p)
    p.set_defaults(func=_cmd_newton)

    p = sub.add_parser("index", help="index bound at a prime")
    p.add_argument("--poly", required=True)
    p.add_argument("--phi", help="optional lift override")
    p.add_argument("--prime", type=int, required=True)
    add_common(p)
    p.set_defaults(func=_cmd_index)

    p = sub.add_parser("certify", help="monogenicity certificate for one alpha")
    p.add_argument("--alpha", type=int, required=True)
    add_common(p, budget=True)
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("scan", help="certify a range of alpha")
    p.add_argument("--min", type=int, required=True)
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    add_common(p, budget=True)
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("survey", help="experimental family survey")
    p.add_argument("--family", choices=("A", "B", "C"), required=True)
    p.add_argument("--s", type=_parse_range, required=True, help="range LO:HI")
    p.add_argument("--t", type=_parse_range, required=True, help="range LO:HI")
    add_common(p, budget=True)
    p.set_defaults(func=_cmd_survey)

    p = sub.add_parser("valuation", help="predicted vs observed singular valuations")
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--beta", type=int, required=True)
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    add_common(p)
    p.set_defaults(func=_cmd_valuation)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return 3
    except MathDomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except MonodivError as exc:  # pragma: no cover - defensive
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, ZeroDivisionError) as exc:
        # malformed numeric input (bad coefficient lists, zero denominators)
        print(f"invalid input: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
