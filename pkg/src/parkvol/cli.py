"""Command line front end.

Usage examples::

    parkvol invenum --n 4
    parkvol sumenum --a 1,2,3,4
    parkvol involution --a 3,3,6,7,7,7,8 --force
    parkvol volume --n 5 --set 4 --d 1,2,3 --format json
    parkvol pitman-stanley --c 1,1,1
    parkvol verify-all --n 6 --jobs 4

Exit status is 0 when every requested check passes, 1 when a check fails and
2 for invalid input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from math import factorial

from . import checks
from .combinatorics import (
    CapExceeded,
    a_of_composition,
    beta,
    check_avector,
    comp_of_subset,
    euler_number,
    kappa_enumerate,
    subset_of_avector,
)
from .parking import DEFAULT_CAP, inversion_enumerator_via_parking, sum_enumerator
from .polynomials import eval_at_minus_one
from .polytope import (
    ZPolytopeSpec,
    format_rational,
    parse_rational,
    pitman_stanley_integral,
    pitman_stanley_volume,
    volume_formula,
    volume_integration_oracle,
    volume_parking_sum,
    volume_polynomial,
)
from .strips import DEFAULT_SWEEP_CAP, strip_of_parking, verify_involution_theorem
from .trees import inversion_enumerator_via_trees

FORCED_CAP = 9


class UsageError(ValueError):
    pass


def int_list(text: str) -> list[int]:
    text = text.strip()
    return [int(x) for x in text.split(",")] if text else []


def rational_list(text: str) -> list[Fraction]:
    return [parse_rational(x.strip()) for x in text.split(",") if x.strip()]


def effective_cap(args, default: int) -> int:
    cap = args.cap if args.cap is not None else default
    if cap > default and not args.force:
        raise UsageError(f"--cap {cap} exceeds the default {default}; add --force")
    if args.force and args.cap is None:
        cap = max(default, FORCED_CAP)
    return cap


def emit(record: dict, lines: list[str], fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(record, sort_keys=False) + "\n")
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(record.keys())
        writer.writerow(
            ";".join(map(str, v)) if isinstance(v, list) else v for v in record.values()
        )
        out.write(buf.getvalue())
    else:
        out.write("\n".join(lines) + "\n")


def cmd_invenum(args, out) -> int:
    n = args.n
    cap = effective_cap(args, DEFAULT_CAP)
    by_trees = inversion_enumerator_via_trees(n, cap)
    by_parking = inversion_enumerator_via_parking(n, cap)
    agree = by_trees == by_parking
    at_one = by_trees(1)
    at_minus_one = eval_at_minus_one(by_trees)
    e = euler_number(n)
    ok = agree and at_minus_one == e and at_one == (n + 1) ** (n - 1)
    lines = [f"I_{n}(q) = {by_trees}"]
    if not agree:
        lines.append(f"MISMATCH: parking functions give {by_parking}")
    lines.append(f"I_{n}(1) = {at_one}")
    if at_minus_one == e:
        lines.append(f"I_{n}(-1) = {at_minus_one} = E_{n}")
    else:
        lines.append(f"I_{n}(-1) = {at_minus_one} != E_{n} = {e}")
    record = {
        "n": n,
        "coefficients": list(by_trees.coeffs),
        "parking_coefficients": list(by_parking.coeffs),
        "at_one": at_one,
        "at_minus_one": at_minus_one,
        "euler": e,
        "ok": ok,
    }
    emit(record, lines, args.format, out)
    return 0 if ok else 1


def cmd_sumenum(args, out) -> int:
    a = check_avector(int_list(args.a))
    cap = effective_cap(args, DEFAULT_CAP)
    poly = sum_enumerator(a, cap)
    value = eval_at_minus_one(poly)
    predicted = checks.predicted_at_minus_one(a)
    n = len(a)
    S = sorted(subset_of_avector(a))
    if a[0] % 2:
        rule = f"(-1)^{sum(a) - n} * beta_{n}({set(S) or '{}'}) = {predicted}"
    else:
        rule = "0 (a_1 even)"
    ok = value == predicted
    lines = [
        f"I_a(q) = {poly}",
        f"I_a(1) = {poly(1)}",
        f"I_a(-1) = {value}",
        f"predicted {rule} {'ok' if ok else 'MISMATCH'}",
    ]
    record = {
        "a": list(a),
        "coefficients": list(poly.coeffs),
        "at_minus_one": value,
        "S": S,
        "predicted": predicted,
        "ok": ok,
    }
    emit(record, lines, args.format, out)
    return 0 if ok else 1


def cmd_involution(args, out) -> int:
    a = check_avector(int_list(args.a))
    cap = effective_cap(args, DEFAULT_SWEEP_CAP)
    rep = verify_involution_theorem(a, cap=cap)
    lines = [
        f"a = {a}",
        f"strips: {rep.strips}",
        f"fixed points: {rep.fixed} (predicted {rep.predicted_fixed})",
        f"pairs: {rep.pairs}",
        f"signed sum: {rep.signed_sum} (predicted {rep.expected})",
    ]
    if args.b:
        H = strip_of_parking(int_list(args.b), a)
        lines += [f"strip of b = {tuple(int_list(args.b))}, s = {H.s()}:", H.ascii()]
    lines.append("PASS" if rep.ok else "FAIL")
    lines += rep.failures
    record = {
        "a": list(a),
        "strips": rep.strips,
        "fixed_points": rep.fixed,
        "predicted_fixed_points": rep.predicted_fixed,
        "pairs": rep.pairs,
        "signed_sum": rep.signed_sum,
        "predicted_sum": rep.expected,
        "ok": rep.ok,
        "failures": rep.failures,
    }
    emit(record, lines, args.format, out)
    return 0 if rep.ok else 1


def volume_record(n: int, S, d, cap: int = DEFAULT_CAP) -> tuple[dict, list[str], bool]:
    poly = volume_polynomial(n, S)
    record = {
        "n": n,
        "S": sorted(S),
        "d": None,
        "volume": None,
        "n_factorial_volume_polynomial": poly.to_text(),
    }
    lines = [
        f"comp(S) = {comp_of_subset(n, S)}",
        f"{n}! * Vol = {poly.to_text()}",
    ]
    ok = True
    if d is not None:
        spec = ZPolytopeSpec(n, S, d)
        f = volume_formula(spec)
        p = volume_parking_sum(spec, cap=cap)
        i = volume_integration_oracle(spec, cap=cap)
        ok = f == p == i
        record["d"] = [format_rational(x) for x in spec.d]
        record["volume"] = format_rational(f)
        lines += [
            f"d = ({', '.join(record['d'])})",
            f"volume (multinomial sum) = {f}",
            f"volume (parking sum)     = {p}",
            f"volume (integration)     = {i}",
            "all three agree" if ok else "MISMATCH",
        ]
    return record, lines, ok


def cmd_volume(args, out) -> int:
    n = args.n
    S = frozenset(int_list(args.set or ""))
    k = len(comp_of_subset(n, S))
    d = None
    if args.d and args.q:
        raise UsageError("give either --d or --q, not both")
    if args.d:
        d = rational_list(args.d)
    elif args.q:
        q = parse_rational(args.q)
        d = [q ** i for i in range(k)]
    record, lines, ok = volume_record(n, S, d, effective_cap(args, DEFAULT_CAP))
    emit(record, lines, args.format, out)
    return 0 if ok else 1


def cmd_pitman_stanley(args, out) -> int:
    c = rational_list(args.c)
    cap = effective_cap(args, DEFAULT_CAP)
    v = pitman_stanley_volume(c, cap)
    w = pitman_stanley_integral(c)
    ok = v == w
    lines = [
        f"Vol(Pi_n(c)) = {v}",
        f"n! * Vol = {v * factorial(len(c))}",
        f"integral = {w} {'ok' if ok else 'MISMATCH'}",
    ]
    record = {"c": [format_rational(x) for x in c], "volume": format_rational(v), "ok": ok}
    emit(record, lines, args.format, out)
    return 0 if ok else 1


def cmd_beta(args, out) -> int:
    S = sorted(int_list(args.set or ""))
    value = beta(args.n, S)
    emit({"n": args.n, "S": S, "beta": value}, [str(value)], args.format, out)
    return 0


def cmd_euler(args, out) -> int:
    value = euler_number(args.n)
    emit({"n": args.n, "euler": value}, [str(value)], args.format, out)
    return 0


def cmd_kappa(args, out) -> int:
    if args.gamma:
        gamma = tuple(int_list(args.gamma))
    elif args.n is not None:
        gamma = comp_of_subset(args.n, int_list(args.set or ""))
    else:
        raise UsageError("kappa needs --gamma or --n/--set")
    members = list(kappa_enumerate(gamma))
    lines = [" ".join(map(str, alpha)) for alpha in members]
    record = {
        "gamma": list(gamma),
        "a": list(a_of_composition(gamma)),
        "count": len(members),
        "members": [list(m) for m in members],
    }
    emit(record, lines, args.format, out)
    return 0


def cmd_verify_all(args, out) -> int:
    n_max = args.n
    cap = effective_cap(args, DEFAULT_CAP)
    if n_max > cap:
        raise CapExceeded(f"--n {n_max} exceeds cap {cap}")
    results = checks.run_checks(n_max, jobs=args.jobs)
    lines = []
    for r in results:
        # timings go to stderr so stdout stays reproducible
        print(f"{r.name}: {r.seconds:.2f}s", file=sys.stderr)
        lines.append(r.line())
        lines += [f"    {msg}" for msg in r.failures]
    ok = all(r.ok for r in results)
    lines.append("ALL PASS" if ok else "FAILURES")
    record = {
        "n_max": n_max,
        "checks": [
            {"name": r.name, "ok": r.ok, "cases": r.cases, "failures": r.failures}
            for r in results
        ],
        "ok": ok,
    }
    emit(record, lines, args.format, out)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["plain", "json", "csv"], default="plain")
    common.add_argument("--cap", type=int, default=None, help="enumeration size limit")
    common.add_argument("--force", action="store_true", help="allow caps above the defaults")
    common.add_argument("--jobs", type=int, default=1, help="worker processes")

    parser = argparse.ArgumentParser(
        prog="parkvol",
        description="Generalized parking functions, descent numbers and ribbon chain polytopes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invenum", parents=[common], help="inversion enumerator I_n(q)")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_invenum)

    p = sub.add_parser("sumenum", parents=[common], help="sum enumerator I_a(q)")
    p.add_argument("--a", required=True, help="non-decreasing bound vector, e.g. 1,2,3")
    p.set_defaults(func=cmd_sumenum)

    p = sub.add_parser("involution", parents=[common], help="verify the strip involution")
    p.add_argument("--a", required=True)
    p.add_argument("--b", help="also draw the strip of this parking function")
    p.set_defaults(func=cmd_involution)

    p = sub.add_parser("volume", parents=[common], help="volume of Z_S(d)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--set", default="", help="subset S of {2..n-1}, comma separated")
    p.add_argument("--d", help="d_1..d_k as integers or p/q")
    p.add_argument("--q", help="use d_i = q^(i-1)")
    p.set_defaults(func=cmd_volume)

    p = sub.add_parser("pitman-stanley", parents=[common], help="parking function polytope volume")
    p.add_argument("--c", required=True)
    p.set_defaults(func=cmd_pitman_stanley)

    p = sub.add_parser("beta", parents=[common], help="permutations with descent set S")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--set", default="")
    p.set_defaults(func=cmd_beta)

    p = sub.add_parser("euler", parents=[common], help="Euler number E_n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_euler)

    p = sub.add_parser("kappa", parents=[common], help="weak compositions dominating gamma")
    p.add_argument("--gamma")
    p.add_argument("--n", type=int)
    p.add_argument("--set", default="")
    p.set_defaults(func=cmd_kappa)

    p = sub.add_parser("verify-all", parents=[common], help="run every identity check")
    p.add_argument("--n", type=int, required=True, help="largest n to use")
    p.set_defaults(func=cmd_verify_all)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
