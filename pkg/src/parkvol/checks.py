"""Batch verification of the identities, one check per acceptance criterion.

Each check takes the largest ``n`` it may use and returns a :class:`CheckResult`.
``run_checks`` runs a selection, optionally across worker processes, and keeps
results in a fixed order.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from math import factorial
from typing import Callable

from .combinatorics import (
    alternating_subset,
    beta,
    beta_bruteforce,
    comp_of_subset,
    euler_number,
    kappa_enumerate,
    subset_of_avector,
)
from .parking import inversion_enumerator_via_parking, sum_enumerator
from .polynomials import MultiPoly, eval_at_minus_one, linear_form
from .polytope import (
    ZPolytopeSpec,
    linear_extensions_ribbon,
    pitman_stanley_integral,
    pitman_stanley_volume,
    sum_enumerator_at_minus_q,
    sum_enumerator_specialization,
    volume_formula,
    volume_integration_oracle,
    volume_parking_sum,
    volume_polynomial,
)
from .strips import verify_involution_theorem
from .trees import inversion_enumerator_via_trees

SEED = 20240601

KAPPA_131 = [
    (1, 3, 1), (1, 4, 0), (2, 2, 1), (2, 3, 0), (3, 1, 1),
    (3, 2, 0), (4, 0, 1), (4, 1, 0), (5, 0, 0),
]

# 5! Vol(Z_{4}(d1, d2, d3)) for n = 5, as printed term by term
VOLUME_N5_S4 = {
    (1, 3, 1): 20, (1, 4, 0): -5, (2, 2, 1): -30, (2, 3, 0): 10, (3, 1, 1): 20,
    (3, 2, 0): -10, (4, 0, 1): -5, (4, 1, 0): 5, (5, 0, 0): -1,
}


@dataclass
class CheckResult:
    name: str
    ok: bool
    cases: int = 0
    seconds: float = 0.0
    failures: list[str] = field(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"[{status}] {self.name}: {self.cases} cases"


class _Collector:
    def __init__(self, name: str):
        self.result = CheckResult(name, True)
        self.start = time.perf_counter()

    def check(self, cond: bool, msg: str) -> None:
        self.result.cases += 1
        if not cond:
            self.result.ok = False
            if len(self.result.failures) < 10:
                self.result.failures.append(msg)

    def done(self) -> CheckResult:
        self.result.seconds = time.perf_counter() - self.start
        return self.result


def subsets_without_one(n: int):
    """Every ``S`` inside ``{2, ..., n-1}``."""
    pool = range(2, n)
    for r in range(len(pool) + 1):
        for S in combinations(pool, r):
            yield frozenset(S)


def random_avector(rng: random.Random, n: int, top: int) -> tuple[int, ...]:
    return tuple(sorted(rng.randint(1, top) for _ in range(n)))


def random_rational_d(rng: random.Random, k: int) -> tuple[Fraction, ...]:
    return tuple(sorted(Fraction(rng.randint(1, 30), rng.randint(1, 7)) for _ in range(k)))


def check_euler_identity(n_max: int = 8) -> CheckResult:
    c = _Collector("Euler identity I_n(-1) = E_n (trees and parking functions)")
    for n in range(1, n_max + 1):
        e = euler_number(n)
        t = eval_at_minus_one(inversion_enumerator_via_trees(n))
        p = eval_at_minus_one(inversion_enumerator_via_parking(n))
        c.check(t == e, f"n={n}: trees give {t}, E_n = {e}")
        c.check(p == e, f"n={n}: parking functions give {p}, E_n = {e}")
    return c.done()


def check_cayley(n_max: int = 8) -> CheckResult:
    c = _Collector("Cayley I_n(1) = (n+1)^(n-1)")
    for n in range(1, n_max + 1):
        want = (n + 1) ** (n - 1)
        for label, poly in (
            ("trees", inversion_enumerator_via_trees(n)),
            ("parking", inversion_enumerator_via_parking(n)),
        ):
            c.check(poly(1) == want, f"n={n} {label}: {poly(1)} != {want}")
    return c.done()


def check_equidistribution(n_max: int = 7) -> CheckResult:
    c = _Collector("tree and parking inversion enumerators agree")
    for n in range(1, n_max + 1):
        t = inversion_enumerator_via_trees(n)
        p = inversion_enumerator_via_parking(n)
        c.check(t == p, f"n={n}: trees {t} vs parking {p}")
    return c.done()


def predicted_at_minus_one(a: tuple[int, ...]) -> int:
    if a[0] % 2 == 0:
        return 0
    n = len(a)
    return (-1) ** (sum(a) - n) * beta(n, subset_of_avector(a))


def check_minus_one_random(count: int = 100, n_max: int = 7, seed: int = SEED) -> CheckResult:
    c = _Collector(f"I_a(-1) closed form on {count} random a")
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, n_max)
        a = random_avector(rng, n, n)
        got = eval_at_minus_one(sum_enumerator(a))
        want = predicted_at_minus_one(a)
        c.check(got == want, f"a={a}: I_a(-1) = {got}, predicted {want}")
    return c.done()


def _involution_cases(n_max: int, seed: int):
    for n in range(1, min(n_max, 5) + 1):
        yield from combinations_with_replacement(range(1, 6), n)
    if n_max >= 6:
        rng = random.Random(seed)
        for _ in range(50):
            yield random_avector(rng, 6, 6)


def check_involution_suite(n_max: int = 6, seed: int = SEED) -> CheckResult:
    c = _Collector("involution: psi^2 = id, |ds| = 1, fixed points, census")
    for a in _involution_cases(n_max, seed):
        rep = verify_involution_theorem(a, cap=6)
        c.check(rep.ok, f"a={a}: " + "; ".join(rep.failures))
    return c.done()


def check_volume_polynomial_n5() -> CheckResult:
    c = _Collector("5! Vol(Z_{4}) equals the nine-term polynomial")
    poly = volume_polynomial(5, {4})
    want = MultiPoly(("d1", "d2", "d3"), VOLUME_N5_S4)
    c.check(poly == want, f"got {poly.to_text()}")
    return c.done()


def check_three_way(n_max: int = 6, random_d: int = 20, seed: int = SEED) -> CheckResult:
    c = _Collector("volume: formula = parking sum = integral")
    rng = random.Random(seed)
    for n in range(1, n_max + 1):
        for S in subsets_without_one(n):
            k = len(comp_of_subset(n, S))
            ds = [tuple(range(1, k + 1))] + [random_rational_d(rng, k) for _ in range(random_d)]
            for d in ds:
                spec = ZPolytopeSpec(n, S, d)
                f = volume_formula(spec)
                p = volume_parking_sum(spec)
                i = volume_integration_oracle(spec)
                c.check(f == p == i, f"n={n} S={sorted(S)} d={[str(x) for x in d]}: {f} {p} {i}")
    return c.done()


def check_chain_specialization(n_max: int = 7) -> CheckResult:
    c = _Collector("n! Vol at d = 1 equals linear extensions equals beta")
    for n in range(1, n_max + 1):
        for S in subsets_without_one(n):
            spec = ZPolytopeSpec(n, S, [1] * len(comp_of_subset(n, S)))
            v = volume_formula(spec) * factorial(n)
            le = linear_extensions_ribbon(n, S)
            b = beta(n, S)
            c.check(v == le == b, f"n={n} S={sorted(S)}: {v} {le} {b}")
    return c.done()


def check_q_specialization(n_max: int = 6) -> CheckResult:
    c = _Collector("n! Vol(Z_S(1, q, q^2, ...)) = |I_a(-q)|")
    for n in range(1, n_max + 1):
        for S in subsets_without_one(n):
            for q in (Fraction(1), Fraction(2), Fraction(3, 2)):
                v = sum_enumerator_specialization(n, S, q)
                w = sum_enumerator_at_minus_q(n, S, q)
                c.check(v == w, f"n={n} S={sorted(S)} q={q}: {v} vs {w}")
                if q == 1:
                    c.check(v == beta(n, S), f"n={n} S={sorted(S)}: q=1 gives {v}")
    return c.done()


def check_kappa_example() -> CheckResult:
    c = _Collector("K_(1,3,1) lists the nine compositions")
    got = list(kappa_enumerate((1, 3, 1)))
    c.check(got == KAPPA_131, f"got {got}")
    return c.done()


def check_pitman_stanley(n_max: int = 5, count: int = 10, seed: int = SEED) -> CheckResult:
    c = _Collector("Pitman-Stanley volume: parking sum = integral")
    rng = random.Random(seed)
    for n in range(1, n_max + 1):
        for _ in range(count):
            cs = [Fraction(rng.randint(1, 20), rng.randint(1, 6)) for _ in range(n)]
            v = pitman_stanley_volume(cs)
            w = pitman_stanley_integral(cs)
            c.check(v == w, f"c={[str(x) for x in cs]}: {v} vs {w}")
    return c.done()


def nested_simplex_integral(r: int, s: int) -> MultiPoly:
    """Integrate ``y_1^s`` over ``y_1 + ... + y_r <= a`` (innermost ``y_1``), symbolically in ``a``.

    With ``r = 0`` there is nothing to integrate and ``y_1`` sits at ``a``.
    """
    ys = [f"y{j}" for j in range(1, max(r, 1) + 1)]
    variables = (*ys, "a")
    poly = MultiPoly.monomial(variables, {"y1": s})
    if r == 0:
        return MultiPoly(("a",), {(ey + ea,): c for (ey, ea), c in poly.terms.items()})
    for j in range(1, r + 1):
        upper = linear_form(poly.variables, {f"y{m}": -1 for m in range(j + 1, r + 1)} | {"a": 1})
        poly = poly.integrate_definite(f"y{j}", upper)
        poly = poly.with_variables([v for v in poly.variables if v != f"y{j}"])
    return poly


def check_int_identity(max_rs: int = 5) -> CheckResult:
    c = _Collector("nested simplex integral = s! a^(r+s) / (r+s)!")
    for r in range(max_rs + 1):
        for s in range(max_rs + 1):
            got = nested_simplex_integral(r, s)
            want = MultiPoly.monomial(("a",), {"a": r + s}, Fraction(factorial(s), factorial(r + s)))
            c.check(got == want, f"r={r} s={s}: {got.to_text()}")
    return c.done()


def check_beta_oracle(n_max: int = 8) -> CheckResult:
    c = _Collector("beta by inclusion-exclusion = brute force; E_n = beta of alternating set")
    for n in range(1, n_max + 1):
        for r in range(n):
            for S in combinations(range(1, n), r):
                c.check(beta(n, S) == beta_bruteforce(n, S), f"n={n} S={S}")
        c.check(euler_number(n) == beta(n, alternating_subset(n)), f"E_{n}")
    return c.done()


# name -> (criterion number, callable taking n_max)
CHECKS: dict[str, tuple[int, Callable[[int], CheckResult]]] = {
    "euler": (1, lambda m: check_euler_identity(min(m, 8))),
    "cayley": (2, lambda m: check_cayley(min(m, 8))),
    "equidistribution": (3, lambda m: check_equidistribution(min(m, 7))),
    "minus-one": (4, lambda m: check_minus_one_random(100, min(m, 7))),
    "involution": (5, lambda m: check_involution_suite(min(m, 6))),
    "volume-n5": (6, lambda m: check_volume_polynomial_n5()),
    "three-way": (7, lambda m: check_three_way(min(m, 6))),
    "chain": (8, lambda m: check_chain_specialization(min(m, 7))),
    "q-specialization": (9, lambda m: check_q_specialization(min(m, 6))),
    "kappa": (10, lambda m: check_kappa_example()),
    "pitman-stanley": (11, lambda m: check_pitman_stanley(min(m, 5))),
    "int-identity": (12, lambda m: check_int_identity(5)),
}


def _run_one(args: tuple[str, int]) -> CheckResult:
    name, n_max = args
    return CHECKS[name][1](n_max)


def run_checks(n_max: int, names=None, jobs: int = 1) -> list[CheckResult]:
    names = list(names or CHECKS)
    tasks = [(name, n_max) for name in names]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_run_one, tasks))
    return [_run_one(t) for t in tasks]
