"""Volumes of the generalized chain polytopes ``Z_S(d_1, ..., d_k)`` of ribbon posets.

Three independent routes to the same exact volume:

* :func:`volume_formula` sums signed multinomials over the dominance set of
  ``comp(S)``;
* :func:`volume_parking_sum` sums signed products over the parking functions
  bounded by ``a(comp(S))``;
* :func:`volume_integration_oracle` integrates the defining region directly,
  innermost coordinate first.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, lcm
from typing import Iterable, Sequence, Union

from .combinatorics import (
    a_of_composition,
    check_cap,
    check_subset,
    comp_of_subset,
    kappa_enumerate,
    multinomial,
)
from .parking import DEFAULT_CAP, classical_bound, enumerate_a_parking, sum_enumerator
from .polynomials import MultiPoly, linear_form

Number = Union[int, Fraction]
DEFAULT_SYMBOLIC_CAP = 8


def parse_rational(text: Union[str, Number]) -> Fraction:
    """Parse ``"p/q"`` or an integer; floats are refused to keep things exact."""
    if isinstance(text, float):
        raise TypeError("use 'p/q' strings or ints, not floats")
    if isinstance(text, str) and any(ch in text for ch in ".eE"):
        raise ValueError(f"{text!r}: decimal notation is not accepted, use p/q")
    return Fraction(text)


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


@dataclass(frozen=True)
class ZPolytopeSpec:
    """``n``, a subset ``S`` of ``{2..n-1}`` and ``0 < d_1 <= ... <= d_k``, ``k = len(comp(S))``."""

    n: int
    S: frozenset
    d: tuple

    def __post_init__(self):
        comp = comp_of_subset(self.n, self.S)
        d = tuple(parse_rational(x) for x in self.d)
        if len(d) != len(comp):
            raise ValueError(f"comp(S) = {comp} needs {len(comp)} values of d, got {len(d)}")
        if d[0] <= 0:
            raise ValueError("d_1 must be positive")
        if any(x > y for x, y in zip(d, d[1:])):
            raise ValueError(f"d = {tuple(map(str, d))} is not non-decreasing")
        object.__setattr__(self, "S", check_subset(self.n, self.S))
        object.__setattr__(self, "d", d)

    @property
    def comp(self) -> tuple[int, ...]:
        return comp_of_subset(self.n, self.S)

    @property
    def k(self) -> int:
        return len(self.comp)


@dataclass(frozen=True)
class RibbonPoset:
    """Poset on ``z_1..z_n`` with ``z_i > z_{i+1}`` for ``i`` in ``S`` and ``z_i < z_{i+1}`` otherwise."""

    n: int
    S: frozenset

    def __post_init__(self):
        object.__setattr__(self, "S", check_subset(self.n, self.S))

    def covers(self) -> list[tuple[int, int]]:
        """Cover relations as ``(lower, upper)`` pairs of 1-based indices."""
        return [(i + 1, i) if i in self.S else (i, i + 1) for i in range(1, self.n)]


def window_starts(comp: Sequence[int]) -> list[int]:
    """``rho_i = 1 + delta_1 + ... + delta_{i-1}`` for ``i = 1..k``."""
    rho = [1]
    for delta in comp[1:]:
        rho.append(rho[-1] + delta)
    return rho


def defining_inequalities(spec: ZPolytopeSpec) -> list[tuple[tuple[int, ...], Fraction]]:
    """Rows ``(c, b)`` meaning ``c . x <= b``: non-negativity, ``x_1 <= d_1``, then the windows."""
    n = spec.n
    rows = []
    for j in range(n):
        rows.append((tuple(-1 if m == j else 0 for m in range(n)), Fraction(0)))
    rows.append((tuple(1 if m == 0 else 0 for m in range(n)), spec.d[0]))
    rho = window_starts(spec.comp)
    for i in range(len(rho) - 1):
        lo, hi = rho[i], rho[i + 1]
        rows.append((tuple(1 if lo <= m + 1 <= hi else 0 for m in range(n)), spec.d[i + 1]))
    return rows


def d_names(k: int) -> tuple[str, ...]:
    return tuple(f"d{i}" for i in range(1, k + 1))


def _global_sign(comp: Sequence[int]) -> int:
    # (-1)^(1 + delta_2 + delta_4 + ...); comp = (1, delta_1, delta_2, ...)
    return -1 if (1 + sum(comp[2::2])) % 2 else 1


def _odd_part_sign(alpha: Sequence[int]) -> int:
    return -1 if sum(alpha[0::2]) % 2 else 1


@lru_cache(maxsize=None)
def _volume_polynomial(n: int, S: frozenset) -> MultiPoly:
    comp = comp_of_subset(n, S)
    sign = _global_sign(comp)
    names = d_names(len(comp))
    terms = {}
    for alpha in kappa_enumerate(comp):
        terms[alpha] = sign * _odd_part_sign(alpha) * multinomial(n, alpha)
    return MultiPoly(names, terms)


def volume_polynomial(n: int, S: Iterable[int]) -> MultiPoly:
    """``n! * Vol(Z_S)`` as a polynomial in ``d1..dk``, global sign applied."""
    return _volume_polynomial(n, check_subset(n, S))


def _d_assignment(d: Sequence[Fraction]) -> dict[str, Fraction]:
    return dict(zip(d_names(len(d)), d))


def volume_formula(spec: ZPolytopeSpec) -> Fraction:
    vol = volume_polynomial(spec.n, spec.S).substitute(_d_assignment(spec.d)) / factorial(spec.n)
    if vol <= 0:
        raise ArithmeticError(f"non-positive volume {vol} for {spec}: sign bug")
    return vol


def volume_parking_sum(spec: ZPolytopeSpec, cap: int = DEFAULT_CAP) -> Fraction:
    """Signed sum of ``prod (-1)^b_i d_{b_i}`` over parking functions bounded by ``a(comp(S))``."""
    comp = spec.comp
    a = a_of_composition(comp)
    # common denominator keeps the inner loop in integers
    den = lcm(*(x.denominator for x in spec.d))
    weights = [0] + [(-1) ** j * int(x * den) for j, x in enumerate(spec.d, start=1)]
    total = 0
    for b in enumerate_a_parking(a, cap):
        prod = 1
        for v in b:
            prod *= weights[v]
        total += prod
    vol = Fraction(_global_sign(comp) * total, den ** spec.n * factorial(spec.n))
    if vol <= 0:
        raise ArithmeticError(f"non-positive volume {vol} for {spec}: sign bug")
    return vol


def _upper_limit(variables: Sequence[str], j: int, comp: Sequence[int]) -> MultiPoly:
    """Upper limit for ``x_j`` in the nested integral, over ``variables``."""
    if j == 1:
        return MultiPoly.var(variables, "d1")
    rho = window_starts(comp)
    i = max(t for t in range(len(rho)) if rho[t] < j)
    coeffs = {f"x{m}": -1 for m in range(rho[i], j)}
    coeffs[f"d{i + 2}"] = 1
    return linear_form(variables, coeffs)


def _integrate_down_to(n: int, S: frozenset, stop: int) -> MultiPoly:
    """Integrate ``x_n, x_{n-1}, ..., x_stop`` of the volume integrand in that order."""
    comp = comp_of_subset(n, S)
    variables = tuple(f"x{j}" for j in range(1, n + 1)) + d_names(len(comp))
    poly = MultiPoly.constant(variables, 1)
    for j in range(n, stop - 1, -1):
        poly = poly.integrate_definite(f"x{j}", _upper_limit(poly.variables, j, comp))
        poly = poly.with_variables([v for v in poly.variables if v != f"x{j}"])
    return poly


@lru_cache(maxsize=None)
def _integrated_volume(n: int, S: frozenset) -> MultiPoly:
    return _integrate_down_to(n, S, 1).prune()


def volume_by_integration(n: int, S: Iterable[int], cap: int = DEFAULT_SYMBOLIC_CAP) -> MultiPoly:
    """``Vol(Z_S)`` as a polynomial in the ``d``'s, from the nested integral alone."""
    check_cap(n, cap, "symbolic integration")
    return _integrated_volume(n, check_subset(n, S))


def volume_integration_oracle(spec: ZPolytopeSpec, cap: int = DEFAULT_SYMBOLIC_CAP) -> Fraction:
    """Exact volume from the nested integral evaluated at ``spec.d``.

    The integral only describes the polytope when every window's first upper
    limit ``d_{i+1} - x_{rho_i}`` stays non-negative, and ``x_{rho_i}`` reaches
    ``d_i``; that is checked before evaluating.
    """
    for lo, hi in zip(spec.d, spec.d[1:]):
        if hi - lo < 0:
            raise ValueError("negative upper limit: d must be non-decreasing")
    poly = volume_by_integration(spec.n, spec.S, cap)
    assignment = {v: x for v, x in _d_assignment(spec.d).items() if v in poly.variables}
    value = poly.substitute(assignment)
    return value if isinstance(value, Fraction) else Fraction(0)


def j_partial(n: int, S: Iterable[int], i: int) -> MultiPoly:
    """Inner integrals over ``x_n .. x_{rho_i + 1}``: a polynomial in ``x_{rho_i}`` and ``d_{i+1}..d_k``."""
    S = check_subset(n, S)
    comp = comp_of_subset(n, S)
    k = len(comp)
    if not 1 <= i <= k:
        raise ValueError(f"window index {i} outside 1..{k}")
    rho = window_starts(comp)
    poly = _integrate_down_to(n, S, rho[i - 1] + 1)
    keep = [f"x{rho[i - 1]}"] + [f"d{t}" for t in range(i + 1, k + 1)]
    return poly.with_variables(keep)


def j_partial_closed_form(n: int, S: Iterable[int], i: int) -> MultiPoly:
    """The signed sum over the dominance set of ``(0, delta_i, ..., delta_{k-1})``."""
    S = check_subset(n, S)
    comp = comp_of_subset(n, S)
    k = len(comp)
    rho = window_starts(comp)
    deltas = comp[1:]  # deltas[t - 1] is delta_t
    tail = deltas[i - 1:]
    sign = -1 if sum(tail[1::2]) % 2 else 1
    keep = [f"x{rho[i - 1]}"] + [f"d{t}" for t in range(i + 1, k + 1)]
    terms = {}
    for alpha in kappa_enumerate((0, *tail)):
        den = 1
        for p in alpha:
            den *= factorial(p)
        terms[alpha] = Fraction(sign * _odd_part_sign(alpha), den)
    return MultiPoly(keep, terms)


def linear_extensions_ribbon(n: int, S: Iterable[int], cap: int = 20) -> int:
    """Linear extensions of the ribbon poset, by dynamic programming over down-sets."""
    check_cap(n, cap, "linear extension count")
    poset = RibbonPoset(n, S)
    below = [0] * n
    for lo, hi in poset.covers():
        below[hi - 1] |= 1 << (lo - 1)
    ways = [0] * (1 << n)
    ways[0] = 1
    for mask in range(1 << n):
        w = ways[mask]
        if not w:
            continue
        for z in range(n):
            if not mask >> z & 1 and below[z] & mask == below[z]:
                ways[mask | 1 << z] += w
    return ways[-1]


def sum_enumerator_specialization(n: int, S: Iterable[int], q: Union[str, Number]) -> Fraction:
    """``n! * Vol(Z_S(1, q, q^2, ...))`` for ``q >= 1``."""
    q = parse_rational(q)
    if q < 1:
        raise ValueError("q must be at least 1")
    comp = comp_of_subset(n, S)
    spec = ZPolytopeSpec(n, S, [q ** i for i in range(len(comp))])
    return volume_formula(spec) * factorial(n)


def sum_enumerator_at_minus_q(n: int, S: Iterable[int], q: Union[str, Number]) -> Fraction:
    """``|I_a(-q)|`` for ``a = a(comp(S))``, from the enumerated sum enumerator."""
    q = parse_rational(q)
    a = a_of_composition(comp_of_subset(n, S))
    return abs(sum_enumerator(a)(-q))


def pitman_stanley_volume(c: Sequence[Union[str, Number]], cap: int = DEFAULT_CAP) -> Fraction:
    """``Vol(Pi_n(c))`` as ``(1/n!) * sum over parking functions b of prod c_{b_i}``."""
    c = [parse_rational(x) for x in c]
    if not c or any(x <= 0 for x in c):
        raise ValueError("c must be a non-empty list of positive rationals")
    n = len(c)
    total = Fraction(0)
    for b in enumerate_a_parking(classical_bound(n), cap):
        prod = Fraction(1)
        for v in b:
            prod *= c[v - 1]
        total += prod
    return total / factorial(n)


def pitman_stanley_kappa(c: Sequence[Union[str, Number]]) -> Fraction:
    """Same volume grouped by content: multinomials over the dominance set of ``(1, ..., 1)``."""
    c = [parse_rational(x) for x in c]
    n = len(c)
    total = Fraction(0)
    for alpha in kappa_enumerate((1,) * n):
        term = Fraction(multinomial(n, alpha))
        for x, e in zip(c, alpha):
            term *= x ** e
        total += term
    return total / factorial(n)


def pitman_stanley_integral(c: Sequence[Union[str, Number]]) -> Fraction:
    """Nested integral over ``x >= 0`` with prefix sums of ``x`` bounded by those of ``c``."""
    c = [parse_rational(x) for x in c]
    n = len(c)
    variables = tuple(f"x{j}" for j in range(1, n + 1))
    bound = []
    acc = Fraction(0)
    for x in c:
        acc += x
        bound.append(acc)
    poly = MultiPoly.constant(variables, 1)
    for j in range(n, 0, -1):
        upper = linear_form(poly.variables, {f"x{m}": -1 for m in range(1, j)}, bound[j - 1])
        poly = poly.integrate_definite(f"x{j}", upper)
        poly = poly.with_variables([v for v in poly.variables if v != f"x{j}"])
    return poly.terms.get((), Fraction(0))
