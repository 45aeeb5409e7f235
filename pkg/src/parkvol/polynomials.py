"""Exact polynomials.

:class:`UniPoly` is a dense integer polynomial in ``q`` used for the
enumerators. :class:`MultiPoly` is a sparse polynomial with
:class:`fractions.Fraction` coefficients over an ordered tuple of variable
names; it supports definite integration against a polynomial upper limit,
which is all the nested volume integrals need.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Number = Union[int, Fraction]


class UniPoly:
    """Integer polynomial in one variable, coefficients indexed by degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def from_exponent_counts(cls, counts: Mapping[int, int]) -> "UniPoly":
        if not counts:
            return cls()
        c = [0] * (max(counts) + 1)
        for e, m in counts.items():
            c[e] += m
        return cls(c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, q: Number) -> Number:
        acc: Number = 0
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def reversed_in_degree(self, d: int) -> "UniPoly":
        """``q^d * p(1/q)``; ``d`` must be at least the degree."""
        if d < self.degree:
            raise ValueError(f"degree {self.degree} exceeds reversal degree {d}")
        c = list(self.coeffs) + [0] * (d + 1 - len(self.coeffs))
        return UniPoly(reversed(c))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        m = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (m - len(self.coeffs))
        b = other.coeffs + (0,) * (m - len(other.coeffs))
        return UniPoly(x + y for x, y in zip(a, b))

    def __repr__(self) -> str:
        return f"UniPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        return self.format()

    def format(self, var: str = "q") -> str:
        if not self.coeffs:
            return "0"
        out = []
        for e, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                mono = var if e == 1 else f"{var}^{e}"
                body = mono if mag == 1 else f"{mag}{mono}"
            if not out:
                out.append(body if c > 0 else f"-{body}")
            else:
                out.append(("+ " if c > 0 else "- ") + body)
        return " ".join(out)


def eval_at_minus_one(p: UniPoly) -> int:
    return sum(c if e % 2 == 0 else -c for e, c in enumerate(p.coeffs))


Exponents = tuple[int, ...]


class MultiPoly:
    """Sparse polynomial with exact rational coefficients.

    ``terms`` maps exponent tuples (aligned with ``variables``) to nonzero
    Fractions. Instances are treated as immutable.
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[Exponents, Number] = ()):
        self.variables: tuple[str, ...] = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"duplicate variable names in {self.variables}")
        width = len(self.variables)
        clean: dict[Exponents, Fraction] = {}
        for exps, c in dict(terms).items():
            exps = tuple(exps)
            if len(exps) != width:
                raise ValueError(f"exponent vector {exps} does not match {self.variables}")
            if c:
                clean[exps] = Fraction(c)
        self.terms: dict[Exponents, Fraction] = clean

    # construction helpers

    @classmethod
    def constant(cls, variables: Sequence[str], c: Number) -> "MultiPoly":
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def var(cls, variables: Sequence[str], name: str) -> "MultiPoly":
        variables = tuple(variables)
        exps = tuple(1 if v == name else 0 for v in variables)
        if name not in variables:
            raise ValueError(f"unknown variable {name!r}")
        return cls(variables, {exps: 1})

    @classmethod
    def monomial(cls, variables: Sequence[str], powers: Mapping[str, int], c: Number = 1) -> "MultiPoly":
        variables = tuple(variables)
        unknown = set(powers) - set(variables)
        if unknown:
            raise ValueError(f"unknown variables {sorted(unknown)}")
        return cls(variables, {tuple(powers.get(v, 0) for v in variables): c})

    def _coerce(self, other: Union["MultiPoly", Number]) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.variables != self.variables:
                raise ValueError(
                    f"variable lists differ: {self.variables} vs {other.variables}"
                )
            return other
        return MultiPoly.constant(self.variables, other)

    # ring operations

    def __add__(self, other: Union["MultiPoly", Number]) -> "MultiPoly":
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(self.variables, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: Union["MultiPoly", Number]) -> "MultiPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Number) -> "MultiPoly":
        return (-self) + other

    def __mul__(self, other: Union["MultiPoly", Number]) -> "MultiPoly":
        other = self._coerce(other)
        out: dict[Exponents, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly(self.variables, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            raise ValueError("negative power")
        result = MultiPoly.constant(self.variables, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, MultiPoly):
            return self.variables == other.variables and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == MultiPoly.constant(self.variables, other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.variables, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def degree_in(self, name: str) -> int:
        j = self.variables.index(name)
        return max((e[j] for e in self.terms), default=0)

    def occurs(self, name: str) -> bool:
        if name not in self.variables:
            return False
        j = self.variables.index(name)
        return any(e[j] for e in self.terms)

    # variable-list management

    def with_variables(self, variables: Sequence[str]) -> "MultiPoly":
        """Re-express over ``variables``; dropped variables must not occur."""
        variables = tuple(variables)
        for name in self.variables:
            if name not in variables and self.occurs(name):
                raise ValueError(f"cannot drop variable {name!r}: it occurs")
        pos = [self.variables.index(v) if v in self.variables else None for v in variables]
        out = {}
        for e, c in self.terms.items():
            out[tuple(0 if p is None else e[p] for p in pos)] = c
        return MultiPoly(variables, out)

    def prune(self) -> "MultiPoly":
        """Drop variables that appear in no term."""
        return self.with_variables([v for v in self.variables if self.occurs(v)])

    # calculus and evaluation

    def integrate_definite(self, name: str, upper: "MultiPoly") -> "MultiPoly":
        """``∫_0^upper self d(name)`` with ``upper`` free of ``name``.

        ``upper`` must share this polynomial's variable list.
        """
        upper = self._coerce(upper)
        if upper.occurs(name):
            raise ValueError(f"upper limit contains the integration variable {name!r}")
        j = self.variables.index(name)
        grouped: dict[int, dict[Exponents, Fraction]] = {}
        for e, c in self.terms.items():
            rest = e[:j] + (0,) + e[j + 1:]
            grouped.setdefault(e[j], {})[rest] = c
        result = MultiPoly(self.variables)
        power = upper
        for k in range(max(grouped, default=-1) + 1):
            if k in grouped:
                coeff = MultiPoly(self.variables, grouped[k])
                result = result + coeff * power * Fraction(1, k + 1)
            power = power * upper
        return result

    def substitute(self, assignments: Mapping[str, Number]) -> Union["MultiPoly", Fraction]:
        """Evaluate the named variables; a full evaluation returns a Fraction."""
        unknown = set(assignments) - set(self.variables)
        if unknown:
            raise ValueError(f"unknown variables {sorted(unknown)}")
        idx = [i for i, v in enumerate(self.variables) if v in assignments]
        vals = [Fraction(assignments[self.variables[i]]) for i in idx]
        keep = [i for i in range(len(self.variables)) if i not in set(idx)]
        out: dict[Exponents, Fraction] = {}
        for e, c in self.terms.items():
            for i, v in zip(idx, vals):
                if e[i]:
                    c = c * v ** e[i]
            key = tuple(e[i] for i in keep)
            out[key] = out.get(key, 0) + c
        if not keep:
            return out.get((), Fraction(0))
        return MultiPoly([self.variables[i] for i in keep], out)

    # text

    def sorted_terms(self) -> list[tuple[Exponents, Fraction]]:
        """Terms ordered by total degree, then reverse-lexicographic exponents."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), tuple(-x for x in t[0])))

    def to_text(self) -> str:
        """Canonical ``coeff * v1^e1 v2^e2`` form; see :meth:`from_text`."""
        if not self.terms:
            return "0"
        out = []
        for e, c in self.sorted_terms():
            mono = " ".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(self.variables, e) if k
            )
            body = f"{abs(c)} * {mono}" if mono else str(abs(c))
            if not out:
                out.append(body if c > 0 else f"-{body}")
            else:
                out.append(("+ " if c > 0 else "- ") + body)
        return " ".join(out)

    @classmethod
    def from_text(cls, variables: Sequence[str], text: str) -> "MultiPoly":
        """Parse the output of :meth:`to_text` back over ``variables``."""
        variables = tuple(variables)
        text = text.strip()
        if text == "0":
            return cls(variables)
        tokens = text.replace(" + ", " \x00+").replace(" - ", " \x00-").split(" \x00")
        terms: dict[Exponents, Fraction] = {}
        for tok in tokens:
            sign = -1 if tok.startswith("-") else 1
            tok = tok.lstrip("+-")
            coef, _, mono = tok.partition(" * ")
            exps = [0] * len(variables)
            for factor in mono.split():
                name, _, k = factor.partition("^")
                exps[variables.index(name)] += int(k or 1)
            key = tuple(exps)
            terms[key] = terms.get(key, 0) + sign * Fraction(coef)
        return cls(variables, terms)

    def __repr__(self) -> str:
        return f"MultiPoly({self.variables}, {self.to_text()!r})"


def linear_form(variables: Sequence[str], coeffs: Mapping[str, Number], const: Number = 0) -> MultiPoly:
    """``const + sum coeffs[v] * v`` over ``variables``."""
    variables = tuple(variables)
    p = MultiPoly.constant(variables, const)
    for name, c in coeffs.items():
        p = p + MultiPoly.var(variables, name) * c
    return p
