"""Compositions, descent sets, Euler numbers and the dominance sets ``K_gamma``.

Compositions and weak compositions are plain tuples of ints, descent sets are
frozensets of positions in ``1..n-1``. Everything here is exact integer
arithmetic.
"""

from __future__ import annotations

from itertools import combinations, permutations
from math import factorial
from typing import Iterable, Iterator, Sequence

DEFAULT_BRUTE_CAP = 8


class CapExceeded(ValueError):
    """Raised when an exhaustive enumeration is asked for above its size cap."""


def check_cap(n: int, cap: int, what: str = "enumeration") -> None:
    if n > cap:
        raise CapExceeded(f"{what} for n={n} exceeds cap {cap}")


def check_composition(parts: Sequence[int], weak: bool = False) -> tuple[int, ...]:
    parts = tuple(int(p) for p in parts)
    low = 0 if weak else 1
    if any(p < low for p in parts):
        kind = "weak composition" if weak else "composition"
        raise ValueError(f"invalid {kind} {parts}: parts must be >= {low}")
    return parts


def check_avector(a: Sequence[int]) -> tuple[int, ...]:
    """Validate a non-decreasing sequence of positive integers."""
    a = tuple(int(x) for x in a)
    if not a:
        raise ValueError("bound vector must be non-empty")
    if a[0] < 1:
        raise ValueError(f"bound vector {a} has non-positive entries")
    if any(x > y for x, y in zip(a, a[1:])):
        raise ValueError(f"bound vector {a} is not non-decreasing")
    return a


def check_subset(n: int, S: Iterable[int]) -> frozenset[int]:
    S = frozenset(int(i) for i in S)
    bad = [i for i in S if not 1 <= i <= n - 1]
    if bad:
        raise ValueError(f"descent positions {sorted(bad)} outside [1, {n - 1}]")
    return S


def comp_of_subset(n: int, S: Iterable[int]) -> tuple[int, ...]:
    """Return ``(1, delta_1, ..., delta_{k-1})`` read off the run lengths of ``u_S``.

    ``u_S = u_1 ... u_{n-1}`` has ``u_i = a`` for ``i`` not in ``S`` and ``b``
    otherwise; ``delta_j`` are the lengths of its maximal runs.

    >>> comp_of_subset(7, {2, 3, 4})
    (1, 1, 3, 2)
    """
    if n < 1:
        raise ValueError("n must be positive")
    S = check_subset(n, S)
    if 1 in S:
        raise ValueError("1 must not belong to S")
    parts = [1]
    prev = None
    for i in range(1, n):
        letter = i in S
        if letter == prev:
            parts[-1] += 1
        else:
            parts.append(1)
        prev = letter
    return tuple(parts)


def a_of_composition(gamma: Sequence[int]) -> tuple[int, ...]:
    """``gamma_1`` ones, then ``gamma_2`` twos, and so on."""
    gamma = check_composition(gamma, weak=True)
    out: list[int] = []
    for level, part in enumerate(gamma, start=1):
        out.extend([level] * part)
    return tuple(out)


def composition_of_avector(a: Sequence[int]) -> tuple[int, ...]:
    """Run lengths of ``a`` by level ``1..a_n``; skipped levels give zero parts.

    Inverse of :func:`a_of_composition` on compositions; for bound vectors that
    skip a level the result is a weak composition.
    """
    a = check_avector(a)
    runs = [0] * a[-1]
    for x in a:
        runs[x - 1] += 1
    return tuple(runs)


def subset_of_avector(a: Sequence[int]) -> frozenset[int]:
    """``{i in [n-1] : a_{i+1} odd}``."""
    a = check_avector(a)
    return frozenset(i for i in range(1, len(a)) if a[i] % 2 == 1)


def descent_set(sigma: Sequence[int]) -> frozenset[int]:
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(1, len(sigma) + 1)):
        raise ValueError(f"{sigma} is not a permutation of 1..{len(sigma)}")
    return frozenset(i for i in range(1, len(sigma)) if sigma[i - 1] > sigma[i])


def multinomial(n: int, alpha: Sequence[int]) -> int:
    if sum(alpha) != n:
        raise ValueError(f"parts {tuple(alpha)} do not sum to {n}")
    if any(p < 0 for p in alpha):
        raise ValueError(f"negative part in {tuple(alpha)}")
    result = factorial(n)
    for p in alpha:
        result //= factorial(p)
    return result


def _parts_between(n: int, T: Iterable[int]) -> list[int]:
    cuts = [0, *sorted(T), n]
    return [b - a for a, b in zip(cuts, cuts[1:])]


def beta(n: int, S: Iterable[int]) -> int:
    """Number of permutations of ``[n]`` whose descent set is exactly ``S``.

    Inclusion-exclusion over subsets ``T`` of ``S``: the permutations with
    descent set contained in ``T`` are counted by the multinomial coefficient
    of the composition cut at ``T``.
    """
    S = sorted(check_subset(n, S))
    total = 0
    for size in range(len(S) + 1):
        sign = -1 if (len(S) - size) % 2 else 1
        for T in combinations(S, size):
            total += sign * multinomial(n, _parts_between(n, T))
    return total


def beta_bruteforce(n: int, S: Iterable[int], cap: int = DEFAULT_BRUTE_CAP) -> int:
    check_cap(n, cap, "permutation scan")
    S = check_subset(n, S)
    return sum(
        1 for sigma in permutations(range(1, n + 1)) if descent_set(sigma) == S
    )


def alternating_subset(n: int) -> frozenset[int]:
    """Descent set ``{2, 4, 6, ...}`` of the up-down permutations of ``[n]``."""
    return frozenset(range(2, n, 2))


def euler_number(n: int) -> int:
    """Euler number ``E_n`` via the Seidel-Entringer boustrophedon triangle."""
    if n < 0:
        raise ValueError("n must be non-negative")
    row = [1]
    for _ in range(n):
        nxt = [0]
        for x in reversed(row):
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[-1]


def euler_bruteforce(n: int, cap: int = DEFAULT_BRUTE_CAP) -> int:
    check_cap(n, cap, "permutation scan")
    count = 0
    for sigma in permutations(range(n)):
        if all(
            (sigma[i] < sigma[i + 1]) == (i % 2 == 0) for i in range(n - 1)
        ):
            count += 1
    return count


def kappa_enumerate(gamma: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Yield the weak compositions ``alpha`` dominating ``gamma`` in every prefix sum.

    Each ``alpha`` has exactly ``len(gamma)`` parts and the same total as
    ``gamma``. Output is lexicographically increasing. ``gamma`` may itself
    contain zero parts.
    """
    gamma = check_composition(gamma, weak=True)
    k = len(gamma)
    if k == 0:
        yield ()
        return
    n = sum(gamma)
    bounds = []
    acc = 0
    for g in gamma:
        acc += g
        bounds.append(acc)

    def extend(prefix: list[int], total: int) -> Iterator[tuple[int, ...]]:
        i = len(prefix)
        if i == k - 1:
            yield (*prefix, n - total)
            return
        for part in range(max(0, bounds[i] - total), n - total + 1):
            prefix.append(part)
            yield from extend(prefix, total + part)
            prefix.pop()

    yield from extend([], 0)


def weak_compositions(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """All weak compositions of ``n`` into ``k`` parts, lexicographic order."""
    if k == 0:
        if n == 0:
            yield ()
        return
    if k == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in weak_compositions(n - first, k - 1):
            yield (first, *rest)


def dominates(alpha: Sequence[int], gamma: Sequence[int]) -> bool:
    sa = sg = 0
    for x, g in zip(alpha, gamma):
        sa += x
        sg += g
        if sa < sg:
            return False
    return sum(alpha) == sum(gamma)
