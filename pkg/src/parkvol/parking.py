"""Generalized parking functions bounded by a non-decreasing vector ``a``.

A sequence ``b`` is an ``a``-parking function when its increasing
rearrangement is bounded by ``a`` entrywise. Parking functions are plain
tuples of ints.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import product
from math import comb
from typing import Iterator, Sequence

import numpy as np

from .combinatorics import (
    check_avector,
    check_cap,
    composition_of_avector,
    kappa_enumerate,
    multinomial,
)
from .polynomials import UniPoly, eval_at_minus_one  # noqa: F401  (re-export)

DEFAULT_CAP = 8
# rows per numpy block in the bulk enumerators
_BLOCK_ROWS = 1 << 21


def is_a_parking(b: Sequence[int], a: Sequence[int]) -> bool:
    a = check_avector(a)
    b = tuple(int(x) for x in b)
    if len(b) != len(a):
        raise ValueError(f"length mismatch: {len(b)} values against bound of length {len(a)}")
    if any(x < 1 for x in b):
        raise ValueError(f"{b} has non-positive entries")
    return all(x <= y for x, y in zip(sorted(b), a))


def enumerate_a_parking(a: Sequence[int], cap: int = DEFAULT_CAP) -> Iterator[tuple[int, ...]]:
    """Yield every ``a``-parking function once, in lexicographic order.

    Prefixes that cannot be completed are pruned: padding a prefix with ones is
    the easiest completion, so a prefix survives iff its sorted values fit
    under the last entries of ``a``.
    """
    a = check_avector(a)
    n = len(a)
    check_cap(n, cap, "parking function enumeration")
    top = a[-1]
    chosen: list[int] = []
    current: list[int] = []

    def fits() -> bool:
        off = n - len(chosen)
        return all(c <= a[off + j] for j, c in enumerate(chosen))

    def extend() -> Iterator[tuple[int, ...]]:
        if len(current) == n:
            yield tuple(current)
            return
        for v in range(1, top + 1):
            pos = _insort(chosen, v)
            if fits():
                current.append(v)
                yield from extend()
                current.pop()
            del chosen[pos]

    yield from extend()


def _insort(xs: list[int], v: int) -> int:
    i = len(xs)
    while i and xs[i - 1] > v:
        i -= 1
    xs.insert(i, v)
    return i


def _parking_blocks(a: tuple[int, ...]) -> Iterator[np.ndarray]:
    """Yield int16 arrays whose rows are all ``a``-parking functions, lex order."""
    n = len(a)
    top = a[-1]
    split = 0
    while split < n and top ** (n - split) > _BLOCK_ROWS:
        split += 1
    tail = n - split
    grid = np.indices((top,) * tail, dtype=np.int16).reshape(tail, -1).T + 1
    bound = np.asarray(a, dtype=np.int16)
    for prefix in product(range(1, top + 1), repeat=split):
        if not all(c <= a[tail + j] for j, c in enumerate(sorted(prefix))):
            continue
        rows = np.empty((grid.shape[0], n), dtype=np.int16)
        rows[:, :split] = prefix
        rows[:, split:] = grid
        ok = np.all(np.sort(rows, axis=1) <= bound, axis=1)
        if ok.any():
            yield rows[ok]


def count_a_parking(a: Sequence[int]) -> int:
    """``|P_a|`` as a sum of multinomials over the dominance set of ``a``'s level counts."""
    a = check_avector(a)
    gamma = composition_of_avector(a)
    return sum(multinomial(len(a), alpha) for alpha in kappa_enumerate(gamma))


def content(b: Sequence[int], a: Sequence[int]) -> tuple[int, ...]:
    """Multiplicities of ``1..a_n`` in ``b``."""
    if not is_a_parking(b, a):
        raise ValueError(f"{tuple(b)} is not an a-parking function for {tuple(a)}")
    counts = Counter(b)
    return tuple(counts.get(j, 0) for j in range(1, a[-1] + 1))


@lru_cache(maxsize=None)
def _sum_enumerator(a: tuple[int, ...]) -> UniPoly:
    n = len(a)
    hist = np.zeros(n * (a[-1] - 1) + 1, dtype=np.int64)
    for block in _parking_blocks(a):
        s = block.sum(axis=1, dtype=np.int64) - n
        hist[: s.max() + 1] += np.bincount(s)
    return UniPoly(int(x) for x in hist)


def sum_enumerator(a: Sequence[int], cap: int = DEFAULT_CAP) -> UniPoly:
    """``sum over b in P_a of q^(b_1 + ... + b_n - n)``, by exhaustive enumeration."""
    a = check_avector(a)
    check_cap(len(a), cap, "parking function enumeration")
    return _sum_enumerator(a)


def sum_enumerator_stream(a: Sequence[int], cap: int = DEFAULT_CAP) -> UniPoly:
    """Same polynomial as :func:`sum_enumerator`, accumulated from the tuple stream."""
    a = check_avector(a)
    n = len(a)
    counts = Counter(sum(b) - n for b in enumerate_a_parking(a, cap))
    return UniPoly.from_exponent_counts(counts)


def classical_bound(n: int) -> tuple[int, ...]:
    return tuple(range(1, n + 1))


def inversion_enumerator_via_parking(n: int, cap: int = DEFAULT_CAP) -> UniPoly:
    """``I_n(q)``: the classical sum enumerator reversed in degree ``C(n, 2)``."""
    if n < 1:
        raise ValueError("n must be positive")
    return sum_enumerator(classical_bound(n), cap).reversed_in_degree(comb(n, 2))
