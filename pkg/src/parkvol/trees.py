"""Labeled trees on ``{0, ..., n}`` rooted at 0 and their inversion statistic."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator, Sequence

import numpy as np

from .combinatorics import check_cap
from .parking import DEFAULT_CAP
from .polynomials import UniPoly

_BLOCK_ROWS = 1 << 20


@dataclass(frozen=True)
class LabeledTree:
    """A rooted tree given by parent pointers.

    ``parent[v]`` is the parent of vertex ``v`` for ``v`` in ``1..n``;
    ``parent[0]`` is 0 by convention.
    """

    parent: tuple[int, ...]

    def __post_init__(self):
        p = self.parent
        if not p or p[0] != 0:
            raise ValueError("parent[0] must be 0 (the root)")
        n = len(p) - 1
        for v in range(1, n + 1):
            if not 0 <= p[v] <= n or p[v] == v:
                raise ValueError(f"bad parent {p[v]} for vertex {v}")
        for v in range(1, n + 1):
            seen = 0
            u = v
            while u != 0:
                u = p[u]
                seen += 1
                if seen > n:
                    raise ValueError(f"parent map {p} has a cycle through {v}")

    @property
    def n(self) -> int:
        return len(self.parent) - 1

    def edges(self) -> list[tuple[int, int]]:
        return [(self.parent[v], v) for v in range(1, self.n + 1)]


def tree_from_prufer(seq: Sequence[int], n: int) -> LabeledTree:
    """Decode a Prüfer sequence of length ``n - 1`` over ``{0, ..., n}``.

    Vertex 0 is treated as the largest label, so it is never removed as a leaf
    and the decoded neighbour of each removed leaf is its parent.
    """
    if len(seq) != n - 1 or any(not 0 <= x <= n for x in seq):
        raise ValueError(f"{tuple(seq)} is not a Prüfer sequence for n={n}")
    degree = [1] * (n + 1)
    for x in seq:
        degree[x] += 1
    parent = [0] * (n + 1)
    for x in seq:
        leaf = next(v for v in range(1, n + 1) if degree[v] == 1)
        parent[leaf] = x
        degree[leaf] = 0
        degree[x] -= 1
    last = next(v for v in range(1, n + 1) if degree[v] == 1)
    parent[last] = 0
    return LabeledTree(tuple(parent))


def enumerate_trees(n: int, cap: int = DEFAULT_CAP) -> Iterator[LabeledTree]:
    """Yield the ``(n+1)^(n-1)`` trees, one per Prüfer sequence in lex order."""
    if n < 1:
        raise ValueError("n must be positive")
    check_cap(n, cap, "tree enumeration")
    for seq in product(range(n + 1), repeat=n - 1):
        yield tree_from_prufer(seq, n)


def inversions(tree: LabeledTree) -> int:
    """Pairs ``i > j >= 1`` with ``j`` a strict descendant of ``i``."""
    p = tree.parent
    count = 0
    for j in range(1, tree.n + 1):
        u = p[j]
        while u != 0:
            if u > j:
                count += 1
            u = p[u]
    return count


def _prufer_blocks(n: int) -> Iterator[np.ndarray]:
    length = n - 1
    if length == 0:
        yield np.zeros((1, 0), dtype=np.int16)
        return
    split = 0
    while split < length and (n + 1) ** (length - split) > _BLOCK_ROWS:
        split += 1
    tail = length - split
    grid = np.indices((n + 1,) * tail, dtype=np.int16).reshape(tail, -1).T
    for prefix in product(range(n + 1), repeat=split):
        rows = np.empty((grid.shape[0], length), dtype=np.int16)
        rows[:, :split] = prefix
        rows[:, split:] = grid
        yield rows


def _decode_batch(seqs: np.ndarray, n: int) -> np.ndarray:
    """Vectorized :func:`tree_from_prufer`; returns an ``(N, n+1)`` parent array."""
    rows = seqs.shape[0]
    idx = np.arange(rows)
    degree = np.ones((rows, n + 1), dtype=np.int16)
    for t in range(seqs.shape[1]):
        np.add.at(degree, (idx, seqs[:, t]), 1)
    parent = np.zeros((rows, n + 1), dtype=np.int16)
    for t in range(seqs.shape[1]):
        leaf = np.argmax(degree[:, 1:] == 1, axis=1) + 1
        parent[idx, leaf] = seqs[:, t]
        degree[idx, leaf] = 0
        degree[idx, seqs[:, t]] -= 1
    last = np.argmax(degree[:, 1:] == 1, axis=1) + 1
    parent[idx, last] = 0
    return parent


def _inversions_batch(parent: np.ndarray) -> np.ndarray:
    n = parent.shape[1] - 1
    labels = np.arange(1, n + 1, dtype=np.int16)
    cur = parent[:, 1:].astype(np.intp)
    inv = np.zeros(parent.shape[0], dtype=np.int64)
    for _ in range(n):
        inv += (cur > labels).sum(axis=1)
        cur = np.take_along_axis(parent, cur, axis=1).astype(np.intp)
    return inv


@lru_cache(maxsize=None)
def _inversion_enumerator(n: int) -> UniPoly:
    hist = np.zeros(n * (n - 1) // 2 + 1, dtype=np.int64)
    for seqs in _prufer_blocks(n):
        inv = _inversions_batch(_decode_batch(seqs, n))
        hist[: inv.max() + 1] += np.bincount(inv)
    return UniPoly(int(x) for x in hist)


def inversion_enumerator_via_trees(n: int, cap: int = DEFAULT_CAP) -> UniPoly:
    """``I_n(q) = sum over trees T of q^inv(T)``, by decoding every Prüfer sequence."""
    if n < 1:
        raise ValueError("n must be positive")
    check_cap(n, cap, "tree enumeration")
    return _inversion_enumerator(n)


def inversion_enumerator_stream(n: int, cap: int = DEFAULT_CAP) -> UniPoly:
    """Same as :func:`inversion_enumerator_via_trees` but tree by tree in pure Python."""
    counts = Counter(inversions(t) for t in enumerate_trees(n, cap))
    return UniPoly.from_exponent_counts(counts)
