"""Properly filled horizontal strips and the sign-reversing involution on them.

Columns are numbered ``1..n`` left to right; column ``i`` of the diagram for a
bound vector ``a`` has height ``a_{n+1-i}``. Rows are numbered from the top
starting at 1. A strip stores, per column, the row of its cell and the number
written there. Odd rows read increasing left to right, even rows decreasing.

Moving the rightmost moveable cell one row in its assigned direction pairs up
strips of opposite sign; the unpaired strips are counted by a descent number.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

from .combinatorics import beta, check_avector, check_cap, descent_set, subset_of_avector
from .parking import DEFAULT_CAP, enumerate_a_parking, is_a_parking

DEFAULT_SWEEP_CAP = 6


class Direction(enum.Enum):
    UP = "up"
    DOWN = "down"


class FixedPoint(ValueError):
    """The involution is undefined on strips with no moveable cell."""


class InvalidStrip(ValueError):
    pass


def column_heights(a: Sequence[int]) -> tuple[int, ...]:
    return tuple(reversed(check_avector(a)))


@dataclass(frozen=True)
class FilledStrip:
    bound: tuple[int, ...]
    row: tuple[int, ...]
    fill: tuple[int, ...]
    heights: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "heights", tuple(reversed(self.bound)))

    @property
    def n(self) -> int:
        return len(self.bound)

    def problems(self) -> list[str]:
        """Every violated strip condition, as readable messages."""
        n = self.n
        out = []
        if len(self.row) != n or len(self.fill) != n:
            return [f"expected {n} cells, got rows {self.row} fill {self.fill}"]
        if sorted(self.fill) != list(range(1, n + 1)):
            out.append(f"fill {self.fill} is not a permutation of 1..{n}")
        for i in range(n):
            if not 1 <= self.row[i] <= self.heights[i]:
                out.append(f"column {i + 1}: row {self.row[i]} outside 1..{self.heights[i]}")
        for i in range(n - 1):
            if self.row[i] < self.row[i + 1]:
                out.append(f"columns {i + 1},{i + 2}: rows rise to the left")
            elif self.row[i] == self.row[i + 1] and not _ordered(
                self.row[i], self.fill[i], self.fill[i + 1]
            ):
                out.append(f"columns {i + 1},{i + 2}: row {self.row[i]} filled out of order")
        return out

    def validate(self) -> "FilledStrip":
        bad = self.problems()
        if bad:
            raise InvalidStrip("; ".join(bad))
        return self

    def s(self) -> int:
        return sum(r - 1 for r in self.row)

    def ascii(self) -> str:
        """Draw the diagram; cells of the strip show their number, others a dot."""
        width = len(str(self.n))
        lines = []
        for r in range(1, max(self.heights) + 1):
            cells = []
            for i in range(self.n):
                if r > self.heights[i]:
                    cells.append(" " * width)
                elif self.row[i] == r:
                    cells.append(str(self.fill[i]).rjust(width))
                else:
                    cells.append(".".rjust(width))
            lines.append(" ".join(cells).rstrip())
        return "\n".join(lines)


def _ordered(r: int, left: int, right: int) -> bool:
    return left < right if r % 2 else left > right


def strip_of_parking(b: Sequence[int], a: Sequence[int]) -> FilledStrip:
    """Place the indices with ``b_i = j`` in row ``j``, filling columns from the right."""
    a = check_avector(a)
    if not is_a_parking(b, a):
        raise ValueError(f"{tuple(b)} is not an a-parking function for {a}")
    n = len(a)
    row = [0] * n
    fill = [0] * n
    col = n
    for j in range(1, max(b) + 1):
        block = [i + 1 for i, v in enumerate(b) if v == j]
        # block is written left to right in columns col-len+1 .. col
        ordered = block if j % 2 else block[::-1]
        start = col - len(block)
        for offset, m in enumerate(ordered):
            row[start + offset] = j
            fill[start + offset] = m
        col = start
    return FilledStrip(a, tuple(row), tuple(fill))


def parking_of_strip(H: FilledStrip) -> tuple[int, ...]:
    b = [0] * H.n
    for r, m in zip(H.row, H.fill):
        b[m - 1] = r
    return tuple(b)


def assigned_direction(H: FilledStrip, i: int) -> Direction:
    """Direction of column ``i`` (1-based); a virtual ``n+1`` sits right of the strip in row 1."""
    n = H.n
    if not 1 <= i <= n:
        raise IndexError(f"column {i} outside 1..{n}")
    here = H.fill[i - 1]
    right = H.fill[i] if i < n else n + 1
    eps = (1 if here > right else -1) * (-1 if H.row[i - 1] % 2 else 1)
    return Direction.UP if eps == -1 else Direction.DOWN


def _move_ok(H: FilledStrip, i: int, new_row: int) -> bool:
    """Whether column ``i`` (0-based) can sit in ``new_row`` with everything else fixed.

    Rows of a strip are contiguous runs of columns, so checking the two
    neighbouring columns is enough.
    """
    if not 1 <= new_row <= H.heights[i]:
        return False
    if i > 0:
        left = H.row[i - 1]
        if left < new_row:
            return False
        if left == new_row and not _ordered(new_row, H.fill[i - 1], H.fill[i]):
            return False
    if i < H.n - 1:
        right = H.row[i + 1]
        if right > new_row:
            return False
        if right == new_row and not _ordered(new_row, H.fill[i], H.fill[i + 1]):
            return False
    return True


def moveable(H: FilledStrip, i: int) -> Optional[Direction]:
    """Direction in which column ``i`` (1-based) can move, or None."""
    d = assigned_direction(H, i)
    c = i - 1
    if d is Direction.DOWN:
        return d if _move_ok(H, c, H.row[c] + 1) else None
    # an up move never needs further conditions; guard the claim anyway
    if not _move_ok(H, c, H.row[c] - 1):
        raise AssertionError(f"up move of column {i} breaks the strip:\n{H.ascii()}")
    return d


def moveable_cells(H: FilledStrip) -> dict[int, Direction]:
    out = {}
    for i in range(1, H.n + 1):
        d = moveable(H, i)
        if d is not None:
            out[i] = d
    return out


def move(H: FilledStrip, i: int, d: Direction) -> FilledStrip:
    row = list(H.row)
    row[i - 1] += 1 if d is Direction.DOWN else -1
    return FilledStrip(H.bound, tuple(row), H.fill)


def rightmost_moveable(H: FilledStrip) -> Optional[tuple[int, Direction]]:
    for i in range(H.n, 0, -1):
        d = moveable(H, i)
        if d is not None:
            return i, d
    return None


def psi(H: FilledStrip) -> FilledStrip:
    """Move the rightmost moveable cell one row in its assigned direction."""
    hit = rightmost_moveable(H)
    if hit is None:
        raise FixedPoint(f"no moveable cell in\n{H.ascii()}")
    return move(H, *hit)


def s_statistic(H: FilledStrip) -> int:
    return H.s()


def enumerate_strips(a: Sequence[int], cap: int = DEFAULT_CAP) -> Iterator[FilledStrip]:
    a = check_avector(a)
    for b in enumerate_a_parking(a, cap):
        yield strip_of_parking(b, a)


def fixed_points(a: Sequence[int], cap: int = DEFAULT_CAP) -> Iterator[FilledStrip]:
    for H in enumerate_strips(a, cap):
        if rightmost_moveable(H) is None:
            yield H


def is_bottom_fixed_point(H: FilledStrip) -> bool:
    """Every cell at the bottom of its column and ``sigma_n ... sigma_1`` has the predicted descents."""
    if H.row != H.heights:
        return False
    return descent_set(H.fill[::-1]) == subset_of_avector(H.bound)


@dataclass
class InvolutionReport:
    bound: tuple[int, ...]
    strips: int = 0
    signed_sum: int = 0
    expected: int = 0
    fixed: int = 0
    pairs: int = 0
    predicted_fixed: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_involution_theorem(
    a: Sequence[int], cap: int = DEFAULT_SWEEP_CAP, max_failures: int = 5
) -> InvolutionReport:
    """Check the involution and the signed count on every strip for ``a``.

    For every strip with a moveable cell: the involution is an involution,
    changes ``s`` by one, and alters the moveable set only at the moved
    column. Fixed points must be bottom fillings with the
    predicted descent set, and the signed sum must match the closed form.
    """
    a = check_avector(a)
    n = len(a)
    check_cap(n, cap, "strip sweep")
    rep = InvolutionReport(bound=a)
    S = subset_of_avector(a)
    if a[0] % 2:
        rep.predicted_fixed = beta(n, S)
        rep.expected = (-1) ** (sum(a) - n) * rep.predicted_fixed
    top_s = sum(a) - n

    def fail(msg: str, H: FilledStrip) -> None:
        if len(rep.failures) < max_failures:
            rep.failures.append(f"{msg}\nrow={H.row} fill={H.fill}\n{H.ascii()}")

    for H in enumerate_strips(a, cap=n):
        rep.strips += 1
        rep.signed_sum += -1 if H.s() % 2 else 1
        cells = moveable_cells(H)
        if not cells:
            rep.fixed += 1
            if not is_bottom_fixed_point(H):
                fail("fixed point is not a bottom filling with the predicted descent set", H)
            if H.s() != top_s:
                fail(f"fixed point has s={H.s()}, expected {top_s}", H)
            continue
        i = max(cells)
        H2 = move(H, i, cells[i])
        if H2.problems():
            fail(f"move of column {i} leaves the strip set: {H2.problems()}", H)
            continue
        if abs(H2.s() - H.s()) != 1:
            fail("s does not change by exactly one", H)
        cells2 = moveable_cells(H2)
        flipped = Direction.UP if cells[i] is Direction.DOWN else Direction.DOWN
        expected_cells = dict(cells)
        expected_cells[i] = flipped
        if cells2 != expected_cells:
            fail(f"moveable cells change beyond column {i}: {cells} -> {cells2}", H)
        if psi(H2) != H:
            fail("psi(psi(H)) != H", H)
        if H.s() % 2 == 0:
            rep.pairs += 1

    if rep.fixed != rep.predicted_fixed:
        rep.failures.append(f"{rep.fixed} fixed points, predicted {rep.predicted_fixed}")
    if rep.signed_sum != rep.expected:
        rep.failures.append(f"signed sum {rep.signed_sum}, predicted {rep.expected}")
    return rep
