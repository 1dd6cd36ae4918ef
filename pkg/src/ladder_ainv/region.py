"""Staircase regions on the integer grid and their combinatorial data.

A region lives on the grid [0, B] x [0, A] and is stored as one closed
x-interval per row.  The defining property (any two cells spanning a
rectangle force the whole rectangle to be present) is equivalent to both
interval endpoints being non-decreasing from bottom row to top row, which
is what the constructors validate.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterator, NamedTuple, Sequence

from .errors import AssumptionViolated, RegionError

if TYPE_CHECKING:
    from .lattice_paths import Minor


class Point(NamedTuple):
    x: int
    y: int

    def __repr__(self) -> str:
        return f"({self.x},{self.y})"


class BoundarySide(enum.Enum):
    UPPER = "upper"
    LOWER = "lower"


class Corner(NamedTuple):
    point: Point
    side: BoundarySide


@dataclass(frozen=True)
class LadderRegion:
    """Immutable staircase region with one x-interval per row y = 0..A."""

    A: int
    B: int
    lows: tuple[int, ...]
    highs: tuple[int, ...]

    # -- constructors -------------------------------------------------

    @classmethod
    def from_row_intervals(cls, A: int, B: int, intervals: Sequence[tuple[int, int]]) -> "LadderRegion":
        if A < 0 or B < 0:
            raise RegionError(f"grid bounds must be nonnegative, got A={A}, B={B}")
        if len(intervals) != A + 1:
            raise RegionError(f"expected {A + 1} row intervals, got {len(intervals)}")
        lows = tuple(int(lo) for lo, _ in intervals)
        highs = tuple(int(hi) for _, hi in intervals)
        for y, (lo, hi) in enumerate(zip(lows, highs)):
            if not (0 <= lo <= hi <= B):
                raise RegionError(f"row {y}: interval [{lo},{hi}] outside 0..{B} or empty")
        for y in range(A):
            if lows[y] > lows[y + 1] or highs[y] > highs[y + 1]:
                raise RegionError(f"row {y + 1}: interval endpoints must be non-decreasing in y")
        return cls(A, B, lows, highs)

    @classmethod
    def full_rectangle(cls, A: int, B: int) -> "LadderRegion":
        return cls.from_row_intervals(A, B, [(0, B)] * (A + 1))

    @classmethod
    def from_corners(
        cls,
        A: int,
        B: int,
        upper_corners: Sequence[tuple[int, int]] = (),
        lower_corners: Sequence[tuple[int, int]] = (),
    ) -> "LadderRegion":
        """The maximal region whose inwards corners are exactly the given ones.

        An upper corner (x, y) forces rows above y to start at x; a lower
        corner (x, y) forces rows below y to end at x.
        """
        upper = [Point(*p) for p in upper_corners]
        lower = [Point(*p) for p in lower_corners]
        for name, chain in (("upper", upper), ("lower", lower)):
            for p, q in zip(chain, chain[1:]):
                if not (p.x < q.x and p.y < q.y):
                    raise RegionError(f"{name} corners must increase strictly in x and y: {p} !< {q}")
        for p in upper:
            if not (1 <= p.x <= B and 0 <= p.y <= A - 1):
                raise RegionError(f"upper corner {p} cannot occur on the {B}x{A} grid")
        for p in lower:
            if not (0 <= p.x <= B - 1 and 1 <= p.y <= A):
                raise RegionError(f"lower corner {p} cannot occur on the {B}x{A} grid")

        lows = [0] * (A + 1)
        for p in upper:
            for y in range(p.y + 1, A + 1):
                lows[y] = p.x
        highs = [B] * (A + 1)
        for p in reversed(lower):
            for y in range(0, p.y):
                highs[y] = p.x

        region = cls.from_row_intervals(A, B, list(zip(lows, highs)))
        if region.upper_inwards_corners() != list(upper) or region.lower_inwards_corners() != list(lower):
            raise RegionError("corner lists are inconsistent (do not round-trip)")
        return region

    # -- basic queries -------------------------------------------------

    def __contains__(self, point: tuple[int, int]) -> bool:
        x, y = point
        if not 0 <= y <= self.A:
            return False
        return self.lows[y] <= x <= self.highs[y]

    def row_interval(self, y: int) -> tuple[int, int]:
        return self.lows[y], self.highs[y]

    def points(self) -> Iterator[Point]:
        for y in range(self.A + 1):
            for x in range(self.lows[y], self.highs[y] + 1):
                yield Point(x, y)

    @property
    def is_upper_ladder(self) -> bool:
        return all(h == self.B for h in self.highs) and self.lows[0] == 0

    @property
    def is_lower_ladder(self) -> bool:
        return all(lo == 0 for lo in self.lows) and self.highs[self.A] == self.B

    @property
    def is_rectangle(self) -> bool:
        return self.is_upper_ladder and self.is_lower_ladder

    def transpose(self) -> "LadderRegion":
        """Mirror along the main diagonal (swaps the roles of x and y)."""
        intervals = []
        for x in range(self.B + 1):
            ys = [y for y in range(self.A + 1) if (x, y) in self]
            intervals.append((min(ys), max(ys)))
        return LadderRegion.from_row_intervals(self.B, self.A, intervals)

    # -- corners -------------------------------------------------------

    def upper_inwards_corners(self) -> list[Point]:
        """Concave corners of the upper-left boundary, sorted by x.

        (x, y) qualifies when (x, y), (x-1, y), (x, y+1) are present but
        (x-1, y+1) is not; equivalently the row start jumps to x at y+1.
        """
        out = []
        for y in range(self.A):
            if self.lows[y + 1] > self.lows[y]:
                out.append(Point(self.lows[y + 1], y))
        return out

    def lower_inwards_corners(self) -> list[Point]:
        """Concave corners of the lower-right boundary, sorted by x.

        (x, y) qualifies when (x, y), (x+1, y), (x, y-1) are present but
        (x+1, y-1) is not; equivalently the row end jumps above x at y.
        """
        out = []
        for y in range(1, self.A + 1):
            if self.highs[y] > self.highs[y - 1]:
                out.append(Point(self.highs[y - 1], y))
        return out

    def corners(self) -> list[Corner]:
        return [Corner(p, BoundarySide.UPPER) for p in self.upper_inwards_corners()] + [
            Corner(p, BoundarySide.LOWER) for p in self.lower_inwards_corners()
        ]


@dataclass(frozen=True)
class Theorem3Data:
    """Nested turn regions, their lower-right boundaries, and d.

    ``l_sets[i-1]`` and ``b_sets[i-1]`` belong to path i (the path from
    ``starts[i-1]`` to ``ends[i-1]``); ``d`` is the size of the union of all
    boundary sets and is the denominator exponent of the Hilbert series.
    """

    starts: tuple[Point, ...]
    ends: tuple[Point, ...]
    l_sets: tuple[frozenset[Point], ...]
    b_sets: tuple[frozenset[Point], ...]
    d: int
    boundary_is_path: tuple[bool, ...]
    d_formula_value: int

    @property
    def all_boundaries_in_region(self) -> bool:
        """True when every boundary set is a full staircase from start to end
        (the hypothesis under which the two-sided formula applies)."""
        return all(self.boundary_is_path)

    @property
    def d_matches_formula(self) -> bool:
        return self.d == self.d_formula_value

    def allowed_turn_sets(self) -> tuple[frozenset[Point], ...]:
        return tuple(l - b for l, b in zip(self.l_sets, self.b_sets))


def _is_staircase(points: frozenset[Point], start: Point, end: Point) -> bool:
    pts = sorted(points, key=lambda p: (p.x + p.y, p.x))
    if not pts or pts[0] != start or pts[-1] != end:
        return False
    for p, q in zip(pts, pts[1:]):
        if (q.x - p.x, q.y - p.y) not in ((1, 0), (0, 1)):
            return False
    return True


def theorem3_data(region: LadderRegion, minor: "Minor") -> Theorem3Data:
    """Nested regions L^(i), boundaries B^(i), and d for a region and minor.

    L^(n) is the region cut down to x <= end_x(n), y >= start_y(n); each
    inner L^(i) additionally requires the south-east neighbour (x+1, y-1)
    to lie in L^(i+1).  (Cutting the outermost level too is what makes
    |B^(i)| match the closed count for minors that do not start at 1; the
    cut is vacuous for u_1 = v_1 = 1.)
    """
    n = minor.n
    starts, ends = minor.path_endpoints(region.A, region.B)
    for p in list(starts) + list(ends):
        if p not in region:
            raise AssumptionViolated(f"path endpoint {p} lies outside the region")

    l_sets: list[frozenset[Point]] = [frozenset()] * n
    outer = frozenset(
        p for p in region.points() if p.x <= ends[n - 1].x and p.y >= starts[n - 1].y
    )
    l_sets[n - 1] = outer
    for i in range(n - 1, 0, -1):
        prev = l_sets[i]
        l_sets[i - 1] = frozenset(
            p
            for p in prev
            if p.x <= ends[i - 1].x and p.y >= starts[i - 1].y and Point(p.x + 1, p.y - 1) in prev
        )
    b_sets = tuple(
        frozenset(p for p in l if Point(p.x + 1, p.y - 1) not in l) for l in l_sets
    )
    union: set[Point] = set()
    for b in b_sets:
        union |= b
    flags = tuple(_is_staircase(b, s, e) for b, s, e in zip(b_sets, starts, ends))
    d_formula = (region.A + region.B + 3) * n - sum(minor.u) - sum(minor.v)
    return Theorem3Data(
        starts=starts,
        ends=ends,
        l_sets=tuple(l_sets),
        b_sets=b_sets,
        d=len(union),
        boundary_is_path=flags,
        d_formula_value=d_formula,
    )
