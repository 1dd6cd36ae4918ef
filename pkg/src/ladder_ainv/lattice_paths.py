"""Monotone lattice paths, NE-turns, side predicates, and the bivector.

Paths take unit steps east ("E") or north ("N").  A north-east turn is a
path point whose incoming step is north and whose outgoing step is east.
Every path meets each antidiagonal x + y exactly once, so a path is
equivalently a sequence of offsets x - y, one per antidiagonal level; much
of the maximization machinery works in those coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import Infeasible, MinorError, RegionError
from .region import Point


@dataclass(frozen=True)
class LatticePath:
    start: Point
    steps: str  # characters "E" and "N"

    def __post_init__(self):
        bad = set(self.steps) - {"E", "N"}
        if bad:
            raise ValueError(f"invalid step characters: {sorted(bad)}")

    @property
    def end(self) -> Point:
        return Point(self.start.x + self.steps.count("E"), self.start.y + self.steps.count("N"))

    def __len__(self) -> int:
        return len(self.steps)

    def points(self) -> Iterator[Point]:
        x, y = self.start
        yield Point(x, y)
        for c in self.steps:
            if c == "E":
                x += 1
            else:
                y += 1
            yield Point(x, y)

    def ne_turns(self) -> list[Point]:
        """Path points entered by a north step and left by an east step."""
        out = []
        pts = list(self.points())
        for i in range(1, len(pts) - 1):
            if pts[i].y == pts[i - 1].y + 1 and pts[i + 1].x == pts[i].x + 1:
                out.append(pts[i])
        return out

    def weakly_southeast_of(self, s: tuple[int, int]) -> bool:
        """True when every path point lies weakly east or weakly south of s."""
        sx, sy = s
        return all(p.x >= sx or p.y <= sy for p in self.points())

    def weakly_northwest_of(self, t: tuple[int, int]) -> bool:
        """True when every path point lies weakly west or weakly north of t."""
        tx, ty = t
        return all(p.x <= tx or p.y >= ty for p in self.points())

    @classmethod
    def from_offsets(cls, start: Point, offsets: Sequence[int]) -> "LatticePath":
        """Rebuild a path from its offset (x - y) value at each successive
        antidiagonal level; consecutive offsets must differ by exactly 1."""
        steps = []
        for a, b in zip(offsets, offsets[1:]):
            if b == a + 1:
                steps.append("E")
            elif b == a - 1:
                steps.append("N")
            else:
                raise ValueError(f"offsets must change by 1 per level, got {a} -> {b}")
        return cls(start, "".join(steps))


@dataclass(frozen=True)
class Minor:
    """Cogenerating bivector [u_1..u_n | v_1..v_n], strictly increasing."""

    u: tuple[int, ...]
    v: tuple[int, ...]

    def __post_init__(self):
        if len(self.u) != len(self.v) or not self.u:
            raise MinorError("u and v must be nonempty and of equal length")
        for name, seq in (("u", self.u), ("v", self.v)):
            if seq[0] < 1:
                raise MinorError(f"{name} must consist of positive integers")
            if any(a >= b for a, b in zip(seq, seq[1:])):
                raise MinorError(f"{name} must be strictly increasing")

    @property
    def n(self) -> int:
        return len(self.u)

    def start_heights(self) -> tuple[int, ...]:
        """a_i = u_{n-i+1} - 1, the y-coordinate of the i-th path start."""
        return tuple(self.u[self.n - i] - 1 for i in range(1, self.n + 1))

    def end_indents(self) -> tuple[int, ...]:
        """b_i = v_{n-i+1} - 1; the i-th path ends at (B - b_i, A)."""
        return tuple(self.v[self.n - i] - 1 for i in range(1, self.n + 1))

    def path_endpoints(self, A: int, B: int) -> tuple[tuple[Point, ...], tuple[Point, ...]]:
        """Start and end points of the n paths on the [0,B] x [0,A] grid."""
        if self.u[-1] > A + 1:
            raise MinorError(f"u_n = {self.u[-1]} exceeds A + 1 = {A + 1}")
        if self.v[-1] > B + 1:
            raise MinorError(f"v_n = {self.v[-1]} exceeds B + 1 = {B + 1}")
        starts = tuple(Point(0, a) for a in self.start_heights())
        ends = tuple(Point(B - b, A) for b in self.end_indents())
        return starts, ends


def zigzag_witness(start: Point, end: Point, gates: Sequence[tuple[int, int]] = ()) -> LatticePath:
    """Max-turn path from start to end threading the given gate points.

    Consecutive stops (start, gates..., end) must have nonnegative x- and
    y-displacements.  Each segment contributes min(dx, dy) turns: rising
    segments (dx > dy) put the straight east run first and end on a
    zig-zag, falling segments (dx < dy) zig-zag first and finish with the
    straight north run, matching the shapes used in the worked figures.
    """
    stops = [Point(*start)] + [Point(*g) for g in gates] + [Point(*end)]
    steps: list[str] = []
    for g, h in zip(stops, stops[1:]):
        dx, dy = h.x - g.x, h.y - g.y
        if dx < 0 or dy < 0:
            raise Infeasible(f"gate sequence forces negative displacement {g} -> {h}")
        if dx >= dy:
            steps.append("E" * (dx - dy) + "NE" * dy)
        else:
            steps.append("NE" * dx + "N" * (dy - dx))
    return LatticePath(stops[0], "".join(steps))


def count_turns_excluding(path: LatticePath, excluded: Sequence[tuple[int, int]] = ()) -> int:
    """NE-turns of the path that do not sit on an excluded point."""
    banned = {Point(*p) for p in excluded}
    return sum(1 for t in path.ne_turns() if t not in banned)


def max_turns_bound(start: Point, end: Point) -> int:
    """A path from start to end has at most min(dx, dy) NE-turns."""
    if end.x < start.x or end.y < start.y:
        raise RegionError(f"end {end} is not weakly north-east of start {start}")
    return min(end.x - start.x, end.y - start.y)
