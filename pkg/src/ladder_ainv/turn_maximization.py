"""Maximum NE-turn counts for constrained paths and path families.

Constraints come as two kinds of gate points: a path must pass weakly
south-east of every S-gate and weakly north-west of every T-gate, and
turns landing exactly on a T-gate are never counted.  In antidiagonal
coordinates (level, offset) = (x + y, x - y) a monotone path crosses each
level once, an S-gate forces the crossing offset at its level to be >= its
own, and a T-gate forces <=; the scan below walks the gates in level order
keeping only the ones that bind.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import Infeasible, RegionError, WitnessError
from .lattice_paths import LatticePath, Minor, count_turns_excluding
from .region import Point

S_LABEL = "S"
T_LABEL = "T"
START_LABEL = "A"
END_LABEL = "B"  # carries both the S and the T role


class GatePoint(NamedTuple):
    level: int   # x + y
    offset: int  # x - y
    label: str

    @property
    def point(self) -> Point:
        if (self.level + self.offset) % 2:
            raise ValueError(f"{self} is not a lattice point")
        return Point((self.level + self.offset) // 2, (self.level - self.offset) // 2)

    def __repr__(self) -> str:
        tag = {START_LABEL: "", S_LABEL: "S", T_LABEL: "T", END_LABEL: "ST"}[self.label]
        return f"({self.level},{self.offset}){tag}"


@dataclass(frozen=True)
class SlalomTrace:
    """Sorted gate list, surviving gates, per-segment turn counts, and max."""

    p2: tuple[GatePoint, ...]
    p3: tuple[GatePoint, ...]
    segment_turns: tuple[int, ...]
    max_turns: int

    def p3_pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple((g.level, g.offset) for g in self.p3)


def _gate(point: tuple[int, int], label: str) -> GatePoint:
    x, y = point
    return GatePoint(x + y, x - y, label)


def _check_endpoint(point: Point, se_points, nw_points, what: str) -> None:
    for s in se_points:
        if point.x < s[0] and point.y > s[1]:
            raise Infeasible(f"{what} {point} is strictly north-west of constraint point {tuple(s)}")
    for t in nw_points:
        if point.x > t[0] and point.y < t[1]:
            raise Infeasible(f"{what} {point} is strictly south-east of constraint point {tuple(t)}")


def lemma1_max(a_pt: tuple[int, int], b_pt: tuple[int, int], se_points: Sequence[tuple[int, int]]) -> int:
    """Closed-form maximum for a single path south-east of the given points.

    Equals c - b - max(x - y) with the two endpoints included among the
    constraint points.
    """
    a, b = Point(*a_pt), Point(*b_pt)
    if b.x < a.x or b.y < a.y:
        raise RegionError(f"end {b} is not weakly north-east of start {a}")
    for s in se_points:
        if not (a.x <= s[0] <= b.x and a.y <= s[1] <= b.y):
            raise RegionError(f"constraint point {tuple(s)} outside the rectangle {a}..{b}")
    worst = max([a.x - a.y, b.x - b.y] + [s[0] - s[1] for s in se_points])
    return b.x - a.y - worst


def lemma2_constraints(
    i: int, minor: Minor, A: int, B: int, upper_points: Sequence[tuple[int, int]]
) -> list[Point]:
    """South-east constraint set for the i-th path of a one-sided family.

    Start/end points of paths 1..i enter shifted by how far path i must
    keep below them; the region corners enter shifted by (i-1, -(i-1)).
    The j = i terms reproduce the path's own endpoints.
    """
    a = minor.start_heights()
    b = minor.end_indents()
    pts = set()
    for j in range(1, i + 1):
        pts.add(Point(i - j, a[j - 1] - i + j))
        pts.add(Point(B - b[j - 1] + i - j, A - i + j))
    for x, y in upper_points:
        pts.add(Point(x + i - 1, y - i + 1))
    return sorted(pts)


def lemma2b_constraints(
    i: int,
    minor: Minor,
    A: int,
    B: int,
    upper_points: Sequence[tuple[int, int]],
    lower_points: Sequence[tuple[int, int]],
) -> tuple[list[Point], list[Point]]:
    """(south-east, north-west) constraint sets for path i, two-sided case.

    Unlike the one-sided set, the endpoint-derived terms stop at j = i - 1;
    the path's own endpoints are handled by the slalom run itself.
    """
    n = minor.n
    a = minor.start_heights()
    b = minor.end_indents()
    se = set()
    for j in range(1, i):
        se.add(Point(i - j, a[j - 1] - i + j))
        se.add(Point(B - b[j - 1] + i - j, A - i + j))
    for x, y in upper_points:
        se.add(Point(x + i - 1, y - i + 1))
    nw = {Point(x - n + i, y + n - i) for x, y in lower_points}
    return sorted(se), sorted(nw)


def slalom_max(
    a_pt: tuple[int, int],
    b_pt: tuple[int, int],
    se_points: Sequence[tuple[int, int]] = (),
    nw_points: Sequence[tuple[int, int]] = (),
) -> SlalomTrace:
    """Maximum countable NE-turns of a single gated path, with the trace.

    Transforms every gate to (level, offset), sorts by level (ties: start
    anchor first, end anchor last, then T-gates before S-gates, S by
    falling and T by rising offset -- on one level only the extreme gate of
    each kind can matter), then scans: an S-gate beyond the last kept
    offset starts or extends a climb, a T-gate below it starts or extends a
    descent, a gate of the same kind as the current run replaces the run's
    endpoint.  Each surviving consecutive pair contributes
    min(dx, dy) turns; a negative contribution means no path fits.
    """
    a, b = Point(*a_pt), Point(*b_pt)
    if b.x < a.x or b.y < a.y:
        raise Infeasible(f"end {b} is not weakly north-east of start {a}")
    _check_endpoint(a, se_points, nw_points, "start")
    _check_endpoint(b, se_points, nw_points, "end")

    start = _gate(a, START_LABEL)
    finish = _gate(b, END_LABEL)
    entries = [start, finish]
    # Gates at or outside the path's level range cannot bind beyond the
    # endpoint checks above, and would confuse the level-ordered scan.
    for p in se_points:
        g = _gate(p, S_LABEL)
        if start.level < g.level < finish.level:
            entries.append(g)
    for p in nw_points:
        g = _gate(p, T_LABEL)
        if start.level < g.level < finish.level:
            entries.append(g)

    def sort_key(g: GatePoint):
        rank = {START_LABEL: 0, END_LABEL: 2}.get(g.label, 1)
        t_first = 0 if g.label == T_LABEL else 1
        extreme = g.offset if g.label == T_LABEL else -g.offset
        return (g.level, rank, t_first, extreme)

    p2 = tuple(sorted(entries, key=sort_key))
    assert p2[0].label == START_LABEL and p2[-1].label == END_LABEL

    p3 = [p2[0]]
    for g in p2[1:]:
        last = p3[-1]
        s_trig = g.label in (S_LABEL, END_LABEL) and g.offset > last.offset
        t_trig = g.label in (T_LABEL, END_LABEL) and g.offset < last.offset
        if s_trig:
            if last.label == S_LABEL:
                p3[-1] = g
            else:
                p3.append(g)
        elif t_trig:
            if last.label == T_LABEL:
                p3[-1] = g
            else:
                p3.append(g)
        if g.label == END_LABEL:
            if p3[-1] is not g:
                # offset tie at the end anchor: keep it so the sum below
                # always runs up to the path's end
                p3.append(g)
            break

    segment = []
    for g, h in zip(p3, p3[1:]):
        term = min(
            (h.level + h.offset) - (g.level + g.offset),
            (h.level - h.offset) - (g.level - g.offset),
        )
        if term < 0:
            raise Infeasible(f"no path fits between consecutive gates {g} and {h}")
        dx = (h.level + h.offset) // 2 - (g.level + g.offset) // 2
        dy = (h.level - h.offset) // 2 - (g.level - g.offset) // 2
        assert term == 2 * min(dx, dy)
        segment.append(term // 2)
    return SlalomTrace(p2=p2, p3=tuple(p3), segment_turns=tuple(segment), max_turns=sum(segment))


# -- witness construction ---------------------------------------------


def _level_bands(se_points, nw_points, lo_level: int, hi_level: int):
    """Per-level offset bounds equivalent to the side predicates.

    A path is weakly south-east of S iff it crosses S's level at offset
    >= S's offset (one direction is immediate at the level itself; the
    other follows because offsets move by one per level).  Likewise
    north-west of T iff the crossing offset at T's level is <= T's.
    """
    lo: dict[int, int] = {}
    hi: dict[int, int] = {}
    for p in se_points:
        lvl, off = p[0] + p[1], p[0] - p[1]
        if lo_level < lvl < hi_level:
            lo[lvl] = max(lo.get(lvl, off), off)
    for p in nw_points:
        lvl, off = p[0] + p[1], p[0] - p[1]
        if lo_level < lvl < hi_level:
            hi[lvl] = min(hi.get(lvl, off), off)
    return lo, hi


_NEG = float("-inf")


def _max_turn_profile(
    l_a: int,
    o_a: int,
    l_b: int,
    o_b: int,
    lo: dict[int, int],
    hi: dict[int, int],
    uncounted: frozenset[tuple[int, int]],
    prefer_north: bool = True,
):
    """Offset profile of a path maximizing counted turns within the bands.

    Dynamic program over (level, offset, entered-from-north); a turn is
    counted on an east step out of a north-entered point that is not one
    of the uncounted (level, offset) locations.  Reconstruction prefers
    the north (or east) step whenever it stays optimal, which pins a
    deterministic witness.
    """
    width = l_b - l_a
    if width == 0:
        return 0, [o_a]
    if (o_b - o_a) % 2 != width % 2 or abs(o_b - o_a) > width:
        raise Infeasible(f"no monotone path from offset {o_a} to {o_b} across {width} levels")

    def valid(lvl: int, off: int) -> bool:
        if abs(off - o_a) > lvl - l_a or abs(off - o_b) > l_b - lvl:
            return False
        if off < lo.get(lvl, off) or off > hi.get(lvl, off):
            return False
        return True

    # suffix value g[lvl][(off, came_north)] = best count from here to the end
    g: list[dict[tuple[int, bool], float]] = [dict() for _ in range(width + 1)]
    g[width][(o_b, True)] = 0
    g[width][(o_b, False)] = 0
    for k in range(width - 1, -1, -1):
        lvl = l_a + k
        nxt = g[k + 1]
        cur = g[k]
        for off in range(o_a - k, o_a + k + 1, 2):
            if not valid(lvl, off):
                continue
            for came_n in (False, True):
                best = _NEG
                east = nxt.get((off + 1, False), _NEG)
                if east is not _NEG:
                    bonus = 1 if came_n and (lvl, off) not in uncounted else 0
                    best = east + bonus
                north = nxt.get((off - 1, True), _NEG)
                if north is not _NEG and north > best:
                    best = north
                if best is not _NEG:
                    cur[(off, came_n)] = best
    total = g[0].get((o_a, False), _NEG)
    if total is _NEG:
        raise Infeasible("offset bands admit no path")

    offsets = [o_a]
    off, came_n = o_a, False
    for k in range(width):
        lvl = l_a + k
        nxt = g[k + 1]
        here = g[k][(off, came_n)]
        bonus = 1 if came_n and (lvl, off) not in uncounted else 0
        east_ok = nxt.get((off + 1, False), _NEG) + bonus == here if (off + 1, False) in nxt else False
        north_ok = nxt.get((off - 1, True), _NEG) == here if (off - 1, True) in nxt else False
        take_north = north_ok and (prefer_north or not east_ok)
        if take_north:
            off, came_n = off - 1, True
        else:
            assert east_ok
            off, came_n = off + 1, False
        offsets.append(off)
    return int(total), offsets


def _verify_witness(path: LatticePath, se_points, nw_points, expected: int, what: str) -> None:
    for s in se_points:
        if not path.weakly_southeast_of(s):
            raise WitnessError(f"{what}: witness violates south-east constraint {tuple(s)}")
    for t in nw_points:
        if not path.weakly_northwest_of(t):
            raise WitnessError(f"{what}: witness violates north-west constraint {tuple(t)}")
    got = count_turns_excluding(path, nw_points)
    if got != expected:
        raise WitnessError(f"{what}: witness has {got} countable turns, expected {expected}")


def slalom_witness(
    a_pt: tuple[int, int],
    b_pt: tuple[int, int],
    se_points: Sequence[tuple[int, int]] = (),
    nw_points: Sequence[tuple[int, int]] = (),
) -> tuple[SlalomTrace, LatticePath]:
    """Slalom maximum together with a path realising it.

    The returned path satisfies every side constraint and has exactly
    ``max_turns`` NE-turns outside the north-west gate points.
    """
    trace = slalom_max(a_pt, b_pt, se_points, nw_points)
    a, b = Point(*a_pt), Point(*b_pt)
    lo, hi = _level_bands(se_points, nw_points, a.x + a.y, b.x + b.y)
    uncounted = frozenset((p[0] + p[1], p[0] - p[1]) for p in nw_points)
    count, offsets = _max_turn_profile(
        a.x + a.y, a.x - a.y, b.x + b.y, b.x - b.y, lo, hi, uncounted
    )
    if count != trace.max_turns:
        raise WitnessError(
            f"gate scan predicts {trace.max_turns} turns but the best witness has {count}"
        )
    path = LatticePath.from_offsets(a, offsets)
    _verify_witness(path, se_points, nw_points, trace.max_turns, "slalom witness")
    return trace, path


# -- family maxima -----------------------------------------------------


def theorem1_family_max(
    minor: Minor, A: int, B: int, upper_points: Sequence[tuple[int, int]]
) -> tuple[tuple[int, ...], int]:
    """Per-path maxima and total for a one-sided family, by closed formula."""
    a = minor.start_heights()
    b = minor.end_indents()
    ts = []
    for i in range(1, minor.n + 1):
        worst = []
        for j in range(1, i + 1):
            worst.append(-a[j - 1] + 2 * (i - j))
            worst.append(B - A - b[j - 1] + 2 * (i - j))
        for x, y in upper_points:
            worst.append(x - y + 2 * (i - 1))
        ts.append(B - a[i - 1] - b[i - 1] - max(worst))
    return tuple(ts), sum(ts)


def theorem2_family_max(
    minor: Minor,
    A: int,
    B: int,
    upper_points: Sequence[tuple[int, int]],
    lower_points: Sequence[tuple[int, int]],
) -> tuple[tuple[int, ...], tuple[SlalomTrace, ...], int]:
    """Per-path maxima for a two-sided family: one slalom run per path."""
    starts, ends = minor.path_endpoints(A, B)
    ts = []
    traces = []
    for i in range(1, minor.n + 1):
        se, nw = lemma2b_constraints(i, minor, A, B, upper_points, lower_points)
        trace = slalom_max(starts[i - 1], ends[i - 1], se, nw)
        ts.append(trace.max_turns)
        traces.append(trace)
    return tuple(ts), tuple(traces), sum(ts)


def witness_family(
    minor: Minor,
    A: int,
    B: int,
    upper_points: Sequence[tuple[int, int]] = (),
    lower_points: Sequence[tuple[int, int]] = (),
) -> list[LatticePath]:
    """Pairwise vertex-disjoint paths realising the family maximum.

    Path i is built inside its own gate bands, additionally forced to stay
    strictly south-east of path i-1 (offset at least two higher wherever
    their level ranges overlap).  Building north-west-most first and
    hugging north usually succeeds directly; the mirrored sweep is tried
    before giving up.
    """
    ts, traces, _ = theorem2_family_max(minor, A, B, upper_points, lower_points)
    starts, ends = minor.path_endpoints(A, B)
    n = minor.n
    instances = []
    for i in range(1, n + 1):
        se, nw = lemma2b_constraints(i, minor, A, B, upper_points, lower_points)
        instances.append((starts[i - 1], ends[i - 1], se, nw))

    def build(order: Sequence[int], prefer_north: bool) -> list[LatticePath] | None:
        profiles: dict[int, dict[int, int]] = {}
        paths: dict[int, LatticePath] = {}
        for i in order:
            a, b, se, nw = instances[i]
            l_a, o_a = a.x + a.y, a.x - a.y
            l_b, o_b = b.x + b.y, b.x - b.y
            lo, hi = _level_bands(se, nw, l_a, l_b)
            if i - 1 in profiles:  # stay strictly above the north-west neighbour
                for lvl, off in profiles[i - 1].items():
                    if l_a < lvl < l_b:
                        lo[lvl] = max(lo.get(lvl, off + 2), off + 2)
            if i + 1 in profiles:
                for lvl, off in profiles[i + 1].items():
                    if l_a < lvl < l_b:
                        hi[lvl] = min(hi.get(lvl, off - 2), off - 2)
            uncounted = frozenset((p[0] + p[1], p[0] - p[1]) for p in nw)
            try:
                count, offsets = _max_turn_profile(
                    l_a, o_a, l_b, o_b, lo, hi, uncounted, prefer_north=prefer_north
                )
            except Infeasible:
                return None
            if count != ts[i]:
                return None
            profiles[i] = {l_a + k: off for k, off in enumerate(offsets)}
            paths[i] = LatticePath.from_offsets(a, offsets)
        return [paths[i] for i in range(n)]

    paths = build(range(n), prefer_north=True) or build(range(n - 1, -1, -1), prefer_north=False)
    if paths is None:
        raise WitnessError("could not assemble a disjoint family achieving the maximum")

    for i in range(n):
        _verify_witness(paths[i], instances[i][2], instances[i][3], ts[i], f"family path {i + 1}")
    for i in range(n):
        for j in range(i + 1, n):
            shared = set(paths[i].points()) & set(paths[j].points())
            if shared:
                raise WitnessError(f"family paths {i + 1} and {j + 1} share {sorted(shared)[0]}")
    return paths
