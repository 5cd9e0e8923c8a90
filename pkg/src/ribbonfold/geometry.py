"""Flat-folded ribbon layouts: fold templates, assembly, validation and SVG.

Coordinates are exact integers in a grid unit ``u = w / 200`` (y grows
downward, as in SVG).  With that unit every template corner, crease endpoint
and crossing point is a lattice point, so validation is exact integer
arithmetic and measured lengths are exact rationals once scaled by ``u``.

Template dimensions, in multiples of w:

* a jog unit runs down 3/4, sideways 1/2, down 3/4 (core length 2) with a
  45 degree crease at each of its two corners;
* strands sit on a pitch of 5 and crossing rows are 5 tall;
* epsilon connectors between the two braid regions are w/100 long.

Only template segments count toward measured length.  Realignment, crossing
rows, the epsilon junction and closure arcs are connectors: flagged and
excluded, matching the length tally that shrinks inter-band connections to
nothing.  The drawn crossings are the band crossings of the lower braid; the
twist crossings are carried by the T3/T4 templates and appear in
``framing_twists``.  :func:`diagram_from_plan` is the combinatorial diagram
used for invariants.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .invariants import PlanarDiagram, diagram_from_braid_closure
from .planner import FoldPlan, FoldType, Region, band_crossing_steps, plan_braid_word, plan_length

__all__ = [
    "FoldTemplate",
    "Segment",
    "FoldLine",
    "CrossingRecord",
    "RibbonLayout",
    "ValidationReport",
    "layout_fold_type",
    "assemble_layout",
    "validate_layout",
    "diagram_from_plan",
    "render_svg",
    "coincident_fold_fixture",
    "cyclic_crossing_fixture",
    "collinear_overlap_fixture",
]

UNITS_PER_W = 200
JOG_DOWN = 150  # 3w/4
JOG_SIDE = 100  # w/2
HALF_W = 100
PITCH = 1000  # 5w
ROW = 1000
REALIGN = 500
EPSILON = 2  # w/100

Point = tuple[int, int]

_TEMPLATE_FOLDS = (FoldType.T1, FoldType.T2, FoldType.T3, FoldType.T4, FoldType.T3T4_COMBINED)


# -- templates ---------------------------------------------------------------


@dataclass(frozen=True)
class FoldTemplate:
    """Fold pattern for one strand of a band.

    ``directions`` lists the sideways direction (+1 right, -1 left) of each jog
    unit; ``core_lengths`` the straight pieces between consecutive creases and
    the two ends, in multiples of w; ``fold_angles`` the crease angle in
    degrees from the x axis; ``senses`` +1 valley, -1 mountain.
    """

    tag: FoldType
    width: Fraction
    s: int | None
    directions: tuple[int, ...]
    core_lengths: tuple[Fraction, ...]
    fold_angles: tuple[int, ...]
    senses: tuple[int, ...]

    @property
    def core_length(self) -> Fraction:
        return self.width * sum(self.core_lengths, Fraction(0))

    @property
    def fold_count(self) -> int:
        return len(self.fold_angles)

    @property
    def roll_layers(self) -> int:
        return max(len(self.directions) - 1, 0) if self.tag in (FoldType.T4, FoldType.T3T4_COMBINED) else 0


def _crease(corner: Point, d_in: Point, d_out: Point) -> tuple[Point, Point]:
    dx, dy = d_in[0] - d_out[0], d_in[1] - d_out[1]
    h = HALF_W
    return (corner[0] - h * dx, corner[1] - h * dy), (corner[0] + h * dx, corner[1] + h * dy)


def _unit_corners(direction: int) -> list[tuple[Point, Point]]:
    down, side = (0, 1), (direction, 0)
    return [(down, side), (side, down)]


def layout_fold_type(tag: FoldType | str, w=1, s: int | None = None) -> FoldTemplate:
    tag = FoldType(tag)
    width = Fraction(w)
    if width <= 0:
        raise ValueError(f"ribbon width must be positive, got {w}")
    rolled = tag in (FoldType.T4, FoldType.T3T4_COMBINED)
    if rolled and not s:
        raise ValueError(f"{tag.value} needs a nonzero twist count s")
    if not rolled and s is not None:
        raise ValueError(f"{tag.value} takes no twist count")
    if tag is FoldType.DIRECT:
        return FoldTemplate(tag, width, None, (), (), (), ())
    if rolled:
        first = 1 if s > 0 else -1
        directions = tuple(first * (-1) ** k for k in range(abs(s)))
        sense = 1 if s > 0 else -1
        senses = (sense, sense) * abs(s)
    else:
        directions = (-1,) if tag is FoldType.T2 else (1,)
        senses = (1, 1) if tag is FoldType.T3 else (1, -1)
    down, side = Fraction(JOG_DOWN, UNITS_PER_W), Fraction(JOG_SIDE, UNITS_PER_W)
    lengths = [down]
    angles = []
    for k, d in enumerate(directions):
        lengths += [side, down + down if k + 1 < len(directions) else down]
        for d_in, d_out in _unit_corners(d):
            (x0, y0), (x1, y1) = _crease((0, 0), d_in, d_out)
            angles.append(45 if (x1 - x0) * (y1 - y0) > 0 else 135)
    return FoldTemplate(tag, width, s if rolled else None, directions, tuple(lengths), tuple(angles), senses)


# -- layout ------------------------------------------------------------------


@dataclass(frozen=True)
class Segment:
    start: Point
    end: Point
    band: int
    strand: int
    layer: int = 0
    connector: bool = False
    kind: str = "template"

    def grid_length(self) -> int | None:
        """Length in grid units when axis aligned, else None."""
        dx, dy = self.end[0] - self.start[0], self.end[1] - self.start[1]
        if dx and dy:
            return None
        return abs(dx) + abs(dy)


@dataclass(frozen=True)
class FoldLine:
    start: Point
    end: Point
    band: int
    sense: int


@dataclass(frozen=True)
class CrossingRecord:
    point: Point
    over: int
    under: int


@dataclass(frozen=True)
class RibbonLayout:
    width: Fraction
    segments: tuple[Segment, ...] = ()
    fold_lines: tuple[FoldLine, ...] = ()
    crossings: tuple[CrossingRecord, ...] = ()
    framing_twists: int = 0
    expected_length_over_w: Fraction | None = None
    closed: bool = True

    @property
    def unit(self) -> Fraction:
        return self.width / UNITS_PER_W

    def measured_length_over_w(self) -> Fraction:
        total = sum(seg.grid_length() or 0 for seg in self.segments if not seg.connector)
        return Fraction(total, UNITS_PER_W)

    @property
    def roll_layers(self) -> int:
        return max((seg.layer for seg in self.segments if not seg.connector), default=0)


class _Builder:
    def __init__(self, n: int) -> None:
        self.n = n
        self.segments: list[tuple[tuple[int, int], Segment]] = []
        self.counts: dict[int, int] = defaultdict(int)
        self.folds: list[FoldLine] = []
        self.crossings: list[tuple[Point, int, int]] = []
        self.pen: list[Point] = [(k * PITCH, 0) for k in range(n)]
        self.strand = list(range(n))
        self.band = [0] * n

    def x(self, k: int) -> int:
        return k * PITCH

    def emit(self, k: int, to: Point, connector: bool, kind: str, layer: int = 0) -> int:
        start = self.pen[k]
        if start == to:
            return -1
        band = self.band[k]
        key = (band, self.counts[band])
        self.counts[band] += 1
        self.segments.append((key, Segment(start, to, band, self.strand[k], layer, connector, kind)))
        self.pen[k] = to
        return len(self.segments) - 1

    def drop_to(self, k: int, y: int, kind: str = "connector") -> None:
        x = self.pen[k][0]
        self.emit(k, (x, y), True, kind)

    def template(self, k: int, tpl: FoldTemplate) -> None:
        x, y = self.pen[k]
        for layer, d in enumerate(tpl.directions):
            c1 = (x, y + JOG_DOWN)
            c2 = (x + d * JOG_SIDE, y + JOG_DOWN)
            end = (c2[0], c2[1] + JOG_DOWN)
            self.emit(k, c1, False, "template", layer)
            self.emit(k, c2, False, "template", layer)
            self.emit(k, end, False, "template", layer)
            for corner, (d_in, d_out), sense in zip(
                (c1, c2), _unit_corners(d), tpl.senses[2 * layer : 2 * layer + 2]
            ):
                a, b = _crease(corner, d_in, d_out)
                self.folds.append(FoldLine(a, b, self.band[k], sense))
            x, y = end

    def section(self, templates: dict[int, FoldTemplate]) -> None:
        """Run templates on the given positions, then bring every strand back onto its column."""
        top = max(pt[1] for pt in self.pen)
        for k in range(self.n):
            self.drop_to(k, top)
        units = max((len(t.directions) for t in templates.values()), default=0)
        for k, tpl in sorted(templates.items()):
            self.template(k, tpl)
        bottom = top + units * 2 * JOG_DOWN
        for k in range(self.n):
            self.drop_to(k, bottom)
            self.emit(k, (self.x(k), bottom + REALIGN), True, "realign")

    def cross(self, g: int) -> None:
        i = abs(g) - 1
        top = max(self.pen[i][1], self.pen[i + 1][1])
        self.drop_to(i, top)
        self.drop_to(i + 1, top)
        bottom = top + ROW
        right_mover = self.emit(i, (self.x(i + 1), bottom), True, "crossing", 1 if g > 0 else 0)
        left_mover = self.emit(i + 1, (self.x(i), bottom), True, "crossing", 0 if g > 0 else 1)
        mid = (self.x(i) + PITCH // 2, top + ROW // 2)
        over, under = (right_mover, left_mover) if g > 0 else (left_mover, right_mover)
        self.crossings.append((mid, over, under))
        for arr in (self.pen, self.strand, self.band):
            arr[i], arr[i + 1] = arr[i + 1], arr[i]

    def close(self) -> None:
        bottom = max(pt[1] for pt in self.pen)
        right = self.x(self.n - 1) + PITCH
        for k in range(self.n):
            self.drop_to(k, bottom)
        for k in range(self.n):
            margin = (self.n - k) * PITCH
            for pt in ((self.x(k), bottom + margin), (right + margin, bottom + margin),
                       (right + margin, -margin), (self.x(k), -margin), (self.x(k), 0)):
                self.emit(k, pt, True, "closure")

    def finish(self, width: Fraction, framing: int, expected: Fraction | None) -> RibbonLayout:
        order = sorted(range(len(self.segments)), key=lambda i: self.segments[i][0])
        remap = {old: new for new, old in enumerate(order)}
        segments = tuple(self.segments[i][1] for i in order)
        crossings = tuple(CrossingRecord(pt, remap[o], remap[u]) for pt, o, u in self.crossings)
        folds = tuple(sorted(self.folds, key=lambda f: (f.band, f.start, f.end)))
        return RibbonLayout(width, segments, folds, crossings, framing, expected)


def _band_at(plan: FoldPlan, region: Region) -> dict[int, int]:
    """Entry index owning each braid position in the given region."""
    owner = {}
    for idx, e in enumerate(plan.entries):
        if e.region is region:
            band = plan.diagram.bands[e.band_index]
            for k in range(band.offset, band.offset + band.weight):
                owner[k] = idx
    return owner


def _template_for(entry) -> FoldTemplate | None:
    if entry.fold not in _TEMPLATE_FOLDS:
        return None
    if entry.fold in (FoldType.T4, FoldType.T3T4_COMBINED):
        return layout_fold_type(entry.fold, 1, entry.box)
    return layout_fold_type(entry.fold, 1)


def assemble_layout(plan: FoldPlan) -> RibbonLayout:
    """Place every band's templates on a uniform grid and close the braid up."""
    d = plan.diagram
    n = d.strand_count
    b = _Builder(n)
    lower = _band_at(plan, Region.LOWER)
    upper = _band_at(plan, Region.UPPER)
    for k in range(n):
        b.band[k] = lower.get(k, upper.get(k, 0))

    def templates(owner: dict[int, int]) -> dict[int, FoldTemplate]:
        out = {}
        for k, idx in owner.items():
            tpl = _template_for(plan.entries[idx])
            if tpl is not None and tpl.directions:
                out[k] = tpl
        return out

    b.section(templates(lower))
    for _, _, step in band_crossing_steps(d):
        for g in step.letters:
            b.cross(g)
    top = max(pt[1] for pt in b.pen)
    for k in range(n):
        b.drop_to(k, top)
        b.band[k] = upper.get(k, b.band[k])
        b.emit(k, (b.x(k), top + EPSILON), True, "epsilon")
    b.section(templates(upper))
    b.close()
    framing = sum(e.weight * e.twists for e in plan.entries)
    return b.finish(plan.width, framing, plan.length_over_w())


# -- validation --------------------------------------------------------------


@dataclass
class ValidationReport:
    fold_lines_disjoint: bool = True
    transversal: bool = True
    crossings_consistent: bool = True
    length_matches: bool = True
    core_closed: bool = True
    measured_length_over_w: Fraction = Fraction(0)
    violations: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def kinds(self) -> set[str]:
        return {v["kind"] for v in self.violations}

    def add(self, kind: str, detail: str) -> None:
        self.violations.append({"kind": kind, "detail": detail})

    def to_json(self) -> dict:
        return {
            "fold_lines_disjoint": self.fold_lines_disjoint,
            "transversal": self.transversal,
            "crossings_consistent": self.crossings_consistent,
            "length_matches": self.length_matches,
            "core_closed": self.core_closed,
            "measured_length_over_w": str(self.measured_length_over_w),
            "passed": self.passed,
            "violations": list(self.violations),
        }


def _cross(o: Point, a: Point, b: Point) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _on_segment(p: Point, a: Point, b: Point) -> bool:
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


def _intersect(a0: Point, a1: Point, b0: Point, b1: Point):
    """None, ("point", (x, y)) with an exact rational point, or ("overlap", None)."""
    d1, d2 = _cross(b0, b1, a0), _cross(b0, b1, a1)
    d3, d4 = _cross(a0, a1, b0), _cross(a0, a1, b1)
    if d1 == d2 == 0:
        # collinear: project on the dominant axis
        axis = 0 if a0[0] != a1[0] else 1
        lo = max(min(a0[axis], a1[axis]), min(b0[axis], b1[axis]))
        hi = min(max(a0[axis], a1[axis]), max(b0[axis], b1[axis]))
        if lo > hi:
            return None
        if lo < hi:
            return ("overlap", None)
        for p in (a0, a1):
            if p[axis] == lo and _on_segment(p, b0, b1):
                return ("point", (Fraction(p[0]), Fraction(p[1])))
        return None
    if (d1 > 0 and d2 > 0) or (d1 < 0 and d2 < 0) or (d3 > 0 and d4 > 0) or (d3 < 0 and d4 < 0):
        return None
    t = Fraction(d1, d1 - d2)
    return ("point", (a0[0] + t * (a1[0] - a0[0]), a0[1] + t * (a1[1] - a0[1])))


def _candidate_pairs(items: list[tuple[Point, Point]], cell: int) -> Iterable[tuple[int, int]]:
    buckets: dict[tuple[int, int], list[int]] = defaultdict(list)
    for idx, (a, b) in enumerate(items):
        for cx in range(min(a[0], b[0]) // cell, max(a[0], b[0]) // cell + 1):
            for cy in range(min(a[1], b[1]) // cell, max(a[1], b[1]) // cell + 1):
                buckets[cx, cy].append(idx)
    seen = set()
    for members in buckets.values():
        for x in range(len(members)):
            for y in range(x + 1, len(members)):
                pair = (members[x], members[y])
                if pair not in seen:
                    seen.add(pair)
                    yield pair


def _is_endpoint(p, seg: tuple[Point, Point]) -> bool:
    return p == seg[0] or p == seg[1]


def validate_layout(layout: RibbonLayout) -> ValidationReport:
    """Check crease disjointness, transversality, crossing consistency and length."""
    report = ValidationReport()

    folds = [(f.start, f.end) for f in layout.fold_lines]
    for i, j in _candidate_pairs(folds, PITCH):
        if _intersect(*folds[i], *folds[j]) is not None:
            report.fold_lines_disjoint = False
            report.add("fold_lines_intersect", f"fold lines {i} and {j} meet")

    segs = [(s.start, s.end) for s in layout.segments]
    actual: dict[tuple[int, int], tuple] = {}
    for i, j in _candidate_pairs(segs, PITCH):
        hit = _intersect(*segs[i], *segs[j])
        if hit is None:
            continue
        kind, pt = hit
        if kind == "overlap":
            report.transversal = False
            report.add("non_transversal", f"segments {i} and {j} overlap along a line")
            continue
        end_i, end_j = _is_endpoint(pt, segs[i]), _is_endpoint(pt, segs[j])
        if end_i and end_j:
            continue  # joint of the core polyline
        if end_i or end_j:
            report.transversal = False
            report.add("non_transversal", f"segments {i} and {j} touch at {_fmt(pt)}")
            continue
        actual[i, j] = pt

    recorded: dict[tuple[int, int], list[CrossingRecord]] = defaultdict(list)
    by_point: dict[Point, list[CrossingRecord]] = defaultdict(list)
    for c in layout.crossings:
        recorded[min(c.over, c.under), max(c.over, c.under)].append(c)
        by_point[c.point].append(c)
    for pair, pt in actual.items():
        if pair not in recorded:
            report.crossings_consistent = False
            report.add("unrecorded_crossing", f"segments {pair[0]} and {pair[1]} cross at {_fmt(pt)}")
    for pair, records in recorded.items():
        pt = actual.get(pair)
        for c in records:
            if c.over == c.under or pt is None or pt != (c.point[0], c.point[1]):
                report.crossings_consistent = False
                report.add("crossing_mismatch", f"record {c.over}/{c.under} at {_fmt(c.point)} has no matching overlap")
                continue
            over, under = layout.segments[c.over], layout.segments[c.under]
            if over.layer != under.layer and over.layer < under.layer:
                report.crossings_consistent = False
                report.add("layer_mismatch", f"segment {c.over} is over but on a lower layer")
        if len({c.over for c in records}) > 1:
            report.crossings_consistent = False
            report.add("crossing_inconsistent", f"segments {pair[0]} and {pair[1]} are each recorded over the other")
    for pt, records in by_point.items():
        if _has_cycle([(c.over, c.under) for c in records]):
            report.crossings_consistent = False
            report.add("crossing_cycle", f"over/under order at {_fmt(pt)} is cyclic")

    if layout.closed:
        degree: dict[Point, int] = defaultdict(int)
        for a, b in segs:
            degree[a] += 1
            degree[b] += 1
        loose = sorted(p for p, k in degree.items() if k != 2)
        if loose:
            report.core_closed = False
            report.add("open_core", f"{len(loose)} core endpoints are not joints, first at {_fmt(loose[0])}")

    total = 0
    for idx, seg in enumerate(layout.segments):
        if seg.connector:
            continue
        length = seg.grid_length()
        if length is None or length == 0:
            report.add("bad_template_segment", f"segment {idx} is not a positive axis-aligned piece")
            continue
        total += length
    report.measured_length_over_w = Fraction(total, UNITS_PER_W)
    if layout.expected_length_over_w is not None and report.measured_length_over_w != layout.expected_length_over_w:
        report.length_matches = False
        report.add("length_mismatch",
                   f"measured {report.measured_length_over_w} vs planned {layout.expected_length_over_w}")
    return report


def _has_cycle(edges: list[tuple[int, int]]) -> bool:
    graph: dict[int, set[int]] = defaultdict(set)
    for a, b in edges:
        graph[a].add(b)
    state: dict[int, int] = {}

    def visit(v: int) -> bool:
        state[v] = 1
        for u in graph[v]:
            if state.get(u) == 1 or (u not in state and visit(u)):
                return True
        state[v] = 2
        return False

    return any(v not in state and visit(v) for v in list(graph))


def _fmt(p) -> str:
    return f"({p[0]}, {p[1]})"


# -- negative fixtures -------------------------------------------------------


def _square(x: int, y: int, size: int, band: int) -> list[Segment]:
    pts = [(x, y), (x + size, y), (x + size, y + size), (x, y + size), (x, y)]
    return [Segment(a, b, band, band, 0, True, "fixture") for a, b in zip(pts, pts[1:])]


def coincident_fold_fixture() -> RibbonLayout:
    """A closed loop carrying the same crease twice."""
    crease = FoldLine((-100, -100), (100, 100), 0, 1)
    return RibbonLayout(Fraction(1), tuple(_square(0, 0, 1000, 0)), (crease, crease))


def cyclic_crossing_fixture() -> RibbonLayout:
    """Three strands through one point with a > b > c > a."""
    segs = (
        Segment((-500, 0), (500, 0), 0, 0, 0, True, "fixture"),
        Segment((0, -500), (0, 500), 1, 1, 0, True, "fixture"),
        Segment((-500, -500), (500, 500), 2, 2, 0, True, "fixture"),
    )
    o = (0, 0)
    crossings = (CrossingRecord(o, 0, 1), CrossingRecord(o, 1, 2), CrossingRecord(o, 2, 0))
    return RibbonLayout(Fraction(1), segs, (), crossings, closed=False)


def collinear_overlap_fixture() -> RibbonLayout:
    """Two loops sharing part of an edge."""
    return RibbonLayout(Fraction(1), tuple(_square(0, 0, 1000, 0) + _square(500, 1000, 1000, 1)))


# -- diagram and rendering ---------------------------------------------------


def diagram_from_plan(plan: FoldPlan) -> PlanarDiagram:
    """Planar diagram of the ribbon core, read off the plan's braid combinatorics."""
    d = diagram_from_braid_closure(plan_braid_word(plan))
    if d.components != 1:
        raise ValueError(f"plan closes up to {d.components} components, not a knot")
    return d


def render_svg(layout: RibbonLayout) -> str:
    """Deterministic SVG: core in segment order, under-strand gaps, dashed creases."""
    unit = float(layout.unit)
    w = float(layout.width)
    pts = [p for s in layout.segments for p in (s.start, s.end)]
    pts += [p for f in layout.fold_lines for p in (f.start, f.end)]
    if pts:
        pad = PITCH // 2
        x0 = min(p[0] for p in pts) - pad
        y0 = min(p[1] for p in pts) - pad
        x1 = max(p[0] for p in pts) + pad
        y1 = max(p[1] for p in pts) + pad
    else:
        x0 = y0 = 0
        x1 = y1 = UNITS_PER_W

    def num(v: float) -> str:
        text = f"{v:.3f}"
        return "0.000" if text == "-0.000" else text

    def coord(v: int) -> str:
        return num(v * unit)

    gaps: dict[int, list[Point]] = defaultdict(list)
    for c in layout.crossings:
        gaps[c.under].append(c.point)
    roll_shift = w / 20

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{coord(x0)} {coord(y0)} {coord(x1 - x0)} {coord(y1 - y0)}">',
        f'<g id="core" fill="none" stroke="black" stroke-width="{num(w / 10)}" stroke-linecap="round">',
    ]
    for idx, seg in enumerate(layout.segments):
        ax, ay = seg.start[0] * unit, seg.start[1] * unit
        bx, by = seg.end[0] * unit, seg.end[1] * unit
        if seg.layer and not seg.connector:
            off = seg.layer * roll_shift
            ax, ay, bx, by = ax + off, ay + off, bx + off, by + off
        pieces = [(0.0, 1.0)]
        length = math.hypot(bx - ax, by - ay)
        for p in sorted(gaps.get(idx, []), key=lambda q: (q[0], q[1])):
            t = math.hypot(float(p[0]) * unit - ax, float(p[1]) * unit - ay) / length
            half = (w / 4) / length
            pieces = [piece for a, b in pieces for piece in ((a, min(b, t - half)), (max(a, t + half), b)) if piece[0] < piece[1]]
        cls = "connector" if seg.connector else "template"
        for a, b in pieces:
            lines.append(
                f'<line class="{cls}" x1="{num(ax + a * (bx - ax))}" y1="{num(ay + a * (by - ay))}" '
                f'x2="{num(ax + b * (bx - ax))}" y2="{num(ay + b * (by - ay))}"/>'
            )
    lines.append("</g>")
    lines.append(f'<g id="folds" stroke="red" stroke-width="{num(w / 20)}">')
    for f in layout.fold_lines:
        lines.append(
            f'<line x1="{coord(f.start[0])}" y1="{coord(f.start[1])}" x2="{coord(f.end[0])}" '
            f'y2="{coord(f.end[1])}" stroke-dasharray="{num(w / 10)} {num(w / 10)}"/>'
        )
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
