"""Weighted-band decomposition and fold-type planning for twisted torus knots.

Pipeline: :func:`normalize_params` -> :func:`case_branch` ->
:func:`band_decomposition` -> :func:`assign_fold_types` -> :func:`plan_length`.
:func:`ribbonlength_upper_bound` evaluates the closed-form bound separately so
the two can be checked against each other.

Braid orientation used for band offsets: the lower region is read first, the
upper region second, so an upper band's offset is a position at the bottom of
the lower braid.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .braid import BraidWord, block_crossing_word, full_twist_word

__all__ = [
    "ParameterError",
    "LinkError",
    "Transforms",
    "TwistParams",
    "Case",
    "Region",
    "FoldType",
    "Band",
    "WeightedBandDiagram",
    "PlanEntry",
    "FoldPlan",
    "normalize_params",
    "case_branch",
    "band_decomposition",
    "assign_fold_types",
    "plan_length",
    "plan_braid_word",
    "band_crossing_steps",
    "ribbonlength_upper_bound",
    "build_plan",
    "plan_report",
]


class ParameterError(ValueError):
    """Parameters do not describe a twisted torus knot we can plan."""


class LinkError(ParameterError):
    """gcd(p, q) != 1: the torus part is a link."""


class Case(str, enum.Enum):
    REDUCED = "REDUCED"  # r <= p - q
    STANDARD = "STANDARD"  # p - q < r <= p
    EXTENDED = "EXTENDED"  # p < r < p + q


class Region(str, enum.Enum):
    UPPER = "UPPER"
    LOWER = "LOWER"


class FoldType(str, enum.Enum):
    T1 = "T1"
    T2 = "T2"
    T3 = "T3"
    T4 = "T4"
    T3T4_COMBINED = "T3T4_COMBINED"
    DIRECT = "DIRECT"


@dataclass(frozen=True)
class Transforms:
    mirrored: bool = False
    swapped_pq: bool = False

    def to_json(self) -> dict:
        return {"mirrored": self.mirrored, "swapped_pq": self.swapped_pq}


@dataclass(frozen=True)
class TwistParams:
    p: int
    q: int
    r: int
    s: int
    transforms: Transforms = Transforms()
    warnings: tuple[str, ...] = ()
    certified: bool = True

    @property
    def warn_cable(self) -> bool:
        return self.r == self.p

    @property
    def warn_torus_or_trivial(self) -> bool:
        return self.r % self.q == 0

    def to_json(self) -> dict:
        return {"p": self.p, "q": self.q, "r": self.r, "s": self.s}


def normalize_params(p: int, q: int, r: int, s: int, permissive: bool = False) -> TwistParams:
    """Bring (p, q, r, s) to 2 <= q < p, p and q positive, recording the moves.

    T(p,q;r,s) is the mirror of T(p,-q;r,-s), and T(p,q;r,s) = T(q,p;r,s).
    With ``permissive`` a torus factor with q = 1 is accepted but the result
    is marked uncertified.
    """
    for name, v in (("p", p), ("q", q), ("r", r), ("s", s)):
        if isinstance(v, bool) or int(v) != v:
            raise ParameterError(f"{name} must be an integer, got {v!r}")
    p, q, r, s = int(p), int(q), int(r), int(s)
    if p == 0 or q == 0:
        raise ParameterError("p and q must be nonzero")
    if s == 0:
        raise ParameterError("s must be nonzero")
    if math.gcd(p, q) != 1:
        raise LinkError(f"gcd({abs(p)},{abs(q)}) = {math.gcd(p, q)}: link, not knot")
    if not 1 <= r < abs(p) + abs(q):
        raise ParameterError(f"need 1 <= r < |p|+|q| = {abs(p) + abs(q)}, got r={r}")

    mirrored = False
    if p < 0 and q < 0:
        # T(-p,-q) is T(p,q) with reversed orientation
        p, q = -p, -q
    elif q < 0:
        q, s, mirrored = -q, -s, True
    elif p < 0:
        p, s, mirrored = -p, -s, True
    swapped = False
    if q > p:
        p, q, swapped = q, p, True

    warnings = []
    certified = True
    if q == 1:
        if not permissive:
            raise ParameterError("unknot-based: torus factor trivial (q = 1); pass permissive to allow")
        warnings.append("uncertified: q = 1 lies outside 2 <= q < p")
        certified = False
    if r == p:
        warnings.append("warn_cable: r = p")
    if r % q == 0:
        warnings.append("warn_torus_or_trivial: r is a multiple of q")
    return TwistParams(p, q, r, s, Transforms(mirrored, swapped), tuple(warnings), certified)


def case_branch(params: TwistParams) -> Case:
    p, q, r = params.p, params.q, params.r
    if r <= p - q:
        return Case.REDUCED
    if r <= p:
        return Case.STANDARD
    return Case.EXTENDED


# -- band diagram ------------------------------------------------------------


@dataclass(frozen=True)
class Band:
    weight: int
    region: Region
    role: str
    offset: int
    box: int | None = None

    def __post_init__(self) -> None:
        if self.weight < 1:
            raise ValueError(f"band weight must be positive, got {self.weight}")


@dataclass(frozen=True)
class WeightedBandDiagram:
    """Bands of parallel strands in the upper (twist box) and lower (torus) braids.

    ``lower_crossings`` lists block crossings between lower bands, as pairs of
    band indices (left band passes over the adjacent right band), applied in
    order after the lower bands' own twists.
    """

    bands: tuple[Band, ...]
    case: Case | None = None
    params: TwistParams | None = None
    lower_crossings: tuple[tuple[int, int], ...] = ()

    @property
    def strand_count(self) -> int:
        lower = sum(b.weight for b in self.bands if b.region is Region.LOWER)
        return lower or sum(b.weight for b in self.bands if b.region is Region.UPPER)

    def lower_bands(self) -> list[Band]:
        return [b for b in self.bands if b.region is Region.LOWER]

    def upper_bands(self) -> list[Band]:
        return [b for b in self.bands if b.region is Region.UPPER]


def band_decomposition(params: TwistParams, case: Case | None = None) -> WeightedBandDiagram:
    """Split the braid of T(p,q;r,s) into weighted bands.

    ``case`` may force STANDARD when r <= p - q; otherwise the case follows
    :func:`case_branch`.
    """
    natural = case_branch(params)
    if case is None:
        case = natural
    elif case is not natural and not (case is Case.STANDARD and natural is Case.REDUCED):
        raise ParameterError(f"case {case.value} does not apply to r={params.r}")
    p, q, r, s = params.p, params.q, params.r, params.s
    L, U = Region.LOWER, Region.UPPER

    if case is Case.EXTENDED:
        a, b, c = r - p, p + q - r, r - q
        bands = [
            Band(a, L, "kinked", 0),
            Band(b, L, "twisted", a),
            Band(c, L, "untwisted", a + b),
            Band(r, U, "box", 0, box=s),
        ]
        crossings = [(0, 1), (0, 2), (1, 2)]
    elif case is Case.STANDARD:
        bands = [
            Band(p - q, L, "untwisted", q),
            Band(q, L, "twisted", 0),
            Band(r, U, "box", 0, box=s),
        ]
        crossings = [(1, 0)]
        if p - r:
            bands.append(Band(p - r, U, "direct", r))
    else:
        bands = [
            Band(r, L, "box", q, box=s),
            Band(q, L, "twisted", 0),
            Band(p, U, "direct", 0),
        ]
        crossings = [(1, 0)]
        if p - q - r:
            bands.insert(1, Band(p - q - r, L, "untwisted", q + r))
            crossings = [(2, 0), (2, 1)]
    return WeightedBandDiagram(tuple(bands), case, params, tuple(crossings))


# -- fold plan ---------------------------------------------------------------

_LOWER_FOLDS = {
    Case.EXTENDED: {"kinked": FoldType.T1, "untwisted": FoldType.T2, "twisted": FoldType.T3},
    Case.STANDARD: {"untwisted": FoldType.T1, "twisted": FoldType.T3},
    Case.REDUCED: {"untwisted": FoldType.T1, "twisted": FoldType.T3, "box": FoldType.T3T4_COMBINED},
}


@dataclass(frozen=True)
class PlanEntry:
    band_index: int
    weight: int
    region: Region
    fold: FoldType
    per_strand_length: Fraction  # in units of w
    twists: int  # full twists carried by each strand's fold
    box: int | None = None

    @property
    def rolls(self) -> int:
        if self.fold in (FoldType.T4, FoldType.T3T4_COMBINED):
            return abs(self.twists) - 1
        return 0


@dataclass(frozen=True)
class FoldPlan:
    entries: tuple[PlanEntry, ...]
    width: Fraction
    diagram: WeightedBandDiagram

    def length_over_w(self) -> Fraction:
        return sum((e.weight * e.per_strand_length for e in self.entries), Fraction(0))


def _per_strand(fold: FoldType, s: int | None) -> Fraction:
    if fold in (FoldType.T1, FoldType.T2, FoldType.T3):
        return Fraction(2)
    if fold in (FoldType.T4, FoldType.T3T4_COMBINED):
        return Fraction(2 * abs(s))
    return Fraction(0)


def _twists(fold: FoldType, s: int | None) -> int:
    if fold is FoldType.T3:
        return 1
    if fold in (FoldType.T4, FoldType.T3T4_COMBINED):
        return s
    return 0


def _fold_for(band: Band, case: Case | None) -> FoldType:
    if band.role == "direct":
        return FoldType.DIRECT
    if band.region is Region.UPPER:
        return FoldType.T4
    if case is None:
        # free-standing diagrams: boxed bands roll, twisted bands take type 3
        if band.box is not None:
            return FoldType.T3T4_COMBINED
        return FoldType.T3 if band.role == "twisted" else FoldType.T1
    return _LOWER_FOLDS[case][band.role]


def assign_fold_types(d: WeightedBandDiagram, w=1) -> FoldPlan:
    width = Fraction(w)
    if width <= 0:
        raise ValueError(f"ribbon width must be positive, got {w}")
    entries = []
    for i, band in enumerate(d.bands):
        fold = _fold_for(band, d.case)
        entries.append(
            PlanEntry(i, band.weight, band.region, fold, _per_strand(fold, band.box),
                      _twists(fold, band.box), band.box)
        )
    return FoldPlan(tuple(entries), width, d)


def plan_length(plan: FoldPlan) -> Fraction:
    return plan.width * plan.length_over_w()


def band_crossing_steps(d: WeightedBandDiagram) -> list[tuple[int, int, BraidWord]]:
    """Block crossings between lower bands as (over band, under band, word) in order."""
    n = d.strand_count
    order = sorted(range(len(d.bands)), key=lambda i: d.bands[i].offset)
    order = [i for i in order if d.bands[i].region is Region.LOWER]
    steps = []
    for left, right in d.lower_crossings:
        k = order.index(left)
        if k + 1 >= len(order) or order[k + 1] != right:
            raise ValueError(f"bands {left} and {right} are not adjacent when they cross")
        offset = sum(d.bands[i].weight for i in order[:k])
        steps.append((left, right, block_crossing_word(d.bands[left].weight, d.bands[right].weight, offset, n)))
        order[k], order[k + 1] = right, left
    return steps


def plan_braid_word(plan: FoldPlan) -> BraidWord:
    """The braid spelled by the plan: lower fold twists, band crossings, upper fold twists."""
    d = plan.diagram
    n = d.strand_count
    word = BraidWord(n)
    for region in (Region.LOWER, Region.UPPER):
        for e in plan.entries:
            band = d.bands[e.band_index]
            if e.region is region and e.twists:
                word = word * full_twist_word(band.weight, e.twists, band.offset, n)
        if region is Region.LOWER:
            for _, _, step in band_crossing_steps(d):
                word = word * step
    return word


def ribbonlength_upper_bound(p: int, q: int, r: int, s: int, permissive: bool = False) -> int:
    params = normalize_params(p, q, r, s, permissive=permissive)
    p, q, r, s = params.p, params.q, params.r, abs(params.s)
    case = case_branch(params)
    if case is Case.REDUCED:
        return 2 * (p + (s - 1) * r)
    return 2 * (max(p, q, r) + s * r)


def build_plan(p: int, q: int, r: int, s: int, w=1, permissive: bool = False,
               case: Case | None = None) -> FoldPlan:
    params = normalize_params(p, q, r, s, permissive=permissive)
    return assign_fold_types(band_decomposition(params, case), w)


def plan_report(plan: FoldPlan) -> dict:
    d = plan.diagram
    params = d.params
    bands = []
    for e in plan.entries:
        band = d.bands[e.band_index]
        item = {"weight": e.weight, "region": e.region.value, "role": band.role}
        if e.box is not None:
            item["box"] = e.box
        item["fold"] = e.fold.value
        bands.append(item)
    length = plan.length_over_w()
    report = {
        "params": params.to_json() if params else None,
        "transforms": params.transforms.to_json() if params else None,
        "case": d.case.value if d.case else None,
        "bands": bands,
        "width": str(plan.width),
        "length_over_w": int(length) if length.denominator == 1 else str(length),
        "warnings": list(params.warnings) if params else [],
    }
    if params is not None:
        report["rib_upper_bound"] = ribbonlength_upper_bound(
            params.p, params.q, params.r, params.s, permissive=not params.certified
        )
        report["certified"] = params.certified
    return report
