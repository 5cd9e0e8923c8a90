"""Alexander polynomials by two independent routes, plus a closed-form oracle.

* braid route: reduced Burau matrix of the word, det(B - I) (t - 1) / (t^n - 1);
* diagram route: Alexander's crossing/arc matrix of a planar diagram with one
  row and one column deleted;
* torus oracle: (t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1)) by long division.

All arithmetic is exact.  Results are reported in the canonical form of
:func:`normalize_alexander`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .braid import BraidWord, braid_permutation, closure_component_count
from .laurent import LaurentPolynomial
from .polymatrix import det

__all__ = [
    "Crossing",
    "PlanarDiagram",
    "reduced_burau",
    "alexander_from_braid",
    "alexander_torus_oracle",
    "alexander_from_diagram",
    "normalize_alexander",
    "diagram_from_braid_closure",
    "trefoil_diagram",
    "unknot_diagram",
]

ONE = LaurentPolynomial.constant(1)
ZERO = LaurentPolynomial()
T = LaurentPolynomial.monomial(1)


def normalize_alexander(f: LaurentPolynomial) -> LaurentPolynomial:
    """Canonical unit multiple: exponents centred on zero, top coefficient positive."""
    if f.is_zero():
        raise ValueError("cannot normalize the zero polynomial")
    shift = -(f.span() // 2) - f.min_degree()
    g = f.shift(shift)
    if g.coeff(g.max_degree()) < 0:
        g = -g
    return g


# -- braid route -------------------------------------------------------------


# (coefficient, exponent) of the monomials in row c of each generator's image:
# the entries at columns c-1, c and c+1
_BURAU_ROW = {1: ((1, 1), (-1, 1), (1, 0)), -1: ((1, 0), (-1, -1), (1, -1))}


def _axpy(dst: dict, src: dict, coef: int, shift: int) -> None:
    for e, v in src.items():
        k = e + shift
        nv = dst.get(k, 0) + coef * v
        if nv:
            dst[k] = nv
        else:
            dst.pop(k, None)


def reduced_burau(b: BraidWord) -> list[list[LaurentPolynomial]]:
    n = b.strand_count
    if n < 2:
        raise ValueError("reduced Burau needs at least 2 strands")
    m = n - 1
    # column-major raw coefficient maps; every factor is a monomial, so each
    # letter is a few shifted axpy updates on columns c-1, c, c+1
    cols = [[{0: 1} if i == j else {} for i in range(m)] for j in range(m)]
    for g in b.letters:
        c = abs(g) - 1
        (lc, ls), (mc, ms), (rc, rs) = _BURAU_ROW[1 if g > 0 else -1]
        x = cols[c]
        if c - 1 >= 0:
            for i in range(m):
                if x[i]:
                    _axpy(cols[c - 1][i], x[i], lc, ls)
        if c + 1 < m:
            for i in range(m):
                if x[i]:
                    _axpy(cols[c + 1][i], x[i], rc, rs)
        cols[c] = [{e + ms: mc * v for e, v in xi.items()} for xi in x]
    return [[LaurentPolynomial(cols[j][i]) for j in range(m)] for i in range(m)]


def alexander_from_braid(b: BraidWord) -> LaurentPolynomial:
    if closure_component_count(b) != 1:
        raise ValueError("closure has more than one component")
    n = b.strand_count
    if n == 1:
        return ONE
    mat = reduced_burau(b)
    for i in range(n - 1):
        mat[i][i] = mat[i][i] - ONE
    d = det(mat)
    if d.is_zero():
        raise ArithmeticError("det(B - I) vanished for a knot closure")
    num = d * (T - ONE)
    quotient = num.exact_div(LaurentPolynomial({n: 1, 0: -1}))
    return normalize_alexander(quotient)


def alexander_torus_oracle(p: int, q: int) -> LaurentPolynomial:
    if p < 2 or q < 2:
        raise ValueError("torus oracle needs p, q >= 2")
    if math.gcd(p, q) != 1:
        raise ValueError(f"gcd({p},{q}) != 1: link, not knot")

    def cyclo(k: int) -> LaurentPolynomial:
        return LaurentPolynomial({k: 1, 0: -1})

    num = cyclo(p * q) * cyclo(1)
    return normalize_alexander(num.exact_div(cyclo(p) * cyclo(q)))


# -- diagram route -----------------------------------------------------------


@dataclass(frozen=True)
class Crossing:
    over_arc: int
    under_in_arc: int
    under_out_arc: int
    sign: int

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError(f"crossing sign must be +1 or -1, got {self.sign}")


@dataclass(frozen=True)
class PlanarDiagram:
    """Oriented diagram: arcs run from one under-crossing to the next."""

    crossings: tuple[Crossing, ...]
    arc_count: int
    components: int = 1

    def __post_init__(self) -> None:
        ends = [0] * self.arc_count
        starts = [0] * self.arc_count
        for c in self.crossings:
            for a in (c.over_arc, c.under_in_arc, c.under_out_arc):
                if not 0 <= a < self.arc_count:
                    raise ValueError(f"arc index {a} out of range")
            ends[c.under_in_arc] += 1
            starts[c.under_out_arc] += 1
        if self.crossings and (any(v != 1 for v in ends) or any(v != 1 for v in starts)):
            raise ValueError("every arc must begin and end at exactly one under-crossing")

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    def writhe(self) -> int:
        return sum(c.sign for c in self.crossings)


def unknot_diagram() -> PlanarDiagram:
    return PlanarDiagram((), 1, 1)


def trefoil_diagram() -> PlanarDiagram:
    """Standard 3-crossing right-handed trefoil, written out by hand."""
    return PlanarDiagram(
        (Crossing(2, 0, 1, 1), Crossing(0, 1, 2, 1), Crossing(1, 2, 0, 1)), 3, 1
    )


class _UnionFind:
    def __init__(self) -> None:
        self.parent: list[int] = []

    def make(self) -> int:
        self.parent.append(len(self.parent))
        return len(self.parent) - 1

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        self.parent[self.find(a)] = self.find(b)


def diagram_from_braid_closure(b: BraidWord) -> PlanarDiagram:
    """Planar diagram of the closure of ``b`` (strands oriented top to bottom)."""
    n = b.strand_count
    uf = _UnionFind()
    top = [uf.make() for _ in range(n)]
    current = list(top)
    raw = []
    for g in b.letters:
        i = abs(g) - 1
        left, right = current[i], current[i + 1]
        new = uf.make()
        if g > 0:
            # left strand passes over and moves right; right strand goes under, moves left
            raw.append((left, right, new, 1))
            current[i], current[i + 1] = new, left
        else:
            raw.append((right, left, new, -1))
            current[i], current[i + 1] = right, new
    for k in range(n):
        uf.union(current[k], top[k])
    labels: dict[int, int] = {}

    def label(x: int) -> int:
        root = uf.find(x)
        if root not in labels:
            labels[root] = len(labels)
        return labels[root]

    crossings = tuple(
        Crossing(label(o), label(ui), label(uo), s) for o, ui, uo, s in raw
    )
    components = len(braid_permutation(b).cycles())
    arc_count = len(labels) if crossings else max(len({uf.find(x) for x in top}), 1)
    if not crossings:
        return PlanarDiagram((), arc_count, components)
    return PlanarDiagram(crossings, arc_count, components)


def alexander_from_diagram(d: PlanarDiagram) -> LaurentPolynomial:
    if d.components != 1:
        raise ValueError("diagram has more than one component")
    c = d.crossing_count
    if c == 0:
        return ONE
    if d.arc_count != c:
        raise ValueError(f"knot diagram needs as many arcs as crossings ({d.arc_count} vs {c})")
    mat = [[ZERO] * c for _ in range(c)]
    for row, x in enumerate(d.crossings):
        # Fox derivative of the Wirtinger relation at this crossing
        mat[row][x.over_arc] = mat[row][x.over_arc] + (ONE - T)
        if x.sign > 0:
            mat[row][x.under_in_arc] = mat[row][x.under_in_arc] + T
            mat[row][x.under_out_arc] = mat[row][x.under_out_arc] - ONE
        else:
            mat[row][x.under_in_arc] = mat[row][x.under_in_arc] - ONE
            mat[row][x.under_out_arc] = mat[row][x.under_out_arc] + T
    minor = [row[:-1] for row in mat[:-1]]
    value = det(minor)
    if value.is_zero():
        raise ArithmeticError("Alexander minor vanished for a knot diagram")
    return normalize_alexander(value)
