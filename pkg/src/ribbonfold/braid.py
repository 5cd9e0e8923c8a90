"""Braid words for torus and twisted torus knots.

Generator convention: ``+i`` is the Artin generator sigma_i, a positive crossing
in which the strand at position i passes over the strand at position i + 1;
``-i`` is its inverse.  Positions are 1-based throughout the public API.

Braid equality is decided with the classical (half-twist) Garside structure:
every braid is written as Delta^k * A_1 ... A_m with each A_j a permutation
braid and each adjacent pair left-weighted.  That form is unique, so two words
are equal in the braid group iff their normal forms coincide.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "BraidWord",
    "StrandPermutation",
    "GarsideNormalForm",
    "torus_braid",
    "full_twist_word",
    "block_crossing_word",
    "extended_torus_braid",
    "twisted_torus_braid",
    "lorenz_twisted_braid",
    "braid_permutation",
    "closure_component_count",
    "garside_normal_form",
    "braid_equal",
    "torus_decomposition_identity",
    "mirror_braid",
]


@dataclass(frozen=True)
class BraidWord:
    """An immutable word in the Artin generators on ``strand_count`` strands."""

    strand_count: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.strand_count < 1:
            raise ValueError(f"strand_count must be >= 1, got {self.strand_count}")
        letters = tuple(int(g) for g in self.letters)
        for g in letters:
            if g == 0 or abs(g) > self.strand_count - 1:
                raise ValueError(
                    f"letter {g} out of range for {self.strand_count} strands"
                )
        object.__setattr__(self, "letters", letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        if not isinstance(other, BraidWord):
            return NotImplemented
        if other.strand_count != self.strand_count:
            raise ValueError("cannot concatenate braids on different strand counts")
        return BraidWord(self.strand_count, self.letters + other.letters)

    def inverse(self) -> BraidWord:
        return BraidWord(self.strand_count, tuple(-g for g in reversed(self.letters)))

    def exponent_sum(self) -> int:
        return sum(1 if g > 0 else -1 for g in self.letters)

    def to_json(self) -> dict:
        return {"strands": self.strand_count, "word": list(self.letters)}

    @classmethod
    def from_json(cls, data: dict) -> BraidWord:
        return cls(int(data["strands"]), tuple(data["word"]))

    def __str__(self) -> str:
        if not self.letters:
            return f"e (on {self.strand_count} strands)"
        parts = [f"s{abs(g)}" + ("" if g > 0 else "^-1") for g in self.letters]
        return " ".join(parts)


@dataclass(frozen=True)
class StrandPermutation:
    """``image[i-1]`` is the bottom position reached by the strand starting at position i."""

    image: tuple[int, ...]

    def __post_init__(self) -> None:
        image = tuple(int(v) for v in self.image)
        if sorted(image) != list(range(1, len(image) + 1)):
            raise ValueError(f"not a permutation of 1..{len(image)}: {image}")
        object.__setattr__(self, "image", image)

    @classmethod
    def identity(cls, n: int) -> StrandPermutation:
        return cls(tuple(range(1, n + 1)))

    def then(self, other: StrandPermutation) -> StrandPermutation:
        """Apply ``self`` first, then ``other`` (braid concatenation order)."""
        return StrandPermutation(tuple(other.image[v - 1] for v in self.image))

    def cycles(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        out = []
        for start in range(1, len(self.image) + 1):
            if start in seen:
                continue
            cyc = []
            v = start
            while v not in seen:
                seen.add(v)
                cyc.append(v)
                v = self.image[v - 1]
            out.append(tuple(cyc))
        return out


# -- word constructors -------------------------------------------------------


def torus_braid(p: int, q: int) -> BraidWord:
    """(sigma_1 ... sigma_{p-1})^q on p strands."""
    if p < 2:
        raise ValueError(f"torus_braid needs p >= 2, got {p}")
    if q < 0:
        raise ValueError(f"torus_braid needs q >= 0, got {q}")
    return BraidWord(p, tuple(range(1, p)) * q)


def full_twist_word(n: int, count: int, offset: int, total: int) -> BraidWord:
    """``count`` full twists on strands offset+1 .. offset+n of a braid on ``total`` strands."""
    if n < 1 or offset < 0 or offset + n > total:
        raise ValueError(f"twist block n={n}, offset={offset} does not fit in {total} strands")
    one = tuple(range(offset + 1, offset + n)) * n
    if count >= 0:
        return BraidWord(total, one * count)
    inv = tuple(-g for g in reversed(one))
    return BraidWord(total, inv * (-count))


def block_crossing_word(left: int, right: int, offset: int, total: int) -> BraidWord:
    """Positive braid in which a bunch of ``left`` parallel strands crosses over
    the ``right`` strands immediately to its right.

    The last strand of the left bunch moves first, so the word is the run
    sigma_{o+left} ... sigma_{o+left+right-1} followed by the same run shifted
    down by one, ``left`` runs in all.
    """
    if left < 0 or right < 0 or offset < 0 or offset + left + right > total:
        raise ValueError("block crossing does not fit")
    letters: list[int] = []
    for k in range(left if right else 0):
        start = offset + left - k
        letters.extend(range(start, start + right))
    return BraidWord(total, tuple(letters))


def extended_torus_braid(p: int, q: int, r: int) -> BraidWord:
    """A braid on r strands (p < r < p + q) whose closure is T(p, q).

    The r strands split, left to right, into bunches of sizes a = r-p,
    b = p+q-r and c = r-q.  The b-bunch takes one full twist, then every bunch
    crosses over the bunches to its right (a over b, a over c, b over c).  At
    r = p this degenerates to the full-twist-plus-block-crossing split of the
    torus word.  All r strands at the top of this braid are adjacent strands
    of the torus knot, so a twist box may act on the whole braid.
    """
    if not p < r < p + q:
        raise ValueError(f"extended form needs p < r < p+q, got p={p}, q={q}, r={r}")
    a, b, c = r - p, p + q - r, r - q
    return (
        full_twist_word(b, 1, a, r)
        * block_crossing_word(a, b, 0, r)
        * block_crossing_word(a, c, b, r)
        * block_crossing_word(b, c, 0, r)
    )


def twisted_torus_braid(p: int, q: int, r: int, s: int) -> BraidWord:
    """Braid word whose closure is the twisted torus knot T(p, q; r, s).

    For r <= p: the torus word followed by s full twists on the first r strands.
    For p < r < p + q: :func:`extended_torus_braid` on r strands followed by s
    full twists on all of them (the full twist is central, so its placement
    along the word is immaterial).  When p < r < q, which needs p < q, the
    p + q strand model of :func:`lorenz_twisted_braid` is returned.
    """
    if p < 2 or q < 1:
        raise ValueError(f"need p >= 2 and q >= 1, got p={p}, q={q}")
    if s == 0:
        raise ValueError("s must be nonzero")
    if not 1 <= r < p + q:
        raise ValueError(f"need 1 <= r < p+q, got r={r}")
    if math.gcd(p, q) != 1:
        raise ValueError(f"gcd({p},{q}) != 1: link, not knot")
    if r <= p:
        return torus_braid(p, q) * full_twist_word(r, s, 0, p)
    if r < q:
        # only reachable with p < q; the r-strand form needs r >= q
        return lorenz_twisted_braid(p, q, r, s)
    return extended_torus_braid(p, q, r) * full_twist_word(r, s, 0, r)


def lorenz_twisted_braid(p: int, q: int, r: int, s: int) -> BraidWord:
    """Reference model of T(p, q; r, s) on p + q strands.

    A bunch of p parallel strands crosses over a bunch of q (whose closure is
    T(p, q)), and s full twists are applied to the first r strands.  Any
    1 <= r < p + q is allowed, with no case split, which makes this an
    independent check on :func:`twisted_torus_braid`.
    """
    if p < 1 or q < 1 or not 1 <= r < p + q:
        raise ValueError(f"need p, q >= 1 and 1 <= r < p+q, got {p}, {q}, {r}")
    n = p + q
    return full_twist_word(r, s, 0, n) * block_crossing_word(p, q, 0, n)


def mirror_braid(b: BraidWord) -> BraidWord:
    return BraidWord(b.strand_count, tuple(-g for g in b.letters))


def torus_decomposition_identity(p: int, q: int) -> tuple[BraidWord, BraidWord]:
    """Both sides of (s_1..s_{p-1})^q = (s_1..s_{q-1})^q (s_q..s_{p-1})(s_{q-1}..s_{p-2})...(s_1..s_{p-q})."""
    if not 2 <= q < p:
        raise ValueError(f"identity needs 2 <= q < p, got p={p}, q={q}")
    left = torus_braid(p, q)
    right = full_twist_word(q, 1, 0, p) * block_crossing_word(q, p - q, 0, p)
    return left, right


# -- permutations ------------------------------------------------------------


def braid_permutation(b: BraidWord) -> StrandPermutation:
    pos = list(range(b.strand_count))  # pos[strand] = current position
    where = list(range(b.strand_count))  # where[position] = strand
    for g in b.letters:
        i = abs(g) - 1
        s1, s2 = where[i], where[i + 1]
        where[i], where[i + 1] = s2, s1
        pos[s1], pos[s2] = i + 1, i
    return StrandPermutation(tuple(v + 1 for v in pos))


def closure_component_count(b: BraidWord) -> int:
    return len(braid_permutation(b).cycles())


# -- Garside normal form -----------------------------------------------------
#
# Internally a permutation braid is a 0-based tuple ``perm`` with perm[i] the
# final position of the strand that starts at position i.


def _swap(v: int, k: int) -> int:
    # transposition of positions k-1, k (k is a 1-based generator index)
    if v == k - 1:
        return k
    if v == k:
        return k - 1
    return v


def _inverse(perm: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(perm)
    for i, v in enumerate(perm):
        inv[v] = i
    return tuple(inv)


def _starting_set(perm: tuple[int, ...]) -> list[int]:
    return [k for k in range(1, len(perm)) if perm[k - 1] > perm[k]]


def _finishing_set(perm: tuple[int, ...]) -> set[int]:
    inv = _inverse(perm)
    return {k for k in range(1, len(perm)) if inv[k - 1] > inv[k]}


def _times_generator(perm: tuple[int, ...], k: int) -> tuple[int, ...]:
    return tuple(_swap(v, k) for v in perm)


def _strip_generator(perm: tuple[int, ...], k: int) -> tuple[int, ...]:
    # sigma_k^{-1} * perm, valid when k is in the starting set
    return tuple(perm[_swap(i, k)] for i in range(len(perm)))


def _conjugate_by_delta(perm: tuple[int, ...]) -> tuple[int, ...]:
    n = len(perm)
    return tuple(n - 1 - perm[n - 1 - j] for j in range(n))


def _permutation_word(perm: tuple[int, ...]) -> list[int]:
    word = []
    while True:
        starts = _starting_set(perm)
        if not starts:
            return word
        k = starts[0]
        word.append(k)
        perm = _strip_generator(perm, k)


@dataclass(frozen=True)
class GarsideNormalForm:
    strand_count: int
    infimum: int
    factors: tuple[StrandPermutation, ...]

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    def word(self) -> BraidWord:
        n = self.strand_count
        delta = _permutation_word(tuple(range(n - 1, -1, -1)))
        if self.infimum >= 0:
            letters = delta * self.infimum
        else:
            letters = [-g for g in reversed(delta)] * (-self.infimum)
        for f in self.factors:
            letters.extend(_permutation_word(tuple(v - 1 for v in f.image)))
        return BraidWord(n, tuple(letters))


def _left_weight(factors: list[tuple[int, ...]]) -> None:
    changed = True
    while changed:
        changed = False
        for i in range(len(factors) - 1):
            a, b = factors[i], factors[i + 1]
            fin = _finishing_set(a)
            while True:
                moves = [k for k in _starting_set(b) if k not in fin]
                if not moves:
                    break
                k = moves[0]
                a = _times_generator(a, k)
                b = _strip_generator(b, k)
                fin = _finishing_set(a)
                changed = True
            factors[i], factors[i + 1] = a, b


def garside_normal_form(b: BraidWord) -> GarsideNormalForm:
    n = b.strand_count
    identity = tuple(range(n))
    delta = tuple(range(n - 1, -1, -1))
    infimum = 0
    factors: list[tuple[int, ...]] = []
    for g in b.letters:
        k = abs(g)
        if g > 0:
            factors.append(_times_generator(identity, k))
        else:
            # sigma_k^{-1} = Delta^{-1} (Delta sigma_k^{-1}); slide Delta^{-1} left
            factors = [_conjugate_by_delta(f) for f in factors]
            infimum -= 1
            factors.append(tuple(_swap(n - 1 - i, k) for i in range(n)))
    _left_weight(factors)
    while factors and factors[0] == delta:
        infimum += 1
        factors.pop(0)
    while factors and factors[-1] == identity:
        factors.pop()
    return GarsideNormalForm(
        n, infimum, tuple(StrandPermutation(tuple(v + 1 for v in f)) for f in factors)
    )


def braid_equal(a: BraidWord, b: BraidWord) -> bool:
    if a.strand_count != b.strand_count:
        raise ValueError(
            f"strand counts differ: {a.strand_count} vs {b.strand_count}"
        )
    return garside_normal_form(a) == garside_normal_form(b)


def word(n: int, letters: Iterable[int] | Sequence[int]) -> BraidWord:
    """Shorthand constructor: ``word(3, [1, 2, -1])``."""
    return BraidWord(n, tuple(letters))
