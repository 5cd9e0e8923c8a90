"""Randomized properties of the braid, invariant and determinant layers."""

from __future__ import annotations

from hypothesis import given, settings, strategies as st

from ribbonfold.braid import (
    BraidWord,
    braid_equal,
    braid_permutation,
    closure_component_count,
    garside_normal_form,
    mirror_braid,
    torus_braid,
    twisted_torus_braid,
)
from ribbonfold.invariants import alexander_from_braid, alexander_from_diagram, diagram_from_braid_closure
from ribbonfold.laurent import LaurentPolynomial
from ribbonfold.polymatrix import bareiss_det, modular_det

N = 4


def letters(n: int = N, max_size: int = 12):
    return st.lists(st.integers(1, n - 1).flatmap(lambda i: st.sampled_from([i, -i])), max_size=max_size)


words = letters().map(lambda ls: BraidWord(N, tuple(ls)))


@st.composite
def rewritten(draw):
    """A word and a copy changed by one braid-group relation."""
    base = list(draw(letters()))
    pos = draw(st.integers(0, len(base)))
    kind = draw(st.sampled_from(["free", "far", "braid"]))
    i = draw(st.integers(1, N - 2))
    if kind == "free":
        g = draw(st.sampled_from([i, -i, i + 1, -(i + 1)]))
        left, right = [], [g, -g]
    elif kind == "far":
        far = [(a, b) for a in range(1, N) for b in range(1, N) if abs(a - b) >= 2]
        i, j = draw(st.sampled_from(far))
        si, sj = draw(st.sampled_from([1, -1])) * i, draw(st.sampled_from([1, -1])) * j
        left, right = [si, sj], [sj, si]
    else:
        left, right = [i, i + 1, i], [i + 1, i, i + 1]
    a = base[:pos] + left + base[pos:]
    b = base[:pos] + right + base[pos:]
    return BraidWord(N, tuple(a)), BraidWord(N, tuple(b))


@settings(max_examples=150, deadline=None)
@given(rewritten())
def test_relations_preserve_normal_form(pair):
    a, b = pair
    assert braid_equal(a, b)


@settings(max_examples=100, deadline=None)
@given(words)
def test_normal_form_idempotent(w):
    nf = garside_normal_form(w)
    assert garside_normal_form(nf.word()) == nf
    assert braid_equal(nf.word(), w)


@settings(max_examples=100, deadline=None)
@given(words, words)
def test_braid_equal_is_symmetric_and_respects_products(a, b):
    assert braid_equal(a, b) == braid_equal(b, a)
    assert braid_equal(a * a.inverse(), BraidWord(N))


@settings(max_examples=100, deadline=None)
@given(words, words)
def test_permutation_homomorphism(a, b):
    assert braid_permutation(a * b) == braid_permutation(a).then(braid_permutation(b))


knots = st.sampled_from([(3, 2), (5, 2), (4, 3), (5, 3)]).flatmap(
    lambda pq: st.tuples(
        st.just(pq[0]), st.just(pq[1]), st.integers(1, pq[0]), st.sampled_from([-2, -1, 1, 2])
    )
)


@settings(max_examples=40, deadline=None)
@given(knots, st.data())
def test_conjugation_invariance(params, data):
    b = twisted_torus_braid(*params)
    n = b.strand_count
    w = BraidWord(n, tuple(data.draw(letters(n, 8))))
    assert alexander_from_braid(w * b * w.inverse()) == alexander_from_braid(b)


@settings(max_examples=40, deadline=None)
@given(knots, st.sampled_from([1, -1]))
def test_stabilization_invariance(params, sign):
    b = twisted_torus_braid(*params)
    n = b.strand_count
    stabilized = BraidWord(n + 1, b.letters + (sign * n,))
    assert alexander_from_braid(stabilized) == alexander_from_braid(b)


@settings(max_examples=40, deadline=None)
@given(knots)
def test_mirror_and_routes(params):
    b = twisted_torus_braid(*params)
    a = alexander_from_braid(b)
    assert alexander_from_braid(mirror_braid(b)) == a
    assert alexander_from_diagram(diagram_from_braid_closure(b)) == a


@settings(max_examples=60, deadline=None)
@given(letters(4, 14).map(lambda ls: BraidWord(4, tuple(ls))))
def test_random_knot_routes_agree(b):
    if closure_component_count(b) == 1:
        assert alexander_from_diagram(diagram_from_braid_closure(b)) == alexander_from_braid(b)


polys = st.dictionaries(st.integers(-3, 3), st.integers(-4, 4), max_size=3).map(LaurentPolynomial)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 7).flatmap(lambda m: st.lists(st.lists(polys, min_size=m, max_size=m), min_size=m, max_size=m)))
def test_determinant_routes_agree(matrix):
    assert modular_det(matrix) == bareiss_det(matrix)


def test_twist_on_one_strand_is_trivial():
    for s in (-3, -1, 2, 5):
        assert braid_equal(twisted_torus_braid(5, 3, 1, s), torus_braid(5, 3))
