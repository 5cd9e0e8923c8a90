from __future__ import annotations

import pytest

from ribbonfold.braid import BraidWord, torus_braid, twisted_torus_braid, word
from ribbonfold.invariants import (
    Crossing,
    PlanarDiagram,
    alexander_from_braid,
    alexander_from_diagram,
    alexander_torus_oracle,
    diagram_from_braid_closure,
    normalize_alexander,
    reduced_burau,
    trefoil_diagram,
    unknot_diagram,
)
from ribbonfold.laurent import LaurentPolynomial as L, T

TREFOIL = L({-1: 1, 0: -1, 1: 1})


def _matmul(a, b):
    n = len(a)
    return [[sum((a[i][k] * b[k][j] for k in range(n)), L()) for j in range(n)] for i in range(n)]


class TestBurau:
    def test_identity(self):
        assert reduced_burau(BraidWord(3)) == [[L.constant(1), L()], [L(), L.constant(1)]]

    def test_single_generator(self):
        assert reduced_burau(word(2, [1])) == [[-T]]

    def test_homomorphism(self):
        a, b = word(4, [1, -2, 3, 2]), word(4, [-3, -1, 2])
        assert reduced_burau(a * b) == _matmul(reduced_burau(a), reduced_burau(b))

    def test_inverse_letters(self):
        b = word(3, [1, 2, -1])
        prod = reduced_burau(b * b.inverse())
        assert prod == reduced_burau(BraidWord(3))

    def test_needs_two_strands(self):
        with pytest.raises(ValueError):
            reduced_burau(BraidWord(1))


class TestAlexander:
    def test_unknots(self):
        assert alexander_from_braid(BraidWord(1)) == 1
        assert alexander_from_braid(word(2, [1])) == 1

    def test_trefoil(self):
        assert alexander_from_braid(torus_braid(2, 3)) == TREFOIL

    def test_figure_eight(self):
        assert alexander_from_braid(word(3, [1, -2, 1, -2])) == L({-1: -1, 0: 3, 1: -1}) * -1

    def test_torus_symmetry(self):
        assert alexander_from_braid(torus_braid(3, 4)) == alexander_from_braid(torus_braid(4, 3))

    def test_rejects_links(self):
        with pytest.raises(ValueError):
            alexander_from_braid(word(2, [1, 1]))


class TestOracle:
    def test_examples(self):
        assert alexander_torus_oracle(2, 3) == TREFOIL
        assert alexander_torus_oracle(2, 5) == L({-2: 1, -1: -1, 0: 1, 1: -1, 2: 1})
        assert alexander_torus_oracle(5, 7) == alexander_torus_oracle(7, 5)

    def test_rejects(self):
        with pytest.raises(ValueError):
            alexander_torus_oracle(4, 6)
        with pytest.raises(ValueError):
            alexander_torus_oracle(1, 3)


class TestNormalize:
    def test_examples(self):
        assert normalize_alexander(L({3: -1, 2: 1, 1: -1})) == TREFOIL
        assert normalize_alexander(L.constant(-5)) == 5
        f = L({4: 2, 7: -3, 9: 1})
        assert normalize_alexander(normalize_alexander(f)) == normalize_alexander(f)

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            normalize_alexander(L())


class TestDiagrams:
    def test_unknot_and_trefoil(self):
        assert alexander_from_diagram(unknot_diagram()) == 1
        assert alexander_from_diagram(trefoil_diagram()) == TREFOIL

    def test_closure_of_torus_braid(self):
        b = torus_braid(3, 2)
        assert alexander_from_diagram(diagram_from_braid_closure(b)) == alexander_from_braid(b)

    def test_mixed_signs(self):
        b = twisted_torus_braid(5, 2, 3, -2)
        d = diagram_from_braid_closure(b)
        assert d.crossing_count == len(b)
        assert d.writhe() == b.exponent_sum()
        assert alexander_from_diagram(d) == alexander_from_braid(b)

    def test_validation(self):
        with pytest.raises(ValueError):
            Crossing(0, 1, 2, 0)
        with pytest.raises(ValueError):
            PlanarDiagram((Crossing(0, 0, 1, 1),), 2)
        with pytest.raises(ValueError):
            alexander_from_diagram(diagram_from_braid_closure(word(2, [1, 1])))
