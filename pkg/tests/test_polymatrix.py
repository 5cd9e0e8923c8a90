from __future__ import annotations

import random

import pytest

from ribbonfold.laurent import LaurentPolynomial as L, T
from ribbonfold.polymatrix import bareiss_det, det, eliminate_units, modular_det


def _random_matrix(rng: random.Random, m: int, terms: int = 2) -> list[list[L]]:
    return [
        [L({rng.randint(-3, 3): rng.choice([-3, -2, -1, 1, 2, 5]) for _ in range(rng.randint(0, terms))}) for _ in range(m)]
        for _ in range(m)
    ]


def test_small_known_values():
    assert bareiss_det([]) == 1
    assert bareiss_det([[T]]) == T
    assert bareiss_det([[T, 1], [1, T]]) == T**2 - 1
    # a zero pivot forces a row swap
    assert bareiss_det([[L(), 1], [1, L()]]) == -1


def test_singular():
    row = [T, T + 1, L.constant(2)]
    assert det([row, row, [1, 2, 3]]).is_zero()
    assert modular_det([row, [L()] * 3, row]).is_zero()


def test_rejects_non_square():
    with pytest.raises(ValueError):
        bareiss_det([[T, T]])
    with pytest.raises(ValueError):
        modular_det([[T, T]])


def test_routes_agree_on_random_matrices():
    rng = random.Random(7)
    for _ in range(150):
        m = rng.randint(1, 8)
        mat = _random_matrix(rng, m)
        ref = bareiss_det(mat)
        assert modular_det(mat) == ref
        assert det(mat) == ref


def test_large_coefficients_need_several_primes():
    mat = [[L({0: 10**6, 1: -(10**6)}) if i == j else L({0: 1}) for j in range(9)] for i in range(9)]
    assert modular_det(mat) == bareiss_det(mat)


def test_unit_elimination_factor():
    rng = random.Random(3)
    for _ in range(60):
        mat = _random_matrix(rng, rng.randint(1, 6))
        factor, rest = eliminate_units(mat)
        assert factor * bareiss_det(rest) == bareiss_det(mat)
