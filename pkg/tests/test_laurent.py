from __future__ import annotations

import pytest

from ribbonfold.laurent import LaurentPolynomial as L, T


def test_no_stored_zeros():
    p = L({0: 0, 2: 3})
    assert p.coefficients == {2: 3}
    assert L().is_zero() and not L()


def test_arithmetic():
    a = L({-1: 1, 0: -1, 1: 1})
    assert a + a == 2 * a
    assert a - a == L()
    assert (T - 1) * (T + 1) == T**2 - 1
    assert (T**-2) * T**2 == L.constant(1)
    assert L.monomial(1, -1) ** -3 == L.monomial(-3, -1)


def test_negative_power_needs_unit_monomial():
    with pytest.raises(ValueError):
        (T + 1) ** -1
    with pytest.raises(ValueError):
        L.monomial(1, 2) ** -1


def test_exact_division():
    num = (T**6 - 1) * (T - 1)
    den = (T**2 - 1) * (T**3 - 1)
    assert num.exact_div(den) == T**2 - T + 1
    with pytest.raises(ArithmeticError):
        (T**2 + 1).exact_div(T + 1)


def test_division_with_laurent_exponents():
    f = L({-3: 2, -2: 1, 0: 5})
    g = L({-1: 1, 1: 1})
    q, r = (f * g).divmod(g)
    assert q == f and r.is_zero()


def test_degree_access():
    p = L({-2: 1, 3: -4})
    assert (p.min_degree(), p.max_degree(), p.span()) == (-2, 3, 5)
    assert p.coeff(3) == -4 and p.coeff(0) == 0
    assert p.norm1() == 5
    with pytest.raises(ValueError):
        L().min_degree()


def test_evaluation():
    p = L({-1: 1, 0: -1, 1: 1})
    assert p(2) == 2 + -1 + 0.5
    assert p.evaluate_mod(3, 101) == (pow(3, -1, 101) - 1 + 3) % 101


def test_json_and_text():
    p = L({-1: 1, 0: -1, 1: 1})
    assert p.to_json() == {"terms": [[-1, 1], [0, -1], [1, 1]]}
    assert L.from_json(p.to_json()) == p
    assert str(p) == "t^-1 - 1 + t"
    assert str(L({2: -3})) == "-3*t^2"
    assert str(L()) == "0"


def test_hash_and_equality_with_ints():
    assert L.constant(5) == 5
    assert hash(L({1: 2})) == hash(L({1: 2}))
    assert T.substitute_inverse() == L.monomial(-1)
