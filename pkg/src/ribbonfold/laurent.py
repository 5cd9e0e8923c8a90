"""Exact Laurent polynomials in one variable t with integer coefficients."""

from __future__ import annotations

from typing import Iterable, Mapping

__all__ = ["LaurentPolynomial", "T"]


class LaurentPolynomial:
    """Sparse integer Laurent polynomial; immutable and hashable.

    ``coefficients`` maps exponent -> nonzero coefficient.  The zero polynomial
    is the empty map.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coefficients: Mapping[int, int] | None = None):
        c = {}
        if coefficients:
            for e, v in coefficients.items():
                if int(v) != v:
                    raise TypeError(f"non-integer coefficient {v!r}")
                if v:
                    c[int(e)] = int(v)
        self._c = c
        self._hash = None

    # -- constructors --------------------------------------------------------

    @classmethod
    def constant(cls, value: int) -> LaurentPolynomial:
        return cls({0: value})

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> LaurentPolynomial:
        return cls({exponent: coefficient})

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[int, int]]) -> LaurentPolynomial:
        c: dict[int, int] = {}
        for e, v in terms:
            c[e] = c.get(e, 0) + v
        return cls(c)

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], low: int = 0) -> LaurentPolynomial:
        """Dense coefficient list starting at exponent ``low``."""
        return cls({low + i: v for i, v in enumerate(coeffs) if v})

    # -- access --------------------------------------------------------------

    @property
    def coefficients(self) -> dict[int, int]:
        return dict(self._c)

    def terms(self) -> list[tuple[int, int]]:
        return sorted(self._c.items())

    def is_zero(self) -> bool:
        return not self._c

    def min_degree(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return min(self._c)

    def max_degree(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return max(self._c)

    def span(self) -> int:
        return self.max_degree() - self.min_degree()

    def coeff(self, exponent: int) -> int:
        return self._c.get(exponent, 0)

    def norm1(self) -> int:
        return sum(abs(v) for v in self._c.values())

    def dense(self) -> tuple[int, list[int]]:
        """(lowest exponent, dense coefficient list)."""
        lo, hi = self.min_degree(), self.max_degree()
        return lo, [self._c.get(e, 0) for e in range(lo, hi + 1)]

    def __call__(self, x):
        return sum(v * x**e for e, v in self._c.items())

    def evaluate_mod(self, x: int, modulus: int) -> int:
        total = 0
        for e, v in self._c.items():
            total += v * pow(x, e, modulus)
        return total % modulus

    # -- arithmetic ----------------------------------------------------------

    @staticmethod
    def _coerce(other) -> LaurentPolynomial | None:
        if isinstance(other, LaurentPolynomial):
            return other
        if isinstance(other, int):
            return LaurentPolynomial.constant(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        c = dict(self._c)
        for e, v in o._c.items():
            c[e] = c.get(e, 0) + v
        return LaurentPolynomial(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        c: dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in o._c.items():
                c[e1 + e2] = c.get(e1 + e2, 0) + v1 * v2
        return LaurentPolynomial(c)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._c) != 1:
                raise ValueError("only monomials can be raised to negative powers")
            (e, v), = self._c.items()
            if abs(v) != 1:
                raise ValueError("only unit monomials are invertible")
            return LaurentPolynomial({e * k: 1 if v == 1 else (-1) ** abs(k)})
        result = LaurentPolynomial.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> LaurentPolynomial:
        """Multiply by t**k."""
        return LaurentPolynomial({e + k: v for e, v in self._c.items()})

    def substitute_inverse(self) -> LaurentPolynomial:
        """t -> t**-1."""
        return LaurentPolynomial({-e: v for e, v in self._c.items()})

    def divmod(self, divisor: LaurentPolynomial) -> tuple[LaurentPolynomial, LaurentPolynomial]:
        """Long division with the divisor's leading coefficient dividing exactly.

        Returns (quotient, remainder) with remainder of smaller top degree than
        divisor once exponents are aligned at the divisor's lowest term.
        Raises ArithmeticError if a leading coefficient does not divide.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return LaurentPolynomial(), LaurentPolynomial()
        dlo, dcoef = divisor.dense()
        nlo, ncoef = self.dense()
        lead = dcoef[-1]
        rem = list(ncoef)
        qlen = len(rem) - len(dcoef) + 1
        quot = [0] * max(qlen, 0)
        for i in range(qlen - 1, -1, -1):
            top = rem[i + len(dcoef) - 1]
            if top == 0:
                continue
            if top % lead:
                raise ArithmeticError("leading coefficient does not divide")
            f = top // lead
            quot[i] = f
            for j, d in enumerate(dcoef):
                rem[i + j] -= f * d
        q = LaurentPolynomial.from_coeffs(quot, nlo - dlo)
        r = LaurentPolynomial.from_coeffs(rem, nlo)
        return q, r

    def exact_div(self, divisor: LaurentPolynomial) -> LaurentPolynomial:
        q, r = self.divmod(divisor)
        if not r.is_zero():
            raise ArithmeticError(f"inexact division: ({self}) / ({divisor}) leaves {r}")
        return q

    def __floordiv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.exact_div(o)

    # -- comparison / display ------------------------------------------------

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._c == o._c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._c)

    def to_json(self) -> dict:
        return {"terms": [[e, v] for e, v in self.terms()]}

    @classmethod
    def from_json(cls, data: dict) -> LaurentPolynomial:
        return cls.from_terms((int(e), int(v)) for e, v in data["terms"])

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        out = []
        for e, v in self.terms():
            sign = "-" if v < 0 else "+"
            mag = abs(v)
            if e == 0:
                body = str(mag)
            else:
                var = "t" if e == 1 else f"t^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            out.append((sign, body))
        first_sign, first_body = out[0]
        s = ("-" if first_sign == "-" else "") + first_body
        for sign, body in out[1:]:
            s += f" {sign} {body}"
        return s


T = LaurentPolynomial.monomial(1)
