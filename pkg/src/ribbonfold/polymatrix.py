"""Determinants of square matrices over Z[t, t^-1].

Two exact routes:

* :func:`bareiss_det` -- fraction-free Gaussian elimination directly over the
  Laurent ring.  Simple, but cost grows with entry degree, so it is used for
  small matrices and as a reference in tests.
* :func:`modular_det` -- evaluation at many points modulo several word-size
  primes, batched elimination in numpy, Newton interpolation and CRT.  The
  exponent window comes from a max/min-plus assignment over entry degrees and
  the coefficient bound from the permanent of entrywise 1-norms, so the result
  is exact, not probabilistic.

:func:`det` first pivots on unit entries (+-t^k), which removes most rows
of an Alexander matrix at no cost in exactness, then dispatches the remaining
block between the two routes by size.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

import numpy as np
from scipy.optimize import linear_sum_assignment

from .laurent import LaurentPolynomial

Matrix = Sequence[Sequence[LaurentPolynomial]]

BAREISS_MAX_DIM = 6
_PRIME_CEILING = 2**31 - 1


def _rows(matrix: Matrix) -> list[list[LaurentPolynomial]]:
    """Copy of the matrix with integer entries promoted to constants."""
    return [[e if isinstance(e, LaurentPolynomial) else LaurentPolynomial.constant(e) for e in row]
            for row in matrix]


def bareiss_det(matrix: Matrix) -> LaurentPolynomial:
    m = len(matrix)
    if m == 0:
        return LaurentPolynomial.constant(1)
    a = _rows(matrix)
    if any(len(row) != m for row in a):
        raise ValueError("matrix is not square")
    sign = 1
    prev = LaurentPolynomial.constant(1)
    for k in range(m - 1):
        if a[k][k].is_zero():
            for i in range(k + 1, m):
                if not a[i][k].is_zero():
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return LaurentPolynomial()
        pivot = a[k][k]
        for i in range(k + 1, m):
            for j in range(k + 1, m):
                a[i][j] = (pivot * a[i][j] - a[i][k] * a[k][j]).exact_div(prev)
            a[i][k] = LaurentPolynomial()
        prev = pivot
    result = a[m - 1][m - 1]
    return -result if sign < 0 else result


# -- modular route -----------------------------------------------------------


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # deterministic for n < 3.3e24 with these bases
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@lru_cache(maxsize=None)
def _prime(index: int) -> int:
    """The index-th largest prime below 2**31 (products of two fit in int64)."""
    start = _PRIME_CEILING if index == 0 else _prime(index - 1) - 2
    n = start
    while not _is_prime(n):
        n -= 2
    return n


def _assignment_extreme(weights: np.ndarray, present: np.ndarray, maximize: bool) -> int | None:
    """Best total weight of a permutation using only present entries, or None."""
    big = 10**9
    cost = np.where(present, weights, -big if maximize else big).astype(float)
    rows, cols = linear_sum_assignment(cost, maximize=maximize)
    if not present[rows, cols].all():
        return None
    return int(weights[rows, cols].sum())


def _det_mod_batch(vals: np.ndarray, p: int) -> np.ndarray:
    """Determinants mod p of a (batch, m, m) int64 array with entries in [0, p)."""
    a = vals.copy()
    batch, m, _ = a.shape
    det = np.ones(batch, dtype=np.int64)
    alive = np.ones(batch, dtype=bool)
    idx = np.arange(batch)
    for k in range(m):
        col = a[:, k:, k] != 0
        has = col.any(axis=1)
        alive &= has
        piv = np.argmax(col, axis=1) + k
        swap = piv != k
        if swap.any():
            rows_k = a[idx, k].copy()
            a[idx, k] = a[idx, piv]
            a[idx, piv] = rows_k
            det = np.where(swap, (p - det) % p, det)
        pivot = np.where(alive, a[:, k, k], 1)
        det = det * pivot % p
        if k == m - 1:
            break
        inv = _pow_mod(pivot, p - 2, p)
        factor = a[:, k + 1 :, k] * inv[:, None] % p
        a[:, k + 1 :, k:] = (
            a[:, k + 1 :, k:] - factor[:, :, None] * a[:, k, None, k:] % p
        ) % p
    return np.where(alive, det, 0)


def _pow_mod(base: np.ndarray, exp: int, p: int) -> np.ndarray:
    result = np.ones_like(base)
    b = base % p
    while exp:
        if exp & 1:
            result = result * b % p
        b = b * b % p
        exp >>= 1
    return result


def _interpolate_mod(xs: list[int], ys: list[int], p: int) -> list[int]:
    """Coefficients (ascending) of the unique poly of degree < len(xs) through the points, mod p."""
    n = len(xs)
    coef = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            num = (coef[i] - coef[i - 1]) % p
            den = (xs[i] - xs[i - j]) % p
            coef[i] = num * pow(den, p - 2, p) % p
    # Newton form -> monomial form
    out = [0] * n
    for i in range(n - 1, -1, -1):
        # out = out * (x - xs[i]) + coef[i]
        new = [0] * n
        for d in range(n - 1):
            if out[d]:
                new[d + 1] = (new[d + 1] + out[d]) % p
                new[d] = (new[d] - out[d] * xs[i]) % p
        new[0] = (new[0] + coef[i]) % p
        out = new
    return out


def modular_det(matrix: Matrix) -> LaurentPolynomial:
    m = len(matrix)
    if m == 0:
        return LaurentPolynomial.constant(1)
    if any(len(row) != m for row in matrix):
        raise ValueError("matrix is not square")
    matrix = _rows(matrix)

    present = np.array([[not e.is_zero() for e in row] for row in matrix])
    if not present.any(axis=1).all():
        return LaurentPolynomial()
    row_shift = [min(e.min_degree() for e in row if not e.is_zero()) for row in matrix]
    hi = np.zeros((m, m), dtype=np.int64)
    lo = np.zeros((m, m), dtype=np.int64)
    for i, row in enumerate(matrix):
        for j, e in enumerate(row):
            if not e.is_zero():
                hi[i, j] = e.max_degree() - row_shift[i]
                lo[i, j] = e.min_degree() - row_shift[i]
    top = _assignment_extreme(hi, present, maximize=True)
    if top is None:
        return LaurentPolynomial()
    bottom = _assignment_extreme(lo, present, maximize=False)
    npts = top - bottom + 1

    bound = 1
    for row in matrix:
        bound *= sum(e.norm1() for e in row)
    width = max(int(hi.max()) + 1, 1)

    residues: list[list[int]] = []
    moduli: list[int] = []
    modulus = 1
    k = 0
    while modulus <= 2 * bound:
        p = _prime(k)
        k += 1
        coeffs = np.zeros((m, m, width), dtype=np.int64)
        for i, row in enumerate(matrix):
            for j, e in enumerate(row):
                for ex, v in e.coefficients.items():
                    coeffs[i, j, ex - row_shift[i]] = v % p
        xs = np.arange(1, npts + 1, dtype=np.int64)
        vals = np.zeros((npts, m, m), dtype=np.int64)
        for d in range(width - 1, -1, -1):
            vals = (vals * xs[:, None, None] + coeffs[None, :, :, d]) % p
        dets = _det_mod_batch(vals, p)
        # divide out x**bottom so an interpolating poly of degree < npts exists
        shift = _pow_mod(xs, (p - 1 - bottom % (p - 1)) % (p - 1), p)
        ys = (dets * shift % p).tolist()
        residues.append(_interpolate_mod(xs.tolist(), ys, p))
        moduli.append(p)
        modulus *= p

    out = {}
    for d in range(npts):
        value = 0
        for res, p in zip(residues, moduli):
            mi = modulus // p
            value += res[d] * mi * pow(mi, -1, p)
        value %= modulus
        if value > modulus // 2:
            value -= modulus
        if value:
            # rows were scaled by t^-row_shift before evaluation
            out[d + bottom + sum(row_shift)] = value
    return LaurentPolynomial(out)


def _unit(e: LaurentPolynomial) -> bool:
    c = e.coefficients
    return len(c) == 1 and abs(next(iter(c.values()))) == 1


def eliminate_units(matrix: Matrix) -> tuple[LaurentPolynomial, list[list[LaurentPolynomial]]]:
    """Pivot on unit entries (+-t^k) while any remain.

    Returns (factor, rest) with det(matrix) = factor * det(rest).  Pivots are
    chosen in the sparsest available row so fill-in stays small.  Exact: a
    unit pivot needs no division in the Laurent ring.
    """
    m = len(matrix)
    if any(len(row) != m for row in matrix):
        raise ValueError("matrix is not square")
    rows = [{j: e for j, e in enumerate(row) if not e.is_zero()} for row in _rows(matrix)]
    live_rows, live_cols = set(range(m)), set(range(m))
    factor = LaurentPolynomial.constant(1)
    while live_rows:
        best = None
        for i in live_rows:
            for c, e in rows[i].items():
                if _unit(e) and (best is None or len(rows[i]) < len(rows[best[0]])):
                    best = (i, c)
                    break
        if best is None:
            break
        i, c = best
        pivot = rows[i][c]
        inv = pivot ** -1
        for j in live_rows:
            if j == i or c not in rows[j]:
                continue
            scale = rows[j][c] * inv
            for col, e in rows[i].items():
                v = rows[j].get(col, LaurentPolynomial()) - scale * e
                if v.is_zero():
                    rows[j].pop(col, None)
                else:
                    rows[j][col] = v
        pos = sum(1 for k in live_rows if k < i) + sum(1 for k in live_cols if k < c)
        factor = factor * (pivot if pos % 2 == 0 else -pivot)
        live_rows.discard(i)
        live_cols.discard(c)
        for j in live_rows:
            rows[j].pop(c, None)
    order_r, order_c = sorted(live_rows), sorted(live_cols)
    rest = [[rows[i].get(c, LaurentPolynomial()) for c in order_c] for i in order_r]
    return factor, rest


def det(matrix: Matrix) -> LaurentPolynomial:
    factor, rest = eliminate_units(matrix)
    if len(rest) <= BAREISS_MAX_DIM:
        return factor * bareiss_det(rest)
    return factor * modular_det(rest)
