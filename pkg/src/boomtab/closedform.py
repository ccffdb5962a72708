"""Explicit DDT, UBCT, LBCT and DBCT entries of the inverse function x -> x^(2^n - 2).

No table is constructed here: every entry is read off from traces, products
and a quadratic side condition in the field.  All entry functions broadcast
over numpy arrays of field elements.
"""

from __future__ import annotations

import enum
from collections import Counter

import numpy as np

from .field import Field, kloosterman_k1_carlitz
from .tables import Spectrum


class DbctCase(enum.IntEnum):
    """Which branch of the DBCT case table a cell (a, d) falls in."""

    BOUNDARY = 0  # a = 0 or d = 0
    DIAGONAL = 1  # a = d
    CUBE_EQUAL = 2  # a != d, a^3 = d^3 (even n only)
    TRACE_00 = 3  # (Tr(a/d), Tr(d/a)) = (0, 0)
    TRACE_01 = 4
    TRACE_10 = 5
    TRACE_11 = 6
    OUT_OF_RANGE = 7  # n = 1 or n = 2, nonzero a, d


def in_theorem_range(n: int) -> bool:
    """Odd n > 1 or even n > 2."""
    return n >= 3


def _ret(r: np.ndarray, *inputs):
    if all(np.ndim(i) == 0 for i in inputs):
        return int(r)
    return r


def _arr(*xs):
    return [np.asarray(x, dtype=np.int64) for x in xs]


def ddt_inverse(f: Field, a, b):
    """DDT(a, b) of the inverse function."""
    A, B = _arr(a, b)
    ab = np.asarray(f.mul(A, B))
    on_inverse = 4 if f.trace(1) == 0 else 2
    generic = np.where(f.trace(f.inv(ab)) == 0, 2, 0)
    r = np.where(ab == 1, on_inverse, generic)
    r = np.where((A == 0) | (B == 0), np.where((A == 0) & (B == 0), f.order, 0), r)
    return _ret(r, a, b)


def ubct_inverse(f: Field, a, b, c):
    """UBCT(a, b, c) of the inverse function.

    The planes a = 0, b != 0 and a != 0, b = 0 are zero: with one of the two
    differences zero and the other not, the defining set is empty.
    """
    A, B, C = _arr(a, b, c)
    ab = np.asarray(f.mul(A, B))
    ac = np.asarray(f.mul(A, C))
    ab1 = ab == 1
    c0 = C == 0
    tr_ab = np.asarray(f.trace(f.inv(ab))) == 0
    tr_ac = np.asarray(f.trace(f.inv(ac))) == 0
    eq = B == C
    if f.n % 2:
        two = (c0 & ab1) | (c0 & ~ab1 & tr_ab) | (~c0 & eq & ab1) | (~c0 & eq & tr_ac)
        r = np.where(two, 2, 0)
    else:
        # a*c^2 + a*b*c + b
        side = np.asarray(f.mul(ac, C) ^ f.mul(ab, C) ^ B)
        four = (c0 & ab1) | (~c0 & eq & ab1) | (~c0 & ~eq & ab1 & (side == 0))
        two = (c0 & ~ab1 & tr_ab) | (~c0 & eq & tr_ac)
        r = np.select([four, two], [4, 2], 0)
    r = np.where((A == 0) | (B == 0), np.where((A == 0) & (B == 0), f.order, 0), r)
    return _ret(r, a, b, c)


def lbct_inverse(f: Field, b, c, d):
    """LBCT(b, c, d) of the inverse function; planes with exactly one of c, d zero are zero."""
    B, C, D = _arr(b, c, d)
    cd = np.asarray(f.mul(C, D))
    cd1 = cd == 1
    b0 = B == 0
    tr_cd = np.asarray(f.trace(f.inv(cd))) == 0
    eq = B == C
    if f.n % 2:
        two = (b0 & cd1) | (b0 & ~cd1 & tr_cd) | (~b0 & eq & cd1) | (~b0 & eq & tr_cd)
        r = np.where(two, 2, 0)
    else:
        # d*b^2 + c*d*b + c
        side = np.asarray(f.mul(f.mul(D, B), B) ^ f.mul(cd, B) ^ C)
        four = (b0 & cd1) | (~b0 & eq & cd1) | (~b0 & ~eq & cd1 & (side == 0))
        two = (b0 & ~cd1 & tr_cd) | (~b0 & eq & tr_cd)
        r = np.select([four, two], [4, 2], 0)
    r = np.where((C == 0) | (D == 0), np.where((C == 0) & (D == 0), f.order, 0), r)
    return _ret(r, b, c, d)


def dbct_case(f: Field, a, d):
    """Branch of the DBCT case table for each (a, d); returns DbctCase codes."""
    A, D = _arr(a, d)
    A, D = np.broadcast_arrays(A, D)
    t_ad = f.trace(f.div(A, D))
    t_da = f.trace(f.div(D, A))
    trace_case = DbctCase.TRACE_00 + 2 * np.asarray(t_ad) + np.asarray(t_da)
    nz = (A != 0) & (D != 0)
    if f.n % 2 == 0:
        cube = np.zeros(A.shape, dtype=bool)
        cube[nz] = f.cube_class_equal(A[nz], D[nz])
    else:
        cube = np.zeros(A.shape, dtype=bool)
    r = np.select(
        [~nz, A == D, cube],
        [DbctCase.BOUNDARY, DbctCase.DIAGONAL, DbctCase.CUBE_EQUAL],
        trace_case,
    )
    if not in_theorem_range(f.n):
        r = np.where(nz, DbctCase.OUT_OF_RANGE, r)
    if np.ndim(a) == 0 and np.ndim(d) == 0:
        return DbctCase(int(r))
    return r


def dbct_case_values(n: int) -> dict[DbctCase, int]:
    """The DBCT value attached to each branch for the given n."""
    q = 1 << n
    vals = {
        DbctCase.BOUNDARY: q * q,
        DbctCase.TRACE_00: q + 4,
        DbctCase.TRACE_01: q,
        DbctCase.TRACE_10: q,
        DbctCase.TRACE_11: q - 4,
    }
    if n % 2:
        vals[DbctCase.DIAGONAL] = 2 * q
    else:
        vals[DbctCase.DIAGONAL] = 2 * q + 8
        vals[DbctCase.CUBE_EQUAL] = q + (20 if n % 4 == 0 else 12)
    return vals


_fallback_cache: dict[Field, np.ndarray] = {}


def _brute_dbct(f: Field) -> np.ndarray:
    if f not in _fallback_cache:
        from .sbox import inverse_sbox
        from .tables import dbct

        _fallback_cache[f] = dbct(inverse_sbox(f)).counts
    return _fallback_cache[f]


def dbct_inverse(f: Field, a, d):
    """DBCT(a, d) of the inverse function.

    Outside the theorem's range (n = 1, 2) the value is taken from the
    brute-force table instead.
    """
    case = np.asarray(dbct_case(f, a, d))
    if not in_theorem_range(f.n):
        A, D = np.broadcast_arrays(*_arr(a, d))
        r = _brute_dbct(f)[A, D]
    else:
        vals = dbct_case_values(f.n)
        lut = np.zeros(len(DbctCase), dtype=np.int64)
        for k, v in vals.items():
            lut[k] = v
        r = lut[case]
    return _ret(np.asarray(r), a, d)


def _check_range(n: int) -> None:
    if not in_theorem_range(n):
        raise ValueError(f"closed form requires odd n > 1 or even n > 2, got n={n}")


def dbct_spectrum_inverse(n: int, include_boundary: bool = True) -> Spectrum:
    """DBCT value -> cell count for the inverse function, from K(1) alone.

    With ``include_boundary=False`` the 2^(n+1) - 1 cells of row 0 and
    column 0 are left out.
    """
    _check_range(n)
    q = 1 << n
    k = kloosterman_k1_carlitz(n)
    assert k % 4 == 0, f"K(1)={k} not divisible by 4"
    k4, k2 = k // 4, k // 2
    m = q - 1
    c: Counter = Counter()
    c[q * q] += 2 * q - 1
    if n % 2:
        c[2 * q] += m
        c[q + 4] += (q // 4 + k4 - 1) * m
        c[q] += (q // 2 - k2) * m
        c[q - 4] += (q // 4 + k4 - 1) * m
    elif n % 4 == 0:
        c[2 * q + 8] += m
        c[q + 20] += 2 * m
        c[q + 4] += (q // 4 + k4 - 4) * m
        c[q] += (q // 2 - k2) * m
        c[q - 4] += (q // 4 + k4) * m
    else:
        c[2 * q + 8] += m
        c[q + 12] += 2 * m
        c[q - 4] += (q // 4 + k4 - 2) * m
        c[q] += (q // 2 - k2) * m
        c[q + 4] += (q // 4 + k4 - 2) * m
    assert all(v >= 0 for v in c.values())
    spec = Spectrum.from_counter(c, include_boundary=True)
    assert spec.total == q * q, f"spectrum counts sum to {spec.total}, expected {q * q}"
    if not include_boundary:
        c[q * q] -= 2 * q - 1
        spec = Spectrum.from_counter(c, include_boundary=False)
    return spec


def beta_d_inverse(n: int) -> int:
    """Double boomerang uniformity of the inverse function."""
    _check_range(n)
    return (1 << (n + 1)) + (0 if n % 2 else 8)


def is_hard_inverse(n: int) -> bool:
    if n < 1:
        raise ValueError("n must be positive")
    return n % 2 == 1
