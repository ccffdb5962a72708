"""Arithmetic in GF(2^n) for 1 <= n <= 16.

Elements are plain Python ints (or numpy integer arrays) whose bits are the
coefficients of a polynomial over GF(2).  Every operation on :class:`Field`
accepts either a scalar or an array and broadcasts like a numpy ufunc, so the
same code path serves single-cell lookups and whole-table evaluation.

Multiplication goes through log/antilog tables keyed by a primitive element.
The tables are built and checked with a plain carry-less multiply-and-reduce,
which stays available as :func:`clmul_mod`.
"""

from __future__ import annotations

from math import comb
from typing import Optional

import numpy as np

MAX_DEGREE = 16

# Low-weight irreducible polynomials, one per degree.
DEFAULT_POLYS: dict[int, int] = {
    1: 0x3,  # x + 1
    2: 0x7,  # x^2 + x + 1
    3: 0xB,  # x^3 + x + 1
    4: 0x13,  # x^4 + x + 1
    5: 0x25,  # x^5 + x^2 + 1
    6: 0x43,  # x^6 + x + 1
    7: 0x83,  # x^7 + x + 1
    8: 0x11B,  # x^8 + x^4 + x^3 + x + 1
    9: 0x211,  # x^9 + x^4 + 1
    10: 0x409,  # x^10 + x^3 + 1
    11: 0x805,  # x^11 + x^2 + 1
    12: 0x1053,  # x^12 + x^6 + x^4 + x + 1
    13: 0x201B,  # x^13 + x^4 + x^3 + x + 1
    14: 0x4443,  # x^14 + x^10 + x^6 + x + 1
    15: 0x8003,  # x^15 + x + 1
    16: 0x1100B,  # x^16 + x^12 + x^3 + x + 1
}


class FieldError(ValueError):
    """Invalid field parameters or operands."""


def poly_degree(p: int) -> int:
    return p.bit_length() - 1


def clmul(x: int, y: int) -> int:
    """Carry-less product of two GF(2)[x] polynomials, unreduced."""
    r = 0
    while y:
        if y & 1:
            r ^= x
        x <<= 1
        y >>= 1
    return r


def poly_mod(x: int, p: int) -> int:
    """Remainder of x modulo p in GF(2)[x]."""
    dp = poly_degree(p)
    while x and poly_degree(x) >= dp:
        x ^= p << (poly_degree(x) - dp)
    return x


def clmul_mod(x: int, y: int, p: int) -> int:
    """Product of x and y reduced modulo p (shift-and-add, no tables)."""
    n = poly_degree(p)
    top = 1 << n
    r = 0
    while y:
        if y & 1:
            r ^= x
        y >>= 1
        x <<= 1
        if x & top:
            x ^= p
    return r


def is_irreducible(p: int) -> bool:
    """Trial division of p by every polynomial of degree 1..deg(p)//2."""
    n = poly_degree(p)
    if n < 1:
        return False
    for d in range(1, n // 2 + 1):
        for q in range(1 << d, 1 << (d + 1)):
            if poly_mod(p, q) == 0:
                return False
    return True


def _prime_factors(m: int) -> list[int]:
    out = []
    f = 2
    while f * f <= m:
        if m % f == 0:
            out.append(f)
            while m % f == 0:
                m //= f
        f += 1
    if m > 1:
        out.append(m)
    return out


def _pow_raw(x: int, e: int, p: int) -> int:
    r = 1
    while e:
        if e & 1:
            r = clmul_mod(r, x, p)
        x = clmul_mod(x, x, p)
        e >>= 1
    return r


class Field:
    """A concrete GF(2^n) with a fixed reduction polynomial.

    Parameters
    ----------
    n : int
        Extension degree, 1..16.
    poly : int, optional
        Reduction polynomial as a bitmask including the x^n term
        (``0x13`` is x^4 + x + 1).  Defaults to ``DEFAULT_POLYS[n]``.

    Instances are immutable; the lookup tables are read-only arrays.
    """

    def __init__(self, n: int, poly: Optional[int] = None):
        if not isinstance(n, (int, np.integer)) or not 1 <= n <= MAX_DEGREE:
            raise FieldError(f"degree must be in 1..{MAX_DEGREE}, got {n!r}")
        n = int(n)
        if poly is None:
            poly = DEFAULT_POLYS[n]
        poly = int(poly)
        if poly_degree(poly) != n:
            raise FieldError(f"polynomial {poly:#x} does not have degree {n}")
        if not is_irreducible(poly):
            raise FieldError(f"polynomial {poly:#x} is reducible over GF(2)")

        self.n = n
        self.poly = poly
        self.order = 1 << n
        q1 = self.order - 1

        self.generator = self._find_generator()
        exp = np.zeros(2 * q1 + 1, dtype=np.int64)
        log = np.zeros(self.order, dtype=np.int64)
        v = 1
        for i in range(q1):
            exp[i] = v
            log[v] = i
            v = clmul_mod(v, self.generator, poly)
        exp[q1:2 * q1] = exp[:q1]
        exp[2 * q1] = exp[0]
        nz = np.arange(1, self.order)
        if not np.array_equal(exp[log[nz]], nz):
            raise FieldError("log/antilog tables are inconsistent")
        self._exp = exp
        self._log = log

        inv = np.zeros(self.order, dtype=np.int64)
        inv[nz] = exp[(q1 - log[nz]) % q1]
        self._inv = inv

        # trace(x) = x + x^2 + ... + x^(2^(n-1))
        elems = np.arange(self.order, dtype=np.int64)
        acc = elems.copy()
        sq = elems
        for _ in range(n - 1):
            sq = self.mul(sq, sq)
            acc ^= sq
        if not np.all((acc == 0) | (acc == 1)):
            raise FieldError("trace left the prime field")
        self._trace = acc

        for arr in (self._exp, self._log, self._inv, self._trace):
            arr.setflags(write=False)
        # list copies serve the scalar fast paths
        self._exp_l = exp.tolist()
        self._log_l = log.tolist()
        self._inv_l = inv.tolist()
        self._trace_l = acc.tolist()
        self._trace_one_elem = int(np.flatnonzero(acc)[0])

    def _find_generator(self) -> int:
        q1 = self.order - 1
        if q1 == 1:
            return 1
        factors = _prime_factors(q1)
        for g in range(2, self.order):
            if all(_pow_raw(g, q1 // f, self.poly) != 1 for f in factors):
                return g
        raise FieldError("no primitive element found")  # unreachable for irreducible poly

    def __repr__(self) -> str:
        return f"Field(n={self.n}, poly={self.poly:#x})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and (self.n, self.poly) == (other.n, other.poly)

    def __hash__(self) -> int:
        return hash((self.n, self.poly))

    @property
    def poly_hex(self) -> str:
        return f"0x{self.poly:x}"

    @property
    def log_table(self) -> np.ndarray:
        return self._log

    @property
    def antilog_table(self) -> np.ndarray:
        return self._exp[: self.order - 1]

    @property
    def trace_table(self) -> np.ndarray:
        return self._trace

    @property
    def inv_table(self) -> np.ndarray:
        return self._inv

    def elements(self) -> np.ndarray:
        return np.arange(self.order, dtype=np.int64)

    # -- elementwise arithmetic ------------------------------------------

    def _check(self, x):
        a = np.asarray(x, dtype=np.int64)
        if a.size and (a.min() < 0 or a.max() >= self.order):
            raise FieldError(f"element out of range for GF(2^{self.n})")
        return a

    @staticmethod
    def _ret(r: np.ndarray, *inputs):
        if all(np.ndim(i) == 0 for i in inputs):
            return int(r)
        return r

    def _scalar(self, x) -> bool:
        if type(x) is int:
            if not 0 <= x < self.order:
                raise FieldError(f"element out of range for GF(2^{self.n})")
            return True
        return False

    def mul(self, x, y):
        """Field product; broadcasts over arrays."""
        if self._scalar(x) and self._scalar(y):
            if x == 0 or y == 0:
                return 0
            return self._exp_l[self._log_l[x] + self._log_l[y]]
        a, b = self._check(x), self._check(y)
        r = self._exp[self._log[a] + self._log[b]]
        r = np.where((a == 0) | (b == 0), 0, r)
        return self._ret(r, x, y)

    def inv(self, x):
        """x^(2^n - 2); maps 0 to 0."""
        if self._scalar(x):
            return self._inv_l[x]
        a = self._check(x)
        return self._ret(self._inv[a], x)

    def div(self, x, y):
        """x * inv(y); division by zero yields 0 (the x^(2^n-2) convention)."""
        return self.mul(x, self.inv(y))

    def pow(self, x, e: int):
        a = self._check(x)
        q1 = self.order - 1
        if e == 0:
            return self._ret(np.ones_like(a), x)
        if e < 0:
            raise FieldError("negative exponent; use inv()")
        r = self._exp[(self._log[a] * (e % q1)) % q1]
        r = np.where(a == 0, 0, r)
        return self._ret(r, x)

    def square(self, x):
        return self.mul(x, x)

    def trace(self, x):
        """Absolute trace to GF(2), returned as 0 or 1."""
        if self._scalar(x):
            return self._trace_l[x]
        a = self._check(x)
        return self._ret(self._trace[a], x)

    def sqrt(self, x):
        """Unique square root, x^(2^(n-1))."""
        a = self._check(x)
        r = a
        for _ in range(self.n - 1):
            r = self.mul(r, r)
        return self._ret(np.asarray(r), x)

    # -- equations ---------------------------------------------------------

    def _artin_schreier(self, t: int) -> int:
        """A root z of z^2 + z = t, assuming trace(t) = 0."""
        # z = sum_{i=1}^{n-1} (t + t^2 + ... + t^(2^(i-1))) * delta^(2^i), trace(delta) = 1
        delta = self._trace_one_elem
        z = 0
        partial = 0
        tp = t
        dp = delta
        for _ in range(1, self.n):
            partial ^= tp
            tp = self.mul(tp, tp)
            dp = self.mul(dp, dp)
            z ^= self.mul(partial, dp)
        return z

    def solve_quadratic(self, a: int, b: int, c: int) -> set[int]:
        """All roots of a*x^2 + b*x + c in the field.

        One root when b = 0, two when trace(ac/b^2) = 0, none otherwise.
        """
        a, b, c = int(a), int(b), int(c)
        if a == 0:
            raise FieldError("leading coefficient must be nonzero")
        if b == 0:
            roots = {self.sqrt(self.div(c, a))}
        else:
            t = self.div(self.mul(a, c), self.mul(b, b))
            if self.trace(t):
                roots = set()
            else:
                z = self._artin_schreier(t)
                s = self.div(b, a)
                roots = {self.mul(s, z), self.mul(s, z ^ 1)}
        for r in roots:
            assert self.mul(a, self.mul(r, r)) ^ self.mul(b, r) ^ c == 0
        return roots

    def cube_class_equal(self, a, d):
        """True where a^3 == d^3; both operands must be nonzero."""
        x, y = self._check(a), self._check(d)
        if np.any(x == 0) or np.any(y == 0):
            raise FieldError("cube_class_equal requires nonzero operands")
        r = (3 * (self._log[x] - self._log[y])) % (self.order - 1) == 0
        return bool(r) if np.ndim(r) == 0 else r

    def kloosterman_k1(self) -> int:
        """K(1) by direct summation of (-1)^trace(1/x + x); the x = 0 term is +1."""
        x = self.elements()
        t = self._trace[self._inv[x] ^ x]
        return int(self.order - 2 * int(t.sum()))


def kloosterman_k1_direct(field: Field) -> int:
    return field.kloosterman_k1()


def kloosterman_k1_carlitz(n: int) -> int:
    """K(1) over GF(2^n) from Carlitz's binomial formula, in exact integers."""
    if n < 1:
        raise FieldError("n must be positive")
    s = sum((-1) ** i * comb(n, 2 * i) * 7**i for i in range(n // 2 + 1))
    den = 1 << (n - 1)
    q, r = divmod(s, den)
    assert r == 0, f"Carlitz sum {s} not divisible by {den}"
    return 1 + (-1) ** (n - 1) * q
