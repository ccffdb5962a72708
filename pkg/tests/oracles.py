"""Slow, independent reference computations in plain Python.

Nothing here touches the package's lookup tables or vectorized code; field
arithmetic is schoolbook polynomial multiplication and every count is a
literal loop over the defining set.
"""

from __future__ import annotations

from itertools import product


def poly_mulmod(x: int, y: int, poly: int) -> int:
    n = poly.bit_length() - 1
    r = 0
    for i in range(y.bit_length()):
        if (y >> i) & 1:
            r ^= x << i
    for i in range(r.bit_length() - 1, n - 1, -1):
        if (r >> i) & 1:
            r ^= poly << (i - n)
    return r


def inverse_by_search(x: int, poly: int) -> int:
    if x == 0:
        return 0
    n = poly.bit_length() - 1
    for e in range(1, 1 << n):
        if poly_mulmod(x, e, poly) == 1:
            return e
    raise AssertionError("no inverse")


def trace_by_powers(x: int, poly: int) -> int:
    n = poly.bit_length() - 1
    acc, t = 0, x
    for _ in range(n):
        acc ^= t
        t = poly_mulmod(t, t, poly)
    assert acc in (0, 1)
    return acc


def roots_by_scan(a: int, b: int, c: int, poly: int) -> set[int]:
    n = poly.bit_length() - 1
    return {
        x for x in range(1 << n)
        if poly_mulmod(a, poly_mulmod(x, x, poly), poly) ^ poly_mulmod(b, x, poly) ^ c == 0
    }


def has_factor(p: int) -> bool:
    """Any factor of degree 1..deg/2, found by multiplying out candidate pairs."""
    n = p.bit_length() - 1
    for da in range(1, n // 2 + 1):
        for f in range(1 << da, 1 << (da + 1)):
            for g in range(1 << (n - da), 1 << (n - da + 1)):
                prod = 0
                for i in range(g.bit_length()):
                    if (g >> i) & 1:
                        prod ^= f << i
                if prod == p:
                    return True
    return False


def kloosterman_sum(poly: int) -> int:
    n = poly.bit_length() - 1
    total = 0
    for x in range(1 << n):
        t = trace_by_powers(inverse_by_search(x, poly) ^ x, poly)
        total += -1 if t else 1
    return total


def inverse_lut(poly: int) -> list[int]:
    n = poly.bit_length() - 1
    return [inverse_by_search(x, poly) for x in range(1 << n)]


def ddt(lut: list[int]) -> list[list[int]]:
    q = len(lut)
    t = [[0] * q for _ in range(q)]
    for a in range(q):
        for x in range(q):
            t[a][lut[x] ^ lut[x ^ a]] += 1
    return t


def ubct(lut: list[int]) -> dict:
    """UBCT from the definition with the compositional inverse; returns {(a,b,c): count}."""
    q = len(lut)
    inv = [0] * q
    for x, y in enumerate(lut):
        inv[y] = x
    out = {}
    for a, c in product(range(q), repeat=2):
        for x in range(q):
            if inv[lut[x] ^ c] ^ inv[lut[x ^ a] ^ c] == a:
                b = lut[x] ^ lut[x ^ a]
                out[a, b, c] = out.get((a, b, c), 0) + 1
    return out


def lbct(lut: list[int]) -> dict:
    """LBCT from the definition with the compositional inverse; returns {(b,c,d): count}."""
    q = len(lut)
    inv = [0] * q
    for x, y in enumerate(lut):
        inv[y] = x
    out = {}
    for b, c in product(range(q), repeat=2):
        for x in range(q):
            d = lut[x] ^ lut[x ^ c]
            if inv[lut[x] ^ d] ^ inv[lut[x ^ b] ^ d] == b:
                out[b, c, d] = out.get((b, c, d), 0) + 1
    return out


def dbct(lut: list[int]) -> list[list[int]]:
    q = len(lut)
    u, l = ubct(lut), lbct(lut)
    t = [[0] * q for _ in range(q)]
    for (a, b, c), uv in u.items():
        for d in range(q):
            lv = l.get((b, c, d), 0)
            if lv:
                t[a][d] += uv * lv
    return t


def ubct_pairs(lut: list[int]) -> dict:
    """#{(x, y) : F(x)+F(x+a) = F(y)+F(y+a) = b, F(x)+F(y) = c}; no inverse needed."""
    q = len(lut)
    out = {}
    for a in range(q):
        for x in range(q):
            b = lut[x] ^ lut[x ^ a]
            for y in range(q):
                if lut[y] ^ lut[y ^ a] == b:
                    key = (a, b, lut[x] ^ lut[y])
                    out[key] = out.get(key, 0) + 1
    return out


def lbct_pairs(lut: list[int]) -> dict:
    """#{x : F(x)+F(x+c) = d and F(x+b)+F(x+b+c) = d}; no inverse needed."""
    q = len(lut)
    out = {}
    for b, c in product(range(q), repeat=2):
        for x in range(q):
            d = lut[x] ^ lut[x ^ c]
            if lut[x ^ b] ^ lut[x ^ b ^ c] == d:
                out[b, c, d] = out.get((b, c, d), 0) + 1
    return out
