"""Brute-force DDT, BCT, UBCT, LBCT and DBCT of arbitrary S-boxes.

These builders count solutions directly and make no use of any closed form,
so they serve as the reference the closed forms are checked against.

UBCT and LBCT are 2^n x 2^n x 2^n tables.  They are exposed one slice at a
time (fixed ``a`` for UBCT, fixed ``d`` for LBCT); a slice is a 2^n x 2^n
grid indexed ``grid[b][c]``.  Both are computed from the inverse-free
equation systems, so non-permutations are accepted.  The definitional
variants that go through the compositional inverse are kept alongside for
cross-checking.

Row-parallel builders split the outer index into contiguous chunks.  Counts
are exact integers, so the merged result does not depend on the split.
"""

from __future__ import annotations

import json
import os
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from ._version import __version__
from .field import Field
from .sbox import SBox, SBoxError

DBCT_CAP = 8

KINDS_2D = ("ddt", "bct", "dbct")
KINDS_SLICE = ("ubct-slice", "lbct-slice")


class TableError(ValueError):
    pass


class CapExceeded(TableError):
    """Brute-force DBCT requested above the size cap without ``force``."""


def _header(f: Field, kind: str, extra: str = "") -> str:
    return f"# n={f.n} poly={f.poly_hex} kind={kind}{extra}"


def _csv_rows(grid: np.ndarray) -> list[str]:
    return [",".join(str(int(v)) for v in row) for row in grid]


@dataclass(frozen=True, eq=False)
class Table2D:
    """A 2^n x 2^n table of counts; ``counts[row][col]``."""

    kind: str
    field: Field
    counts: np.ndarray

    @property
    def n(self) -> int:
        return self.field.n

    def __getitem__(self, idx):
        return self.counts[idx]

    def meta(self) -> dict:
        return {"n": self.n, "poly": self.field.poly_hex, "kind": self.kind, "version": __version__}

    def to_csv(self) -> str:
        return "\n".join([_header(self.field, self.kind)] + _csv_rows(self.counts)) + "\n"

    def to_json(self) -> str:
        return json.dumps({"meta": self.meta(), "data": self.counts.tolist()})


@dataclass(frozen=True, eq=False)
class Table3DSlice:
    """One plane of UBCT (fixed ``a``) or LBCT (fixed ``d``); ``grid[b][c]``."""

    kind: str
    field: Field
    index: int
    grid: np.ndarray

    @property
    def index_name(self) -> str:
        return "a" if self.kind == "ubct-slice" else "d"

    def meta(self) -> dict:
        return {
            "n": self.field.n,
            "poly": self.field.poly_hex,
            "kind": self.kind,
            self.index_name: self.index,
            "version": __version__,
        }

    def to_csv(self) -> str:
        head = _header(self.field, self.kind, f" {self.index_name}={self.index}")
        return "\n".join([head] + _csv_rows(self.grid)) + "\n"

    def to_json(self) -> str:
        return json.dumps({"meta": self.meta(), "data": self.grid.tolist()})


@dataclass(frozen=True)
class Spectrum:
    """Entry value -> number of cells, sorted by descending value."""

    items: tuple[tuple[int, int], ...]
    include_boundary: bool = True

    @classmethod
    def from_counter(cls, counter, include_boundary: bool = True) -> "Spectrum":
        items = tuple(
            sorted(((int(v), int(c)) for v, c in counter.items() if c), reverse=True)
        )
        return cls(items, include_boundary)

    def as_dict(self) -> dict[int, int]:
        return dict(self.items)

    @property
    def total(self) -> int:
        return sum(c for _, c in self.items)

    def to_list(self) -> list[dict]:
        return [{"value": v, "count": c} for v, c in self.items]

    def to_json(self, meta: Optional[dict] = None) -> str:
        return json.dumps({"meta": meta or {}, "spectrum": self.to_list()})


def resolve_workers(workers: Optional[int]) -> int:
    if workers is None:
        return os.cpu_count() or 1
    if workers < 1:
        raise TableError("workers must be >= 1")
    return workers


def _chunks(q: int, workers: int) -> list[range]:
    k = min(workers, q)
    bounds = [q * i // k for i in range(k + 1)]
    return [range(bounds[i], bounds[i + 1]) for i in range(k)]


def _build_rows(q: int, row_fn: Callable[[range], np.ndarray], workers: Optional[int]) -> np.ndarray:
    """Evaluate ``row_fn`` on a contiguous partition of range(q) and stack in order."""
    parts = _chunks(q, resolve_workers(workers))
    if len(parts) == 1:
        return row_fn(parts[0])
    with ThreadPoolExecutor(max_workers=len(parts)) as pool:
        blocks = list(pool.map(row_fn, parts))
    return np.concatenate(blocks, axis=0)


# -- DDT / BCT ---------------------------------------------------------------


def ddt(s: SBox, workers: Optional[int] = None) -> Table2D:
    """counts[a][b] = #{x : F(x) ^ F(x ^ a) = b}."""
    F, q = s.lut, s.size
    x = np.arange(q)

    def rows(r: range) -> np.ndarray:
        a = np.arange(r.start, r.stop)[:, None]
        out = F[None, :] ^ F[x[None, :] ^ a]
        flat = (np.arange(len(r))[:, None] * q + out).ravel()
        return np.bincount(flat, minlength=len(r) * q).reshape(len(r), q)

    return Table2D("ddt", s.field, _build_rows(q, rows, workers))


def bct(s: SBox, workers: Optional[int] = None) -> Table2D:
    """counts[a][b] = #{x : G(F(x)+b) + G(F(x+a)+b) = a} with G = F^-1."""
    if not s.is_permutation():
        raise SBoxError("BCT requires a permutation")
    F, q = s.lut, s.size
    G = s.compositional_inverse().lut
    x = np.arange(q)
    bs = np.arange(q)[None, :]

    def rows(r: range) -> np.ndarray:
        out = np.empty((len(r), q), dtype=np.int64)
        for i, a in enumerate(r):
            lhs = G[F[:, None] ^ bs] ^ G[F[x ^ a][:, None] ^ bs]
            out[i] = (lhs == a).sum(axis=0)
        return out

    return Table2D("bct", s.field, _build_rows(q, rows, workers))


# -- UBCT / LBCT slices --------------------------------------------------------


def _ubct_grid(F: np.ndarray, a: int) -> np.ndarray:
    # pairs (x, y) with F(x)+F(x+a) = F(y)+F(y+a) = b; c = F(x)+F(y)
    q = F.shape[0]
    x = np.arange(q)
    delta = F ^ F[x ^ a]
    xs, ys = np.nonzero(delta[:, None] == delta[None, :])
    idx = delta[xs] * q + (F[xs] ^ F[ys])
    return np.bincount(idx, minlength=q * q).reshape(q, q)


def _fwht(v: np.ndarray) -> np.ndarray:
    """Unnormalized Walsh-Hadamard transform along the last axis."""
    shape = v.shape
    q = shape[-1]
    v = v.reshape(-1, q)
    h = 1
    while h < q:
        v = v.reshape(v.shape[0], q // (2 * h), 2, h)
        lo, hi = v[:, :, 0, :], v[:, :, 1, :]
        v = np.stack((lo + hi, lo - hi), axis=2).reshape(-1, q)
        h *= 2
    return v.reshape(shape)


def _lbct_grid(F: np.ndarray, d: int) -> np.ndarray:
    # X_c = {x : F(x)+F(x+c) = d};  LBCT(b, c, d) = #{x in X_c : x+b in X_c}
    q = F.shape[0]
    x = np.arange(q)
    member = (F[None, :] ^ F[x[None, :] ^ x[:, None]] == d).astype(np.int64)  # [c, x]
    w = _fwht(member)
    auto = _fwht(w * w) // q  # [c, b]
    return np.ascontiguousarray(auto.T)


def ubct_slice(s: SBox, a: int) -> Table3DSlice:
    """UBCT(a, b, c) for all (b, c), via the inverse-free system
    F(x)+F(y)=c, F(x+a)+F(y+a)=c, F(x+a)+F(x)=b, counted over pairs (x, y)."""
    a = int(a)
    if not 0 <= a < s.size:
        raise TableError("index out of range")
    return Table3DSlice("ubct-slice", s.field, a, _ubct_grid(s.lut, a))


def lbct_slice(s: SBox, d: int) -> Table3DSlice:
    """LBCT(b, c, d) for all (b, c), via the inverse-free system
    F(x)+F(y)=d, F(x+b)+F(y+b)=d, y=x+c."""
    d = int(d)
    if not 0 <= d < s.size:
        raise TableError("index out of range")
    return Table3DSlice("lbct-slice", s.field, d, _lbct_grid(s.lut, d))


def ubct_slice_definitional(s: SBox, a: int) -> Table3DSlice:
    """UBCT slice counted from the definition, using the compositional inverse."""
    G = s.compositional_inverse().lut
    F, q = s.lut, s.size
    x = np.arange(q)
    cs = np.arange(q)[None, :]
    Fx, Fxa = F[:, None], F[x ^ a][:, None]
    ok = (G[Fx ^ cs] ^ G[Fxa ^ cs]) == a  # [x, c]
    b = (F ^ F[x ^ a])[:, None]
    idx = (b * q + cs)[ok]
    grid = np.bincount(idx, minlength=q * q).reshape(q, q)
    return Table3DSlice("ubct-slice", s.field, int(a), grid)


def lbct_slice_definitional(s: SBox, d: int) -> Table3DSlice:
    """LBCT slice counted from the definition, using the compositional inverse."""
    G = s.compositional_inverse().lut
    F, q = s.lut, s.size
    x = np.arange(q)
    e = x[None, :]
    switch = ((G[F[:, None] ^ d] ^ G[F[x[:, None] ^ e] ^ d]) == e).astype(np.int64)  # [x, b]
    diff = ((F[:, None] ^ F[x[:, None] ^ e]) == d).astype(np.int64)  # [x, c]
    return Table3DSlice("lbct-slice", s.field, int(d), switch.T @ diff)


def ubct_cube(s: SBox, workers: Optional[int] = None) -> np.ndarray:
    """Full UBCT as an array indexed [a, b, c]."""
    q = s.size

    def rows(r: range) -> np.ndarray:
        return np.stack([_ubct_grid(s.lut, a) for a in r]).astype(np.int64)

    return _build_rows(q, rows, workers)


def lbct_cube(s: SBox, workers: Optional[int] = None) -> np.ndarray:
    """Full LBCT as an array indexed [b, c, d]."""
    q = s.size

    def rows(r: range) -> np.ndarray:
        return np.stack([_lbct_grid(s.lut, d) for d in r]).astype(np.int64)

    return np.moveaxis(_build_rows(q, rows, workers), 0, 2)


# -- DBCT --------------------------------------------------------------------


def _check_cap(n: int, cap: int, force: bool) -> None:
    if n > cap and not force:
        raise CapExceeded(
            f"n={n} exceeds the brute-force cap of {cap}; pass force=True to override"
        )


def _stacks(s: SBox, workers: Optional[int]) -> tuple[np.ndarray, np.ndarray]:
    # U[a] and L[d] as flattened (b, c) planes
    q = s.size
    dtype = np.int32 if s.n <= 8 else np.int64

    def urows(r: range) -> np.ndarray:
        return np.stack([_ubct_grid(s.lut, a).ravel() for a in r]).astype(dtype)

    def lrows(r: range) -> np.ndarray:
        return np.stack([_lbct_grid(s.lut, d).ravel() for d in r]).astype(dtype)

    return _build_rows(q, urows, workers), _build_rows(q, lrows, workers)


def _gram(U: np.ndarray, L: np.ndarray, cols: Optional[np.ndarray] = None, block: int = 64) -> np.ndarray:
    """Exact integer U @ L.T via float64 blocks (all partial sums < 2^53)."""
    if cols is not None:
        U, L = U[:, cols], L[:, cols]
    q = U.shape[0]
    out = np.empty((q, L.shape[0]), dtype=np.int64)
    for i in range(0, q, block):
        Ub = U[i:i + block].astype(np.float64)
        for j in range(0, L.shape[0], block):
            Lb = L[j:j + block].astype(np.float64)
            out[i:i + block, j:j + block] = np.rint(Ub @ Lb.T).astype(np.int64)
    return out


def dbct(s: SBox, cap: int = DBCT_CAP, force: bool = False, workers: Optional[int] = None) -> Table2D:
    """counts[a][d] = sum over (b, c) of UBCT(a, b, c) * LBCT(b, c, d)."""
    _check_cap(s.n, cap, force)
    U, L = _stacks(s, workers)
    return Table2D("dbct", s.field, _gram(U, L))


def dbct_entry(s: SBox, a: int, d: int) -> int:
    u = ubct_slice(s, a).grid
    l = lbct_slice(s, d).grid
    return int((u * l).sum())


def dbct_parts(
    s: SBox, cap: int = DBCT_CAP, force: bool = False, workers: Optional[int] = None
) -> tuple[Table2D, np.ndarray]:
    """The DBCT together with its b = c contribution, sum_b UBCT(a,b,b) * LBCT(b,b,d)."""
    _check_cap(s.n, cap, force)
    q = s.size
    U, L = _stacks(s, workers)
    diag = np.arange(q) * q + np.arange(q)
    return Table2D("dbct", s.field, _gram(U, L)), _gram(U, L, cols=diag)


def ddt_convolution(t: Table2D) -> np.ndarray:
    """sum_b DDT(a, b) * DDT(b, d) for every (a, d)."""
    _require_kind(t, "ddt")
    return t.counts @ t.counts


def is_hard(s: SBox, cap: int = DBCT_CAP, force: bool = False, workers: Optional[int] = None) -> bool:
    """True iff, for all nonzero a and d, every nonzero UBCT(a,b,c) * LBCT(b,c,d) has b = c."""
    full, same = dbct_parts(s, cap=cap, force=force, workers=workers)
    return bool(np.array_equal(full.counts[1:, 1:], same[1:, 1:]))


# -- statistics --------------------------------------------------------------


def _require_kind(t: Table2D, kind: str) -> None:
    if t.kind != kind:
        raise TableError(f"expected a {kind} table, got {t.kind}")


def differential_uniformity(t: Table2D) -> int:
    """max DDT(a, b) over a != 0."""
    _require_kind(t, "ddt")
    return int(t.counts[1:, :].max()) if t.counts.shape[0] > 1 else 0


def boomerang_uniformity(t: Table2D) -> int:
    """max BCT(a, b) over a, b != 0."""
    _require_kind(t, "bct")
    return int(t.counts[1:, 1:].max()) if t.counts.shape[0] > 1 else 0


def double_boomerang_uniformity(t: Table2D) -> int:
    """max DBCT(a, d) over a, d != 0."""
    _require_kind(t, "dbct")
    return int(t.counts[1:, 1:].max()) if t.counts.shape[0] > 1 else 0


def uniformity(t: Table2D) -> int:
    return {
        "ddt": differential_uniformity,
        "bct": boomerang_uniformity,
        "dbct": double_boomerang_uniformity,
    }[t.kind](t)


def spectrum(t, include_boundary: bool = True) -> Spectrum:
    """Histogram of entry values.  Without the boundary, row 0 and column 0 are dropped."""
    grid = t.counts if isinstance(t, Table2D) else np.asarray(t)
    if not include_boundary:
        grid = grid[1:, 1:]
    values, counts = np.unique(grid, return_counts=True)
    return Spectrum.from_counter(dict(zip(values.tolist(), counts.tolist())), include_boundary)


def merge_spectra(parts, include_boundary: bool = True) -> Spectrum:
    c: Counter = Counter()
    for p in parts:
        for v, k in p.items:
            c[v] += k
    return Spectrum.from_counter(c, include_boundary)
