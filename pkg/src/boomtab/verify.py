"""Closed form vs. brute force, one named check at a time.

Each check returns a :class:`CheckResult`; on a mismatch it records the first
offending cell in row-major order.  Expensive brute-force tables are built
once per :class:`Verifier` and shared between checks.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Optional

import numpy as np

from . import closedform as cf
from . import tables as tb
from .field import Field, kloosterman_k1_carlitz, kloosterman_k1_direct
from .sbox import inverse_sbox

CHECKS = (
    "kloosterman",
    "ddt",
    "ubct",
    "lbct",
    "definitional",
    "dbct",
    "spectrum",
    "hardness",
    "uniformity",
    "properties",
)


@dataclass
class CheckResult:
    name: str
    passed: Optional[bool]  # None means skipped
    detail: str = ""
    mismatch: Optional[dict] = dc_field(default=None)

    @property
    def status(self) -> str:
        return {True: "PASS", False: "FAIL", None: "SKIP"}[self.passed]

    def line(self) -> str:
        s = f"[{self.status}] {self.name}: {self.detail}"
        if self.mismatch:
            s += f" first mismatch {self.mismatch}"
        return s

    def to_dict(self) -> dict:
        return {"name": self.name, "status": self.status, "detail": self.detail, "mismatch": self.mismatch}


def first_mismatch(got: np.ndarray, want: np.ndarray, names: tuple[str, ...]) -> Optional[dict]:
    bad = np.argwhere(got != want)
    if bad.size == 0:
        return None
    idx = tuple(int(i) for i in bad[0])
    out = dict(zip(names, idx))
    out["brute"] = int(got[idx])
    out["closed"] = int(want[idx])
    return out


class Verifier:
    def __init__(self, f: Field, workers: Optional[int] = None, cap: int = tb.DBCT_CAP, force: bool = False):
        self.field = f
        self.sbox = inverse_sbox(f)
        self.workers = workers
        self.cap = cap
        self.force = force
        self.elems = f.elements()

    @cached_property
    def ddt(self) -> tb.Table2D:
        return tb.ddt(self.sbox, workers=self.workers)

    @cached_property
    def bct(self) -> tb.Table2D:
        return tb.bct(self.sbox, workers=self.workers)

    @cached_property
    def ubct(self) -> np.ndarray:
        return tb.ubct_cube(self.sbox, workers=self.workers)

    @cached_property
    def lbct(self) -> np.ndarray:
        return tb.lbct_cube(self.sbox, workers=self.workers)

    @cached_property
    def dbct_parts(self) -> tuple[tb.Table2D, np.ndarray]:
        return tb.dbct_parts(self.sbox, cap=self.cap, force=self.force, workers=self.workers)

    def _dbct_allowed(self) -> bool:
        return self.field.n <= self.cap or self.force

    def run(self, name: str) -> CheckResult:
        if name not in CHECKS:
            raise ValueError(f"unknown check {name!r}")
        return getattr(self, f"check_{name}")()

    def run_all(self, names=CHECKS) -> list[CheckResult]:
        return [self.run(n) for n in names]

    # -- checks ------------------------------------------------------------

    def check_kloosterman(self) -> CheckResult:
        direct = kloosterman_k1_direct(self.field)
        carlitz = kloosterman_k1_carlitz(self.field.n)
        return CheckResult(
            "kloosterman", direct == carlitz, f"K(1) direct={direct} carlitz={carlitz}"
        )

    def check_ddt(self) -> CheckResult:
        E = self.elems
        want = cf.ddt_inverse(self.field, E[:, None], E[None, :])
        mm = first_mismatch(self.ddt.counts, want, ("a", "b"))
        return CheckResult("ddt", mm is None, f"{E.size ** 2} cells", mm)

    def _cube_check(self, name: str, got: np.ndarray, fn, names) -> CheckResult:
        E = self.elems
        want = fn(self.field, E[:, None, None], E[None, :, None], E[None, None, :])
        mm = first_mismatch(got, want, names)
        return CheckResult(name, mm is None, f"{E.size ** 3} cells", mm)

    def check_ubct(self) -> CheckResult:
        if not self._dbct_allowed():
            return CheckResult("ubct", None, f"n above cap {self.cap}")
        return self._cube_check("ubct", self.ubct, cf.ubct_inverse, ("a", "b", "c"))

    def check_lbct(self) -> CheckResult:
        if not self._dbct_allowed():
            return CheckResult("lbct", None, f"n above cap {self.cap}")
        return self._cube_check("lbct", self.lbct, cf.lbct_inverse, ("b", "c", "d"))

    def check_definitional(self) -> CheckResult:
        if not self._dbct_allowed():
            return CheckResult("definitional", None, f"n above cap {self.cap}")
        s = self.sbox
        for i in range(s.size):
            u_sys = tb.ubct_slice(s, i).grid
            u_def = tb.ubct_slice_definitional(s, i).grid
            if not np.array_equal(u_sys, u_def):
                mm = first_mismatch(u_sys, u_def, ("b", "c"))
                mm["a"] = i
                return CheckResult("definitional", False, "UBCT system vs definition", mm)
            l_sys = tb.lbct_slice(s, i).grid
            l_def = tb.lbct_slice_definitional(s, i).grid
            if not np.array_equal(l_sys, l_def):
                mm = first_mismatch(l_sys, l_def, ("b", "c"))
                mm["d"] = i
                return CheckResult("definitional", False, "LBCT system vs definition", mm)
        return CheckResult("definitional", True, f"{2 * s.size} slices")

    def check_dbct(self) -> CheckResult:
        if not self._dbct_allowed():
            return CheckResult("dbct", None, f"n above cap {self.cap}")
        E = self.elems
        got = self.dbct_parts[0].counts
        want = cf.dbct_inverse(self.field, E[:, None], E[None, :])
        mm = first_mismatch(got, want, ("a", "d"))
        note = "" if cf.in_theorem_range(self.field.n) else " (out of theorem range, brute-force fallback)"
        return CheckResult("dbct", mm is None, f"{E.size ** 2} cells{note}", mm)

    def check_spectrum(self) -> CheckResult:
        n = self.field.n
        if not cf.in_theorem_range(n):
            return CheckResult("spectrum", None, "out of theorem range")
        if not self._dbct_allowed():
            return CheckResult("spectrum", None, f"n above cap {self.cap}")
        got = tb.spectrum(self.dbct_parts[0])
        want = cf.dbct_spectrum_inverse(n)
        ok = got == want
        detail = f"brute={got.as_dict()}"
        if not ok:
            detail += f" closed={want.as_dict()}"
        return CheckResult("spectrum", ok, detail)

    def check_hardness(self) -> CheckResult:
        if not self._dbct_allowed():
            return CheckResult("hardness", None, f"n above cap {self.cap}")
        full, same = self.dbct_parts
        hard = bool(np.array_equal(full.counts[1:, 1:], same[1:, 1:]))
        conv = tb.ddt_convolution(self.ddt)
        conv_eq = bool(np.array_equal(full.counts[1:, 1:], conv[1:, 1:]))
        expect = cf.is_hard_inverse(self.field.n)
        ok = hard == expect and conv_eq == expect
        return CheckResult(
            "hardness", ok, f"is_hard={hard} ddt-convolution-equality={conv_eq} expected={expect}"
        )

    def check_uniformity(self) -> CheckResult:
        n = self.field.n
        delta = tb.differential_uniformity(self.ddt)
        want_delta = 2 if n % 2 else 4
        parts = [f"delta={delta} (expected {want_delta})"]
        ok = delta == want_delta
        if cf.in_theorem_range(n) and self._dbct_allowed():
            beta_d = tb.double_boomerang_uniformity(self.dbct_parts[0])
            want = cf.beta_d_inverse(n)
            parts.append(f"beta_d={beta_d} (expected {want})")
            ok = ok and beta_d == want
        return CheckResult("uniformity", ok, ", ".join(parts))

    def check_properties(self) -> CheckResult:
        q = self.field.order
        D = self.ddt.counts
        fails = []
        if not np.all(D.sum(axis=1) == q):
            fails.append("DDT row sums")
        if np.any(D % 2):
            fails.append("DDT parity")
        if self._dbct_allowed():
            U, L, B = self.ubct, self.lbct, self.bct.counts
            if not np.array_equal(U.sum(axis=1), B):
                fails.append("sum_b UBCT != BCT")
            if not np.array_equal(L.sum(axis=1), B):
                fails.append("sum_c LBCT != BCT")
            if np.any(U > D[:, :, None]):
                fails.append("UBCT > DDT")
            if np.any(L > D[None, :, :]):
                fails.append("LBCT > DDT")
            full = self.dbct_parts[0].counts
            if not (np.all(full[0, :] == q * q) and np.all(full[:, 0] == q * q)):
                fails.append("DBCT boundary")
            conv = tb.ddt_convolution(self.ddt)
            if np.any(full[1:, 1:] < conv[1:, 1:]):
                fails.append("DBCT >= DDT convolution")
        return CheckResult("properties", not fails, "; ".join(fails) or "all hold")


def parse_checks(spec: str) -> tuple[str, ...]:
    if spec == "all":
        return CHECKS
    names = tuple(s.strip() for s in spec.split(",") if s.strip())
    bad = [n for n in names if n not in CHECKS]
    if bad:
        raise ValueError(f"unknown checks: {', '.join(bad)}; choose from {', '.join(CHECKS)}")
    return names
