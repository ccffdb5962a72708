"""S-boxes over GF(2^n) stored as dense lookup tables."""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from pathlib import Path
from typing import Sequence, Union

import numpy as np

from .field import Field


class SBoxError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class SBox:
    """A mapping GF(2^n) -> GF(2^n) given by ``lut[x] = F(x)``."""

    field: Field
    lut: np.ndarray = dc_field(repr=False)
    name: str = "custom"

    def __post_init__(self):
        lut = np.array(self.lut, dtype=np.int64).reshape(-1)
        if lut.shape[0] != self.field.order:
            raise SBoxError(
                f"lookup table has {lut.shape[0]} entries, expected {self.field.order}"
            )
        if lut.size and (lut.min() < 0 or lut.max() >= self.field.order):
            raise SBoxError("lookup table entry out of range")
        lut.setflags(write=False)
        object.__setattr__(self, "lut", lut)

    @property
    def n(self) -> int:
        return self.field.n

    @property
    def size(self) -> int:
        return self.field.order

    def __call__(self, x):
        return self.lut[x]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SBox)
            and self.field == other.field
            and np.array_equal(self.lut, other.lut)
        )

    def __hash__(self) -> int:
        return hash((self.field, self.lut.tobytes()))

    def is_permutation(self) -> bool:
        return np.unique(self.lut).size == self.size

    def compose(self, other: "SBox") -> "SBox":
        """The mapping x -> self(other(x))."""
        return SBox(self.field, self.lut[other.lut], name=f"{self.name}*{other.name}")

    def compositional_inverse(self) -> "SBox":
        if not self.is_permutation():
            raise SBoxError("S-box is not a permutation")
        inv = np.empty_like(self.lut)
        inv[self.lut] = np.arange(self.size)
        return SBox(self.field, inv, name=f"{self.name}^-1")

    # -- serialization -----------------------------------------------------

    def to_json(self) -> str:
        meta = {"n": self.n, "poly": self.field.poly_hex}
        return json.dumps({"meta": meta, "lut": self.lut.tolist()})

    def to_text(self) -> str:
        head = f"# n={self.n} poly={self.field.poly_hex}\n"
        return head + " ".join(str(v) for v in self.lut.tolist()) + "\n"


def sbox_from_lut(f: Field, lut: Sequence[int], name: str = "custom") -> SBox:
    return SBox(f, np.asarray(lut), name=name)


def inverse_sbox(f: Field) -> SBox:
    """The field inversion x -> x^(2^n - 2), with 0 -> 0."""
    return SBox(f, f.inv_table.copy(), name="inverse")


def identity_sbox(f: Field) -> SBox:
    return SBox(f, f.elements(), name="identity")


def power_sbox(f: Field, e: int) -> SBox:
    return SBox(f, np.asarray(f.pow(f.elements(), e)), name=f"x^{e}")


def is_permutation(s: SBox) -> bool:
    return s.is_permutation()


def compositional_inverse(s: SBox) -> SBox:
    return s.compositional_inverse()


def _parse_poly(v) -> int:
    return int(v, 16) if isinstance(v, str) else int(v)


def load_sbox(path: Union[str, Path], n: int | None = None, poly: int | None = None) -> SBox:
    """Read an S-box from JSON or whitespace-separated decimal text.

    JSON may be a bare array or ``{"meta": {"n", "poly"}, "lut": [...]}``.
    Text may start with a ``# n=<n> poly=0x<hex>`` line.  Explicit ``n``/``poly``
    arguments must agree with any metadata present in the file.
    """
    raw = Path(path).read_text()
    meta: dict = {}
    stripped = raw.lstrip()
    try:
        if stripped.startswith("[") or stripped.startswith("{"):
            doc = json.loads(raw)
            if isinstance(doc, dict):
                meta = dict(doc.get("meta", {}))
                values = doc["lut"]
            else:
                values = doc
        else:
            values = []
            for line in raw.splitlines():
                line = line.strip()
                if line.startswith("#"):
                    for tok in line[1:].split():
                        if "=" in tok:
                            k, v = tok.split("=", 1)
                            meta[k] = v
                    continue
                values.extend(int(t) for t in line.split())
    except (ValueError, KeyError, TypeError) as exc:
        raise SBoxError(f"cannot parse S-box file {path}: {exc}") from exc

    if "n" in meta:
        mn = int(meta["n"])
        if n is not None and n != mn:
            raise SBoxError(f"file declares n={mn}, requested n={n}")
        n = mn
    if "poly" in meta:
        mp = _parse_poly(meta["poly"])
        if poly is not None and poly != mp:
            raise SBoxError(f"file declares poly={mp:#x}, requested {poly:#x}")
        poly = mp
    if n is None:
        size = len(values)
        n = size.bit_length() - 1
        if size < 2 or 1 << n != size:
            raise SBoxError(f"lookup table length {size} is not a power of two")
    return SBox(Field(n, poly), np.asarray(values), name=Path(path).stem)
