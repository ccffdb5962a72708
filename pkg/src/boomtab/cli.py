"""Command line: ``boomtab table|verify|spectrum``.

Exit codes: 0 success, 1 verification mismatch, 2 usage or input error.
Timing goes to stdout only; written files carry no volatile data.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Optional, Sequence

from . import closedform as cf
from . import tables as tb
from ._version import __version__
from .field import Field, FieldError, kloosterman_k1_carlitz
from .sbox import SBox, SBoxError, identity_sbox, inverse_sbox, load_sbox
from .verify import Verifier, parse_checks

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _poly(text: str) -> int:
    try:
        return int(text, 16)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a hex bitmask: {text!r}")


def _common(p: argparse.ArgumentParser, sbox: bool = True) -> None:
    p.add_argument("--n", type=int, required=True, help="field degree, 1..16")
    p.add_argument("--poly", type=_poly, default=None, help="reduction polynomial as hex, e.g. 0x13")
    if sbox:
        p.add_argument("--sbox", default="inverse", help="'inverse', 'identity' or a lookup-table file")
    p.add_argument("--workers", type=int, default=None, help="worker threads (default: all cores)")
    p.add_argument("--cap", type=int, default=tb.DBCT_CAP, help="brute-force DBCT size cap")
    p.add_argument("--force", action="store_true", help="allow brute force above the cap")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="boomtab", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", help="compute a DDT, BCT, UBCT/LBCT slice or DBCT")
    _common(t)
    t.add_argument("--kind", choices=tb.KINDS_2D + tb.KINDS_SLICE, required=True)
    t.add_argument("--index", type=int, default=None, help="a for ubct-slice, d for lbct-slice")
    t.add_argument("--format", choices=("csv", "json"), default="csv")
    t.add_argument("--output", "-o", default=None, help="output path")

    v = sub.add_parser("verify", help="check the closed forms against brute force")
    _common(v, sbox=False)
    v.add_argument("--checks", default="all", help="comma-separated check names or 'all'")
    v.add_argument("--report", default=None, help="write a JSON report here")

    s = sub.add_parser("spectrum", help="DBCT spectrum as JSON")
    _common(s)
    s.add_argument("--mode", choices=("closed-form", "brute-force"), default="closed-form")
    s.add_argument("--exclude-boundary", action="store_true")
    s.add_argument("--output", "-o", default=None, help="output path")
    return parser


def _field(args) -> Field:
    try:
        return Field(args.n, args.poly)
    except FieldError as exc:
        raise UsageError(str(exc))


def _sbox(args, f: Field) -> SBox:
    if args.sbox == "inverse":
        return inverse_sbox(f)
    if args.sbox == "identity":
        return identity_sbox(f)
    try:
        return load_sbox(args.sbox, n=f.n, poly=args.poly)
    except (OSError, SBoxError, FieldError) as exc:
        raise UsageError(str(exc))


def _write(path: Optional[str], default: str, text: str) -> Path:
    out = Path(path or default)
    out.write_text(text)
    return out


def cmd_table(args) -> int:
    f = _field(args)
    s = _sbox(args, f)
    f = s.field
    t0 = time.perf_counter()
    try:
        if args.kind in tb.KINDS_SLICE:
            if args.index is None or not 0 <= args.index < f.order:
                raise UsageError(f"--index in [0, {f.order}) is required for {args.kind}")
            fn = tb.ubct_slice if args.kind == "ubct-slice" else tb.lbct_slice
            table = fn(s, args.index)
            stat = None
        else:
            if args.kind == "ddt":
                table = tb.ddt(s, workers=args.workers)
            elif args.kind == "bct":
                table = tb.bct(s, workers=args.workers)
            else:
                table = tb.dbct(s, cap=args.cap, force=args.force, workers=args.workers)
            stat = tb.uniformity(table)
    except (tb.CapExceeded, SBoxError, tb.TableError) as exc:
        raise UsageError(str(exc))
    elapsed = time.perf_counter() - t0

    text = table.to_json() if args.format == "json" else table.to_csv()
    default = f"{s.name}-{args.kind}-n{f.n}.{args.format}"
    out = _write(args.output, default, text)
    print(f"n={f.n} poly={f.poly_hex} kind={args.kind} sbox={s.name}")
    if stat is not None:
        label = {"ddt": "differential uniformity", "bct": "boomerang uniformity",
                 "dbct": "double boomerang uniformity"}[args.kind]
        print(f"{label}: {stat}")
    print(f"wrote {out} in {elapsed:.3f}s")
    return EXIT_OK


def cmd_verify(args) -> int:
    f = _field(args)
    try:
        names = parse_checks(args.checks)
    except ValueError as exc:
        raise UsageError(str(exc))
    ver = Verifier(f, workers=args.workers, cap=args.cap, force=args.force)
    print(f"verify n={f.n} poly={f.poly_hex}")
    results = []
    for name in names:
        t0 = time.perf_counter()
        r = ver.run(name)
        results.append(r)
        print(f"{r.line()} ({time.perf_counter() - t0:.2f}s)")
    failed = [r for r in results if r.passed is False]
    print(f"{len(results) - len(failed)}/{len(results)} checks without failure")
    if args.report:
        doc = {"meta": {"n": f.n, "poly": f.poly_hex, "version": __version__},
               "checks": [r.to_dict() for r in results]}
        Path(args.report).write_text(json.dumps(doc, indent=2) + "\n")
    return EXIT_MISMATCH if failed else EXIT_OK


def cmd_spectrum(args) -> int:
    f = _field(args)
    include = not args.exclude_boundary
    t0 = time.perf_counter()
    if args.mode == "closed-form":
        if args.sbox != "inverse":
            raise UsageError("closed-form mode only covers the inverse S-box")
        try:
            spec = cf.dbct_spectrum_inverse(f.n, include_boundary=include)
        except ValueError as exc:
            raise UsageError(str(exc))
        name = "inverse"
    else:
        s = _sbox(args, f)
        f = s.field
        name = s.name
        try:
            table = tb.dbct(s, cap=args.cap, force=args.force, workers=args.workers)
        except tb.CapExceeded as exc:
            raise UsageError(str(exc))
        spec = tb.spectrum(table, include_boundary=include)
    elapsed = time.perf_counter() - t0

    meta = {"n": f.n, "poly": f.poly_hex, "kind": "dbct-spectrum", "sbox": name,
            "include_boundary": include, "version": __version__}
    if name == "inverse":
        meta["k1"] = kloosterman_k1_carlitz(f.n)
    default = f"{name}-dbct-spectrum-n{f.n}.json"
    out = _write(args.output, default, spec.to_json(meta) + "\n")
    print(f"n={f.n} poly={f.poly_hex} mode={args.mode}")
    if "k1" in meta:
        print(f"K(1) = {meta['k1']}")
    for v, c in spec.items:
        print(f"  {v}: {c}")
    print(f"total cells: {spec.total}")
    print(f"wrote {out} in {elapsed:.3f}s")
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = {"table": cmd_table, "verify": cmd_verify, "spectrum": cmd_spectrum}[args.command]
    try:
        return handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
