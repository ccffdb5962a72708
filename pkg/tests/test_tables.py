import json

import numpy as np
import pytest

import oracles
from boomtab import tables as tb
from boomtab.field import Field
from boomtab.sbox import SBoxError, identity_sbox, inverse_sbox, power_sbox, sbox_from_lut


def _cube(d: dict, q: int) -> np.ndarray:
    out = np.zeros((q, q, q), dtype=np.int64)
    for k, v in d.items():
        out[k] = v
    return out


POLYS = [0x7, 0xB, 0x13, 0x19, 0x25]


@pytest.mark.parametrize("poly", POLYS)
def test_ddt_matches_loop(poly):
    f = Field(poly.bit_length() - 1, poly)
    lut = oracles.inverse_lut(poly)
    assert tb.ddt(inverse_sbox(f)).counts.tolist() == oracles.ddt(lut)


def test_ddt_examples(fields):
    f3 = fields(3)
    t = tb.ddt(identity_sbox(f3)).counts
    assert np.array_equal(t, 8 * np.eye(8, dtype=int))
    d5 = tb.ddt(inverse_sbox(fields(5)))
    f5 = fields(5)
    for a in range(1, 32):
        assert d5[a, f5.inv(a)] == 2
    d4 = tb.ddt(inverse_sbox(fields(4)))
    assert all(d4[a, fields(4).inv(a)] == 4 for a in range(1, 16))
    assert tb.differential_uniformity(d5) == 2
    assert tb.differential_uniformity(d4) == 4


def test_bct_rows(fields):
    f = fields(4)
    t = tb.bct(inverse_sbox(f)).counts
    assert np.all(t[0] == 16) and np.all(t[:, 0] == 16)
    assert tb.boomerang_uniformity(tb.bct(inverse_sbox(fields(4)))) == 6
    assert tb.boomerang_uniformity(tb.bct(inverse_sbox(fields(5)))) == 2
    assert tb.boomerang_uniformity(tb.bct(inverse_sbox(fields(6)))) == 4


def test_bct_rejects_non_permutation(fields):
    with pytest.raises(SBoxError):
        tb.bct(sbox_from_lut(fields(3), [0] * 8))


@pytest.mark.parametrize("poly", POLYS)
def test_slices_match_definitional_loops(poly):
    f = Field(poly.bit_length() - 1, poly)
    s = inverse_sbox(f)
    lut = s.lut.tolist()
    q = f.order
    assert np.array_equal(tb.ubct_cube(s), _cube(oracles.ubct(lut), q))
    assert np.array_equal(tb.lbct_cube(s), _cube(oracles.lbct(lut), q))


@pytest.mark.parametrize("seed", range(3))
def test_slices_on_random_permutations(seed):
    f = Field(4)
    lut = np.random.default_rng(seed).permutation(16).tolist()
    s = sbox_from_lut(f, lut)
    assert np.array_equal(tb.ubct_cube(s), _cube(oracles.ubct(lut), 16))
    assert np.array_equal(tb.lbct_cube(s), _cube(oracles.lbct(lut), 16))
    for i in (0, 5, 15):
        assert np.array_equal(tb.ubct_slice(s, i).grid, tb.ubct_slice_definitional(s, i).grid)
        assert np.array_equal(tb.lbct_slice(s, i).grid, tb.lbct_slice_definitional(s, i).grid)


def test_non_permutation_slices(fields):
    f = fields(4)
    s = power_sbox(f, 3)  # 3-to-1 on nonzero elements
    lut = s.lut.tolist()
    assert np.array_equal(tb.ubct_cube(s), _cube(oracles.ubct_pairs(lut), 16))
    assert np.array_equal(tb.lbct_cube(s), _cube(oracles.lbct_pairs(lut), 16))
    with pytest.raises(SBoxError):
        tb.ubct_slice_definitional(s, 1)


def test_pair_oracles_agree_on_permutations():
    lut = oracles.inverse_lut(0x13)
    assert oracles.ubct(lut) == oracles.ubct_pairs(lut)
    assert oracles.lbct(lut) == oracles.lbct_pairs(lut)


def test_slice_boundaries(fields):
    s = inverse_sbox(fields(4))
    u0 = tb.ubct_slice(s, 0).grid
    assert np.all(u0[0] == 16) and np.all(u0[1:] == 0)
    D = tb.ddt(s).counts
    U = tb.ubct_cube(s)
    assert np.array_equal(U[:, :, 0], D)
    L = tb.lbct_cube(s)
    assert np.array_equal(L[0], D)  # b = 0: LBCT(0, c, d) = DDT(c, d)
    with pytest.raises(tb.TableError):
        tb.ubct_slice(s, 16)


@pytest.mark.parametrize("poly", [0x3, 0x7, 0xB, 0x13])
def test_dbct_matches_loop(poly):
    f = Field(poly.bit_length() - 1, poly)
    s = inverse_sbox(f)
    want = oracles.dbct(s.lut.tolist())
    assert tb.dbct(s).counts.tolist() == want
    assert [[tb.dbct_entry(s, a, d) for d in range(f.order)] for a in range(f.order)] == want


def test_dbct_frozen_values(inv_sbox):
    # oracle values, frozen
    assert tb.dbct_entry(inv_sbox(3), 1, 1) == 16
    assert tb.dbct_entry(inv_sbox(3), 1, 2) == 8
    assert tb.dbct_entry(inv_sbox(4), 1, 1) == 40
    assert tb.dbct_entry(inv_sbox(5), 1, 1) == 64
    assert tb.dbct_entry(inv_sbox(5), 1, 2) == 36
    assert tb.dbct_entry(inv_sbox(6), 1, 1) == 136


@pytest.mark.parametrize("n", range(1, 7))
def test_dbct_boundary(inv_sbox, n):
    t = tb.dbct(inv_sbox(n)).counts
    q = 1 << n
    assert np.all(t[0] == q * q) and np.all(t[:, 0] == q * q)


def test_identity_is_not_hard(fields):
    f = fields(3)
    s = identity_sbox(f)
    U = tb.ubct_cube(s)
    nz = np.arange(1, 8)
    assert np.all(U[nz, nz, :] == 8)  # UBCT(a, a, c) = 2^n for every c
    full, same = tb.dbct_parts(s)
    assert np.all(full.counts == 64)
    assert np.all(np.diag(same)[1:] == 64)
    assert not tb.is_hard(s)


@pytest.mark.parametrize("n,hard", [(3, True), (4, False), (5, True), (6, False)])
def test_is_hard_inverse(inv_sbox, n, hard):
    assert tb.is_hard(inv_sbox(n)) is hard


def test_hard_means_ddt_convolution(inv_sbox):
    for n in (3, 5):
        s = inv_sbox(n)
        conv = tb.ddt_convolution(tb.ddt(s))
        assert np.array_equal(tb.dbct(s).counts[1:, 1:], conv[1:, 1:])


def test_uniformity_dispatch_and_kind_errors(inv_sbox):
    s = inv_sbox(4)
    d, b, db = tb.ddt(s), tb.bct(s), tb.dbct(s)
    assert tb.uniformity(d) == 4 and tb.uniformity(b) == 6 and tb.uniformity(db) == 40
    with pytest.raises(tb.TableError):
        tb.boomerang_uniformity(d)
    with pytest.raises(tb.TableError):
        tb.double_boomerang_uniformity(b)
    with pytest.raises(tb.TableError):
        tb.ddt_convolution(db)


def test_spectrum(inv_sbox):
    t = tb.dbct(inv_sbox(4))
    full = tb.spectrum(t)
    assert full.as_dict() == {256: 31, 40: 15, 36: 30, 16: 120, 12: 60}
    assert full.total == 256
    inner = tb.spectrum(t, include_boundary=False)
    assert 256 not in inner.as_dict() and inner.total == 225
    rows = [tb.spectrum(t.counts[i:i + 1]) for i in range(16)]
    assert tb.merge_spectra(rows).items == full.items
    assert json.loads(full.to_json())["spectrum"][0] == {"value": 256, "count": 31}


@pytest.mark.parametrize("n", range(2, 7))
def test_property_invariants(inv_sbox, n):
    s = inv_sbox(n)
    q = s.size
    D, B = tb.ddt(s).counts, tb.bct(s).counts
    U, L = tb.ubct_cube(s), tb.lbct_cube(s)
    assert np.all(D.sum(axis=1) == q)
    assert np.array_equal(U.sum(axis=1), B)
    assert np.array_equal(L.sum(axis=1), B)
    assert np.all(U <= D[:, :, None])
    assert np.all(L <= D[None, :, :])
    full = tb.dbct(s).counts
    assert np.all(full[1:, 1:] >= tb.ddt_convolution(tb.ddt(s))[1:, 1:])


@pytest.mark.parametrize("workers", [2, 3, 7, 64])
def test_worker_invariance(inv_sbox, workers):
    s = inv_sbox(5)
    assert np.array_equal(tb.ddt(s, workers=1).counts, tb.ddt(s, workers=workers).counts)
    assert np.array_equal(tb.bct(s, workers=1).counts, tb.bct(s, workers=workers).counts)
    assert np.array_equal(tb.ubct_cube(s, workers=1), tb.ubct_cube(s, workers=workers))
    assert np.array_equal(tb.lbct_cube(s, workers=1), tb.lbct_cube(s, workers=workers))
    a, b = tb.dbct_parts(s, workers=1), tb.dbct_parts(s, workers=workers)
    assert np.array_equal(a[0].counts, b[0].counts) and np.array_equal(a[1], b[1])


def test_bad_workers(inv_sbox):
    with pytest.raises(tb.TableError):
        tb.ddt(inv_sbox(3), workers=0)


def test_cap(inv_sbox):
    s = inv_sbox(4)
    with pytest.raises(tb.CapExceeded):
        tb.dbct(s, cap=3)
    assert tb.dbct(s, cap=3, force=True).counts[1, 1] == 40
    with pytest.raises(tb.CapExceeded):
        tb.dbct(inv_sbox(9))


def test_exports(inv_sbox):
    s = inv_sbox(3)
    t = tb.ddt(s)
    lines = t.to_csv().splitlines()
    assert lines[0] == "# n=3 poly=0xb kind=ddt"
    assert lines[1] == "8,0,0,0,0,0,0,0"
    assert len(lines) == 9
    doc = json.loads(t.to_json())
    assert doc["meta"]["kind"] == "ddt" and doc["meta"]["n"] == 3
    assert doc["data"] == t.counts.tolist()
    sl = tb.lbct_slice(s, 2)
    assert sl.to_csv().splitlines()[0] == "# n=3 poly=0xb kind=lbct-slice d=2"
    assert json.loads(sl.to_json())["meta"]["d"] == 2
    assert tb.ubct_slice(s, 5).to_csv().splitlines()[0].endswith("kind=ubct-slice a=5")
    assert t.to_csv() == tb.ddt(s, workers=3).to_csv()
