"""DDT, BCT and one UBCT/LBCT slice of x -> x^(2^n - 2) over GF(2^4)."""

import numpy as np

from boomtab import closedform as cf
from boomtab import tables as tb
from boomtab.field import Field
from boomtab.sbox import inverse_sbox

np.set_printoptions(linewidth=120)

f = Field(4)
s = inverse_sbox(f)
print("lut:", s.lut.tolist())

D = tb.ddt(s)
B = tb.bct(s)
print("\nDDT\n", D.counts)
print("differential uniformity", tb.differential_uniformity(D))
print("\nBCT\n", B.counts)
print("boomerang uniformity", tb.boomerang_uniformity(B))

a = 3
u = tb.ubct_slice(s, a).grid
print(f"\nUBCT slice a={a} (rows b, columns c)\n", u)

E = f.elements()
closed = cf.ubct_inverse(f, a, E[:, None], E[None, :])
print("closed form agrees:", np.array_equal(u, closed))

# summing out b gives back the BCT row
print("sum over b == BCT row:", np.array_equal(u.sum(axis=0), B.counts[a]))

d = 5
l = tb.lbct_slice(s, d).grid
print(f"\nLBCT slice d={d}, nonzero cells: {int((l > 0).sum())}")
print("closed form agrees:", np.array_equal(l, cf.lbct_inverse(f, E[:, None], E[None, :], d)))
