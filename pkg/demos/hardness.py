"""Hard S-boxes: when does the DBCT collapse to a DDT convolution?"""

import numpy as np

from boomtab import tables as tb
from boomtab.field import Field
from boomtab.sbox import identity_sbox, inverse_sbox, sbox_from_lut

rng = np.random.default_rng(2024)

for n in range(3, 8):
    f = Field(n)
    full, same = tb.dbct_parts(inverse_sbox(f))
    off = full.counts[1:, 1:] - same[1:, 1:]
    print(f"inverse n={n}: hard={tb.is_hard(inverse_sbox(f))}, mass off b=c: {int(off.sum())}")

# identity: UBCT(a, a, c) = 2^n for every c, so trails with b != c carry
# mass; the DBCT is 2^(2n) everywhere while the DDT convolution is diagonal
f = Field(3)
s = identity_sbox(f)
full, same = tb.dbct_parts(s)
print("identity n=3 DBCT row 1:", full.counts[1].tolist())
print("DDT convolution row 1:  ", tb.ddt_convolution(tb.ddt(s))[1].tolist())
print("identity is hard:", tb.is_hard(s))

for trial in range(3):
    s = sbox_from_lut(Field(4), rng.permutation(16), name=f"random{trial}")
    print(s.name, "hard:", tb.is_hard(s), "beta_d:", tb.double_boomerang_uniformity(tb.dbct(s)))
