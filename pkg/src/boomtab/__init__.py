"""Boomerang-family tables (DDT, BCT, UBCT, LBCT, DBCT) of S-boxes over GF(2^n),
with explicit values for the inverse function."""

from ._version import __version__
from .closedform import (
    DbctCase,
    beta_d_inverse,
    dbct_case,
    dbct_inverse,
    dbct_spectrum_inverse,
    ddt_inverse,
    is_hard_inverse,
    lbct_inverse,
    ubct_inverse,
)
from .field import Field, FieldError, kloosterman_k1_carlitz, kloosterman_k1_direct
from .sbox import SBox, SBoxError, compositional_inverse, identity_sbox, inverse_sbox, sbox_from_lut
from .tables import (
    Spectrum,
    Table2D,
    Table3DSlice,
    bct,
    dbct,
    dbct_entry,
    ddt,
    double_boomerang_uniformity,
    boomerang_uniformity,
    differential_uniformity,
    is_hard,
    lbct_slice,
    spectrum,
    ubct_slice,
)
