"""Walk through GF(2^n) arithmetic and the Kloosterman sum K(1)."""

from boomtab.field import Field, clmul_mod, kloosterman_k1_carlitz, kloosterman_k1_direct

f = Field(4)  # x^4 + x + 1
print(f, "generator", f.generator)

a, b = 0b0110, 0b1011
print(f"{a:04b} * {b:04b} = {f.mul(a, b):04b}  (schoolbook {clmul_mod(a, b, f.poly):04b})")
print(f"1/{a:04b} = {f.inv(a):04b}, check {f.mul(a, f.inv(a))}")

# half the field has trace 0
print("trace table:", f.trace_table.tolist())

# x^2 + x + t has a root exactly when Tr(t) = 0
for t in range(1, 6):
    print(f"z^2 + z = {t}: roots {sorted(f.solve_quadratic(1, 1, t))}, Tr = {f.trace(t)}")

print()
print(" n   direct  carlitz")
for n in range(1, 13):
    print(f"{n:2d} {kloosterman_k1_direct(Field(n)):8d} {kloosterman_k1_carlitz(n):8d}")
