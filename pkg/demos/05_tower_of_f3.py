# When is a prime-field constant an r-th power in F_{p^n}?  Since c^(p-1) = 1,
# the criterion exponent (p^n - 1)/d only matters modulo p - 1, so no model of
# the extension is needed.  For c = 2, p = 3, r = 2 the answer is "n even".
from fqpower import constant_power_in_extension, is_rth_power, make_field

print(" n  2 square in F_3^n   (explicit field)")
for n in range(1, 13):
    fast = constant_power_in_extension(3, 2, n, 2)
    explicit = is_rth_power(make_field(3, n)(2), 2).is_power if n <= 6 else "-"
    print(f"{n:2d}  {str(fast):>5}               {explicit}")

# The same shortcut for other constants and exponents.
for p, c, r in ((5, 2, 4), (7, 3, 3), (13, 2, 12)):
    print(f"p={p} c={c} r={r}:", [n for n in range(1, 13) if constant_power_in_extension(p, c, n, r)])
