# r-th powers for arbitrary r.  With d = gcd(r, q - 1), a unit a is an r-th
# power iff a^((q-1)/d) = 1, and there are (q-1)/d of them.
from math import gcd

from fqpower import brute_rth_powers, count_rth_powers, is_rth_power, make_field, parse_element

F = make_field(5, 2, "t^2+t+1")
print(F, " |F*| = 24")

print(" r  d  #powers  prime-field r-th powers")
for r in (2, 3, 4, 6, 8, 12):
    subfield = [c for c in (1, 2, 3, 4) if is_rth_power(F(c), r).is_power]
    print(f"{r:2d} {gcd(r, 24):2d} {count_rth_powers(F, r).total:8d}  {subfield}")

# Some explicit witnesses.
E = lambda s: parse_element(F, s)
print("(1+2t)^2 =", E("1+2*t") ** 2, "  (3+t)^6 =", E("3+t") ** 6, "  (1+2t)^12 =", E("1+2*t") ** 12)

# When r does not divide q - 1 the power map need not be onto: gcd(9, 24) = 3,
# and the ninth powers are exactly the cubes.
ninth, cubes = brute_rth_powers(F, 9), brute_rth_powers(F, 3)
print("ninth powers == cubes:", ninth == cubes, " size", len(ninth))

G = make_field(13, 3, "t^3+2*t+11")
for elem, r in (("5+7*t", 12), ("5+3*t+7*t^2", 61), ("12", 1098)):
    rep = is_rth_power(parse_element(G, elem), r)
    print(f"{elem:>12} is an r-th power for r = {r}: {rep.is_power}, e.g. ({rep.canonical_root})^{r}")
