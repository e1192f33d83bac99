# Squares in the nine-element field F_3[t]/(t^2 + 1).
from fqpower import count_rth_powers, is_rth_power, list_rth_powers, make_field, parse_element

F = make_field(3, 2, "t^2+1")
t = F.gen
print(F)

# t^2 = -1 = 2, and (1 + 2t)^2 = 1 + 4t + 4t^2 = t
print("t^2      =", t * t)
print("(1+2t)^2 =", parse_element(F, "1+2*t") ** 2)

# The squares of F_9^* form a subgroup of index 2.
squares = list_rth_powers(F, 2)
print("squares:", [str(x) for x in squares])
print("nontrivial squares:", count_rth_powers(F, 2).nontrivial_squares)

# Euler's test: a is a square iff a^((q-1)/2) = 1.  It agrees with the list.
for a in (F(2), t, parse_element(F, "1+t")):
    rep = is_rth_power(a, 2)
    print(f"{str(a):>4}: a^4 = {rep.euler_value}, square = {rep.is_power}, root = {rep.canonical_root}")
