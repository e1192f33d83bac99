# A square in F_{13^3} = F_13[t]/(t^3 + 2t + 11), and a way to find its root.
import time

from fqpower import find_generator, is_rth_power, make_field, parse_element, rth_root

F = make_field(13, 3, "t^3+2*t+11")
a = parse_element(F, "5+t+8*t^2")

# (q - 1)/2 = 1098
print("a^1098 =", a ** 1098)

# Knowing that a root exists is cheap; producing one goes through the cyclic
# structure: a discrete log to the base of a fixed generator, then a linear
# congruence modulo q - 1.
print("generator:", find_generator(F))
start = time.perf_counter()
root, count = rth_root(a, 2)
print(f"canonical root {root} ({count} roots) in {1e3 * (time.perf_counter() - start):.2f} ms")
print("check:", root ** 2 == a, "  other root:", -root)
print("the other listed root squares back too:", parse_element(F, "7+t+2*t^2") ** 2 == a)

print(is_rth_power(a, 2).to_record())
