# Dividing x^q - x by x^r - a in F_q[x] leaves the remainder (a^((q-1)/r) - 1) x.
# The quotient has the closed form sum_{j=1}^{k} a^(j-1) x^(q - j r), k = (q-1)/r;
# euler_division_identity builds it and checks it against ordinary long division.
from fqpower import euler_division_identity, make_field, parse_element

F9 = make_field(3, 2, "t^2+1")
for a in (F9(2), F9.gen, parse_element(F9, "1+t")):
    ident = euler_division_identity(F9, a, 2)
    print(f"a = {a}: h = {ident.format_h()}, remainder coeff {ident.remainder_coeff}, verified {ident.verified}")

F25 = make_field(5, 2, "t^2+t+1")
ident = euler_division_identity(F25, F25(2), 4)
print("q = 25, r = 4, a = 2: remainder coeff", ident.remainder_coeff, "-> 2 is not a 4th power")

# Above the degree cap only the closed form is produced.
G = make_field(13, 3, "t^3+2*t+11")
ident = euler_division_identity(G, G(12), 1098, degree_cap=1000)
print("q = 2197, r = 1098: h =", ident.format_h(), " verified:", ident.verified)
