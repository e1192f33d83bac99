"""Dense univariate polynomials over an abstract coefficient field.

The coefficient field is any object with ``zero``, ``one`` and a call
operator embedding integers; its elements support ``+ - *``, ``inverse()``,
truth testing and equality.  :class:`~fqpower.prime_field.PrimeModulus` and
:class:`~fqpower.ext_field.FieldSpec` both qualify, so the same engine does
division in F_p[x] and in F_q[x].
"""

from __future__ import annotations

import re
from itertools import product

from .errors import DomainError, NotInvertibleError
from .prime_field import PrimeModulus

NEG_INF = float("-inf")


class Poly:
    """Polynomial with ``coeffs[i]`` the coefficient of ``x**i``.

    Coefficients are normalized: the last stored one is nonzero, and the zero
    polynomial has no coefficients and degree ``-inf``.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs=()):
        cs = [c if not isinstance(c, int) else field(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @classmethod
    def monomial(cls, field, degree: int, coeff=None) -> Poly:
        c = field.one if coeff is None else coeff
        return cls(field, [field.zero] * degree + [c])

    @classmethod
    def constant(cls, field, c) -> Poly:
        return cls(field, [c])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def __getitem__(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.zero

    def __len__(self):
        return len(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def _same_field(self, other: Poly):
        if other.field != self.field:
            raise DomainError("polynomials over different coefficient fields")

    def __add__(self, other: Poly) -> Poly:
        return poly_arith("add", self, other)

    def __sub__(self, other: Poly) -> Poly:
        return poly_arith("sub", self, other)

    def __mul__(self, other: Poly) -> Poly:
        return poly_arith("mul", self, other)

    def __neg__(self) -> Poly:
        return Poly(self.field, [-c for c in self.coeffs])

    def __divmod__(self, other: Poly):
        return poly_divmod(self, other)

    def __floordiv__(self, other: Poly) -> Poly:
        return poly_divmod(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return poly_divmod(self, other)[1]

    def scale(self, c) -> Poly:
        return Poly(self.field, [c * a for a in self.coeffs])

    def monic(self) -> Poly:
        if not self.coeffs:
            raise NotInvertibleError("zero polynomial has no monic associate")
        return self.scale(self.lead.inverse())

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.lead == self.field.one

    def __call__(self, x):
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        return f"Poly({self.field!r}, {format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


def poly_arith(op: str, f: Poly, g: Poly) -> Poly:
    """Add, subtract or multiply (schoolbook) two polynomials."""
    f._same_field(g)
    field = f.field
    if op in ("add", "sub"):
        zero = field.zero
        n = max(len(f.coeffs), len(g.coeffs))
        a = f.coeffs + (zero,) * (n - len(f.coeffs))
        b = g.coeffs + (zero,) * (n - len(g.coeffs))
        if op == "add":
            return Poly(field, [x + y for x, y in zip(a, b)])
        return Poly(field, [x - y for x, y in zip(a, b)])
    if op == "mul":
        if not f.coeffs or not g.coeffs:
            return Poly(field)
        out = [field.zero] * (len(f.coeffs) + len(g.coeffs) - 1)
        g_terms = [(j, c) for j, c in enumerate(g.coeffs) if c]
        for i, a in enumerate(f.coeffs):
            if not a:
                continue
            for j, b in g_terms:
                out[i + j] = out[i + j] + a * b
        return Poly(field, out)
    raise DomainError(f"unknown operation {op!r}")


def poly_divmod(f: Poly, g: Poly) -> tuple[Poly, Poly]:
    """Long division: return ``(q, r)`` with ``f == q*g + r``, ``deg r < deg g``.

    Only the nonzero terms of ``g`` are visited, so dividing by a binomial
    such as ``x**r - a`` costs O(deg f) coefficient operations.
    """
    f._same_field(g)
    if not g.coeffs:
        raise NotInvertibleError("polynomial division by zero")
    field = f.field
    dg = len(g.coeffs) - 1
    if len(f.coeffs) - 1 < dg:
        return Poly(field), f
    rem = list(f.coeffs)
    lead_inv = g.coeffs[-1].inverse()
    lower = [(j, c) for j, c in enumerate(g.coeffs[:-1]) if c]
    quot = [field.zero] * (len(rem) - dg)
    for k in range(len(rem) - 1, dg - 1, -1):
        c = rem[k]
        if not c:
            continue
        t = c * lead_inv
        shift = k - dg
        quot[shift] = t
        rem[k] = field.zero
        for j, gc in lower:
            rem[shift + j] = rem[shift + j] - t * gc
    return Poly(field, quot), Poly(field, rem[:dg])


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic greatest common divisor by Euclid's algorithm."""
    f._same_field(g)
    if not f.coeffs and not g.coeffs:
        raise DomainError("gcd(0, 0) is undefined")
    while g.coeffs:
        f, g = g, poly_divmod(f, g)[1]
    return f.monic()


def poly_xgcd(f: Poly, g: Poly) -> tuple[Poly, Poly, Poly]:
    """Return ``(d, s, t)`` with ``d = s*f + t*g`` and ``d`` monic."""
    f._same_field(g)
    if not f.coeffs and not g.coeffs:
        raise DomainError("gcd(0, 0) is undefined")
    field = f.field
    r0, r1 = f, g
    s0, s1 = Poly(field, [field.one]), Poly(field)
    t0, t1 = Poly(field), Poly(field, [field.one])
    while r1.coeffs:
        quot, rem = poly_divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - quot * s1
        t0, t1 = t1, t0 - quot * t1
    c = r0.lead.inverse()
    return r0.scale(c), s0.scale(c), t0.scale(c)


def poly_powmod(f: Poly, e: int, m: Poly) -> Poly:
    """``f**e mod m`` by repeated squaring."""
    if e < 0:
        raise DomainError("negative exponent")
    result = Poly(m.field, [m.field.one]) % m
    base = f % m
    while e:
        if e & 1:
            result = (result * base) % m
        base = (base * base) % m
        e >>= 1
    return result


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(m: Poly) -> bool:
    """Rabin's irreducibility test over a prime field.

    ``m`` of degree d is irreducible iff ``x**(p**d) == x (mod m)`` and
    ``gcd(x**(p**(d/l)) - x, m) == 1`` for every prime ``l | d``.
    """
    if not isinstance(m.field, PrimeModulus):
        raise DomainError("irreducibility is tested over prime fields only")
    d = m.degree
    if d == NEG_INF or d < 1:
        raise DomainError("constant polynomials are neither reducible nor irreducible")
    if d == 1:
        return True
    p = m.field.p
    m = m.monic()
    x = Poly.monomial(m.field, 1)
    # frob[k] = x**(p**k) mod m
    frob = [x % m]
    for _ in range(d):
        frob.append(poly_powmod(frob[-1], p, m))
    if frob[d] != frob[0]:
        return False
    for ell in _prime_factors(d):
        if poly_gcd(frob[d // ell] - x, m).degree != 0:
            return False
    return True


def poly_from_index(field: PrimeModulus, index: int, degree: int) -> Poly:
    """Monic polynomial of ``degree`` whose lower coefficients are the
    base-p digits of ``index`` (constant term least significant)."""
    p = field.p
    digits = []
    for _ in range(degree):
        index, c = divmod(index, p)
        digits.append(c)
    return Poly(field, digits + [1])


def find_irreducible(p: PrimeModulus | int, n: int) -> Poly:
    """Smallest monic irreducible of degree ``n`` in canonical index order."""
    field = p if isinstance(p, PrimeModulus) else PrimeModulus(p)
    if n < 1:
        raise DomainError("degree must be at least 1")
    for index in range(field.p**n):
        m = poly_from_index(field, index, n)
        if is_irreducible(m):
            return m
    raise AssertionError("unreachable: irreducibles exist in every degree")


def monic_polys(field: PrimeModulus, degree: int):
    """All monic polynomials of the given degree, in canonical order."""
    for digits in product(range(field.p), repeat=degree):
        yield Poly(field, list(reversed(digits)) + [1])


# ---------------------------------------------------------------- text format

_TERM = re.compile(r"([+-]?)(\d*)(\*?)(?:([a-z])(?:\^(\d+))?)?")


def parse_poly(text: str, field, var: str = "t") -> Poly:
    """Parse ``"c0 + c1*t + c2*t^2"`` style text (any term order).

    Coefficients are integers reduced into ``field``; repeated powers add up.
    """
    s = "".join(text.split())
    if not s:
        raise DomainError("empty polynomial text")
    pos, terms = 0, {}
    while pos < len(s):
        mt = _TERM.match(s, pos)
        sign, digits, star, name, exp = mt.groups()
        if mt.end() == pos or (pos > 0 and not sign):
            raise DomainError(f"malformed polynomial text {text!r}")
        if name is None and (not digits or star):
            raise DomainError(f"malformed polynomial text {text!r}")
        if name is not None and name != var:
            raise DomainError(f"unexpected variable {name!r} in {text!r}")
        if star and not digits:
            raise DomainError(f"malformed polynomial text {text!r}")
        coeff = int(digits) if digits else 1
        if sign == "-":
            coeff = -coeff
        power = 0 if name is None else int(exp) if exp else 1
        terms[power] = terms.get(power, 0) + coeff
        pos = mt.end()
    top = max(terms)
    return Poly(field, [field(terms.get(i, 0)) for i in range(top + 1)])


def _format_coeff(c) -> str:
    s = str(c)
    return f"({s})" if any(ch in s for ch in "+-") else s


def format_poly(f: Poly, var: str = "t", descending: bool = False) -> str:
    """Render nonzero terms joined by ``+``; ``"0"`` for the zero polynomial."""
    one = f.field.one
    parts = []
    for i, c in enumerate(f.coeffs):
        if not c:
            continue
        if i == 0:
            parts.append(str(c))
            continue
        mono = var if i == 1 else f"{var}^{i}"
        parts.append(mono if c == one else f"{_format_coeff(c)}*{mono}")
    if descending:
        parts.reverse()
    return "+".join(parts) if parts else "0"
