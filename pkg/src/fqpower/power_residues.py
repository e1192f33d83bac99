"""Euler-type criteria for squares and r-th powers in F_q.

For arbitrary ``r >= 1`` put ``d = gcd(r, q - 1)``.  The image of
``x -> x**r`` on F_q^* is the subgroup of index ``d``, so a unit ``a`` is an
r-th power iff ``a**((q - 1) // d) == 1``.  When ``r`` divides ``q - 1`` this
is the familiar ``a**((q - 1) // r) == 1``; when ``d == 1`` every unit is an
r-th power.  Note that ``r`` not dividing ``q - 1`` is not enough for
surjectivity: in F_25 the 9th powers are exactly the cubes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt
from typing import Iterator, Optional

from .errors import CapExceededError, DomainError
from .ext_field import (
    ENUMERATION_CAP,
    FieldElement,
    FieldSpec,
    find_generator,
    format_element,
    format_field,
)
from .polynomial import Poly, format_poly, poly_arith, poly_divmod
from .prime_field import PrimeModulus, Residue, fp_pow

DLOG_CAP = 2**40
DEGREE_CAP = 10**6


@dataclass(frozen=True)
class ResidueReport:
    a: FieldElement
    r: int
    d: int
    euler_value: FieldElement
    is_power: bool
    num_roots: int
    canonical_root: Optional[FieldElement]

    def to_record(self) -> dict[str, str]:
        """Flat key/value view used by the CLI's machine output."""
        return {
            "field": format_field(self.a.spec),
            "element": format_element(self.a),
            "r": str(self.r),
            "d": str(self.d),
            "euler_value": format_element(self.euler_value),
            "is_power": "true" if self.is_power else "false",
            "num_roots": str(self.num_roots),
            "root": "NONE" if self.canonical_root is None else format_element(self.canonical_root),
        }


@dataclass(frozen=True)
class PowerCount:
    total: int
    nontrivial_squares: Optional[int]
    outside_hypothesis: bool = False


def _check_r(r: int):
    if not isinstance(r, int) or r < 1:
        raise DomainError(f"r must be a positive integer, got {r!r}")


def euler_exponent_value(a: FieldElement, r: int) -> FieldElement:
    """``a ** ((q - 1) / r)`` for a divisor ``r`` of ``q - 1``."""
    _check_r(r)
    group = a.spec.q - 1
    if group % r:
        raise DomainError(f"r = {r} does not divide q - 1 = {group}")
    if not a:
        raise DomainError("the criterion is stated for nonzero elements")
    return a ** (group // r)


def is_rth_power(a: FieldElement, r: int) -> ResidueReport:
    """Decide whether ``a`` is an r-th power and attach a canonical root."""
    _check_r(r)
    spec = a.spec
    d = gcd(r, spec.q - 1)
    if not a:
        return ResidueReport(a, r, d, spec.zero, True, 1, spec.zero)
    euler = a ** ((spec.q - 1) // d)
    if euler != spec.one:
        return ResidueReport(a, r, d, euler, False, 0, None)
    root, count = rth_root(a, r)
    return ResidueReport(a, r, d, euler, True, count, root)


def count_rth_powers(spec: FieldSpec, r: int) -> PowerCount:
    """Number of distinct r-th powers among the units (closed form).

    For ``r == 2`` also reports the nontrivial squares (squares other than
    0 and 1).  In characteristic 2 squaring is bijective; that count is
    still returned but flagged as outside the odd-p hypothesis.
    """
    _check_r(r)
    total = (spec.q - 1) // gcd(r, spec.q - 1)
    if r != 2:
        return PowerCount(total, None)
    return PowerCount(total, total - 1, outside_hypothesis=spec.p == 2)


def power_map_is_bijective(spec: FieldSpec, r: int) -> bool:
    _check_r(r)
    return gcd(r, spec.q - 1) == 1


def list_rth_powers(spec: FieldSpec, r: int, cap: int = ENUMERATION_CAP) -> list[FieldElement]:
    """The r-th powers ``gamma**(j*r)``, ``j = 1 .. (q-1)/d``, sorted by index."""
    _check_r(r)
    if spec.q > cap:
        raise CapExceededError(f"q = {spec.q} exceeds the enumeration cap {cap}")
    k = (spec.q - 1) // gcd(r, spec.q - 1)
    step = find_generator(spec) ** r
    out, x = [], spec.one
    for _ in range(k):
        x = x * step
        out.append(x)
    out.sort(key=lambda e: e.index)
    return out


@lru_cache(maxsize=None)
def _baby_steps(spec: FieldSpec) -> tuple[int, dict, tuple]:
    # Per-spec memo; recomputation by a racing thread yields the same table.
    gamma = find_generator(spec)
    m = isqrt(spec.q - 1)
    if m * m < spec.q - 1:
        m += 1
    table, x = {}, spec.one.coeffs
    for j in range(m):
        table.setdefault(x, j)
        x = spec._mul(x, gamma.coeffs)
    giant = (gamma ** m).inverse().coeffs
    return m, table, giant


def discrete_log(a: FieldElement, cap: int = DLOG_CAP) -> int:
    """``k`` in ``[1, q - 1]`` with ``gamma**k == a`` (baby-step giant-step)."""
    spec = a.spec
    if not a:
        raise DomainError("0 has no discrete logarithm")
    if spec.q > cap:
        raise CapExceededError(f"q = {spec.q} exceeds the discrete-log cap {cap}")
    m, table, giant = _baby_steps(spec)
    y = a.coeffs
    for i in range(m + 1):
        j = table.get(y)
        if j is not None:
            k = (i * m + j) % (spec.q - 1)
            return k or spec.q - 1
        y = spec._mul(y, giant)
    raise AssertionError("unreachable: gamma generates F_q^*")


def rth_root(a: FieldElement, r: int, cap: int = ENUMERATION_CAP) -> tuple[Optional[FieldElement], int]:
    """Least-index solution of ``x**r == a`` and the number of solutions.

    Writes ``a = gamma**L`` and solves ``r*k == L (mod q - 1)``; the
    ``d = gcd(r, q - 1)`` solutions differ by powers of a primitive d-th
    root of unity, all of which are scanned for the canonical choice.
    """
    _check_r(r)
    spec = a.spec
    if not a:
        return spec.zero, 1
    group = spec.q - 1
    d = gcd(r, group)
    log_a = discrete_log(a)
    if log_a % d:
        return None, 0
    if d > cap:
        raise CapExceededError(f"{d} roots exceed the enumeration cap {cap}")
    sub = group // d
    k0 = (log_a // d) * pow(r // d, -1, sub) % sub if sub > 1 else 0
    gamma = find_generator(spec)
    x = gamma ** k0
    zeta = gamma ** sub
    best = x
    for _ in range(d - 1):
        x = x * zeta
        if x.index < best.index:
            best = x
    if best ** r != a:
        raise AssertionError(f"root check failed for {a} and r = {r}")
    return best, d


@dataclass(frozen=True)
class DivisionIdentity:
    """``x**q - x == h(x) * (x**r - a) + remainder_coeff * x`` over F_q.

    ``h`` and ``verified`` are None when q exceeds the degree cap; the
    closed-form terms of ``h`` are still available from :meth:`h_terms`.
    """

    spec: FieldSpec
    a: FieldElement
    r: int
    h: Optional[Poly]
    remainder_coeff: FieldElement
    verified: Optional[bool]

    def h_terms(self) -> Iterator[tuple[int, FieldElement]]:
        """Yield ``(exponent, coefficient)`` pairs ``(q - j*r, a**(j-1))``."""
        q, r = self.spec.q, self.r
        c = self.spec.one
        for j in range(1, (q - 1) // r + 1):
            yield q - j * r, c
            c = c * self.a

    def format_h(self) -> str:
        if self.h is not None:
            return format_poly(self.h, var="x", descending=True)
        parts = []
        for e, c in self.h_terms():
            mono = "x" if e == 1 else f"x^{e}"
            if c == self.spec.one:
                parts.append(mono)
            else:
                text = str(c)
                parts.append(f"({text})*{mono}" if "+" in text else f"{text}*{mono}")
        return "+".join(parts)


def euler_division_identity(spec: FieldSpec, a: FieldElement, r: int,
                            degree_cap: int = DEGREE_CAP) -> DivisionIdentity:
    """Closed-form quotient of ``x**q - x`` by ``x**r - a``, checked by long division."""
    _check_r(r)
    q = spec.q
    if (q - 1) % r:
        raise DomainError(f"r = {r} does not divide q - 1 = {q - 1}")
    if not a:
        raise DomainError("the identity is stated for nonzero a")
    if a.spec != spec:
        raise DomainError("element belongs to a different field")
    remainder_coeff = a ** ((q - 1) // r) - spec.one
    ident = DivisionIdentity(spec, a, r, None, remainder_coeff, None)
    if q > degree_cap:
        return ident
    coeffs = [spec.zero] * (q - r + 1)
    for e, c in ident.h_terms():
        coeffs[e] = c
    h = Poly(spec, coeffs)

    x_q_minus_x = Poly(spec, [spec.zero, -spec.one] + [spec.zero] * (q - 2) + [spec.one])
    divisor = Poly(spec, [-a] + [spec.zero] * (r - 1) + [spec.one])
    rem_poly = Poly(spec, [spec.zero, remainder_coeff])
    quot, rem = poly_divmod(x_q_minus_x, divisor)
    rebuilt = poly_arith("add", poly_arith("mul", h, divisor), rem_poly)
    verified = quot == h and rem == rem_poly and rebuilt == x_q_minus_x
    return DivisionIdentity(spec, a, r, h, remainder_coeff, verified)


def constant_power_in_extension(p: PrimeModulus | int, c: Residue | int, n: int, r: int) -> bool:
    """Is the prime-field constant ``c`` an r-th power in F_{p**n}?

    Needs no model of the extension: ``c**(p - 1) == 1`` lets the exponent
    ``(p**n - 1) / d`` be reduced modulo ``p - 1``, and ``p**n`` itself only
    ever appears modulo ``r`` or ``d * (p - 1)``.
    """
    _check_r(r)
    prime = p if isinstance(p, PrimeModulus) else PrimeModulus(p)
    c = c if isinstance(c, Residue) else prime(c)
    if c.modulus != prime:
        raise DomainError("constant and modulus disagree")
    if not c:
        raise DomainError("c must be nonzero")
    if n < 1:
        raise DomainError("n must be at least 1")
    pv = prime.p
    d = gcd(r, (pow(pv, n, r) - 1) % r)
    mod = d * (pv - 1)
    e = ((pow(pv, n, mod) - 1) % mod) // d
    return fp_pow(c, e).value == 1
