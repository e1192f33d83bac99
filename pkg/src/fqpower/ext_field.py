"""Finite fields F_q = F_p[t]/(m(t)) and their multiplicative groups.

A :class:`FieldSpec` pins one concrete model of F_q through the triple
``(p, n, m)``.  Elements are fixed-width coefficient tuples of length ``n``;
the prime field sits inside as the tuples ``(c, 0, ..., 0)``.

Multiplication works on raw integer tuples (polynomial product, then the
remainder modulo the monic ``m``) because every Euler-criterion evaluation
is a long chain of such products.
"""

from __future__ import annotations

import re
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import CapExceededError, DomainError, NotInvertibleError
from .polynomial import (
    Poly,
    find_irreducible,
    format_poly,
    is_irreducible,
    parse_poly,
    poly_divmod,
    poly_xgcd,
)
from .prime_field import MAX_EXPONENT, PrimeModulus

ENUMERATION_CAP = 2**20


class FieldSpec:
    """The field F_p[t]/(m(t)) with ``q = p**n`` elements."""

    __slots__ = ("prime", "n", "modulus", "q", "_low", "_key")

    def __init__(self, prime: PrimeModulus, n: int, modulus: Poly):
        # unchecked; use make_field() for validated construction
        self.prime = prime
        self.n = n
        self.modulus = modulus
        self.q = prime.p**n
        # -m(t) + t^n: the reduction rule t^n = -(m_0 + ... + m_{n-1} t^{n-1})
        self._low = tuple(c.value for c in modulus.coeffs[:n])
        self._key = (prime.p, n, self._low)

    @property
    def p(self) -> int:
        return self.prime.p

    def __call__(self, value) -> FieldElement:
        """Embed an integer (prime subfield) or a coefficient sequence."""
        if isinstance(value, FieldElement):
            if value.spec != self:
                raise DomainError("element belongs to a different field")
            return value
        if isinstance(value, int):
            return FieldElement(self, (value % self.p,) + (0,) * (self.n - 1))
        return self.element(value)

    def element(self, coeffs: Sequence[int]) -> FieldElement:
        """Element from ascending coefficients; degrees >= n are reduced."""
        cs = [int(c) for c in coeffs]
        if len(cs) > self.n:
            rem = poly_divmod(Poly(self.prime, cs), self.modulus)[1]
            cs = [c.value for c in rem.coeffs]
        cs += [0] * (self.n - len(cs))
        return FieldElement(self, tuple(c % self.p for c in cs))

    def from_index(self, index: int) -> FieldElement:
        if not 0 <= index < self.q:
            raise DomainError(f"index {index} outside [0, {self.q - 1}]")
        p, cs = self.p, []
        for _ in range(self.n):
            index, c = divmod(index, p)
            cs.append(c)
        return FieldElement(self, tuple(cs))

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, (0,) * self.n)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, (1,) + (0,) * (self.n - 1))

    @property
    def gen(self) -> FieldElement:
        """The class of ``t`` (not necessarily a group generator)."""
        return self.element([0, 1])

    def _mul(self, a: tuple, b: tuple) -> tuple:
        p, n = self.p, self.n
        if n == 1:
            return (a[0] * b[0] % p,)
        prod = [0] * (2 * n - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        low = self._low
        for k in range(2 * n - 2, n - 1, -1):
            c = prod[k] % p
            if c:
                base = k - n
                for j, mj in enumerate(low):
                    if mj:
                        prod[base + j] -= c * mj
        return tuple(x % p for x in prod[:n])

    def _pow(self, a: tuple, e: int) -> tuple:
        if self.n == 1:
            return (pow(a[0], e, self.p),)
        result = (1,) + (0,) * (self.n - 1)
        while e:
            if e & 1:
                result = self._mul(result, a)
            e >>= 1
            if e:
                a = self._mul(a, a)
        return result

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and other._key == self._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"FieldSpec({format_field(self)!r})"

    def __str__(self):
        return format_field(self)


class FieldElement:
    """Residue class of a polynomial of degree < n modulo ``m``."""

    __slots__ = ("spec", "coeffs")

    def __init__(self, spec: FieldSpec, coeffs: tuple):
        self.spec = spec
        self.coeffs = coeffs

    def _other(self, other) -> FieldElement:
        if isinstance(other, int) and not isinstance(other, bool):
            return self.spec(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.spec is not self.spec and other.spec != self.spec:
            raise DomainError(f"field mismatch: {self.spec} vs {other.spec}")
        return other

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        p = self.spec.p
        return FieldElement(self.spec, tuple((x + y) % p for x, y in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        p = self.spec.p
        return FieldElement(self.spec, tuple((x - y) % p for x, y in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        p = self.spec.p
        return FieldElement(self.spec, tuple(-x % p for x in self.coeffs))

    def __mul__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.spec, self.spec._mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        return ff_pow(self, e)

    def __truediv__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self * ff_inv(other)

    def inverse(self) -> FieldElement:
        return ff_inv(self)

    @property
    def index(self) -> int:
        """Canonical integer encoding ``c0 + c1*p + ... + c_{n-1}*p**(n-1)``."""
        p, acc = self.spec.p, 0
        for c in reversed(self.coeffs):
            acc = acc * p + c
        return acc

    def in_prime_field(self) -> bool:
        return not any(self.coeffs[1:])

    def to_poly(self) -> Poly:
        return Poly(self.spec.prime, list(self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            other = self.spec(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.coeffs == other.coeffs and self.spec == other.spec

    def __lt__(self, other: FieldElement):
        return self.index < other.index

    def __hash__(self):
        return hash((self.spec._key, self.coeffs))

    def __repr__(self):
        return f"FieldElement({format_element(self)!r}, {format_field(self.spec)!r})"

    def __str__(self):
        return format_element(self)


def make_field(p: int, n: int = 1, m: Poly | str | None = None) -> FieldSpec:
    """Validated F_{p^n}; ``m`` defaults to :func:`find_irreducible`."""
    prime = p if isinstance(p, PrimeModulus) else PrimeModulus(p)
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"extension degree must be a positive integer, got {n!r}")
    if prime.p**n >= MAX_EXPONENT:
        raise DomainError(f"q = {prime.p}^{n} does not fit below 2^63")
    if m is None:
        m = find_irreducible(prime, n)
    else:
        if isinstance(m, str):
            m = parse_poly(m, prime)
        elif m.field != prime:
            raise DomainError("modulus has coefficients outside F_p")
        if m.degree != n:
            raise DomainError(f"modulus {format_poly(m, descending=True)} has degree {m.degree}, expected {n}")
        if not m.is_monic():
            raise DomainError(f"modulus {format_poly(m, descending=True)} is not monic")
        if not is_irreducible(m):
            raise DomainError(f"modulus {format_poly(m, descending=True)} is reducible over F_{prime.p}")
    return FieldSpec(prime, n, m)


def ff_arith(op: str, a: FieldElement, b: FieldElement) -> FieldElement:
    """Apply ``op`` in {"add", "sub", "mul"} within one field."""
    if a.spec != b.spec:
        raise DomainError(f"field mismatch: {a.spec} vs {b.spec}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise DomainError(f"unknown operation {op!r}")


def ff_pow(a: FieldElement, e: int) -> FieldElement:
    """Square-and-multiply; ``0**0 == 1``."""
    if e < 0:
        raise DomainError("negative exponent")
    return FieldElement(a.spec, a.spec._pow(a.coeffs, e))


def ff_inv(a: FieldElement) -> FieldElement:
    """Inverse via the extended Euclidean algorithm on representatives."""
    if not a:
        raise NotInvertibleError("0 has no multiplicative inverse")
    spec = a.spec
    d, s, _ = poly_xgcd(a.to_poly(), spec.modulus)
    assert d.degree == 0
    return spec.element([c.value for c in s.coeffs])


def enumerate_units(spec: FieldSpec, cap: int = ENUMERATION_CAP) -> Iterator[FieldElement]:
    """All nonzero elements in index order."""
    if spec.q > cap:
        raise CapExceededError(f"q = {spec.q} exceeds the enumeration cap {cap}")
    return (spec.from_index(i) for i in range(1, spec.q))


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization by trial division, as ``((prime, exponent), ...)``."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def divisors(n: int) -> list[int]:
    divs = [1]
    for ell, e in factorize(n):
        divs = [d * ell**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def element_order(a: FieldElement) -> int:
    """Multiplicative order, by stripping prime factors off ``q - 1``."""
    if not a:
        raise DomainError("0 has no multiplicative order")
    spec = a.spec
    order = spec.q - 1
    for ell, _ in factorize(order):
        while order % ell == 0 and spec._pow(a.coeffs, order // ell) == spec.one.coeffs:
            order //= ell
    return order


@lru_cache(maxsize=None)
def find_generator(spec: FieldSpec) -> FieldElement:
    """The unit of least index whose order is ``q - 1``."""
    group = spec.q - 1
    one = spec.one.coeffs
    tests = [group // ell for ell, _ in factorize(group)]
    for i in range(1, spec.q):
        a = spec.from_index(i)
        if all(spec._pow(a.coeffs, e) != one for e in tests):
            return a
    raise AssertionError("unreachable: F_q^* is cyclic")


# ---------------------------------------------------------------- text format

def format_element(a: FieldElement) -> str:
    return format_poly(a.to_poly())


def parse_element(spec: FieldSpec, text: str) -> FieldElement:
    """Parse ``"5+3*t+7*t^2"``, an index list ``"[5,3,7]"``, or an integer."""
    s = text.strip()
    if s.startswith("["):
        if not s.endswith("]"):
            raise DomainError(f"malformed coefficient list {text!r}")
        body = s[1:-1].strip()
        try:
            cs = [int(x) for x in body.split(",")] if body else []
        except ValueError:
            raise DomainError(f"malformed coefficient list {text!r}") from None
        return spec.element(cs)
    f = parse_poly(s, spec.prime)
    return spec.element([c.value for c in f.coeffs])


def format_field(spec: FieldSpec) -> str:
    return f"F({spec.p}^{spec.n}; {format_poly(spec.modulus, descending=True)})"


_FIELD = re.compile(r"^F\(\s*(\d+)\s*(?:\^\s*(\d+)\s*)?(?:;\s*(.+?)\s*)?\)$")


def parse_field(text: str) -> FieldSpec:
    """Parse ``"F(p^n; m(t))"``, ``"F(p^n)"`` or ``"F(p)"``."""
    mt = _FIELD.match(text.strip())
    if not mt:
        raise DomainError(f"malformed field descriptor {text!r}")
    p, n, m = mt.groups()
    return make_field(int(p), int(n) if n else 1, m)
