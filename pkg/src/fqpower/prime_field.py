"""Arithmetic in Z/pZ for a prime p.

Residues are immutable values tied to a :class:`PrimeModulus`.  The modulus
doubles as the coefficient field used by :mod:`fqpower.polynomial`, so it
exposes ``zero``, ``one`` and a call operator that embeds integers.
"""

from __future__ import annotations

from .errors import DomainError, NotInvertibleError

MAX_PRIME = 2**31
MAX_EXPONENT = 2**63

# Deterministic Miller-Rabin: these bases are exact for every n < 3.3 * 10**24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Return True iff ``n`` is prime (deterministic for n < 2**63)."""
    if n < 2:
        return False
    for b in _MR_BASES:
        if n % b == 0:
            return n == b
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for b in _MR_BASES:
        x = pow(b, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class PrimeModulus:
    """A validated prime ``p``; calling it embeds an integer as a residue."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not isinstance(p, int) or isinstance(p, bool):
            raise DomainError(f"modulus must be an integer, got {p!r}")
        if not 2 <= p < MAX_PRIME:
            raise DomainError(f"modulus {p} outside [2, 2^31)")
        if not is_prime(p):
            raise DomainError(f"{p} is not prime")
        self.p = p

    def __call__(self, value: int) -> Residue:
        return Residue(value, self)

    @property
    def zero(self) -> Residue:
        return Residue(0, self)

    @property
    def one(self) -> Residue:
        return Residue(1, self)

    def __eq__(self, other):
        return isinstance(other, PrimeModulus) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeModulus", self.p))

    def __repr__(self):
        return f"PrimeModulus({self.p})"

    def __str__(self):
        return f"F({self.p})"


class Residue:
    """An element of F_p stored in canonical range ``[0, p - 1]``."""

    __slots__ = ("value", "modulus")

    def __init__(self, value: int, modulus: PrimeModulus):
        self.value = value % modulus.p
        self.modulus = modulus

    def _check(self, other) -> Residue:
        if isinstance(other, int):
            return Residue(other, self.modulus)
        if not isinstance(other, Residue):
            return NotImplemented
        if other.modulus.p != self.modulus.p:
            raise DomainError(
                f"modulus mismatch: {self.modulus.p} vs {other.modulus.p}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return Residue(self.value + other.value, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return Residue(self.value - other.value, self.modulus)

    def __rsub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return Residue(other.value - self.value, self.modulus)

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return Residue(self.value * other.value, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return Residue(-self.value, self.modulus)

    def __pow__(self, e: int):
        return fp_pow(self, e)

    def __truediv__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self * fp_inv(other)

    def inverse(self) -> Residue:
        return fp_inv(self)

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __eq__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return self.value == other % self.modulus.p
        if isinstance(other, Residue):
            return self.value == other.value and self.modulus.p == other.modulus.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus.p))

    def __repr__(self):
        return f"Residue({self.value}, {self.modulus.p})"

    def __str__(self):
        return str(self.value)


def fp_arith(op: str, a: Residue, b: Residue) -> Residue:
    """Apply ``op`` in {"add", "sub", "mul"} to two residues of one modulus."""
    if a.modulus.p != b.modulus.p:
        raise DomainError(f"modulus mismatch: {a.modulus.p} vs {b.modulus.p}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise DomainError(f"unknown operation {op!r}")


def fp_pow(a: Residue, e: int) -> Residue:
    """Square-and-multiply exponentiation; ``0**0 == 1``."""
    if e < 0:
        raise DomainError("negative exponent")
    p = a.modulus.p
    base, result = a.value, 1
    while e:
        if e & 1:
            result = result * base % p
        base = base * base % p
        e >>= 1
    return Residue(result, a.modulus)


def fp_inv(a: Residue) -> Residue:
    """Inverse by the extended Euclidean algorithm."""
    if a.value == 0:
        raise NotInvertibleError(f"0 has no inverse modulo {a.modulus.p}")
    r0, r1 = a.modulus.p, a.value
    s0, s1 = 0, 1
    while r1:
        quot = r0 // r1
        r0, r1 = r1, r0 - quot * r1
        s0, s1 = s1, s0 - quot * s1
    return Residue(s0, a.modulus)
