"""Brute-force ground truth by scanning every unit.

Only field arithmetic is used here; nothing from :mod:`fqpower.power_residues`
is imported, so agreement between the two is evidence rather than tautology.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import CapExceededError, DomainError
from .ext_field import FieldElement, FieldSpec, ff_pow

ORACLE_CAP = 2**16


@lru_cache(maxsize=64)
def _preimages(spec: FieldSpec, r: int) -> dict[FieldElement, list[FieldElement]]:
    # one full scan, reused by every query against the same (spec, r)
    table: dict[FieldElement, list[FieldElement]] = {}
    for i in range(1, spec.q):
        x = spec.from_index(i)
        table.setdefault(ff_pow(x, r), []).append(x)
    return table


def _scan(spec: FieldSpec, r: int, cap: int):
    if r < 1:
        raise DomainError("r must be positive")
    if spec.q > cap:
        raise CapExceededError(f"q = {spec.q} exceeds the oracle cap {cap}")
    return _preimages(spec, r)


def brute_rth_powers(spec: FieldSpec, r: int, cap: int = ORACLE_CAP) -> list[FieldElement]:
    """``{x**r : x != 0}`` sorted by index."""
    return sorted(_scan(spec, r, cap), key=lambda e: e.index)


def brute_roots(spec: FieldSpec, a: FieldElement, r: int, cap: int = ORACLE_CAP) -> list[FieldElement]:
    """Every ``x`` with ``x**r == a``, in index order."""
    if a.spec != spec:
        raise DomainError("element belongs to a different field")
    table = _scan(spec, r, cap)
    if not a:
        return [spec.zero]
    return list(table.get(a, []))


def brute_image_sizes(spec: FieldSpec, cap: int = ORACLE_CAP) -> list[int]:
    """``sizes[r] = |{x**r : x != 0}|`` for every ``r`` in ``[1, q - 1]``.

    Powers are advanced one multiplication at a time (``x**(r+1) = x**r * x``),
    so all exponents together cost O(q**2) multiplications.  ``sizes[0]`` is 1.
    """
    if spec.q > cap:
        raise CapExceededError(f"q = {spec.q} exceeds the oracle cap {cap}")
    units = [spec.from_index(i) for i in range(1, spec.q)]
    powers = list(units)
    sizes = [1]
    for _ in range(1, spec.q):
        sizes.append(len(set(powers)))
        powers = [y * x for y, x in zip(powers, units)]
    return sizes
