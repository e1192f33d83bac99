"""Squares and r-th powers in finite fields F_q, q = p**n.

Typical use::

    >>> from fqpower import make_field, parse_element, is_rth_power
    >>> F = make_field(13, 3, "t^3+2*t+11")
    >>> is_rth_power(parse_element(F, "5+t+8*t^2"), 2).is_power
    True
"""

from .errors import CapExceededError, DomainError, NotInvertibleError
from .ext_field import (
    FieldElement,
    FieldSpec,
    element_order,
    enumerate_units,
    ff_arith,
    ff_inv,
    ff_pow,
    find_generator,
    format_element,
    format_field,
    make_field,
    parse_element,
    parse_field,
)
from .oracle import brute_image_sizes, brute_roots, brute_rth_powers
from .polynomial import (
    Poly,
    find_irreducible,
    format_poly,
    is_irreducible,
    parse_poly,
    poly_arith,
    poly_divmod,
    poly_gcd,
)
from .power_residues import (
    DivisionIdentity,
    PowerCount,
    ResidueReport,
    constant_power_in_extension,
    count_rth_powers,
    discrete_log,
    euler_division_identity,
    euler_exponent_value,
    is_rth_power,
    list_rth_powers,
    power_map_is_bijective,
    rth_root,
)
from .prime_field import PrimeModulus, Residue, fp_arith, fp_inv, fp_pow, is_prime

__version__ = "0.1.0"
