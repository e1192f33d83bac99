import random
from math import gcd

import pytest

from fqpower.errors import DomainError
from fqpower.ext_field import (
    enumerate_units,
    find_generator,
    format_element,
    make_field,
    parse_element,
)
from fqpower.oracle import brute_roots, brute_rth_powers
from fqpower.polynomial import Poly
from fqpower.power_residues import (
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
from fqpower.prime_field import PrimeModulus
from helpers import naive_divmod


@pytest.fixture(scope="module")
def f9():
    return make_field(3, 2, "t^2+1")


@pytest.fixture(scope="module")
def f25():
    return make_field(5, 2, "t^2+t+1")


@pytest.fixture(scope="module")
def f2197():
    return make_field(13, 3, "t^3+2*t+11")


def E(spec, text):
    return parse_element(spec, text)


def test_euler_exponent_value(f2197):
    assert euler_exponent_value(E(f2197, "5+t+8*t^2"), 2) == f2197.one
    assert euler_exponent_value(E(f2197, "5+3*t+7*t^2"), 61) == f2197.one
    f5 = make_field(5)
    assert euler_exponent_value(f5(2), 2) == f5(4)
    with pytest.raises(DomainError):
        euler_exponent_value(f2197.one, 5)
    with pytest.raises(DomainError):
        euler_exponent_value(f2197.zero, 2)


def test_euler_value_is_root_of_unity(f25):
    for a in enumerate_units(f25):
        for r in (2, 3, 4, 6, 8, 12):
            assert euler_exponent_value(a, r) ** r == f25.one


def test_is_rth_power_examples(f2197, f25):
    rep = is_rth_power(E(f2197, "5+7*t"), 12)
    assert rep.is_power and rep.d == 12 and rep.num_roots == 12
    assert rep.canonical_root ** 12 == E(f2197, "5+7*t")
    assert not is_rth_power(f25(2), 4).is_power
    assert is_rth_power(f25(4), 4).is_power


def test_ninth_powers_are_cubes(f25):
    ninth = brute_rth_powers(f25, 9)
    assert ninth == brute_rth_powers(f25, 3)
    assert len(ninth) == 8
    for a in enumerate_units(f25):
        assert is_rth_power(a, 9).is_power == (a in ninth)


def test_zero_policy(f9):
    rep = is_rth_power(f9.zero, 4)
    assert rep.is_power and rep.num_roots == 1 and rep.canonical_root == f9.zero
    assert rth_root(f9.zero, 3) == (f9.zero, 1)


def test_report_record(f2197):
    rec = is_rth_power(E(f2197, "5+t+8*t^2"), 2).to_record()
    assert rec == {
        "field": "F(13^3; t^3+2*t+11)", "element": "5+t+8*t^2", "r": "2", "d": "2",
        "euler_value": "1", "is_power": "true", "num_roots": "2", "root": "7+t+2*t^2"}
    assert is_rth_power(make_field(5)(2), 2).to_record()["root"] == "NONE"


def test_count_examples(f9, f25):
    assert count_rth_powers(f9, 2).total == 4
    assert count_rth_powers(f9, 2).nontrivial_squares == 3
    squares = {x * x % 13 for x in range(1, 13)}
    assert squares == {1, 3, 4, 9, 10, 12}
    assert count_rth_powers(make_field(13), 2).nontrivial_squares == len(squares) - 1 == 5
    assert count_rth_powers(f25, 12).total == 2
    assert count_rth_powers(f25, 5).nontrivial_squares is None


def test_count_characteristic_two():
    spec = make_field(2, 4)
    counts = count_rth_powers(spec, 2)
    assert counts.total == 15 and counts.nontrivial_squares == 14 and counts.outside_hypothesis
    assert len(brute_rth_powers(spec, 2)) == 15
    assert power_map_is_bijective(spec, 2)


def test_list_examples(f9, f25):
    assert [format_element(x) for x in list_rth_powers(f9, 2)] == ["1", "2", "t", "2*t"]
    sixth = list_rth_powers(f25, 6)
    assert {f25(2), f25(3), f25(4)} <= set(sixth)
    for spec in (f9, f25, make_field(7, 2)):
        assert list_rth_powers(spec, spec.q - 1) == [spec.one]


def test_discrete_log_examples(f9, f2197):
    gamma = find_generator(f9)
    assert discrete_log(f9.one) == 8
    assert discrete_log(gamma) == 1
    x, k = gamma, 1
    while x != f9(2):
        x, k = x * gamma, k + 1
    assert k == 4 and discrete_log(f9(2)) == 4
    g = find_generator(f2197)
    for k in (1, 2, 100, 1098, 2195, 2196):
        assert discrete_log(g ** k) == k


def test_rth_root_examples(f9, f2197):
    assert rth_root(f9(2), 2) == (f9.gen, 2)
    a = E(f2197, "5+3*t+7*t^2")
    root, count = rth_root(a, 61)
    assert count == 61 and root ** 61 == a
    roots = brute_roots(f2197, a, 61)
    assert E(f2197, "6+2*t") in roots
    assert root == roots[0] == E(f2197, "6+2*t")
    f5 = make_field(5)
    assert rth_root(f5(2), 2) == (None, 0)


@pytest.mark.parametrize("p, n", [(2, 3), (3, 2), (3, 3), (5, 2), (7, 2), (2, 6), (11, 1)])
def test_oracle_equivalence_exhaustive_small(p, n):
    spec = make_field(p, n)
    for r in range(1, spec.q):
        powers = list_rth_powers(spec, r)
        assert powers == brute_rth_powers(spec, r)
        assert len(powers) == (spec.q - 1) // gcd(r, spec.q - 1)
        assert len(powers) == count_rth_powers(spec, r).total
        members = set(powers)
        for a in enumerate_units(spec):
            rep = is_rth_power(a, r)
            assert rep.is_power == (a in members)
            roots = brute_roots(spec, a, r)
            assert rep.num_roots == len(roots)
            if roots:
                assert rep.canonical_root == roots[0]


def test_division_identity_q9_a2(f9):
    ident = euler_division_identity(f9, f9(2), 2)
    quot, rem = naive_divmod([0, 2] + [0] * 7 + [1], [1, 0, 1], 3)
    assert quot == [0, 2, 0, 1, 0, 2, 0, 1] and rem == []
    assert ident.h == Poly(f9, [f9(c) for c in quot])
    assert ident.format_h() == "x^7+2*x^5+x^3+2*x"
    assert ident.remainder_coeff == f9.zero and ident.verified


def test_division_identity_q9_a_t(f9):
    ident = euler_division_identity(f9, f9.gen, 2)
    assert f9.gen ** 4 == f9.one
    assert ident.remainder_coeff == f9.zero and ident.verified
    assert E(f9, "1+2*t") ** 2 == f9.gen


def test_division_identity_q25_r4_a2(f25):
    ident = euler_division_identity(f25, f25(2), 4)
    quot, rem = naive_divmod([0, 4] + [0] * 23 + [1], [3, 0, 0, 0, 1], 5)
    assert rem == [0, 3]
    assert ident.remainder_coeff == f25(3)
    assert ident.verified
    assert ident.h == Poly(f25, [f25(c) for c in quot])


def test_division_identity_errors_and_cap(f25, f2197):
    with pytest.raises(DomainError):
        euler_division_identity(f25, f25(2), 5)
    with pytest.raises(DomainError):
        euler_division_identity(f25, f25.zero, 4)
    ident = euler_division_identity(f2197, f2197(12), 2, degree_cap=1000)
    assert ident.h is None and ident.verified is None
    assert ident.remainder_coeff == f2197.zero
    terms = list(ident.h_terms())
    assert terms[0] == (2195, f2197.one) and terms[-1] == (1, f2197(12) ** 1097)


@pytest.mark.parametrize("p, n", [(3, 2), (5, 2), (2, 4), (7, 2)])
def test_division_identity_all_units(p, n):
    spec = make_field(p, n)
    for r in [d for d in range(1, spec.q) if (spec.q - 1) % d == 0]:
        for a in enumerate_units(spec):
            ident = euler_division_identity(spec, a, r)
            assert ident.verified
            assert (not ident.remainder_coeff) == is_rth_power(a, r).is_power


def test_tower_examples():
    assert constant_power_in_extension(3, 2, 2, 2)
    assert not constant_power_in_extension(3, 2, 3, 2)
    assert not constant_power_in_extension(3, 2, 1, 2)
    for n in range(1, 13):
        assert constant_power_in_extension(3, 2, n, 2) == (n % 2 == 0)


def test_tower_square_closed_form():
    # for r = 2 the reduced exponent is n*(p-1)/2 mod (p-1)
    for p in (3, 5, 7, 11, 13, 101):
        mod = PrimeModulus(p)
        for c in range(1, min(p, 20)):
            for n in range(1, 10):
                expected = pow(c, n * (p - 1) // 2 % (p - 1), p) == 1
                assert constant_power_in_extension(mod, c, n, 2) == expected


def test_tower_agrees_with_explicit_extension():
    for p in (2, 3, 5, 7, 11, 13):
        n = 1
        while p**n <= 3**6:
            spec = make_field(p, n)
            for r in sorted({1, 2, 3, 4, 5, 6, 8, 9, 12, 13, spec.q - 1, spec.q + 1}):
                for c in range(1, p):
                    assert constant_power_in_extension(p, c, n, r) == is_rth_power(spec(c), r).is_power
            n += 1


def test_tower_rejects_zero():
    with pytest.raises(DomainError):
        constant_power_in_extension(3, 0, 2, 2)


def test_bijectivity_remark():
    spec = make_field(5, 2)
    assert not power_map_is_bijective(spec, 9)
    assert power_map_is_bijective(spec, 5)
    assert power_map_is_bijective(spec, 7)


def test_root_soundness_random():
    rng = random.Random(17)
    specs = [make_field(p, n) for p, n in [(3, 4), (5, 3), (2, 7), (31, 2), (1009, 1)]]
    for _ in range(300):
        spec = rng.choice(specs)
        r = rng.randint(1, 2 * spec.q)
        a = spec.from_index(rng.randrange(1, spec.q))
        if rng.random() < 0.5:
            a = a ** r
        root, count = rth_root(a, r)
        if root is not None:
            assert root ** r == a
            assert count == gcd(r, spec.q - 1)
        else:
            assert count == 0


def test_capped_identity_formats_like_full(f9):
    for a in (f9(2), f9.gen, f9.gen + 1):
        for r in (1, 2, 4, 8):
            full = euler_division_identity(f9, a, r)
            capped = euler_division_identity(f9, a, r, degree_cap=1)
            assert capped.verified is None and full.verified
            assert capped.format_h() == full.format_h()
            assert capped.remainder_coeff == full.remainder_coeff
