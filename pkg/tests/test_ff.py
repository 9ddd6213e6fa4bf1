"""Finite field arithmetic: prime fields, extensions, towers."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from divpattern.ff import (
    FieldElement,
    FieldError,
    embed,
    extension_with_modulus,
    is_square,
    make_extension,
    make_prime_field,
    multiplicative_order,
    sqrt,
)

F13 = make_prime_field(13)
F13_2 = make_extension(F13, 2)
F13_3 = make_extension(F13, 3)


def elems(field, seed=0, count=40):
    rng = random.Random(seed)
    return [
        FieldElement(field, field.rep_from_index(rng.randrange(field.cardinality)))
        for _ in range(count)
    ]


def test_make_prime_field_rejects_bad_characteristic():
    with pytest.raises(FieldError, match="composite"):
        make_prime_field(15)
    with pytest.raises(FieldError):
        make_prime_field(2)
    with pytest.raises(FieldError, match="exceed 3"):
        make_prime_field(3)


def test_prime_field_basics():
    f = F13
    assert f.cardinality == 13
    assert f.elem(5) + f.elem(11) == f.elem(3)
    assert f.elem(5) * f.elem(8) == f.elem(1)
    assert f.elem(5) ** -1 == f.elem(8)
    assert -f.elem(5) == f.elem(8)
    with pytest.raises(ZeroDivisionError):
        f.elem(0) ** -1


@given(st.integers(0, 12), st.integers(0, 12), st.integers(0, 12))
def test_prime_field_ring_axioms(a, b, c):
    x, y, z = F13.elem(a), F13.elem(b), F13.elem(c)
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z


def test_extension_field_cardinality_and_modulus():
    assert F13_2.cardinality == 169
    assert F13_2.characteristic == 13
    assert F13_2.degree == 2
    # modulus is stored constant-term-first and monic
    assert F13_2.modulus[-1] == 1
    assert len(F13_2.modulus) == 3


def test_extension_arithmetic_against_modulus_relation():
    # u satisfies the modulus, so u**2 = -(c0 + c1 u)
    u = FieldElement(F13_2, F13_2.rep_from_index(13))
    c0, c1, _ = F13_2.modulus
    expected = -(embed(F13.elem(c0), F13_2) + F13.elem(c1).rep * u)
    assert u * u == expected


def test_extension_inverse_round_trip():
    for x in elems(F13_2, seed=1):
        if x.is_zero():
            continue
        assert x * x**-1 == F13_2.one


def test_extension_frobenius_fixes_prime_subfield():
    for a in range(13):
        x = embed(F13.elem(a), F13_3)
        assert x**13 == x


def test_tower_embedding_is_a_ring_map():
    for x in elems(F13, seed=2, count=10):
        for y in elems(F13, seed=3, count=10):
            assert embed(x + y, F13_2) == embed(x, F13_2) + embed(y, F13_2)
            assert embed(x * y, F13_2) == embed(x, F13_2) * embed(y, F13_2)


def test_embed_rejects_unrelated_fields():
    other = make_prime_field(17)
    with pytest.raises(FieldError):
        embed(F13.elem(1), other)


def test_extension_with_modulus_quadratic_tower():
    # K[s]/(s^2 - nu) for a non-residue nu doubles the degree
    nu = next(
        FieldElement(F13_2, F13_2.rep_from_index(i))
        for i in range(1, 30)
        if not is_square(FieldElement(F13_2, F13_2.rep_from_index(i)))
    )
    L = extension_with_modulus(F13_2, ((-nu).rep, F13_2.zero_rep, F13_2.one_rep))
    assert L.cardinality == 13**4
    s = FieldElement(L, L.rep_from_index(F13_2.cardinality))
    assert s * s == embed(nu, L)


def test_multiplicative_order_divides_group_order():
    for field in (F13, F13_2, F13_3):
        for x in elems(field, seed=4, count=15):
            if x.is_zero():
                continue
            n = multiplicative_order(x)
            assert (field.cardinality - 1) % n == 0
            assert x**n == field.one
            # minimality over the prime divisors of n
            for r in {d for d in range(2, n + 1) if n % d == 0}:
                assert x ** (n // r) != field.one or (n // r) % 1


def test_multiplicative_order_of_generator_exists():
    # GF(13): 2 generates the full group of order 12
    assert multiplicative_order(F13.elem(2)) == 12


def test_is_square_matches_euler_criterion():
    for field in (F13, F13_2, F13_3):
        q = field.cardinality
        for x in elems(field, seed=5, count=25):
            euler = x.is_zero() or field.pow(x.rep, (q - 1) // 2) == field.one_rep
            assert is_square(x) == euler


def test_is_square_counts():
    squares = sum(is_square(F13.elem(a)) for a in range(13))
    assert squares == 1 + (13 - 1) // 2


@pytest.mark.parametrize("field", [F13, F13_2, F13_3], ids=["p", "p2", "p3"])
def test_sqrt_round_trip(field):
    for x in elems(field, seed=6, count=20):
        r = sqrt(x)
        if is_square(x):
            assert r is not None and r * r == x
        else:
            assert r is None


@settings(max_examples=60)
@given(st.integers(0, 13**2 - 1), st.integers(0, 13**2 - 1))
def test_extension_mul_commutes(i, j):
    x = FieldElement(F13_2, F13_2.rep_from_index(i))
    y = FieldElement(F13_2, F13_2.rep_from_index(j))
    assert x * y == y * x


def test_field_equality_is_structural():
    assert make_prime_field(13) == F13
    assert make_extension(make_prime_field(13), 2) == F13_2
    assert F13 != F13_2
