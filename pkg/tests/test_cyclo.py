import random
from fractions import Fraction

import pytest

from hopfsl2.cyclo import (
    CycScalar,
    DivisionByZero,
    IncompatibleModulus,
    cyclotomic_polynomial,
    euler_phi,
    nth_root_of_unity_multiple,
    parse_scalar,
    rational,
    root_of_unity,
)


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
    assert euler_phi(36) == 12


def test_root_of_unity_basics():
    i = root_of_unity(4, 1)
    assert i * i == -1
    assert root_of_unity(3, 3) == 1
    # compatibility of embeddings
    assert root_of_unity(12, 4) == root_of_unity(3, 1)


def test_vanishing_sum_of_fifth_roots():
    s = rational(1)
    for k in range(1, 5):
        s = s + root_of_unity(5, k)
    assert s.is_zero()


def test_inverse_of_root():
    for n in (3, 5, 8):
        z = root_of_unity(n, 1)
        assert z.inv() == root_of_unity(n, n - 1)


def _random_scalar(rng, m):
    phi = euler_phi(m)
    return CycScalar(m, [Fraction(rng.randint(-3, 3), rng.randint(1, 4)) for _ in range(phi)])


def test_field_axioms_random():
    rng = random.Random(11)
    for _ in range(100):
        m = rng.choice([4, 5, 6, 12])
        x, y, z = (_random_scalar(rng, m) for _ in range(3))
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert x * y == y * x


def test_inverse_random():
    rng = random.Random(5)
    count = 0
    while count < 100:
        x = _random_scalar(rng, rng.choice([5, 8, 12]))
        if x.is_zero():
            continue
        count += 1
        assert x * x.inv() == 1
    with pytest.raises(DivisionByZero):
        rational(0).inv()


def test_embed_is_ring_homomorphism():
    rng = random.Random(7)
    for _ in range(50):
        x = _random_scalar(rng, 6)
        y = _random_scalar(rng, 6)
        assert (x * y).embed(24) == x.embed(24) * y.embed(24)
        assert (x + y).embed(24) == x.embed(24) + y.embed(24)
    with pytest.raises(IncompatibleModulus):
        _random_scalar(rng, 6).embed(8)


def test_multiplicative_order():
    assert (-rational(1)).multiplicative_order() == 2
    assert root_of_unity(6, 1).multiplicative_order() == 6
    assert root_of_unity(12, 8).multiplicative_order() == 3
    assert rational(2).multiplicative_order() is None
    assert (root_of_unity(5, 1) + 1).multiplicative_order() is None


def test_serialize_roundtrip_random():
    rng = random.Random(3)
    for _ in range(50):
        x = _random_scalar(rng, rng.choice([1, 4, 9, 12]))
        text = x.serialize()
        y = parse_scalar(text)
        assert y == x
        assert y.serialize() == text


def test_rational_multiple_decomposition():
    z = root_of_unity(8, 3) * Fraction(3, 7)
    r, k, L = z.as_rational_multiple_of_root()
    assert rational(r) * root_of_unity(L, k) == z
    assert (root_of_unity(5, 1) + 1).as_rational_multiple_of_root() is None


def test_nth_root_helper():
    x = rational(8) * root_of_unity(3, 1)
    y = nth_root_of_unity_multiple(x, 3)
    assert y is not None and y**3 == x
    assert nth_root_of_unity_multiple(rational(2), 3) is None


def test_canonical_zero_and_equality_across_moduli():
    a = root_of_unity(12, 4) - root_of_unity(3, 1)
    assert a.is_zero()
    assert rational(Fraction(1, 2), 8) == rational(Fraction(1, 2), 6)
