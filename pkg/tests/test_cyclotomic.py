import cmath
import math
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from as_kit.cyclotomic import (
    CyclotomicNumber,
    FieldMismatch,
    check_odd_prime,
    cyc_add,
    cyc_inverse,
    cyc_mul,
    galois_apply,
    to_complex,
    zeta,
)

from conftest import cyclotomics

X = sympy.Symbol("x")


def to_poly(a):
    return sum(sympy.Rational(c.numerator, c.denominator) * X**i for i, c in enumerate(a.coords))


def from_poly(p, poly):
    poly = sympy.Poly(poly, X)
    coords = [Fraction(0)] * (p - 1)
    for (deg,), c in poly.terms():
        coords[deg] = Fraction(int(c.p), int(c.q))
    return CyclotomicNumber(p, coords)


def phi(p):
    return sum(X**i for i in range(p))


def mul_oracle(a, b):
    p = a.p
    return from_poly(p, sympy.rem(sympy.expand(to_poly(a) * to_poly(b)), phi(p), X))


def inverse_oracle(a):
    p = a.p
    return from_poly(p, sympy.invert(to_poly(a), phi(p), X))


class TestConstruction:
    @pytest.mark.parametrize("bad", [2, 4, 9, 15, 1, 0, -7])
    def test_rejects_non_odd_primes(self, bad):
        with pytest.raises(ValueError):
            CyclotomicNumber(bad)

    def test_rejects_bool_and_float(self):
        with pytest.raises(TypeError):
            check_odd_prime(True)
        with pytest.raises(TypeError):
            check_odd_prime(7.0)

    def test_coordinate_length(self):
        with pytest.raises(ValueError):
            CyclotomicNumber(5, [1, 2, 3])

    def test_from_powers_reduces(self):
        # zeta^4 = -1 - zeta - zeta^2 - zeta^3 for p=5
        assert CyclotomicNumber.from_powers(5, {4: 1}).coords == (-1, -1, -1, -1)
        assert CyclotomicNumber.from_powers(5, {5: 2, -1: 1}) == CyclotomicNumber.from_powers(5, {0: 2, 4: 1})

    def test_canonical_denominator(self):
        a = CyclotomicNumber(5, [Fraction(2, 4), Fraction(3, 6), 0, 0])
        assert a.coords == (Fraction(1, 2), Fraction(1, 2), 0, 0)


class TestAdd:
    def test_additive_inverse(self):
        assert cyc_add(zeta(7), -zeta(7)).is_zero()

    def test_cyclotomic_relation(self):
        total = sum((zeta(5, k) for k in range(5)), CyclotomicNumber(5))
        assert total.is_zero()

    def test_rationals(self):
        s = cyc_add(CyclotomicNumber.rational(7, Fraction(1, 2)), CyclotomicNumber.rational(7, Fraction(1, 3)))
        assert s.coords == (Fraction(5, 6), 0, 0, 0, 0, 0)

    def test_field_mismatch(self):
        with pytest.raises(FieldMismatch, match="field mismatch"):
            cyc_add(zeta(5), zeta(7))
        with pytest.raises(FieldMismatch, match="field mismatch"):
            cyc_mul(zeta(5), zeta(7))


class TestMul:
    def test_powers(self):
        assert cyc_mul(zeta(5, 2), zeta(5, 3)) == 1
        assert cyc_mul(zeta(5, 3), zeta(5, 3)) == zeta(5, 1)

    def test_example_product(self):
        prod = cyc_mul(1 + zeta(5), 1 + zeta(5, 4))
        assert prod.coords == (1, 0, -1, -1)

    @settings(max_examples=60, deadline=None)
    @given(st.data())
    def test_matches_polynomial_oracle(self, data):
        p = data.draw(st.sampled_from([3, 5, 7]))
        a = data.draw(cyclotomics(p))
        b = data.draw(cyclotomics(p))
        assert cyc_mul(a, b) == mul_oracle(a, b)


class TestInverse:
    def test_zeta(self):
        assert cyc_inverse(zeta(7)) == zeta(7, 6)
        assert cyc_inverse(zeta(7)).coords == (-1,) * 6

    def test_one(self):
        one = CyclotomicNumber.rational(11, 1)
        assert cyc_inverse(one) == one

    def test_one_plus_zeta(self):
        a = 1 + zeta(5)
        assert a * cyc_inverse(a) == 1
        assert cyc_inverse(a) == inverse_oracle(a)

    def test_zero(self):
        with pytest.raises(ZeroDivisionError, match="division by zero"):
            cyc_inverse(CyclotomicNumber(7))

    @settings(max_examples=40, deadline=None)
    @given(st.data())
    def test_matches_sympy_inverse(self, data):
        p = data.draw(st.sampled_from([3, 5, 7, 11]))
        a = data.draw(cyclotomics(p))
        if a.is_zero():
            return
        inv = cyc_inverse(a)
        assert a * inv == 1
        assert inv == inverse_oracle(a)


class TestGalois:
    def test_identity(self):
        a = CyclotomicNumber(7, [1, 2, 3, 4, 5, 6])
        assert galois_apply(1, a) == a

    def test_conjugation(self):
        assert galois_apply(6, zeta(7)).coords == (-1,) * 6
        assert galois_apply(6, zeta(7)) == zeta(7).conjugate()

    def test_rejects_zero_exponent(self):
        with pytest.raises(ValueError):
            galois_apply(7, zeta(7))

    def test_trace_of_zeta(self):
        for p in (3, 5, 7, 11, 13):
            total = sum((galois_apply(n, zeta(p)) for n in range(1, p)), CyclotomicNumber(p))
            assert total == -1

    @settings(max_examples=40, deadline=None)
    @given(st.data())
    def test_group_law_and_homomorphism(self, data):
        p = data.draw(st.sampled_from([5, 7, 11]))
        a = data.draw(cyclotomics(p))
        b = data.draw(cyclotomics(p))
        n = data.draw(st.integers(1, p - 1))
        m = data.draw(st.integers(1, p - 1))
        assert galois_apply(n, galois_apply(m, a)) == galois_apply(n * m % p, a)
        assert galois_apply(n, a * b) == galois_apply(n, a) * galois_apply(n, b)
        assert galois_apply(n, a + b) == galois_apply(n, a) + galois_apply(n, b)


class TestFloat:
    def test_one(self):
        assert to_complex(CyclotomicNumber.rational(5, 1)) == 1 + 0j

    def test_golden(self):
        z = to_complex(zeta(5) + zeta(5, 4))
        assert abs(z - 2 * math.cos(2 * math.pi / 5)) < 1e-12
        assert abs(z - 0.618034) < 1e-6

    @settings(max_examples=60, deadline=None)
    @given(st.data())
    def test_embedding_is_homomorphism(self, data):
        p = data.draw(st.sampled_from([5, 7, 11, 13]))
        a = data.draw(cyclotomics(p, bound=100))
        b = data.draw(cyclotomics(p, bound=100))
        za, zb = to_complex(a), to_complex(b)
        assert abs(to_complex(a * b) - za * zb) < 1e-10 * max(1, abs(za * zb))
        assert abs(to_complex(a + b) - (za + zb)) < 1e-10

    def test_zeta_value(self):
        assert abs(to_complex(zeta(7, 3)) - cmath.exp(6j * math.pi / 7)) < 1e-14


@settings(max_examples=50, deadline=None)
@given(st.data())
def test_field_axioms(data):
    p = data.draw(st.sampled_from([3, 5, 7]))
    a, b, c = (data.draw(cyclotomics(p)) for _ in range(3))
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    if not a.is_zero():
        assert a * a.inverse() == 1
        assert (b / a) * a == b


def test_rational_interop_and_hash():
    a = CyclotomicNumber.rational(7, Fraction(3, 4))
    assert a == Fraction(3, 4)
    assert hash(a) == hash(Fraction(3, 4))
    assert a * 4 == 3
    assert 1 - a == Fraction(1, 4)
    assert a.is_rational() and a.rational_value() == Fraction(3, 4)
    assert not zeta(7).is_rational()
    with pytest.raises(ValueError):
        zeta(7).rational_value()


def test_powers_and_negative_powers():
    z = zeta(11)
    assert z ** 11 == 1
    assert z ** -1 == zeta(11, 10)
    a = 2 + z
    assert a ** -2 * a ** 2 == 1


def test_json_roundtrip():
    a = CyclotomicNumber(7, [Fraction(1, 3), -2, 0, Fraction(5, 2), 0, 1])
    obj = a.to_json()
    assert obj["p"] == 7
    for num, den in obj["coords"]:
        assert den > 0 and math.gcd(num, den) == 1
    assert CyclotomicNumber.from_json(obj) == a
