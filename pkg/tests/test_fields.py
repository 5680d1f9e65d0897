from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import GF3, GF5, GF7, GF13, Q, scalars
from desargues import (
    AlreadySquare,
    CharacteristicTwo,
    DivisionByZero,
    FieldMismatch,
    PrimeField,
    QuadExt,
    Rationals,
    common_field,
    extend_with_sqrt,
    is_prime,
    sqrt_in_field,
)


class TestRationals:
    def test_arithmetic(self):
        assert Q(Fraction(1, 2)) + Q(Fraction(1, 3)) == Q(Fraction(5, 6))

    def test_sqrt(self):
        assert sqrt_in_field(Q(Fraction(9, 4))) == Q(Fraction(3, 2))
        assert sqrt_in_field(Q(2)) is None
        assert sqrt_in_field(Q(-1)) is None

    def test_floats_refused(self):
        with pytest.raises(TypeError):
            Q(0.5)

    def test_division_by_zero(self):
        with pytest.raises(DivisionByZero):
            Q(1) / Q(0)
        with pytest.raises(ZeroDivisionError):
            Q(0).inverse()


class TestPrimeField:
    def test_inverse(self):
        assert GF7(3).inverse() == GF7(5)

    def test_characteristic_two_excluded(self):
        with pytest.raises(CharacteristicTwo):
            PrimeField(2)

    @pytest.mark.parametrize("n", [1, 4, 9, 15])
    def test_non_prime_rejected(self, n):
        with pytest.raises(ValueError):
            PrimeField(n)

    @pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
    def test_squares_exhaustive(self, p):
        # oracle: the set of squares by direct squaring
        F = PrimeField(p)
        squares = {(x * x) % p for x in range(p)}
        for a in range(p):
            r = sqrt_in_field(F(a))
            assert (r is not None) == (a in squares)
            if r is not None:
                assert r * r == F(a)

    @pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
    def test_euler_criterion(self, p):
        F = PrimeField(p)
        for a in range(1, p):
            assert F(a).is_square() == (pow(a, (p - 1) // 2, p) == 1)

    def test_large_prime_tonelli_shanks(self):
        p = 1_000_000_007
        F = PrimeField(p)
        for a in (2, 3, 5, 10**6, 123456789):
            r = sqrt_in_field(F(a))
            assert (r is not None) == (pow(a, (p - 1) // 2, p) == 1)
            if r is not None:
                assert r * r == F(a)

    def test_mixing_fields_fails(self):
        with pytest.raises(FieldMismatch):
            GF5(1) + GF7(1)

    def test_is_prime(self):
        assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


class TestQuadExt:
    def test_gf9_every_element_of_gf3_is_square(self):
        F9 = QuadExt(GF3, GF3(2))
        assert F9.order == 9
        for a in range(3):
            assert F9(a).is_square()

    def test_gf9_squares_are_half(self):
        F9 = QuadExt(GF3, GF3(2))
        nonzero = [x for x in F9.elements() if not x.is_zero()]
        assert sum(x.is_square() for x in nonzero) == 4

    def test_gf9_sqrt_exhaustive(self):
        F9 = QuadExt(GF3, GF3(2))
        squares = {x * x for x in F9.elements()}
        for x in F9.elements():
            r = sqrt_in_field(x)
            assert (r is not None) == (x in squares)
            if r is not None:
                assert r * r == x

    def test_gaussian_rationals(self):
        K = extend_with_sqrt(Q, -1)
        i = K.sqrt_d
        assert i * i == K(-1)
        assert sqrt_in_field(K(-1)) in (i, -i)
        assert sqrt_in_field(K((0, 2))) == K((1, 1))  # (1 + i)^2 = 2i

    def test_already_square(self):
        with pytest.raises(AlreadySquare):
            extend_with_sqrt(Q, 4)
        with pytest.raises(AlreadySquare):
            QuadExt(GF5, GF5(4))

    def test_tower(self):
        K = extend_with_sqrt(Q, 2)
        L = extend_with_sqrt(K, 3)
        assert common_field(Q, L) == L
        assert common_field(K, L) == L
        assert L.prime_field == Q
        x = Q(5) + K.sqrt_d + L.sqrt_d
        assert x.field == L

    def test_conjugate_and_norm(self):
        K = extend_with_sqrt(Q, 2)
        x = K((3, 1))
        assert x * x.conjugate() == K(7)


@given(st.data())
def test_embedding_is_a_homomorphism(data):
    F = data.draw(st.sampled_from([GF3, GF5, GF7, Q]))
    d = next(x for x in (F(2), F(3), F(5), F(-1)) if not x.is_zero() and not x.is_square())
    K = QuadExt(F, d)
    a, b = data.draw(scalars(F)), data.draw(scalars(F))
    assert K.embed(a + b) == K.embed(a) + K.embed(b)
    assert K.embed(a * b) == K.embed(a) * K.embed(b)


@given(st.data())
def test_field_axioms(data):
    F = data.draw(st.sampled_from([Q, GF5, GF13]))
    a, b, c = (data.draw(scalars(F)) for _ in range(3))
    assert (a + b) * c == a * c + b * c
    assert a * (b * c) == (a * b) * c
    assert a - a == F.zero
    if not a.is_zero():
        assert a * a.inverse() == F.one


@given(scalars(Q, nonzero=True))
def test_rational_sqrt_of_square(x):
    r = sqrt_in_field(x * x)
    assert r * r == x * x
    assert r.is_canonical_positive()


def test_str_round_trip():
    assert str(Q(Fraction(-3, 4))) == "-3/4"
    assert str(GF13(-1)) == "12"
    assert str(Rationals()) == "Q"
    assert str(GF13) == "GF(13)"
