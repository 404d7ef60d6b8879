from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from markov_deform.exact_arith import (IntPoly, L_ONE, L_ZERO, LaurentPoly,
                                       Mat2, NotDivisible, NotInvertible,
                                       RatFunc, T, intpoly_compose_laurent,
                                       laurent_divexact, laurent_eval_at_one,
                                       laurent_mul)


# --- independent oracle: dict-based schoolbook multiplication ---------------

def dict_mul(a: LaurentPoly, b: LaurentPoly) -> dict:
    out: dict[int, int] = {}
    for i, x in enumerate(a.coeffs):
        for j, y in enumerate(b.coeffs):
            e = a.offset + i + b.offset + j
            out[e] = out.get(e, 0) + x * y
    return {e: c for e, c in out.items() if c}


def as_dict(p: LaurentPoly) -> dict:
    return {p.offset + i: c for i, c in enumerate(p.coeffs) if c}


laurents = st.builds(LaurentPoly, st.integers(-5, 5),
                     st.lists(st.integers(-9, 9), max_size=6).map(tuple))
nonzero_laurents = laurents.filter(lambda p: not p.is_zero)
intpolys = st.builds(IntPoly, st.lists(st.integers(-9, 9), max_size=6).map(tuple))


class TestLaurent:
    def test_mul_difference_of_squares(self):
        q_plus_1 = LaurentPoly(0, (1, 1))
        q_minus_1 = LaurentPoly(0, (-1, 1))
        assert laurent_mul(q_plus_1, q_minus_1) == LaurentPoly(0, (-1, 0, 1))

    def test_mul_shift(self):
        p = LaurentPoly(0, (1, 1, 1)) * LaurentPoly.q_power(-1)
        assert p == LaurentPoly(-1, (1, 1, 1))

    def test_mul_two_bracket_squared(self):
        two = LaurentPoly(0, (1, 1))
        prod = laurent_mul(two, two)
        assert as_dict(prod) == dict_mul(two, two) == {0: 1, 1: 2, 2: 1}

    @given(laurents, laurents)
    def test_mul_matches_dict_oracle(self, a, b):
        assert as_dict(a * b) == dict_mul(a, b)

    @given(laurents, laurents, laurents)
    def test_ring_axioms(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c

    @given(laurents, nonzero_laurents)
    def test_divexact_roundtrip(self, a, b):
        assert laurent_divexact(a * b, b) == a

    def test_divexact_constructed_quotient(self):
        p = LaurentPoly(0, (1, 1, 1))
        q = LaurentPoly(0, (-1, 1))
        assert laurent_divexact(p * q, p) == q

    def test_divexact_rejects_remainder(self):
        with pytest.raises(NotDivisible):
            laurent_divexact(LaurentPoly(0, (1, 1)), LaurentPoly(0, (-1, 1)))

    def test_divexact_zero_divisor(self):
        with pytest.raises(ZeroDivisionError):
            laurent_divexact(L_ONE, L_ZERO)

    @given(st.integers(-5, 5), st.lists(st.integers(-9, 9), max_size=6).map(tuple))
    def test_canonical_idempotent(self, off, cs):
        p = LaurentPoly(off, cs)
        assert LaurentPoly(p.offset, p.coeffs) == p

    def test_eval_at_one(self):
        assert laurent_eval_at_one(LaurentPoly(-4, (1, 2, 2, 3, 2, 2, 1))) == 13
        assert laurent_eval_at_one(L_ZERO) == 0

    @given(laurents)
    def test_subs_qinv_involution(self, p):
        assert p.subs_qinv().subs_qinv() == p

    def test_unit_inverse(self):
        u = LaurentPoly.q_power(3, -1)
        assert u.is_unit and u * u.unit_inv() == L_ONE
        with pytest.raises(NotInvertible):
            LaurentPoly(0, (2,)).unit_inv()


class TestIntPoly:
    def test_eval_exact(self):
        p = IntPoly((-1, -1, 1))  # t^2 - t - 1
        assert p.eval(3) == 5
        assert p.eval(Fraction(1, 2)) == Fraction(-5, 4)
        assert IntPoly(()).eval(Fraction(7, 3)) == 0

    @given(intpolys, intpolys, intpolys)
    def test_ring_axioms(self, a, b, c):
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c

    @given(intpolys, intpolys.filter(lambda p: not p.is_zero))
    def test_divexact_roundtrip(self, a, b):
        assert (a * b).divexact(b) == a

    def test_compose(self):
        p = IntPoly((-1, -1, 1))
        x = T * T
        assert p.compose(x) == IntPoly((-1, 0, -1, 0, 1))


class TestRatFunc:
    def test_reduces_common_factor(self):
        p = LaurentPoly(0, (1, 1))
        r = RatFunc(p * LaurentPoly(0, (2, 2)), p * LaurentPoly(0, (2,)))
        assert r == RatFunc(LaurentPoly(0, (1, 1)), L_ONE)

    def test_denominator_offset_moves_to_numerator(self):
        r = RatFunc(L_ONE, LaurentPoly.q_power(-3))
        assert r.num == LaurentPoly.q_power(3) and r.den == L_ONE

    def test_sign_normalization(self):
        r = RatFunc(L_ONE, LaurentPoly(0, (-1, -1)))
        assert r.den.coeffs[-1] > 0

    @given(laurents, nonzero_laurents, nonzero_laurents)
    @settings(max_examples=50)
    def test_scaling_invariance(self, a, b, c):
        assert RatFunc(a * c, b * c) == RatFunc(a, b)

    @given(laurents, nonzero_laurents)
    @settings(max_examples=50)
    def test_add_sub_cancel(self, a, b):
        r = RatFunc(a, b)
        assert (r - r).is_zero
        assert r + r == r * 2

    def test_zero_denominator(self):
        with pytest.raises(ZeroDivisionError):
            RatFunc(L_ONE, L_ZERO)


class TestCompose:
    def test_identity(self):
        s = RatFunc(LaurentPoly(-1, (1, 1, 1)))
        assert intpoly_compose_laurent(T, s) == s

    def test_on_quadratic(self):
        # ((1+q+q^2)/q)^2 - (1+q+q^2)/q - 1, expanded by hand
        s = RatFunc(LaurentPoly(-1, (1, 1, 1)))
        p = IntPoly((-1, -1, 1))
        assert intpoly_compose_laurent(p, s) == RatFunc(LaurentPoly(-2, (1, 1, 1, 1, 1)))

    def test_on_cubic(self):
        # matches the worked substitution for the word a^2 b
        s = RatFunc(LaurentPoly(-1, (1, 1, 1)))
        p = IntPoly((1, -2, -1, 1))
        assert intpoly_compose_laurent(p, s) == RatFunc(LaurentPoly(-3, (1, 2, 2, 3, 2, 2, 1)))


# --- independent oracle: plain-tuple 2x2 integer multiplication -------------

def tup_mul(x, y):
    (a, b, c, d), (e, f, g, h) = x, y
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


class TestMat2:
    def test_integer_product_oracle(self):
        a = Mat2(2, 1, 1, 1)
        b = Mat2(5, 2, 2, 1)
        assert (a * b).entries() == tup_mul(a.entries(), b.entries()) == (12, 5, 7, 3)
        assert (a * b).trace() == 15

    def test_identity(self):
        m = Mat2(LaurentPoly(0, (1, 1)), L_ONE, L_ZERO, LaurentPoly.q_power(-1))
        assert Mat2.identity_like(m) * m == m

    @given(st.lists(laurents, min_size=12, max_size=12))
    @settings(max_examples=40)
    def test_matrix_laws(self, es):
        x, y, z = (Mat2(*es[0:4]), Mat2(*es[4:8]), Mat2(*es[8:12]))
        assert (x * y) * z == x * (y * z)
        assert (x * y).det() == x.det() * y.det()
        assert (x * y).trace() == (y * x).trace()

    def test_inverse_requires_unit(self):
        with pytest.raises(NotInvertible):
            Mat2(2, 0, 0, 2).inverse()

    def test_inverse_laurent(self):
        m = Mat2(LaurentPoly(0, (1, 1)), LaurentPoly.q_power(-1),
                 L_ONE, LaurentPoly.q_power(-1))
        assert m.det() == L_ONE
        assert m * m.inverse() == Mat2.identity_like(m)

    def test_pow(self):
        a = Mat2(2, 1, 1, 1)
        assert (a ** 4).entries() == tup_mul(tup_mul(a.entries(), a.entries()),
                                             tup_mul(a.entries(), a.entries()))
        assert (a ** 0).entries() == (1, 0, 0, 1)


class TestJson:
    def test_laurent_roundtrip(self):
        p = LaurentPoly(-3, (1, 0, -2, 7))
        assert LaurentPoly.from_obj(p.to_obj()) == p
        assert p.to_obj() == {"offset": -3, "coeffs": ["1", "0", "-2", "7"]}

    def test_intpoly_roundtrip(self):
        p = IntPoly((5, 0, -1))
        assert IntPoly.from_obj(p.to_obj()) == p

    def test_ratfunc_roundtrip(self):
        r = RatFunc(LaurentPoly(-1, (1, 1, 1)), LaurentPoly(0, (1, 1)))
        assert RatFunc.from_obj(r.to_obj()) == r

    def test_mat2_row_major(self):
        m = Mat2(1, 2, 3, 4)
        assert m.to_obj() == ["1", "2", "3", "4"]
