from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from markov_deform.contfrac import CFNegative, CFRegular, cf_negative, cf_regular
from markov_deform.exact_arith import L_ONE, L_ZERO, LaurentPoly, Mat2
from markov_deform.qrat import (QRational, R_Q, L_Q, S_Q, generator_product,
                                mq_neg, mq_plus, neg_generator_product, q_int,
                                q_int_inv, q_rational, q_rational_negative,
                                q_rational_regular)


def qr(num_coeffs, den_coeffs) -> QRational:
    return QRational(LaurentPoly(0, num_coeffs), LaurentPoly(0, den_coeffs))


def test_q_int():
    assert q_int(0) == L_ZERO
    assert q_int(3) == LaurentPoly(0, (1, 1, 1))
    assert q_int(2).eval_at_one() == 2
    assert q_int_inv(3) == LaurentPoly(-2, (1, 1, 1))
    with pytest.raises(ValueError):
        q_int(-1)


class TestEvaluators:
    def test_regular_examples(self):
        assert q_rational_regular(CFRegular((2, 2))) == qr((1, 2, 1, 1), (1, 1))
        assert q_rational_regular(CFRegular((1, 1, 1, 1))) == qr((1, 1, 2, 1), (1, 1, 1))
        assert q_rational_regular(CFRegular((1, 1))) == qr((1, 1), (1,))

    def test_negative_examples(self):
        assert q_rational_negative(CFNegative((3, 2))) == qr((1, 2, 1, 1), (1, 1))
        assert q_rational_negative(CFNegative((2, 4))) == qr((1, 1, 2, 2, 1), (1, 1, 1, 1))
        assert q_rational_negative(CFNegative((2,))) == qr((1, 1), (1,))

    @given(st.integers(1, 60), st.integers(1, 60))
    @settings(max_examples=120)
    def test_agreement_and_specialization(self, r, s):
        if gcd(r, s) != 1:
            return
        x = Fraction(r, s)
        a = q_rational_regular(cf_regular(x))
        b = q_rational_negative(cf_negative(x))
        assert a == b
        assert a.at_one() == x

    def test_via_matrix_route(self):
        x = Fraction(7, 3)
        assert q_rational(x, via="matrix") == q_rational(x, via="regular")


class TestMatrices:
    def test_generators(self):
        assert R_Q == Mat2(LaurentPoly.q_power(1), L_ONE, L_ZERO, L_ONE)
        assert R_Q.det() == LaurentPoly.q_power(1)
        assert L_Q.det() == LaurentPoly.q_power(-1)
        assert S_Q.det() == LaurentPoly.q_power(-1)

    def test_products_give_cohn_generators(self):
        a_q = generator_product((1, 1))
        assert a_q == Mat2(LaurentPoly(0, (1, 1)), LaurentPoly.q_power(-1),
                           L_ONE, LaurentPoly.q_power(-1))
        b_q = generator_product((2, 2))
        assert b_q == Mat2(LaurentPoly(-1, (1, 2, 1, 1)), LaurentPoly(-2, (1, 1)),
                           LaurentPoly(-1, (1, 1)), LaurentPoly(-2, (1,)))
        assert b_q.det() == L_ONE
        # the other printed variant of the (1,2) entry breaks unimodularity
        b_wrong = Mat2(b_q.a11, LaurentPoly(-1, (1, 1)), b_q.a21, b_q.a22)
        assert b_wrong.det() != L_ONE

    def test_empty_product_is_identity(self):
        assert generator_product(()) == Mat2(L_ONE, L_ZERO, L_ZERO, L_ONE)

    def test_mq_plus_equals_generator_product(self):
        # an even-length statement: the per-term factors pair up as R^a L^b
        for terms in [(1, 1), (2, 2), (2, 3), (1, 1, 2, 1), (3, 1, 4, 1)]:
            assert mq_plus(CFRegular(terms)) == generator_product(terms)

    @given(st.lists(st.integers(1, 5), min_size=2, max_size=8).filter(
        lambda l: len(l) % 2 == 0))
    @settings(max_examples=50)
    def test_mq_plus_generator_property(self, terms):
        cf = CFRegular(tuple(terms))
        m = mq_plus(cf)
        assert m == generator_product(cf)
        # determinant law: q to the alternating term sum
        alt = sum(terms[0::2]) - sum(terms[1::2])
        assert m.det() == LaurentPoly.q_power(alt)

    @given(st.lists(st.integers(1, 5), min_size=2, max_size=8).filter(
        lambda l: len(l) % 2 == 0))
    @settings(max_examples=50)
    def test_first_column_is_unit_multiple(self, terms):
        cf = CFRegular(tuple(terms))
        m = mq_plus(cf)
        v = q_rational_regular(cf)
        # cross-multiplied equality plus a shared q-power unit
        assert m.a11 * v.den == m.a21 * v.num
        u = m.a11.divexact(v.num)
        assert u.is_unit and m.a21 == u * v.den

    def test_mq_neg_first_column(self):
        m = mq_neg(CFNegative((3, 2)))
        assert (m.a11, m.a21) == (LaurentPoly(0, (1, 2, 1, 1)), LaurentPoly(0, (1, 1)))
        m = mq_neg(CFNegative((2,)))
        assert m == Mat2(LaurentPoly(0, (1, 1)), LaurentPoly.q_power(1, -1),
                         L_ONE, L_ZERO)
        m = mq_neg(CFNegative((2, 3)))
        assert (m.a11, m.a21) == (LaurentPoly(0, (1, 1, 2, 1)), LaurentPoly(0, (1, 1, 1)))

    @given(st.lists(st.integers(2, 5), min_size=1, max_size=6))
    @settings(max_examples=50)
    def test_neg_generator_product(self, terms):
        cf = CFNegative(tuple(terms))
        assert neg_generator_product(cf) == mq_neg(cf)

    @given(st.integers(1, 40), st.integers(1, 40))
    @settings(max_examples=60)
    def test_mq_neg_column_matches_value(self, r, s):
        if gcd(r, s) != 1:
            return
        x = Fraction(r, s)
        cf = cf_negative(x)
        m = mq_neg(cf)
        v = q_rational_negative(cf)
        assert QRational.from_pair(m.a11, m.a21) == v
