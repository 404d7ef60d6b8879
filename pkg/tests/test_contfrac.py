from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from markov_deform.contfrac import (CFNegative, CFRegular, NonPositive, PolyCF,
                                    ZeroDenominator, cf_convert, cf_convert_back,
                                    cf_negative, cf_regular, polycf_eval,
                                    polycf_expand)
from markov_deform.exact_arith import IntPoly, T, T_ONE, T_ZERO


# --- independent oracle: direct Fraction evaluation --------------------------

def eval_regular(terms) -> Fraction:
    acc = Fraction(terms[-1])
    for a in reversed(terms[:-1]):
        acc = a + 1 / acc
    return acc


def eval_negative(terms) -> Fraction:
    acc = Fraction(terms[-1])
    for c in reversed(terms[:-1]):
        acc = c - 1 / acc
    return acc


fractions = st.tuples(st.integers(1, 500), st.integers(1, 500)).map(
    lambda t: Fraction(t[0], t[1]))


class TestRegular:
    def test_examples(self):
        assert cf_regular(Fraction(5, 2)).terms == (2, 2)
        assert cf_regular(Fraction(8, 13)).terms == (0, 1, 1, 1, 1, 1, 1)
        assert cf_regular(Fraction(7, 3)).terms == (2, 3)
        assert cf_regular(Fraction(7, 5)).terms == (1, 2, 1, 1)
        assert cf_regular(Fraction(7, 4)).terms == (1, 1, 2, 1)
        assert cf_regular(Fraction(2)).terms == (1, 1)
        assert cf_regular(Fraction(1)).terms == (1,)

    def test_rejects_nonpositive(self):
        with pytest.raises(NonPositive):
            cf_regular(Fraction(0))
        with pytest.raises(NonPositive):
            cf_regular(Fraction(-3, 2))

    @given(fractions)
    def test_roundtrip(self, x):
        assert eval_regular(cf_regular(x).terms) == x

    @given(fractions)
    def test_even_tail(self, x):
        terms = cf_regular(x).terms
        if terms == (1,):
            return
        tail = terms[1:] if terms[0] == 0 else terms
        assert len(tail) % 2 == 0
        assert all(a >= 1 for a in tail)

    def test_validation(self):
        with pytest.raises(ValueError):
            CFRegular((2, 0))
        with pytest.raises(ValueError):
            CFRegular((2, 2, 2))
        with pytest.raises(ValueError):
            CFRegular(())


class TestNegative:
    def test_examples(self):
        assert cf_negative(Fraction(5, 2)).terms == (3, 2)
        assert cf_negative(Fraction(7, 5)).terms == (2, 2, 3)
        assert cf_negative(Fraction(2)).terms == (2,)
        assert cf_negative(Fraction(7, 3)).terms == (3, 2, 2)
        assert cf_negative(Fraction(7, 4)).terms == (2, 4)
        assert cf_negative(Fraction(8, 13)).terms == (1, 3, 3, 2)

    @given(fractions)
    def test_roundtrip(self, x):
        assert eval_negative(cf_negative(x).terms) == x

    @given(fractions)
    def test_tail_at_least_two(self, x):
        terms = cf_negative(x).terms
        assert terms[0] >= 1 and all(c >= 2 for c in terms[1:])

    def test_validation(self):
        with pytest.raises(ValueError):
            CFNegative((3, 1))


class TestConvert:
    def test_examples(self):
        assert cf_convert(CFRegular((2, 2))).terms == (3, 2)
        assert cf_convert(CFRegular((1, 1, 1, 1))).terms == (2, 3)
        assert cf_convert_back(CFNegative((2,))).terms == (1, 1)

    # classical splice rule as an independent oracle, for x > 1:
    # [a1, a2, a3, a4, ...] -> [[a1+1, 2 x(a2-1), a3+2, 2 x(a4-1), ...]]
    def splice(self, terms):
        out = [terms[0] + 1]
        for i, a in enumerate(terms[1:], start=1):
            if i % 2 == 1:
                out.extend([2] * (a - 1))
            else:
                out.append(a + 2)
        return tuple(out)

    @given(fractions.filter(lambda x: x > 1))
    @settings(max_examples=60)
    def test_against_splice_rule(self, x):
        reg = cf_regular(x)
        assert cf_convert(reg).terms == self.splice(reg.terms)

    @given(fractions)
    def test_involution(self, x):
        reg = cf_regular(x)
        assert cf_convert_back(cf_convert(reg)) == reg
        neg = cf_negative(x)
        assert cf_convert(cf_convert_back(neg)) == neg


class TestPolyCF:
    def test_inverse_of_t(self):
        num, den = polycf_eval(PolyCF((T_ZERO, T)))
        assert (num, den) == (T_ONE, T)

    def test_zero_denominator(self):
        with pytest.raises(ZeroDenominator):
            polycf_eval(PolyCF((T_ONE, T_ZERO)))

    def test_reduction(self):
        # [t; t] = t + 1/t = (t^2+1)/t, already reduced
        num, den = polycf_eval(PolyCF((T, T)))
        assert num == IntPoly((1, 0, 1)) and den == T

    @given(st.lists(st.builds(IntPoly,
                              st.lists(st.integers(-4, 4), min_size=1, max_size=3).map(tuple))
                    .filter(lambda p: not p.is_zero),
                    min_size=1, max_size=4))
    @settings(max_examples=60)
    def test_expand_eval_roundtrip(self, quots):
        # expansion of an evaluated fraction reproduces the fraction
        try:
            num, den = polycf_eval(PolyCF(tuple(quots)))
        except ZeroDenominator:
            return
        if num.is_zero or den.is_zero:
            return
        try:
            exp = polycf_expand(num, den)
        except Exception:
            return  # rational quotients are out of scope
        n2, d2 = polycf_eval(exp)
        assert n2 * den == d2 * num
