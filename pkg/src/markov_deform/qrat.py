"""q-deformed rationals via continued fractions.

A positive rational r/s with regular expansion [a1, ..., a2m] and negative
expansion [[c1, ..., ck]] deforms to a fraction R(q)/S(q) of polynomials in
q with nonnegative coefficients; the two expansion routes agree and both
specialize to r/s at q = 1.  The regular route alternates the q-bracket base
between q and q^-1 down the nested fraction:

    [a1, a2, ...]_q = [a1]_q + q^a1 / ([a2]_{q^-1} + q^-a2 / (...))

while the negative route keeps base q with subtracted layers:

    [[c1, c2, ...]]_q = [c1]_q - q^(c1-1) / ([c2]_q - q^(c2-1) / (...)).

Matrix forms of both routes are provided.  Note the per-term matrix of the
regular route carries +q^(-a_2m) in its final factor: that sign is forced by
the generator product R^a1 L^a2 ... and by the worked 5/2 and 2/1 values
(a minus sign there reproduces neither); the erratum ledger records this.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .contfrac import CFNegative, CFRegular, cf_negative, cf_regular
from .exact_arith import (L_ONE, L_ZERO, LaurentPoly, Mat2, RatFunc)


def q_int(a: int) -> LaurentPoly:
    """q-integer [a]_q = 1 + q + ... + q^(a-1); [0]_q = 0."""
    if a < 0:
        raise ValueError(f"q-integer of negative {a}")
    return LaurentPoly(0, (1,) * a)


def q_int_inv(a: int) -> LaurentPoly:
    """[a]_{q^-1} = 1 + q^-1 + ... + q^-(a-1)."""
    return q_int(a).subs_qinv()


Q3 = q_int(3)

R_Q = Mat2(LaurentPoly.q_power(1), L_ONE, L_ZERO, L_ONE)
L_Q = Mat2(L_ONE, L_ZERO, L_ONE, LaurentPoly.q_power(-1))
S_Q = Mat2(L_ZERO, LaurentPoly.q_power(-1, -1), L_ONE, L_ZERO)


@dataclass(frozen=True)
class QRational:
    """Canonical numerator/denominator pair of a q-deformed rational.

    Both parts are ordinary polynomials in q (no negative exponents), the
    smaller of the two lowest exponents is 0, the integer content is 1 and
    the denominator's leading coefficient is positive.
    """

    num: LaurentPoly
    den: LaurentPoly

    @staticmethod
    def from_pair(num: LaurentPoly, den: LaurentPoly) -> "QRational":
        r = RatFunc(num, den)
        n, d = r.num, r.den
        lift = min(n.offset, d.offset)
        if lift:
            n, d = n.shift(-lift), d.shift(-lift)
        return QRational(n, d)

    def at_one(self) -> Fraction:
        return Fraction(self.num.eval_at_one(), self.den.eval_at_one())

    def as_ratfunc(self) -> RatFunc:
        return RatFunc(self.num, self.den)

    def __str__(self) -> str:
        return f"({self.num}) / ({self.den})"

    def to_obj(self) -> dict:
        return {"num": self.num.to_obj(), "den": self.den.to_obj()}


def _reg_bracket(i: int, a: int) -> LaurentPoly:
    return q_int(a) if i % 2 == 0 else q_int_inv(a)


def _reg_unit(i: int, a: int) -> LaurentPoly:
    return LaurentPoly.q_power(a if i % 2 == 0 else -a)


def q_rational_regular(cf: CFRegular) -> QRational:
    """Evaluate the alternating-base nested fraction of a regular expansion."""
    terms = cf.terms
    n = len(terms)
    num, den = _reg_bracket(n - 1, terms[n - 1]), L_ONE
    for i in range(n - 2, -1, -1):
        num, den = _reg_bracket(i, terms[i]) * num + _reg_unit(i, terms[i]) * den, num
    return QRational.from_pair(num, den)


def q_rational_negative(cf: CFNegative) -> QRational:
    """Evaluate the subtracted nested fraction of a negative expansion."""
    terms = cf.terms
    num, den = q_int(terms[-1]), L_ONE
    for c in reversed(terms[:-1]):
        num, den = q_int(c) * num - LaurentPoly.q_power(c - 1) * den, num
    return QRational.from_pair(num, den)


def q_rational(x: Fraction, via: str = "regular") -> QRational:
    """q-deform a positive rational through the chosen expansion route."""
    if via == "regular":
        return q_rational_regular(cf_regular(x))
    if via == "negative":
        return q_rational_negative(cf_negative(x))
    if via == "matrix":
        m = mq_neg(cf_negative(x))
        return QRational.from_pair(m.a11, m.a21)
    raise ValueError(f"unknown route {via!r}")


def mq_plus(cf: CFRegular) -> Mat2:
    """Product of per-term matrices [[bracket_i, q^(+-a_i)], [1, 0]].

    The first column is a q-power multiple of (num, den) of the q-rational;
    the second column is the one-shorter convergent, scaled the same way.
    On even-length term lists the factors pair up as R^a L^b, so the whole
    product equals generator_product entrywise.
    """
    m = Mat2(L_ONE, L_ZERO, L_ZERO, L_ONE)
    for i, a in enumerate(cf.terms):
        m = m * Mat2(_reg_bracket(i, a), _reg_unit(i, a), L_ONE, L_ZERO)
    return m


def mq_neg(cf: CFNegative) -> Mat2:
    """Product of [[ [c_i]_q, -q^(c_i - 1)], [1, 0]]; first column is (num, den)."""
    m = Mat2(L_ONE, L_ZERO, L_ZERO, L_ONE)
    for c in cf.terms:
        m = m * Mat2(q_int(c), LaurentPoly.q_power(c - 1, -1), L_ONE, L_ZERO)
    return m


def generator_product(terms) -> Mat2:
    """R^a1 L^a2 R^a3 ... over the generators R = [[q,1],[0,1]], L = [[1,0],[1,1/q]]."""
    m = Mat2(L_ONE, L_ZERO, L_ZERO, L_ONE)
    if isinstance(terms, CFRegular):
        terms = terms.terms
    for i, a in enumerate(terms):
        g = R_Q if i % 2 == 0 else L_Q
        for _ in range(a):
            m = m * g
    return m


def neg_generator_product(cf: CFNegative) -> Mat2:
    """R^c1 S R^c2 S ... R^ck S; equals mq_neg factor by factor."""
    m = Mat2(L_ONE, L_ZERO, L_ZERO, L_ONE)
    for c in cf.terms:
        m = m * (R_Q ** c) * S_Q
    return m
