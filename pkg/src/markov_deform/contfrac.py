"""Continued-fraction expansions of positive rationals.

Two normal forms are used throughout:

* regular:   x = a1 + 1/(a2 + 1/(... + 1/ak))        with a_i >= 1,
* negative:  x = c1 - 1/(c2 - 1/(... - 1/ck))        with c1 >= 1, c_i >= 2.

The regular form is normalized so the number of terms after the optional
leading zero (present exactly when x < 1) is even; x = 1 is the single
exception and expands to the one-term list [1].  Both expansions evaluate
back to x exactly.  A third kind, ``PolyCF``, has polynomial partial
quotients in t and evaluates in the rational function field.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact_arith import IntPoly, T_ONE, T_ZERO, _seq_divexact, _seq_gcd


class NonPositive(ValueError):
    """Continued-fraction expansion requested for x <= 0."""


class ZeroDenominator(ArithmeticError):
    """A polynomial continued fraction hit a zero intermediate denominator."""


@dataclass(frozen=True)
class CFRegular:
    """Regular continued fraction; even term count after an optional leading 0."""

    terms: tuple[int, ...]

    def __post_init__(self):
        t = tuple(self.terms)
        object.__setattr__(self, "terms", t)
        if not t:
            raise ValueError("empty continued fraction")
        if t[0] < 0 or any(v < 1 for v in t[1:]):
            raise ValueError(f"invalid regular terms {t}")
        tail = len(t) - 1 if t[0] == 0 else len(t)
        if tail % 2 and t != (1,):
            raise ValueError(f"term count after leading zero must be even: {t}")

    def value(self) -> Fraction:
        acc = Fraction(self.terms[-1])
        for a in reversed(self.terms[:-1]):
            acc = a + 1 / acc
        return acc


@dataclass(frozen=True)
class CFNegative:
    """Negative (minus-sign) continued fraction; c1 >= 1, later terms >= 2."""

    terms: tuple[int, ...]

    def __post_init__(self):
        t = tuple(self.terms)
        object.__setattr__(self, "terms", t)
        if not t:
            raise ValueError("empty continued fraction")
        if t[0] < 1 or any(v < 2 for v in t[1:]):
            raise ValueError(f"invalid negative terms {t}")

    def value(self) -> Fraction:
        acc = Fraction(self.terms[-1])
        for c in reversed(self.terms[:-1]):
            acc = c - 1 / acc
        return acc


def _euclid(x: Fraction) -> list[int]:
    num, den = x.numerator, x.denominator
    out = []
    while den:
        out.append(num // den)
        num, den = den, num % den
    return out


def _evenize(terms: list[int]) -> list[int]:
    """Force an even term count by splitting or merging the last term."""
    if len(terms) % 2 == 0:
        return terms
    if terms[-1] >= 2:
        return terms[:-1] + [terms[-1] - 1, 1]
    if len(terms) >= 2:
        return terms[:-2] + [terms[-2] + 1]
    return terms


def cf_regular(x: Fraction) -> CFRegular:
    """Regular expansion of x > 0, even-length after the optional leading 0."""
    x = Fraction(x)
    if x <= 0:
        raise NonPositive(f"cannot expand {x}")
    if x == 1:
        return CFRegular((1,))
    if x < 1:
        return CFRegular(tuple([0] + _evenize(_euclid(1 / x))))
    return CFRegular(tuple(_evenize(_euclid(x))))


def cf_negative(x: Fraction) -> CFNegative:
    """Unique minus-sign expansion of x > 0."""
    x = Fraction(x)
    if x <= 0:
        raise NonPositive(f"cannot expand {x}")
    out = []
    while True:
        c = -((-x.numerator) // x.denominator)
        out.append(c)
        if x == c:
            return CFNegative(tuple(out))
        x = 1 / (c - x)


def cf_convert(r: CFRegular) -> CFNegative:
    """Regular -> negative normal form (same value)."""
    return cf_negative(r.value())


def cf_convert_back(n: CFNegative) -> CFRegular:
    """Negative -> regular normal form (same value)."""
    return cf_regular(n.value())


@dataclass(frozen=True)
class PolyCF:
    """Continued fraction with (possibly negated) polynomial partial quotients."""

    quotients: tuple[IntPoly, ...]

    def __post_init__(self):
        object.__setattr__(self, "quotients", tuple(self.quotients))
        if not self.quotients:
            raise ValueError("empty polynomial continued fraction")


def polycf_expand(num: IntPoly, den: IntPoly) -> PolyCF:
    """Greedy continued-fraction expansion of num/den in Q(t).

    Returns [0; q1, q2, ...] with the q_i the successive polynomial
    division quotients of den by num; quotient/remainder uniqueness makes
    the list canonical.  Raises NotDivisible when a quotient leaves Z[t].
    """
    from fractions import Fraction

    from .exact_arith import NotDivisible

    def divmod_q(a: list, b: list) -> tuple[list, list]:
        q = [Fraction(0)] * max(1, len(a) - len(b) + 1)
        r = list(a)
        while len(r) >= len(b) and any(r):
            while r and r[-1] == 0:
                r.pop()
            if len(r) < len(b):
                break
            c = Fraction(r[-1], 1) / b[-1]
            k = len(r) - len(b)
            q[k] += c
            for j, v in enumerate(b):
                r[k + j] -= c * v
            r.pop()
        return q, r

    def to_intpoly(cs) -> IntPoly:
        out = []
        for c in cs:
            c = Fraction(c)
            if c.denominator != 1:
                raise NotDivisible(f"non-integer quotient coefficient {c}")
            out.append(c.numerator)
        return IntPoly(tuple(out))

    if den.is_zero:
        raise ZeroDenominator("expansion of a fraction with zero denominator")
    quots = [T_ZERO]
    a, b = [Fraction(c) for c in den.coeffs], [Fraction(c) for c in num.coeffs]
    while b and any(b):
        q, r = divmod_q(a, b)
        quots.append(to_intpoly(q))
        a, b = b, r
    return PolyCF(tuple(quots))


def polycf_eval(cf: PolyCF) -> tuple[IntPoly, IntPoly]:
    """Evaluate [x0; x1, ...] = x0 + 1/(x1 + 1/(...)) in Q(t).

    Returns the reduced (numerator, denominator) pair with positive leading
    denominator coefficient.
    """
    num, den = cf.quotients[-1], T_ONE
    for x in reversed(cf.quotients[:-1]):
        if num.is_zero:
            raise ZeroDenominator("zero intermediate denominator")
        num, den = x * num + den, num
    if den.is_zero:
        raise ZeroDenominator("zero final denominator")
    g = _seq_gcd(num.coeffs, den.coeffs)
    if g != (1,):
        num = IntPoly(_seq_divexact(num.coeffs, g))
        den = IntPoly(_seq_divexact(den.coeffs, g))
    if den.coeffs[-1] < 0:
        num, den = -num, -den
    return num, den
