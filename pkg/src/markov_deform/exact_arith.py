"""Exact arithmetic cores.

Everything downstream reduces to four value types:

* ``IntPoly``      -- Z[t], dense coefficient tuple, index = exponent.
* ``LaurentPoly``  -- Z[q, q^-1], a coefficient tuple plus the lowest exponent.
* ``RatFunc``      -- reduced fractions of Laurent polynomials.
* ``Mat2``         -- 2x2 matrices over any of the above (or plain int/Fraction).

Plain Python ints serve as the arbitrary-precision integers and
``fractions.Fraction`` as exact rationals.  All values are immutable after
construction and safe to share across threads.  Equality is structural on
canonical form: Laurent polynomials are trimmed at both ends, rational
functions carry a denominator with nonzero constant term, positive leading
coefficient and no common factor with the numerator.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union


class NotDivisible(ArithmeticError):
    """Exact division left a nonzero remainder."""


class NotInvertible(ArithmeticError):
    """Matrix determinant is not a unit of the coefficient ring."""


# ---------------------------------------------------------------------------
# dense coefficient sequences (index = exponent)

def _trim(cs: Sequence[int]) -> tuple[int, ...]:
    n = len(cs)
    while n and cs[n - 1] == 0:
        n -= 1
    return tuple(cs[:n])


def _seq_add(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, v in enumerate(b):
        out[i] += v
    return _trim(out)


def _seq_mul(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def _seq_divexact(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    """Quotient a / b in Z[x] when the division is exact."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return ()
    if len(a) < len(b):
        raise NotDivisible(f"degree {len(a) - 1} < {len(b) - 1}")
    rem = list(a)
    quo = [0] * (len(a) - len(b) + 1)
    lead = b[-1]
    for k in range(len(a) - len(b), -1, -1):
        c = rem[k + len(b) - 1]
        if c == 0:
            continue
        if c % lead:
            raise NotDivisible(f"leading coefficient {c} not divisible by {lead}")
        t = c // lead
        quo[k] = t
        for j, v in enumerate(b):
            rem[k + j] -= t * v
    if any(rem):
        raise NotDivisible("nonzero remainder")
    return _trim(quo)


def _seq_content(a: Sequence[int]) -> int:
    g = 0
    for v in a:
        g = math.gcd(g, v)
        if g == 1:
            return 1
    return g


def _seq_primitive(a: Sequence[int]) -> tuple[tuple[int, ...], int]:
    c = _seq_content(a)
    if c <= 1:
        return tuple(a), c
    return tuple(v // c for v in a), c


def _coprime_mod_p(a: Sequence[int], b: Sequence[int]) -> bool:
    """True if gcd(a, b) over GF(p) is constant for a prime not dividing lc(a).

    Sound one-sided test: a nontrivial gcd over Z stays nontrivial mod p
    whenever p does not divide the leading coefficient of a (the gcd's
    leading coefficient divides it).  A False answer is inconclusive.
    """
    p = 2147483647
    if a[-1] % p == 0:
        return False
    ra = [v % p for v in a]
    rb = [v % p for v in b]
    while True:
        while rb and rb[-1] == 0:
            rb.pop()
        if not rb:
            return len(ra) == 1
        if len(rb) == 1:
            return True
        inv = pow(rb[-1], p - 2, p)
        while len(ra) >= len(rb):
            coef = ra[-1] * inv % p
            shift = len(ra) - len(rb)
            for j, v in enumerate(rb):
                ra[shift + j] = (ra[shift + j] - coef * v) % p
            while ra and ra[-1] == 0:
                ra.pop()
            if not ra:
                break
        ra, rb = rb, ra


def _seq_rem_scaled(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    # Integer multiple of (a mod b); enough for gcd, primitivized right after.
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while True:
        while r and r[-1] == 0:
            r.pop()
        if len(r) - 1 < db or not r:
            return tuple(r)
        lr = r[-1]
        g = math.gcd(lr, lb)
        mul, sub = lb // g, lr // g
        if mul != 1:
            r = [mul * v for v in r]
        shift = len(r) - 1 - db
        for j, v in enumerate(b):
            r[shift + j] -= sub * v


def _seq_gcd(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    """gcd in Z[x] including integer content, positive leading coefficient."""
    a = _trim(a)
    b = _trim(b)
    if not a:
        a, b = b, a
    if not b:
        if not a:
            return ()
        return tuple(-v for v in a) if a[-1] < 0 else a
    pa, ca = _seq_primitive(a)
    pb, cb = _seq_primitive(b)
    c = math.gcd(ca, cb)
    if len(pa) == 1 or len(pb) == 1:
        return (c,)
    if _coprime_mod_p(pa, pb) or _coprime_mod_p(pb, pa):
        return (c,)
    while pb:
        r = _seq_rem_scaled(pa, pb)
        pa, pb = pb, _seq_primitive(r)[0] if r else ()
    if pa[-1] < 0:
        pa = tuple(-v for v in pa)
    return tuple(c * v for v in pa)


# ---------------------------------------------------------------------------
# Z[t]

@dataclass(frozen=True)
class IntPoly:
    """Polynomial in t over Z; coeffs[i] is the coefficient of t**i."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(tuple(self.coeffs)))

    @staticmethod
    def const(c: int) -> "IntPoly":
        return IntPoly((c,))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def __add__(self, other):
        other = _as_intpoly(other)
        return IntPoly(_seq_add(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(tuple(-v for v in self.coeffs))

    def __sub__(self, other):
        return self + (-_as_intpoly(other))

    def __rsub__(self, other):
        return _as_intpoly(other) + (-self)

    def __mul__(self, other):
        other = _as_intpoly(other)
        return IntPoly(_seq_mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = T_ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def divexact(self, other: "IntPoly") -> "IntPoly":
        return IntPoly(_seq_divexact(self.coeffs, _as_intpoly(other).coeffs))

    def eval(self, x: Union[int, Fraction]) -> Union[int, Fraction]:
        """Exact evaluation by Horner's rule."""
        acc: Union[int, Fraction] = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: "IntPoly") -> "IntPoly":
        acc = T_ZERO
        for c in reversed(self.coeffs):
            acc = acc * inner + IntPoly.const(c)
        return acc

    def __str__(self) -> str:
        return _render_terms(self.coeffs, 0, "t")

    def to_obj(self) -> dict:
        return {"coeffs": [str(c) for c in self.coeffs]}

    @staticmethod
    def from_obj(obj: dict) -> "IntPoly":
        return IntPoly(tuple(int(c) for c in obj["coeffs"]))


T_ZERO = IntPoly()
T_ONE = IntPoly((1,))
T = IntPoly((0, 1))


# ---------------------------------------------------------------------------
# Z[q, q^-1]

@dataclass(frozen=True)
class LaurentPoly:
    """Laurent polynomial in q over Z.

    ``coeffs[i]`` is the coefficient of q**(offset + i).  Canonical form:
    zero is (offset 0, empty coeffs); otherwise the first and last
    coefficients are nonzero, so equality and hashing are structural.
    """

    offset: int = 0
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        cs = tuple(self.coeffs)
        lo = 0
        while lo < len(cs) and cs[lo] == 0:
            lo += 1
        hi = len(cs)
        while hi > lo and cs[hi - 1] == 0:
            hi -= 1
        if lo == hi:
            object.__setattr__(self, "offset", 0)
            object.__setattr__(self, "coeffs", ())
        else:
            object.__setattr__(self, "offset", self.offset + lo)
            object.__setattr__(self, "coeffs", cs[lo:hi])

    @staticmethod
    def const(c: int) -> "LaurentPoly":
        return LaurentPoly(0, (c,))

    @staticmethod
    def q_power(k: int, c: int = 1) -> "LaurentPoly":
        return LaurentPoly(k, (c,))

    @staticmethod
    def from_intpoly(p: IntPoly) -> "LaurentPoly":
        return LaurentPoly(0, p.coeffs)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def min_exp(self) -> int:
        return self.offset

    @property
    def max_exp(self) -> int:
        return self.offset + len(self.coeffs) - 1

    @property
    def is_monomial(self) -> bool:
        return len(self.coeffs) == 1

    @property
    def is_unit(self) -> bool:
        """Units of Z[q, q^-1] are +-q**k."""
        return len(self.coeffs) == 1 and self.coeffs[0] in (1, -1)

    def unit_inv(self) -> "LaurentPoly":
        if not self.is_unit:
            raise NotInvertible(f"{self} is not a unit of Z[q, q^-1]")
        return LaurentPoly(-self.offset, (self.coeffs[0],))

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by q**k."""
        if self.is_zero:
            return self
        return LaurentPoly(self.offset + k, self.coeffs)

    def subs_qinv(self) -> "LaurentPoly":
        """Substitute q -> q^-1."""
        if self.is_zero:
            return self
        return LaurentPoly(-self.max_exp, tuple(reversed(self.coeffs)))

    def __add__(self, other):
        other = _as_laurent(other)
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        off = min(self.offset, other.offset)
        top = max(self.max_exp, other.max_exp)
        out = [0] * (top - off + 1)
        for i, v in enumerate(self.coeffs):
            out[self.offset - off + i] += v
        for i, v in enumerate(other.coeffs):
            out[other.offset - off + i] += v
        return LaurentPoly(off, tuple(out))

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.offset, tuple(-v for v in self.coeffs))

    def __sub__(self, other):
        return self + (-_as_laurent(other))

    def __rsub__(self, other):
        return _as_laurent(other) + (-self)

    def __mul__(self, other):
        other = _as_laurent(other)
        return LaurentPoly(self.offset + other.offset,
                           _seq_mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if self.is_unit:
                return self.unit_inv() ** (-n)
            raise ValueError("negative power of a non-unit Laurent polynomial")
        out = L_ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def divexact(self, other: "LaurentPoly") -> "LaurentPoly":
        other = _as_laurent(other)
        if other.is_zero:
            raise ZeroDivisionError("Laurent division by zero")
        if self.is_zero:
            return L_ZERO
        return LaurentPoly(self.offset - other.offset,
                           _seq_divexact(self.coeffs, other.coeffs))

    def eval_at_one(self) -> int:
        return sum(self.coeffs)

    def eval(self, x: Fraction) -> Fraction:
        """Exact evaluation at a nonzero rational."""
        if self.is_zero:
            return Fraction(0)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc * Fraction(x) ** self.offset

    def __str__(self) -> str:
        return _render_terms(self.coeffs, self.offset, "q")

    def to_obj(self) -> dict:
        return {"offset": self.offset, "coeffs": [str(c) for c in self.coeffs]}

    @staticmethod
    def from_obj(obj: dict) -> "LaurentPoly":
        return LaurentPoly(int(obj["offset"]),
                           tuple(int(c) for c in obj["coeffs"]))


L_ZERO = LaurentPoly()
L_ONE = LaurentPoly(0, (1,))
Q = LaurentPoly(1, (1,))


def _as_intpoly(x) -> IntPoly:
    if isinstance(x, IntPoly):
        return x
    if isinstance(x, int):
        return IntPoly((x,))
    raise TypeError(f"cannot coerce {type(x).__name__} to IntPoly")


def _as_laurent(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly(0, (x,))
    if isinstance(x, IntPoly):
        return LaurentPoly.from_intpoly(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")


def _render_terms(coeffs: Sequence[int], offset: int, var: str) -> str:
    if not coeffs:
        return "0"
    parts = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        e = offset + i
        if e == 0:
            body = str(abs(c))
        else:
            head = "" if abs(c) == 1 else str(abs(c))
            body = f"{head}{var}" if e == 1 else f"{head}{var}^{e}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


# ---------------------------------------------------------------------------
# fractions of Laurent polynomials

@dataclass(frozen=True)
class RatFunc:
    """Reduced fraction num/den of Laurent polynomials.

    Canonical form: den has offset 0 (nonzero constant term) and positive
    leading coefficient; num and den share no factor in Z[q] (integer
    content included).  Any q-power unit is carried by the numerator.
    """

    num: LaurentPoly
    den: LaurentPoly = L_ONE

    def __post_init__(self):
        num, den = _as_laurent(self.num), _as_laurent(self.den)
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero:
            num, den = L_ZERO, L_ONE
        else:
            num = num.shift(-den.offset)
            den = den.shift(-den.offset)
            g = _seq_gcd(num.coeffs, den.coeffs)
            if g != (1,):
                num = LaurentPoly(num.offset, _seq_divexact(num.coeffs, g))
                den = LaurentPoly(0, _seq_divexact(den.coeffs, g))
            if den.coeffs[-1] < 0:
                num, den = -num, -den
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __add__(self, other):
        other = _as_ratfunc(other)
        return RatFunc(self.num * other.den + other.num * self.den,
                       self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        return self + (-_as_ratfunc(other))

    def __rsub__(self, other):
        return _as_ratfunc(other) + (-self)

    def __mul__(self, other):
        other = _as_ratfunc(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_ratfunc(other)
        if other.is_zero:
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _as_ratfunc(other) / self

    def inverse(self) -> "RatFunc":
        return RatFunc(L_ONE) / self

    def at_one(self) -> Fraction:
        return Fraction(self.num.eval_at_one(), self.den.eval_at_one())

    def __str__(self) -> str:
        if self.den == L_ONE:
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def to_obj(self) -> dict:
        return {"num": self.num.to_obj(), "den": self.den.to_obj()}

    @staticmethod
    def from_obj(obj: dict) -> "RatFunc":
        return RatFunc(LaurentPoly.from_obj(obj["num"]),
                       LaurentPoly.from_obj(obj["den"]))


def _as_ratfunc(x) -> RatFunc:
    if isinstance(x, RatFunc):
        return x
    return RatFunc(_as_laurent(x))


# ---------------------------------------------------------------------------
# 2x2 matrices over a commutative ring

def ring_one(sample):
    """Multiplicative identity of the ring an element lives in."""
    if isinstance(sample, int):
        return 1
    if isinstance(sample, Fraction):
        return Fraction(1)
    if isinstance(sample, IntPoly):
        return T_ONE
    if isinstance(sample, LaurentPoly):
        return L_ONE
    if isinstance(sample, RatFunc):
        return RatFunc(L_ONE)
    raise TypeError(f"unknown ring element {type(sample).__name__}")


def ring_zero(sample):
    if isinstance(sample, int):
        return 0
    if isinstance(sample, Fraction):
        return Fraction(0)
    if isinstance(sample, IntPoly):
        return T_ZERO
    if isinstance(sample, LaurentPoly):
        return L_ZERO
    if isinstance(sample, RatFunc):
        return RatFunc(L_ZERO)
    raise TypeError(f"unknown ring element {type(sample).__name__}")


def _unit_inverse(d):
    """Inverse of a ring element that must be a unit."""
    if isinstance(d, int):
        if d in (1, -1):
            return d
        raise NotInvertible(f"integer determinant {d} is not +-1")
    if isinstance(d, Fraction):
        if d == 0:
            raise NotInvertible("zero determinant")
        return 1 / d
    if isinstance(d, IntPoly):
        if d.coeffs in ((1,), (-1,)):
            return d
        raise NotInvertible(f"polynomial determinant {d} is not +-1")
    if isinstance(d, LaurentPoly):
        return d.unit_inv()
    if isinstance(d, RatFunc):
        if d.is_zero:
            raise NotInvertible("zero determinant")
        return d.inverse()
    raise TypeError(f"unknown ring element {type(d).__name__}")


@dataclass(frozen=True)
class Mat2:
    """2x2 matrix over a commutative ring, stored row-major."""

    a11: object
    a12: object
    a21: object
    a22: object

    def __mul__(self, other: "Mat2") -> "Mat2":
        return Mat2(self.a11 * other.a11 + self.a12 * other.a21,
                    self.a11 * other.a12 + self.a12 * other.a22,
                    self.a21 * other.a11 + self.a22 * other.a21,
                    self.a21 * other.a12 + self.a22 * other.a22)

    def __pow__(self, n: int) -> "Mat2":
        if n < 0:
            return self.inverse() ** (-n)
        out = Mat2.identity_like(self)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    @staticmethod
    def identity_like(m: "Mat2") -> "Mat2":
        one, zero = ring_one(m.a11), ring_zero(m.a11)
        return Mat2(one, zero, zero, one)

    def trace(self):
        return self.a11 + self.a22

    def det(self):
        return self.a11 * self.a22 - self.a12 * self.a21

    def inverse(self) -> "Mat2":
        u = _unit_inverse(self.det())
        return Mat2(self.a22 * u, -self.a12 * u, -self.a21 * u, self.a11 * u)

    def entries(self) -> tuple:
        return (self.a11, self.a12, self.a21, self.a22)

    def to_obj(self) -> list:
        return [_elem_obj(x) for x in self.entries()]


def _elem_obj(x):
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        return {"num": str(x.numerator), "den": str(x.denominator)}
    return x.to_obj()


# ---------------------------------------------------------------------------
# named operation surface

def laurent_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def laurent_divexact(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a.divexact(b)


def laurent_eval_at_one(a: LaurentPoly) -> int:
    return a.eval_at_one()


def intpoly_eval(p: IntPoly, x: Union[int, Fraction]):
    return p.eval(x)


def intpoly_compose_laurent(p: IntPoly, s: RatFunc) -> RatFunc:
    """Substitute a rational Laurent value into a t-polynomial, exactly."""
    s = _as_ratfunc(s)
    acc = RatFunc(L_ZERO)
    for c in reversed(p.coeffs):
        acc = acc * s + RatFunc(LaurentPoly.const(c))
    return acc


def mat2_mul(x: Mat2, y: Mat2) -> Mat2:
    return x * y


def mat2_trace(x: Mat2):
    return x.trace()


def mat2_det(x: Mat2):
    return x.det()


def mat2_inverse(x: Mat2) -> Mat2:
    return x.inverse()


def to_json(obj) -> str:
    """Deterministic JSON rendering (sorted keys, no whitespace surprises)."""
    return json.dumps(obj, sort_keys=True, separators=(", ", ": "))
