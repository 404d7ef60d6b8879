"""Classical and q-deformed Markov machinery.

A Christoffel word w evaluated at the Cohn matrices A, B (or their
q-analogues A_q = R L, B_q = R^2 L^2 over Z[q, q^-1]) yields an SL2 matrix
whose trace is 3 (resp. [3]_q) times the Markov value of w.  Word triples
(w, ww', w') therefore carry triples of values solving

    classical:  x^2 + y^2 + z^2 = 3xyz
    q-deformed: x^2 + y^2 + z^2 + (q-1)^2/q^3 = [3]_q xyz

and the q-tree is generated from (h_a, h_ab, h_b) by the Vieta moves
x -> [3]_q yz - x.  Also here: trace identities (Fricke, commutator),
fixed points of the fractional-linear action of a word matrix (quadratic
surds over Q(q)), and two alternative deformations built from (1,2)-entries
instead of traces.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import chain
from typing import Iterator

from .exact_arith import (L_ONE, L_ZERO, LaurentPoly, Mat2, NotDivisible,
                          RatFunc)
from .qrat import Q3, L_Q, R_Q
from .words import Word, WordTriple, check_word, triple_children, triple_root


class DegenerateMatrix(ValueError):
    """Fixed point requested for a matrix with zero lower-left entry."""


class NotUnimodular(ValueError):
    """Matrix arguments must have determinant 1."""


class NoExponentFound(ArithmeticError):
    """No q-power exponent in the window balances the identity."""


COHN_A = Mat2(2, 1, 1, 1)
COHN_B = Mat2(5, 2, 2, 1)
COHN_A_Q = R_Q * L_Q
COHN_B_Q = R_Q * R_Q * L_Q * L_Q

Q_MINUS_1 = LaurentPoly(0, (-1, 1))
# (q-1)^2 / q^3 — the defect constant of the q-Markov equation
Q_DEFECT = LaurentPoly(-3, (1, -2, 1))
# (q-1)^2 [3]_q^2 / q^3 — the defect of the trace-scaled variant
Q_DEFECT_SCALED = Q_DEFECT * Q3 * Q3


def cohn_matrix(w: Word, base: str = "q") -> Mat2:
    """Substitute a -> A, b -> B (classical) or their q-forms, multiply left to right."""
    check_word(w)
    if base == "classical":
        gens = {"a": COHN_A, "b": COHN_B}
        m = Mat2(1, 0, 0, 1)
    elif base == "q":
        gens = {"a": COHN_A_Q, "b": COHN_B_Q}
        m = Mat2(L_ONE, L_ZERO, L_ZERO, L_ONE)
    else:
        raise ValueError(f"unknown base {base!r}")
    for letter in w:
        m = m * gens[letter]
    return m


@dataclass(frozen=True)
class CohnTriple:
    """Matrices (M, MN, N) of a word triple, classical or q."""

    m1: Mat2
    m12: Mat2
    m2: Mat2
    words: WordTriple

    @staticmethod
    def from_words(t: WordTriple, base: str = "q") -> "CohnTriple":
        m1 = cohn_matrix(t.left, base)
        m2 = cohn_matrix(t.right, base)
        return CohnTriple(m1, m1 * m2, m2, t)


def markov_number(w: Word) -> int:
    """Tr(w(A, B)) / 3, the classical Markov value of a word."""
    tr = cohn_matrix(w, "classical").trace()
    if tr % 3:
        raise NotDivisible(f"trace {tr} of {w!r} not divisible by 3")
    return tr // 3


def markov_triple(t: WordTriple) -> tuple[int, int, int]:
    """Classical Markov triple of a word triple, from traces."""
    return (markov_number(t.left), markov_number(t.middle), markov_number(t.right))


def q_markov_value(w: Word) -> LaurentPoly:
    """Tr(w(A_q, B_q)) / [3]_q, cross-checked against the entry identity.

    The entry identity is h = q m12 - (q-1) m22: the q factor on m12 is
    required (the unscaled form fails already at the single letters; the
    erratum ledger records this).
    """
    m = cohn_matrix(w, "q")
    h = m.trace().divexact(Q3)
    alt = LaurentPoly.q_power(1) * m.a12 - Q_MINUS_1 * m.a22
    if h != alt:
        raise NotDivisible(f"entry identity failed for {w!r}")
    return h


@dataclass(frozen=True)
class QMarkovTriple:
    """q-Markov values (x, y, z) = (h_w, h_ww', h_w') of a word triple."""

    x: LaurentPoly
    y: LaurentPoly
    z: LaurentPoly

    @staticmethod
    def from_words(t: WordTriple) -> "QMarkovTriple":
        return QMarkovTriple(q_markov_value(t.left), q_markov_value(t.middle),
                             q_markov_value(t.right))

    def values(self) -> tuple[LaurentPoly, LaurentPoly, LaurentPoly]:
        return (self.x, self.y, self.z)

    def at_one(self) -> tuple[int, int, int]:
        return (self.x.eval_at_one(), self.y.eval_at_one(), self.z.eval_at_one())


@dataclass(frozen=True)
class Witness:
    """Outcome of an exact identity check; residual is zero iff ok."""

    ok: bool
    residual: LaurentPoly

    def __bool__(self) -> bool:
        return self.ok


def verify_q_markov(t: QMarkovTriple) -> Witness:
    """Check x^2 + y^2 + z^2 + (q-1)^2/q^3 = [3]_q xyz and its trace-scaled form."""
    x, y, z = t.values()
    residual = x * x + y * y + z * z + Q_DEFECT - Q3 * x * y * z
    sx, sy, sz = Q3 * x, Q3 * y, Q3 * z
    scaled = sx * sx + sy * sy + sz * sz + Q_DEFECT_SCALED - sx * sy * sz
    ok = residual.is_zero and scaled.is_zero
    return Witness(ok, residual if not residual.is_zero else scaled)


def vieta_move(t: QMarkovTriple, slot: str) -> QMarkovTriple:
    """Replace one coordinate via x -> [3]_q yz - x (an involution per slot)."""
    x, y, z = t.values()
    if slot == "x":
        return QMarkovTriple(Q3 * y * z - x, y, z)
    if slot == "y":
        return QMarkovTriple(x, Q3 * x * z - y, z)
    if slot == "z":
        return QMarkovTriple(x, y, Q3 * x * y - z)
    raise ValueError(f"slot must be x, y or z, not {slot!r}")


def near_orthogonality(t: QMarkovTriple) -> LaurentPoly:
    """Inner product <(x,y,z), (x - [3]_q yz, y, z)>; equals -(q-1)^2/q^3."""
    x, y, z = t.values()
    return x * x + y * y + z * z - Q3 * x * y * z


def commutator_trace_check(t: CohnTriple) -> bool:
    """Tr([M, N]) + 2 = -(q-1)^2 [3]_q^2 / q^3 for q-Cohn triples."""
    m, n = t.m1, t.m2
    comm = m * n * m.inverse() * n.inverse()
    return comm.trace() + LaurentPoly.const(2) == -Q_DEFECT_SCALED


def fricke_check(x: Mat2, y: Mat2) -> bool:
    """SL2 trace identity TrX^2 + TrXY^2 + TrY^2 = TrX TrXY TrY + Tr[X,Y] + 2."""
    one = L_ONE if isinstance(x.a11, LaurentPoly) else 1
    if x.det() != one or y.det() != one:
        raise NotUnimodular("Fricke identity needs determinant-1 matrices")
    tx, ty, txy = x.trace(), y.trace(), (x * y).trace()
    comm = (x * y * x.inverse() * y.inverse()).trace()
    lhs = tx * tx + txy * txy + ty * ty
    rhs = tx * txy * ty + comm + 2 * one
    return lhs == rhs


def pi_sequence(w: Word) -> tuple[int, ...]:
    """Periodic continued-fraction tag of a word: a -> 1,1 and b -> 2,2."""
    check_word(w)
    return tuple(chain.from_iterable((1, 1) if c == "a" else (2, 2) for c in w))


@dataclass(frozen=True)
class QuadraticSurd:
    """Fixed point ((r - u) + sqrt(d q^-scale)) / (2s) of a word matrix [[r,t],[s,u]].

    d is an ordinary polynomial with nonzero constant term and
    d * q^-scale = Tr^2 - 4.  The '+' square-root branch is taken.
    """

    word: Word
    p_num: LaurentPoly
    den: LaurentPoly
    disc_poly: LaurentPoly
    scale: int
    tag: tuple[int, ...]

    @property
    def p(self) -> RatFunc:
        """The rational part of the numerator, r - u."""
        return RatFunc(self.p_num)

    @property
    def s(self) -> RatFunc:
        """The shared denominator, 2s."""
        return RatFunc(self.den)

    @property
    def display_num(self) -> LaurentPoly:
        """Numerator polynomial once the q-power is pulled out of the root."""
        if self.scale % 2:
            raise ValueError("odd discriminant scale has no polynomial display")
        return self.p_num.shift(self.scale // 2)

    @property
    def display_den(self) -> LaurentPoly:
        if self.scale % 2:
            raise ValueError("odd discriminant scale has no polynomial display")
        return self.den.shift(self.scale // 2)

    def residual(self) -> tuple[RatFunc, RatFunc]:
        """Plug theta = x + y sqrt(D) into s t^2 + (u-r) t - t12; both parts."""
        m = cohn_matrix(self.word, "q")
        disc = RatFunc(self.disc_poly.shift(-self.scale))
        s, drift, t12 = RatFunc(m.a21), RatFunc(m.a22 - m.a11), RatFunc(m.a12)
        x = RatFunc(self.p_num, self.den)
        y = RatFunc(L_ONE, self.den)
        rational = s * (x * x + y * y * disc) + drift * x - t12
        surd = s * 2 * x * y + drift * y
        return rational, surd


def fixed_point(w: Word) -> QuadraticSurd:
    """'+'-branch fixed point of the fractional-linear action of w(A_q, B_q)."""
    m = cohn_matrix(w, "q")
    if m.a21.is_zero:
        raise DegenerateMatrix(f"matrix of {w!r} has zero lower-left entry")
    disc = m.trace() * m.trace() - LaurentPoly.const(4)
    scale = -disc.offset
    return QuadraticSurd(word=w,
                         p_num=m.a11 - m.a22,
                         den=LaurentPoly.const(2) * m.a21,
                         disc_poly=disc.shift(scale),
                         scale=scale,
                         tag=pi_sequence(w))


def verify_alt_deformation_1(t: WordTriple) -> bool:
    """(1/q^3) x^2 + y^2 + z^2 = [3]_q x' y z on (1,2)-entries, x' the trace value."""
    c = CohnTriple.from_words(t, "q")
    x, y, z = c.m1.a12, c.m12.a12, c.m2.a12
    xp = q_markov_value(t.left)
    residual = x * x * LaurentPoly.q_power(-3) + y * y + z * z - Q3 * xp * y * z
    return residual.is_zero


def _alt2_required(t: WordTriple) -> tuple[RatFunc, LaurentPoly]:
    """Middle factor forced by the second entry variant, and the subs base.

    With x, y, z the trace values, z' the (1,2)-entry of the right matrix
    and the equation (1/q^3) x^2 + y^2 + z^2 + (q-1)^2/q^3 = [3]_q x y' z',
    y' is pinned to LHS / ([3]_q x z'); the natural base to compare it with
    is the (1,2)-entry of the middle matrix under q -> 1/q.
    """
    c = CohnTriple.from_words(t, "q")
    x = q_markov_value(t.left)
    y = q_markov_value(t.middle)
    z = q_markov_value(t.right)
    lhs = x * x * LaurentPoly.q_power(-3) + y * y + z * z + Q_DEFECT
    required = RatFunc(lhs) / RatFunc(Q3 * x * c.m2.a12)
    return required, c.m12.a12.subs_qinv()


def verify_alt_deformation_2(t: WordTriple,
                             window: tuple[int, int] = (-60, 60)) -> tuple[bool, int]:
    """Search a q-power e with y' = (middle (1,2)-entry under q -> 1/q) q^e.

    No pure q-power ever balances the identity: the exact balancing factor
    is the trinomial (q - q^2 + q^3) under q -> 1/q (see
    alt_deformation_2_corrected), so this search reports NoExponentFound.
    It is kept as the literal searched-exponent interface.
    """
    required, base = _alt2_required(t)
    ratio = required / RatFunc(base)
    lo, hi = window
    if ratio.den == L_ONE and ratio.num.is_monomial and ratio.num.coeffs == (1,):
        e = ratio.num.offset
        if lo <= e <= hi:
            return True, e
    raise NoExponentFound(f"no exponent in [{lo}, {hi}] balances {t.words()}")


# (q - q^2 + q^3) under q -> 1/q: the exact scale on the q-inverted entry
ALT2_FACTOR = LaurentPoly(-3, (1, -1, 1))


def alt_deformation_2_corrected(t: WordTriple) -> bool:
    """Exact form of the second entry variant.

    (1/q^3) x^2 + y^2 + z^2 + (q-1)^2/q^3 = [3]_q x y' z' holds with
    y' = ((q - q^2 + q^3) * {w1 w2}_(1,2)) under q -> 1/q, uniformly over
    the tree; the erratum ledger records the printed single-power scale.
    """
    required, base = _alt2_required(t)
    return required == RatFunc(base * ALT2_FACTOR)


# ---------------------------------------------------------------------------
# value trees (Vieta recursions mirroring the word tree)

def iter_markov_tree(depth: int) -> Iterator[tuple[WordTriple, tuple[int, int, int]]]:
    """Classical Markov tree: (1, 5, 2) at the root, 3xy - z style children."""
    if depth <= 0:
        return
    level = [(triple_root(), (1, 5, 2))]
    for _ in range(depth):
        nxt = []
        for node, (x, y, z) in level:
            yield node, (x, y, z)
            lw, rw = triple_children(node)
            nxt.append((lw, (x, 3 * x * y - z, y)))
            nxt.append((rw, (y, 3 * y * z - x, z)))
        level = nxt


def q_markov_root() -> QMarkovTriple:
    return QMarkovTriple(q_markov_value("a"), q_markov_value("ab"), q_markov_value("b"))


def iter_q_markov_tree(depth: int) -> Iterator[tuple[WordTriple, QMarkovTriple]]:
    """q-Markov tree by Vieta recursion, word labels alongside."""
    if depth <= 0:
        return
    level = [(triple_root(), q_markov_root())]
    for _ in range(depth):
        nxt = []
        for node, triple in level:
            yield node, triple
            lw, rw = triple_children(node)
            x, y, z = triple.values()
            nxt.append((lw, QMarkovTriple(x, Q3 * x * y - z, y)))
            nxt.append((rw, QMarkovTriple(y, Q3 * y * z - x, z)))
        level = nxt
