"""The q <-> t bridge.

Both deformations of a Markov number meet at the substitution
t = (1 + q + q^2)/q: for every Christoffel word w,

    f_w((1 + q + q^2)/q) = q h_w(q),

where f_w comes from the castling recursion and h_w from traces of q-Cohn
matrices.  The same substitution transports the t-Markov equation into the
q-Markov equation; equation_transport_check verifies the intermediate form
on (q h_w, q h_ww', q h_w') directly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact_arith import LaurentPoly, RatFunc, intpoly_compose_laurent
from .markov import q_markov_value
from .castling import t_markov_value
from .words import Word, iter_triples

# (1 + q + q^2)/q, the value of t joining the two deformations
T_SUB = RatFunc(LaurentPoly(-1, (1, 1, 1)))


@dataclass(frozen=True)
class BridgeWitness:
    word: Word
    lhs: RatFunc
    rhs: RatFunc

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs

    def __bool__(self) -> bool:
        return self.ok


def bridge_check(w: Word) -> BridgeWitness:
    """Compare f_w at t = (1+q+q^2)/q with q h_w(q), structurally."""
    lhs = intpoly_compose_laurent(t_markov_value(w), T_SUB)
    rhs = RatFunc(LaurentPoly.q_power(1) * q_markov_value(w))
    return BridgeWitness(w, lhs, rhs)


def bridge_words(depth: int) -> list[Word]:
    """Distinct words of all triples to the given depth."""
    seen = {"a", "b"}
    for t in iter_triples(depth):
        seen.update(t.words())
    return sorted(seen, key=lambda w: (len(w), w))


def equation_transport_check(depth: int) -> bool:
    """t-equation at t = (1+q+q^2)/q on the scaled values (q h_w, ...).

    Checks x^2 + y^2 + z^2 + ((1+q+q^2)/q - 3) = ((1+q+q^2)/q) xyz for every
    triple to the given depth, plus the constant identity
    (q-1)^2/q^3 * q^2 = (1+q+q^2)/q - 3 tying the two defect terms.
    """
    t_val = LaurentPoly(-1, (1, 1, 1))
    defect = t_val - LaurentPoly.const(3)
    if defect != LaurentPoly(-3, (1, -2, 1)) * LaurentPoly.q_power(2):
        return False
    q1 = LaurentPoly.q_power(1)
    for triple in iter_triples(depth):
        x = q1 * q_markov_value(triple.left)
        y = q1 * q_markov_value(triple.middle)
        z = q1 * q_markov_value(triple.right)
        if not (x * x + y * y + z * z + defect - t_val * x * y * z).is_zero:
            return False
    return True
