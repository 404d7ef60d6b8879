"""Castling tuples and the t-deformation of Markov triples.

A castling tuple (t; f_1, ..., f_l) carries the factor dimensions of a
product of general linear groups acting on a tensor product with a
t-dimensional space.  Two moves generate the tree of such tuples:

    up:      append  t * prod(f_i) - 1
    flat_i:  replace f_i by  t * prod(f_j, j != i) - f_i   (an involution)

Specializing t = 3 and flattening inside 3-entry tuples reproduces the
Vieta moves on Markov triples.  Keeping t formal and restricting to the
subtree seeded by (1, t^2 - t - 1, t - 1) yields one polynomial f_w per
Christoffel word, solving x^2 + y^2 + z^2 + (t - 3) = t x y z and
specializing at t = 3 to the Markov number of w.  Chebyshev-flavored
closed forms for the two boundary branches a^n b and a b^n live here too.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

from .exact_arith import IntPoly, T, T_ONE, T_ZERO
from .markov import markov_triple
from .words import (OutOfRange, Word, WordTriple, christoffel_path,
                    triple_children, triple_root, word_triple_of_fraction)


class IndexOutOfRange(IndexError):
    """Castling flat move addressed a missing entry."""


def _poly(*descending: int) -> IntPoly:
    """IntPoly from coefficients written highest power first."""
    return IntPoly(tuple(reversed(descending)))


F_A = T_ONE
F_B = _poly(1, -1)
F_AB = _poly(1, -1, -1)


# ---------------------------------------------------------------------------
# generic castling tuples

@dataclass(frozen=True)
class CastlingTuple:
    """Entries of a castling tuple, kept sorted for deduplication.

    dim is the acting dimension: an integer for specialized tuples, None
    for the formal variable t.  Entries are IntPoly when formal, int when
    specialized; zero entries are not allowed.
    """

    dim: Optional[int]
    entries: tuple

    def __post_init__(self):
        entries = tuple(sorted(self.entries, key=_entry_key))
        if not entries:
            raise ValueError("castling tuple needs at least one entry")
        for e in entries:
            if (e.is_zero if isinstance(e, IntPoly) else e == 0):
                raise ValueError("zero entry in castling tuple")
        object.__setattr__(self, "entries", entries)

    def _t_times_product(self, skip: Optional[int] = None):
        if self.dim is None:
            prod = T
            for j, e in enumerate(self.entries):
                if j != skip:
                    prod = prod * e
            return prod
        prod = self.dim
        for j, e in enumerate(self.entries):
            if j != skip:
                prod *= e
        return prod

    def __len__(self) -> int:
        return len(self.entries)


def _entry_key(e):
    if isinstance(e, IntPoly):
        return (e.degree, e.coeffs)
    return (0, (e,))


def ct_up(c: CastlingTuple) -> CastlingTuple:
    """Append t * prod(entries) - 1."""
    one = T_ONE if c.dim is None else 1
    return CastlingTuple(c.dim, c.entries + (c._t_times_product() - one,))


def ct_flat(c: CastlingTuple, i: int) -> CastlingTuple:
    """Replace entry i (in sorted order) by t * prod(others) - entry."""
    if not 0 <= i < len(c.entries):
        raise IndexOutOfRange(f"no entry {i} in a {len(c.entries)}-tuple")
    new = c._t_times_product(skip=i) - c.entries[i]
    return CastlingTuple(c.dim, c.entries[:i] + (new,) + c.entries[i + 1:])


# ---------------------------------------------------------------------------
# the t-Markov subtree

@dataclass(frozen=True)
class TMarkovTriple:
    """(f_w, f_ww', f_w') for a word triple."""

    x: IntPoly
    y: IntPoly
    z: IntPoly

    def values(self) -> tuple[IntPoly, IntPoly, IntPoly]:
        return (self.x, self.y, self.z)

    def at(self, t0: int) -> tuple[int, int, int]:
        return (self.x.eval(t0), self.y.eval(t0), self.z.eval(t0))


@dataclass(frozen=True)
class TWitness:
    ok: bool
    residual: IntPoly

    def __bool__(self) -> bool:
        return self.ok


def t_markov_root() -> TMarkovTriple:
    return TMarkovTriple(F_A, F_AB, F_B)


def t_markov_children(t: TMarkovTriple) -> tuple[TMarkovTriple, TMarkovTriple]:
    """Left (x, txy - z, y) and right (y, tyz - x, z), the flat moves in place."""
    x, y, z = t.values()
    return (TMarkovTriple(x, T * x * y - z, y),
            TMarkovTriple(y, T * y * z - x, z))


def verify_t_markov(t: TMarkovTriple) -> TWitness:
    """Exact check of x^2 + y^2 + z^2 + (t - 3) = t x y z."""
    x, y, z = t.values()
    residual = x * x + y * y + z * z + _poly(1, -3) - T * x * y * z
    return TWitness(residual.is_zero, residual)


def iter_t_markov_tree(depth: int) -> Iterator[tuple[WordTriple, TMarkovTriple]]:
    if depth <= 0:
        return
    level = [(triple_root(), t_markov_root())]
    for _ in range(depth):
        nxt = []
        for node, triple in level:
            yield node, triple
            lw, rw = triple_children(node)
            lt, rt = t_markov_children(triple)
            nxt.append((lw, lt))
            nxt.append((rw, rt))
        level = nxt


def t_markov_value(w: Word) -> IntPoly:
    """f_w by replaying the word's Farey path through the value recursion."""
    if w == "a":
        return F_A
    if w == "b":
        return F_B
    path, _node = christoffel_path(w)
    triple = t_markov_root()
    for move in path:
        left, right = t_markov_children(triple)
        triple = left if move == "L" else right
    return triple.y


# ---------------------------------------------------------------------------
# integer scan at dimension 3

@dataclass(frozen=True)
class PVLabel:
    """Factor dimensions (m1, m2, m3) of a Markov-type tuple at dimension 3."""

    m1: int
    m2: int
    m3: int

    def __post_init__(self):
        s = self.m1 ** 2 + self.m2 ** 2 + self.m3 ** 2
        if s != 3 * self.m1 * self.m2 * self.m3:
            raise ValueError(f"({self.m1}, {self.m2}, {self.m3}) fails the Markov equation")

    def sorted_dims(self) -> tuple[int, int, int]:
        return tuple(sorted((self.m1, self.m2, self.m3)))


def markov_subtree_scan(budget: int, seed=(1, 1, 2), max_len: int = 4) -> list[PVLabel]:
    """Bounded BFS over both castling moves at dimension 3.

    Emits every reachable 3-entry tuple with max entry <= budget as a
    PVLabel.  Tuple length is capped (the all-ones family grows in length
    forever otherwise); length-3 states are closed under flat moves, so
    the cap does not hide any label.
    """
    start = tuple(sorted(seed))
    seen = {start}
    frontier = [start]
    labels = set()
    while frontier:
        nxt = []
        for tup in frontier:
            if len(tup) == 3:
                labels.add(tup)
            prod = 1
            for v in tup:
                prod *= v
            for i, v in enumerate(tup):
                new = 3 * (prod // v) - v
                if new < 1 or new > budget:
                    continue
                cand = tuple(sorted(tup[:i] + (new,) + tup[i + 1:]))
                if cand not in seen:
                    seen.add(cand)
                    nxt.append(cand)
            if len(tup) < max_len:
                new = 3 * prod - 1
                if new <= budget:
                    cand = tuple(sorted(tup + (new,)))
                    if cand not in seen:
                        seen.add(cand)
                        nxt.append(cand)
        frontier = nxt
    return [PVLabel(*t) for t in sorted(labels)]


# ---------------------------------------------------------------------------
# bounded reachability search in the formal tree

FIGURE4_TARGETS: dict[str, IntPoly] = {
    "f2": _poly(1, -1, -1),
    "f3": _poly(1, -2, 0, 1, -1),
    "f4": _poly(1, -3, 1, 2, 1, -1, -1, -1),
    "f5": _poly(1, -6, 11, -2, -9, -4, 10, 7, -2, -7, -3, 1, 2, 1, -1),
    "f6": _poly(1, -12, 58, -136, 127, 56, -126, -158, 229, 196, -158, -314,
                34, 294, 146, -142, -213, -26, 116, 90, -9, -45, -23, 5, 9,
                3, -1, -1, -1),
    "f3a_1": _poly(1, -2, 0, 0, 2, 1),
    "f3a_2": _poly(1, -2, 0, -1, 2, 1),
    "f2a_1": _poly(1, -2, -2, 4, -1, -1, -1),
    "f2a_1a": _poly(1, -3, -1, 8, -1, -6, -2, 3, 3, -1),
    "f2a_1b": _poly(1, -3, -2, 11, -1, -12, 2, 0, 3, 0, 1),
    "f2a_2": _poly(1, -4, 0, 16, -10, -22, 15, 14, -5, -6, 0, 1, -1),
    "f3aa": _poly(1, -1, -3, 2, 1),
}


def figure4_search(targets: Optional[dict[str, IntPoly]] = None,
                   max_degree: int = 30, max_len: int = 5,
                   max_states: int = 200000) -> dict:
    """BFS reachability of target polynomials from (t; 1) under both moves.

    Deterministic: the frontier is expanded in insertion order, moves in a
    fixed order (up, then flats by sorted index).  Returns a report with
    the search bounds and, per target, found/not-found plus the move path
    and the witnessing tuple.
    """
    if targets is None:
        targets = FIGURE4_TARGETS
    start = (T_ONE.coeffs,)
    parents: dict[tuple, Optional[tuple]] = {start: None}
    moves: dict[tuple, str] = {start: ""}
    frontier = [start]
    found: dict[str, tuple] = {}
    pending = {name: p for name, p in targets.items()}

    def scan_state(key):
        hits = [name for name, p in pending.items() if p.coeffs in key]
        for name in hits:
            found[name] = key
            del pending[name]

    scan_state(start)
    visited = 1
    while frontier and pending and visited < max_states:
        nxt = []
        for key in frontier:
            entries = [IntPoly(c) for c in key]
            state = CastlingTuple(None, tuple(entries))
            children = []
            if len(state) < max_len:
                up = ct_up(state)
                if up.entries[-1].degree <= max_degree:
                    children.append((up, "U"))
            for i in range(len(state)):
                try:
                    flat = ct_flat(state, i)
                except ValueError:
                    continue
                if max(e.degree for e in flat.entries) <= max_degree:
                    children.append((flat, f"F{i}"))
            for child, mv in children:
                ck = tuple(e.coeffs for e in child.entries)
                if ck in parents:
                    continue
                parents[ck] = key
                moves[ck] = mv
                visited += 1
                scan_state(ck)
                nxt.append(ck)
                if visited >= max_states or not pending:
                    break
            if visited >= max_states or not pending:
                break
        frontier = nxt

    def path_to(key) -> list[str]:
        path = []
        while parents[key] is not None:
            path.append(moves[key])
            key = parents[key]
        return list(reversed(path))

    report = {
        "bounds": {"max_degree": max_degree, "max_len": max_len,
                   "max_states": max_states},
        "states_visited": visited,
        "targets": {},
    }
    for name, p in targets.items():
        if name in found:
            key = found[name]
            report["targets"][name] = {
                "polynomial": str(p),
                "found": True,
                "path": path_to(key),
                "tuple": [str(IntPoly(c)) for c in key],
            }
        else:
            report["targets"][name] = {
                "polynomial": str(p),
                "found": False,
                "path": None,
                "tuple": None,
            }
    return report


# ---------------------------------------------------------------------------
# Chebyshev forms for the boundary branches

def _cheb_list(n: int, first, second) -> list[IntPoly]:
    out = [first, second]
    for _ in range(max(0, n - 1)):
        out.append(T * out[-1] - out[-2])
    return out[:max(n + 1, 2)]


def chebyshev_t(n: int) -> IntPoly:
    """Modified first kind: t_0 = 2, t_1 = t, t_(n+1) = t t_n - t_(n-1)."""
    if n < 0:
        raise ValueError("negative Chebyshev index")
    return _cheb_list(n, IntPoly.const(2), T)[n]


def chebyshev_u(n: int) -> IntPoly:
    """Modified second kind: u_0 = 1, u_1 = t, same recurrence."""
    if n < 0:
        raise ValueError("negative Chebyshev index")
    return _cheb_list(n, T_ONE, T)[n]


def _det_fraction_free(rows: list[list[IntPoly]]) -> IntPoly:
    """Bareiss determinant over Z[t]; all divisions are exact."""
    n = len(rows)
    m = [list(r) for r in rows]
    prev = T_ONE
    sign = 1
    for k in range(n - 1):
        if m[k][k].is_zero:
            for i in range(k + 1, n):
                if not m[i][k].is_zero:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return T_ZERO
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]).divexact(prev)
            m[i][k] = T_ZERO
        prev = m[k][k]
    result = m[n - 1][n - 1]
    return result if sign == 1 else -result


def _spine_poly(n: int) -> IntPoly:
    # f_(a^(n-1) b) spine: S_0 = 1, S_1 = t - 1, S_(k+1) = t S_k - S_(k-1)
    a, b = T_ONE, F_B
    if n == 0:
        return a
    for _ in range(n - 1):
        a, b = b, T * b - a
    return b


def s_poly(n: int) -> IntPoly:
    """f_(a^(n-1) b) computed three independent ways, asserted equal.

    (a) the spine recurrence S_(n+2) = t S_(n+1) - S_n;
    (b) the Chebyshev difference u_n - u_(n-1)  (the tabulated closed form
        carries a stray factor t; the erratum ledger records this);
    (c) the n x n tridiagonal determinant with corner t - 1, evaluated by
        a generic fraction-free elimination.
    """
    if n < 0:
        raise ValueError("negative index")
    spine = _spine_poly(n)
    cheb = chebyshev_u(n) - (chebyshev_u(n - 1) if n >= 1 else T_ZERO)
    if n == 0:
        det = T_ONE
    else:
        rows = [[T_ZERO] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = T
            if i + 1 < n:
                rows[i][i + 1] = T_ONE
                rows[i + 1][i] = T_ONE
        rows[0][0] = F_B
        det = _det_fraction_free(rows)
    if not (spine == cheb == det):
        raise AssertionError(f"S_{n} representations disagree: {spine}, {cheb}, {det}")
    return spine


def f_ab_power(n: int) -> IntPoly:
    """f_(a b^n) = (t_n(t^2 - t) + (t^2 - t - 2) u_(n-1)(t^2 - t)) / 2."""
    if n < 1:
        raise ValueError("index must be >= 1")
    x = T * T - T
    val = chebyshev_t(n).compose(x) + (x - IntPoly.const(2)) * chebyshev_u(n - 1).compose(x)
    return val.divexact(IntPoly.const(2))


def pq_recurrence_check(n_max: int) -> bool:
    """Difference identities of the two half-sum families.

    With X = t^2 - t, p_n = (t_n(X) + (X - 2) u_(n-1)(X)) / 2 and
    q_n = (t_n(X) + (X + 2) u_(n-1)(X)) / 2:
        p_(n+2) - p_n = (t^2 - t - 2) q_(n+1)
        q_(n+2) - q_n = (t^2 - t + 2) p_(n+1)
    built on u_(n+2) - u_n = t_(n+2) and t_(n+2) - t_n = (t^2 - 4) u_n
    (the last with the corrected quadratic factor).
    """
    if n_max < 0:
        raise ValueError("negative bound")
    top = n_max + 3
    ts = _cheb_list(top, IntPoly.const(2), T)
    us = _cheb_list(top, T_ONE, T)
    x = T * T - T
    two = IntPoly.const(2)

    def half_sum(n: int, shift: IntPoly) -> IntPoly:
        u_prev = us[n - 1].compose(x) if n >= 1 else T_ZERO
        return (ts[n].compose(x) + shift * u_prev).divexact(two)

    ps = [half_sum(n, x - two) for n in range(top + 1)]
    qs = [half_sum(n, x + two) for n in range(top + 1)]
    t2m4 = T * T - IntPoly.const(4)
    for n in range(n_max + 1):
        if us[n + 2] - us[n] != ts[n + 2]:
            return False
        if ts[n + 2] - ts[n] != t2m4 * us[n]:
            return False
        if ps[n + 2] - ps[n] != (x - two) * qs[n + 1]:
            return False
        if qs[n + 2] - qs[n] != (x + two) * ps[n + 1]:
            return False
    return True


# ---------------------------------------------------------------------------
# tabulated polynomial continued-fraction displays

def polycf_display_table() -> list[dict]:
    """The published list of castling-polynomial continued fractions.

    Each entry pairs a stated ratio f_num/f_den of tree words with the
    quotient list as printed.  The den word of the third display is not a
    valid tree word as printed (its letters are scrambled); the intended
    word is reconstructed as the unique child of the num word's node with
    the printed letter count, and flagged.
    """
    t_ = lambda w: T * t_markov_value(w)
    f_ = t_markov_value
    return [
        {"name": "D1", "num_word": "aaabaaabaab", "den_word": "aaabaaabaaabaab",
         "den_reconstructed": False,
         "printed": (T_ZERO, t_("aaab"), -t_("aaab"), t_("aaab"), -f_("aab"))},
        {"name": "D2", "num_word": "aabaabab", "den_word": "aabaababaabab",
         "den_reconstructed": False,
         "printed": (T_ZERO, t_("aab"), -t_("aabab"), T, -T, f_("b"))},
        {"name": "D3", "num_word": "aabaababaabab", "den_word": "aabaababaababaabab",
         "den_reconstructed": True,
         "printed": (T_ZERO, t_("aabab"), -t_("aab"), t_("aabab"), -T, T, -f_("b"))},
        {"name": "D4", "num_word": "aababab", "den_word": "aababaababab",
         "den_reconstructed": False,
         "printed": (T_ZERO, t_("aabab"), -t_("aabab"), -T, f_("b"))},
        {"name": "D5", "num_word": "aababaababab", "den_word": "aababaababaababab",
         "den_reconstructed": False,
         "printed": (T_ZERO, t_("aabab"), -t_("aabab"), t_("aabab"), T, -f_("b"))},
        {"name": "D6", "num_word": "abababb", "den_word": "abababbababb",
         "den_reconstructed": False,
         "printed": (T_ZERO, t_("ababb"), -t_("ababb"), f_("ab"), -f_("ab"))},
        {"name": "D7", "num_word": "abababbababb", "den_word": "abababbababbababb",
         "den_reconstructed": False,
         "printed": (T_ZERO, t_("ababb"), -t_("ababb"), t_("ababb"), -f_("ab"), f_("ab"))},
        {"name": "D8", "num_word": "ababbababbabb", "den_word": "ababbababbababbabb",
         "den_reconstructed": False,
         "printed": (T_ZERO, t_("ababb"), -t_("ababb"), T * f_("b"), -f_("ab"))},
        {"name": "D9", "num_word": "abbabbb", "den_word": "abbabbbabbb",
         "den_reconstructed": False,
         "printed": (T_ZERO, t_("abbb"), -t_("abbb"), f_("aab"), -f_("b"))},
        {"name": "D10", "num_word": "abbabbbabbb", "den_word": "abbabbbabbbabbb",
         "den_reconstructed": False,
         "printed": (T_ZERO, t_("abb"), -t_("abb"), t_("abb"), -f_("abb"), -f_("aab"), f_("b"))},
        {"name": "D11", "num_word": "abbbb", "den_word": "abbbabbbb",
         "den_reconstructed": False,
         "printed": (T_ZERO, t_("abbb"), -f_("abb"), -f_("ab"), f_("abb"))},
    ]


# ---------------------------------------------------------------------------
# fraction -> Markov-type tuple

def pv_of_fraction(f: Fraction) -> tuple[PVLabel, str]:
    """Markov-type tuple of a reduced fraction in (0, 1], with its rendered form.

    The label carries the node order (left, middle, right); the rendered
    group string lists the dimensions in increasing order.
    """
    f = Fraction(f)
    if f == 1:
        label = PVLabel(1, 2, 1)
    else:
        if not 0 < f < 1:
            raise OutOfRange(f"fraction {f} not in (0, 1]")
        node = word_triple_of_fraction(f)
        label = PVLabel(*markov_triple(node))
    dims = label.sorted_dims()
    groups = " × ".join(["SO(3)"] + [f"GL({m})" for m in dims])
    spaces = "⊗".join(["V(3)"] + [f"V({m})" for m in dims])
    return label, f"({groups}, {spaces})"
