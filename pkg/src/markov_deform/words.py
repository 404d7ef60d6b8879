"""Christoffel words over {a, b} and the Farey / Stern-Brocot correspondence.

The binary tree of word triples is rooted at (a, ab, b); a node
(u, uv, v) has left child (u, u.uv, uv) and right child (uv, uv.v, v).
Middle words are exactly the Christoffel words, and they biject with
reduced fractions in (0, 1] via the Farey tree rooted at (0/1, 1/2, 1/1):
going left lowers the fraction (more a's), going right raises it.
The word of a fraction r/s has r letters b out of s letters total;
1/1 corresponds to the seed word b.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

Word = str


class OutOfRange(ValueError):
    """Fraction outside (0, 1]."""


class NotChristoffel(ValueError):
    """Word is not a node of the Christoffel triple tree."""


def check_word(w: Word) -> Word:
    if not w or set(w) - {"a", "b"}:
        raise ValueError(f"word must be a nonempty string over {{a, b}}: {w!r}")
    return w


@dataclass(frozen=True)
class WordTriple:
    """Triple (w, ww', w') with the middle the concatenation of the sides."""

    left: Word
    middle: Word
    right: Word

    def __post_init__(self):
        check_word(self.left)
        check_word(self.right)
        if self.middle != self.left + self.right:
            raise ValueError(
                f"middle {self.middle!r} is not {self.left!r} + {self.right!r}")

    def words(self) -> tuple[Word, Word, Word]:
        return (self.left, self.middle, self.right)


def triple_root() -> WordTriple:
    return WordTriple("a", "ab", "b")


def triple_children(t: WordTriple) -> tuple[WordTriple, WordTriple]:
    left = WordTriple(t.left, t.left + t.middle, t.middle)
    right = WordTriple(t.middle, t.middle + t.right, t.right)
    return left, right


def iter_triples(depth: int) -> Iterator[WordTriple]:
    """Breadth-first walk of the word tree: 2**depth - 1 triples."""
    if depth <= 0:
        return
    level = [triple_root()]
    for _ in range(depth):
        nxt = []
        for t in level:
            yield t
            nxt.extend(triple_children(t))
        level = nxt


def tree_words(depth: int) -> list[Word]:
    """All distinct words appearing in triples to the given depth, sorted."""
    seen = {"a", "b"}
    for t in iter_triples(depth):
        seen.update(t.words())
    return sorted(seen, key=lambda w: (len(w), w))


def farey_sum(x: Fraction, y: Fraction) -> Fraction:
    """Mediant (r + r')/(s + s') of two reduced fractions."""
    return Fraction(x.numerator + y.numerator, x.denominator + y.denominator)


def farey_path(f: Fraction) -> tuple[str, WordTriple]:
    """Left/right moves from the root Farey node down to f, with its word triple.

    Requires 0 < f < 1.  The returned string is over {L, R}; the triple is
    the node whose mediant is f.
    """
    f = Fraction(f)
    if not 0 < f < 1:
        raise OutOfRange(f"fraction {f} not strictly between 0 and 1")
    lo, hi = Fraction(0), Fraction(1)
    node = triple_root()
    moves = []
    while True:
        mid = farey_sum(lo, hi)
        if f == mid:
            return "".join(moves), node
        lchild, rchild = triple_children(node)
        if f < mid:
            hi, node = mid, lchild
            moves.append("L")
        else:
            lo, node = mid, rchild
            moves.append("R")


def word_triple_of_fraction(f: Fraction) -> WordTriple:
    return farey_path(f)[1]


def word_of_fraction(f: Fraction) -> Word:
    """Christoffel word of a reduced fraction in (0, 1]; 1 maps to b."""
    f = Fraction(f)
    if f == 1:
        return "b"
    if not 0 < f < 1:
        raise OutOfRange(f"fraction {f} not in (0, 1]")
    return word_triple_of_fraction(f).middle


def fraction_of_word(w: Word) -> Fraction:
    """Slope of a word: (count of b) / (length); inverse of word_of_fraction."""
    check_word(w)
    return Fraction(w.count("b"), len(w))


def christoffel_path(w: Word) -> tuple[str, WordTriple]:
    """Locate a word as the middle of a tree node; raises NotChristoffel."""
    check_word(w)
    if w in ("a", "b"):
        raise NotChristoffel(f"{w!r} is a seed letter, not a middle word")
    f = fraction_of_word(w)
    if f == 1:
        raise NotChristoffel(f"{w!r} has no letter a")
    path, node = farey_path(f)
    if node.middle != w:
        raise NotChristoffel(f"{w!r} is not a Christoffel word")
    return path, node
