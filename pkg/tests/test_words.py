from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from markov_deform.words import (NotChristoffel, OutOfRange, WordTriple,
                                 christoffel_path, farey_sum, fraction_of_word,
                                 iter_triples, tree_words, triple_children,
                                 triple_root, word_of_fraction,
                                 word_triple_of_fraction)


def test_root_and_children():
    root = triple_root()
    assert root.words() == ("a", "ab", "b")
    left, right = triple_children(root)
    assert left.words() == ("a", "aab", "ab")
    assert right.words() == ("ab", "abb", "b")


def test_middle_is_concatenation():
    with pytest.raises(ValueError):
        WordTriple("a", "ab", "ab")
    with pytest.raises(ValueError):
        WordTriple("a", "axb", "xb")


def test_word_of_fraction_examples():
    assert word_of_fraction(Fraction(3, 5)) == "ababb"
    assert word_of_fraction(Fraction(5, 8)) == "ababbabb"
    assert word_of_fraction(Fraction(1, 2)) == "ab"
    assert word_of_fraction(Fraction(1, 1)) == "b"
    for p in range(2, 9):
        assert word_of_fraction(Fraction(1, p)) == "a" * (p - 1) + "b"
        assert word_of_fraction(Fraction(p - 1, p)) == "a" + "b" * (p - 1)


def test_word_of_fraction_range():
    with pytest.raises(OutOfRange):
        word_of_fraction(Fraction(3, 2))
    with pytest.raises(OutOfRange):
        word_of_fraction(Fraction(0))


def test_farey_sum():
    assert farey_sum(Fraction(1, 2), Fraction(2, 3)) == Fraction(3, 5)
    assert farey_sum(Fraction(3, 5), Fraction(5, 8)) == Fraction(8, 13)
    assert farey_sum(Fraction(0), Fraction(1)) == Fraction(1, 2)


def test_enumeration_counts():
    assert len(list(iter_triples(0))) == 0
    assert len(list(iter_triples(1))) == 1
    assert len(list(iter_triples(6))) == 63
    assert len(tree_words(6)) == 65


def test_bijection_to_depth_8():
    # middle words to depth 8 biject with their slopes
    seen = {}
    for t in iter_triples(8):
        f = fraction_of_word(t.middle)
        assert f not in seen
        seen[f] = t.middle
        assert word_of_fraction(f) == t.middle
        assert word_triple_of_fraction(f) == t
    assert len(seen) == 2 ** 8 - 1


def test_mediant_word_is_concatenation():
    # the word of a mediant is the concatenation of the parents' words
    for t in iter_triples(8):
        assert farey_sum(fraction_of_word(t.left), fraction_of_word(t.right)) \
            == fraction_of_word(t.middle)


@given(st.integers(1, 200), st.integers(1, 200))
def test_fraction_word_roundtrip(a, b):
    from math import gcd
    f = Fraction(min(a, b), max(a, b) + (a == b))
    if f >= 1 or gcd(a, b) == 0:
        return
    w = word_of_fraction(f)
    assert fraction_of_word(w) == f


def test_christoffel_path_rejects():
    with pytest.raises(NotChristoffel):
        christoffel_path("ba")
    with pytest.raises(NotChristoffel):
        christoffel_path("a")
    with pytest.raises(NotChristoffel):
        christoffel_path("aabb")
    assert christoffel_path("aab")[0] == "L"
