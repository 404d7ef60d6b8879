#!/usr/bin/env python3
"""Print the fixed-point surds of word matrices over the tree.

Each Christoffel word w yields a quadratic surd over Q(q), the fixed point
of the fractional-linear action of its matrix; the polynomial under the
square root is palindromic.  Handy for eyeballing the growth of these data.
"""

import argparse

from markov_deform.bridge import bridge_words
from markov_deform.markov import fixed_point


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--depth", type=int, default=3)
    args = ap.parse_args()
    for word in bridge_words(args.depth):
        s = fixed_point(word)
        pal = s.disc_poly.coeffs == tuple(reversed(s.disc_poly.coeffs))
        print(f"{word}: tag {','.join(map(str, s.tag))}")
        print(f"  theta = ({s.display_num} + sqrt(disc)) / ({s.display_den})")
        print(f"  disc  = {s.disc_poly}  (palindromic: {pal})")
        print()


if __name__ == "__main__":
    main()
