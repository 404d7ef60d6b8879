#!/usr/bin/env python3
"""Recompute the two deformation tables side by side.

For every word in the triple tree up to a chosen depth, print the classical
Markov number, the q-value (from traces) and the t-value (from the castling
recursion), checking the bridge identity on the way.
"""

import argparse

from markov_deform.bridge import bridge_check, bridge_words
from markov_deform.castling import t_markov_value
from markov_deform.markov import markov_number, q_markov_value


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--depth", type=int, default=3)
    args = ap.parse_args()

    for word in bridge_words(args.depth):
        m = markov_number(word)
        h = q_markov_value(word)
        f = t_markov_value(word)
        ok = bridge_check(word).ok
        print(f"{word:20s} m = {m}")
        print(f"{'':20s} h = {h}")
        print(f"{'':20s} f = {f}")
        print(f"{'':20s} bridge: {'ok' if ok else 'FALSE'}")
        print()


if __name__ == "__main__":
    main()
