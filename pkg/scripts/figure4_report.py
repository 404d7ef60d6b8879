#!/usr/bin/env python3
"""Run the bounded castling-tree reachability search and dump the report.

Searches the polynomial castling tree from (t; 1) for the tabulated node
polynomials under adjustable degree/length/state bounds and prints the
deterministic JSON report (found targets come with their move paths).
"""

import argparse
import json

from markov_deform.castling import figure4_search


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-degree", type=int, default=30)
    ap.add_argument("--max-len", type=int, default=5)
    ap.add_argument("--max-states", type=int, default=200000)
    args = ap.parse_args()
    report = figure4_search(max_degree=args.max_degree, max_len=args.max_len,
                            max_states=args.max_states)
    print(json.dumps(report, indent=2, sort_keys=True))


if __name__ == "__main__":
    main()
