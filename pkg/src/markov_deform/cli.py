"""Command-line interface.

One executable, `markov-deform`, exposing the computations, the tree
enumerations, the verification suites and the erratum ledger.  Output is
deterministic: identical arguments produce byte-identical stdout.  Exit
codes: 0 on success, 1 on verification failure (a JSON witness goes to
stderr), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from . import bridge as bridge_mod
from . import castling, contfrac, errata, markov, qrat, words
from .exact_arith import to_json


def _fraction(s: str) -> Fraction:
    try:
        if "/" in s:
            num, den = s.split("/", 1)
            return Fraction(int(num), int(den))
        return Fraction(int(s))
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a fraction: {s!r}") from exc


def _emit(obj, fmt: str) -> None:
    if fmt == "json":
        print(to_json(obj))
    else:
        if isinstance(obj, dict):
            for k, v in obj.items():
                print(f"{k}: {v}")
        elif isinstance(obj, list):
            for v in obj:
                print(v)
        else:
            print(obj)


def _fail(witness) -> int:
    print(to_json(witness), file=sys.stderr)
    return 1


# ---------------------------------------------------------------------------
# subcommands

def cmd_qrat(args) -> int:
    q = qrat.q_rational(args.fraction, via=args.via)
    if args.format == "json":
        _emit(q.to_obj(), "json")
    else:
        print(q)
    return 0


def cmd_cf(args) -> int:
    reg = contfrac.cf_regular(args.fraction)
    neg = contfrac.cf_negative(args.fraction)
    if args.format == "text":
        print("regular:", ",".join(map(str, reg.terms)))
        print("negative:", ",".join(map(str, neg.terms)))
    else:
        _emit({"fraction": str(args.fraction),
               "regular": list(reg.terms), "negative": list(neg.terms)}, "json")
    return 0


def cmd_word(args) -> int:
    print(words.word_of_fraction(args.fraction))
    return 0


def cmd_markov(args) -> int:
    if "/" in args.target or args.target.isdigit():
        frac = _fraction(args.target)
        word = words.word_of_fraction(frac)
    else:
        word = args.target
        if word not in ("a", "b"):
            words.christoffel_path(word)
        frac = words.fraction_of_word(word)
    out = {"word": word, "fraction": str(frac),
           "markov_number": str(markov.markov_number(word))}
    if word not in ("a", "b"):
        triple = markov.markov_triple(words.word_triple_of_fraction(frac))
        out["triple"] = [str(v) for v in triple]
    _emit(out, args.format)
    return 0


def cmd_fixed_point(args) -> int:
    s = markov.fixed_point(args.word)
    out = {
        "word": s.word,
        "tag": list(s.tag),
        "scale": s.scale,
        "p_num": s.p_num.to_obj(),
        "den": s.den.to_obj(),
        "disc": s.disc_poly.to_obj(),
    }
    if args.format == "json":
        _emit(out, "json")
    else:
        print(f"theta({s.word}) = ({s.display_num} + sqrt({s.disc_poly})) / ({s.display_den})")
        print(f"tag: {','.join(map(str, s.tag))}")
    return 0


def cmd_bridge(args) -> int:
    w = bridge_mod.bridge_check(args.word)
    out = {"word": w.word, "equal": w.ok,
           "lhs": w.lhs.to_obj(), "rhs": w.rhs.to_obj()}
    _emit(out, args.format)
    return 0 if w.ok else _fail(out)


def cmd_pv(args) -> int:
    label, rendered = castling.pv_of_fraction(args.fraction)
    _emit({"fraction": str(args.fraction),
           "triple": [str(label.m1), str(label.m2), str(label.m3)],
           "space": rendered}, args.format)
    return 0


def _dot(rows, node_label) -> str:
    lines = ["digraph tree {"]
    for i, (_words, _values) in enumerate(rows):
        lines.append(f'  n{i} [label="{node_label(_words, _values)}"];')
        left, right = 2 * i + 1, 2 * i + 2
        if left < len(rows):
            lines.append(f"  n{i} -> n{left};")
        if right < len(rows):
            lines.append(f"  n{i} -> n{right};")
    lines.append("}")
    return "\n".join(lines)


def cmd_tree(args) -> int:
    depth = args.depth
    kind = args.kind
    if kind == "castling":
        labels = castling.markov_subtree_scan(args.budget)
        rows = [l.sorted_dims() for l in labels]
        if args.format == "json":
            _emit([[str(v) for v in r] for r in rows], "json")
        else:
            for r in rows:
                print(r)
        return 0

    if kind == "words":
        rows = [(t.words(), t.words()) for t in words.iter_triples(depth)]
    elif kind == "markov":
        rows = [(node.words(), trip) for node, trip in markov.iter_markov_tree(depth)]
    elif kind == "qmarkov":
        rows = [(node.words(), trip.values()) for node, trip in markov.iter_q_markov_tree(depth)]
    else:
        rows = [(node.words(), trip.values()) for node, trip in castling.iter_t_markov_tree(depth)]

    def render(values):
        if kind == "words":
            return list(values)
        if args.label == "numeric":
            if kind == "markov":
                return [str(v) for v in values]
            if kind == "qmarkov":
                return [str(v.eval_at_one()) for v in values]
            return [str(v.eval(3)) for v in values]
        return [str(v) for v in values]

    if args.format == "dot":
        print(_dot(rows, lambda w, v: "(" + ", ".join(render(v)) + ")"))
    elif args.format == "json":
        _emit([{"words": list(w), "values": render(v)} for w, v in rows], "json")
    else:
        for w, v in rows:
            print(f"({', '.join(w)}) -> ({', '.join(render(v))})")
    return 0


def cmd_search(args) -> int:
    report = castling.figure4_search(max_degree=args.max_degree,
                                     max_len=args.max_len,
                                     max_states=args.max_states)
    _emit(report, "json")
    return 0


def cmd_erratum(args) -> int:
    _emit(errata.build_erratum_ledger(), "json")
    return 0


def cmd_verify(args) -> int:
    suite = args.suite
    depth = args.depth
    failures: list[dict] = []

    if suite == "qmarkov":
        for node, trip in markov.iter_q_markov_tree(depth):
            w = markov.verify_q_markov(trip)
            if not w:
                failures.append({"triple": list(node.words()),
                                 "residual": w.residual.to_obj()})
    elif suite == "t-eq":
        for node, trip in castling.iter_t_markov_tree(depth):
            w = castling.verify_t_markov(trip)
            if not w:
                failures.append({"triple": list(node.words()),
                                 "residual": w.residual.to_obj()})
    elif suite == "bridge":
        for w in bridge_mod.bridge_words(depth):
            b = bridge_mod.bridge_check(w)
            if not b:
                failures.append({"word": w, "lhs": b.lhs.to_obj(),
                                 "rhs": b.rhs.to_obj()})
        if not bridge_mod.equation_transport_check(min(depth, 4)):
            failures.append({"check": "equation-transport"})
    elif suite == "commutator":
        for node in words.iter_triples(depth):
            if not markov.commutator_trace_check(markov.CohnTriple.from_words(node)):
                failures.append({"triple": list(node.words())})
    elif suite == "divisibility":
        for node in words.iter_triples(depth):
            for w in node.words():
                try:
                    markov.q_markov_value(w)
                except Exception as exc:
                    failures.append({"word": w, "error": str(exc)})
    elif suite == "fricke":
        rng = random.Random(0)
        for _ in range(args.count):
            w1 = "".join(rng.choice("ab") for _ in range(rng.randint(1, 5)))
            w2 = "".join(rng.choice("ab") for _ in range(rng.randint(1, 5)))
            x = markov.cohn_matrix(w1, "q")
            y = markov.cohn_matrix(w2, "q")
            if not markov.fricke_check(x, y):
                failures.append({"pair": [w1, w2]})
    elif suite == "alt1":
        for node in words.iter_triples(depth):
            if not markov.verify_alt_deformation_1(node):
                failures.append({"triple": list(node.words())})
    elif suite == "alt2":
        for node in words.iter_triples(depth):
            if not markov.alt_deformation_2_corrected(node):
                failures.append({"triple": list(node.words())})
    elif suite == "chebyshev":
        try:
            for n in range(31):
                castling.s_poly(n)
            if not castling.pq_recurrence_check(20):
                failures.append({"check": "pq-recurrences"})
            for n in range(1, 13):
                if castling.f_ab_power(n) != castling.t_markov_value("a" + "b" * n):
                    failures.append({"check": f"f_ab_power({n})"})
        except AssertionError as exc:
            failures.append({"check": "s-poly", "error": str(exc)})
    elif suite == "polycf":
        for d in castling.polycf_display_table():
            fn = castling.t_markov_value(d["num_word"])
            fd = castling.t_markov_value(d["den_word"])
            exp = contfrac.polycf_expand(fn, fd)
            n2, d2 = contfrac.polycf_eval(exp)
            if n2 * fd != d2 * fn:
                failures.append({"display": d["name"], "check": "expansion"})
    elif suite == "fixedpoint":
        for w in bridge_mod.bridge_words(depth):
            s = markov.fixed_point(w)
            r1, r2 = s.residual()
            if not (r1.is_zero and r2.is_zero):
                failures.append({"word": w})
            if s.disc_poly.coeffs != tuple(reversed(s.disc_poly.coeffs)):
                failures.append({"word": w, "check": "palindromy"})
    else:
        raise AssertionError(f"unhandled suite {suite}")

    if failures:
        return _fail({"suite": suite, "failures": failures})
    print(to_json({"suite": suite, "ok": True}))
    return 0


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="markov-deform",
        description="Exact Markov triples, their q-deformations over Z[q, 1/q] "
                    "and t-deformations from castling moves.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p, choices=("json", "text")):
        p.add_argument("--format", choices=choices, default="json")

    p = sub.add_parser("qrat", help="q-deform a positive rational")
    p.add_argument("fraction", type=_fraction)
    p.add_argument("--via", choices=("regular", "negative", "matrix"),
                   default="regular")
    add_format(p)
    p.set_defaults(func=cmd_qrat)

    p = sub.add_parser("cf", help="regular and negative expansions")
    p.add_argument("fraction", type=_fraction)
    add_format(p)
    p.set_defaults(func=cmd_cf)

    p = sub.add_parser("word", help="Christoffel word of a fraction in (0, 1]")
    p.add_argument("fraction", type=_fraction)
    p.set_defaults(func=cmd_word)

    p = sub.add_parser("markov", help="Markov data of a word or fraction")
    p.add_argument("target")
    add_format(p)
    p.set_defaults(func=cmd_markov)

    p = sub.add_parser("fixed-point", help="fixed point of a word matrix")
    p.add_argument("word")
    add_format(p)
    p.set_defaults(func=cmd_fixed_point)

    p = sub.add_parser("bridge", help="compare the two deformations of a word")
    p.add_argument("word")
    add_format(p)
    p.set_defaults(func=cmd_bridge)

    p = sub.add_parser("pv", help="Markov-type tuple of a fraction")
    p.add_argument("fraction", type=_fraction)
    add_format(p)
    p.set_defaults(func=cmd_pv)

    p = sub.add_parser("tree", help="enumerate a tree")
    p.add_argument("kind", choices=("words", "markov", "qmarkov", "tmarkov",
                                    "castling"))
    p.add_argument("--depth", type=int, default=3)
    p.add_argument("--dim", type=int, choices=(3,), default=3,
                   help="acting dimension of the integer castling scan")
    p.add_argument("--budget", type=int, default=1000)
    p.add_argument("--label", choices=("generic", "numeric"), default="generic")
    add_format(p, choices=("json", "text", "dot"))
    p.set_defaults(func=cmd_tree)

    p = sub.add_parser("search", help="bounded reachability searches")
    p.add_argument("what", choices=("figure4",))
    p.add_argument("--max-degree", type=int, default=30)
    p.add_argument("--max-len", type=int, default=5)
    p.add_argument("--max-states", type=int, default=200000)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=("qmarkov", "t-eq", "bridge", "fricke",
                                     "commutator", "divisibility", "alt1",
                                     "alt2", "chebyshev", "polycf",
                                     "fixedpoint"))
    p.add_argument("--depth", type=int, default=4)
    p.add_argument("--count", type=int, default=1000)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("erratum", help="emit the machine-readable erratum ledger")
    p.set_defaults(func=cmd_erratum)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        # domain errors (out-of-range fractions, malformed words, ...)
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
