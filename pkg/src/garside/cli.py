"""
Command line interface.

    garside [--structure artin|bkl] -n N COMMAND ...

Commands: ``nf``, ``conjugate``, ``summit``, ``graph``, ``centralizer``,
``classes``. Braid words use the grammar documented in :mod:`garside.words`
and are passed as a single (quoted) argument, e.g. ``"s1 s2^-1 D"``.

Exit codes: 0 success, 1 usage or parse error, 2 vertex cap exceeded,
3 internal invariant breach.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from dataclasses import asdict

from .centralizer import (
    DEFAULT_VERTEX_CAP,
    ResourceCapExceeded,
    build_graph,
    centralizer_generators,
    conjugacy_witness,
    reduce_generators,
)
from .classes import conjugacy_classes
from .export import graph_to_dot, graph_to_json, structure_for
from .summit import InvariantBreach, summit_representative
from .words import WordSyntaxError, parse_word

EXIT_OK, EXIT_USAGE, EXIT_CAP, EXIT_INVARIANT = 0, 1, 2, 3
CSV_COLUMNS = ["representative", "class_size", "summit_size", "raw_generators", "reduced_generators"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_lengths(text: str) -> range:
    lo, _, hi = text.partition("-")
    try:
        lo_i = int(lo)
        hi_i = int(hi) if hi else lo_i
    except ValueError:
        raise UsageError(f"bad length range {text!r}") from None
    if lo_i < 0 or hi_i < lo_i:
        raise UsageError(f"bad length range {text!r}")
    return range(lo_i, hi_i + 1)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="garside", description="Summit graphs and centralizers in braid groups.")
    p.add_argument("--structure", choices=["artin", "bkl"], default="artin")
    p.add_argument("-n", type=int, required=True, help="number of strands")
    p.add_argument("--cap", type=int, default=DEFAULT_VERTEX_CAP, help="maximum summit class size")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("nf", help="print the left normal form")
    s.add_argument("word")

    s = sub.add_parser("conjugate", help="decide conjugacy and print a witness c with c^-1 a c = b")
    s.add_argument("word_a")
    s.add_argument("word_b")

    s = sub.add_parser("summit", help="summit representative, witness and class size")
    s.add_argument("word")

    s = sub.add_parser("graph", help="export the minimal summit graph")
    s.add_argument("word")
    fmt = s.add_mutually_exclusive_group()
    fmt.add_argument("--dot", dest="fmt", action="store_const", const="dot")
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json")
    s.add_argument("-o", "--output", help="write to a file instead of stdout")
    s.add_argument("--workers", type=int, default=1)

    s = sub.add_parser("centralizer", help="generators of the centralizer")
    s.add_argument("word")
    mode = s.add_mutually_exclusive_group()
    mode.add_argument("--raw", dest="reduced", action="store_false")
    mode.add_argument("--reduced", dest="reduced", action="store_true")
    s.add_argument("--workers", type=int, default=1)
    s.set_defaults(reduced=True)

    s = sub.add_parser("classes", help="conjugacy classes of positive braids of given length(s)")
    s.add_argument("lengths", help="a length such as 11, or a range such as 4-20")
    fmt = s.add_mutually_exclusive_group()
    fmt.add_argument("--csv", dest="fmt", action="store_const", const="csv")
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json")
    s.add_argument("--resume", metavar="FILE", help="JSON checkpoint of finished lengths")
    return p


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def run(args: argparse.Namespace) -> None:
    if args.n < 2 or args.cap < 1:
        raise UsageError("need n >= 2 and a positive cap")
    g = structure_for(args.structure, args.n)
    out = sys.stdout

    if args.command == "nf":
        print(parse_word(g, args.word), file=out)

    elif args.command == "conjugate":
        a, b = parse_word(g, args.word_a), parse_word(g, args.word_b)
        c = conjugacy_witness(a, b, cap=args.cap)
        if c is None:
            print("not conjugate", file=out)
        else:
            print("conjugate", file=out)
            print(f"witness: {c}", file=out)

    elif args.command == "summit":
        a = parse_word(g, args.word)
        profile = summit_representative(a)
        graph, _ = build_graph(profile, cap=args.cap)
        print(f"representative: {profile.representative}", file=out)
        print(f"witness: {profile.witness}", file=out)
        print(f"inf: {profile.summit_inf}", file=out)
        print(f"sup: {profile.summit_sup}", file=out)
        print(f"class size: {len(graph.vertices)}", file=out)

    elif args.command == "graph":
        a = parse_word(g, args.word)
        profile = summit_representative(a)
        graph, tree = build_graph(profile, cap=args.cap, workers=args.workers)
        if args.fmt == "json":
            gens = centralizer_generators(a, graph=(profile, graph, tree)).generators
            _emit(graph_to_json(graph, tree, gens) + "\n", args.output)
        else:
            _emit(graph_to_dot(graph, tree), args.output)

    elif args.command == "centralizer":
        a = parse_word(g, args.word)
        gs = centralizer_generators(a, cap=args.cap, workers=args.workers)
        if args.reduced:
            gs = reduce_generators(gs)
        for x in gs.generators:
            print(x, file=out)

    elif args.command == "classes":
        lengths = parse_lengths(args.lengths)
        tables = conjugacy_classes(g, lengths, cap=args.cap, checkpoint=args.resume)
        multi = len(lengths) > 1
        if args.fmt == "csv":
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            w.writerow((["length"] if multi else []) + CSV_COLUMNS)
            for length, rows in tables.items():
                for r in rows:
                    w.writerow(([length] if multi else []) + [getattr(r, c) for c in CSV_COLUMNS])
            out.write(buf.getvalue())
        elif args.fmt == "json":
            data = {str(k): [asdict(r) for r in v] for k, v in tables.items()}
            out.write(json.dumps(data, indent=1) + "\n")
        else:
            total = 0
            for length, rows in tables.items():
                print(f"# length {length}: {len(rows)} classes", file=out)
                for r in rows:
                    print(
                        f"{r.representative}\tclass={r.class_size}\tsummit={r.summit_size}"
                        f"\traw={r.raw_generators}\treduced={r.reduced_generators}",
                        file=out,
                    )
                total += len(rows)
            if multi:
                print(f"# total: {total} classes", file=out)


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        print(f"garside: {e}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as e:  # --help
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        run(args)
    except (UsageError, WordSyntaxError, ValueError) as e:
        print(f"garside: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceCapExceeded as e:
        print(f"garside: {e}", file=sys.stderr)
        return EXIT_CAP
    except InvariantBreach as e:
        print(f"garside: internal invariant breach: {e}", file=sys.stderr)
        return EXIT_INVARIANT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
