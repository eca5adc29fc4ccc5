"""Command-line entry point: ``mixedramsey <subcommand> ...``.

Exit codes: 0 success / good / proved-in, 1 not good / proved-out / not
covered, 2 usage error, 3 budget exhausted with the answer unknown.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import construct, formulas, search, transform
from .detect import is_good
from .graph import ColoringFormatError, PatternError, load_coloring, parse_pattern, save_coloring, write_coloring

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_UNKNOWN = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _pattern(text: str):
    try:
        return parse_pattern(text)
    except PatternError as exc:
        raise UsageError(str(exc)) from None


def _load(path: str):
    try:
        return load_coloring(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except ColoringFormatError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _emit(coloring, out: str | None) -> None:
    if out:
        save_coloring(coloring, out)
    else:
        sys.stdout.write(write_coloring(coloring))


def _budget(args) -> search.Budget:
    return search.Budget(nodes=args.budget_nodes, seconds=args.budget_seconds)


def cmd_construct(args) -> int:
    p = args.params
    builders = {
        "star": (1, lambda: construct.star_coloring(p[0])),
        "k10_eight": (0, construct.k10_eight),
        "k10_seven": (0, construct.k10_seven),
        "matching": (2, lambda: construct.matching_extremal(p[0], p[1])),
        "pentagon": (1, lambda: construct.pentagon_power(p[0])),
    }
    if args.name not in builders:
        raise UsageError(f"unknown construction {args.name!r}; choose from {', '.join(builders)}")
    arity, build = builders[args.name]
    if len(p) != arity:
        raise UsageError(f"{args.name} takes {arity} integer parameter(s)")
    try:
        coloring = build()
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(coloring, args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    coloring = _load(args.file)
    verdict = is_good(coloring, _pattern(args.mono), _pattern(args.rainbow))
    if verdict.good:
        print(f"good, {coloring.num_colors} colors")
        return EXIT_OK
    print(f"not good, {coloring.num_colors} colors")
    if verdict.mono_witness:
        print(f"monochromatic {verdict.mono_witness}")
    if verdict.rainbow_witness:
        print(f"rainbow {verdict.rainbow_witness}")
    return EXIT_NO


def cmd_spectrum(args) -> int:
    report = search.spectrum(args.n, _pattern(args.g), _pattern(args.h), _budget(args), workers=args.workers)
    print(report.format_table())
    if args.certificates:
        outdir = Path(args.certificates)
        outdir.mkdir(parents=True, exist_ok=True)
        for k, st in sorted(report.per_k.items()):
            if st.witness is not None:
                save_coloring(st.witness, outdir / f"n{args.n}_k{k}.col")
    return EXIT_OK if report.complete else EXIT_UNKNOWN


def cmd_exists(args) -> int:
    res = search.existence(args.n, args.k, _pattern(args.g), _pattern(args.h), _budget(args), workers=args.workers)
    print(f"{res.status} (nodes {res.nodes_explored})")
    if res.witness is not None:
        if args.output:
            save_coloring(res.witness, args.output)
        return EXIT_OK
    return EXIT_NO if res.status is search.Status.PROVED_OUT else EXIT_UNKNOWN


def cmd_min_colors(args) -> int:
    res = search.min_colors(args.n, _pattern(args.g), _pattern(args.h), _budget(args),
                            use_formulas=not args.no_formula, workers=args.workers)
    if res.value is not None:
        print(f"min = {res.value} ({res.source})")
        return EXIT_OK
    if res.status is search.Status.PROVED_OUT:
        print(f"empty spectrum ({res.source})")
        return EXIT_NO
    print("unknown (budget exhausted)")
    return EXIT_UNKNOWN


def cmd_formula(args) -> int:
    try:
        kv = formulas.lookup(" ".join(args.query))
    except formulas.NotCovered as exc:
        print(f"not covered: {exc}")
        return EXIT_NO
    print(kv)
    return EXIT_OK


def cmd_transform(args) -> int:
    coloring = _load(args.file)
    p = args.params
    try:
        if args.op == "merge":
            if len(p) != 2:
                raise UsageError("merge takes two colors")
            result = transform.merge_star_classes(coloring, p[0], p[1])
        elif args.op == "delete":
            if len(p) != 1:
                raise UsageError("delete takes one vertex")
            result = transform.delete_vertex(coloring, p[0])
        else:
            if p:
                raise UsageError("extend takes no parameters")
            result = transform.extend_new_color(coloring)
    except transform.TransformError as exc:
        raise UsageError(str(exc)) from None
    _emit(result, args.output)
    return EXIT_OK


def _add_search_opts(sp) -> None:
    sp.add_argument("--budget-nodes", type=int, default=None)
    sp.add_argument("--budget-seconds", type=float, default=None)
    sp.add_argument("--workers", type=int, default=1)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mixedramsey", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("construct", help="write a named coloring")
    sp.add_argument("name")
    sp.add_argument("params", nargs="*", type=int)
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("verify", help="check a certificate for (G, H)-goodness")
    sp.add_argument("file")
    sp.add_argument("--mono", required=True)
    sp.add_argument("--rainbow", required=True)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("spectrum", help="classify every color count for K_n")
    sp.add_argument("n", type=int)
    sp.add_argument("g")
    sp.add_argument("h")
    sp.add_argument("--certificates", metavar="DIR")
    _add_search_opts(sp)
    sp.set_defaults(func=cmd_spectrum)

    sp = sub.add_parser("exists", help="search for a good coloring with exactly k colors")
    sp.add_argument("n", type=int)
    sp.add_argument("k", type=int)
    sp.add_argument("g")
    sp.add_argument("h")
    sp.add_argument("-o", "--output")
    _add_search_opts(sp)
    sp.set_defaults(func=cmd_exists)

    sp = sub.add_parser("min-colors", help="least color count in the spectrum")
    sp.add_argument("n", type=int)
    sp.add_argument("g")
    sp.add_argument("h")
    sp.add_argument("--no-formula", action="store_true")
    _add_search_opts(sp)
    sp.set_defaults(func=cmd_min_colors)

    sp = sub.add_parser("formula", help="look up a closed-form value, e.g. 'S(10,C4,K3+e)'")
    sp.add_argument("query", nargs="+")
    sp.set_defaults(func=cmd_formula)

    sp = sub.add_parser("transform", help="merge star classes, delete a vertex, or extend")
    sp.add_argument("op", choices=["merge", "delete", "extend"])
    sp.add_argument("file")
    sp.add_argument("params", nargs="*", type=int)
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_transform)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
