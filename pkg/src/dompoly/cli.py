"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 capacity or arithmetic error.
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence, TextIO

from . import config
from .bipartite import count_complete_bipartite_subgraphs, dominating_count_from_parity
from .domination import domination_polynomial
from .errors import CapacityError, GraphInputError
from .formats import iter_graph6_lines, parse_graph6, read_graph, write_graph6
from .graph import (
    complement,
    complete_bipartite_graph,
    cycle_graph,
    empty_graph,
    path_graph,
    random_gnp,
)
from .identities import alternating_edge_subset_sum, verify_all
from .neighborhood import METHODS, neighborhood_polynomial
from .poly import poly_eval_int, to_text


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


class _UsageError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    io_opts = argparse.ArgumentParser(add_help=False)
    io_opts.add_argument("input", help="graph file, or - for stdin")
    io_opts.add_argument("--format", choices=("g6", "edges"), default=None,
                         help="input format (default: detect)")

    parser = _Parser(prog="dompoly", description="Domination and neighborhood polynomials.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("dompoly", parents=[io_opts], help="print D(G,x) and d(G)")

    p = sub.add_parser("nbpoly", parents=[io_opts], help="print N(G,x)")
    p.add_argument("--method", choices=METHODS, default="direct")

    p = sub.add_parser("census", parents=[io_opts], help="complete bipartite subgraph census")
    p.add_argument("--complement", action="store_true",
                   help="census of the complement plus the predicted d(G)")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", parents=[io_opts], help="check every identity on one graph")
    p.add_argument("--json", action="store_true")
    p.add_argument("--skip-altsum", action="store_true")

    sub.add_parser("altsum", parents=[io_opts], help="alternating edge-subset sum")

    p = sub.add_parser("gen", help="emit a graph in graph6")
    kind = p.add_mutually_exclusive_group(required=True)
    kind.add_argument("--gnp", nargs=4, type=int, metavar=("N", "P_NUM", "P_DEN", "SEED"))
    kind.add_argument("--complete-bipartite", nargs=2, type=int, metavar=("P", "Q"))
    kind.add_argument("--path", type=int, metavar="N")
    kind.add_argument("--cycle", type=int, metavar="N")
    kind.add_argument("--empty", type=int, metavar="N")

    p = sub.add_parser("batch-verify", help="verify every graph6 line of a file")
    p.add_argument("input", help="graph6 file, or - for stdin")
    p.add_argument("--skip-altsum", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    return parser


def _read_text(path: str, stdin: TextIO) -> str:
    if path == "-":
        return stdin.read()
    with open(path, encoding="ascii") as fh:
        return fh.read()


def _batch_one(item: tuple[int, str, bool]) -> tuple[int, str, str | None, list[str]]:
    lineno, line, skip_altsum = item
    try:
        g = parse_graph6(line)
        report = verify_all(g, include_altsum=not skip_altsum)
    except (GraphInputError, CapacityError, ArithmeticError) as exc:
        return lineno, line, str(exc), []
    return lineno, line, None, [r.name for r in report.records if not r.passed]


def _run(args, stdin: TextIO, out: TextIO, err: TextIO) -> int:
    cmd = args.command
    if cmd == "gen":
        if args.gnp:
            g = random_gnp(*args.gnp)
        elif args.complete_bipartite:
            g = complete_bipartite_graph(*args.complete_bipartite)
        elif args.path is not None:
            g = path_graph(args.path)
        elif args.cycle is not None:
            g = cycle_graph(args.cycle)
        else:
            g = empty_graph(args.empty)
        print(write_graph6(g), file=out)
        return 0

    if cmd == "batch-verify":
        text = _read_text(args.input, stdin)
        items = [(lineno, line, args.skip_altsum) for lineno, line in iter_graph6_lines(text.splitlines())]
        if args.workers > 1:
            with ProcessPoolExecutor(max_workers=args.workers) as pool:
                results = list(pool.map(_batch_one, items, chunksize=64))
        else:
            results = [_batch_one(item) for item in items]
        failed = errors = 0
        for lineno, line, problem, names in results:
            if problem is not None:
                errors += 1
                print(f"line {lineno} {line}: ERROR {problem}", file=out)
            elif names:
                failed += 1
                print(f"line {lineno} {line}: FAIL {' '.join(names)}", file=out)
        print(f"checked {len(results)} graphs: {failed} failed, {errors} errors", file=out)
        if errors:
            return 2
        return 1 if failed else 0

    g = read_graph(_read_text(args.input, stdin), args.format)
    if cmd == "dompoly":
        d = domination_polynomial(g)
        print(f"D = {to_text(d)}", file=out)
        print(f"d = {poly_eval_int(d, 1)}", file=out)
    elif cmd == "nbpoly":
        print(f"N = {to_text(neighborhood_polynomial(g, method=args.method))}", file=out)
    elif cmd == "census":
        target = complement(g) if args.complement else g
        census = count_complete_bipartite_subgraphs(target)
        if args.json:
            data = census.to_dict()
            if args.complement:
                data["complement"] = True
                data["d"] = str(dominating_count_from_parity(g.n, census.a, census.b))
            print(json.dumps(data, indent=2), file=out)
        else:
            print(census.to_text(), file=out)
            if args.complement:
                print(f"d = {dominating_count_from_parity(g.n, census.a, census.b)}", file=out)
    elif cmd == "verify":
        report = verify_all(g, include_altsum=not args.skip_altsum)
        print(report.to_json() if args.json else report.to_text(), file=out)
        return 0 if report.passed else 1
    elif cmd == "altsum":
        print(f"S = {to_text(alternating_edge_subset_sum(g))}", file=out)
    return 0


def run(argv: Sequence[str] | None = None, stdin: TextIO | None = None,
        stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdin = stdin or sys.stdin
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    try:
        args = _build_parser().parse_args(argv)
        config.max_vertices()
        return _run(args, stdin, out, err)
    except _UsageError as exc:
        print(exc, file=err)
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except (CapacityError, ArithmeticError) as exc:
        print(f"dompoly: {exc}", file=err)
        return 3
    except (GraphInputError, ValueError, OSError) as exc:
        print(f"dompoly: {exc}", file=err)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
