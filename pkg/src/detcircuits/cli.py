"""Command-line front end.

Verbs on circuit files: eval (fast determinant path), oracle (exponential
tensor contraction), check (fast vs oracle vs multicycle total), multicycles
(list weights), compile (emit a Pfaffian circuit file).  On Pfaffian files:
pfeval.  On graph files: forests, trees, poly.

Exit codes: 0 success, 1 usage error, 2 parse or validation failure,
3 value mismatch in check.  All output is deterministic.
"""

from __future__ import annotations

import argparse
import sys

from .circuit import evaluate
from .compiler import compile_circuit
from .errors import ParseError, ValidationError
from .formats import (
    parse_circuit,
    parse_graph,
    parse_pfaffian,
    write_pfaffian,
)
from .graphs import (
    count_rooted_forests,
    count_spanning_trees,
    forest_polynomial,
    reorient,
)
from .pfaffian import eval_pfaffian_circuit
from .scalars import format_scalar, scalars_equal
from .tensor import contract_circuit, enumerate_multicycles, multicycle_total


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); we want exit code 1
        raise _UsageError(message)


def _build_parser() -> _Parser:
    p = _Parser(prog="detcirc",
                description="evaluate determinantal circuits, compile them "
                            "to Pfaffian form, and count spanning forests")
    sub = p.add_subparsers(dest="verb", required=True, metavar="verb")

    def circuit_verb(name: str, help_text: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("path", help="circuit file")
        sp.add_argument("--field", choices=("rational", "complex"),
                        default="rational", help="scalar field of the file")
        return sp

    def graph_verb(name: str, help_text: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("path", help="graph file")
        sp.add_argument("--orientation-seed", type=int, default=None,
                        help="re-randomize edge directions (counts are invariant)")
        return sp

    circuit_verb("eval", "evaluate a closed circuit (polynomial time)")
    circuit_verb("oracle", "evaluate by brute-force tensor contraction")
    circuit_verb("check", "compare fast value, oracle, and multicycle total")
    circuit_verb("multicycles", "list nonzero multicycles and their weights")
    sp = circuit_verb("compile", "compile to a Pfaffian circuit file")
    sp.add_argument("-o", "--output",
                    help="output path (default: input path + .pf)")

    sp = sub.add_parser("pfeval", help="evaluate a Pfaffian circuit file")
    sp.add_argument("path", help="pfaffian file")
    sp.add_argument("--field", choices=("rational", "complex"),
                    default="rational", help="scalar field of the file")

    graph_verb("forests", "count rooted spanning forests")
    graph_verb("trees", "count spanning trees")
    graph_verb("poly", "forest polynomial coefficients, ascending in roots")
    return p


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_graph(ns) -> object:
    g = parse_graph(_read(ns.path))
    if ns.orientation_seed is not None:
        g = reorient(g, ns.orientation_seed)
    return g


def _run(ns) -> int:
    if ns.verb == "eval":
        c = parse_circuit(_read(ns.path), ns.field)
        print(format_scalar(evaluate(c)))
    elif ns.verb == "oracle":
        c = parse_circuit(_read(ns.path), ns.field)
        print(format_scalar(contract_circuit(c)))
    elif ns.verb == "check":
        c = parse_circuit(_read(ns.path), ns.field)
        fast = evaluate(c)
        slow = contract_circuit(c)
        cyc = multicycle_total(c)
        if not (scalars_equal(fast, slow) and scalars_equal(fast, cyc)):
            print("mismatch: eval={} oracle={} multicycles={}".format(
                format_scalar(fast), format_scalar(slow), format_scalar(cyc)),
                file=sys.stderr)
            return 3
        print(f"ok {format_scalar(fast)}")
    elif ns.verb == "multicycles":
        c = parse_circuit(_read(ns.path), ns.field)
        total = None
        for mc in enumerate_multicycles(c):
            sup = " ".join(f"{k}:{lab}" for k, lab in sorted(mc.support))
            print(f"({sup}) {format_scalar(mc.weight)}")
            total = mc.weight if total is None else total + mc.weight
        print("total {}".format(format_scalar(total) if total is not None
                                else "0"))
    elif ns.verb == "compile":
        c = parse_circuit(_read(ns.path), ns.field)
        compiled = compile_circuit(c)
        out_path = ns.output if ns.output else ns.path + ".pf"
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(write_pfaffian(compiled.target))
        print(f"size_ratio {format_scalar(compiled.size_ratio)}")
    elif ns.verb == "pfeval":
        pc = parse_pfaffian(_read(ns.path), ns.field)
        print(format_scalar(eval_pfaffian_circuit(pc)))
    elif ns.verb == "forests":
        print(count_rooted_forests(_load_graph(ns)))
    elif ns.verb == "trees":
        print(count_spanning_trees(_load_graph(ns)))
    elif ns.verb == "poly":
        poly = forest_polynomial(_load_graph(ns))
        print(" ".join(str(c) for c in poly.coefficients))
    else:  # pragma: no cover - argparse enforces the verb set
        raise AssertionError(ns.verb)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    try:
        return _run(ns)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def console_main() -> None:
    sys.exit(main())
