"""Line-oriented text formats for circuits, Pfaffian circuits, and graphs.

All parsers report 1-based line numbers in ParseError.  Writers are
deterministic: the same object always serializes to the same bytes, so
round-trip tests can compare output verbatim.
"""

from __future__ import annotations

from .circuit import Circuit, Stack, identity_wiring
from .errors import ParseError, SizeMismatch, ValidationError
from .labeled import LabeledMatrix, labeled
from .pfaffian import PfaffianCircuit, PfGate, skew
from .graphs import Graph
from .scalars import Scalar, format_scalar, parse_scalar


def _tokens(line: str) -> list[str]:
    return line.split()


def _significant(text: str):
    """Yield (lineno, stripped line) skipping blanks and # comments."""
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield no, line


def _parse_int(tok: str, lineno: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(lineno, f"expected integer {what}, got {tok!r}") from None


def _parse_grid(lines, r: int, c: int, field: str, lineno: int) -> list[list[Scalar]]:
    grid = []
    for _ in range(r):
        try:
            no, line = next(lines)
        except StopIteration:
            raise ParseError(lineno, f"expected {r} matrix rows, file ended early") from None
        toks = _tokens(line)
        if len(toks) != c:
            raise ParseError(no, f"expected {c} entries, got {len(toks)}")
        row = []
        for tok in toks:
            try:
                row.append(parse_scalar(tok, field))
            except ValueError as exc:
                raise ParseError(no, str(exc)) from None
        grid.append(row)
    return grid


# ---------------------------------------------------------------- circuits

def parse_circuit(text: str, field: str = "rational") -> Circuit:
    """Parse the circuit format.

    Layout: `stack` opens a stack; `gate r c <r row labels> / <c col labels>`
    followed by r rows of c scalars adds a gate to the open stack;
    `wiring k: a->b, c->d` gives the wire bijection out of stack k.  Gaps
    with no wiring line default to the sorted-label identity pairing.
    """
    lines = _significant(text)
    stacks: list[list[LabeledMatrix]] = []
    wirings: dict[int, tuple[tuple[int, int], ...]] = {}
    wiring_lines: dict[int, int] = {}
    for no, line in lines:
        toks = _tokens(line)
        head = toks[0]
        if head == "stack":
            if len(toks) != 1:
                raise ParseError(no, "stack line takes no arguments")
            stacks.append([])
        elif head == "gate":
            if not stacks:
                raise ParseError(no, "gate before any stack line")
            if len(toks) < 3:
                raise ParseError(no, "gate needs dimensions: gate r c <rows> / <cols>")
            r = _parse_int(toks[1], no, "row count")
            c = _parse_int(toks[2], no, "column count")
            rest = toks[3:]
            if rest.count("/") != 1:
                raise ParseError(no, "gate labels need a single / separator")
            cut = rest.index("/")
            row_toks, col_toks = rest[:cut], rest[cut + 1:]
            if len(row_toks) != r or len(col_toks) != c:
                raise ParseError(
                    no, f"expected {r} row labels and {c} column labels, "
                        f"got {len(row_toks)} and {len(col_toks)}")
            rows = tuple(_parse_int(t, no, "row label") for t in row_toks)
            cols = tuple(_parse_int(t, no, "column label") for t in col_toks)
            grid = _parse_grid(lines, r, c, field, no)
            stacks[-1].append(labeled(rows, cols, grid))
        elif head == "wiring":
            body = line[len("wiring"):].strip()
            if ":" not in body:
                raise ParseError(no, "wiring needs a colon: wiring k: a->b, ...")
            k_part, _, pairs_part = body.partition(":")
            k = _parse_int(k_part.strip(), no, "wiring index")
            if k in wirings:
                raise ParseError(no, f"duplicate wiring {k}")
            pairs = []
            pairs_part = pairs_part.strip()
            if pairs_part:
                for chunk in pairs_part.split(","):
                    chunk = chunk.strip()
                    if "->" not in chunk:
                        raise ParseError(no, f"bad wiring pair {chunk!r}, expected a->b")
                    a_tok, _, b_tok = chunk.partition("->")
                    pairs.append((_parse_int(a_tok.strip(), no, "wire label"),
                                  _parse_int(b_tok.strip(), no, "wire label")))
            wirings[k] = tuple(pairs)
            wiring_lines[k] = no
        else:
            raise ParseError(no, f"unknown directive {head!r}")

    m = len(stacks)
    for k in wirings:
        if not (0 <= k < m):
            raise ParseError(wiring_lines[k],
                             f"wiring {k} out of range for {m} stacks")
    built_stacks = tuple(Stack(tuple(gates)) for gates in stacks)
    full_wirings = []
    for k in range(m):
        if k in wirings:
            full_wirings.append(wirings[k])
        else:
            src = built_stacks[k].out_labels
            dst = built_stacks[(k + 1) % m].in_labels
            try:
                full_wirings.append(identity_wiring(src, dst))
            except SizeMismatch:
                raise ParseError(
                    0, f"no wiring {k} and boundary sizes differ "
                       f"({len(src)} outputs vs {len(dst)} inputs)") from None
    return Circuit(built_stacks, tuple(full_wirings))


def write_circuit(c: Circuit) -> str:
    out = []
    for stack in c.stacks:
        out.append("stack")
        for g in stack.gates:
            r, cc = g.shape
            out.append("gate {} {} {} / {}".format(
                r, cc,
                " ".join(str(l) for l in g.rows),
                " ".join(str(l) for l in g.cols)))
            for row in g.entries:
                out.append(" ".join(format_scalar(x) for x in row))
    for k, wiring in enumerate(c.wirings):
        pairs = ", ".join(f"{a}->{b}" for a, b in wiring)
        out.append(f"wiring {k}: {pairs}" if pairs else f"wiring {k}:")
    return "\n".join(out) + "\n" if out else ""


# ------------------------------------------------------- pfaffian circuits

def parse_pfaffian(text: str, field: str = "rational") -> PfaffianCircuit:
    """Parse `pfgate state|costate n <n edge ids>` blocks with n x n grids."""
    lines = _significant(text)
    gates: list[PfGate] = []
    max_edge = 0
    for no, line in lines:
        toks = _tokens(line)
        if toks[0] != "pfgate":
            raise ParseError(no, f"expected pfgate, got {toks[0]!r}")
        if len(toks) < 3:
            raise ParseError(no, "pfgate needs: pfgate state|costate n <edges>")
        kind = toks[1]
        if kind not in ("state", "costate"):
            raise ParseError(no, f"pfgate kind must be state or costate, got {kind!r}")
        n = _parse_int(toks[2], no, "size")
        edge_toks = toks[3:]
        if len(edge_toks) != n:
            raise ParseError(no, f"expected {n} edge ids, got {len(edge_toks)}")
        edges = tuple(_parse_int(t, no, "edge id") for t in edge_toks)
        for e in edges:
            if e < 1:
                raise ParseError(no, f"edge ids are positive, got {e}")
        grid = _parse_grid(lines, n, n, field, no)
        try:
            gates.append(PfGate(kind, skew(edges, grid)))
        except (ValidationError, ValueError) as exc:
            raise ParseError(no, str(exc)) from None
        if edges:
            max_edge = max(max_edge, max(edges))
    return PfaffianCircuit(tuple(gates), max_edge)


def write_pfaffian(pc: PfaffianCircuit) -> str:
    out = []
    for g in pc.gates:
        n = g.matrix.size
        out.append("pfgate {} {} {}".format(
            g.kind, n, " ".join(str(e) for e in g.matrix.labels)).rstrip())
        for row in g.matrix.entries:
            out.append(" ".join(format_scalar(x) for x in row))
    return "\n".join(out) + "\n" if out else ""


# ------------------------------------------------------------------ graphs

def parse_graph(text: str) -> Graph:
    """Parse `n m` then m lines `u v` (1-based, oriented u to v as listed)."""
    lines = _significant(text)
    try:
        no, line = next(lines)
    except StopIteration:
        raise ParseError(1, "empty graph file, expected header n m") from None
    toks = _tokens(line)
    if len(toks) != 2:
        raise ParseError(no, "header must be: n m")
    n = _parse_int(toks[0], no, "vertex count")
    m = _parse_int(toks[1], no, "edge count")
    if n < 0 or m < 0:
        raise ParseError(no, "counts must be nonnegative")
    edges = []
    for _ in range(m):
        try:
            no, line = next(lines)
        except StopIteration:
            raise ParseError(no, f"expected {m} edge lines, file ended early") from None
        toks = _tokens(line)
        if len(toks) != 2:
            raise ParseError(no, "edge line must be: u v")
        edges.append((_parse_int(toks[0], no, "endpoint"),
                      _parse_int(toks[1], no, "endpoint")))
    try:
        no, line = next(lines)
    except StopIteration:
        pass
    else:
        raise ParseError(no, "trailing content after last edge")
    return Graph(n, tuple(edges))


def write_graph(g: Graph) -> str:
    out = [f"{g.vertex_count} {len(g.edges)}"]
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"
