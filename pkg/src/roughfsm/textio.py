"""The machine text format, table rendering, and the small map formats.

A machine document looks like:

    # free comment
    machine m5
    states q1 q2 q3 q4 q5
    block q1 q2
    block q3 q5
    block q4
    inputs a b
    trans q1 a lower { q1 q2 } upper { q1 q2 q3 q5 }
    ...

Names are single tokens without whitespace, braces or '#'. The machine
line comes first; states, block and inputs lines may follow in any
order, transitions last of all their dependencies. The serializer
always writes the canonical order shown above, with blocks in block-id
order and transitions sorted by state then symbol, so serialized
documents diff cleanly and parse back to an equal machine.

Entry state lists must be unions of blocks; ragged lists raise
NonDefinableEntry. The empty set is written { } in files and rendered
as the symbol phi in tables.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .core import is_definable, value_name
from .errors import (
    DuplicateState,
    NonDefinableEntry,
    NonPartition,
    ParseError,
    SemanticError,
    UnknownState,
    UnknownSymbol,
)
from .core import make_partition, ApproximationSpace, DefinableSet, RoughSet
from .machine import Machine, block_step, block_word_step, make_machine, word_step
from .products import InputBridge

__all__ = [
    "MachineDocument",
    "parse_machine",
    "parse_document",
    "serialize_machine",
    "render_tables",
    "parse_state_input_map",
    "parse_wiring_triples",
    "parse_bridge",
    "word_from_text",
    "subset_from_text",
    "format_definable",
    "format_rough_set",
]

_NAME = re.compile(r"[^\s{}#]+\Z")
EMPTY_SET_MARK = "φ"  # phi
UNION_MARK = "∪"


@dataclass(frozen=True)
class MachineDocument:
    """A parsed machine file: the declared name plus the machine itself."""

    name: str
    machine: Machine


def _tokenize(line: str):
    """Tokens of one line with their 1-based columns, comments stripped."""
    cut = line.find("#")
    if cut >= 0:
        line = line[:cut]
    return [(m.group(0), m.start() + 1) for m in re.finditer(r"\S+", line)]


def _check_name(token: str, lineno: int, col: int, what: str) -> str:
    if not _NAME.match(token):
        raise ParseError(f"invalid {what} name {token!r}", lineno, col)
    return token


def _parse_trans_line(tokens, lineno):
    if len(tokens) < 4:
        raise ParseError("incomplete transition line", lineno, tokens[0][1])
    state = _check_name(tokens[1][0], lineno, tokens[1][1], "state")
    symbol = _check_name(tokens[2][0], lineno, tokens[2][1], "input")
    rest = tokens[3:]

    def read_set(rest, keyword):
        if not rest or rest[0][0] != keyword:
            where = rest[0] if rest else tokens[-1]
            raise ParseError(f"expected '{keyword}'", lineno, where[1])
        rest = rest[1:]
        if not rest or rest[0][0] != "{":
            where = rest[0] if rest else tokens[-1]
            raise ParseError("expected '{'", lineno, where[1])
        rest = rest[1:]
        members = []
        while rest and rest[0][0] != "}":
            name, col = rest[0]
            members.append(_check_name(name, lineno, col, "state"))
            rest = rest[1:]
        if not rest:
            raise ParseError("unterminated set, expected '}'", lineno, tokens[-1][1])
        return members, rest[1:]

    lower, rest = read_set(rest, "lower")
    upper, rest = read_set(rest, "upper")
    if rest:
        raise ParseError(f"unexpected token {rest[0][0]!r}", lineno, rest[0][1])
    return state, symbol, lower, upper


def parse_document(text: str) -> MachineDocument:
    """Parse a machine document; see the module docstring for the format."""
    name = None
    states = None
    blocks: list[list[str]] = []
    inputs = None
    entries = []
    seen_keys = {}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = _tokenize(raw)
        if not tokens:
            continue
        keyword, col = tokens[0]
        if name is None:
            if keyword != "machine":
                raise ParseError("document must start with a machine line", lineno, col)
            if len(tokens) != 2:
                raise ParseError("machine line needs exactly one name", lineno, col)
            name = _check_name(tokens[1][0], lineno, tokens[1][1], "machine")
            continue
        if keyword == "machine":
            raise ParseError("second machine line", lineno, col)
        if keyword == "states":
            if states is not None:
                raise ParseError("second states line", lineno, col)
            if len(tokens) == 1:
                raise ParseError("states line lists no states", lineno, col)
            states = [_check_name(t, lineno, c, "state") for t, c in tokens[1:]]
        elif keyword == "block":
            if len(tokens) == 1:
                raise ParseError("block line lists no states", lineno, col)
            blocks.append([_check_name(t, lineno, c, "state") for t, c in tokens[1:]])
        elif keyword == "inputs":
            if inputs is not None:
                raise ParseError("second inputs line", lineno, col)
            if len(tokens) == 1:
                raise ParseError("inputs line lists no symbols", lineno, col)
            inputs = [_check_name(t, lineno, c, "input") for t, c in tokens[1:]]
        elif keyword == "trans":
            state, symbol, lower, upper = _parse_trans_line(tokens, lineno)
            key = (state, symbol)
            if key in seen_keys:
                raise SemanticError(
                    f"duplicate transition for ({state}, {symbol}) on line {lineno}"
                    f" (first on line {seen_keys[key]})"
                )
            seen_keys[key] = lineno
            entries.append((lineno, state, symbol, lower, upper))
        else:
            raise ParseError(f"unknown directive {keyword!r}", lineno, col)

    if name is None:
        raise ParseError("empty document; a machine line is required")
    if states is None:
        raise ParseError("missing states line")
    if not blocks:
        raise ParseError("missing block lines")
    if inputs is None:
        raise ParseError("missing inputs line")

    try:
        space = make_partition(states, blocks)
    except (DuplicateState, NonPartition) as e:
        raise SemanticError(str(e)) from e

    known = set(states)
    table = {}
    for lineno, state, symbol, lower, upper in entries:
        if state not in known:
            raise SemanticError(f"transition from unknown state {state} on line {lineno}")
        if symbol not in inputs:
            raise SemanticError(f"transition on unknown input {symbol} on line {lineno}")
        sets = []
        for side, members in (("lower", lower), ("upper", upper)):
            bad = [q for q in members if q not in known]
            if bad:
                raise SemanticError(f"unknown state {bad[0]} in {side} set on line {lineno}")
            if not is_definable(space, members):
                raise NonDefinableEntry(
                    f"{side} set of ({state}, {symbol}) on line {lineno} "
                    "is not a union of blocks"
                )
            sets.append(space.definable(space.block_id(q) for q in members))
        table[(state, symbol)] = RoughSet(sets[0], sets[1])

    machine = make_machine(space, tuple(inputs), table, name)
    return MachineDocument(name, machine)


def parse_machine(text: str) -> Machine:
    """Parse a machine document and return the machine."""
    return parse_document(text).machine


def serialize_machine(machine: Machine) -> str:
    """Write a machine in the canonical document layout.

    Structured state and input names (tuples, function symbols) are
    rendered to their printed names, so the parsed-back machine has
    plain string names but compares equal to the original.
    """
    lines = [f"machine {machine.name}"]
    lines.append("states " + " ".join(value_name(q) for q in machine.space.states))
    for cell in machine.space.blocks:
        lines.append("block " + " ".join(value_name(q) for q in cell))
    lines.append("inputs " + " ".join(value_name(x) for x in machine.alphabet))
    for q in machine.space.states:
        for x in machine.alphabet:
            r = machine.table[(q, x)]
            lines.append(
                f"trans {value_name(q)} {value_name(x)}"
                f" lower {{ {_member_list(r.lower)}}}"
                f" upper {{ {_member_list(r.upper)}}}"
            )
    return "\n".join(lines) + "\n"


def _member_list(definable: DefinableSet) -> str:
    members = definable.states_ordered()
    if not members:
        return ""
    return " ".join(value_name(q) for q in members) + " "


def format_definable(definable: DefinableSet) -> str:
    """Union-of-blocks notation: {q1,q2} joined by the union sign, phi if empty."""
    if not definable.block_ids:
        return EMPTY_SET_MARK
    parts = []
    for cell in definable.blocks_ordered():
        parts.append("{" + ",".join(value_name(q) for q in cell) + "}")
    return UNION_MARK.join(parts)


def format_rough_set(rough: RoughSet) -> str:
    return f"({format_definable(rough.lower)},{format_definable(rough.upper)})"


def word_text(word) -> str:
    names = [value_name(x) for x in word]
    if not names:
        return "e"
    if all(len(n) == 1 for n in names):
        return "".join(names)
    return ",".join(names)


def word_from_text(machine: Machine, text: str) -> tuple:
    """Read a word against a machine's alphabet.

    Symbols are matched greedily, longest name first, so single-letter
    words can be written run together ("ab") while structured names
    ("(a,b)(a,b)") still tokenize. Whitespace and commas between matches
    are skipped, except that a comma inside a structured name binds to
    the name. The empty string is the empty word.
    """
    by_name = {value_name(x): x for x in machine.alphabet}
    names = sorted(by_name, key=len, reverse=True)
    word = []
    i = 0
    while i < len(text):
        if text[i] in " ,\t":
            i += 1
            continue
        for n in names:
            if text.startswith(n, i):
                word.append(by_name[n])
                i += len(n)
                break
        else:
            raise UnknownSymbol(f"cannot read an input symbol at {text[i:]!r}")
    return tuple(word)


def subset_from_text(space: ApproximationSpace, text: str) -> tuple:
    """Read a state subset the same way word_from_text reads words.

    State names are matched greedily, longest first, with whitespace and
    separating commas skipped; "q1,q3" and "(q1,q2)(q3,q4)" both work.
    """
    by_name = {value_name(q): q for q in space.states}
    names = sorted(by_name, key=len, reverse=True)
    members = []
    i = 0
    while i < len(text):
        if text[i] in " ,\t":
            i += 1
            continue
        for n in names:
            if text.startswith(n, i):
                members.append(by_name[n])
                i += len(n)
                break
        else:
            raise UnknownState(f"cannot read a state name at {text[i:]!r}")
    return tuple(members)


def _table_rows(machine: Machine):
    """Definable sets used by the table that make sensible block rows.

    A row is any lower or upper occurring in the table that spans at
    least two blocks without being the whole state set; singleton rows
    restate the table and the full set tells nothing.
    """
    seen = {}
    for q in machine.space.states:
        for x in machine.alphabet:
            r = machine.table[(q, x)]
            for d in (r.lower, r.upper):
                if 1 < len(d.block_ids) < machine.space.n_blocks:
                    seen[tuple(sorted(d.block_ids))] = d
    return [seen[key] for key in sorted(seen)]


def _layout(header: list[str], rows: list[list[str]]) -> str:
    widths = [len(h) for h in header]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    out = []
    for row in [header] + rows:
        out.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip())
    return "\n".join(out)


def render_tables(machine: Machine, kind: str = "state", word=None, footnotes=None) -> str:
    """Render the transition table as aligned text.

    kind="state" tabulates every state against every symbol; with a
    word, a single column holds the word run from each state.
    kind="block" does the same over multi-block definable rows (see
    _table_rows). `footnotes` maps (row label, column label) to a note;
    flagged cells get a marker and the notes are listed under the table.
    """
    marks = ["*", "†", "‡"]
    notes = []

    def cell_text(row_label, col_label, value):
        text = format_rough_set(value)
        if footnotes and (row_label, col_label) in footnotes:
            mark = marks[len(notes) % len(marks)]
            notes.append((mark, footnotes[(row_label, col_label)]))
            text += mark
        return text

    delta = "δ"
    if kind == "state":
        if word is not None:
            col = f"{delta}*(q,{word_text(word)})"
            header = ["Q", col]
            rows = []
            for q in machine.space.states:
                label = value_name(q)
                rows.append([label, cell_text(label, col, word_step(machine, q, word))])
        else:
            header = ["Q"] + [f"{delta}(q,{value_name(x)})" for x in machine.alphabet]
            rows = []
            for q in machine.space.states:
                label = value_name(q)
                row = [label]
                for x in machine.alphabet:
                    row.append(cell_text(label, value_name(x), machine.table[(q, x)]))
                rows.append(row)
    elif kind == "block":
        selected = _table_rows(machine)
        if word is not None:
            col = f"{delta}D*(D,{word_text(word)})"
            header = ["D", col]
            rows = []
            for d in selected:
                label = format_definable(d)
                rows.append([label, cell_text(label, col, block_word_step(machine, d, word))])
        else:
            header = ["D"] + [f"{delta}D(D,{value_name(x)})" for x in machine.alphabet]
            rows = []
            for d in selected:
                label = format_definable(d)
                row = [label]
                for x in machine.alphabet:
                    row.append(cell_text(label, value_name(x), block_step(machine, d, x)))
                rows.append(row)
        if not rows:
            return _layout(header, []) + "\n(no multi-block definable sets occur in the table)"
    else:
        raise ValueError(f"unknown table kind {kind!r}")

    text = _layout(header, rows)
    for mark, note in notes:
        text += f"\n{mark} {note}"
    return text


def parse_state_input_map(text: str):
    """Read a map file of `state FROM TO` and `input FROM TO` lines.

    Returns (state_map, input_map) as plain name dicts; which machine
    owns which side depends on the check being run.
    """
    state_map = {}
    input_map = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = _tokenize(raw)
        if not tokens:
            continue
        keyword, col = tokens[0]
        if keyword not in ("state", "input"):
            raise ParseError(f"unknown directive {keyword!r}", lineno, col)
        if len(tokens) != 3:
            raise ParseError(f"{keyword} line needs FROM and TO", lineno, col)
        src = _check_name(tokens[1][0], lineno, tokens[1][1], keyword)
        dst = _check_name(tokens[2][0], lineno, tokens[2][1], keyword)
        target = state_map if keyword == "state" else input_map
        if src in target:
            raise ParseError(f"{keyword} {src} mapped twice", lineno, col)
        target[src] = dst
    return state_map, input_map


def parse_wiring_triples(text: str) -> list[tuple[str, str, str]]:
    """Read a wiring file of `STATE INPUT FED_INPUT` lines, in order."""
    triples = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = _tokenize(raw)
        if not tokens:
            continue
        if len(tokens) != 3:
            raise ParseError("wiring line needs STATE INPUT FED_INPUT", lineno, tokens[0][1])
        triples.append(tuple(_check_name(t, lineno, c, "wiring entry") for t, c in tokens))
    return triples


def parse_bridge(text: str) -> InputBridge:
    """Read a bridge file of `SYMBOL FIRST_INPUT SECOND_INPUT` lines.

    The carrier keeps file order; duplicate carrier symbols are refused.
    """
    carrier = []
    decode = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = _tokenize(raw)
        if not tokens:
            continue
        if len(tokens) != 3:
            raise ParseError("bridge line needs SYMBOL FIRST SECOND", lineno, tokens[0][1])
        u, x1, x2 = (_check_name(t, lineno, c, "bridge entry") for t, c in tokens)
        if u in decode:
            raise ParseError(f"bridge symbol {u} declared twice", lineno, tokens[0][1])
        carrier.append(u)
        decode[u] = (x1, x2)
    return InputBridge(tuple(carrier), decode)
