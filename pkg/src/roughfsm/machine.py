"""Finite state machines whose transitions land on rough sets.

A machine is an approximation space of states, a finite input alphabet,
and a total table assigning to every (state, symbol) pair a rough set of
successor states. Transitions extend from states to definable sets
(union the entries over the set's members) and from symbols to words
(thread the lower track through lowers and the upper track through
uppers, starting from the block of the initial state).

Words are plain tuples of symbols; the empty tuple is the empty word.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .core import ApproximationSpace, DefinableSet, RoughSet, is_realizable, value_name
from .errors import MismatchedSpace, SemanticError, UnknownState, UnknownSymbol

__all__ = [
    "Machine",
    "Violation",
    "Word",
    "make_machine",
    "validate_machine",
    "block_step",
    "word_step",
    "block_word_step",
]

Word = tuple
"""A word is a tuple of input symbols; () is the empty word."""


@dataclass(frozen=True)
class Violation:
    """One problem found in a machine's table."""

    state: object
    symbol: object
    reason: str

    def __str__(self):
        place = ""
        if self.state is not None or self.symbol is not None:
            q = value_name(self.state) if self.state is not None else "?"
            x = value_name(self.symbol) if self.symbol is not None else "?"
            place = f" at ({q}, {x})"
        return self.reason + place


class Machine:
    """An input alphabet plus a rough transition table over a state space.

    `table` maps (state, symbol) to a RoughSet over `space`. Machines are
    value objects: two compare equal when their rendered state names,
    blocks, alphabets and table entries agree, so a machine survives a
    round trip through the text format even though structured names
    (tuples, function symbols) come back as plain strings. The display
    name is carried along but ignored by equality.
    """

    __hash__ = None

    def __init__(self, space: ApproximationSpace, alphabet: Sequence, table: Mapping, name: str = "m"):
        self.space = space
        self.alphabet = tuple(alphabet)
        self.table = dict(table)
        self.name = name
        self._symbol_index = {x: i for i, x in enumerate(self.alphabet)}

    @property
    def states(self) -> tuple:
        return self.space.states

    def entry(self, state, symbol) -> RoughSet:
        self.space.position(state)
        if symbol not in self._symbol_index:
            raise UnknownSymbol(f"unknown input symbol {value_name(symbol)}")
        return self.table[(state, symbol)]

    def symbol_index(self, symbol) -> int:
        try:
            return self._symbol_index[symbol]
        except KeyError:
            raise UnknownSymbol(f"unknown input symbol {value_name(symbol)}") from None

    def canonical_key(self):
        def set_names(d: DefinableSet):
            return tuple(value_name(q) for q in d.states_ordered())

        entries = []
        for q in self.space.states:
            for x in self.alphabet:
                r = self.table.get((q, x))
                cell = None
                if r is not None:
                    cell = (set_names(r.lower), set_names(r.upper))
                entries.append((value_name(q), value_name(x), cell))
        return (
            tuple(value_name(q) for q in self.space.states),
            tuple(tuple(value_name(q) for q in cell) for cell in self.space.blocks),
            tuple(value_name(x) for x in self.alphabet),
            tuple(entries),
        )

    def __eq__(self, other):
        if not isinstance(other, Machine):
            return NotImplemented
        return self.canonical_key() == other.canonical_key()

    def __repr__(self):
        return (
            f"Machine({self.name!r}: {len(self.space.states)} states, "
            f"{self.space.n_blocks} blocks, {len(self.alphabet)} inputs)"
        )


def validate_machine(machine: Machine, strict: bool = False) -> list[Violation]:
    """All problems with a machine's shape, empty when it is well formed.

    Checks that states and alphabet are nonempty, the table is total with
    no stray entries, every entry is a RoughSet over the machine's own
    space, and lower <= upper holds throughout. With strict=True each
    entry must additionally be realizable, i.e. arise as the
    approximation of some state subset (no singleton boundary blocks).
    """
    out: list[Violation] = []
    if not machine.space.states:
        out.append(Violation(None, None, "machine has no states"))
    if not machine.alphabet:
        out.append(Violation(None, None, "machine has no input symbols"))
    if len(set(machine.alphabet)) != len(machine.alphabet):
        out.append(Violation(None, None, "alphabet lists a symbol twice"))

    expected = {(q, x) for q in machine.space.states for x in machine.alphabet}
    for key in machine.table:
        if key not in expected:
            q, x = key
            out.append(Violation(q, x, "entry outside the state/alphabet grid"))
    for q in machine.space.states:
        for x in machine.alphabet:
            r = machine.table.get((q, x))
            if r is None:
                out.append(Violation(q, x, "missing table entry"))
                continue
            if not isinstance(r, RoughSet):
                out.append(Violation(q, x, "entry is not a rough set"))
                continue
            if r.lower.space != machine.space or r.upper.space != machine.space:
                out.append(Violation(q, x, "entry lives in a different space"))
                continue
            if not r.lower <= r.upper:
                out.append(Violation(q, x, "lower approximation not contained in upper"))
                continue
            if strict and not is_realizable(machine.space, r.lower, r.upper):
                out.append(Violation(q, x, "entry is not the approximation of any subset"))
    return out


def make_machine(space: ApproximationSpace, alphabet: Sequence, table: Mapping, name: str = "m") -> Machine:
    """Build a machine and reject it unless its shape is valid.

    Raises SemanticError carrying the violations. Realizability is not
    required here; pass the result through validate_machine(strict=True)
    when the stronger property matters.
    """
    m = Machine(space, alphabet, table, name)
    problems = validate_machine(m)
    if problems:
        raise SemanticError(f"machine {name} is not well formed", problems)
    return m


def _lower_ids(machine: Machine, ids: frozenset, symbol) -> frozenset:
    acc = set()
    for i in ids:
        for q in machine.space.blocks[i]:
            acc |= machine.table[(q, symbol)].lower.block_ids
    return frozenset(acc)


def _upper_ids(machine: Machine, ids: frozenset, symbol) -> frozenset:
    acc = set()
    for i in ids:
        for q in machine.space.blocks[i]:
            acc |= machine.table[(q, symbol)].upper.block_ids
    return frozenset(acc)


def block_step(machine: Machine, current: DefinableSet, symbol) -> RoughSet:
    """One transition out of a definable set of states.

    The lower (upper) part is the union of the entry lowers (uppers) over
    every state of the set. The empty set steps to (empty, empty).
    """
    if current.space != machine.space:
        raise MismatchedSpace("definable set belongs to a different space")
    machine.symbol_index(symbol)
    space = machine.space
    return RoughSet(
        DefinableSet(space, _lower_ids(machine, current.block_ids, symbol)),
        DefinableSet(space, _upper_ids(machine, current.block_ids, symbol)),
    )


def word_step(machine: Machine, state, word: Sequence) -> RoughSet:
    """Run a word from a state; the empty word yields the state's block.

    After the first symbol the lower track continues through the lowers
    of block transitions and the upper track through the uppers, each
    fed its own current set.
    """
    start = machine.space.block_of(state)
    low = start.block_ids
    up = start.block_ids
    for symbol in word:
        machine.symbol_index(symbol)
        low = _lower_ids(machine, low, symbol)
        up = _upper_ids(machine, up, symbol)
    space = machine.space
    return RoughSet(DefinableSet(space, low), DefinableSet(space, up))


def block_word_step(machine: Machine, current: DefinableSet, word: Sequence) -> RoughSet:
    """Run a word from a definable set: the union of word runs over its states."""
    if current.space != machine.space:
        raise MismatchedSpace("definable set belongs to a different space")
    space = machine.space
    low: frozenset = frozenset()
    up: frozenset = frozenset()
    if not word:
        return RoughSet(DefinableSet(space, current.block_ids), DefinableSet(space, current.block_ids))
    for i in current.block_ids:
        for q in space.blocks[i]:
            r = word_step(machine, q, word)
            low |= r.lower.block_ids
            up |= r.upper.block_ids
    return RoughSet(DefinableSet(space, low), DefinableSet(space, up))
