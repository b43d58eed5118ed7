"""Approximation spaces and rough subsets of a finite state set.

An approximation space is a finite set of states together with an
equivalence relation, kept here as the ordered list of its blocks. A
subset A of the states is approximated from below by the union of the
blocks contained in A and from above by the union of the blocks meeting
A. The pair of approximations is a rough set; sets that equal their own
approximations (unions of blocks) are definable.

Definable sets are stored as frozensets of block ids, never of raw
states, so set algebra stays exact and cheap. All types are immutable
values: equal content compares equal and can be used in dicts and sets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import DuplicateState, MismatchedSpace, NonPartition, UnknownState

__all__ = [
    "ApproximationSpace",
    "DefinableSet",
    "RoughSet",
    "make_partition",
    "approximate",
    "is_definable",
    "is_realizable",
    "product_partition",
    "value_name",
]


def value_name(value) -> str:
    """Canonical printed name of a state or input symbol.

    Plain values print as themselves; tuples print as "(a,b)" with the
    members named recursively and no spaces. The result contains no
    whitespace as long as the atoms do not, which keeps names usable as
    single tokens in the text format.
    """
    if isinstance(value, tuple):
        return "(" + ",".join(value_name(v) for v in value) + ")"
    return str(value)


@dataclass(frozen=True)
class ApproximationSpace:
    """A finite state set with an equivalence relation given by its blocks.

    `states` fixes the declared order; `blocks` holds the partition cells
    with members in state order and cells ordered by their first member.
    Use make_partition to build one from unordered input.
    """

    states: tuple
    blocks: tuple[tuple, ...]
    _block_id: dict = field(init=False, repr=False, compare=False)
    _position: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        position = {}
        for i, q in enumerate(self.states):
            if q in position:
                raise DuplicateState(f"state {value_name(q)} declared twice")
            position[q] = i
        block_id = {}
        for i, cell in enumerate(self.blocks):
            for q in cell:
                if q not in position:
                    raise NonPartition(f"block member {value_name(q)} is not a state")
                if q in block_id:
                    raise NonPartition(f"state {value_name(q)} lies in two blocks")
                block_id[q] = i
        if len(block_id) != len(position):
            missing = next(q for q in self.states if q not in block_id)
            raise NonPartition(f"state {value_name(missing)} lies in no block")
        object.__setattr__(self, "_position", position)
        object.__setattr__(self, "_block_id", block_id)

    @property
    def n_blocks(self) -> int:
        return len(self.blocks)

    def position(self, state) -> int:
        """Index of `state` in the declared order."""
        try:
            return self._position[state]
        except KeyError:
            raise UnknownState(f"unknown state {value_name(state)}") from None

    def block_id(self, state) -> int:
        """Id of the block containing `state`."""
        self.position(state)
        return self._block_id[state]

    def block_of(self, state) -> "DefinableSet":
        """The block containing `state`, as a definable set."""
        return DefinableSet(self, frozenset((self.block_id(state),)))

    def empty_set(self) -> "DefinableSet":
        return DefinableSet(self, frozenset())

    def full_set(self) -> "DefinableSet":
        return DefinableSet(self, frozenset(range(self.n_blocks)))

    def definable(self, block_ids: Iterable[int]) -> "DefinableSet":
        ids = frozenset(block_ids)
        for i in ids:
            if not 0 <= i < self.n_blocks:
                raise NonPartition(f"no block with id {i}")
        return DefinableSet(self, ids)


@dataclass(frozen=True)
class DefinableSet:
    """A union of blocks of one approximation space.

    The value is the frozenset of block ids; the space pins down what the
    ids mean. Supports |, & and <= against sets of the same space.
    """

    space: ApproximationSpace
    block_ids: frozenset[int]

    def states_set(self) -> frozenset:
        return frozenset(q for i in self.block_ids for q in self.space.blocks[i])

    def states_ordered(self) -> tuple:
        members = self.states_set()
        return tuple(q for q in self.space.states if q in members)

    def blocks_ordered(self) -> tuple[tuple, ...]:
        return tuple(self.space.blocks[i] for i in sorted(self.block_ids))

    def _check_space(self, other: "DefinableSet"):
        if self.space != other.space:
            raise MismatchedSpace("definable sets live in different spaces")

    def __contains__(self, state) -> bool:
        return self.space.block_id(state) in self.block_ids

    def __bool__(self) -> bool:
        return bool(self.block_ids)

    def __le__(self, other: "DefinableSet") -> bool:
        self._check_space(other)
        return self.block_ids <= other.block_ids

    def __or__(self, other: "DefinableSet") -> "DefinableSet":
        self._check_space(other)
        return DefinableSet(self.space, self.block_ids | other.block_ids)

    def __and__(self, other: "DefinableSet") -> "DefinableSet":
        self._check_space(other)
        return DefinableSet(self.space, self.block_ids & other.block_ids)

    def __sub__(self, other: "DefinableSet") -> "DefinableSet":
        self._check_space(other)
        return DefinableSet(self.space, self.block_ids - other.block_ids)


@dataclass(frozen=True)
class RoughSet:
    """A lower and an upper approximation over one shared space.

    Values produced by approximate() always satisfy lower <= upper.
    Construction does not enforce that, so validators can describe broken
    tables instead of refusing to represent them.
    """

    lower: DefinableSet
    upper: DefinableSet

    def __post_init__(self):
        if self.lower.space != self.upper.space:
            raise MismatchedSpace("lower and upper belong to different spaces")

    @property
    def space(self) -> ApproximationSpace:
        return self.lower.space

    def boundary(self) -> DefinableSet:
        return self.upper - self.lower

    def is_exact(self) -> bool:
        return self.lower.block_ids == self.upper.block_ids


def make_partition(states: Iterable, cells: Iterable[Iterable]) -> ApproximationSpace:
    """Build an approximation space from a state list and partition cells.

    The cells may come in any order and any internal order; they are
    canonicalized (members in state order, cells by first member). Raises
    DuplicateState for repeated state names and NonPartition when the
    cells overlap, miss a state, are empty, or mention an undeclared name.
    """
    states = tuple(states)
    seen = set()
    for q in states:
        if q in seen:
            raise DuplicateState(f"state {value_name(q)} declared twice")
        seen.add(q)
    position = {q: i for i, q in enumerate(states)}

    normalized = []
    for cell in cells:
        members = tuple(cell)
        if not members:
            raise NonPartition("empty block")
        for q in members:
            if q not in position:
                raise NonPartition(f"block member {value_name(q)} is not a state")
        if len(set(members)) != len(members):
            raise NonPartition("block lists a state twice")
        normalized.append(tuple(sorted(members, key=position.__getitem__)))
    normalized.sort(key=lambda cell: position[cell[0]])
    return ApproximationSpace(states, tuple(normalized))


def approximate(space: ApproximationSpace, members: Iterable) -> RoughSet:
    """Rough approximation of an arbitrary subset of the states.

    Lower: blocks contained in the subset. Upper: blocks meeting it.
    Raises UnknownState if the subset mentions a state outside the space.
    """
    subset = frozenset(members)
    for q in subset:
        space.position(q)
    lower = []
    upper = []
    for i, cell in enumerate(space.blocks):
        inside = sum(1 for q in cell if q in subset)
        if inside == len(cell):
            lower.append(i)
        if inside:
            upper.append(i)
    return RoughSet(space.definable(lower), space.definable(upper))


def is_definable(space: ApproximationSpace, members: Iterable) -> bool:
    """True iff the subset is a union of blocks (its own lower and upper)."""
    subset = frozenset(members)
    for q in subset:
        space.position(q)
    for cell in space.blocks:
        inside = sum(1 for q in cell if q in subset)
        if inside not in (0, len(cell)):
            return False
    return True


def is_realizable(space: ApproximationSpace, lower: DefinableSet, upper: DefinableSet) -> bool:
    """True iff (lower, upper) is the approximation of some subset.

    That happens exactly when lower <= upper and every block of the
    boundary has at least two states: a singleton block meeting a subset
    is already contained in it, so it can never sit strictly between the
    approximations.
    """
    if lower.space != space or upper.space != space:
        raise MismatchedSpace("definable sets belong to a different space")
    if not lower <= upper:
        return False
    for i in upper.block_ids - lower.block_ids:
        if len(space.blocks[i]) < 2:
            return False
    return True


def product_partition(first: ApproximationSpace, second: ApproximationSpace) -> ApproximationSpace:
    """The componentwise product space.

    States are pairs (q1, q2) in first-major order, and two pairs are
    equivalent iff both components are. Block ids follow the same
    first-major convention: the pair of blocks (i, j) becomes block
    i * second.n_blocks + j, which product constructions rely on.
    """
    states = tuple((p, q) for p in first.states for q in second.states)
    blocks = tuple(
        tuple((p, q) for p in cell1 for q in cell2)
        for cell1 in first.blocks
        for cell2 in second.blocks
    )
    return ApproximationSpace(states, blocks)
