"""Product constructions on rough transition machines.

All five products share the same state side, the componentwise product
of the two approximation spaces, and differ only in the input alphabet
and in which entry of each factor a product letter selects:

  full direct        letters (x1, x2), factors stepped independently
  restricted direct  one shared alphabet, both factors read the letter
  general direct     an external alphabet decoded through a bridge
  wreath             letters (f, x2) where f chooses the first factor's
                     input per second-factor state
  cascade            the second factor's alphabet, with a wiring
                     choosing the first factor's input from (q2, x2)

Entry values multiply componentwise: lower with lower, upper with upper.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iter_product
from typing import Mapping, Sequence

from .core import ApproximationSpace, DefinableSet, RoughSet, product_partition, value_name
from .errors import (
    AlphabetMismatch,
    BridgeTotalityError,
    BudgetExceeded,
    ShapeMismatch,
    UnknownState,
    UnknownSymbol,
    WiringTotalityError,
)
from .machine import Machine, make_machine

__all__ = [
    "FunctionSymbol",
    "InputBridge",
    "CascadeWiring",
    "all_function_symbols",
    "full_direct",
    "restricted_direct",
    "general_direct",
    "wreath",
    "cascade",
    "diagonal_bridge",
    "pairing_bridge",
    "wreath_word_pair",
    "wreath_identity",
    "compose_wreath_inputs",
]

WREATH_BUDGET = 4096
"""Default cap on the wreath alphabet size |X1|^|Q2| * |X2|."""


@dataclass(frozen=True)
class FunctionSymbol:
    """A choice of first-factor input per second-factor state.

    `domain` is the second factor's state tuple in declared order and
    `outputs[i]` the value at `domain[i]`. Two symbols are equal exactly
    when they agree pointwise on the same domain. Prints as
    f[out1,out2,...] with outputs in domain order.
    """

    domain: tuple
    outputs: tuple
    _at: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.domain) != len(self.outputs):
            raise ShapeMismatch("one output per domain state is required")
        object.__setattr__(self, "_at", dict(zip(self.domain, self.outputs)))

    def __call__(self, state):
        try:
            return self._at[state]
        except KeyError:
            raise UnknownState(f"function symbol has no value at {value_name(state)}") from None

    def __str__(self):
        return "f[" + ",".join(value_name(o) for o in self.outputs) + "]"


@dataclass(frozen=True)
class InputBridge:
    """An external alphabet with a decoding into pairs of factor inputs."""

    carrier: tuple
    decode: Mapping

    def pair_for(self, symbol):
        try:
            pair = self.decode[symbol]
        except KeyError:
            raise BridgeTotalityError(f"bridge does not decode {value_name(symbol)}") from None
        if not isinstance(pair, tuple) or len(pair) != 2:
            raise BridgeTotalityError(f"bridge decodes {value_name(symbol)} to a non-pair")
        return pair


@dataclass(frozen=True)
class CascadeWiring:
    """A map from (second-factor state, its input) to a first-factor input."""

    omega: Mapping

    def feed(self, state, symbol):
        try:
            return self.omega[(state, symbol)]
        except KeyError:
            raise WiringTotalityError(
                f"wiring is undefined at ({value_name(state)}, {value_name(symbol)})"
            ) from None


def all_function_symbols(values: Sequence, domain: Sequence) -> list[FunctionSymbol]:
    """Every function symbol from `domain` into `values`.

    Enumerated with outputs running lexicographically in the order of
    `values`, so the listing is deterministic.
    """
    domain = tuple(domain)
    return [FunctionSymbol(domain, outputs) for outputs in iter_product(values, repeat=len(domain))]


def _pair_set(space: ApproximationSpace, n2: int, d1: DefinableSet, d2: DefinableSet) -> DefinableSet:
    # Block (i, j) of the product space sits at index i * n2 + j.
    return DefinableSet(space, frozenset(i * n2 + j for i in d1.block_ids for j in d2.block_ids))


def _build(m1: Machine, m2: Machine, alphabet, resolve, name: str) -> Machine:
    space = product_partition(m1.space, m2.space)
    n2 = m2.space.n_blocks
    table = {}
    for q1 in m1.space.states:
        for q2 in m2.space.states:
            for a in alphabet:
                r1, r2 = resolve(q1, q2, a)
                table[((q1, q2), a)] = RoughSet(
                    _pair_set(space, n2, r1.lower, r2.lower),
                    _pair_set(space, n2, r1.upper, r2.upper),
                )
    return make_machine(space, tuple(alphabet), table, name)


def full_direct(m1: Machine, m2: Machine) -> Machine:
    """Both factors run side by side; letters are input pairs (x1, x2)."""
    alphabet = tuple((x1, x2) for x1 in m1.alphabet for x2 in m2.alphabet)

    def resolve(q1, q2, a):
        x1, x2 = a
        return m1.table[(q1, x1)], m2.table[(q2, x2)]

    return _build(m1, m2, alphabet, resolve, f"full({m1.name},{m2.name})")


def restricted_direct(m1: Machine, m2: Machine) -> Machine:
    """Both factors read the same letter; the alphabets must agree."""
    if m1.alphabet != m2.alphabet:
        raise AlphabetMismatch("restricted product needs one shared alphabet")

    def resolve(q1, q2, a):
        return m1.table[(q1, a)], m2.table[(q2, a)]

    return _build(m1, m2, m1.alphabet, resolve, f"restricted({m1.name},{m2.name})")


def general_direct(m1: Machine, m2: Machine, bridge: InputBridge) -> Machine:
    """An external alphabet drives both factors through the bridge's decoding."""
    if len(set(bridge.carrier)) != len(bridge.carrier):
        raise BridgeTotalityError("bridge carrier lists a symbol twice")
    for u in bridge.carrier:
        x1, x2 = bridge.pair_for(u)
        if x1 not in m1.alphabet:
            raise UnknownSymbol(f"bridge sends {value_name(u)} to unknown first input {value_name(x1)}")
        if x2 not in m2.alphabet:
            raise UnknownSymbol(f"bridge sends {value_name(u)} to unknown second input {value_name(x2)}")

    def resolve(q1, q2, a):
        x1, x2 = bridge.pair_for(a)
        return m1.table[(q1, x1)], m2.table[(q2, x2)]

    return _build(m1, m2, tuple(bridge.carrier), resolve, f"general({m1.name},{m2.name})")


def wreath(m1: Machine, m2: Machine, budget: int = WREATH_BUDGET) -> Machine:
    """Letters pair a per-state input choice for m1 with an input for m2.

    The alphabet has |X1|^|Q2| * |X2| letters, which grows fast; the
    construction refuses to materialize more than `budget` of them.
    """
    n_letters = len(m1.alphabet) ** len(m2.space.states) * len(m2.alphabet)
    if n_letters > budget:
        raise BudgetExceeded(n_letters, budget, what="wreath alphabet")
    alphabet = tuple(
        (f, x2)
        for f in all_function_symbols(m1.alphabet, m2.space.states)
        for x2 in m2.alphabet
    )

    def resolve(q1, q2, a):
        f, x2 = a
        return m1.table[(q1, f(q2))], m2.table[(q2, x2)]

    return _build(m1, m2, alphabet, resolve, f"wreath({m1.name},{m2.name})")


def cascade(m1: Machine, m2: Machine, wiring: CascadeWiring) -> Machine:
    """m2 reads the letter and the wiring turns (q2, letter) into m1's input."""
    for q2 in m2.space.states:
        for x2 in m2.alphabet:
            x1 = wiring.feed(q2, x2)
            if x1 not in m1.alphabet:
                raise UnknownSymbol(
                    f"wiring feeds unknown input {value_name(x1)} at "
                    f"({value_name(q2)}, {value_name(x2)})"
                )

    def resolve(q1, q2, a):
        return m1.table[(q1, wiring.feed(q2, a))], m2.table[(q2, a)]

    return _build(m1, m2, m2.alphabet, resolve, f"cascade({m1.name},{m2.name})")


def diagonal_bridge(alphabet: Sequence) -> InputBridge:
    """The bridge sending each shared letter x to the pair (x, x)."""
    alphabet = tuple(alphabet)
    return InputBridge(alphabet, {x: (x, x) for x in alphabet})


def pairing_bridge(first_alphabet: Sequence, second_alphabet: Sequence) -> InputBridge:
    """The identity bridge on all input pairs, first component major."""
    carrier = tuple((x1, x2) for x1 in first_alphabet for x2 in second_alphabet)
    return InputBridge(carrier, {pair: pair for pair in carrier})


def wreath_word_pair(f: FunctionSymbol, symbol) -> tuple[FunctionSymbol, tuple]:
    """Lift a wreath letter into the word semigroup.

    Outputs become one-letter words and the second component a one-letter
    word, so letters and composites live in one representation.
    """
    lifted = FunctionSymbol(f.domain, tuple((o,) for o in f.outputs))
    return lifted, (symbol,)


def wreath_identity(domain: Sequence) -> tuple[FunctionSymbol, tuple]:
    """The unit: the everywhere-empty-word function with the empty word."""
    domain = tuple(domain)
    return FunctionSymbol(domain, ((),) * len(domain)), ()


def compose_wreath_inputs(first, second):
    """Concatenate two word-valued wreath inputs pointwise.

    (f, s) * (g, t) = (fg, st) where (fg)(q) is f's word at q followed by
    g's word at q. Operands must share a domain (ShapeMismatch) and be in
    the word form produced by wreath_word_pair or wreath_identity.
    """
    f, s = first
    g, t = second
    if f.domain != g.domain:
        raise ShapeMismatch("wreath inputs over different domains do not compose")
    outputs = tuple(fo + go for fo, go in zip(f.outputs, g.outputs))
    return FunctionSymbol(f.domain, outputs), tuple(s) + tuple(t)
