"""Structure-preserving maps between machines: homomorphisms and coverings.

A homomorphism (f, g) sends states of the first machine to states of the
second and inputs to inputs so that (i) equivalent states stay
equivalent and (ii) the image of each entry's lower (upper) part is
contained in the target entry's lower (upper) part.

A covering of m1 by m2 runs the other way around: an onto state map
eta from m2's states to m1's and an input translation xi from m1's
alphabet to m2's, such that (i) eta preserves equivalence and (ii)
whatever m1 does from eta(q2) on a word is contained in the eta-image of
what m2 does from q2 on the translated word. Condition (ii) is checked
on table entries for single symbols and through word runs for longer
words, up to a configurable depth.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iter_product
from typing import Mapping

from .core import DefinableSet, value_name
from .errors import BudgetExceeded, NotOnto, TotalityError
from .machine import Machine, word_step

__all__ = [
    "MorphismPair",
    "CoveringPair",
    "CheckResult",
    "check_homomorphism",
    "check_isomorphism",
    "check_covering",
    "search_coverings",
]


@dataclass(frozen=True)
class MorphismPair:
    """A state map f: Q1 -> Q2 and an input map g: X1 -> X2."""

    state_map: Mapping
    input_map: Mapping

    def f(self, q):
        return self.state_map[q]

    def g(self, x):
        return self.input_map[x]


@dataclass(frozen=True)
class CoveringPair:
    """A state map eta: Q2 -> Q1 (onto) and an input map xi: X1 -> X2."""

    state_map: Mapping
    input_map: Mapping

    def eta(self, q):
        return self.state_map[q]

    def xi(self, x):
        return self.input_map[x]

    def xi_word(self, word):
        return tuple(self.input_map[x] for x in word)


@dataclass(frozen=True)
class CheckResult:
    """Outcome of a morphism or covering check.

    `holds` is the verdict; on failure `counterexample` carries the
    offending pair, either two equivalent states whose images separate or
    a (state, word) whose transition containment breaks.
    """

    holds: bool
    reason: str = ""
    counterexample: tuple | None = field(default=None)

    def __bool__(self):
        return self.holds

    def __str__(self):
        if self.holds:
            return "holds"
        if self.counterexample is None:
            return f"fails: {self.reason}"
        parts = ", ".join(value_name(v) for v in self.counterexample)
        return f"fails at ({parts}): {self.reason}"


def _require_total(mapping: Mapping, domain, codomain, what: str):
    codomain = set(codomain)
    for v in domain:
        if v not in mapping:
            raise TotalityError(f"{what} is undefined on {value_name(v)}")
        if mapping[v] not in codomain:
            raise TotalityError(
                f"{what} sends {value_name(v)} outside its codomain"
            )


def _image_states(mapping: Mapping, definable: DefinableSet) -> frozenset:
    return frozenset(mapping[q] for q in definable.states_set())


def _blocks_respected(source: Machine, target: Machine, mapping: Mapping) -> CheckResult:
    for cell in source.space.blocks:
        anchor = cell[0]
        target_block = target.space.block_id(mapping[anchor])
        for q in cell[1:]:
            if target.space.block_id(mapping[q]) != target_block:
                return CheckResult(
                    False,
                    "equivalent states map to inequivalent states",
                    (anchor, q),
                )
    return CheckResult(True)


def check_homomorphism(m1: Machine, m2: Machine, pair: MorphismPair, depth: int = 2) -> CheckResult:
    """Decide whether (f, g) is a homomorphism from m1 to m2.

    Single symbols are checked on the transition tables; every word of
    length 1..depth is additionally checked through word runs. Raises
    TotalityError when f or g misses part of its domain or escapes its
    codomain.
    """
    _require_total(pair.state_map, m1.space.states, m2.space.states, "state map")
    _require_total(pair.input_map, m1.alphabet, m2.alphabet, "input map")

    respected = _blocks_respected(m1, m2, pair.state_map)
    if not respected:
        return respected

    for q in m1.space.states:
        for x in m1.alphabet:
            r1 = m1.table[(q, x)]
            r2 = m2.table[(pair.f(q), pair.g(x))]
            if not _image_states(pair.state_map, r1.lower) <= r2.lower.states_set():
                return CheckResult(False, "lower image escapes the target lower", (q, x))
            if not _image_states(pair.state_map, r1.upper) <= r2.upper.states_set():
                return CheckResult(False, "upper image escapes the target upper", (q, x))

    for n in range(1, depth + 1):
        for word in iter_product(m1.alphabet, repeat=n):
            mapped = tuple(pair.g(x) for x in word)
            for q in m1.space.states:
                r1 = word_step(m1, q, word)
                r2 = word_step(m2, pair.f(q), mapped)
                if not _image_states(pair.state_map, r1.lower) <= r2.lower.states_set():
                    return CheckResult(False, "lower image escapes the target lower", (q, word))
                if not _image_states(pair.state_map, r1.upper) <= r2.upper.states_set():
                    return CheckResult(False, "upper image escapes the target upper", (q, word))
    return CheckResult(True)


def check_isomorphism(m1: Machine, m2: Machine, pair: MorphismPair, depth: int = 2) -> CheckResult:
    """A homomorphism whose state and input maps are both bijections."""
    hom = check_homomorphism(m1, m2, pair, depth)
    if not hom:
        return hom
    f_values = set(pair.state_map.values())
    if len(f_values) != len(m1.space.states):
        return CheckResult(False, "state map is not injective")
    if f_values != set(m2.space.states):
        return CheckResult(False, "state map is not onto the target states")
    g_values = set(pair.input_map.values())
    if len(g_values) != len(m1.alphabet):
        return CheckResult(False, "input map is not injective")
    if g_values != set(m2.alphabet):
        return CheckResult(False, "input map is not onto the target alphabet")
    return CheckResult(True)


def check_covering(m1: Machine, m2: Machine, pair: CoveringPair, depth: int = 2) -> CheckResult:
    """Decide whether m2 covers m1 through (eta, xi).

    eta must be total on m2's states and onto m1's (NotOnto otherwise);
    xi must be total on m1's alphabet into m2's. Word length runs from 1
    to max(1, depth): single symbols compare table entries, longer words
    compare word runs, with xi applied symbol by symbol. The empty word
    is deliberately out of scope; it would assert a block-surjectivity
    property that coverings do not promise.
    """
    _require_total(pair.state_map, m2.space.states, m1.space.states, "state map")
    _require_total(pair.input_map, m1.alphabet, m2.alphabet, "input map")
    if set(pair.state_map[q] for q in m2.space.states) != set(m1.space.states):
        raise NotOnto("state map does not reach every covered state")

    respected = _blocks_respected(m2, m1, pair.state_map)
    if not respected:
        return respected

    eta = pair.state_map
    for q2 in m2.space.states:
        q1 = eta[q2]
        for x in m1.alphabet:
            r1 = m1.table[(q1, x)]
            r2 = m2.table[(q2, pair.xi(x))]
            if not r1.lower.states_set() <= _image_states(eta, r2.lower):
                return CheckResult(False, "covered lower escapes the eta-image", (q2, x))
            if not r1.upper.states_set() <= _image_states(eta, r2.upper):
                return CheckResult(False, "covered upper escapes the eta-image", (q2, x))

    for n in range(2, max(1, depth) + 1):
        for word in iter_product(m1.alphabet, repeat=n):
            mapped = pair.xi_word(word)
            for q2 in m2.space.states:
                r1 = word_step(m1, eta[q2], word)
                r2 = word_step(m2, q2, mapped)
                if not r1.lower.states_set() <= _image_states(eta, r2.lower):
                    return CheckResult(False, "covered lower escapes the eta-image", (q2, word))
                if not r1.upper.states_set() <= _image_states(eta, r2.upper):
                    return CheckResult(False, "covered upper escapes the eta-image", (q2, word))
    return CheckResult(True)


def search_coverings(m1: Machine, m2: Machine, depth: int = 1, budget: int = 1_000_000) -> list[CoveringPair]:
    """Every (eta, xi) under which m2 covers m1, in enumeration order.

    Candidate state maps run lexicographically over m1's states per m2
    state, input maps over m2's alphabet per m1 symbol, state map major.
    The full candidate count |Q1|^|Q2| * |X2|^|X1| must stay within
    `budget` (BudgetExceeded otherwise). Returns [] when nothing passes;
    with fewer states in m2 than in m1 no map is onto, so the result is
    empty without enumeration.
    """
    n_states = len(m1.space.states) ** len(m2.space.states)
    n_inputs = len(m2.alphabet) ** len(m1.alphabet)
    size = n_states * n_inputs
    if size > budget:
        raise BudgetExceeded(size, budget)
    if len(m2.space.states) < len(m1.space.states):
        return []

    found = []
    targets = set(m1.space.states)
    for f_values in iter_product(m1.space.states, repeat=len(m2.space.states)):
        if set(f_values) != targets:
            continue
        eta = dict(zip(m2.space.states, f_values))
        for g_values in iter_product(m2.alphabet, repeat=len(m1.alphabet)):
            xi = dict(zip(m1.alphabet, g_values))
            pair = CoveringPair(eta, xi)
            if check_covering(m1, m2, pair, depth):
                found.append(pair)
    return found
