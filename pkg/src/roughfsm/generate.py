"""Seeded random machines for property tests and verification trials.

Every entry is produced by approximating a random subset of the states,
so generated tables are realizable by construction, not just well
formed. All draws go through the caller's random.Random, which keeps
trial populations reproducible from a seed.
"""

from __future__ import annotations

import random
from typing import Sequence

from .core import ApproximationSpace, approximate, make_partition
from .machine import Machine, make_machine
from .products import CascadeWiring, InputBridge

__all__ = [
    "random_partition",
    "random_machine",
    "random_wiring",
    "random_bridge",
    "exact_machine",
]

_INPUT_POOL = "abcdefgh"


def random_partition(rng: random.Random, states: Sequence, min_block_size: int = 1) -> ApproximationSpace:
    """A random partition of `states`, each block at least `min_block_size` big."""
    states = list(states)
    rng.shuffle(states)
    cells = []
    i = 0
    while i < len(states):
        remaining = len(states) - i
        if remaining < 2 * min_block_size:
            size = remaining
        else:
            size = rng.randint(min_block_size, min(remaining - min_block_size, max(min_block_size, 3)))
        cells.append(states[i : i + size])
        i += size
    return make_partition(sorted(states, key=str), cells)


def random_machine(
    rng: random.Random,
    max_states: int = 4,
    max_inputs: int = 2,
    alphabet: Sequence | None = None,
    name: str = "m",
    state_prefix: str = "q",
    min_block_size: int = 1,
    n_states: int | None = None,
) -> Machine:
    """A random machine with realizable entries.

    Pass `alphabet` to pin the input set (for shared-alphabet
    constructions); otherwise its size is drawn up to max_inputs. State
    names are prefix + index, so distinct prefixes keep machines
    visually apart in rendered output.
    """
    n = n_states if n_states is not None else rng.randint(1, max_states)
    n = max(n, min_block_size)
    states = tuple(f"{state_prefix}{i}" for i in range(1, n + 1))
    space = random_partition(rng, states, min_block_size)
    if alphabet is None:
        k = rng.randint(1, max_inputs)
        alphabet = tuple(_INPUT_POOL[:k])
    else:
        alphabet = tuple(alphabet)
    table = {}
    for q in space.states:
        for x in alphabet:
            subset = [s for s in space.states if rng.random() < 0.5]
            table[(q, x)] = approximate(space, subset)
    return make_machine(space, alphabet, table, name)


def random_wiring(rng: random.Random, first: Machine, second: Machine) -> CascadeWiring:
    """A random wiring for cascade(first, second, ...)."""
    omega = {
        (q2, x2): rng.choice(first.alphabet)
        for q2 in second.space.states
        for x2 in second.alphabet
    }
    return CascadeWiring(omega)


def random_bridge(rng: random.Random, first: Machine, second: Machine, n_symbols: int = 2) -> InputBridge:
    """A random external alphabet u1..un decoded into random input pairs."""
    carrier = tuple(f"u{i}" for i in range(1, n_symbols + 1))
    decode = {
        u: (rng.choice(first.alphabet), rng.choice(second.alphabet))
        for u in carrier
    }
    return InputBridge(carrier, decode)


def exact_machine(n_states: int, alphabet: Sequence, state_prefix: str = "s", name: str = "exact") -> Machine:
    """A machine of singleton blocks where every state loops to itself.

    Every entry is the exact rough set ({q}, {q}). Handy as a neutral
    second factor: products with it relabel the first factor.
    """
    states = tuple(f"{state_prefix}{i}" for i in range(1, n_states + 1))
    space = make_partition(states, [[q] for q in states])
    alphabet = tuple(alphabet)
    table = {
        (q, x): approximate(space, [q])
        for q in states
        for x in alphabet
    }
    return make_machine(space, alphabet, table, name)
