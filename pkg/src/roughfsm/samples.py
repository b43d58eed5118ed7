"""Bundled sample machines used by the demos and the test suite.

The five-state machine is this library's running example: three blocks,
two inputs, and a table that exercises approximation boundaries from
both sides. The relabeled pair is a four-state machine next to a copy
of itself under renamed states and inputs, which makes the renaming a
homomorphism (an isomorphism, in fact) and a handy fixture for the
morphism checkers.
"""

from __future__ import annotations

from .core import ApproximationSpace, RoughSet, make_partition
from .machine import Machine, make_machine
from .morphism import MorphismPair

__all__ = ["five_state_machine", "relabeled_pair"]


def _rough(space: ApproximationSpace, lower, upper) -> RoughSet:
    low = space.definable(space.block_id(q) for q in lower)
    up = space.definable(space.block_id(q) for q in upper)
    return RoughSet(low, up)


def five_state_machine() -> Machine:
    """Five states in blocks {q1,q2}, {q3,q5}, {q4}; inputs a and b."""
    space = make_partition(
        ["q1", "q2", "q3", "q4", "q5"],
        [["q1", "q2"], ["q3", "q5"], ["q4"]],
    )
    B12 = ("q1", "q2")
    B35 = ("q3", "q5")
    B4 = ("q4",)
    Q = B12 + B35 + B4
    table = {
        ("q1", "a"): _rough(space, B12, B12 + B35),
        ("q1", "b"): _rough(space, B4, B35 + B4),
        ("q2", "a"): _rough(space, (), B35),
        ("q2", "b"): _rough(space, B35, Q),
        ("q3", "a"): _rough(space, B35 + B4, Q),
        ("q3", "b"): _rough(space, B12, B12 + B4),
        ("q4", "a"): _rough(space, B4, B12 + B4),
        ("q4", "b"): _rough(space, B4, Q),
        ("q5", "a"): _rough(space, B12 + B4, Q),
        ("q5", "b"): _rough(space, B12, B12 + B35),
    }
    return make_machine(space, ("a", "b"), table, name="m5")


def relabeled_pair() -> tuple[Machine, Machine, MorphismPair]:
    """A four-state machine, its relabeling, and the renaming maps.

    The second machine is the first with states renamed through
    q1,q2,q3,q4 -> p1,p4,p3,p2 and inputs a,b -> c,d, so the returned
    pair of maps is an isomorphism between them.
    """
    space1 = make_partition(
        ["q1", "q2", "q3", "q4"],
        [["q1"], ["q2", "q4"], ["q3"]],
    )
    t1 = {
        ("q1", "a"): _rough(space1, ("q1",), ("q1", "q3")),
        ("q1", "b"): _rough(space1, (), ("q2", "q4")),
        ("q2", "a"): _rough(space1, ("q3",), ("q2", "q3", "q4")),
        ("q2", "b"): _rough(space1, ("q2", "q4"), ("q1", "q2", "q3", "q4")),
        ("q3", "a"): _rough(space1, (), ("q1",)),
        ("q3", "b"): _rough(space1, ("q3",), ("q1", "q3")),
        ("q4", "a"): _rough(space1, ("q2", "q4"), ("q1", "q2", "q4")),
        ("q4", "b"): _rough(space1, ("q1",), ("q1", "q3")),
    }
    m1 = make_machine(space1, ("a", "b"), t1, name="a4")

    space2 = make_partition(
        ["p1", "p2", "p3", "p4"],
        [["p1"], ["p2", "p4"], ["p3"]],
    )
    t2 = {
        ("p1", "c"): _rough(space2, ("p1",), ("p1", "p3")),
        ("p1", "d"): _rough(space2, (), ("p2", "p4")),
        ("p2", "c"): _rough(space2, ("p2", "p4"), ("p1", "p2", "p4")),
        ("p2", "d"): _rough(space2, ("p1",), ("p1", "p3")),
        ("p3", "c"): _rough(space2, (), ("p1",)),
        ("p3", "d"): _rough(space2, ("p3",), ("p1", "p3")),
        ("p4", "c"): _rough(space2, ("p3",), ("p2", "p3", "p4")),
        ("p4", "d"): _rough(space2, ("p2", "p4"), ("p1", "p2", "p3", "p4")),
    }
    m2 = make_machine(space2, ("c", "d"), t2, name="b4")

    pair = MorphismPair(
        {"q1": "p1", "q2": "p4", "q3": "p3", "q4": "p2"},
        {"a": "c", "b": "d"},
    )
    return m1, m2, pair
