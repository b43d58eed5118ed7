"""Approximation spaces from the ground up.

A space is a finite state set with a partition into blocks. Any subset
gets squeezed between two definable sets: the union of blocks inside it
and the union of blocks touching it. This demo builds one space and
walks through approximating, definability, and which (lower, upper)
pairs can actually arise.
"""

from roughfsm import (
    RoughSet,
    approximate,
    is_definable,
    is_realizable,
    make_partition,
)
from roughfsm.textio import format_definable, format_rough_set


def main() -> None:
    space = make_partition(
        ["q1", "q2", "q3", "q4", "q5"],
        [["q1", "q2"], ["q3", "q5"], ["q4"]],
    )
    print("blocks:", " | ".join(" ".join(cell) for cell in space.blocks))
    print()

    for subset in (["q1"], ["q1", "q2"], ["q2", "q3", "q4"], []):
        rough = approximate(space, subset)
        name = "{" + ",".join(subset) + "}"
        print(f"approximate {name:15} -> {format_rough_set(rough)}")
        print(f"  definable: {is_definable(space, subset)}")
        print(f"  boundary:  {format_definable(rough.boundary())}")
    print()

    # Approximations are definable on both sides by construction, and a
    # subset is definable exactly when the two sides meet.
    exact = approximate(space, ["q3", "q5"])
    print("exact subset {q3,q5}:", format_rough_set(exact), "is_exact:", exact.is_exact())
    print()

    # Not every definable pair comes from a subset. A singleton block in
    # the gap between lower and upper can never happen: whenever the
    # block touches a subset it is already inside it.
    lower = space.definable([0])
    upper_good = space.definable([0, 1])
    upper_bad = space.definable([0, 2])
    print(
        f"({format_definable(lower)},{format_definable(upper_good)})",
        "realizable:",
        is_realizable(space, lower, upper_good),
    )
    print(
        f"({format_definable(lower)},{format_definable(upper_bad)})",
        "realizable:",
        is_realizable(space, lower, upper_bad),
        "   ({q4} is a one-state boundary block)",
    )

    # RoughSet is just the pair with some convenience methods.
    pair = RoughSet(lower, upper_good)
    print("as a RoughSet:", format_rough_set(pair), "boundary", format_definable(pair.boundary()))


if __name__ == "__main__":
    main()
