"""The five ways to run two rough machines side by side.

All of them share the product state space; they differ in who reads
which input. The general product subsumes the first two through its
bridge, and the wreath subsumes the cascade, which the covering demos
make precise.
"""

import random

from roughfsm import (
    CascadeWiring,
    cascade,
    diagonal_bridge,
    full_direct,
    general_direct,
    pairing_bridge,
    restricted_direct,
    serialize_machine,
    wreath,
)
from roughfsm.generate import random_machine
from roughfsm.samples import five_state_machine


def main() -> None:
    m5 = five_state_machine()
    rng = random.Random(1)
    small = random_machine(rng, n_states=2, alphabet=("a", "b"), name="small")

    full = full_direct(m5, small)
    restricted = restricted_direct(m5, small)
    wr = wreath(m5, small)
    identity = CascadeWiring(
        {(q, x): x for q in small.space.states for x in small.alphabet}
    )
    casc = cascade(m5, small, identity)

    print("factor machines:", m5, "and", small)
    for machine in (full, restricted, wr, casc):
        print(f"  {machine.name:22} {len(machine.space.states):3} states, {len(machine.alphabet):3} inputs")
    print()

    # The general product with the pairing bridge is the full product,
    # and with the diagonal bridge the restricted one, letter for letter.
    via_pairs = general_direct(m5, small, pairing_bridge(m5.alphabet, small.alphabet))
    via_diag = general_direct(m5, small, diagonal_bridge(m5.alphabet))
    print("pairing bridge reproduces the full product:", via_pairs == full)
    print("diagonal bridge reproduces the restricted product:", via_diag == restricted)

    # A cascade whose wiring ignores its state argument is just the
    # restricted product in disguise.
    print("identity wiring reproduces the restricted product:", casc == restricted)
    print()

    # Wreath letters choose the first factor's input per second-factor
    # state, so the alphabet grows as |X1|^|Q2| * |X2|.
    f, x2 = wr.alphabet[0]
    print(f"first wreath letter: ({f},{x2})")
    print(f"wreath alphabet size: {len(wr.alphabet)} = 2^2 * 2")
    print()

    print("the restricted product, serialized:")
    print(serialize_machine(restricted), end="")


if __name__ == "__main__":
    main()
