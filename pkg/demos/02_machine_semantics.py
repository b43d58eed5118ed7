"""Stepping a rough machine by letters, words, and whole blocks.

The bundled five-state machine is small enough to print in full and
rich enough to show the two table views and one genuinely surprising
cell in the block table.
"""

from roughfsm import block_step, render_tables, validate_machine, word_step
from roughfsm.samples import five_state_machine
from roughfsm.textio import format_rough_set


def main() -> None:
    m = five_state_machine()
    print(m)
    for violation in validate_machine(m):
        print("violation:", violation)
    print()

    print("state table:")
    print(render_tables(m, kind="state"))
    print()

    # A word run starts from the block of the state, not from the state
    # alone, then threads lowers through lowers and uppers through
    # uppers, one letter at a time.
    for q, word in (("q1", "a"), ("q1", "ab"), ("q3", "ab"), ("q5", "ab")):
        result = word_step(m, q, tuple(word))
        print(f"run {word} from {q}: {format_rough_set(result)}")
    print("(q3 and q5 share a block, so their runs are identical)")
    print()

    # The block table steps whole definable sets. The b column of the
    # last row looks like it should reach everything, but the block
    # transition is the union of the member rows, and the lowers of
    # rows q3, q5 and q4 under b only cover {q1,q2} and {q4}.
    note = {
        ("{q3,q5}∪{q4}", "b"): "union of the lowers of rows q3, q5, q4; "
        "{q3,q5} is not reached even though every member row is nonempty"
    }
    print("block table:")
    print(render_tables(m, kind="block", footnotes=note))
    print()

    d = m.space.definable([1, 2])
    print("the cell recomputed:", format_rough_set(block_step(m, d, "b")))


if __name__ == "__main__":
    main()
