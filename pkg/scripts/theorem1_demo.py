"""Walk the chain/antichain extraction on a few cutsets and show the witness groups.

For each cutset C and source family, prints the witness (direction, alpha)
of every source set, the selected group and its image inside C.

    python scripts/theorem1_demo.py
"""

from cutsets.constructions import BlockPartition, lemma1_chain, lemma3b_antichain, theorem3_cutset
from cutsets.cutset_analysis import theorem1_extraction
from cutsets.lattice_core import Family, format_set, level


def show(title, cutset, sources, antichain):
    ext = theorem1_extraction(cutset, sources, antichain=antichain)
    print(f"== {title}")
    print(f"   cutset: {cutset}")
    for (direction, alpha), group in sorted(ext.groups.items(),
                                            key=lambda kv: (kv[0][0].value, kv[0][1])):
        members = ", ".join(format_set(a) for a in group)
        print(f"   {direction.value:>5} alpha={alpha}: {members}")
    kind = "antichain" if antichain else "chain"
    print(f"   selected {ext.direction.value} alpha={ext.alpha} "
          f"(group of {len(ext.group)}, collisions={ext.collisions}, dropped={ext.dropped})")
    print(f"   {kind} in C: " + ", ".join(format_set(m) for m in ext.image))
    print()


def main():
    c3 = theorem3_cutset(0, 1, 3)
    show("chain from the maximal chain through {2}", c3, lemma1_chain(0b100, 3).sets, False)
    c4 = theorem3_cutset(0, 1, 4)
    show("antichain from the 2x2 block partition", c4,
         lemma3b_antichain(BlockPartition(2, 2, 1)).members, True)
    c5 = theorem3_cutset(2, 4, 5)
    show("antichain from the middle level of P(5)", c5, level(5, 2).members, True)
    show("collapse inside a trivial cutset", Family.of(3, [0b111]), [0b001, 0b010], True)


if __name__ == "__main__":
    main()
