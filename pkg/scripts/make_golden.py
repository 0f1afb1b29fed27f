"""Regenerate tests/data/census_n*.txt from the brute-force oracles.

Counts come from walking all n! maximal chains per family (and removing each
member in turn for minimality); the fast census is never consulted.

    python scripts/make_golden.py [--max-n 4]
"""

import argparse
import pathlib

from cutsets import oracles
from cutsets.lattice_core import Family

DATA = pathlib.Path(__file__).resolve().parent.parent / "tests" / "data"


def oracle_census(n):
    counts = dict(n=n, families_examined=0, cutsets=0, nontrivial_cutsets=0,
                  minimal_cutsets=0, minimal_nontrivial_cutsets=0)
    top = (1 << n) - 1
    for bits in range(1 << (1 << n)):
        fam = Family(n, tuple(m for m in range(1 << n) if bits >> m & 1))
        counts["families_examined"] += 1
        if not oracles.is_cutset_brute(fam):
            continue
        nontrivial = 0 not in fam and top not in fam
        minimal = oracles.is_minimal_cutset_brute(fam)
        counts["cutsets"] += 1
        counts["nontrivial_cutsets"] += nontrivial
        counts["minimal_cutsets"] += minimal
        counts["minimal_nontrivial_cutsets"] += minimal and nontrivial
    return counts


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=4)
    args = ap.parse_args()
    DATA.mkdir(parents=True, exist_ok=True)
    for n in range(args.max_n + 1):
        counts = oracle_census(n)
        if n <= 3:
            assert counts["cutsets"] == oracles.count_cutsets_ie(n)
            assert counts["nontrivial_cutsets"] == oracles.count_cutsets_ie(n, nontrivial=True)
        text = "".join(f"{k}={v}\n" for k, v in counts.items())
        (DATA / f"census_n{n}.txt").write_text(text)
        print(text.replace("\n", " "))


if __name__ == "__main__":
    main()
