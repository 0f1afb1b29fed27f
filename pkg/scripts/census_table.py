"""Print a census table for n = 0..N and optionally dump it as JSON.

    python scripts/census_table.py --max-n 4 [--workers 2] [--json out.json]
"""

import argparse
import json

from cutsets.survey import census


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=4)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--json")
    args = ap.parse_args()

    cols = ["n", "families_examined", "cutsets", "nontrivial_cutsets",
            "minimal_cutsets", "minimal_nontrivial_cutsets", "dsw_failures"]
    print("  ".join(f"{c:>12}" for c in ["n", "families", "cutsets", "nontrivial",
                                          "minimal", "min+nontriv", "dsw_fail"]) + "     secs")
    rows = []
    for n in range(args.max_n + 1):
        rep = census(n, workers=args.workers)
        row = rep.counts()
        row["elapsed"] = rep.elapsed
        rows.append(row)
        print("  ".join(f"{row[c]:>12}" for c in cols) + f"  {rep.elapsed:7.2f}")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(rows, fh, indent=2)


if __name__ == "__main__":
    main()
