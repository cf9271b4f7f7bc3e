"""Run the formula/solver crosscheck and write JSONL rows plus a summary table.

    python scripts/run_crosscheck.py --out-dir results
    python scripts/run_crosscheck.py --families gear,MC --max-n 8
"""

import argparse
import sys
from pathlib import Path

from condcolor.crosscheck import MISMATCH, SWEEPS, crosscheck, summary, to_jsonl, to_table


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--families", help=f"comma separated keys ({', '.join(SWEEPS)})")
    ap.add_argument("--max-n", type=int)
    ap.add_argument("--budget", type=int, default=5_000_000)
    ap.add_argument("--out-dir", default="results")
    args = ap.parse_args()

    fams = args.families.split(",") if args.families else None
    rows = crosscheck(fams, max_n=args.max_n, budget=args.budget)
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    (out / "crosscheck.jsonl").write_text(to_jsonl(rows))
    table = to_table(rows)
    (out / "crosscheck.txt").write_text(table)
    sys.stdout.write(table)
    for row in rows:
        if row.status != "MATCH":
            print(f"{row.status}: {row.family} r={row.r} {row.entry}/{row.branch} "
                  f"formula={row.formula} solver={row.solver} construction={row.construction}")
    return 1 if summary(rows)[MISMATCH] else 0


if __name__ == "__main__":
    sys.exit(main())
