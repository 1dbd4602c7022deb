"""Run every default verification case and print a pass/fail table.

    python scripts/reproduce_closed_forms.py [--json out.json] [--jobs N]
"""

import argparse
import json
import sys

from vfilt.verify import DEFAULT_CASES, verify_all


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--json", help="write the full reports here")
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--seed", type=int, default=None, help="pick the oracle cross-check index at random")
    args = ap.parse_args()

    reports = verify_all(DEFAULT_CASES, seed=args.seed, jobs=args.jobs)
    width = max(len(f"{r.case.id} {r.case.params}") for r in reports)
    for r in reports:
        label = f"{r.case.id} {r.case.params}".ljust(width)
        vs = [c.computed for c in r.checks if c.label == "v"]
        shown = ",".join(map(str, vs)) if vs else "-"
        print(f"{'PASS' if r.passed else 'FAIL'}  {label}  n={r.case.n_min}..{r.case.n_max}  v={shown}  {r.seconds:.2f}s")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump([r.to_json() for r in reports], fh, indent=2)
    ok = all(r.passed for r in reports)
    print(f"{sum(r.passed for r in reports)}/{len(reports)} cases pass")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
