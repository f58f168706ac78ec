"""Recompute every multiplicity in S_5 and check the reference table.

Pass ``--n 6`` to do S_6 as well (about twenty seconds on one core).
"""

import argparse
from collections import Counter

from schubertmult import table, verify

parser = argparse.ArgumentParser()
parser.add_argument("--n", type=int, default=5)
parser.add_argument("--jobs", type=int, default=1)
args = parser.parse_args()

records = table(args.n, jobs=args.jobs)
hist = Counter(r.multiplicity for r in records)
for mult in sorted(hist, reverse=True):
    print(f"multiplicity {mult}: {hist[mult]} permutations")

print()
report = verify(args.n, records)
print("\n".join(report.lines()))
raise SystemExit(0 if report.passed else 1)
