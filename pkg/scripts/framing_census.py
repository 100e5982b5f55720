"""Empirical sweep of the framing/genus relation on random band surfaces.

Buckets seeded random single-boundary surfaces by (genus, framing mod 4)
and prints the occupancy table; the off-parity cells must stay empty.
"""

import argparse
import random
from collections import Counter

from knotbands.bandform import framing, shape
from knotbands.obstruct import random_band_surface


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--samples", type=int, default=2000)
    ap.add_argument("--max-bands", type=int, default=6)
    ap.add_argument("--orientable", action="store_true")
    args = ap.parse_args()

    rng = random.Random(args.seed)
    buckets = Counter()
    framings = Counter()
    for _ in range(args.samples):
        surf = random_band_surface(
            rng, max_bands=args.max_bands, orientable=args.orientable
        )
        f = framing(surf)
        g = shape(surf).genus
        buckets[(g, f % 4)] += 1
        framings[f] += 1

    genera = sorted({g for g, _ in buckets})
    print(f"{args.samples} surfaces, seed {args.seed}, "
          + ("orientable" if args.orientable else "non-orientable"))
    print("genus  f%4=0  f%4=1  f%4=2  f%4=3")
    for g in genera:
        row = [buckets.get((g, r), 0) for r in range(4)]
        print(f"{g:5d}  " + "  ".join(f"{n:5d}" for n in row))
        bad = row[1] + row[3] + (row[0] if g % 2 and not args.orientable else 0) \
            + (row[2] if g % 2 == 0 and not args.orientable else 0)
        if bad:
            print(f"       ^ {bad} surfaces break the parity relation")
    lo, hi = min(framings), max(framings)
    print(f"framing range [{lo}, {hi}], {len(framings)} distinct values")


if __name__ == "__main__":
    main()
