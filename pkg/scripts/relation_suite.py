"""Leavitt-relation harness: sampled Pi(V) elements on the mixed seeded rep collection."""

import argparse
import time

from lpa.leavitt import verify_relations
from lpa.sampling import relation_suite_reps


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--reps", type=int, default=20)
    ap.add_argument("--samples", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=1000)
    args = ap.parse_args()
    t0 = time.perf_counter()
    for i, r in enumerate(relation_suite_reps(args.reps, args.seed)):
        rep = verify_relations(r, args.samples, seed=args.seed + i)
        names = sorted({n for n, _ in rep.failures})
        print(f"rep {i:2d}  {r.field!s:>3}  {len(r.graph.vertices)}v/{len(r.graph.edges)}e  "
              f"dims {r.dims}  {'ok' if rep.ok else 'FAILED ' + ','.join(names)}")
    print(f"{time.perf_counter() - t0:.2f}s")


if __name__ == "__main__":
    main()
