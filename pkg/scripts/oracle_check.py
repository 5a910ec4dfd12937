"""Compare the chain algorithms for Sigma and ker(j) with exhaustive oracles over F_2."""

import argparse

from lpa.experiments import run_oracle_equivalence


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=500, help="random dimension-3 reps")
    ap.add_argument("--seed", type=int, default=3)
    args = ap.parse_args()
    out = run_oracle_equivalence(args.samples, args.seed)
    for label, ok, obs in out.checks:
        print(("ok   " if ok else "FAIL ") + label + ("" if ok else f"  {obs}"))
    print(f"{out.seconds:.2f}s")


if __name__ == "__main__":
    main()
