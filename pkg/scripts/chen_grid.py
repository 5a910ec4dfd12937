"""Chen classification grid: pairwise isomorphism of C(c, λ) over prime cycles of the 2-bouquet."""

import argparse
import itertools

from lpa.chen import chen_cyclic
from lpa.classify import is_isomorphic
from lpa.experiments import prime_cycles
from lpa.field import FieldCtx
from lpa.graph import Graph


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-len", type=int, default=3)
    ap.add_argument("--p", type=int, default=5)
    args = ap.parse_args()
    F, g = FieldCtx.Fp(args.p), Graph.bouquet(2)
    cycles = prime_cycles(g, args.max_len)
    mods = [("".join(c), lam, chen_cyclic(g, c, lam, F)) for c in cycles for lam in F.units()]
    classes: dict[int, list[str]] = {}
    rep_of: list[int] = []
    for i, (name, lam, r) in enumerate(mods):
        j = next((k for k in classes if is_isomorphic(mods[k][2], r).yes), i)
        classes.setdefault(j, []).append(f"{name}/{lam}")
        rep_of.append(j)
    for members in classes.values():
        print("  ".join(members))
    print(f"{len(mods)} modules, {len(classes)} isomorphism classes "
          f"({len(set(g.cycle_rotation_class(g.cycle(c)) for c in cycles))} rotation classes x {args.p - 1} scalars)")


if __name__ == "__main__":
    main()
