"""Finite-field orbit counts and stabilizer probes for the bouquet moduli problem."""

import argparse
import json

from lpa.chen import anh_nam
from lpa.errors import BudgetExceeded
from lpa.field import FieldCtx, Poly
from lpa.graph import Graph
from lpa.moduli import chen_subvariety_report, enumerate_and_count, stabilizer_check


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=2)
    ap.add_argument("--max-d", type=int, default=2)
    ap.add_argument("--primes", type=int, nargs="+", default=[2, 3])
    args = ap.parse_args()
    g = Graph.bouquet(args.n)
    for p in args.primes:
        F = FieldCtx.Fp(p)
        for d in range(1, args.max_d + 1):
            try:
                rep = enumerate_and_count(g, {"v": d}, F)
            except BudgetExceeded as exc:
                print(f"F{p} d={d}: skipped ({exc})")
                continue
            print(f"F{p} d={d}: {rep.total} reps, {rep.irreducible} irreducible, "
                  f"{rep.classes} classes, expected_dim {rep.expected_dim}")
            print("   ", json.dumps(chen_subvariety_report(args.n, d, F)))
    Q = FieldCtx.Q()
    st = stabilizer_check(anh_nam(Graph.bouquet(2), ["e1"], Poly.from_high(Q, [1, 0, 1])))
    print("Ánh–Nam x^2+1 over Q:", json.dumps(st.to_json()))


if __name__ == "__main__":
    main()
