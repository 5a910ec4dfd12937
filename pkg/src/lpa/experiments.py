"""The reproducible experiment workloads behind the acceptance suite.

Each ``run_*`` function returns an :class:`Outcome`: a list of named checks
with their observed values, plus wall time.  Scripts print them; the test
suite asserts them.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field as dc_field

from . import chen, classify, leavitt, moduli, oracles
from .field import FieldCtx, Poly
from .graph import Graph
from .rep import Rep, direct_sum
from .sampling import random_rep, relation_suite_reps
from .structure import (a_dimension, caret_injective, is_full, ker_j, nabla, recover, sigma)


@dataclass
class Outcome:
    name: str
    checks: list[tuple[str, bool, object]] = dc_field(default_factory=list)
    seconds: float = 0.0
    time_limit: float | None = None

    def check(self, label: str, ok: bool, observed=None):
        self.checks.append((label, bool(ok), observed))

    @property
    def within_time(self) -> bool:
        return self.time_limit is None or self.seconds < self.time_limit

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.checks) and self.within_time

    def failures(self) -> list[str]:
        out = [f"{label}: observed {obs}" for label, ok, obs in self.checks if not ok]
        if not self.within_time:
            out.append(f"runtime {self.seconds:.2f}s exceeds {self.time_limit}s")
        return out

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        n_ok = sum(ok for _, ok, _ in self.checks)
        return (f"[{status}] {self.name}: {n_ok}/{len(self.checks)} checks, "
                f"{self.seconds:.2f}s" + (f" (limit {self.time_limit}s)" if self.time_limit else ""))


class _Timer:
    def __init__(self, outcome: Outcome):
        self.outcome = outcome

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self.outcome

    def __exit__(self, *exc):
        self.outcome.seconds = time.perf_counter() - self.t0
        return False


# ---------------------------------------------------------------------------


def run_worked_examples() -> Outcome:
    from .cli import repro_checks
    out = Outcome("worked examples", time_limit=1.0)
    with _Timer(out):
        for label, ok, obs in repro_checks():
            out.check(label, ok, obs)
    return out


def run_relation_suite(samples: int = 1000, count: int = 20, seed: int = 1000) -> Outcome:
    out = Outcome("Leavitt relations", time_limit=30.0)
    reps = relation_suite_reps(count, seed)
    with _Timer(out):
        for i, r in enumerate(reps):
            rep = leavitt.verify_relations(r, samples, seed=seed + i)
            out.check(f"rep {i} ({len(r.graph.edges)} edges, {r.field}, dims {r.dims})", rep.ok,
                      [n for n, _ in rep.failures[:3]])
    return out


def _bouquet_reps_exhaustive(F: FieldCtx, dim: int):
    g = Graph.bouquet(2)
    n = dim * dim
    for entries in itertools.product(range(F.p), repeat=2 * n):
        m1 = [list(entries[i * dim:(i + 1) * dim]) for i in range(dim)]
        m2 = [list(entries[n + i * dim:n + (i + 1) * dim]) for i in range(dim)]
        yield Rep(g, F, {"v": dim}, {"e1": m1, "e2": m2})


def run_oracle_equivalence(samples_dim3: int = 500, seed: int = 3) -> Outcome:
    out = Outcome("sigma / ker_j oracles", time_limit=120.0)
    F = FieldCtx.Fp(2)
    g = Graph.bouquet(2)
    with _Timer(out):
        reps = [r for d in (0, 1, 2) for r in _bouquet_reps_exhaustive(F, d)]
        rng = random.Random(seed)
        reps += [random_rep(g, F, rng, dims={"v": 3}) for _ in range(samples_dim3)]
        bad_sigma, bad_ker = [], []
        for r in reps:
            if sigma(r)[0] != oracles.sigma_bruteforce(r):
                bad_sigma.append(r)
            if ker_j(r) != oracles.ker_j_bruteforce(r):
                bad_ker.append(r)
        out.check(f"sigma = intersection of complete submodules on {len(reps)} reps",
                  not bad_sigma, bad_sigma[:2])
        out.check(f"ker_j = brute-force E^D kernel on {len(reps)} reps", not bad_ker, bad_ker[:2])
    return out


def run_functor_properties(count: int = 200, seed: int = 4) -> Outcome:
    out = Outcome("functor calculus", time_limit=None)
    F = FieldCtx.Fp(3)
    graphs = [Graph.bouquet(2), Graph.line(2), Graph.bouquet(3)]
    bad: dict[str, list] = {k: [] for k in
                            ("commute", "idempotent", "full", "nondegenerate", "invariant", "additive")}
    with _Timer(out):
        for i in range(count):
            rng = random.Random(seed * 100_000 + i)
            g = graphs[i % len(graphs)]
            r = random_rep(g, F, rng, max_dim=3, density=rng.choice([0.3, 0.6, 1.0]))
            ns = nabla(sigma(r)[1])[0]
            sn = sigma(nabla(r)[0])[1]
            if not classify.is_isomorphic(ns, sn, seed=i).yes:
                bad["commute"].append(i)
            rc = recover(r)
            if not classify.is_isomorphic(recover(rc), rc, seed=i).yes:
                bad["idempotent"].append(i)
            if not is_full(rc):
                bad["full"].append(i)
            if not caret_injective(rc):
                bad["nondegenerate"].append(i)
            if a_dimension(rc) != a_dimension(r):
                bad["invariant"].append(i)
            w = random_rep(g, F, rng, max_dim=2)
            s = direct_sum(r, w)
            av, aw = a_dimension(r), a_dimension(w)
            if a_dimension(s) != {v: av[v] + aw[v] for v in g.vertices}:
                bad["additive"].append(i)
        labels = {"commute": "nabla∘sigma ≅ sigma∘nabla",
                  "idempotent": "recover idempotent up to ≅",
                  "full": "recover(V) full", "nondegenerate": "recover(V) nondegenerate",
                  "invariant": "A-dimension invariant under recover",
                  "additive": "A-dimension additive over direct sums"}
        for k, lab in labels.items():
            out.check(f"{lab} ({count} reps)", not bad[k], bad[k][:5])
    return out


def prime_cycles(g: Graph, max_len: int) -> list[list[str]]:
    names = [e.name for e in g.edges]
    out = []
    for m in range(1, max_len + 1):
        for w in itertools.product(names, repeat=m):
            c = g.cycle(list(w))
            if g.is_prime_cycle(c):
                out.append(list(w))
    return out


def run_chen_grid(max_len: int = 3, p: int = 5, seed: int = 5) -> Outcome:
    out = Outcome("Chen classification grid", time_limit=60.0)
    F = FieldCtx.Fp(p)
    g = Graph.bouquet(2)
    with _Timer(out):
        cycles = prime_cycles(g, max_len)
        mods = [(c, lam, chen.chen_cyclic(g, c, lam, F)) for c in cycles for lam in F.units()]
        wrong, unknown = [], 0
        for (c1, l1, r1), (c2, l2, r2) in itertools.product(mods, repeat=2):
            d = classify.is_isomorphic(r1, r2, seed=seed)
            same_class = g.cycle_rotation_class(g.cycle(c1)) == g.cycle_rotation_class(g.cycle(c2))
            expect = l1 == l2 and same_class
            if d.unknown:
                unknown += 1
            if d.yes != expect or d.unknown:
                wrong.append((c1, l1, c2, l2, d.answer))
        out.check(f"is_isomorphic matches ([c], λ) on {len(mods) ** 2} pairs", not wrong, wrong[:5])
        out.check("no undecided verdicts", unknown == 0, unknown)
    return out


def run_moduli_probes() -> Outcome:
    out = Outcome("moduli probes", time_limit=120.0)
    with _Timer(out):
        bad = [(n, d) for n in range(1, 6) for d in range(0, 6)
               if moduli.expected_dim(Graph.bouquet(n), {"v": d}) != (n - 1) * d * d + 1]
        out.check("expected_dim(bouquet n, d) = (n-1)d²+1 for n, d ≤ 5", not bad, bad)
        B = Graph.bouquet(2)
        c2 = moduli.enumerate_and_count(B, {"v": 1}, FieldCtx.Fp(2))
        out.check("bouquet 2, d = 1, F_2: 3 nonzero classes", c2.nonzero_classes == 3, c2.nonzero_classes)
        c3 = moduli.enumerate_and_count(B, {"v": 1}, FieldCtx.Fp(3))
        out.check("bouquet 2, d = 1, F_3: 8 nonzero classes", c3.nonzero_classes == 8, c3.nonzero_classes)
        g2 = Graph.from_edges(["nu", "mu"], [("e", "nu", "mu")])
        c0 = moduli.enumerate_and_count(g2, {"nu": 0, "mu": 2}, FieldCtx.Fp(3))
        out.check("ν→μ with d = (0, 2): no irreducibles", c0.irreducible == 0, c0.irreducible)
        Q = FieldCtx.Q()
        an = chen.anh_nam(B, ["e1"], Poly.from_high(Q, [1, 0, 1]))
        st = moduli.stabilizer_check(an)
        out.check("Ánh–Nam companion rep: stabilizer kernel dim 1", st.kernel_dim == 1, st.kernel_dim)
        out.check("Ánh–Nam companion rep: transverse dim 5 = expected_dim",
                  st.transverse_dim == 5 == st.expected_dim, (st.transverse_dim, st.expected_dim))
        out.check("stabilizer kernel = dim End (commutant identity)", st.commutant_ok,
                  (st.kernel_dim, st.end_dim))
    return out


def run_not_in_S(depth: int = 5) -> Outcome:
    out = Outcome("not-in-S truncations", time_limit=10.0)
    Q = FieldCtx.Q()
    B = Graph.bouquet(2)
    with _Timer(out):
        demos = [("graded_trunc e1", chen.graded_trunc(B, "v", ["e1"], depth, Q)),
                 ("graded_trunc e1e2", chen.graded_trunc(B, "v", ["e1", "e2"], depth, Q)),
                 ("graded_trunc circle 3", chen.graded_trunc(Graph.circle(3), "v1", ["e1", "e2", "e3"], depth, Q)),
                 ("irrational_trunc", chen.irrational_trunc(B, "e1 e2 e1 e1 e2 e1 e1 e1".split(), depth, Q))]
        for label, (_, rep) in demos:
            out.check(f"{label}: chain length {depth}", rep.length == depth, rep.length)
            out.check(f"{label}: strictly descending", rep.strictly_descending, [s.total_dim for s in rep.chain])
            out.check(f"{label}: every member complete", all(rep.complete), rep.complete)
            out.check(f"{label}: trivial intersection", rep.intersection.is_zero(), rep.intersection.total_dim)
    return out


ALL = [run_worked_examples, run_relation_suite, run_oracle_equivalence, run_functor_properties,
       run_chen_grid, run_moduli_probes, run_not_in_S]
