"""Seeded random representations, homs and base changes for experiments and tests."""

from __future__ import annotations

import random
from typing import Mapping

from . import linalg as la
from .field import FieldCtx
from .graph import Graph
from .rep import Rep


def random_rep(g: Graph, F: FieldCtx, rng: random.Random, max_dim: int = 3,
               dims: Mapping[str, int] | None = None, min_dim: int = 0,
               density: float = 1.0) -> Rep:
    if dims is None:
        dims = {v: rng.randint(min_dim, max_dim) for v in g.vertices}
    mats = {}
    for e in g.edges:
        mats[e.name] = [[F.random(rng) if rng.random() < density else F.zero
                         for _ in range(dims[e.src])] for _ in range(dims[e.dst])]
    return Rep.build(g, F, dims, mats)


def random_invertible(F: FieldCtx, n: int, rng: random.Random) -> list[list]:
    while True:
        M = [[F.random(rng) for _ in range(n)] for _ in range(n)]
        if n == 0 or la.is_invertible(F, M):
            return M


def random_base_change(r: Rep, rng: random.Random) -> Rep:
    from .rep import base_change
    return base_change(r, {v: random_invertible(r.field, r.dims[v], rng) for v in r.graph.vertices})


def relation_suite_reps(count: int = 20, seed: int = 1000) -> list[Rep]:
    """The mixed collection used by the relation harness: bouquets of 2 and 3
    loops and the 2-line graph, over F_5 and Q, dimensions 1..3."""
    graphs = [Graph.bouquet(2), Graph.bouquet(3), Graph.line(2)]
    fields = [FieldCtx.Fp(5), FieldCtx.Q()]
    out = []
    for i in range(count):
        rng = random.Random(seed + i)
        out.append(random_rep(graphs[i % 3], fields[(i // 3) % 2], rng, min_dim=1))
    return out
