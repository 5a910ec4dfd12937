"""Brute-force reference implementations used to cross-check the chain algorithms.

These deliberately avoid the stabilizing chains of ``structure``: they work
directly from the definitions with explicit path enumeration and, over
finite fields, exhaustive subspace enumeration.  Only usable at desk scale.
"""

from __future__ import annotations

import itertools

from . import linalg as la
from .rep import Rep, Subspace, is_submodule


def path_matrix(r: Rep, edges) -> list[list]:
    """Matrix of x ↦ x·p for a path given by its edge names (nonempty)."""
    F, g = r.field, r.graph
    first = g.edge(edges[0])
    M = [list(row) for row in r.mats[edges[0]]]
    n_src = r.dims[first.src]
    for e in edges[1:]:
        M = la.matmul(F, r.mats[e], M, n_src)
    return M


def ker_j_bruteforce(r: Rep) -> Subspace:
    """{x : x·p = 0 for every p in E^D}, D = total dimension (at least 1)."""
    F, g = r.field, r.graph
    D = max(1, r.total_dim)
    basis = {}
    for v in g.vertices:
        rows = []
        for p in g.paths_E(D, source=v):
            if not p.edges:
                rows += la.identity(F, r.dims[v])  # sink vertex path: x·v = x
            else:
                rows += path_matrix(r, p.edges)
        basis[v] = la.nullspace(F, rows, r.dims[v])
    return Subspace(r, basis)


def is_complete_bruteforce(s: Subspace) -> bool:
    """V·p ⊆ U for every p in E^D (D = total dimension)."""
    r = s.rep
    F, g = r.field, r.graph
    D = max(1, r.total_dim)
    for v in g.vertices:
        if not r.dims[v]:
            continue
        for p in g.paths_E(D, source=v):
            w = g.dst(p)
            M = la.identity(F, r.dims[v]) if not p.edges else path_matrix(r, p.edges)
            for i in range(r.dims[v]):
                col = [M[k][i] for k in range(r.dims[w])]
                if not s.contains(w, col):
                    return False
    return True


def graded_subspaces(r: Rep):
    """Every vertex-graded subspace of a rep over a finite field."""
    F, g = r.field, r.graph
    per_vertex = [list(la.all_subspaces(F, r.dims[v])) for v in g.vertices]
    for combo in itertools.product(*per_vertex):
        yield Subspace(r, dict(zip(g.vertices, combo)))


def complete_submodules(r: Rep) -> list[Subspace]:
    return [s for s in graded_subspaces(r) if is_submodule(s) and is_complete_bruteforce(s)]


def sigma_bruteforce(r: Rep) -> Subspace:
    """Intersection of all complete submodules (exhaustive)."""
    acc = Subspace.full(r)
    for s in complete_submodules(r):
        acc = acc & s
    return acc


def invariant_subspaces(r: Rep) -> list[Subspace]:
    return [s for s in graded_subspaces(r) if is_submodule(s)]


def is_irreducible_bruteforce(r: Rep) -> bool:
    return all(s.is_zero() or s.is_full() for s in invariant_subspaces(r))
