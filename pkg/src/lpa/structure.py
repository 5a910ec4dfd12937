"""Completeness, fullness, degeneracy and the functors Sigma and Nabla.

Both structural subspaces are computed as stabilizing chains:

* ``ker_j``: K_0 = 0, K_{k+1}(v) = {x : x·e ∈ K_k(dst e) for all e out of v},
  with K(v) = 0 at sinks.  K_k is exactly {x : x·p = 0 for all p in E^k}.
* ``sigma``: W_0 = V, W_{k+1} = span(W_k·e) + (sink components of W_k).
  W_k is exactly span{x·p : p in E^k}; it decreases and its limit is the
  smallest complete submodule (every complete U contains some W_k, and the
  limit is complete because the quotient is killed by E^k).
"""

from __future__ import annotations

from . import linalg as la
from .errors import NotASubmodule
from .rep import Rep, RepHom, Subspace, is_submodule, quotient, subrep


def caret_injective(r: Rep) -> bool:
    """Nondegeneracy test: every regular vertex's stacked caret map is injective."""
    F = r.field
    for v in r.graph.regular_vertices:
        d = r.dims[v]
        if not d:
            continue
        stacked = [row for e in r.graph.out_edges[v] for row in r.mats[e.name]]
        if la.rank(F, stacked, d) < d:
            return False
    return True


is_nondegenerate = caret_injective


def _ker_j_chain(r: Rep) -> list[dict[str, list]]:
    F, g = r.field, r.graph
    K = {v: [] for v in g.vertices}
    chain = [K]
    for _ in range(r.total_dim + 1):
        nxt = {}
        for v in g.vertices:
            if g.is_sink(v) or not r.dims[v]:
                nxt[v] = []
                continue
            rows = []
            for e in g.out_edges[v]:
                ann = la.annihilator(F, K[e.dst], r.dims[e.dst])
                rows += la.matmul(F, ann, r.mats[e.name], r.dims[v])
            nxt[v] = la.nullspace(F, rows, r.dims[v])
        if nxt == K:
            return chain
        K = nxt
        chain.append(K)
    raise AssertionError("ker_j chain failed to stabilize within total dimension")


def ker_j(r: Rep) -> Subspace:
    """Kernel of the canonical map V -> Pi(V)."""
    return Subspace(r, _ker_j_chain(r)[-1])


def nabla(r: Rep) -> tuple[Rep, RepHom]:
    """The nondegenerate quotient V / ker(j) and its projection."""
    return quotient(r, ker_j(r))


def _sigma_step(r: Rep, W: dict[str, list]) -> dict[str, list]:
    F, g = r.field, r.graph
    parts: dict[str, list] = {v: [] for v in g.vertices}
    for e in g.edges:
        for b in W[e.src]:
            parts[e.dst].append(r.act(e.name, b))
    for v in g.sinks:
        parts[v] += W[v]
    return {v: la.span(F, parts[v], r.dims[v]) for v in g.vertices}


def sigma_chain(r: Rep) -> list[Subspace]:
    """The decreasing chain W_0 ⊇ W_1 ⊇ ... up to and including its limit."""
    W = {v: la.identity(r.field, r.dims[v]) for v in r.graph.vertices}
    chain = [W]
    for _ in range(r.total_dim + 1):
        nxt = _sigma_step(r, W)
        if nxt == W:
            return [Subspace(r, w) for w in chain]
        W = nxt
        chain.append(W)
    raise AssertionError("sigma chain failed to stabilize within total dimension")


def sigma_subspace(r: Rep) -> Subspace:
    return sigma_chain(r)[-1]


def sigma(r: Rep) -> tuple[Subspace, Rep]:
    """Smallest complete submodule, as a subspace and as a standalone Rep."""
    s = sigma_subspace(r)
    return s, subrep(s)[0]


def sigma_hom(r: Rep) -> tuple[Rep, RepHom]:
    """Sigma(V) with its inclusion into V."""
    return subrep(sigma_subspace(r))


def is_complete(s: Subspace) -> bool:
    """A submodule is complete iff the quotient is entirely in ker(j)."""
    if not is_submodule(s):
        raise NotASubmodule("completeness is defined for submodules only")
    Q, _ = quotient(s.rep, s)
    return ker_j(Q).is_full()


def is_full(r: Rep) -> bool:
    return sigma_subspace(r).is_full()


def recover(r: Rep) -> Rep:
    """Nabla ∘ Sigma: the full, nondegenerate core of V."""
    return nabla(sigma(r)[1])[0]


def a_dimension(r: Rep) -> dict[str, int]:
    return recover(r).dim_vector()


def satisfies_condition_I(r: Rep) -> bool:
    """Every regular caret map V_v -> ⊕ V_{dst e} is bijective."""
    F = r.field
    for v in r.graph.regular_vertices:
        d = r.dims[v]
        target = sum(r.dims[e.dst] for e in r.graph.out_edges[v])
        if target != d:
            return False
        if not d:
            continue
        stacked = [row for e in r.graph.out_edges[v] for row in r.mats[e.name]]
        if la.rank(F, stacked, d) < d:
            return False
    return True
