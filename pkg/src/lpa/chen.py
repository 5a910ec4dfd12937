"""A-module realizations of Chen modules and their generalizations.

Tails of q = c^∞ are indexed t_0 = q, t_1 = ₁q, ..., t_{m-1}; tail t_i sits at
src(c[i]) and the only nonzero edge action on it is t_i·c[i] = t_{i+1 mod m}.
Twists (a scalar, a companion matrix, a matrix X) sit on the transition out
of t_0.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import Sequence

from . import linalg as la
from .errors import (CycleMismatch, InvalidPrefix, NotASink, NotIrreducible, NotPrime,
                     ReducibleTwist, Unsupported, ZeroLambda, ZeroVector)
from .field import FieldCtx, Poly, companion_matrix, poly_is_irreducible
from .graph import Graph, Path, is_primitive_word
from .rep import Rep, Subspace
from .structure import is_complete


def _tail_rep(g: Graph, F: FieldCtx, verts: Sequence[str], block: int,
              moves: Sequence[tuple[int, str, int, list]]) -> Rep:
    """Rep on blocks (one per basis item, at verts[i]) with moves (i, edge, j, B): block i -> block j."""
    dims = {v: 0 for v in g.vertices}
    pos = []
    for v in verts:
        pos.append(dims[v])
        dims[v] += block
    mats = {e.name: la.zeros(F, dims[e.dst], dims[e.src]) for e in g.edges}
    for i, e, j, B in moves:
        M = mats[e]
        for a in range(block):
            for b in range(block):
                M[pos[j] + a][pos[i] + b] = F.add(M[pos[j] + a][pos[i] + b], B[a][b])
    return Rep(g, F, dims, mats)


def _prime_cycle(g: Graph, c: Path | Sequence[str]) -> Path:
    c = c if isinstance(c, Path) else g.cycle(c)
    if not g.is_prime_cycle(c):
        raise NotPrime(f"{c} is a proper power")
    return c


def _twisted(g: Graph, F: FieldCtx, c: Path, X: list) -> Rep:
    m, b = len(c.edges), len(X)
    I = la.identity(F, b)
    verts = [g.edge(c.edges[i]).src for i in range(m)]
    moves = [(i, c.edges[i], (i + 1) % m, X if i == 0 else I) for i in range(m)]
    return _tail_rep(g, F, verts, b, moves)


def tail_positions(g: Graph, c: Path) -> list[tuple[str, int]]:
    """(vertex, index within that vertex) of each tail t_i."""
    seen: dict[str, int] = {}
    out = []
    for e in c.edges:
        v = g.edge(e).src
        out.append((v, seen.get(v, 0)))
        seen[v] = seen.get(v, 0) + 1
    return out


def chen_cyclic(g: Graph, c, lam, field: FieldCtx) -> Rep:
    """C_q for q = c^∞ with λ on t_0."""
    c = _prime_cycle(g, c)
    lam = field(lam) if not field.is_canonical(lam) else lam
    if lam == 0:
        raise ZeroLambda("λ must be nonzero")
    return _twisted(g, field, c, [[lam]])


def chen_sink(g: Graph, omega: str, field: FieldCtx) -> Rep:
    if not g.is_sink(omega):
        raise NotASink(f"{omega} emits edges")
    dims = {v: int(v == omega) for v in g.vertices}
    return Rep.build(g, field, dims, {})


def anh_nam(g: Graph, c, P: Poly) -> Rep:
    """(k[x]/P) ⊗ k[T_q] with multiplication by x on the transition out of t_0."""
    c = _prime_cycle(g, c)
    if not poly_is_irreducible(P):
        raise NotIrreducible(f"{P.to_text()} is reducible")
    return _twisted(g, P.field, c, companion_matrix(P))


def twist_matrix(g: Graph, c, X: Sequence[Sequence], field: FieldCtx) -> Rep:
    """C_q^X: X must have irreducible characteristic polynomial."""
    c = _prime_cycle(g, c)
    X = [[field(a) if not field.is_canonical(a) else a for a in row] for row in X]
    if not X or any(len(row) != len(X) for row in X):
        raise ReducibleTwist("X must be a nonempty square matrix")
    cp = Poly.from_high(field, la.charpoly_coeffs(field, X))
    if not poly_is_irreducible(cp):
        raise ReducibleTwist(f"characteristic polynomial {cp.to_text()} factors")
    return _twisted(g, field, c, X)


def vector_variant(g: Graph, c, v: Sequence, field: FieldCtx, literal: bool = False) -> Rep:
    """C_q^v on the tail basis, v given by its coefficients on t_0..t_{m-1}.

    The distinguished tail r = t_{m-1} sends its leading edge c[m-1] to v instead
    of t_0.  With ``literal`` every edge leaving src(r) and landing where v lives
    sends r to v.  Only tails sitting at src(c[0]) can appear in v.
    """
    c = _prime_cycle(g, c)
    m = len(c.edges)
    v = [field(a) if not field.is_canonical(a) else a for a in v]
    if len(v) != m:
        raise ZeroVector(f"v needs {m} coefficients, got {len(v)}")
    if all(a == 0 for a in v):
        raise ZeroVector("v must be nonzero")
    verts = [g.edge(c.edges[i]).src for i in range(m)]
    target = verts[0]
    if any(a != 0 and verts[i] != target for i, a in enumerate(v)):
        raise Unsupported("v must be supported on tails at the base of the cycle")
    one = [[field.one]]
    moves = [(i, c.edges[i], i + 1, one) for i in range(m - 1)]
    r = m - 1
    edges = [c.edges[r]]
    if literal:
        edges = [e.name for e in g.out_edges[verts[r]] if e.dst == target]
    for e in edges:
        moves += [(r, e, i, [[a]]) for i, a in enumerate(v) if a != 0]
    return _tail_rep(g, field, verts, 1, moves)


@dataclass
class ChainReport:
    """A strictly descending chain of complete submodules ending at 0.

    ``length`` counts the nonzero members; the final member is the zero
    subspace, so the intersection of the chain is trivial.
    """

    chain: list[Subspace]
    complete: list[bool]
    nondegenerate: bool
    full: bool
    notes: list[str] = dc_field(default_factory=list)

    @property
    def length(self) -> int:
        return sum(1 for s in self.chain if not s.is_zero())

    @property
    def strictly_descending(self) -> bool:
        return all(b <= a and b.total_dim < a.total_dim for a, b in zip(self.chain, self.chain[1:]))

    @property
    def intersection(self) -> Subspace:
        acc = self.chain[0]
        for s in self.chain[1:]:
            acc = acc & s
        return acc

    def to_json(self) -> dict:
        return {"length": self.length, "dims": [s.total_dim for s in self.chain],
                "complete": self.complete, "strictly_descending": self.strictly_descending,
                "intersection_dim": self.intersection.total_dim,
                "nondegenerate": self.nondegenerate, "full": self.full, "notes": self.notes}


def _shift_chain(g: Graph, F: FieldCtx, verts: list[str], edges: list[str], notes) -> tuple[Rep, ChainReport]:
    from .structure import caret_injective, is_full
    moves = [(i, e, i + 1, [[F.one]]) for i, e in enumerate(edges)]
    r = _tail_rep(g, F, verts, 1, moves)
    pos = []
    seen: dict[str, int] = {}
    for v in verts:
        pos.append((v, seen.get(v, 0)))
        seen[v] = seen.get(v, 0) + 1
    chain = []
    for k in range(1, len(verts) + 1):
        basis: dict[str, list] = {v: [] for v in g.vertices}
        for j in range(k, len(verts)):
            v, i = pos[j]
            basis[v].append(la.unit_vector(F, r.dims[v], i))
        chain.append(Subspace(r, basis))
    report = ChainReport(chain, [is_complete(s) for s in chain], caret_injective(r), is_full(r), notes)
    return r, report


def graded_trunc(g: Graph, nu: str, c, depth: int, field: FieldCtx) -> tuple[Rep, ChainReport]:
    """Truncation of G_νc to the basis {q* : |q| ≤ depth} with q a prefix of c^∞ at ν."""
    c = c if isinstance(c, Path) else g.cycle(c)
    g.check_cycle(c)
    if c.origin != nu:
        raise CycleMismatch(f"cycle {c} is based at {c.origin}, not {nu}")
    if depth < 2:
        raise ValueError("depth must be >= 2")
    m = len(c.edges)
    edges = [c.edges[k % m] for k in range(depth)]
    verts = [g.edge(e).src for e in edges] + [g.edge(edges[-1]).dst]
    return _shift_chain(g, field, verts, edges,
                        ["the deepest layer q* with |q| = depth acts by 0",
                         "a finite truncation; the chain only shadows G_νc ∉ S"])


def irrational_trunc(g: Graph, prefix: Sequence[str], depth: int, field: FieldCtx) -> tuple[Rep, ChainReport]:
    """Tails ₀p..₍depth₎p of a finite ray prefix with the shift action."""
    prefix = list(prefix)
    if depth < 1 or len(prefix) < depth:
        raise InvalidPrefix(f"prefix of length {len(prefix)} is shorter than depth {depth}")
    try:
        g.path(prefix)
    except Exception as exc:
        raise InvalidPrefix(str(exc)) from exc
    edges = prefix[:depth]
    verts = [g.edge(e).src for e in edges] + [g.edge(edges[-1]).dst]
    return _shift_chain(g, field, verts, edges,
                        ["Pi of this truncation is not F_p; it only demonstrates the descending chain"])


def prime_classes(n: int, d: int) -> list[tuple[int, ...]]:
    """Canonical (least) rotations of prime words of length d in n letters."""
    out = set()
    for w in itertools.product(range(n), repeat=d):
        if is_primitive_word(w):
            out.add(min(w[i:] + w[:i] for i in range(d)))
    return sorted(out)


def count_prime_classes(n: int, d: int) -> int:
    if n < 1 or d < 1:
        raise ValueError("n and d must be positive")
    return len(prime_classes(n, d))
