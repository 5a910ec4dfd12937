"""Finite-dimensional quiver representations, subspaces and morphisms.

Convention: column vectors, ``v·e := M_e @ v`` with ``M_e`` of shape
``dims[dst(e)] × dims[src(e)]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Mapping, Sequence

from . import linalg as la
from .errors import (FieldMismatch, GraphMismatch, LpaError, NotASubmodule,
                     ShapeMismatch)
from .field import FieldCtx
from .graph import Graph


def _freeze(M) -> tuple[tuple, ...]:
    return tuple(tuple(r) for r in M)


@dataclass(frozen=True, eq=False)
class Rep:
    graph: Graph
    field: FieldCtx
    dims: Mapping[str, int]
    mats: Mapping[str, tuple[tuple, ...]]

    def __post_init__(self):
        problems = rep_diagnostics(self.graph, self.field, self.dims, self.mats)
        if problems:
            kind, msg, edge, expected, found = problems[0]
            if kind == "field":
                raise FieldMismatch(msg)
            raise ShapeMismatch(msg, edge, expected, found)
        object.__setattr__(self, "dims", {v: int(self.dims.get(v, 0)) for v in self.graph.vertices})
        object.__setattr__(self, "mats", {e.name: _freeze(self.mats[e.name]) for e in self.graph.edges})

    @classmethod
    def build(cls, graph: Graph, field: FieldCtx, dims: Mapping[str, int],
              mats: Mapping[str, Sequence[Sequence]] | None = None) -> Rep:
        """Coerce entries into the field; edges not listed get zero maps."""
        mats = dict(mats or {})
        full_dims = {v: int(dims.get(v, 0)) for v in graph.vertices}
        unknown = set(dims) - set(graph.vertices)
        if unknown:
            raise ShapeMismatch(f"dims mention unknown vertices {sorted(unknown)}")
        out = {}
        for e in graph.edges:
            if e.name in mats:
                out[e.name] = tuple(tuple(field(a) for a in row) for row in mats[e.name])
            else:
                out[e.name] = _freeze(la.zeros(field, full_dims[e.dst], full_dims[e.src]))
        extra = set(mats) - set(out)
        if extra:
            raise ShapeMismatch(f"matrices given for unknown edges {sorted(extra)}")
        return cls(graph, field, full_dims, out)

    @classmethod
    def zero(cls, graph: Graph, field: FieldCtx) -> Rep:
        return cls.build(graph, field, {})

    def __eq__(self, other):
        if not isinstance(other, Rep):
            return NotImplemented
        return (self is other) or (self.graph == other.graph and self.field == other.field
                                   and self.dims == other.dims and self.mats == other.mats)

    def __hash__(self):
        return hash((self.graph, self.field, tuple(sorted(self.dims.items()))))

    # -- basic data ----------------------------------------------------------
    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    def dim_vector(self) -> dict[str, int]:
        return dict(self.dims)

    def mat(self, e: str):
        return self.mats[e]

    def act(self, e: str, x: Sequence) -> list:
        return la.matvec(self.field, self.mats[e], x)

    def act_path(self, edges: Sequence[str], x: Sequence) -> list:
        for e in edges:
            x = self.act(e, x)
        return list(x)

    # -- total space -------------------------------------------------------------
    @cached_property
    def offsets(self) -> dict[str, int]:
        off, acc = {}, 0
        for v in self.graph.vertices:
            off[v] = acc
            acc += self.dims[v]
        return off

    def split_total(self, x: Sequence) -> dict[str, list]:
        return {v: list(x[self.offsets[v]: self.offsets[v] + self.dims[v]])
                for v in self.graph.vertices}

    def join_total(self, parts: Mapping[str, Sequence]) -> list:
        x = [self.field.zero] * self.total_dim
        for v, vec in parts.items():
            o = self.offsets[v]
            x[o:o + self.dims[v]] = list(vec)
        return x

    def embed_at(self, v: str, x: Sequence) -> list:
        return self.join_total({v: x})

    @cached_property
    def edge_operators(self) -> dict[str, list[list]]:
        """Each edge map as a block operator on the total space."""
        F, D = self.field, self.total_dim
        out = {}
        for e in self.graph.edges:
            M = la.zeros(F, D, D)
            ro, co = self.offsets[e.dst], self.offsets[e.src]
            for i, row in enumerate(self.mats[e.name]):
                M[ro + i][co:co + len(row)] = list(row)
            out[e.name] = M
        return out

    @cached_property
    def vertex_projections(self) -> dict[str, list[list]]:
        F, D = self.field, self.total_dim
        out = {}
        for v in self.graph.vertices:
            M = la.zeros(F, D, D)
            for i in range(self.offsets[v], self.offsets[v] + self.dims[v]):
                M[i][i] = F.one
            out[v] = M
        return out

    @cached_property
    def generators(self) -> list[list[list]]:
        """Operators generating the path algebra's action on the total space."""
        gens = list(self.edge_operators.values())
        support = [v for v in self.graph.vertices if self.dims[v]]
        if len(support) > 1:
            gens += [self.vertex_projections[v] for v in support]
        return gens

    def to_json(self) -> dict:
        return {"graph": self.graph.to_json(),
                "field": {"kind": "Q"} if self.field.kind == "Q" else {"kind": "Fp", "p": self.field.p},
                "dims": dict(self.dims),
                "matrices": {e: [[self.field.format(a) for a in row] for row in M]
                             for e, M in self.mats.items()}}

    def __repr__(self):
        return f"Rep(dims={self.dims}, field={self.field}, edges={list(self.mats)})"


def rep_diagnostics(graph: Graph, field: FieldCtx, dims, mats) -> list[tuple]:
    """Structured shape/field problems: (kind, message, edge, expected, found)."""
    out = []
    for v, d in dims.items():
        if v not in graph.out_edges:
            out.append(("shape", f"unknown vertex {v}", None, None, None))
        elif not isinstance(d, int) or d < 0:
            out.append(("shape", f"bad dimension {d!r} at {v}", None, None, None))
    for e in graph.edges:
        expected = (dims.get(e.dst, 0), dims.get(e.src, 0))
        if e.name not in mats:
            out.append(("shape", f"missing matrix for edge {e.name}", e.name, expected, None))
            continue
        M = mats[e.name]
        rows = len(M)
        widths = {len(r) for r in M}
        found = (rows, widths.pop() if len(widths) == 1 else (None if not widths else -1))
        if rows != expected[0] or (rows and found[1] != expected[1]):
            out.append(("shape", f"edge {e.name}: expected {expected[0]}x{expected[1]}, "
                        f"found {rows}x{found[1]}", e.name, expected, found))
            continue
        for r in M:
            for a in r:
                if not field.is_canonical(a):
                    out.append(("field", f"edge {e.name}: entry {a!r} not in {field}",
                                e.name, None, None))
                    break
    for name in mats:
        if name not in graph.edge_map:
            out.append(("shape", f"matrix for unknown edge {name}", name, None, None))
    return out


def validate_rep(r: Rep) -> bool:
    """Re-check the shape invariants of an existing Rep (raises on failure)."""
    problems = rep_diagnostics(r.graph, r.field, r.dims, r.mats)
    if problems:
        kind, msg, edge, expected, found = problems[0]
        if kind == "field":
            raise FieldMismatch(msg)
        raise ShapeMismatch(msg, edge, expected, found)
    return True


def check_compatible(v: Rep, w: Rep):
    if v.graph != w.graph:
        raise GraphMismatch("representations live on different graphs")
    if v.field != w.field:
        raise FieldMismatch("representations over different fields")


# ---------------------------------------------------------------------------
# Subspaces


@dataclass(frozen=True, eq=False)
class Subspace:
    """Vertex-indexed family of subspaces; each component is a canonical RREF basis."""

    rep: Rep
    basis: Mapping[str, tuple[tuple, ...]] = dc_field(default_factory=dict)

    def __post_init__(self):
        F = self.rep.field
        canon = {}
        for v in self.rep.graph.vertices:
            vecs = self.basis.get(v, ())
            canon[v] = _freeze(la.span(F, vecs, self.rep.dims[v]))
        object.__setattr__(self, "basis", canon)

    @classmethod
    def zero(cls, rep: Rep) -> Subspace:
        return cls(rep, {})

    @classmethod
    def full(cls, rep: Rep) -> Subspace:
        return cls(rep, {v: la.identity(rep.field, rep.dims[v]) for v in rep.graph.vertices})

    @classmethod
    def from_total(cls, rep: Rep, vectors: Sequence[Sequence]) -> Subspace:
        """Span of total-space vectors, split vertexwise (graded part of the span)."""
        parts: dict[str, list] = {v: [] for v in rep.graph.vertices}
        for x in vectors:
            for v, piece in rep.split_total(x).items():
                parts[v].append(piece)
        return cls(rep, parts)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.rep == other.rep and self.basis == other.basis

    def __hash__(self):
        return hash(tuple(sorted(self.basis.items())))

    def dims(self) -> dict[str, int]:
        return {v: len(b) for v, b in self.basis.items()}

    @property
    def total_dim(self) -> int:
        return sum(len(b) for b in self.basis.values())

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def is_full(self) -> bool:
        return all(len(self.basis[v]) == self.rep.dims[v] for v in self.rep.graph.vertices)

    def contains(self, v: str, x: Sequence) -> bool:
        return la.in_span(self.rep.field, self.basis[v], x)

    def __le__(self, other: Subspace) -> bool:
        F = self.rep.field
        return all(la.is_subspace(F, self.basis[v], other.basis[v]) for v in self.basis)

    def __and__(self, other: Subspace) -> Subspace:
        F = self.rep.field
        return Subspace(self.rep, {v: la.intersect(F, self.basis[v], other.basis[v], self.rep.dims[v])
                                   for v in self.basis})

    def __add__(self, other: Subspace) -> Subspace:
        return Subspace(self.rep, {v: list(self.basis[v]) + list(other.basis[v]) for v in self.basis})

    def total_basis(self) -> list[list]:
        return [self.rep.embed_at(v, b) for v in self.rep.graph.vertices for b in self.basis[v]]

    def to_json(self) -> dict:
        F = self.rep.field
        return {v: [[F.format(a) for a in b] for b in vecs] for v, vecs in self.basis.items()}

    def __repr__(self):
        return f"Subspace(dims={self.dims()})"


def is_submodule(s: Subspace) -> bool:
    r, F = s.rep, s.rep.field
    for e in r.graph.edges:
        for b in s.basis[e.src]:
            if not la.in_span(F, s.basis[e.dst], r.act(e.name, b)):
                return False
    return True


def submodule_closure(r: Rep, vectors: Mapping[str, Sequence[Sequence]]) -> Subspace:
    """Smallest submodule containing the given vertex-local vectors (spinning)."""
    F = r.field
    basis = {v: la.span(F, vectors.get(v, ()), r.dims[v]) for v in r.graph.vertices}
    frontier = [(v, b) for v in r.graph.vertices for b in basis[v]]
    while frontier:
        v, x = frontier.pop()
        for e in r.graph.out_edges[v]:
            y = r.act(e.name, x)
            w = e.dst
            rem = la.reduce_vector(F, basis[w], la.pivots_of(basis[w]), y)
            if not la.is_zero_vector(rem):
                basis[w] = la.span(F, basis[w] + [y], r.dims[w])
                frontier.append((w, y))
    return Subspace(r, basis)


def spin_total(r: Rep, x: Sequence) -> Subspace:
    """Submodule generated by a total-space vector."""
    return submodule_closure(r, {v: [piece] for v, piece in r.split_total(x).items()})


# ---------------------------------------------------------------------------
# Morphisms


@dataclass(frozen=True, eq=False)
class RepHom:
    source: Rep
    target: Rep
    blocks: Mapping[str, tuple[tuple, ...]]

    def __post_init__(self):
        check_compatible(self.source, self.target)
        blocks = {}
        for v in self.source.graph.vertices:
            B = self.blocks.get(v)
            if B is None:
                B = la.zeros(self.source.field, self.target.dims[v], self.source.dims[v])
            B = _freeze(B)
            if len(B) != self.target.dims[v] or any(len(row) != self.source.dims[v] for row in B):
                raise ShapeMismatch(f"hom block at {v} has the wrong shape")
            blocks[v] = B
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def identity(cls, r: Rep) -> RepHom:
        return cls(r, r, {v: la.identity(r.field, r.dims[v]) for v in r.graph.vertices})

    def __eq__(self, other):
        if not isinstance(other, RepHom):
            return NotImplemented
        return self.source == other.source and self.target == other.target and self.blocks == other.blocks

    __hash__ = None

    def apply(self, v: str, x: Sequence) -> list:
        return la.matvec(self.source.field, self.blocks[v], x)

    def is_equivariant(self) -> bool:
        F = self.source.field
        for e in self.source.graph.edges:
            lhs = la.matmul(F, self.blocks[e.dst], self.source.mats[e.name], self.source.dims[e.src])
            rhs = la.matmul(F, self.target.mats[e.name], self.blocks[e.src], self.source.dims[e.src])
            if lhs != rhs:
                return False
        return True

    def is_invertible(self) -> bool:
        F = self.source.field
        return all(self.source.dims[v] == self.target.dims[v] and la.is_invertible(F, self.blocks[v])
                   for v in self.source.graph.vertices)

    def compose(self, other: RepHom) -> RepHom:
        """self ∘ other."""
        if other.target != self.source:
            raise LpaError("homs do not compose")
        F = self.source.field
        return RepHom(other.source, self.target,
                      {v: la.matmul(F, self.blocks[v], other.blocks[v], other.source.dims[v])
                       for v in self.source.graph.vertices})

    def image(self) -> Subspace:
        return Subspace(self.target, {v: la.transpose(self.blocks[v], self.source.dims[v])
                                      for v in self.source.graph.vertices})

    def kernel(self) -> Subspace:
        F = self.source.field
        return Subspace(self.source, {v: la.nullspace(F, self.blocks[v], self.source.dims[v])
                                      for v in self.source.graph.vertices})

    def preimage(self, s: Subspace) -> Subspace:
        F = self.source.field
        return Subspace(self.source, {
            v: la.preimage(F, self.blocks[v], s.basis[v], self.source.dims[v], self.target.dims[v])
            for v in self.source.graph.vertices})

    def push(self, s: Subspace) -> Subspace:
        F = self.source.field
        return Subspace(self.target, {v: la.image(F, self.blocks[v], s.basis[v], self.target.dims[v])
                                      for v in self.source.graph.vertices})

    def to_json(self) -> dict:
        F = self.source.field
        return {v: [[F.format(a) for a in row] for row in B] for v, B in self.blocks.items()}


# ---------------------------------------------------------------------------
# Constructions


def direct_sum(v: Rep, w: Rep) -> Rep:
    check_compatible(v, w)
    F = v.field
    mats = {}
    for e in v.graph.edges:
        mats[e.name] = la.block_diag(F, v.mats[e.name], v.dims[e.dst], v.dims[e.src],
                                     w.mats[e.name], w.dims[e.dst], w.dims[e.src])
    return Rep(v.graph, F, {x: v.dims[x] + w.dims[x] for x in v.graph.vertices}, mats)


def summand_subspaces(v: Rep, w: Rep, s: Rep) -> tuple[Subspace, Subspace]:
    """The two canonical summands of s = direct_sum(v, w)."""
    F = v.field
    first, second = {}, {}
    for x in v.graph.vertices:
        n = s.dims[x]
        first[x] = [la.unit_vector(F, n, i) for i in range(v.dims[x])]
        second[x] = [la.unit_vector(F, n, v.dims[x] + i) for i in range(w.dims[x])]
    return Subspace(s, first), Subspace(s, second)


def quotient(r: Rep, s: Subspace) -> tuple[Rep, RepHom]:
    """Quotient representation r/s and the projection morphism."""
    if not is_submodule(s):
        raise NotASubmodule("cannot take the quotient by a non-submodule")
    F = r.field
    proj, sec = {}, {}
    for v in r.graph.vertices:
        P, S, _ = la.quotient_maps(F, s.basis[v], r.dims[v])
        proj[v], sec[v] = P, S
    qdims = {v: r.dims[v] - len(s.basis[v]) for v in r.graph.vertices}
    mats = {}
    for e in r.graph.edges:
        MS = la.matmul(F, r.mats[e.name], sec[e.src], qdims[e.src])
        mats[e.name] = la.matmul(F, proj[e.dst], MS, qdims[e.src])
    Q = Rep(r.graph, F, qdims, mats)
    return Q, RepHom(r, Q, proj)


def subrep(s: Subspace) -> tuple[Rep, RepHom]:
    """A submodule as a standalone Rep, with its inclusion morphism."""
    if not is_submodule(s):
        raise NotASubmodule("not closed under the edge maps")
    r, F = s.rep, s.rep.field
    sdims = s.dims()
    mats = {}
    for e in r.graph.edges:
        B = s.basis[e.dst]
        piv = la.pivots_of(B)
        cols = []
        for b in s.basis[e.src]:
            y = r.act(e.name, b)
            cols.append([y[p] for p in piv])
        mats[e.name] = la.transpose(cols, sdims[e.dst]) if cols else la.zeros(F, sdims[e.dst], 0)
    S = Rep(r.graph, F, sdims, mats)
    incl = {v: la.transpose([list(b) for b in s.basis[v]], r.dims[v]) if s.basis[v]
            else la.zeros(F, r.dims[v], 0) for v in r.graph.vertices}
    return S, RepHom(S, r, incl)


def base_change(r: Rep, g: Mapping[str, Sequence[Sequence]]) -> Rep:
    """The isomorphic rep g·r with M'_e = g_dst M_e g_src^{-1}."""
    F = r.field
    ginv = {}
    for v in r.graph.vertices:
        inv = la.inverse(F, g[v]) if r.dims[v] else []
        if inv is None:
            raise LpaError(f"base change at {v} is singular")
        ginv[v] = inv
    mats = {}
    for e in r.graph.edges:
        A = la.matmul(F, g[e.dst], r.mats[e.name], r.dims[e.src])
        mats[e.name] = la.matmul(F, A, ginv[e.src], r.dims[e.src])
    return Rep(r.graph, F, r.dims, mats)
