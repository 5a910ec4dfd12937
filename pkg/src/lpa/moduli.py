"""Desk-scale probes of the moduli statements.

Finite-field counts here are consistency probes only: the dimension
statements they shadow are about algebraically closed fields of
characteristic zero.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import Mapping

from . import linalg as la
from .chen import prime_classes
from .classify import budget_from_env, end_algebra, is_irreducible
from .errors import BudgetExceeded, Unsupported
from .field import FieldCtx, monic_polys, poly_is_irreducible
from .graph import Graph
from .rep import Rep


def expected_dim(g: Graph, d: Mapping[str, int]) -> int:
    """Σ_e d_se·d_re − Σ_ν d_ν² + 1."""
    return (sum(d.get(e.src, 0) * d.get(e.dst, 0) for e in g.edges)
            - sum(d.get(v, 0) ** 2 for v in g.vertices) + 1)


@dataclass
class StabilizerReport:
    kernel_dim: int
    end_dim: int
    transverse_dim: int
    expected_dim: int

    @property
    def commutant_ok(self) -> bool:
        return self.kernel_dim == self.end_dim

    @property
    def free_point(self) -> bool:
        return self.kernel_dim == 1

    @property
    def matches_expected(self) -> bool:
        return self.free_point and self.transverse_dim == self.expected_dim

    def to_json(self) -> dict:
        return {"kernel_dim": self.kernel_dim, "end_dim": self.end_dim,
                "transverse_dim": self.transverse_dim, "expected_dim": self.expected_dim,
                "commutant_ok": self.commutant_ok, "free_point": self.free_point,
                "matches_expected": self.matches_expected}


def derivative_matrix(r: Rep) -> tuple[list[list], int]:
    """Matrix of (g_ν)_ν ↦ (g_re·M_e − M_e·g_se)_e and its number of columns."""
    F, g = r.field, r.graph
    col, k = {}, 0
    for v in g.vertices:
        for i in range(r.dims[v]):
            for j in range(r.dims[v]):
                col[(v, i, j)] = k
                k += 1
    rows = []
    for e in g.edges:
        M = r.mats[e.name]
        ds, dt = r.dims[e.src], r.dims[e.dst]
        for a in range(dt):
            for b in range(ds):
                row = [F.zero] * k
                # (g_re M)_{ab} = Σ_c g_re[a][c] M[c][b]
                for c in range(dt):
                    if M[c][b] != 0:
                        i = col[(e.dst, a, c)]
                        row[i] = F.add(row[i], M[c][b])
                # (M g_se)_{ab} = Σ_c M[a][c] g_se[c][b]
                for c in range(ds):
                    if M[a][c] != 0:
                        i = col[(e.src, c, b)]
                        row[i] = F.sub(row[i], M[a][c])
                rows.append(row)
    return rows, k


def stabilizer_check(r: Rep) -> StabilizerReport:
    rows, k = derivative_matrix(r)
    kernel = len(la.nullspace(r.field, rows, k)) if k else 0
    d = r.dim_vector()
    edges_term = sum(d[e.src] * d[e.dst] for e in r.graph.edges)
    transverse = edges_term - (sum(x * x for x in d.values()) - kernel)
    return StabilizerReport(kernel, len(end_algebra(r)) if r.total_dim else 0,
                            transverse, expected_dim(r.graph, d))


# ---------------------------------------------------------------------------
# Exhaustive orbit counting


@dataclass
class OrbitReport:
    total: int
    irreducible: int
    classes: int
    nonzero_classes: int
    expected_dim: int
    representatives: list[Rep] = dc_field(default_factory=list)
    representative_indices: list[int] = dc_field(default_factory=list)

    def to_json(self) -> dict:
        return {"total": self.total, "irreducible": self.irreducible, "classes": self.classes,
                "nonzero_classes": self.nonzero_classes, "expected_dim": self.expected_dim,
                "representative_indices": self.representative_indices,
                "representatives": [r.to_json() for r in self.representatives],
                "note": "finite-field consistency probe, not a verification of the "
                        "characteristic-zero moduli statement"}


class _Encoder:
    """Bijection between matrix tuples and indices 0..q^N-1 (edge order, row-major)."""

    def __init__(self, g: Graph, F: FieldCtx, d: Mapping[str, int]):
        self.g, self.F, self.d = g, F, d
        self.shapes = [(e.name, d[e.dst], d[e.src]) for e in g.edges]
        self.n_entries = sum(a * b for _, a, b in self.shapes)
        self.q = F.order

    def decode(self, idx: int) -> dict[str, list[list]]:
        digits = []
        for _ in range(self.n_entries):
            idx, r = divmod(idx, self.q)
            digits.append(r)
        digits.reverse()
        mats, k = {}, 0
        for name, a, b in self.shapes:
            mats[name] = [digits[k + i * b:k + (i + 1) * b] for i in range(a)]
            k += a * b
        return mats

    def encode(self, mats: Mapping[str, list[list]]) -> int:
        idx = 0
        for name, a, b in self.shapes:
            for row in mats[name]:
                for x in row:
                    idx = idx * self.q + x
        return idx


def general_linear(F: FieldCtx, n: int) -> list[tuple[list[list], list[list]]]:
    """All (g, g⁻¹) for g in GL(n, F)."""
    out = []
    els = list(F.elements())
    for entries in itertools.product(els, repeat=n * n):
        g = [list(entries[i * n:(i + 1) * n]) for i in range(n)]
        gi = la.inverse(F, g)
        if gi is not None:
            out.append((g, gi))
    return out


def enumerate_and_count(g: Graph, d: Mapping[str, int], field: FieldCtx,
                        budget: int | None = None) -> OrbitReport:
    if not field.is_finite:
        raise Unsupported("orbit enumeration needs a finite field")
    budget = budget_from_env() if budget is None else budget
    d = {v: int(d.get(v, 0)) for v in g.vertices}
    enc = _Encoder(g, field, d)
    n_reps = enc.q ** enc.n_entries
    groups = {v: general_linear(field, d[v]) if d[v] else [([], [])] for v in g.vertices}
    group_size = 1
    for v in g.vertices:
        group_size *= len(groups[v])
    if n_reps > budget or n_reps * group_size > budget * 64:
        raise BudgetExceeded(f"{n_reps} representations (group order {group_size}) exceed budget {budget}")
    F = field
    seen = bytearray(n_reps)
    irreducible = 0
    reps, idxs = [], []
    for idx in range(n_reps):
        if seen[idx]:
            continue
        mats = enc.decode(idx)
        r = Rep(g, F, d, mats)
        if sum(d.values()) == 0 or not is_irreducible(r).yes:
            seen[idx] = 1
            continue
        reps.append(r)
        idxs.append(idx)
        for gs in itertools.product(*(groups[v] for v in g.vertices)):
            gv = dict(zip(g.vertices, gs))
            conj = {}
            for e in g.edges:
                M = mats[e.name]
                ge, _ = gv[e.dst]
                _, gsi = gv[e.src]
                if d[e.dst] and d[e.src]:
                    conj[e.name] = la.matmul(F, la.matmul(F, ge, M, d[e.src]), gsi, d[e.src])
                else:
                    conj[e.name] = M
            j = enc.encode(conj)
            if not seen[j]:
                seen[j] = 1
                irreducible += 1
    nonzero = sum(1 for r in reps if not all(la.is_zero_matrix(M) for M in r.mats.values()))
    return OrbitReport(n_reps, irreducible, len(reps), nonzero, expected_dim(g, d), reps, idxs)


# ---------------------------------------------------------------------------
# Chen parameter families


def irreducible_monic_count(F: FieldCtx, degree: int) -> int:
    return sum(1 for P in monic_polys(F, degree) if poly_is_irreducible(P))


def chen_subvariety_report(n: int, d: int, field: FieldCtx) -> dict:
    """Counts of generalized Chen parameters at A-dimension d on the bouquet of n loops."""
    g = Graph.bouquet(n)
    exp = expected_dim(g, {"v": d})
    finite = field.is_finite
    q = field.order
    lam = len(prime_classes(n, d)) * (q - 1) if finite else None
    families = []
    for a in range(1, d + 1):
        if d % a:
            continue
        b = d // a
        if b == 1:
            continue
        cnt = irreducible_monic_count(field, b) if finite else None
        families.append({"cycle_length": a, "poly_degree": b,
                         "prime_classes": len(prime_classes(n, a)),
                         "irreducible_polys": cnt,
                         "count": len(prime_classes(n, a)) * cnt if finite else None})
    return {"n": n, "d": d, "field": str(field), "expected_dim": exp,
            "lambda_family": lam, "prime_classes": len(prime_classes(n, d)),
            "anh_nam_families": families,
            "ambient_scale": q ** exp if finite and exp >= 0 else None,
            "note": f"generalized Chen classes are parameterised by at most {d} coefficients, "
                    f"against {exp} for the full irreducible locus"}
