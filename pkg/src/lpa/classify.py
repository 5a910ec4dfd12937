"""Hom spaces and the classification tests (isomorphism, irreducibility,
indecomposability).

Every test answers with a :class:`Decision`.  ``Yes``/``No`` are always
certified (a witness or an exhaustive/algebraic argument); randomness is
only used to *find* certificates, never to decide.  ``Unknown`` is returned
when no certificate was found within budget.
"""

from __future__ import annotations

import itertools
import os
import random
from dataclasses import dataclass
from typing import Any

from . import linalg as la
from .errors import ZeroRep
from .field import Poly, factor
from .rep import Rep, RepHom, Subspace, check_compatible, submodule_closure

DEFAULT_BUDGET = 2 ** 20
EXHAUSTIVE_END_LIMIT = 2 ** 16


def budget_from_env() -> int:
    return int(os.environ.get("LPA_BUDGET", DEFAULT_BUDGET))


@dataclass(frozen=True)
class Decision:
    answer: str  # "Yes" | "No" | "Unknown"
    witness: Any = None
    reason: str = ""

    @property
    def yes(self) -> bool:
        return self.answer == "Yes"

    @property
    def no(self) -> bool:
        return self.answer == "No"

    @property
    def unknown(self) -> bool:
        return self.answer == "Unknown"

    def __str__(self):
        return self.answer


# ---------------------------------------------------------------------------
# Hom spaces


def _hom_unknowns(v: Rep, w: Rep) -> dict[tuple[str, int, int], int]:
    idx, k = {}, 0
    for x in v.graph.vertices:
        for i in range(w.dims[x]):
            for j in range(v.dims[x]):
                idx[(x, i, j)] = k
                k += 1
    return idx


def hom_space(v: Rep, w: Rep) -> list[RepHom]:
    """Basis of Hom_A(v, w): solutions of theta_dst M^v_e = M^w_e theta_src."""
    check_compatible(v, w)
    F = v.field
    idx = _hom_unknowns(v, w)
    n = len(idx)
    rows = []
    for e in v.graph.edges:
        s, t = e.src, e.dst
        Mv, Mw = v.mats[e.name], w.mats[e.name]
        for i in range(w.dims[t]):
            for j in range(v.dims[s]):
                row = [F.zero] * n
                for k in range(v.dims[t]):
                    a = Mv[k][j]
                    if a != 0:
                        c = idx[(t, i, k)]
                        row[c] = F.add(row[c], a)
                for k in range(w.dims[s]):
                    a = Mw[i][k]
                    if a != 0:
                        c = idx[(s, k, j)]
                        row[c] = F.sub(row[c], a)
                if any(a != 0 for a in row):
                    rows.append(row)
    basis = la.nullspace(F, rows, n)
    return [_hom_from_vector(v, w, idx, b) for b in basis]


def _hom_from_vector(v: Rep, w: Rep, idx, vec) -> RepHom:
    F = v.field
    blocks = {x: la.zeros(F, w.dims[x], v.dims[x]) for x in v.graph.vertices}
    for (x, i, j), k in idx.items():
        blocks[x][i][j] = vec[k]
    return RepHom(v, w, blocks)


def end_algebra(r: Rep) -> list[RepHom]:
    return hom_space(r, r)


def combine(homs: list[RepHom], coeffs) -> RepHom:
    v, w = homs[0].source, homs[0].target
    F = v.field
    blocks = {}
    for x in v.graph.vertices:
        B = la.zeros(F, w.dims[x], v.dims[x])
        for c, h in zip(coeffs, homs):
            if c != 0:
                B = la.matadd(F, B, la.scale(F, c, h.blocks[x]))
        blocks[x] = B
    return RepHom(v, w, blocks)


def hom_total(h: RepHom) -> list[list]:
    """A hom as a block-diagonal operator on the total space (square case)."""
    r = h.source
    F = r.field
    D = r.total_dim
    M = la.zeros(F, D, D)
    for x in r.graph.vertices:
        o = r.offsets[x]
        for i, row in enumerate(h.blocks[x]):
            M[o + i][o:o + len(row)] = list(row)
    return M


# ---------------------------------------------------------------------------
# Isomorphism


def is_isomorphic(v: Rep, w: Rep, seed: int = 0, budget: int | None = None,
                  tries: int = 30) -> Decision:
    check_compatible(v, w)
    budget = budget_from_env() if budget is None else budget
    F = v.field
    if v.dims != w.dims:
        return Decision("No", reason="dimension vectors differ")
    if v.total_dim == 0:
        return Decision("Yes", RepHom.identity(v), "both zero")
    H = hom_space(v, w)
    if not H:
        return Decision("No", reason="Hom(V, W) = 0")
    if len(H) != len(end_algebra(v)):
        return Decision("No", reason="dim Hom(V, W) != dim End(V)")
    if len(hom_space(w, v)) != len(end_algebra(w)):
        return Decision("No", reason="dim Hom(W, V) != dim End(W)")
    rng = random.Random(seed)
    for _ in range(tries):
        h = combine(H, [F.random(rng) for _ in H])
        if h.is_invertible():
            return Decision("Yes", h, "invertible intertwiner found")
    k = len(H)
    if F.is_finite:
        if F.p ** k > budget:
            return Decision("Unknown", reason="hom-space exhaustion exceeds budget")
        for coeffs in itertools.product(range(F.p), repeat=k):
            h = combine(H, coeffs)
            if h.is_invertible():
                return Decision("Yes", h, "invertible intertwiner found")
        return Decision("No", reason=f"all {F.p}^{k} intertwiners are singular")
    # Over Q: det(sum x_i H_i) has degree <= D in each variable; vanishing on a
    # grid with D+1 points per axis forces it to be the zero polynomial.
    D = v.total_dim
    if (D + 1) ** k > budget:
        return Decision("Unknown", reason="determinant certification exceeds budget")
    for coeffs in itertools.product(range(D + 1), repeat=k):
        h = combine(H, [F(c) for c in coeffs])
        if h.is_invertible():
            return Decision("Yes", h, "invertible intertwiner found")
    return Decision("No", reason=f"generic determinant vanishes on a {(D + 1)}^{k} grid")


# ---------------------------------------------------------------------------
# Irreducibility


def _spin(F, gens, vectors, D) -> list[list]:
    basis = la.span(F, vectors, D)
    frontier = list(basis)
    while frontier:
        x = frontier.pop()
        for G in gens:
            y = la.matvec(F, G, x)
            rem = la.reduce_vector(F, basis, la.pivots_of(basis), y)
            if not la.is_zero_vector(rem):
                basis = la.span(F, basis + [y], D)
                frontier.append(y)
    return basis


def _algebra_words(F, gens, D, max_len: int) -> list[list[list]]:
    words = [la.identity(F, D)] + [list(map(list, g)) for g in gens]
    layer = [list(map(list, g)) for g in gens]
    for _ in range(max_len - 1):
        layer = [la.matmul(F, a, g, D) for a in layer for g in gens]
        words += layer
    return words


def _random_element(F, words, D, rng):
    a = la.zeros(F, D, D)
    for w in words:
        c = F.random(rng) if F.is_finite else F(rng.randint(-3, 3))
        if c != 0:
            a = la.matadd(F, a, la.scale(F, c, w))
    return a


def _norton(r: Rep, gens, a) -> Decision | None:
    """Holt–Rees form of Norton's criterion for one algebra element ``a``.

    Needs an irreducible factor p of charpoly(a) with dim ker p(a) = deg p;
    then ker p(a) is a simple F[a]-module, so one vector on each side decides.
    """
    F, D = r.field, r.total_dim
    cp = Poly.from_high(F, la.charpoly_coeffs(F, a))
    for p, _ in factor(cp):
        b = la.mat_poly_eval(F, p.coeffs, a)
        N = la.nullspace(F, b, D)
        if len(N) != p.degree:
            continue
        U = _spin(F, gens, [N[0]], D)
        if len(U) < D:
            return Decision("No", Subspace.from_total(r, U), "spun a kernel vector to a proper submodule")
        bt = la.transpose(b, D)
        Nt = la.nullspace(F, bt, D)
        gens_t = [la.transpose(g, D) for g in gens]
        Ut = _spin(F, gens_t, [Nt[0]], D)
        if len(Ut) < D:
            sub = la.nullspace(F, Ut, D)
            return Decision("No", Subspace.from_total(r, sub), "dual spin is proper")
        return Decision("Yes", reason=f"Norton criterion with factor of degree {p.degree}")
    return None


def _exhaustive_irreducible(r: Rep) -> Decision:
    """Every nonzero submodule contains a nonzero vector at a single vertex."""
    F = r.field
    for v in r.graph.vertices:
        for x in la.projective_points(F, r.dims[v]):
            s = submodule_closure(r, {v: [x]})
            if not s.is_full():
                return Decision("No", s, "exhaustive vector scan")
    return Decision("Yes", reason="every nonzero homogeneous vector generates V")


def is_irreducible(r: Rep, seed: int = 0, budget: int | None = None,
                   tries: int = 40) -> Decision:
    F, D = r.field, r.total_dim
    budget = budget_from_env() if budget is None else budget
    if D == 0:
        raise ZeroRep("irreducibility of the zero representation")
    if D == 1:
        return Decision("Yes", reason="one-dimensional")
    support = [v for v in r.graph.vertices if r.dims[v]]
    # cheap witnesses: spin the standard basis vectors
    for v in support:
        for i in range(r.dims[v]):
            s = submodule_closure(r, {v: [la.unit_vector(F, r.dims[v], i)]})
            if not s.is_full():
                return Decision("No", s, "a basis vector spins to a proper submodule")
    gens = r.generators
    rng = random.Random(seed)
    words = _algebra_words(F, gens, D, 2 if D <= 4 else 3)
    for _ in range(tries):
        a = _random_element(F, words, D, rng)
        d = _norton(r, gens, a)
        if d is not None:
            return d
    if F.is_finite:
        count = sum((F.p ** r.dims[v] - 1) // (F.p - 1) for v in support)
        if count <= budget:
            return _exhaustive_irreducible(r)
    return Decision("Unknown", reason="no Norton certificate found")


# ---------------------------------------------------------------------------
# Indecomposability


def _primary_split(r: Rep, phi) -> Decision | None:
    F, D = r.field, r.total_dim
    cp = Poly.from_high(F, la.charpoly_coeffs(F, phi))
    facs = factor(cp)
    if len(facs) < 2:
        return None
    p, m = facs[0]
    f = p ** m
    g = cp // f
    U = la.nullspace(F, la.mat_poly_eval(F, f.coeffs, phi), D)
    W = la.nullspace(F, la.mat_poly_eval(F, g.coeffs, phi), D)
    return Decision("No", (Subspace.from_total(r, U), Subspace.from_total(r, W)),
                    "Fitting decomposition along coprime characteristic factors")


def _local_certificate(r: Rep, E: list[RepHom]) -> bool:
    """End = F·1 + N with N a nilpotent subalgebra  ⟹  End is local."""
    F, D = r.field, r.total_dim
    nil = []
    for h in E:
        M = hom_total(h)
        cp = Poly.from_high(F, la.charpoly_coeffs(F, M))
        facs = factor(cp)
        if len(facs) != 1 or facs[0][0].degree != 1:
            return False
        lam = F.neg(facs[0][0].coeffs[0])
        n = la.matsub(F, M, la.scale(F, lam, la.identity(F, D)))
        nil.append([a for row in n for a in row])
    N = la.span(F, nil, D * D)

    def unflat(v):
        return [list(v[i * D:(i + 1) * D]) for i in range(D)]

    for x in N:
        for y in N:
            prod = la.matmul(F, unflat(x), unflat(y), D)
            if not la.in_span(F, N, [a for row in prod for a in row]):
                return False
    P = N
    for _ in range(D + 1):
        if not P:
            return True
        P = la.span(F, [[a for row in la.matmul(F, unflat(x), unflat(y), D) for a in row]
                        for x in P for y in N], D * D)
    return not P


def is_indecomposable(r: Rep, seed: int = 0, tries: int = 20) -> Decision:
    F, D = r.field, r.total_dim
    if D == 0:
        raise ZeroRep("indecomposability of the zero representation")
    E = end_algebra(r)
    if len(E) == 1:
        return Decision("Yes", reason="End(V) is the base field")
    rng = random.Random(seed)
    candidates = [hom_total(h) for h in E]
    for _ in range(tries):
        candidates.append(hom_total(combine(E, [F.random(rng) for _ in E])))
    for phi in candidates:
        d = _primary_split(r, phi)
        if d is not None:
            return d
    if F.is_finite and F.p ** len(E) <= EXHAUSTIVE_END_LIMIT:
        I = la.identity(F, D)
        Z = la.zeros(F, D, D)
        for coeffs in itertools.product(range(F.p), repeat=len(E)):
            e = hom_total(combine(E, coeffs))
            if e != I and e != Z and la.matmul(F, e, e, D) == e:
                im = la.span(F, la.transpose(e, D), D)
                ker = la.nullspace(F, e, D)
                return Decision("No", (Subspace.from_total(r, im), Subspace.from_total(r, ker)),
                                "nontrivial idempotent in End(V)")
        return Decision("Yes", reason="End(V) has no nontrivial idempotent (exhaustive)")
    if _local_certificate(r, E):
        return Decision("Yes", reason="End(V) = F·1 + nilpotent ideal")
    if is_irreducible(r, seed=seed).yes:
        return Decision("Yes", reason="simple modules are indecomposable")
    return Decision("Unknown", reason="no idempotent found and End(V) not certified local")
