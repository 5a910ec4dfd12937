"""Exact dense linear algebra over a FieldCtx.

Matrices are lists of rows, vectors are lists.  Column counts are passed
explicitly wherever a matrix may have zero rows, since ``[]`` alone does not
remember its width.  Subspaces of F^n are stored as the nonzero rows of a
reduced row echelon form, which is canonical: two subspaces are equal iff
their RREF bases are equal.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Sequence

from .field import FieldCtx


def zeros(F: FieldCtx, r: int, c: int) -> list[list]:
    return [[F.zero] * c for _ in range(r)]


def identity(F: FieldCtx, n: int) -> list[list]:
    M = zeros(F, n, n)
    for i in range(n):
        M[i][i] = F.one
    return M


def unit_vector(F: FieldCtx, n: int, i: int) -> list:
    v = [F.zero] * n
    v[i] = F.one
    return v


def transpose(M: Sequence[Sequence], ncols: int) -> list[list]:
    return [[row[j] for row in M] for j in range(ncols)]


def is_zero_vector(v: Sequence) -> bool:
    return all(a == 0 for a in v)


def is_zero_matrix(M: Sequence[Sequence]) -> bool:
    return all(a == 0 for row in M for a in row)


def matvec(F: FieldCtx, M: Sequence[Sequence], x: Sequence) -> list:
    red = F.reduce
    return [red(sum(a * b for a, b in zip(row, x))) for row in M]


def matmul(F: FieldCtx, A: Sequence[Sequence], B: Sequence[Sequence],
           ncols: int | None = None) -> list[list]:
    c = ncols if ncols is not None else (len(B[0]) if B else 0)
    red = F.reduce
    cols = [[row[j] for row in B] for j in range(c)]
    return [[red(sum(a * b for a, b in zip(row, col))) for col in cols] for row in A]


def matadd(F: FieldCtx, A, B) -> list[list]:
    return [[F.add(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def matsub(F: FieldCtx, A, B) -> list[list]:
    return [[F.sub(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def scale(F: FieldCtx, c, A) -> list[list]:
    return [[F.mul(c, a) for a in row] for row in A]


def vec_add(F: FieldCtx, u, v) -> list:
    return [F.add(a, b) for a, b in zip(u, v)]


def vec_sub(F: FieldCtx, u, v) -> list:
    return [F.sub(a, b) for a, b in zip(u, v)]


def vec_scale(F: FieldCtx, c, v) -> list:
    return [F.mul(c, a) for a in v]


def block_diag(F: FieldCtx, A, ra: int, ca: int, B, rb: int, cb: int) -> list[list]:
    M = zeros(F, ra + rb, ca + cb)
    for i in range(ra):
        M[i][:ca] = list(A[i])
    for i in range(rb):
        M[ra + i][ca:] = list(B[i])
    return M


# ---------------------------------------------------------------------------
# Echelon forms


def rref(F: FieldCtx, rows: Sequence[Sequence], ncols: int) -> tuple[list[list], list[int]]:
    """Reduced row echelon form: (nonzero rows, pivot columns)."""
    M = [list(r) for r in rows]
    inv, red = F.inv, F.reduce
    pivots: list[int] = []
    r = 0
    nrows = len(M)
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        pr = M[r]
        if pr[c] != 1:
            s = inv(pr[c])
            pr = M[r] = [red(a * s) for a in pr]
        for i in range(nrows):
            if i != r:
                f = M[i][c]
                if f != 0:
                    Mi = M[i]
                    M[i] = [red(a - f * b) for a, b in zip(Mi, pr)]
        pivots.append(c)
        r += 1
    return M[:r], pivots


def rank(F: FieldCtx, rows, ncols: int) -> int:
    return len(rref(F, rows, ncols)[1])


def span(F: FieldCtx, vectors: Sequence[Sequence], n: int) -> list[list]:
    """Canonical basis (RREF rows) of the span of ``vectors`` in F^n."""
    return rref(F, vectors, n)[0]


def nullspace(F: FieldCtx, M: Sequence[Sequence], ncols: int) -> list[list]:
    """Basis of {x : M x = 0}, returned in canonical RREF."""
    R, pivots = rref(F, M, ncols)
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    basis = []
    for f in free:
        v = [F.zero] * ncols
        v[f] = F.one
        for row, pc in zip(R, pivots):
            v[pc] = F.neg(row[f])
        basis.append(v)
    return span(F, basis, ncols)


def reduce_vector(F: FieldCtx, basis: Sequence[Sequence], pivots: Sequence[int], v) -> list:
    """Remainder of v modulo an RREF basis (zero iff v lies in its span)."""
    out = list(v)
    red = F.reduce
    for row, pc in zip(basis, pivots):
        f = out[pc]
        if f != 0:
            out = [red(a - f * b) for a, b in zip(out, row)]
    return out


def pivots_of(basis: Sequence[Sequence]) -> list[int]:
    """Pivot columns of an RREF basis."""
    out = []
    for row in basis:
        out.append(next(i for i, a in enumerate(row) if a != 0))
    return out


def in_span(F: FieldCtx, basis, v) -> bool:
    return is_zero_vector(reduce_vector(F, basis, pivots_of(basis), v))


def is_subspace(F: FieldCtx, U, W) -> bool:
    """U ⊆ W for RREF bases."""
    piv = pivots_of(W)
    return all(is_zero_vector(reduce_vector(F, W, piv, u)) for u in U)


def annihilator(F: FieldCtx, U: Sequence[Sequence], n: int) -> list[list]:
    """Rows c with c·u = 0 for all u in U; x ∈ span(U) iff ann·x = 0."""
    return nullspace(F, U, n)


def intersect(F: FieldCtx, U, W, n: int) -> list[list]:
    return nullspace(F, annihilator(F, U, n) + annihilator(F, W, n), n)


def subspace_sum(F: FieldCtx, U, W, n: int) -> list[list]:
    return span(F, list(U) + list(W), n)


def image(F: FieldCtx, M, U, n_dst: int) -> list[list]:
    return span(F, [matvec(F, M, u) for u in U], n_dst)


def preimage(F: FieldCtx, M, W, n_src: int, n_dst: int) -> list[list]:
    """{x ∈ F^n_src : M x ∈ span(W)}."""
    ann = annihilator(F, W, n_dst)
    if not ann:
        return identity(F, n_src)
    return nullspace(F, matmul(F, ann, M, n_src), n_src)


def quotient_maps(F: FieldCtx, U, n: int) -> tuple[list[list], list[list], list[int]]:
    """Projection F^n -> F^n/U and a section back, in coordinates.

    The quotient is coordinatized by the non-pivot positions of U's RREF.
    Returns (projection (n-k)×n, section n×(n-k), complement indices).
    """
    piv = pivots_of(U)
    pset = set(piv)
    comp = [j for j in range(n) if j not in pset]
    proj = zeros(F, len(comp), n)
    for a, j in enumerate(comp):
        proj[a][j] = F.one
        for row, pc in zip(U, piv):
            if row[j] != 0:
                proj[a][pc] = F.neg(row[j])
    sec = zeros(F, n, len(comp))
    for a, j in enumerate(comp):
        sec[j][a] = F.one
    return proj, sec, comp


# ---------------------------------------------------------------------------
# Square matrices


def det(F: FieldCtx, M: Sequence[Sequence]) -> object:
    n = len(M)
    A = [list(r) for r in M]
    d = F.one
    for c in range(n):
        piv = next((i for i in range(c, n) if A[i][c] != 0), None)
        if piv is None:
            return F.zero
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            d = F.neg(d)
        d = F.mul(d, A[c][c])
        inv = F.inv(A[c][c])
        for i in range(c + 1, n):
            f = F.mul(A[i][c], inv)
            if f != 0:
                A[i] = [F.sub(a, F.mul(f, b)) for a, b in zip(A[i], A[c])]
    return d


def inverse(F: FieldCtx, M: Sequence[Sequence]) -> list[list] | None:
    n = len(M)
    aug = [list(M[i]) + identity(F, n)[i] for i in range(n)]
    R, piv = rref(F, aug, 2 * n)
    if piv[:n] != list(range(n)) or len(R) < n:
        return None
    return [row[n:] for row in R]


def is_invertible(F: FieldCtx, M) -> bool:
    return len(M) == 0 or rank(F, M, len(M)) == len(M)


def charpoly_coeffs(F: FieldCtx, A: Sequence[Sequence]) -> list:
    """Coefficients (highest degree first) of det(xI - A); Berkowitz, division free."""
    n = len(A)
    red = F.reduce
    vect = [F.one]
    for r in range(1, n + 1):
        a = A[r - 1][r - 1]
        R = A[r - 1][: r - 1]
        X = [A[i][r - 1] for i in range(r - 1)]
        sub = [row[: r - 1] for row in A[: r - 1]]
        Q = [F.one, F.neg(a)]
        for _ in range(r - 1):
            Q.append(F.neg(red(sum(x * y for x, y in zip(R, X)))))
            X = matvec(F, sub, X)
        vect = [red(sum(Q[i - j] * vect[j] for j in range(r) if 0 <= i - j < len(Q)))
                for i in range(r + 1)]
    return vect


def mat_poly_eval(F: FieldCtx, coeffs_low_first: Sequence, A) -> list[list]:
    """Evaluate a polynomial (low-first coefficients) at a square matrix."""
    n = len(A)
    out = zeros(F, n, n)
    for c in reversed(list(coeffs_low_first)):
        out = matmul(F, out, A, n)
        for i in range(n):
            out[i][i] = F.add(out[i][i], c)
    return out


def mat_power(F: FieldCtx, A, k: int) -> list[list]:
    n = len(A)
    out = identity(F, n)
    base = [list(r) for r in A]
    while k:
        if k & 1:
            out = matmul(F, out, base, n)
        base = matmul(F, base, base, n)
        k >>= 1
    return out


# ---------------------------------------------------------------------------
# Enumeration over finite fields


def all_vectors(F: FieldCtx, n: int) -> Iterator[list]:
    for t in itertools.product(range(F.p), repeat=n):
        yield list(t)


def projective_points(F: FieldCtx, n: int) -> Iterator[list]:
    """One nonzero representative per line of F_p^n (leading nonzero entry 1)."""
    for lead in range(n):
        for tail in itertools.product(range(F.p), repeat=n - lead - 1):
            yield [0] * lead + [1] + list(tail)


def all_subspaces(F: FieldCtx, n: int) -> Iterator[list[list]]:
    """Every subspace of F_p^n, as its canonical RREF basis."""
    for k in range(n + 1):
        for pivots in itertools.combinations(range(n), k):
            free_slots = [(r, c) for r, pc in enumerate(pivots)
                          for c in range(pc + 1, n) if c not in pivots]
            for vals in itertools.product(range(F.p), repeat=len(free_slots)):
                rows = [[0] * n for _ in range(k)]
                for r, pc in enumerate(pivots):
                    rows[r][pc] = 1
                for (r, c), v in zip(free_slots, vals):
                    rows[r][c] = v
                yield rows
