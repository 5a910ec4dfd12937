"""Chen modules, their generalizations, and the truncation chains."""

import random

import pytest
from hypothesis import given, strategies as st

from lpa import linalg as la
from lpa import oracles
from lpa.chen import (anh_nam, chen_cyclic, chen_sink, graded_trunc, irrational_trunc,
                      tail_positions, twist_matrix, vector_variant)
from lpa.classify import end_algebra, is_irreducible, is_isomorphic
from lpa.errors import (CycleMismatch, InvalidPrefix, NotASink, NotIrreducible, NotPrime,
                        ReducibleTwist, Unsupported, ZeroLambda, ZeroVector)
from lpa.experiments import prime_cycles
from lpa.field import FieldCtx, Poly, companion_matrix, monic_polys, poly_is_irreducible
from lpa.graph import Graph
from lpa.sampling import random_invertible
from lpa.structure import caret_injective, is_complete, is_full, recover

B2 = Graph.bouquet(2)
F3 = FieldCtx.Fp(3)


def test_tails_of_circle():
    g = Graph.circle(3)
    c = g.cycle(["e1", "e2", "e3"])
    assert tail_positions(g, c) == [("v1", 0), ("v2", 0), ("v3", 0)]
    r = chen_cyclic(g, c, 2, FieldCtx.Fp(5))
    assert r.dims == {"v1": 1, "v2": 1, "v3": 1}
    assert r.mats["e1"] == ((2,),) and r.mats["e3"] == ((1,),)


def test_twist_sits_on_first_transition():
    r = chen_cyclic(B2, ["e1", "e2"], 3, FieldCtx.Fp(5))
    # t0 --e1--> λ t1, t1 --e2--> t0
    assert r.mats["e1"] == ((0, 0), (3, 0))
    assert r.mats["e2"] == ((0, 1), (0, 0))


def test_constructor_errors(Q):
    with pytest.raises(NotPrime):
        chen_cyclic(B2, ["e1", "e1"], 1, Q)
    with pytest.raises(ZeroLambda):
        chen_cyclic(B2, ["e1"], 0, Q)
    with pytest.raises(NotASink):
        chen_sink(B2, "v", Q)
    with pytest.raises(NotIrreducible):
        anh_nam(B2, ["e1"], Poly.from_high(Q, [1, 0, -1]))
    with pytest.raises(ReducibleTwist):
        twist_matrix(B2, ["e1"], [[1, 0], [0, 1]], Q)
    with pytest.raises(ZeroVector):
        vector_variant(B2, ["e1", "e2"], [0, 0], Q)
    g = Graph.circle(2)
    with pytest.raises(Unsupported):
        vector_variant(g, ["e1", "e2"], [0, 1], Q)
    with pytest.raises(CycleMismatch):
        graded_trunc(g, "v2", ["e1", "e2"], 3, Q)
    with pytest.raises(InvalidPrefix):
        irrational_trunc(B2, ["e1"], 3, Q)
    with pytest.raises(InvalidPrefix):
        irrational_trunc(Graph.line(3), ["e2", "e1"], 2, Q)


def test_sink_module():
    g = Graph.line(2)
    r = chen_sink(g, "v2", F3)
    assert r.dims == {"v1": 0, "v2": 1}
    assert is_full(r) and caret_injective(r)


@pytest.mark.parametrize("c", prime_cycles(B2, 3))
def test_chen_modules_simple_and_recovered(c):
    for lam in F3.units():
        r = chen_cyclic(B2, c, lam, F3)
        assert oracles.is_irreducible_bruteforce(r)
        assert is_isomorphic(recover(r), r).yes


@pytest.mark.parametrize("p,deg", [(2, 2), (2, 3), (3, 2)])
def test_anh_nam_end_is_residue_field(p, deg):
    F = FieldCtx.Fp(p)
    for P in monic_polys(F, deg):
        if not poly_is_irreducible(P):
            continue
        r = anh_nam(B2, ["e1", "e2"], P)
        assert len(end_algebra(r)) == deg
        assert is_irreducible(r, seed=0).yes


@given(st.integers(0, 10**6))
def test_twist_matrix_depends_only_on_charpoly(seed):
    F = FieldCtx.Fp(3)
    rng = random.Random(seed)
    P = rng.choice([f for f in monic_polys(F, 2) if poly_is_irreducible(f)])
    g = random_invertible(F, 2, rng)
    X = la.matmul(F, la.matmul(F, g, companion_matrix(P)), la.inverse(F, g))
    a = twist_matrix(B2, ["e1"], X, F)
    assert is_isomorphic(a, anh_nam(B2, ["e1"], P), seed=seed).yes


def test_vector_variant_literal(Q):
    r = vector_variant(B2, ["e1", "e2"], [1, 0], Q)
    lit = vector_variant(B2, ["e1", "e2"], [1, 0], Q, literal=True)
    assert r.mats["e2"] == ((0, 1), (0, 0))
    assert lit.mats["e1"] == ((0, 1), (1, 0))


@pytest.mark.parametrize("depth", [2, 3, 6])
def test_graded_chain(Q, depth):
    _, rep = graded_trunc(B2, "v", ["e1", "e2"], depth, Q)
    assert rep.length == depth
    assert rep.chain[-1].is_zero()
    assert rep.strictly_descending and all(rep.complete)
    assert all(is_complete(s) for s in rep.chain)
    assert rep.intersection.is_zero()


def test_irrational_chain_on_line(Q):
    g = Graph.line(4)
    r, rep = irrational_trunc(g, ["e1", "e2", "e3"], 3, Q)
    assert rep.length == 3 and rep.intersection.is_zero()
    assert rep.to_json()["dims"] == [3, 2, 1, 0]
