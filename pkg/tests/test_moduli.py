"""Dimension counts, stabilizers and exhaustive orbit enumeration."""

import itertools

import pytest
from hypothesis import given, strategies as st

from lpa import oracles
from lpa.chen import anh_nam, chen_cyclic
from lpa.classify import end_algebra
from lpa.errors import BudgetExceeded, Unsupported
from lpa.experiments import prime_cycles
from lpa.field import FieldCtx, Poly
from lpa.graph import Graph
from lpa.moduli import (chen_subvariety_report, enumerate_and_count, expected_dim,
                        general_linear, irreducible_monic_count, stabilizer_check)
from lpa.rep import Rep, base_change

B2 = Graph.bouquet(2)


@given(st.integers(1, 6), st.integers(0, 6))
def test_expected_dim_bouquet(n, d):
    assert expected_dim(Graph.bouquet(n), {"v": d}) == (n - 1) * d * d + 1


def test_expected_dim_quiver():
    g = Graph.from_edges(["a", "b"], [("x", "a", "b"), ("y", "a", "b")])
    assert expected_dim(g, {"a": 1, "b": 2}) == 4 - 5 + 1


@pytest.mark.parametrize("p", [2, 3, 5])
def test_general_linear_order(p):
    F = FieldCtx.Fp(p)
    assert len(general_linear(F, 2)) == (p * p - 1) * (p * p - p)


@pytest.mark.parametrize("p", [2, 3])
def test_stabilizer_at_chen_points(p):
    F = FieldCtx.Fp(p)
    for c in prime_cycles(B2, 2):
        r = chen_cyclic(B2, c, 1, F)
        st_ = stabilizer_check(r)
        assert st_.commutant_ok and st_.kernel_dim == 1
        assert st_.transverse_dim == st_.expected_dim


def test_anh_nam_over_q_has_two_dimensional_commutant(Q):
    r = anh_nam(B2, ["e1"], Poly.from_high(Q, [1, 0, 1]))
    st_ = stabilizer_check(r)
    assert len(end_algebra(r)) == 2
    assert st_.commutant_ok
    assert (st_.kernel_dim, st_.transverse_dim, st_.expected_dim) == (2, 6, 5)


@given(st.integers(0, 10**6))
def test_stabilizer_kernel_is_end(seed):
    import random
    from lpa.sampling import random_rep
    r = random_rep(B2, FieldCtx.Fp(3), random.Random(seed), dims={"v": 2})
    assert stabilizer_check(r).commutant_ok


def burnside_irreducible_orbits(F, d):
    G = general_linear(F, d)
    reps = []
    for entries in itertools.product(range(F.p), repeat=2 * d * d):
        m1 = [list(entries[i * d:(i + 1) * d]) for i in range(d)]
        m2 = [list(entries[d * d + i * d:d * d + (i + 1) * d]) for i in range(d)]
        r = Rep.build(B2, F, {"v": d}, {"e1": m1, "e2": m2})
        if oracles.is_irreducible_bruteforce(r):
            reps.append(r)
    fixed = sum(1 for g, _ in G for r in reps if base_change(r, {"v": g}) == r)
    return len(reps), fixed // len(G)


def test_d2_counts_against_burnside(F2):
    rep = enumerate_and_count(B2, {"v": 2}, F2)
    n_irr, n_orbits = burnside_irreducible_orbits(F2, 2)
    assert rep.total == 256
    assert rep.irreducible == n_irr
    assert rep.classes == n_orbits


@pytest.mark.parametrize("p", [2, 3, 5])
def test_d1_points(p):
    rep = enumerate_and_count(B2, {"v": 1}, FieldCtx.Fp(p))
    assert rep.classes == p * p and rep.nonzero_classes == p * p - 1


def test_enumeration_guards(Q):
    with pytest.raises(Unsupported):
        enumerate_and_count(B2, {"v": 1}, Q)
    with pytest.raises(BudgetExceeded):
        enumerate_and_count(B2, {"v": 3}, FieldCtx.Fp(3), budget=1000)


def test_no_irreducibles_on_isolated_target():
    g = Graph.from_edges(["nu", "mu"], [("e", "nu", "mu")])
    assert enumerate_and_count(g, {"nu": 0, "mu": 2}, FieldCtx.Fp(3)).irreducible == 0


def test_chen_subvariety_report():
    F = FieldCtx.Fp(2)
    rep = chen_subvariety_report(2, 2, F)
    assert rep["expected_dim"] == 5
    assert rep["lambda_family"] == 1
    assert rep["anh_nam_families"][0]["count"] == 2 * irreducible_monic_count(F, 2) == 2
