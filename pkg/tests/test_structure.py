"""Representations, submodules and the functors Sigma / Nabla."""

import random

import pytest
from hypothesis import given, strategies as st

from conftest import GRAPHS, reps
from lpa import oracles
from lpa.cli import corpus_dir
from lpa.errors import NotASubmodule, ShapeMismatch
from lpa.field import FieldCtx
from lpa.graph import Graph
from lpa.io import load_rep
from lpa.rep import (Rep, RepHom, Subspace, base_change, direct_sum, is_submodule, quotient,
                     submodule_closure, subrep)
from lpa.sampling import random_base_change, random_rep
from lpa.structure import (a_dimension, caret_injective, is_complete, is_full, ker_j, nabla,
                           recover, satisfies_condition_I, sigma, sigma_chain)


def corpus(name):
    return load_rep(corpus_dir() / name)


# -- representations -----------------------------------------------------------


def test_shape_mismatch_reports_edge():
    with pytest.raises(ShapeMismatch) as info:
        Rep.build(Graph.bouquet(1), FieldCtx.Q(), {"v": 2}, {"e1": [[1, 0]]})
    assert "e1" in str(info.value)


def test_column_convention(Q):
    g = Graph.line(2)
    r = Rep.build(g, Q, {"v1": 2, "v2": 1}, {"e1": [[1, 2]]})
    assert r.act("e1", [1, 1]) == [3]


def test_quotient_and_subrep(Q):
    r = corpus("nondegenerate_not_full.json")
    s = submodule_closure(r, {"v": [[1, 0, 0]]})
    S, inc = subrep(s)
    Qr, proj = quotient(r, s)
    assert inc.is_equivariant() and proj.is_equivariant()
    assert S.total_dim + Qr.total_dim == r.total_dim
    assert proj.compose(inc).image().is_zero()


def test_non_submodule_rejected(Q):
    r = corpus("nondegenerate_not_full.json")
    s = Subspace(r, {"v": [[0, 0, 1]]})
    assert not is_submodule(s)
    with pytest.raises(NotASubmodule):
        quotient(r, s)
    with pytest.raises(NotASubmodule):
        is_complete(s)


def test_base_change_hom_is_equivariant():
    rng = random.Random(2)
    F = FieldCtx.Fp(5)
    r = random_rep(GRAPHS["bouquet2"], F, rng, dims={"v": 3})
    from lpa.sampling import random_invertible
    g = {"v": random_invertible(F, 3, rng)}
    h = RepHom(r, base_change(r, g), g)
    assert h.is_equivariant() and h.is_invertible()


# -- the worked examples -----------------------------------------------------------


def test_full_but_degenerate():
    r = corpus("full_degenerate.json")
    assert is_full(r)
    assert not caret_injective(r)
    assert sum(a_dimension(r).values()) == 1


def test_nondegenerate_not_full():
    r = corpus("nondegenerate_not_full.json")
    assert caret_injective(r)
    assert not is_full(r)
    s, _ = sigma(r)
    assert s == Subspace(r, {"v": [[1, 0, 0]]})
    assert sum(a_dimension(r).values()) == 1


def test_closure_of_second_basis_vector():
    # E2 spins to span{E1, E2}: no edge map reaches E3
    r = corpus("nondegenerate_not_full.json")
    s = submodule_closure(r, {"v": [[0, 1, 0]]})
    assert s == Subspace(r, {"v": [[1, 0, 0], [0, 1, 0]]})


def test_remark_degenerate():
    r = corpus("degenerate_remark.json")
    assert ker_j(r).is_full()
    assert nabla(r)[0].total_dim == 0


def test_sink_components_never_in_ker_j():
    Q = FieldCtx.Q()
    r = Rep.build(Graph.line(2), Q, {"v1": 1, "v2": 1}, {"e1": [[0]]})
    assert ker_j(r).dims() == {"v1": 1, "v2": 0}
    assert sigma(r)[0].dims() == {"v1": 0, "v2": 1}


def test_condition_I():
    Q = FieldCtx.Q()
    r = Rep.build(Graph.bouquet(1), Q, {"v": 2}, {"e1": [[0, 1], [1, 0]]})
    assert satisfies_condition_I(r)
    assert not satisfies_condition_I(corpus("nondegenerate_not_full.json"))


# -- properties ------------------------------------------------------------------


@given(reps())
def test_sigma_chain_decreasing_and_complete(r):
    chain = sigma_chain(r)
    for a, b in zip(chain, chain[1:]):
        assert b <= a and b != a
    s = chain[-1]
    assert is_submodule(s) and is_complete(s)


@given(reps())
def test_recover_is_full_and_nondegenerate(r):
    rc = recover(r)
    assert is_full(rc) and caret_injective(rc)


@given(reps(), st.integers(0, 10**6))
def test_a_dimension_invariant_under_base_change(r, seed):
    assert a_dimension(random_base_change(r, random.Random(seed))) == a_dimension(r)


@given(reps(fields=(FieldCtx.Fp(3), FieldCtx.Q())), reps(fields=(FieldCtx.Fp(3),)))
def test_a_dimension_additive(r, w):
    if r.graph != w.graph or r.field != w.field:
        return
    s = direct_sum(r, w)
    ar, aw = a_dimension(r), a_dimension(w)
    assert a_dimension(s) == {v: ar[v] + aw[v] for v in r.graph.vertices}


@given(reps(fields=(FieldCtx.Fp(2),), max_dim=2))
def test_against_bruteforce_oracles(r):
    assert ker_j(r) == oracles.ker_j_bruteforce(r)
    assert sigma(r)[0] == oracles.sigma_bruteforce(r)


@given(reps(fields=(FieldCtx.Fp(2), FieldCtx.Fp(3)), max_dim=2))
def test_is_complete_matches_path_definition(r):
    for s in oracles.invariant_subspaces(r)[:40]:
        assert is_complete(s) == oracles.is_complete_bruteforce(s)
