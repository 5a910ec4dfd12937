"""Pi(V): equality, normal forms and the Leavitt-path-algebra action."""

import random

import pytest
from hypothesis import given, strategies as st

from conftest import GRAPHS, reps
from lpa import leavitt as lv
from lpa.cli import corpus_dir
from lpa.errors import MalformedMonomial, RepMismatch, ShapeMismatch, SinkExpansion
from lpa.field import FieldCtx
from lpa.graph import Graph, Path
from lpa.io import load_json, load_rep, parse_element, parse_operator
from lpa.rep import Rep, direct_sum
from lpa.sampling import random_base_change
from lpa.structure import caret_injective, ker_j, nabla


def literal_zero(w):
    """Zero test by plain expansion: push every term to a common length D steps
    past the deepest path and check that every surviving vector vanishes
    (no ker_j involved)."""
    rep, g = w.rep, w.rep.graph
    F = rep.field
    depth = max((len(p) for p in w.terms), default=0) + rep.total_dim + 1
    frontier = dict(w.terms)
    for _ in range(depth):
        nxt = {}
        for p, x in frontier.items():
            keep = g.is_sink(g.dst(p)) or len(p) >= depth
            items = [(p, x)] if keep else lv.expand_term(rep, p, x)
            for q, y in items:
                nxt[q] = tuple(F.add(a, b) for a, b in zip(nxt[q], y)) if q in nxt else tuple(y)
        frontier = {p: x for p, x in nxt.items() if any(x)}
    return not frontier


def el(rep, *terms):
    return lv.PiElement.from_terms(rep, [(Path(o, tuple(es)), x) for o, es, x in terms])


@pytest.fixture
def remark():
    return load_rep(corpus_dir() / "degenerate_remark.json")


def test_remark_element_is_zero(remark):
    assert lv.eq(el(remark, ("v", [], [0, 1])), lv.PiElement.zero(remark))


def test_expansion_relation(Q):
    g = Graph.bouquet(2)
    r = Rep.build(g, Q, {"v": 2}, {"e1": [[1, 2], [3, 4]], "e2": [[0, 1], [1, 0]]})
    x = [Q(1), Q(-1)]
    w = el(r, ("v", [], x))
    expanded = lv.PiElement.from_terms(r, lv.expand_term(r, Path("v"), x))
    assert lv.eq(w, expanded)
    assert not lv.eq(w, lv.PiElement.zero(r))


def test_sink_expansion_refused(Q):
    r = Rep.build(Graph.line(2), Q, {"v1": 1, "v2": 1}, {"e1": [[1]]})
    with pytest.raises(SinkExpansion):
        lv.expand_term(r, Path("v2"), [Q(1)])


def test_figures_reproduced():
    c = corpus_dir()
    rep = load_rep(c / "caret_rep.json")
    w = parse_element(load_json(c / "caret_element.json"), rep)
    F = rep.field
    got = lv.act_element(w, parse_operator(load_json(c / "op_e1e2.json"), rep))
    assert got.terms == {Path("v"): (F(0), F(1))}
    got = lv.act_element(w, parse_operator(load_json(c / "op_e1star.json"), rep))
    assert got.terms == {Path("v", ("e1", "e1")): (F(1), F(0)), Path("v", ("e1", "e2")): (F(0), F(1))}


def test_malformed_monomial(Q):
    r = Rep.build(Graph.line(2), Q, {"v1": 1, "v2": 1}, {"e1": [[1]]})
    w = el(r, ("v1", [], [1]))
    with pytest.raises(MalformedMonomial):
        lv.act_monomial(w, lv.LMonomial(Q(1), Path("v1", ("e1",)), Path("v1")))


def test_shape_and_rep_mismatch(Q):
    g = Graph.bouquet(1)
    a = Rep.build(g, Q, {"v": 1}, {"e1": [[1]]})
    b = Rep.build(g, Q, {"v": 1}, {"e1": [[2]]})
    with pytest.raises(ShapeMismatch):
        el(a, ("v", [], [1, 2]))
    with pytest.raises(RepMismatch):
        lv.eq(el(a, ("v", [], [1])), el(b, ("v", [], [1])))


@given(reps(), st.integers(0, 10**6))
def test_eq_matches_literal_expansion(r, seed):
    rng = random.Random(seed)
    a = lv.random_element(r, rng)
    b = lv.random_element(r, rng)
    assert lv.is_zero(a - b) == literal_zero(a - b)
    assert lv.eq(a, a)


@given(reps(), st.integers(0, 10**6))
def test_normal_form_empty_iff_zero(r, seed):
    a = lv.random_element(r, random.Random(seed))
    assert (not lv.normal_form(a).leaves) == lv.is_zero(a)


@given(reps(), st.integers(0, 10**6))
def test_j_injective_iff_nondegenerate(r, seed):
    K = ker_j(r)
    for v in r.graph.vertices:
        for b in K.basis[v]:
            assert lv.is_zero(lv.j_embed(r, v, b))
    if caret_injective(r):
        assert K.is_zero()


@given(reps(fields=(FieldCtx.Fp(5), FieldCtx.Q())), st.integers(0, 10**6))
def test_relations_hold(r, seed):
    rng = random.Random(seed)
    for _ in range(5):
        assert lv.check_relations(lv.random_element(r, rng)) == []


@given(reps(), st.integers(0, 10**6))
def test_pi_of_iso_commutes_with_action(r, seed):
    rng = random.Random(seed)
    s = random_base_change(r, rng)
    from lpa.classify import is_isomorphic
    theta = is_isomorphic(r, s, seed=seed).witness
    P = lv.pi_hom(theta)
    w = lv.random_element(r, rng)
    for e in r.graph.edges:
        assert lv.eq(P(lv.act_edge(w, e.name)), lv.act_edge(P(w), e.name))
        assert lv.eq(P(lv.act_star(w, e.name)), lv.act_star(P(w), e.name))


@given(reps(), st.integers(0, 10**6))
def test_nabla_projection_preserves_pi(r, seed):
    # Pi(V) and Pi(nabla V) agree: an element is zero iff its image is
    N, proj = nabla(r)
    a = lv.random_element(r, random.Random(seed))
    assert lv.is_zero(a) == lv.is_zero(lv.pi_hom(proj)(a))


@given(reps(graphs=(GRAPHS["bouquet2"],)), reps(graphs=(GRAPHS["bouquet2"],)), st.integers(0, 10**6))
def test_direct_sum_embedding(v, w, seed):
    if v.field != w.field:
        return
    rng = random.Random(seed)
    s = direct_sum(v, w)
    a, b = lv.random_element(v, rng), lv.random_element(w, rng)
    ab = lv.embed_direct_sum(v, w, s, a, b)
    assert lv.is_zero(ab) == (lv.is_zero(a) and lv.is_zero(b))


def test_verify_report_json():
    r = load_rep(corpus_dir() / "caret_rep.json")
    rep = lv.verify_relations(r, 20, seed=0)
    assert rep.ok and rep.to_json()["checked"]["elements"] == 20
