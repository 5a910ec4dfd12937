import itertools

import pytest
import sympy
from hypothesis import given, strategies as st

from lpa.chen import count_prime_classes, prime_classes
from lpa.errors import GraphError, NotACycle, UnknownVertex
from lpa.graph import Graph, Path, is_primitive_word


def lyndon_count(n, d):
    """Moebius formula for primitive necklaces."""
    return sum(sympy.mobius(k) * n ** (d // k) for k in sympy.divisors(d)) // d


def test_constructors():
    b = Graph.bouquet(3)
    assert b.vertices == ("v",) and [e.name for e in b.edges] == ["e1", "e2", "e3"]
    line = Graph.line(2)
    assert line.sinks == ("v2",) and line.regular_vertices == ("v1",)
    c = Graph.circle(3)
    assert c.sinks == () and c.edge("e3").dst == "v1"


def test_validation():
    with pytest.raises(GraphError):
        Graph.from_edges(["a"], [("e", "a", "b")])
    with pytest.raises(GraphError):
        Graph.from_edges(["a", "a"], [])
    with pytest.raises(GraphError):
        Graph.from_edges(["a"], [("e", "a", "a"), ("e", "a", "a")])
    with pytest.raises(UnknownVertex):
        Graph.bouquet(1).is_sink("w")
    with pytest.raises(GraphError):
        Graph.from_json({"vertices": ["a"]})


def test_json_roundtrip():
    g = Graph.circle(4)
    assert Graph.from_json(g.to_json()) == g
    p = g.path(["e1", "e2"])
    assert Path.from_json(p.to_json()) == p


def test_path_validation():
    g = Graph.line(3)
    assert g.dst(g.path(["e1", "e2"])) == "v3"
    with pytest.raises(GraphError):
        g.path(["e2", "e1"])
    with pytest.raises(GraphError):
        g.path([])
    assert g.path([], origin="v2") == Path("v2")


def test_paths_E_includes_short_paths_to_sinks():
    g = Graph.line(2)
    assert g.paths_E(3, source="v1") == [Path("v1", ("e1",))]
    assert g.paths_E(2, source="v2") == [Path("v2")]
    assert len(Graph.bouquet(2).paths_E(4)) == 16


@pytest.mark.parametrize("n,k", [(1, 3), (2, 3), (3, 2)])
def test_paths_of_length_count(n, k):
    assert len(Graph.bouquet(n).paths_of_length(k)) == n ** k


def test_cycles():
    g = Graph.bouquet(2)
    assert g.is_prime_cycle(g.cycle(["e1", "e2"]))
    assert not g.is_prime_cycle(g.cycle(["e1", "e2", "e1", "e2"]))
    with pytest.raises(NotACycle):
        Graph.line(2).cycle(["e1"])
    c = Graph.circle(3)
    r = c.rotate(c.cycle(["e1", "e2", "e3"]), 1)
    assert r.origin == "v2" and r.edges == ("e2", "e3", "e1")
    assert c.cycle_rotation_class(r).edges == ("e1", "e2", "e3")


@given(st.lists(st.integers(0, 2), min_size=1, max_size=9))
def test_primitive_word_brute_force(w):
    m = len(w)
    powers = any(m % d == 0 and d < m and all(w[i] == w[i % d] for i in range(m))
                 for d in range(1, m))
    assert is_primitive_word(w) == (not powers)


@given(st.lists(st.sampled_from(["e1", "e2"]), min_size=1, max_size=7), st.integers(0, 20))
def test_rotation_class_invariant(w, k):
    g = Graph.bouquet(2)
    c = g.cycle(w)
    assert g.cycle_rotation_class(g.rotate(c, k)) == g.cycle_rotation_class(c)


@pytest.mark.parametrize("n,d", [(n, d) for n in (1, 2, 3) for d in range(1, 7)])
def test_prime_class_count_matches_moebius(n, d):
    assert count_prime_classes(n, d) == lyndon_count(n, d)
    classes = prime_classes(n, d)
    for w in classes:
        assert all(w <= w[i:] + w[:i] for i in range(d))


def test_prime_classes_partition_primitive_words():
    words = [w for w in itertools.product(range(2), repeat=6) if is_primitive_word(w)]
    assert len(words) == 6 * count_prime_classes(2, 6)
