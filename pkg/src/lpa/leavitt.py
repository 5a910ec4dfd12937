"""Elements of Pi(V) and the action of the Leavitt path algebra on them.

An element is a finite formal sum of terms [p, x] with p a path and x a
vector at dst(p), modulo the expansion relation

    [p, x] ~ sum over edges e leaving dst(p) of [p e, x·e].

Equality is decidable: refine both sides until their paths form one
antichain for the prefix order; then the difference is zero iff every leaf
vector lies in ker(j).  (Acting by a leaf path isolates that leaf, so a
nonzero leaf outside ker(j) survives.)
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from . import linalg as la
from .errors import (LpaError, MalformedMonomial, RepMismatch, ShapeMismatch,
                     SinkExpansion)
from .graph import Path
from .rep import Rep, RepHom, direct_sum
from .structure import ker_j


class _RepCache:
    """Per-Rep data reused across many element operations.

    Holds the ker(j) membership test (short-circuited when ker(j) is 0 or
    everything at a vertex) and a memo of edge actions on vectors.
    """

    def __init__(self, rep: Rep):
        F = rep.field
        K = ker_j(rep)
        self.rep = rep
        self.field = F
        self.mode: dict[str, str] = {}
        self.ann: dict[str, list] = {}
        for v in rep.graph.vertices:
            k = len(K.basis[v])
            if k == 0:
                self.mode[v] = "zero"
            elif k == rep.dims[v]:
                self.mode[v] = "full"
            else:
                self.mode[v] = "ann"
                self.ann[v] = la.annihilator(F, K.basis[v], rep.dims[v])
        self._acts: dict[tuple[str, tuple], tuple] = {}

    def contains(self, v: str, x: Sequence) -> bool:
        mode = self.mode[v]
        if mode == "zero":
            return not any(x)
        if mode == "full":
            return True
        red = self.field.reduce
        return all(red(sum(a * b for a, b in zip(row, x))) == 0 for row in self.ann[v])

    def act(self, e: str, x: tuple) -> tuple:
        key = (e, x)
        y = self._acts.get(key)
        if y is None:
            if len(self._acts) > 200_000:
                self._acts.clear()
            y = tuple(self.rep.act(e, x))
            self._acts[key] = y
        return y


_CACHE: dict[int, _RepCache] = {}


def _rep_cache(rep: Rep) -> _RepCache:
    hit = _CACHE.get(id(rep))
    if hit is None or hit.rep is not rep:
        if len(_CACHE) > 64:
            _CACHE.clear()
        hit = _RepCache(rep)
        _CACHE[id(rep)] = hit
    return hit


@dataclass(frozen=True, eq=False)
class PiElement:
    """Formal sum of terms [path, vector]; merged by path, zero terms dropped."""

    rep: Rep
    terms: Mapping[Path, tuple]

    def __post_init__(self):
        F, g = self.rep.field, self.rep.graph
        clean = {}
        for p, x in self.terms.items():
            x = tuple(x)
            if len(x) != self.rep.dims[g.dst(p)]:
                raise ShapeMismatch(f"vector at {p} has length {len(x)}, "
                                    f"expected {self.rep.dims[g.dst(p)]}")
            if any(a != 0 for a in x):
                clean[p] = x
        object.__setattr__(self, "terms", clean)

    @classmethod
    def from_terms(cls, rep: Rep, terms: Iterable[tuple[Path, Sequence]]) -> PiElement:
        F = rep.field
        acc: dict[Path, list] = {}
        for p, x in terms:
            rep.graph.validate_path(p)
            x = [F(a) if not F.is_canonical(a) else a for a in x]
            if p in acc:
                acc[p] = la.vec_add(F, acc[p], x)
            else:
                acc[p] = list(x)
        return cls(rep, {p: tuple(x) for p, x in acc.items()})

    @classmethod
    def _trusted(cls, rep: Rep, terms: Iterable[tuple[Path, tuple]]) -> PiElement:
        """Merge already-valid terms (canonical scalars, correct lengths)."""
        add = rep.field.add
        acc: dict[Path, tuple] = {}
        for p, x in terms:
            y = acc.get(p)
            acc[p] = x if y is None else tuple(add(a, b) for a, b in zip(y, x))
        el = object.__new__(cls)
        object.__setattr__(el, "rep", rep)
        object.__setattr__(el, "terms", {p: x for p, x in acc.items() if any(x)})
        return el

    @classmethod
    def zero(cls, rep: Rep) -> PiElement:
        return cls(rep, {})

    def is_formally_zero(self) -> bool:
        return not self.terms

    def _same_rep(self, other: PiElement):
        if other.rep is not self.rep and other.rep != self.rep:
            raise RepMismatch("elements of Pi of different representations")

    def __add__(self, other: PiElement) -> PiElement:
        self._same_rep(other)
        return PiElement._trusted(self.rep, list(self.terms.items()) + list(other.terms.items()))

    def scale(self, c) -> PiElement:
        F = self.rep.field
        return PiElement._trusted(self.rep, [(p, tuple(F.mul(c, a) for a in x))
                                             for p, x in self.terms.items()])

    def __neg__(self) -> PiElement:
        return self.scale(self.rep.field.neg(self.rep.field.one))

    def __sub__(self, other: PiElement) -> PiElement:
        self._same_rep(other)
        neg = self.rep.field.neg
        return PiElement._trusted(self.rep, list(self.terms.items()) +
                                  [(p, tuple(neg(a) for a in x)) for p, x in other.terms.items()])

    @classmethod
    def sum(cls, rep: Rep, elements: Iterable[PiElement]) -> PiElement:
        return cls._trusted(rep, [t for el in elements for t in el.terms.items()])

    def to_json(self) -> dict:
        F = self.rep.field
        return {"terms": [{"path": p.to_json(), "vector": [F.format(a) for a in x]}
                          for p, x in sorted(self.terms.items())]}

    def __repr__(self):
        inner = " + ".join(f"[{p}, {list(x)}]" for p, x in sorted(self.terms.items()))
        return f"PiElement({inner or '0'})"


@dataclass(frozen=True)
class LMonomial:
    """coeff · p q*  (requires dst p = dst q)."""

    coeff: object
    p: Path
    q: Path


@dataclass(frozen=True)
class AntichainForm:
    leaves: tuple[tuple[Path, tuple], ...]

    def paths(self) -> list[Path]:
        return [p for p, _ in self.leaves]


# ---------------------------------------------------------------------------
# Expansion and equality


def expand_term(rep: Rep, path: Path, x: Sequence) -> list[tuple[Path, list]]:
    """One application of the expansion relation at a non-sink endpoint."""
    g = rep.graph
    v = g.dst(path)
    es = g.out_edges[v]
    if not es:
        raise SinkExpansion(f"{path} ends at the sink {v}")
    cache = _rep_cache(rep)
    x = tuple(x)
    out = []
    for e in es:
        y = cache.act(e.name, x)
        if any(y):
            out.append((g.extend(path, e), y))
    return out


def _is_proper_prefix(p: Path, q: Path) -> bool:
    return p.origin == q.origin and len(p.edges) < len(q.edges) and q.edges[:len(p.edges)] == p.edges


def _refine(rep: Rep, el: PiElement, targets: set[Path]) -> dict[Path, tuple]:
    F = rep.field
    # all proper prefixes of target paths: a term there must be expanded
    prefixes = set()
    for t in targets:
        for k in range(len(t.edges)):
            prefixes.add(Path(t.origin, t.edges[:k]))
    out: dict[Path, list] = {}
    stack = list(el.terms.items())
    while stack:
        p, x = stack.pop()
        if p in prefixes:
            stack.extend(expand_term(rep, p, x))
        elif p in out:
            out[p] = la.vec_add(F, out[p], x)
        else:
            out[p] = list(x)
    return {p: tuple(x) for p, x in out.items() if any(a != 0 for a in x)}


def refine_to_antichain(a: PiElement, b: PiElement) -> tuple[AntichainForm, AntichainForm]:
    """Expand both elements along their joint prefix tree.

    Afterwards no leaf path of either element is a proper prefix of a leaf
    path of the other (or its own), so the union of leaves is an antichain.
    """
    a._same_rep(b)
    targets = set(a.terms) | set(b.terms)
    ra, rb = _refine(a.rep, a, targets), _refine(a.rep, b, targets)
    return (AntichainForm(tuple(sorted(ra.items()))), AntichainForm(tuple(sorted(rb.items()))))


def eq(a: PiElement, b: PiElement) -> bool:
    """Decide a = b in Pi(V), via a − b = 0 (shared terms cancel before refining)."""
    a._same_rep(b)
    return is_zero(a - b)


def is_zero(a: PiElement) -> bool:
    """Refine a along its own prefix tree; zero iff every leaf lies in ker(j)."""
    rep = a.rep
    g = rep.graph
    test = _rep_cache(rep)
    leaves = _refine(rep, a, set(a.terms))
    return all(test.contains(g.dst(p), x) for p, x in leaves.items())


def normal_form(a: PiElement) -> AntichainForm:
    """Antichain form of a with ker(j)-leaves dropped (zero iff the form is empty)."""
    rep = a.rep
    g = rep.graph
    test = _rep_cache(rep)
    leaves = _refine(rep, a, set(a.terms))
    return AntichainForm(tuple(sorted((p, x) for p, x in leaves.items()
                                      if not test.contains(g.dst(p), x))))


# ---------------------------------------------------------------------------
# The L-action


def act_edge(w: PiElement, f: str) -> PiElement:
    """w · f for an edge f."""
    rep = w.rep
    e = rep.graph.edge(f)
    cache = _rep_cache(rep)
    out = []
    for p, x in w.terms.items():
        if p.edges:
            if p.edges[0] == f:
                out.append((Path(e.dst, p.edges[1:]), x))
        elif p.origin == e.src:
            out.append((Path(e.dst), cache.act(f, x)))
    return PiElement._trusted(rep, out)


def act_star_path(w: PiElement, q: Path) -> PiElement:
    """w · q*: [p, x] ↦ [q p, x] when dst q = src p, else 0."""
    rep = w.rep
    g = rep.graph
    g.validate_path(q)
    rq = g.dst(q)
    out = [(Path(q.origin, q.edges + p.edges), x) for p, x in w.terms.items() if p.origin == rq]
    return PiElement._trusted(rep, out)


def act_star(w: PiElement, f: str) -> PiElement:
    e = w.rep.graph.edge(f)
    return act_star_path(w, Path(e.src, (f,)))


def act_vertex(w: PiElement, v: str) -> PiElement:
    """Projection onto the v-component (terms whose path starts at v)."""
    w.rep.graph._check_vertex(v)
    return PiElement._trusted(w.rep, [(p, x) for p, x in w.terms.items() if p.origin == v])


def act_path(w: PiElement, p: Path) -> PiElement:
    """w · p for a path p (a vertex path acts as its projection)."""
    w.rep.graph.validate_path(p)
    out = act_vertex(w, p.origin)
    for f in p.edges:
        out = act_edge(out, f)
    return out


def act_monomial(w: PiElement, m: LMonomial) -> PiElement:
    g = w.rep.graph
    g.validate_path(m.p)
    g.validate_path(m.q)
    if g.dst(m.p) != g.dst(m.q):
        raise MalformedMonomial(f"dst({m.p}) != dst({m.q})")
    out = act_star_path(act_path(w, m.p), m.q)
    F = w.rep.field
    c = m.coeff if F.is_canonical(m.coeff) else F(m.coeff)
    return out.scale(c) if c != 1 else out


def act_element(w: PiElement, monomials: Sequence[LMonomial]) -> PiElement:
    acc = PiElement.zero(w.rep)
    for m in monomials:
        acc = acc + act_monomial(w, m)
    return acc


def j_embed(rep: Rep, v: str, x: Sequence) -> PiElement:
    """The canonical map j_v: x ↦ [v, x]."""
    if len(x) != rep.dims[v]:
        raise ShapeMismatch(f"vector of length {len(x)} at {v} (dim {rep.dims[v]})")
    return PiElement.from_terms(rep, [(Path(v), x)])


def pi_hom(theta: RepHom):
    """Pi(theta): [p, x] ↦ [p, theta_{dst p}(x)]."""
    g = theta.source.graph

    def apply(w: PiElement) -> PiElement:
        if w.rep is not theta.source and w.rep != theta.source:
            raise RepMismatch("element does not live in Pi(source)")
        return PiElement.from_terms(theta.target,
                                    [(p, theta.apply(g.dst(p), x)) for p, x in w.terms.items()])

    return apply


def embed_direct_sum(v: Rep, w: Rep, s: Rep, a: PiElement, b: PiElement) -> PiElement:
    """Image of (a, b) ∈ Pi(v) ⊕ Pi(w) in Pi(v ⊕ w) (s must be direct_sum(v, w))."""
    F, g = v.field, v.graph
    terms = []
    for p, x in a.terms.items():
        terms.append((p, list(x) + [F.zero] * w.dims[g.dst(p)]))
    for p, x in b.terms.items():
        terms.append((p, [F.zero] * v.dims[g.dst(p)] + list(x)))
    return PiElement.from_terms(s, terms)


# ---------------------------------------------------------------------------
# Random elements and the relation harness


def random_element(rep: Rep, rng: random.Random, max_terms: int = 3,
                   max_len: int = 2) -> PiElement:
    F, g = rep.field, rep.graph
    support = [v for v in g.vertices if rep.dims[v]]
    terms = []
    for _ in range(rng.randint(1, max_terms)):
        if not support:
            break
        # random walk backwards from a vertex with nonzero dimension
        end = rng.choice(support)
        edges: list[str] = []
        cur = end
        for _ in range(rng.randint(0, max_len)):
            ins = g.in_edges[cur]
            if not ins:
                break
            e = rng.choice(ins)
            edges.insert(0, e.name)
            cur = e.src
        p = Path(cur, tuple(edges))
        terms.append((p, [F.random(rng) for _ in range(rep.dims[end])]))
    return PiElement.from_terms(rep, terms)


@dataclass
class RelationReport:
    checked: dict[str, int]
    failures: list[tuple[str, PiElement]]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"ok": self.ok, "checked": self.checked,
                "failures": [{"relation": name, "element": el.to_json()}
                             for name, el in self.failures[:10]]}


def check_relations(w: PiElement, iterated_depth: int = 3) -> list[str]:
    """Names of the defining relations that fail on the element w."""
    rep = w.rep
    g = rep.graph
    bad = []

    def same(x, y, name):
        if not eq(x, y):
            bad.append(name)

    proj = {v: act_vertex(w, v) for v in g.vertices}
    # E0: (w·v)·u = δ w·v
    for v in g.vertices:
        for u in g.vertices:
            lhs = act_vertex(proj[v], u)
            rhs = proj[v] if u == v else PiElement.zero(rep)
            same(lhs, rhs, "E0")
    for e in g.edges:
        we = act_edge(w, e.name)
        # E1: s(e) e = e = e r(e), and the starred version
        same(act_edge(proj[e.src], e.name), we, "E1")
        same(act_vertex(we, e.dst), we, "E1")
        wes = act_star(w, e.name)
        same(act_star(proj[e.dst], e.name), wes, "E1*")
        same(act_vertex(wes, e.src), wes, "E1*")
        # CK1: e* f = δ r(e)
        for f in g.edges:
            lhs = act_edge(wes, f.name)
            rhs = proj[e.dst] if f.name == e.name else PiElement.zero(rep)
            same(lhs, rhs, "CK1")
    # CK2 at regular vertices only
    for v in g.regular_vertices:
        acc = PiElement.sum(rep, (act_star(act_edge(w, e.name), e.name) for e in g.out_edges[v]))
        same(acc, proj[v], "CK2")
    # iterated CK2: sum over q in E^n of (w·q)·q* = w; w·q is grown edge by edge
    layer = [(Path(v), proj[v]) for v in g.vertices]
    done: list[tuple[Path, PiElement]] = []
    for n in range(1, iterated_depth + 1):
        nxt = []
        for q, wq in layer:
            es = g.out_edges[g.dst(q)]
            if not es:
                done.append((q, wq))
            for e in es:
                nxt.append((g.extend(q, e), act_edge(wq, e.name)))
        layer = nxt
        acc = PiElement.sum(rep, (act_star_path(wq, q) for q, wq in done + layer))
        same(acc, w, f"CK2^{n}")
    # [p, x] = [dst p, x]·p*
    for p, x in w.terms.items():
        single = PiElement(rep, {p: x})
        same(single, act_star_path(PiElement(rep, {Path(g.dst(p)): x}), p), "star-identity")
    return bad


def verify_relations(rep: Rep, samples: int, seed: int, iterated_depth: int = 3) -> RelationReport:
    rng = random.Random(seed)
    checked: dict[str, int] = {"elements": 0}
    failures = []
    for _ in range(samples):
        w = random_element(rep, rng)
        checked["elements"] += 1
        for name in check_relations(w, iterated_depth):
            failures.append((name, w))
    return RelationReport(checked, failures)


def monomial_from_json(graph, data: dict, field) -> LMonomial:
    try:
        return LMonomial(field(str(data.get("coeff", "1"))), Path.from_json(data["p"]),
                         Path.from_json(data["q"]))
    except KeyError as exc:
        raise LpaError(f"malformed monomial {data!r}") from exc


def element_from_json(rep: Rep, data: dict) -> PiElement:
    F = rep.field
    terms = []
    for t in data.get("terms", []):
        terms.append((Path.from_json(t["path"]), [F.parse_scalar(str(a)) for a in t["vector"]]))
    return PiElement.from_terms(rep, terms)


def ensure_pair(v: Rep, w: Rep) -> Rep:
    return direct_sum(v, w)
