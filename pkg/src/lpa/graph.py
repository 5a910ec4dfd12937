"""Finite directed graphs, paths, and the E^k path sets.

``E^k`` follows the sink convention: paths of length exactly k together with
every shorter path (including length-0 vertex paths) that ends at a sink.
The declared edge order is the canonical total order used everywhere
(path enumeration, rotation canonicalization).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import GraphError, NotACycle, UnknownVertex


@dataclass(frozen=True)
class Edge:
    name: str
    src: str
    dst: str


@dataclass(frozen=True, order=True)
class Path:
    """A path given by its origin vertex and edge names; no edges = a vertex."""

    origin: str
    edges: tuple[str, ...] = ()

    def __hash__(self):
        # paths are dictionary keys in every Pi(V) computation
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash((self.origin, self.edges))
            object.__setattr__(self, "_hash", h)
        return h

    def __len__(self):
        return len(self.edges)

    def to_json(self) -> dict:
        return {"origin": self.origin, "edges": list(self.edges)}

    @classmethod
    def from_json(cls, data: dict) -> Path:
        return cls(str(data["origin"]), tuple(str(e) for e in data.get("edges", [])))

    def __str__(self):
        return "".join(self.edges) if self.edges else self.origin


@dataclass(frozen=True)
class Graph:
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))
        if len(set(self.vertices)) != len(self.vertices):
            raise GraphError("duplicate vertex ids")
        names = [e.name for e in self.edges]
        if len(set(names)) != len(names):
            raise GraphError("duplicate edge ids")
        vs = set(self.vertices)
        for e in self.edges:
            if e.src not in vs or e.dst not in vs:
                raise GraphError(f"edge {e.name} has an undeclared endpoint")

    # -- constructors -----------------------------------------------------
    @classmethod
    def from_edges(cls, vertices: Iterable[str], edges: Iterable[tuple[str, str, str]]) -> Graph:
        return cls(tuple(vertices), tuple(Edge(*t) for t in edges))

    @classmethod
    def bouquet(cls, n: int, vertex: str = "v") -> Graph:
        return cls((vertex,), tuple(Edge(f"e{i}", vertex, vertex) for i in range(1, n + 1)))

    @classmethod
    def line(cls, n: int) -> Graph:
        vs = tuple(f"v{i}" for i in range(1, n + 1))
        return cls(vs, tuple(Edge(f"e{i}", vs[i - 1], vs[i]) for i in range(1, n)))

    @classmethod
    def circle(cls, n: int) -> Graph:
        g = cls.line(n)
        return cls(g.vertices, g.edges + (Edge(f"e{n}", g.vertices[-1], g.vertices[0]),))

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices),
                "edges": [{"name": e.name, "src": e.src, "dst": e.dst} for e in self.edges]}

    @classmethod
    def from_json(cls, data: dict) -> Graph:
        try:
            return cls(tuple(str(v) for v in data["vertices"]),
                       tuple(Edge(str(e["name"]), str(e["src"]), str(e["dst"]))
                             for e in data["edges"]))
        except (KeyError, TypeError) as exc:
            raise GraphError(f"malformed graph JSON: {exc}") from exc

    # -- lookups -------------------------------------------------------------
    @cached_property
    def edge_map(self) -> dict[str, Edge]:
        return {e.name: e for e in self.edges}

    @cached_property
    def edge_order(self) -> dict[str, int]:
        return {e.name: i for i, e in enumerate(self.edges)}

    @cached_property
    def out_edges(self) -> dict[str, tuple[Edge, ...]]:
        out: dict[str, list[Edge]] = {v: [] for v in self.vertices}
        for e in self.edges:
            out[e.src].append(e)
        return {v: tuple(es) for v, es in out.items()}

    @cached_property
    def in_edges(self) -> dict[str, tuple[Edge, ...]]:
        out: dict[str, list[Edge]] = {v: [] for v in self.vertices}
        for e in self.edges:
            out[e.dst].append(e)
        return {v: tuple(es) for v, es in out.items()}

    def edge(self, name: str) -> Edge:
        try:
            return self.edge_map[name]
        except KeyError:
            raise GraphError(f"unknown edge {name!r}") from None

    def _check_vertex(self, v: str):
        if v not in self.out_edges:
            raise UnknownVertex(v)

    def is_sink(self, v: str) -> bool:
        self._check_vertex(v)
        return not self.out_edges[v]

    def classify_vertex(self, v: str) -> str:
        """``"Sink"`` or ``"Regular"`` (finite graphs have no infinite emitters)."""
        return "Sink" if self.is_sink(v) else "Regular"

    @cached_property
    def sinks(self) -> tuple[str, ...]:
        return tuple(v for v in self.vertices if not self.out_edges[v])

    @cached_property
    def regular_vertices(self) -> tuple[str, ...]:
        return tuple(v for v in self.vertices if self.out_edges[v])

    # -- paths -----------------------------------------------------------------
    def path(self, edges: Sequence[str], origin: str | None = None) -> Path:
        """Build and validate a path; origin defaults to the first edge's source."""
        edges = tuple(edges)
        if not edges:
            if origin is None:
                raise GraphError("an empty path needs an origin")
            self._check_vertex(origin)
            return Path(origin)
        first = self.edge(edges[0])
        if origin is not None and origin != first.src:
            raise GraphError(f"path starts at {first.src}, not {origin}")
        p = Path(first.src, edges)
        self.validate_path(p)
        return p

    def validate_path(self, p: Path):
        self._check_vertex(p.origin)
        cur = p.origin
        for name in p.edges:
            e = self.edge(name)
            if e.src != cur:
                raise GraphError(f"edge {name} does not continue the path at {cur}")
            cur = e.dst

    def src(self, p: Path) -> str:
        return p.origin

    def dst(self, p: Path) -> str:
        if not p.edges:
            return p.origin
        return self.edge_map[p.edges[-1]].dst

    def concat(self, p: Path, q: Path) -> Path:
        if self.dst(p) != q.origin:
            raise GraphError(f"cannot compose {p} with {q}")
        return Path(p.origin, p.edges + q.edges)

    def extend(self, p: Path, e: Edge) -> Path:
        return Path(p.origin, p.edges + (e.name,))

    def paths_of_length(self, k: int, source: str | None = None) -> list[Path]:
        starts = [source] if source is not None else list(self.vertices)
        for s in starts:
            self._check_vertex(s)
        layer = [Path(s) for s in starts]
        for _ in range(k):
            layer = [self.extend(p, e) for p in layer for e in self.out_edges[self.dst(p)]]
        return layer

    def paths_E(self, k: int, source: str | None = None) -> list[Path]:
        """E^k: length-k paths plus shorter paths ending at a sink."""
        if k < 0:
            raise ValueError("k must be >= 0")
        starts = [source] if source is not None else list(self.vertices)
        for s in starts:
            self._check_vertex(s)
        out: list[Path] = []
        layer = [Path(s) for s in starts]
        for _ in range(k):
            nxt = []
            for p in layer:
                es = self.out_edges[self.dst(p)]
                if not es:
                    out.append(p)
                for e in es:
                    nxt.append(self.extend(p, e))
            layer = nxt
        return out + layer

    # -- cycles -----------------------------------------------------------------
    def check_cycle(self, c: Path):
        if not c.edges:
            raise NotACycle("a cycle has length >= 1")
        try:
            self.validate_path(c)
        except GraphError as exc:
            raise NotACycle(str(exc)) from exc
        if self.dst(c) != c.origin:
            raise NotACycle(f"{c} does not return to {c.origin}")

    def cycle(self, edges: Sequence[str]) -> Path:
        try:
            c = self.path(edges)
        except GraphError as exc:
            raise NotACycle(str(exc)) from exc
        self.check_cycle(c)
        return c

    def is_prime_cycle(self, c: Path) -> bool:
        self.check_cycle(c)
        return is_primitive_word(c.edges)

    def rotate(self, c: Path, k: int) -> Path:
        self.check_cycle(c)
        m = len(c.edges)
        k %= m
        edges = c.edges[k:] + c.edges[:k]
        return Path(self.edge_map[edges[0]].src, edges)

    def cycle_rotation_class(self, c: Path) -> Path:
        """Lexicographically least rotation under the declared edge order."""
        self.check_cycle(c)
        order = self.edge_order
        k = min(range(len(c.edges)),
                key=lambda i: [order[e] for e in c.edges[i:] + c.edges[:i]])
        return self.rotate(c, k)


def is_primitive_word(word: Sequence) -> bool:
    """True iff the word is not a proper power w^k, k > 1 (divisor-length scan)."""
    m = len(word)
    w = tuple(word)
    for d in range(1, m):
        if m % d == 0 and w[:d] * (m // d) == w:
            return False
    return True
