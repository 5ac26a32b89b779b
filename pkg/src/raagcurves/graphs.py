"""Finite simplicial graphs and the graph-theoretic predicates used throughout.

Graphs are immutable values.  Vertex identifiers are opaque hashables (in
practice ``str`` or ``int``); every enumeration is ordered by :func:`vertex_key`
so that output is reproducible.
"""

from __future__ import annotations

import itertools
import json
import re
from typing import Hashable, Iterable, Iterator

from .errors import GraphFileError, InputError

Vertex = Hashable


def vertex_key(v):
    """Sort key giving a total order on mixed ``int``/``str`` identifiers."""
    if isinstance(v, bool):
        return (0, int(v), "")
    if isinstance(v, int):
        return (0, v, "")
    return (1, 0, str(v))


def sort_vertices(vs: Iterable[Vertex]) -> tuple:
    return tuple(sorted(vs, key=vertex_key))


def _edge(u, v) -> frozenset:
    return frozenset((u, v))


class Graph:
    """A finite simplicial graph (no loops, no multi-edges)."""

    __slots__ = ("_vertices", "_vset", "_edges", "_adj", "_hash")

    def __init__(self, vertices: Iterable[Vertex] = (), edges: Iterable[Iterable[Vertex]] = ()):
        vs = list(vertices)
        vset = frozenset(vs)
        if len(vset) != len(vs):
            raise InputError("duplicate vertex identifier")
        adj: dict = {v: set() for v in vs}
        eset = set()
        for e in edges:
            u, v = tuple(e)
            if u == v:
                raise InputError(f"loop at vertex {u!r}")
            if u not in vset or v not in vset:
                raise InputError(f"edge {u!r}-{v!r} has an undeclared endpoint")
            key = _edge(u, v)
            if key in eset:
                raise InputError(f"duplicate edge {u!r}-{v!r}")
            eset.add(key)
            adj[u].add(v)
            adj[v].add(u)
        self._vertices = sort_vertices(vs)
        self._vset = vset
        self._edges = frozenset(eset)
        self._adj = {v: frozenset(n) for v, n in adj.items()}
        self._hash = None

    # -- basic accessors -------------------------------------------------

    @property
    def vertices(self) -> tuple:
        return self._vertices

    @property
    def edges(self) -> frozenset:
        return self._edges

    def sorted_edges(self) -> list[tuple]:
        out = [sort_vertices(e) for e in self._edges]
        out.sort(key=lambda e: (vertex_key(e[0]), vertex_key(e[1])))
        return out

    def __len__(self) -> int:
        return len(self._vertices)

    def __contains__(self, v) -> bool:
        return v in self._vset

    def __iter__(self) -> Iterator:
        return iter(self._vertices)

    def adjacent(self, u, v) -> bool:
        return v in self._adj[u]

    def neighbors(self, v) -> frozenset:
        return self._adj[v]

    def degree(self, v) -> int:
        return len(self._adj[v])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._vset == other._vset and self._edges == other._edges

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._vset, self._edges))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(vertices={list(self._vertices)!r}, edges={[list(e) for e in self.sorted_edges()]!r})"

    def relabel(self, mapping: dict) -> "Graph":
        return Graph([mapping[v] for v in self._vertices], [(mapping[u], mapping[v]) for u, v in self.sorted_edges()])

    def check_subset(self, x: Iterable[Vertex]) -> frozenset:
        xs = frozenset(x)
        bad = [v for v in xs if v not in self._vset]
        if bad:
            raise InputError(f"unknown vertex {sort_vertices(bad)[0]!r}")
        return xs

    # -- serialisation ---------------------------------------------------

    def to_dict(self) -> dict:
        return {"vertices": list(self._vertices), "edges": [list(e) for e in self.sorted_edges()]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        lines += [f'  "{v}";' for v in self._vertices]
        lines += [f'  "{u}" -- "{v}";' for u, v in self.sorted_edges()]
        lines.append("}")
        return "\n".join(lines)

    @classmethod
    def from_dict(cls, data: dict) -> "Graph":
        if not isinstance(data, dict) or "vertices" not in data:
            raise InputError('graph document needs a "vertices" list')
        return cls(data["vertices"], data.get("edges", []))


# -- constructors ---------------------------------------------------------


def named_graph(kind: str, n: int) -> Graph:
    """Path, cycle, complete or edgeless graph on vertices ``0..n-1``."""
    if n < 1:
        raise InputError("n must be at least 1")
    vs = list(range(n))
    if kind == "path":
        return Graph(vs, [(i, i + 1) for i in range(n - 1)])
    if kind == "cycle":
        if n < 3:
            raise InputError("a cycle needs at least 3 vertices")
        return Graph(vs, [(i, (i + 1) % n) for i in range(n)])
    if kind == "complete":
        return Graph(vs, itertools.combinations(vs, 2))
    if kind == "edgeless":
        return Graph(vs)
    raise InputError(f"unknown graph kind {kind!r}")


def induced_subgraph(g: Graph, x: Iterable[Vertex]) -> Graph:
    xs = g.check_subset(x)
    return Graph(xs, [tuple(e) for e in g.edges if e <= xs])


def complement(g: Graph) -> Graph:
    return Graph(g.vertices, [(u, v) for u, v in itertools.combinations(g.vertices, 2) if not g.adjacent(u, v)])


def link(g: Graph, v) -> frozenset:
    if v not in g:
        raise InputError(f"unknown vertex {v!r}")
    return g.neighbors(v)


def star(g: Graph, v) -> frozenset:
    return link(g, v) | {v}


def is_clique(g: Graph, x: Iterable[Vertex]) -> bool:
    xs = sort_vertices(g.check_subset(x))
    return all(g.adjacent(u, v) for u, v in itertools.combinations(xs, 2))


def _cliques_within(g: Graph, candidates: tuple, n: int) -> Iterator[tuple]:
    """Cliques of size ``n`` drawn from ``candidates`` (already sorted)."""

    def extend(chosen: tuple, pool: tuple):
        if len(chosen) == n:
            yield chosen
            return
        for i, v in enumerate(pool):
            if len(chosen) + len(pool) - i < n:
                return
            yield from extend(chosen + (v,), tuple(w for w in pool[i + 1 :] if g.adjacent(v, w)))

    if n == 0:
        yield ()
        return
    yield from extend((), candidates)


def enumerate_cliques(g: Graph, n: int) -> list[frozenset]:
    if n < 1:
        raise InputError("clique size must be at least 1")
    return [frozenset(c) for c in _cliques_within(g, g.vertices, n)]


def clique_number(g: Graph) -> int:
    best = 0
    for n in range(1, len(g) + 1):
        if next(_cliques_within(g, g.vertices, n), None) is None:
            break
        best = n
    return best


def is_triangle_free(g: Graph) -> bool:
    return not enumerate_cliques(g, 3)


def has_n_thick_stars(g: Graph, n: int) -> tuple[bool, dict]:
    """Decide whether every vertex lies in two ``n``-cliques meeting only in itself.

    Returns ``(answer, witness)`` where the witness maps each vertex to a pair
    of cliques when the answer is true (and is empty otherwise).
    """
    if n < 1:
        raise InputError("n must be at least 1")
    witness = {}
    for v in g.vertices:
        at_v = [c for c in _cliques_within(g, sort_vertices(g.neighbors(v)), n - 1)]
        found = None
        for a, b in itertools.combinations(at_v, 2):
            ca, cb = frozenset(a) | {v}, frozenset(b) | {v}
            if ca != cb and ca & cb == {v}:
                found = (ca, cb)
                break
        if found is None:
            return False, {}
        witness[v] = found
    return True, witness


def has_n_thick_stars_via_links(g: Graph, n: int) -> bool:
    """Reformulation: each link contains two disjoint ``(n-1)``-cliques."""
    for v in g.vertices:
        cl = [frozenset(c) for c in _cliques_within(g, sort_vertices(g.neighbors(v)), n - 1)]
        if not any(not (a & b) for a, b in itertools.combinations(cl, 2)):
            return False
    return True


def find_induced_embeddings(small: Graph, big: Graph, limit: int | None = 1) -> list[dict]:
    """Injective maps ``small -> big`` that preserve adjacency and non-adjacency.

    ``limit=None`` returns every embedding.  Backtracking visits the vertices
    of ``small`` by decreasing degree and candidates in identifier order.
    """
    if limit is not None and limit < 1:
        raise InputError("limit must be at least 1")
    order = sorted(small.vertices, key=lambda v: (-small.degree(v), vertex_key(v)))
    out: list[dict] = []
    assign: dict = {}
    used: set = set()

    def consistent(v, w) -> bool:
        if big.degree(w) < small.degree(v):
            return False
        for u, x in assign.items():
            if small.adjacent(u, v) != big.adjacent(x, w):
                return False
        return True

    def search(k: int) -> bool:
        if k == len(order):
            out.append({v: assign[v] for v in small.vertices})
            return limit is not None and len(out) >= limit
        v = order[k]
        for w in big.vertices:
            if w in used or not consistent(v, w):
                continue
            assign[v] = w
            used.add(w)
            stop = search(k + 1)
            del assign[v]
            used.discard(w)
            if stop:
                return True
        return False

    if len(small) <= len(big):
        search(0)
    return out


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return len(g) == len(h) and len(g.edges) == len(h.edges) and bool(find_induced_embeddings(g, h, 1))


# -- JSON file format ----------------------------------------------------

_EDGES_KEY = re.compile(r'"edges"\s*:\s*\[')


def _line_col(text: str, pos: int) -> tuple[int, int]:
    line = text.count("\n", 0, pos) + 1
    col = pos - (text.rfind("\n", 0, pos) + 1) + 1
    return line, col


def _edge_offsets(text: str) -> list[int]:
    """Character offsets of the elements of the top-level ``edges`` array."""
    m = _EDGES_KEY.search(text)
    if not m:
        return []
    dec = json.JSONDecoder()
    pos = m.end()
    out = []
    while True:
        while pos < len(text) and text[pos] in " \t\r\n,":
            pos += 1
        if pos >= len(text) or text[pos] == "]":
            return out
        out.append(pos)
        try:
            _, pos = dec.raw_decode(text, pos)
        except json.JSONDecodeError:
            return out


def parse_graph_text(text: str, source: str = "<graph>") -> Graph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFileError(f"{source}:{exc.lineno}:{exc.colno}: malformed JSON: {exc.msg}") from None
    return graph_from_document(data, text, source)


def graph_from_document(data, text: str | None = None, source: str = "<graph>") -> Graph:
    """Validate a decoded graph document, reporting edge positions on failure."""
    if not isinstance(data, dict) or not isinstance(data.get("vertices"), list):
        raise GraphFileError(f'{source}: graph document needs a "vertices" list')
    vertices = data["vertices"]
    if len(set(vertices)) != len(vertices):
        raise GraphFileError(f"{source}: duplicate vertex identifier")
    vset = set(vertices)
    offsets = _edge_offsets(text) if text is not None else []
    seen = set()
    for k, e in enumerate(data.get("edges", [])):
        where = f"{source}: edges[{k}]"
        if k < len(offsets) and text is not None:
            line, col = _line_col(text, offsets[k])
            where = f"{source}:{line}:{col}: edges[{k}]"
        if not isinstance(e, list) or len(e) != 2:
            raise GraphFileError(f"{where}: an edge is a pair of vertex identifiers")
        u, v = e
        if u == v:
            raise GraphFileError(f"{where}: loop at vertex {u!r}")
        if u not in vset or v not in vset:
            missing = u if u not in vset else v
            raise GraphFileError(f"{where}: undeclared endpoint {missing!r}")
        key = _edge(u, v)
        if key in seen:
            raise GraphFileError(f"{where}: duplicate edge {u!r}-{v!r}")
        seen.add(key)
    return Graph(vertices, data.get("edges", []))


def read_graph(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph_text(fh.read(), str(path))


def write_graph(g: Graph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(g.to_json() + "\n")
