"""Seeded random objects: reduced words, graphs and vertex maps.

All generators take an explicit :class:`random.Random`; nothing reads
wall-clock entropy.
"""

from __future__ import annotations

import itertools
import random

from .graphs import Graph
from .maps import VertexMap, is_full, satisfies_condition_star
from .words import Presentation, Word


def random_reduced_word(p: Presentation, length: int, rng: random.Random) -> Word:
    """Reduced word of the given length, each letter uniform among admissible continuations.

    Stops early if no letter can extend the word (only possible for tiny
    Coxeter presentations).
    """
    step = 2 if p.coxeter else 1
    alphabet = range(0, 2 * len(p.vertices), step)
    k = p.kernels
    codes: list = []
    while len(codes) < length:
        options = [c for c in alphabet if k.can_append(codes, c, p.adj, p.coxeter)]
        if not options:
            break
        codes.append(rng.choice(options))
    return Word(p, tuple(codes))


def random_graph(rng: random.Random, n: int, p: float = 0.5, prefix: str = "v") -> Graph:
    vs = [f"{prefix}{i}" for i in range(n)]
    return Graph(vs, [e for e in itertools.combinations(vs, 2) if rng.random() < p])


def random_vertex_map(rng: random.Random, max_vertices: int = 6) -> VertexMap:
    """Arbitrary total map between two random graphs with at most ``max_vertices`` vertices each."""
    src = random_graph(rng, rng.randint(1, max_vertices), rng.random(), "x")
    tgt = random_graph(rng, rng.randint(1, max_vertices), rng.random(), "u")
    return VertexMap(src, tgt, {v: rng.choice(tgt.vertices) for v in src.vertices})


def random_diagonal_map(rng: random.Random, max_vertices: int = 6, attempts: int = 10_000) -> VertexMap:
    """Surjective full map with condition (*) and a source of at most ``max_vertices`` vertices.

    Fibers over an edge are joined completely (fullness is forced); other
    source edges are drawn at random and the candidate is rejected until
    condition (*) holds.
    """
    for _ in range(attempts):
        n_src = rng.randint(1, max_vertices)
        n_tgt = rng.randint(1, n_src)
        tgt = random_graph(rng, n_tgt, rng.random(), "u")
        owner = list(tgt.vertices) + [rng.choice(tgt.vertices) for _ in range(n_src - n_tgt)]
        rng.shuffle(owner)
        src_vs = [f"x{i}" for i in range(n_src)]
        assignment = dict(zip(src_vs, owner))
        p = rng.random()
        edges = []
        for a, b in itertools.combinations(src_vs, 2):
            ua, ub = assignment[a], assignment[b]
            if ua != ub and tgt.adjacent(ua, ub):
                edges.append((a, b))
            elif rng.random() < p:
                edges.append((a, b))
        f = VertexMap(Graph(src_vs, edges), tgt, assignment)
        if is_full(f) and satisfies_condition_star(f):
            return f
    raise RuntimeError("no admissible map found; increase attempts")
