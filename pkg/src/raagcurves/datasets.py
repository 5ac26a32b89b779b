"""Bundled example data: the graphs G0 and G1, their curve realisations and lifts.

Files live in the package ``data`` directory; a user directory may shadow
any of them.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from importlib import resources

from .curves import CurveSystem, LiftSpec, read_curve_system, read_lift_spec
from .errors import DataError, InputError
from .graphs import Graph, find_induced_embeddings, induced_subgraph, read_graph
from .maps import DiagonalHom, VertexMap
from .words import Flavor

C4_ORDER = ("a", "b", "c", "d")
SPLIT_VERTEX = "q"
SPLIT_INTO = ("e", "f")

REALISATIONS = {"N{1,6}": "n1_6", "N{3,3}": "n3_3", "N{5,0}": "n5_0"}


def data_path(name: str, data_dir=None) -> str:
    """``data_dir/name`` when it exists, else the packaged copy."""
    if data_dir is not None:
        p = os.path.join(data_dir, name)
        if os.path.exists(p):
            return p
    p = resources.files("raagcurves").joinpath("data", name)
    if not p.is_file():
        raise InputError(f"data file {name!r} not found")
    return str(p)


def load_graph(name: str, data_dir=None) -> Graph:
    return read_graph(data_path(name, data_dir))


def load_curves(surface: str, data_dir=None) -> CurveSystem:
    return read_curve_system(data_path(f"curves_{_tag(surface)}.json", data_dir))


def load_lift(surface: str, data_dir=None) -> LiftSpec:
    return read_lift_spec(data_path(f"lift_{_tag(surface)}.json", data_dir))


def load_k5(data_dir=None) -> CurveSystem:
    return read_curve_system(data_path("k5_n5_0.json", data_dir))


def load_p4_lift(data_dir=None) -> LiftSpec:
    return read_lift_spec(data_path("p4_lift_n1_4.json", data_dir))


def _tag(surface: str) -> str:
    key = str(surface).replace(" ", "")
    if key not in REALISATIONS:
        raise InputError(f"no bundled realisation for {surface}; available: {', '.join(REALISATIONS)}")
    return REALISATIONS[key]


@dataclass
class GammaBundle:
    gamma0: Graph
    gamma1: Graph
    hom: DiagonalHom  # substitution A(G0) -> A(G1), q -> e f
    checks: dict


def _spans_cycle(g: Graph, order) -> bool:
    n = len(order)
    cyc = {frozenset((order[k], order[(k + 1) % n])) for k in range(n)}
    return set(induced_subgraph(g, order).edges) == cyc


def validate_gamma_pair(g0: Graph, g1: Graph) -> dict:
    """Every textual constraint on the transcription; raises DataError listing failures."""
    failures = []
    checks = {}
    for name, g in (("G0", g0), ("G1", g1)):
        ok = all(v in g for v in C4_ORDER) and _spans_cycle(g, C4_ORDER)
        checks[f"{name} spans C4 on a,b,c,d"] = ok
        if not ok:
            failures.append(f"{name}: a,b,c,d do not induce the 4-cycle a-b-c-d")
    q, (e, f) = SPLIT_VERTEX, SPLIT_INTO
    if q not in g0 or e not in g1 or f not in g1:
        raise DataError("transcription lacks the split vertex q or its images e, f")
    rest = [v for v in g0.vertices if v != q]
    if sorted(map(str, g1.vertices)) != sorted(map(str, rest + [e, f])):
        failures.append("G1 should carry the vertices of G0 with q replaced by e and f")
    for u, v in ((q, "g"), (q, "h"), ("g", "h")):
        ok = u in g0 and v in g0 and not g0.adjacent(u, v)
        checks[f"G0 non-edge {u}-{v}"] = ok
        if not ok:
            failures.append(f"G0: {u} and {v} must intersect (non-adjacent)")
    well_defined = True
    for u, v in g0.sorted_edges():
        if q in (u, v):
            w = v if u == q else u
            for x in (e, f):
                if w not in g1 or not g1.adjacent(x, w):
                    well_defined = False
                    failures.append(f"phi not well defined: {x} must commute with {w}")
        elif u not in g1 or v not in g1 or not g1.adjacent(u, v):
            well_defined = False
            failures.append(f"phi not well defined: edge {u}-{v} of G0 missing in G1")
    checks["phi well defined"] = well_defined
    if failures:
        raise DataError("bad transcription: " + "; ".join(failures))
    return checks


def gamma_map(g0: Graph, g1: Graph) -> VertexMap:
    """Vertex map G1 -> G0 collapsing e, f onto q; its diagonal substitution is phi."""
    assignment = {v: (SPLIT_VERTEX if v in SPLIT_INTO else v) for v in g1.vertices}
    return VertexMap(g1, g0, assignment)


def gamma0_gamma1_bundle(data_dir=None) -> GammaBundle:
    g0 = load_graph("gamma0.json", data_dir)
    g1 = load_graph("gamma1.json", data_dir)
    checks = validate_gamma_pair(g0, g1)
    # phi is a well-defined homomorphism but is not certified by the diagonal criteria
    hom = DiagonalHom(gamma_map(g0, g1), Flavor.ARTIN, {"well_defined": checks["phi well defined"]})
    return GammaBundle(g0, g1, hom, checks)


def realisation_matches(cs: CurveSystem, target: Graph) -> dict | None:
    """An isomorphism ``target -> two-sided curve graph`` of ``cs``, if one exists."""
    cg = cs.curve_graph("two_sided_only")
    if len(cg) != len(target) or len(cg.edges) != len(target.edges):
        return None
    emb = find_induced_embeddings(target, cg, 1)
    return emb[0] if emb else None
