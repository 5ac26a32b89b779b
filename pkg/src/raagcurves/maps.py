"""Vertex maps between graphs and the diagonal homomorphisms they induce.

For a map ``f: L -> G`` the diagonal substitution sends a vertex ``u`` of G to
the product of its fiber ``f^-1(u)`` (in identifier order) inside A(L) or
C(L).  When ``f`` is surjective, full and satisfies condition (*) this
extends to an injective homomorphism A(G) -> A(L); if in addition every
fiber is a clique, likewise C(G) -> C(L).
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field

from .checks import PASS, Check
from .errors import (
    ConditionStarError,
    FiberNotCliqueError,
    InputError,
    NotFullError,
    NotSurjectiveError,
)
from .graphs import Graph, complement, graph_from_document, sort_vertices
from .words import Flavor, Presentation, Word, as_flavor, is_reduced, reduce


class VertexMap:
    """A total assignment ``source vertices -> target vertices``.

    Edge preservation is not required; the predicates below classify maps.
    """

    def __init__(self, source: Graph, target: Graph, assignment: dict):
        missing = [v for v in source.vertices if v not in assignment]
        if missing:
            raise InputError(f"assignment is not total: no image for {missing[0]!r}")
        extra = [v for v in assignment if v not in source]
        if extra:
            raise InputError(f"assignment names unknown source vertex {extra[0]!r}")
        bad = [v for v in source.vertices if assignment[v] not in target]
        if bad:
            raise InputError(f"image of {bad[0]!r} is not a target vertex")
        self.source = source
        self.target = target
        self.assignment = {v: assignment[v] for v in source.vertices}
        fibers: dict = {u: [] for u in target.vertices}
        for v in source.vertices:
            fibers[self.assignment[v]].append(v)
        self._fibers = {u: tuple(vs) for u, vs in fibers.items()}

    def __call__(self, v):
        return self.assignment[v]

    def fiber(self, u) -> tuple:
        return self._fibers[u]

    @property
    def fibers(self) -> dict:
        return dict(self._fibers)

    def uncovered(self) -> list:
        return [u for u in self.target.vertices if not self._fibers[u]]

    def is_surjective(self) -> bool:
        return not self.uncovered()

    def max_fiber_size(self) -> int:
        return max((len(f) for f in self._fibers.values()), default=0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, VertexMap):
            return NotImplemented
        return self.source == other.source and self.target == other.target and self.assignment == other.assignment

    def __repr__(self) -> str:
        return f"VertexMap({self.assignment!r})"

    @classmethod
    def identity(cls, g: Graph) -> "VertexMap":
        return cls(g, g, {v: v for v in g.vertices})

    def to_dict(self) -> dict:
        return {
            "source": self.source.to_dict(),
            "target": self.target.to_dict(),
            "assignment": {str(v): self.assignment[v] for v in self.source.vertices},
        }

    @classmethod
    def from_dict(cls, data: dict, source: str = "<map>") -> "VertexMap":
        for key in ("source", "target", "assignment"):
            if key not in data:
                raise InputError(f'{source}: map document needs a "{key}" entry')
        src = graph_from_document(data["source"], source=f"{source}: source")
        tgt = graph_from_document(data["target"], source=f"{source}: target")
        by_name = {str(v): v for v in src.vertices}
        tnames = {str(u): u for u in tgt.vertices}
        assignment = {}
        for k, u in data["assignment"].items():
            if k not in by_name:
                raise InputError(f"{source}: assignment names unknown source vertex {k!r}")
            if str(u) not in tnames:
                raise InputError(f"{source}: image {u!r} of {k!r} is not a target vertex")
            assignment[by_name[k]] = tnames[str(u)]
        return cls(src, tgt, assignment)


def read_map(path) -> VertexMap:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}:{exc.lineno}:{exc.colno}: malformed JSON: {exc.msg}") from None
    return VertexMap.from_dict(data, str(path))


# -- predicates --------------------------------------------------------------


def is_full(f: VertexMap) -> Check:
    """Every pair of fibers over an edge of the target spans a complete bipartite graph."""
    for u1, u2 in f.target.sorted_edges():
        for v1 in f.fiber(u1):
            for v2 in f.fiber(u2):
                if not f.source.adjacent(v1, v2):
                    return Check(False, {"edge": (u1, u2), "pair": (v1, v2)})
    return PASS


def satisfies_condition_star(f: VertexMap) -> Check:
    """For non-adjacent ``u != u'`` each ``v`` over ``u`` misses some vertex over ``u'``."""
    missing = f.uncovered()
    if missing:
        raise NotSurjectiveError(f"map is not surjective: {missing[0]!r} has an empty fiber", missing[0])
    tgt, src = f.target, f.source
    for u, u2 in itertools.permutations(tgt.vertices, 2):
        if tgt.adjacent(u, u2):
            continue
        for v in f.fiber(u):
            if all(src.adjacent(v, w) for w in f.fiber(u2)):
                return Check(False, {"pair": (u, u2), "vertex": v})
    return PASS


def is_graph_morphism(f: VertexMap) -> Check:
    for v1, v2 in f.source.sorted_edges():
        if not f.target.adjacent(f(v1), f(v2)):
            return Check(False, {"edge": (v1, v2), "image": (f(v1), f(v2))})
    return PASS


def is_locally_surjective(f: VertexMap) -> Check:
    for v in f.source.vertices:
        hit = {f(w) for w in f.source.neighbors(v)}
        for u in sort_vertices(f.target.neighbors(f(v))):
            if u not in hit:
                return Check(False, {"vertex": v, "edge": (f(v), u)})
    return PASS


def fibers_form_cliques(f: VertexMap) -> Check:
    for u in f.target.vertices:
        for v1, v2 in itertools.combinations(f.fiber(u), 2):
            if not f.source.adjacent(v1, v2):
                return Check(False, {"fiber": u, "pair": (v1, v2)})
    return PASS


def complementary_map(f: VertexMap) -> VertexMap:
    return VertexMap(complement(f.source), complement(f.target), f.assignment)


PREDICATES = {
    "full": is_full,
    "condition_star": satisfies_condition_star,
    "graph_morphism": is_graph_morphism,
    "locally_surjective": is_locally_surjective,
    "fibers_cliques": fibers_form_cliques,
}


def check_all(f: VertexMap) -> dict:
    """Run all five predicates; condition (*) on a non-surjective map reports the uncovered vertex."""
    out = {}
    for name, pred in PREDICATES.items():
        try:
            out[name] = pred(f)
        except NotSurjectiveError as exc:
            out[name] = Check(False, {"uncovered": exc.witness})
    return out


# -- diagonal homomorphisms ---------------------------------------------------


class DiagonalHom:
    """Letterwise substitution ``u -> product of f^-1(u)`` from A(G)/C(G) into A(L)/C(L).

    ``certificates`` records which hypotheses were verified at construction;
    an uncertified instance is merely a well-defined substitution.
    """

    def __init__(self, f: VertexMap, flavor=Flavor.ARTIN, certificates: dict | None = None):
        flavor = as_flavor(flavor)
        self.map = f
        self.flavor = flavor
        self.source = Presentation(f.target, flavor)
        self.target = Presentation(f.source, flavor)
        self.images = {u: tuple(sort_vertices(f.fiber(u))) for u in f.target.vertices}
        self.certificates = dict(certificates or {})
        self._pos = {u: tuple(self.target.code(v, 1) for v in vs) for u, vs in self.images.items()}
        self._neg = {u: tuple(self.target.code(v, -1) for v in reversed(vs)) for u, vs in self.images.items()}

    @property
    def certified(self) -> bool:
        return bool(self.certificates) and all(self.certificates.values())

    @property
    def lipschitz_constant(self) -> int:
        return self.map.max_fiber_size()

    def image_word(self, u) -> Word:
        return Word(self.target, tuple(self._pos[u]))

    def __call__(self, w: Word) -> Word:
        return apply_hom(self, w)

    def describe(self) -> dict:
        return {str(u): " ".join(str(v) for v in vs) or "1" for u, vs in self.images.items()}


def diagonal_hom(f: VertexMap, flavor=Flavor.ARTIN) -> DiagonalHom:
    """Certified diagonal homomorphism; each failed hypothesis raises with its witness."""
    flavor = as_flavor(flavor)
    missing = f.uncovered()
    if missing:
        raise NotSurjectiveError(f"map is not surjective: {missing[0]!r} has an empty fiber", missing[0])
    full = is_full(f)
    if not full:
        raise NotFullError(f"map is not full: {full.witness}", full.witness)
    star_ = satisfies_condition_star(f)
    if not star_:
        raise ConditionStarError(f"map violates condition (*): {star_.witness}", star_.witness)
    certs = {"surjective": True, "full": True, "condition_star": True}
    if flavor is Flavor.COXETER:
        cl = fibers_form_cliques(f)
        if not cl:
            raise FiberNotCliqueError(f"fiber is not a clique: {cl.witness}", cl.witness)
        certs["fibers_cliques"] = True
    return DiagonalHom(f, flavor, certs)


def apply_hom(h: DiagonalHom, w: Word) -> Word:
    if w.presentation != h.source:
        raise InputError("word does not live over the homomorphism's source")
    out: list = []
    verts = h.source.vertices
    coxeter = h.source.coxeter
    for c in w.codes:
        u = verts[c >> 1]
        out.extend(h._neg[u] if (c & 1 and not coxeter) else h._pos[u])
    return Word(h.target, tuple(out))


# -- sampling-based verification ----------------------------------------------


@dataclass
class VerificationReport:
    samples: int
    max_len: int
    seed: int
    lipschitz_constant: int
    non_reduced_images: int = 0
    trivial_images: int = 0
    length_identity_failures: int = 0
    lipschitz_failures: int = 0
    min_ratio: float | None = None
    max_ratio: float | None = None
    total_source_length: int = 0
    total_image_length: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (
            self.non_reduced_images or self.trivial_images or self.length_identity_failures or self.lipschitz_failures
        )

    def to_dict(self) -> dict:
        return {
            "samples": self.samples,
            "max_len": self.max_len,
            "seed": self.seed,
            "lipschitz_constant": self.lipschitz_constant,
            "non_reduced_images": self.non_reduced_images,
            "trivial_images": self.trivial_images,
            "length_identity_failures": self.length_identity_failures,
            "lipschitz_failures": self.lipschitz_failures,
            "min_ratio": self.min_ratio,
            "max_ratio": self.max_ratio,
            "ok": self.ok,
            "failures": self.failures,
        }


MAX_RECORDED_FAILURES = 10


def verify_reduced_preservation(h: DiagonalHom, samples: int, max_len: int, seed: int = 0) -> VerificationReport:
    """Push random reduced words through ``h`` and audit reducedness and lengths.

    For every sampled reduced ``w`` the raw image must be reduced, non-trivial
    when ``w`` is, of reduced length ``sum(#f^-1(letter))`` and within
    ``|w| <= |h(w)| <= K |w|`` where ``K`` is the largest fiber.
    """
    from .sampling import random_reduced_word

    rng = random.Random(seed)
    K = h.lipschitz_constant
    rep = VerificationReport(samples=samples, max_len=max_len, seed=seed, lipschitz_constant=K)
    sizes = {u: len(vs) for u, vs in h.images.items()}
    verts = h.source.vertices
    for _ in range(samples):
        w = random_reduced_word(h.source, rng.randint(1, max_len), rng)
        img = apply_hom(h, w)
        red_len = len(reduce(img))
        expected = sum(sizes[verts[c >> 1]] for c in w.codes)
        problems = []
        if not is_reduced(img):
            rep.non_reduced_images += 1
            problems.append("image not reduced")
        if len(w) and not red_len:
            rep.trivial_images += 1
            problems.append("image trivial")
        if red_len != expected:
            rep.length_identity_failures += 1
            problems.append(f"reduced image length {red_len} != {expected}")
        if not (len(w) <= red_len <= K * len(w)):
            rep.lipschitz_failures += 1
            problems.append("Lipschitz bound violated")
        if len(w):
            ratio = red_len / len(w)
            rep.min_ratio = ratio if rep.min_ratio is None else min(rep.min_ratio, ratio)
            rep.max_ratio = ratio if rep.max_ratio is None else max(rep.max_ratio, ratio)
        rep.total_source_length += len(w)
        rep.total_image_length += red_len
        if problems and len(rep.failures) < MAX_RECORDED_FAILURES:
            rep.failures.append({"word": str(w), "image": str(img), "problems": problems})
    return rep
