"""Curve systems as combinatorial data, their curve graphs and double-cover lifts.

Only sidedness and pairwise geometric intersection numbers are modelled.
Intersection numbers are taken to be realised in minimal position (no
bigons); that is a promise of whoever writes the data, not something
computed here.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

from .errors import ConsistencyError, InputError, NoEmbeddingError, ObstructionError, ValidationError
from .graphs import Graph, clique_number, find_induced_embeddings, sort_vertices
from .maps import DiagonalHom, VertexMap, diagonal_hom
from .surfaces import N, SurfaceType, as_surface, orientation_double_cover, xi, xi_two
from .words import Flavor

ONE, TWO = "one", "two"
_SIDED_ALIASES = {"one": ONE, "one_sided": ONE, "two": TWO, "two_sided": TWO}


def _sided(value) -> str:
    try:
        return _SIDED_ALIASES[str(value)]
    except KeyError:
        raise InputError(f"sidedness must be 'one' or 'two', got {value!r}") from None


def _pair(a, b) -> tuple:
    return (a, b) if a <= b else (b, a)


class CurveSystem:
    """Named curves with sidedness and a symmetric intersection matrix."""

    def __init__(self, ambient, curves, intersections=None):
        self.ambient: SurfaceType = as_surface(ambient)
        names = []
        sided = {}
        for item in curves:
            name, s = (item, TWO) if isinstance(item, str) else item
            name = str(name)
            if name in sided:
                raise InputError(f"duplicate curve name {name!r}")
            names.append(name)
            sided[name] = _sided(s)
        self.names = tuple(names)
        self.sidedness = sided
        self._i: dict = {}
        for entry in (intersections.items() if isinstance(intersections, dict) else intersections or ()):
            (a, b), n = (entry if isinstance(intersections, dict) else ((entry[0], entry[1]), entry[2]))
            a, b = str(a), str(b)
            for x in (a, b):
                if x not in sided:
                    raise InputError(f"intersection entry names unknown curve {x!r}")
            if not isinstance(n, int) or n < 0:
                raise InputError(f"intersection number i({a},{b}) must be a non-negative integer")
            if a == b:
                if n:
                    raise InputError(f"self-intersection i({a},{a}) must be 0")
                continue
            key = _pair(a, b)
            if key in self._i and self._i[key] != n:
                raise InputError(f"asymmetric intersection data for {a},{b}")
            self._i[key] = n
        self._validate()

    def _validate(self) -> None:
        failures = []
        if self.ambient.orientable:
            failures += [f"curve {c!r} is one-sided on an orientable surface" for c in self.names if self.sidedness[c] == ONE]
        if not failures:
            two = self.curve_graph("two_sided_only")
            bound = xi(self.ambient) if self.ambient.orientable else xi_two(self.ambient.as_marked())
            w = clique_number(two) if len(two) else 0
            if w > bound:
                failures.append(f"{w} pairwise disjoint two-sided curves exceed the two-sided complexity {bound}")
            every = self.curve_graph("all")
            w_all = clique_number(every) if len(every) else 0
            if w_all > max(xi(self.ambient), 1):
                failures.append(f"{w_all} pairwise disjoint curves exceed the complexity {xi(self.ambient)}")
        if failures:
            raise ValidationError("invalid curve system", failures)

    def i(self, a: str, b: str) -> int:
        if a == b:
            return 0
        return self._i.get(_pair(a, b), 0)

    def two_sided(self) -> tuple:
        return tuple(c for c in self.names if self.sidedness[c] == TWO)

    def curve_graph(self, which: str = "two_sided_only") -> Graph:
        if which in ("all", "--all"):
            vs = self.names
        elif which in ("two_sided_only", "two"):
            vs = self.two_sided()
        else:
            raise InputError(f"unknown curve selection {which!r}")
        return Graph(vs, [(a, b) for a, b in itertools.combinations(vs, 2) if self.i(a, b) == 0])

    def restrict(self, names) -> "CurveSystem":
        keep = [c for c in self.names if c in set(names)]
        return CurveSystem(
            self.ambient,
            [(c, self.sidedness[c]) for c in keep],
            [(a, b, self.i(a, b)) for a, b in itertools.combinations(keep, 2) if self.i(a, b)],
        )

    def to_dict(self) -> dict:
        return {
            "surface": str(self.ambient),
            "curves": [{"name": c, "sided": self.sidedness[c]} for c in self.names],
            "i": [[a, b, n] for (a, b), n in sorted(self._i.items()) if n],
        }

    @classmethod
    def from_dict(cls, data: dict, source: str = "<curves>") -> "CurveSystem":
        try:
            curves = [(c["name"], c.get("sided", TWO)) for c in data["curves"]]
            return cls(data["surface"], curves, [tuple(e) for e in data.get("i", [])])
        except (KeyError, TypeError) as exc:
            raise InputError(f"{source}: malformed curve-system document ({exc})") from None

    def __repr__(self) -> str:
        return f"CurveSystem({self.ambient}, {list(self.names)!r})"


# -- double-cover lifts --------------------------------------------------------


@dataclass
class LiftSpec:
    """Upstairs curves, their projections, intersections and the deck pairing."""

    over: dict  # upstairs name -> downstairs name
    intersections: dict  # sorted pair -> count
    pairs: list  # deck involution on two-component fibers
    surface: SurfaceType | None = None
    order: tuple = field(default=())

    def i(self, a: str, b: str) -> int:
        return 0 if a == b else self.intersections.get(_pair(a, b), 0)

    def lifts(self, base: str) -> tuple:
        return tuple(x for x in self.order if self.over[x] == base)

    def partner(self, x: str) -> str:
        for a, b in self.pairs:
            if x == a:
                return b
            if x == b:
                return a
        return x

    @classmethod
    def from_dict(cls, data: dict, source: str = "<lift>") -> "LiftSpec":
        try:
            order = tuple(str(c["name"]) for c in data["curves"])
            over = {str(c["name"]): str(c["over"]) for c in data["curves"]}
            inter = {}
            for a, b, n in data.get("i", []):
                if a != b:
                    inter[_pair(str(a), str(b))] = n
            pairs = [(str(a), str(b)) for a, b in data.get("pairs", [])]
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"{source}: malformed lift document ({exc})") from None
        if len(set(order)) != len(order):
            raise InputError(f"{source}: duplicate upstairs curve name")
        surface = as_surface(data["surface"]) if "surface" in data else None
        return cls(over, inter, pairs, surface, order)

    def to_dict(self) -> dict:
        out = {}
        if self.surface is not None:
            out["surface"] = str(self.surface)
        out["curves"] = [{"name": x, "sided": TWO, "over": self.over[x]} for x in self.order]
        out["i"] = [[a, b, n] for (a, b), n in sorted(self.intersections.items()) if n]
        out["pairs"] = [list(p) for p in self.pairs]
        return out


def diagonal_lift_spec(cs: CurveSystem, suffixes=("1", "2")) -> LiftSpec:
    """Lift in which each two-sided curve has two disjoint lifts meeting only their namesakes.

    ``i(x1, y1) = i(x2, y2) = i(x, y)`` and cross terms vanish; one-sided
    curves get a single lift meeting each lift of ``y`` ``i(x, y)`` times.
    """
    over: dict = {}
    order = []
    pairs = []
    for c in cs.names:
        if cs.sidedness[c] == TWO:
            ups = [c + s for s in suffixes]
            pairs.append(tuple(ups))
        else:
            ups = [c + "~"]
        for u in ups:
            over[u] = c
            order.append(u)
    inter = {}
    for x, y in itertools.combinations(order, 2):
        n = cs.i(over[x], over[y])
        if not n or over[x] == over[y]:
            continue
        tx, ty = cs.sidedness[over[x]] == TWO, cs.sidedness[over[y]] == TWO
        if tx and ty:
            if x[-1] == y[-1]:
                inter[_pair(x, y)] = n
        elif tx or ty:
            inter[_pair(x, y)] = n
        else:
            inter[_pair(x, y)] = 2 * n
    cover = orientation_double_cover(cs.ambient) if not cs.ambient.orientable else None
    return LiftSpec(over, inter, pairs, cover, tuple(order))


def validate_lift(cs: CurveSystem, spec: LiftSpec) -> list:
    """Every violated lift condition, sorted by curve-pair name."""
    fail: list = []
    if cs.ambient.orientable:
        return ["the base surface is orientable; there is no orientation double cover"]
    cover = orientation_double_cover(cs.ambient)
    if spec.surface is not None and spec.surface != cover:
        fail.append(f"lift surface {spec.surface} is not the orientation double cover {cover}")
    for x, base in spec.over.items():
        if base not in cs.sidedness:
            fail.append(f"upstairs curve {x!r} lies over unknown curve {base!r}")
    for c in cs.names:
        n = len(spec.lifts(c))
        want = 2 if cs.sidedness[c] == TWO else 1
        if n != want:
            fail.append(f"curve {c!r} is {cs.sidedness[c]}-sided but has {n} lift(s); expected {want}")
    # deck pairing
    seen: dict = {}
    for a, b in spec.pairs:
        for x in (a, b):
            if x not in spec.over:
                fail.append(f"pairing names unknown upstairs curve {x!r}")
            elif x in seen:
                fail.append(f"upstairs curve {x!r} appears twice in the pairing")
            seen[x] = True
        if a == b:
            fail.append(f"pairing fixes {a!r}")
        elif a in spec.over and b in spec.over and spec.over[a] != spec.over[b]:
            fail.append(f"pairing {a!r}<->{b!r} joins lifts of different curves")
    for c in cs.names:
        ups = spec.lifts(c)
        if len(ups) == 2 and not all(u in seen for u in ups):
            fail.append(f"lifts of {c!r} are not paired by the deck involution")
    for (a, b), n in spec.intersections.items():
        for x in (a, b):
            if x not in spec.over:
                fail.append(f"intersection entry names unknown upstairs curve {x!r}")
        if not isinstance(n, int) or n < 0:
            fail.append(f"i({a},{b}) must be a non-negative integer")
    if fail:
        return sorted(set(fail))
    for a, b in sorted(spec.intersections):
        pa, pb = spec.partner(a), spec.partner(b)
        if spec.i(pa, pb) != spec.i(a, b):
            fail.append(f"({a},{b}): deck involution does not preserve i ({spec.i(a, b)} vs {spec.i(pa, pb)})")
    for a, b in itertools.combinations_with_replacement(cs.names, 2):
        la, lb = spec.lifts(a), spec.lifts(b)
        if a == b:
            ups = [(x, y) for x, y in itertools.combinations(la, 2)]
        else:
            ups = [(x, y) for x in la for y in lb]
        total = sum(spec.i(x, y) for x, y in ups)
        down = cs.i(a, b)
        if down == 0 and total:
            fail.append(f"({a},{b}): disjoint downstairs but lifts intersect")
        elif total != 2 * down:
            fail.append(f"({a},{b}): upstairs intersections sum to {total}, expected 2*{down}")
        if a != b and down:
            for x in la:
                if not any(spec.i(x, y) for y in lb):
                    fail.append(f"({a},{b}): lift {x!r} of {a!r} meets no lift of {b!r} (condition (*))")
            for y in lb:
                if not any(spec.i(x, y) for x in la):
                    fail.append(f"({a},{b}): lift {y!r} of {b!r} meets no lift of {a!r} (condition (*))")
    return sorted(set(fail))


def build_lift(cs: CurveSystem, spec: LiftSpec, which: str = "two_sided_only") -> tuple:
    """Lifted system on the double cover and the projection of curve graphs.

    The projection is certified full and to satisfy condition (*).
    """
    from .maps import is_full, satisfies_condition_star

    failures = validate_lift(cs, spec)
    if failures:
        raise ValidationError("lift specification rejected", failures)
    base = cs.curve_graph(which)
    ups = [x for x in spec.order if spec.over[x] in base]
    lifted = CurveSystem(
        orientation_double_cover(cs.ambient),
        [(x, TWO) for x in ups],
        [(a, b, spec.i(a, b)) for a, b in itertools.combinations(ups, 2) if spec.i(a, b)],
    )
    proj = VertexMap(lifted.curve_graph("all"), base, {x: spec.over[x] for x in ups})
    full, star_ = is_full(proj), satisfies_condition_star(proj)
    if not (full and star_):
        raise ConsistencyError(f"lift projection failed certification (full={full.witness}, star={star_.witness})")
    return lifted, proj


# -- twist recipes and the embedding pipeline ---------------------------------


@dataclass(frozen=True)
class TwistRecipe:
    """Symbolic multi-twists: vertex u acts as the product of ``t_c^{±n}`` over its lifts."""

    entries: tuple  # (vertex, ((curve, exponent, handedness), ...))
    pairs: tuple
    exponent: str = "n"
    free_factor: str | None = None

    def curves(self) -> set:
        return {c for _, items in self.entries for c, _, _ in items}

    def is_deck_equivariant(self) -> bool:
        partner = {}
        for a, b in self.pairs:
            partner[a], partner[b] = b, a
        cs = self.curves()
        hand = {c: h for _, items in self.entries for c, _, h in items}
        for c in cs:
            p = partner.get(c, c)
            if p not in cs:
                return False
            if p != c and hand[p] == hand[c]:
                return False
        return True

    def to_dict(self) -> dict:
        return {
            "exponent": self.exponent,
            "twists": {str(u): [{"curve": c, "power": e, "handedness": h} for c, e, h in items] for u, items in self.entries},
            "deck_pairs": [list(p) for p in self.pairs],
            "free_factor": self.free_factor,
        }

    def render(self) -> list:
        lines = []
        for u, items in self.entries:
            word = " ".join(f"t_{c}^{e if h == 'right' else '-' + e}" for c, e, h in items)
            lines.append(f"{u} -> {word}")
        if self.free_factor:
            lines.append(f"free factor: {self.free_factor}")
        return lines


def twist_recipe(hom: DiagonalHom, spec: LiftSpec, exponent: str = "n", pseudo_anosov: bool = False) -> TwistRecipe:
    """Recipe for ``u -> prod t_γ^n t_{Jγ}^{-n}``: deck partners twist with opposite handedness.

    Of each deck pair the first listed curve is right-handed.
    """
    first = {a for a, _ in spec.pairs}
    entries = []
    for u, fiber in hom.images.items():
        items = tuple((c, exponent, "right" if c in first or spec.partner(c) == c else "left") for c in fiber)
        entries.append((u, items))
    used = {c for _, items in entries for c, _, _ in items}
    pairs = tuple(p for p in spec.pairs if p[0] in used or p[1] in used)
    return TwistRecipe(tuple(entries), pairs, exponent, "pseudo-Anosov f (symbolic)" if pseudo_anosov else None)


def embedding_pipeline(cs: CurveSystem, target_graph: Graph, spec: LiftSpec, pseudo_anosov: bool = False):
    """Chain target ≅ curve graph -> lift -> diagonal hom -> symbolic twist recipe."""
    cg = cs.curve_graph("two_sided_only")
    emb = find_induced_embeddings(target_graph, cg, 1)
    if not emb:
        raise NoEmbeddingError("no induced embedding of the target graph into the two-sided curve graph")
    iota = emb[0]
    image = sort_vertices(iota.values())
    sub = cs.restrict(image)
    spec_sub = _restrict_spec(spec, set(image))
    lifted, proj = build_lift(sub, spec_sub)
    hom = diagonal_hom(proj, Flavor.ARTIN)
    recipe = twist_recipe(hom, spec_sub, pseudo_anosov=pseudo_anosov)
    report = {
        "surface": str(cs.ambient),
        "cover": str(lifted.ambient),
        "embedding": {str(k): iota[k] for k in target_graph.vertices},
        "curve_graph": {"vertices": len(cg), "edges": len(cg.edges), "induced_on": list(image)},
        "lift_graph": {"vertices": len(proj.source), "edges": len(proj.source.edges)},
        "certificates": dict(hom.certificates),
        "lipschitz_constant": hom.lipschitz_constant,
        "images": hom.describe(),
        "deck_equivariant": recipe.is_deck_equivariant(),
    }
    return report, hom, recipe


def _restrict_spec(spec: LiftSpec, bases: set) -> LiftSpec:
    keep = tuple(x for x in spec.order if spec.over[x] in bases)
    ks = set(keep)
    return LiftSpec(
        {x: spec.over[x] for x in keep},
        {k: v for k, v in spec.intersections.items() if k[0] in ks and k[1] in ks},
        [p for p in spec.pairs if p[0] in ks and p[1] in ks],
        spec.surface,
        keep,
    )


# -- constructed systems ---------------------------------------------------------


def p4_configuration(p: int) -> CurveSystem:
    """Four two-sided curves on N{1,p}, consecutive ones meeting twice, forming P4."""
    if p < 4:
        bound = xi_two(N(1, p))
        raise ObstructionError(
            f"no P4 on N{{1,{p}}}: two-sided complexity is {bound} <= 1, so no pair of disjoint "
            "two-sided curves (no Z^2) exists"
        )
    names = [f"alpha{k}" for k in range(1, 5)]
    return CurveSystem(N(1, p), [(n, TWO) for n in names], [(names[k], names[k + 1], 2) for k in range(3)])


def canonical_two_sided_family(s: SurfaceType) -> CurveSystem:
    """A maximal family of disjoint two-sided curves built from the crosscap model.

    Crosscaps are grouped in pairs (each pair a one-holed Klein bottle with
    one interior two-sided curve, plus its boundary); a leftover crosscap and
    the marked points are further holes, and the holes are separated by a
    pants decomposition of the punctured sphere carrying them.
    """
    if s.orientable:
        raise InputError("canonical two-sided family is built on nonorientable surfaces")
    g, m = s.genus, s.punctures
    k, odd = divmod(g, 2)
    holes = k + odd + m
    pants = max(holes - 3, 0)
    if holes >= 3:
        blocks = k
    elif holes == 2:
        blocks = 1 if (k == 2 and odd == 0 and m == 0) else 0
    else:
        blocks = 0
    names = [f"p{j}" for j in range(1, pants + 1)]
    names += [f"r{j}" for j in range(1, blocks + 1)]
    names += [f"k{j}" for j in range(1, k + 1)]
    return CurveSystem(s.as_marked(), [(c, TWO) for c in names])


# -- file IO ----------------------------------------------------------------------------


def _load_json(path):
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}:{exc.lineno}:{exc.colno}: malformed JSON: {exc.msg}") from None


def read_curve_system(path) -> CurveSystem:
    return CurveSystem.from_dict(_load_json(path), str(path))


def read_lift_spec(path) -> LiftSpec:
    return LiftSpec.from_dict(_load_json(path), str(path))

