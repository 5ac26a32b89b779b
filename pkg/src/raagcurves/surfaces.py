"""Surface types, complexity functions and the C4 decomposition enumerator.

A :class:`SurfaceType` keeps marked points and boundary circles apart: circles
enter the Euler characteristic, marked points do not.  Complexities are
always evaluated with circles counted as marked points.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field

from .errors import InputError


@dataclass(frozen=True, order=True)
class SurfaceType:
    orientable: bool
    genus: int
    marked_points: int = 0
    boundary_circles: int = 0

    def __post_init__(self):
        if self.genus < 0 or self.marked_points < 0 or self.boundary_circles < 0:
            raise InputError("genus, marked points and boundary circles must be non-negative")
        if not self.orientable and self.genus < 1:
            raise InputError("a nonorientable surface has genus at least 1")

    @property
    def punctures(self) -> int:
        """Marked points plus boundary circles (circles viewed as marked points)."""
        return self.marked_points + self.boundary_circles

    @property
    def closed(self) -> bool:
        return self.boundary_circles == 0

    def as_marked(self) -> "SurfaceType":
        return SurfaceType(self.orientable, self.genus, self.punctures, 0)

    def __str__(self) -> str:
        base = f"{'S' if self.orientable else 'N'}{{{self.genus},{self.marked_points}}}"
        return base + (f"+{self.boundary_circles}" if self.boundary_circles else "")


def N(g: int, m: int = 0, b: int = 0) -> SurfaceType:
    return SurfaceType(False, g, m, b)


def S(g: int, m: int = 0, b: int = 0) -> SurfaceType:
    return SurfaceType(True, g, m, b)


_NOTATION = re.compile(r"^\s*([NS])\{\s*(\d+)\s*,\s*(\d+)\s*\}(?:\s*\+\s*(\d+))?\s*$")


def parse_surface(text: str) -> SurfaceType:
    """Read ``N{g,m}`` or ``S{g,m}``, optionally followed by ``+b`` boundary circles."""
    m = _NOTATION.match(text)
    if not m:
        raise InputError(f"cannot parse surface {text!r}; expected N{{g,m}} or S{{g,m}} with optional +b")
    kind, g, marked, b = m.groups()
    return SurfaceType(kind == "S", int(g), int(marked), int(b or 0))


def as_surface(s) -> SurfaceType:
    return s if isinstance(s, SurfaceType) else parse_surface(str(s))


def euler_characteristic(s: SurfaceType) -> int:
    if s.orientable:
        return 2 - 2 * s.genus - s.boundary_circles
    return 2 - s.genus - s.boundary_circles


def xi(s: SurfaceType) -> int:
    g, m = s.genus, s.punctures
    return max((3 * g if s.orientable else 2 * g) + m - 3, 0)


_XI_TWO_OVERRIDES = {(1, 0): 0, (1, 1): 0, (2, 0): 1}


def xi_two(s: SurfaceType) -> int:
    """Size of a maximal family of disjoint, pairwise non-isotopic two-sided curves."""
    if s.orientable:
        raise InputError("two-sided complexity is defined for nonorientable surfaces only")
    g, m = s.genus, s.punctures
    if (g, m) in _XI_TWO_OVERRIDES:
        return _XI_TWO_OVERRIDES[(g, m)]
    value = 3 * (g - 1) // 2 + m - 2 if g % 2 else 3 * g // 2 + m - 3
    return max(value, 0)


def zeta(s: SurfaceType) -> int:
    return xi(s) if s.orientable else xi_two(s)


def orientation_double_cover(s: SurfaceType) -> SurfaceType:
    if s.orientable:
        raise InputError("the orientation double cover is taken of a nonorientable surface")
    if not s.closed:
        raise InputError("orientation double cover expects a closed surface (circles as marked points)")
    return S(s.genus - 1, 2 * s.marked_points)


# -- C4 decompositions --------------------------------------------------------
#
# Two disjoint pieces F1, F2 (neighbourhoods of the two diagonals of a
# 4-cycle of curves) and the complement F0 glued along circles.  Each piece is
# recorded with its circles as boundary; its complexity counts circles as
# marked points.

DEFAULT_BOUNDS = (2, 5)
MAX_PIECE_CIRCLES = 4


@dataclass(frozen=True, order=True)
class F0Component:
    """A complement component and how many of its circles meet F1 and F2."""

    surface: SurfaceType
    to_f1: int
    to_f2: int

    @property
    def circles(self) -> int:
        return self.to_f1 + self.to_f2

    @property
    def is_plain_annulus(self) -> bool:
        s = self.surface
        return s.orientable and s.genus == 0 and s.marked_points == 0 and s.boundary_circles == 2

    @property
    def classes(self) -> int:
        """Free isotopy classes of its gluing circles."""
        return 1 if self.is_plain_annulus else self.circles

    def swapped(self) -> "F0Component":
        return F0Component(self.surface, self.to_f2, self.to_f1)

    def sort_key(self):
        s = self.surface
        return (not s.orientable, s.genus, s.marked_points, -self.to_f2, -self.to_f1)

    def __str__(self) -> str:
        return f"{self.surface.as_marked()}[F1:{self.to_f1},F2:{self.to_f2}]"


@dataclass(frozen=True)
class DecompositionCase:
    """One normalized case: F0 shape(s), admissible F1/F2 lists and the α count."""

    f0_options: tuple  # alternatives; each a tuple of F0Component
    zeta1: int
    zeta2: int
    circles1: int
    circles2: int
    alpha: int
    f1_options: tuple
    f2_options: tuple
    realizable_pairs: tuple = ()
    chain_merge_changes_alpha: bool = False
    gluing: tuple = field(default=())

    @property
    def connected_f0(self) -> bool:
        return len(self.f0_options[0]) == 1

    def to_dict(self) -> dict:
        return {
            "F0": [[str(c) for c in opt] for opt in self.f0_options],
            "F1": [str(s.as_marked()) for s in self.f1_options],
            "F2": [str(s.as_marked()) for s in self.f2_options],
            "zeta": [self.zeta1, self.zeta2],
            "circles": [self.circles1, self.circles2],
            "alpha": self.alpha,
            "gluing": [list(g) for g in self.gluing],
            "realizable_pairs": [[str(a.as_marked()), str(b.as_marked()), str(n)] for a, b, n in self.realizable_pairs],
            "chain_merge_changes_alpha": self.chain_merge_changes_alpha,
        }


def default_catalog(bounds=DEFAULT_BOUNDS) -> list:
    """Closed piece types (circles not yet assigned) within ``(max genus, max punctures)``."""
    max_genus, max_marked = bounds
    out = []
    for k in range(max_marked + 1):
        for g in range(max_genus + 1):
            out.append(S(g, k))
            if g >= 1:
                out.append(N(g, k))
    return out


def _with_circles(t: SurfaceType, b: int) -> SurfaceType:
    return SurfaceType(t.orientable, t.genus, t.marked_points - b, b)


def _inessential(s: SurfaceType) -> bool:
    # disk, once-punctured disk, Moebius band: their single circle bounds no complexity
    return s.boundary_circles == 1 and (
        (s.orientable and s.genus == 0 and s.marked_points <= 1) or (not s.orientable and s.genus == 1 and s.marked_points == 0)
    )


def _f0_components(catalog, budget: int) -> list:
    """Component shapes whose weight ζ + classes is at most ``budget``."""
    out = []
    for t in catalog:
        for b in range(1, t.marked_points + 1):
            s = _with_circles(t, b)
            if _inessential(s):
                continue
            for c1 in range(b + 1):
                comp = F0Component(s, c1, b - c1)
                w = zeta(s) + comp.classes
                if w <= budget:
                    out.append((w, comp))
    out.sort(key=lambda wc: (wc[0], wc[1].sort_key()))
    return out


def _multisets(items, budget: int):
    """Multisets of weighted items with total weight exactly ``budget``."""

    def rec(start, left):
        if left == 0:
            yield ()
            return
        for i in range(start, len(items)):
            w, c = items[i]
            if w <= left:
                for rest in rec(i, left - w):
                    yield (c,) + rest

    yield from rec(0, budget)


def _connected(components) -> bool:
    # nodes F1, F2 and each component; edges are gluing circles
    parent = {"F1": "F1", "F2": "F2"}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for i, c in enumerate(components):
        parent[i] = i
        for side, n in (("F1", c.to_f1), ("F2", c.to_f2)):
            if n:
                parent[find(i)] = find(side)
    roots = {find(x) for x in parent}
    return len(roots) == 1


def _glue(f1: SurfaceType, f2: SurfaceType, components) -> SurfaceType | None:
    """Closed surface obtained by gluing, or None if it is forced orientable."""
    pieces = [f1, f2] + [c.surface for c in components]
    chi = sum(euler_characteristic(p) for p in pieces)
    circles = sum(c.circles for c in components)
    has_cycle = circles >= len(pieces)  # connected gluing graph with at least as many edges as nodes
    if all(p.orientable for p in pieces) and not has_cycle:
        return None
    genus = 2 - chi
    if genus < 1:
        return None
    return N(genus, sum(p.marked_points for p in pieces))


def _canonical(components, z1, z2):
    comps = tuple(sorted(components, key=F0Component.sort_key))
    n1 = sum(c.to_f1 for c in comps)
    n2 = sum(c.to_f2 for c in comps)
    swapped = tuple(sorted((c.swapped() for c in comps), key=F0Component.sort_key))
    if (n2, -z2) > (n1, -z1):
        return swapped, z2, z1, n2, n1
    if (n1, z1) == (n2, z2):
        key = lambda cs: [c.sort_key() for c in cs]  # noqa: E731
        comps = min(comps, swapped, key=key)
    return comps, z1, z2, n1, n2


def enumerate_c4_decompositions(target_xi_two: int = 4, catalog_bounds=DEFAULT_BOUNDS, catalog=None) -> list:
    """All normalized decompositions ``N = F1 ∪ F2 ∪ F0`` with ζ(F1)+ζ(F2)+ζ(F0)+α = target.

    F1 and F2 carry 1..4 gluing circles and complexity 1 or 2.  Cases with a
    connected F0 that differ only in the type of F0 are merged into one case
    listing the alternatives.
    """
    max_genus, max_marked = catalog_bounds
    if max_genus < DEFAULT_BOUNDS[0] or max_marked < DEFAULT_BOUNDS[1]:
        raise InputError(f"catalog bounds {catalog_bounds} are too small; need genus >= 2 and marked >= 5")
    if target_xi_two < 0:
        raise InputError("target complexity must be non-negative")
    cat = sorted(set(catalog if catalog is not None else default_catalog(catalog_bounds)))
    cat = [t.as_marked() for t in cat if t.genus <= max_genus and t.punctures <= max_marked]

    def pieces(z, n):
        return tuple(
            sorted(
                (_with_circles(t, n) for t in cat if t.marked_points >= n and zeta(t) == z),
                key=lambda s: (not s.orientable, s.genus, s.marked_points),
            )
        )

    found: dict = {}
    for zsum in range(2, 5):
        budget = target_xi_two - zsum
        if budget < 1:
            continue
        comps = _f0_components(cat, budget)
        for ms in _multisets(comps, budget):
            n1 = sum(c.to_f1 for c in ms)
            n2 = sum(c.to_f2 for c in ms)
            if not (1 <= n1 <= MAX_PIECE_CIRCLES and 1 <= n2 <= MAX_PIECE_CIRCLES):
                continue
            if not _connected(ms):
                continue
            for z1 in (1, 2):
                z2 = zsum - z1
                if z2 not in (1, 2):
                    continue
                c, z1n, z2n, n1n, n2n = _canonical(ms, z1, z2)
                f1s, f2s = pieces(z1n, n1n), pieces(z2n, n2n)
                if not f1s or not f2s:
                    continue
                alpha = sum(x.classes for x in c)
                if len(c) == 1:
                    key = ("connected", z1n, z2n, c[0].to_f1, c[0].to_f2, alpha)
                else:
                    key = ("split", z1n, z2n, c)
                entry = found.setdefault(key, {"f0": set(), "z": (z1n, z2n), "n": (n1n, n2n), "alpha": alpha, "f1": f1s, "f2": f2s})
                entry["f0"].add(c)

    cases = []
    for entry in found.values():
        f0_opts = tuple(sorted(entry["f0"], key=lambda cs: [x.sort_key() for x in cs]))
        realizable = []
        for opt in f0_opts:
            for a in entry["f1"]:
                for b in entry["f2"]:
                    glued = _glue(a, b, opt)
                    if glued is not None and xi_two(glued) == target_xi_two:
                        realizable.append((a, b, glued))
        gluing = tuple(
            (f"F0.{i}", side) for i, x in enumerate(f0_opts[0]) for side, n in (("F1", x.to_f1), ("F2", x.to_f2)) for _ in range(n)
        )
        cases.append(
            DecompositionCase(
                f0_options=f0_opts,
                zeta1=entry["z"][0],
                zeta2=entry["z"][1],
                circles1=entry["n"][0],
                circles2=entry["n"][1],
                alpha=entry["alpha"],
                f1_options=entry["f1"],
                f2_options=entry["f2"],
                realizable_pairs=tuple(realizable),
                chain_merge_changes_alpha=any(_chain_alpha(opt) != entry["alpha"] for opt in f0_opts),
                gluing=gluing,
            )
        )
    cases.sort(key=lambda c: (len(c.f0_options[0]), -(c.zeta1 + c.zeta2), [x.sort_key() for x in c.f0_options[0]]))
    return cases


def _chain_alpha(components) -> int:
    """α when consecutive plain annuli glued end to end share one class.

    Components of F0 are glued only to F1 or F2, never to each other, so every
    chain has length one and this agrees with the single-annulus rule.
    """
    return sum(c.classes for c in components)


def case_contains(case: DecompositionCase, f0, f1: SurfaceType, f2: SurfaceType) -> bool:
    """Membership up to the F1/F2 swap; pieces are compared in marked-point form."""
    f0m = sorted(str(s.as_marked()) for s in f0)
    opts = [sorted(str(c.surface.as_marked()) for c in opt) for opt in case.f0_options]
    if f0m not in opts:
        return False
    l1 = {s.as_marked() for s in case.f1_options}
    l2 = {s.as_marked() for s in case.f2_options}
    a, b = f1.as_marked(), f2.as_marked()
    return (a in l1 and b in l2) or (b in l1 and a in l2)


def surface_table(surfaces) -> list:
    rows = []
    for s in surfaces:
        row = {"surface": str(s), "chi": euler_characteristic(s), "xi": xi(s)}
        row["xi_two"] = None if s.orientable else xi_two(s)
        rows.append(row)
    return rows


def grid(max_genus: int, max_marked: int):
    for orientable, g, m in itertools.product((False, True), range(max_genus + 1), range(max_marked + 1)):
        if orientable or g >= 1:
            yield SurfaceType(orientable, g, m)
