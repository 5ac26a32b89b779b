"""Word arithmetic in right-angled Artin groups A(G) and right-angled Coxeter groups C(G).

A :class:`Presentation` fixes the host graph and the flavor; a :class:`Word`
is an immutable sequence of signed letters over it.  Heavy lifting happens
in integer-coded kernels (compiled when available, see ``_backend``).
"""

from __future__ import annotations

import enum
import warnings
from typing import Iterable, Sequence

from . import _backend
from .checks import Check
from .errors import InputError
from .graphs import Graph


class Flavor(str, enum.Enum):
    ARTIN = "artin"
    COXETER = "coxeter"


def as_flavor(value) -> Flavor:
    try:
        return Flavor(value.value if isinstance(value, Flavor) else str(value).lower())
    except ValueError:
        raise InputError(f"unknown flavor {value!r}") from None


class Presentation:
    """A(G) or C(G): generators are the vertices, adjacent vertices commute."""

    def __init__(self, graph: Graph, flavor=Flavor.ARTIN):
        self.graph = graph
        self.flavor = as_flavor(flavor)
        self.vertices = graph.vertices
        self.index = {v: i for i, v in enumerate(self.vertices)}
        self._by_name = {str(v): v for v in self.vertices}
        self.adj = [sum(1 << self.index[u] for u in graph.neighbors(v)) for v in self.vertices]
        self.kernels = _backend.for_size(len(self.vertices))

    @property
    def coxeter(self) -> bool:
        return self.flavor is Flavor.COXETER

    def __eq__(self, other) -> bool:
        return isinstance(other, Presentation) and self.flavor is other.flavor and self.graph == other.graph

    def __hash__(self) -> int:
        return hash((self.graph, self.flavor))

    def __repr__(self) -> str:
        name = "C" if self.coxeter else "A"
        return f"{name}({self.graph!r})"

    def commute(self, u, v) -> bool:
        return u == v or self.graph.adjacent(u, v)

    def code(self, v, sign: int = 1) -> int:
        try:
            i = self.index[v]
        except KeyError:
            raise InputError(f"letter {v!r} is not a vertex of the host graph") from None
        if sign not in (1, -1):
            raise InputError(f"letter sign must be +1 or -1, got {sign!r}")
        return 2 * i + (1 if sign == -1 and not self.coxeter else 0)

    def letter_of(self, code: int) -> tuple:
        return (self.vertices[code >> 1], -1 if code & 1 else 1)

    def word(self, letters: Iterable = ()) -> "Word":
        """Build a word from ``v`` or ``(v, sign)`` items."""
        codes = []
        for item in letters:
            if isinstance(item, tuple):
                v, s = item
            else:
                v, s = item, 1
            codes.append(self.code(v, s))
        return Word(self, tuple(codes))

    def generator(self, v, sign: int = 1) -> "Word":
        return Word(self, (self.code(v, sign),))

    def identity(self) -> "Word":
        return Word(self, ())

    def parse(self, text: str, normalize: bool = False) -> "Word":
        """Read the text format: whitespace-separated ``a`` or ``a^-1``; ``1`` is the identity."""
        codes = []
        for tok in text.split():
            if tok == "1":
                continue
            sign = 1
            name = tok
            if tok.endswith("^-1"):
                name, sign = tok[:-3], -1
            elif tok.endswith("^1"):
                name = tok[:-2]
            if name not in self._by_name:
                raise InputError(f"unknown letter {name!r} in word {text!r}")
            if sign == -1 and self.coxeter:
                if not normalize:
                    raise InputError(f"inverse letter {tok!r} in a Coxeter word (generators are involutions)")
                warnings.warn(f"normalising {tok!r} to {name!r} in Coxeter flavor", stacklevel=2)
            codes.append(self.code(self._by_name[name], sign))
        return Word(self, tuple(codes))


class Word:
    """Immutable word over a presentation."""

    __slots__ = ("presentation", "codes")

    def __init__(self, presentation: Presentation, codes: Sequence[int]):
        self.presentation = presentation
        if presentation.coxeter:
            codes = tuple(c & ~1 for c in codes)
        self.codes = tuple(codes)

    @property
    def letters(self) -> tuple:
        p = self.presentation
        return tuple(p.letter_of(c) for c in self.codes)

    def __len__(self) -> int:
        return len(self.codes)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, item) -> "Word":
        if isinstance(item, slice):
            return Word(self.presentation, self.codes[item])
        return Word(self.presentation, (self.codes[item],))

    def __eq__(self, other) -> bool:
        """Equality as sequences of letters; use :func:`equal` for group equality."""
        if not isinstance(other, Word):
            return NotImplemented
        return self.codes == other.codes and self.presentation == other.presentation

    def __hash__(self) -> int:
        return hash(self.codes)

    def __mul__(self, other: "Word") -> "Word":
        _check_same(self, other)
        return Word(self.presentation, self.codes + other.codes)

    def inverse(self) -> "Word":
        flip = 0 if self.presentation.coxeter else 1
        return Word(self.presentation, tuple(c ^ flip for c in reversed(self.codes)))

    def __str__(self) -> str:
        if not self.codes:
            return "1"
        return " ".join(str(v) if s == 1 else f"{v}^-1" for v, s in self.letters)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"


def _check_same(u: Word, w: Word) -> None:
    if u.presentation != w.presentation:
        raise InputError("words live over different host graphs or flavors")


def is_reduced(w: Word) -> Check:
    """Reducedness by the forbidden-pattern criterion.

    On failure the witness is the position pair ``(i, j)`` holding ``v^e`` and
    ``v^-e`` (or ``v`` twice in Coxeter flavor) with every letter strictly
    between commuting with ``v``.
    """
    p = w.presentation
    hit = p.kernels.find_cancellation(w.codes, p.adj, p.coxeter)
    return Check(hit is None, hit)


def reduce(w: Word) -> Word:
    """A reduced (hence shortest) word for the same element."""
    p = w.presentation
    return Word(p, tuple(p.kernels.reduce_codes(w.codes, p.adj, p.coxeter)))


def normal_form(w: Word) -> Word:
    """Lexicographically least reduced word, ordering letters by (vertex, +1 < -1)."""
    p = w.presentation
    k = p.kernels
    return Word(p, tuple(k.normal_form_codes(k.reduce_codes(w.codes, p.adj, p.coxeter), p.adj)))


def equal(u: Word, w: Word) -> bool:
    _check_same(u, w)
    return normal_form(u).codes == normal_form(w).codes


def reduced_length(w: Word) -> int:
    return len(reduce(w))
