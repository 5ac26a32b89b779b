"""Brute-force word-problem oracle used as independent ground truth in tests.

The oracle never calls the reduction kernels.  It explores the closure of a
word under elementary moves:

* swap two adjacent letters whose vertices are distinct and adjacent in G;
* delete an adjacent pair ``v^e v^-e`` (Artin) or ``v v`` (Coxeter).

Inverse-pair insertions are not explored: for right-angled groups the
commutation/cancellation rewriting system is confluent, so two words are
equal iff their closures under these length-non-increasing moves meet.
``move_budget`` caps the breadth-first depth per side; when a closure is not
exhausted within the budget and no meeting point was seen, the oracle raises
:class:`OracleInconclusive` instead of answering ``False``.
"""

from __future__ import annotations

from .errors import InputError, OracleInconclusive
from .words import Flavor, Word

MAX_WORD_LENGTH = 8
MAX_VERTICES = 6


class _Moves:
    def __init__(self, graph, coxeter: bool):
        vs = list(graph.vertices)
        self.vertices = vs
        self.coxeter = coxeter
        n = 2 * len(vs)
        self.commute = [[False] * n for _ in range(n)]
        self.cancel = [[False] * n for _ in range(n)]
        for a in range(n):
            for b in range(n):
                va, vb = vs[a // 2], vs[b // 2]
                self.commute[a][b] = va != vb and graph.adjacent(va, vb)
                if va == vb:
                    self.cancel[a][b] = (a == b) if coxeter else (a != b)

    def encode(self, word: Word) -> tuple:
        idx = {v: i for i, v in enumerate(self.vertices)}
        s = 0 if self.coxeter else 1
        return tuple(2 * idx[v] + (1 if (sg == -1 and s) else 0) for v, sg in word.letters)

    def neighbours(self, w: tuple):
        commute, cancel = self.commute, self.cancel
        for i in range(len(w) - 1):
            a, b = w[i], w[i + 1]
            if commute[a][b]:
                yield w[:i] + (b, a) + w[i + 2 :]
            if cancel[a][b]:
                yield w[:i] + w[i + 2 :]


def _check_scale(word: Word) -> None:
    if len(word) > MAX_WORD_LENGTH or len(word.presentation.vertices) > MAX_VERTICES:
        raise InputError(
            f"oracle is desk-scale only (length <= {MAX_WORD_LENGTH}, <= {MAX_VERTICES} vertices)"
        )


class _Search:
    def __init__(self, moves: _Moves, start: tuple):
        self.moves = moves
        self.seen = {start}
        self.frontier = [start]

    @property
    def saturated(self) -> bool:
        return not self.frontier

    def step(self) -> None:
        nxt = []
        seen = self.seen
        for w in self.frontier:
            for x in self.moves.neighbours(w):
                if x not in seen:
                    seen.add(x)
                    nxt.append(x)
        self.frontier = nxt


def closure(word: Word, move_budget: int = 64, check_scale: bool = True) -> tuple[frozenset, bool]:
    """All words reachable within ``move_budget`` moves, and whether the closure was exhausted.

    Words are returned as tuples of ``(vertex, sign)`` letters.
    """
    if check_scale:
        _check_scale(word)
    moves = _Moves(word.presentation.graph, word.presentation.flavor is Flavor.COXETER)
    s = _Search(moves, moves.encode(word))
    for _ in range(move_budget):
        if s.saturated:
            break
        s.step()
    vs = moves.vertices
    out = frozenset(tuple((vs[c // 2], -1 if c % 2 else 1) for c in w) for w in s.seen)
    return out, s.saturated


def oracle_equal(u: Word, w: Word, move_budget: int = 64) -> bool:
    """Decide ``u == w`` by intersecting breadth-first move closures."""
    if u.presentation != w.presentation:
        raise InputError("words live over different host graphs or flavors")
    _check_scale(u)
    _check_scale(w)
    moves = _Moves(u.presentation.graph, u.presentation.flavor is Flavor.COXETER)
    a = _Search(moves, moves.encode(u))
    b = _Search(moves, moves.encode(w))
    if a.seen & b.seen:
        return True
    for _ in range(move_budget):
        if a.saturated and b.saturated:
            break
        a.step()
        b.step()
        if a.seen & b.seen:
            return True
    if a.saturated and b.saturated:
        return False
    raise OracleInconclusive(f"move budget {move_budget} exhausted before deciding {u} = {w}")


def closure_codes(moves: _Moves, start: tuple) -> set:
    """Exhaustive closure on raw codes (fast path for bulk exhaustive checks)."""
    s = _Search(moves, start)
    while not s.saturated:
        s.step()
    return s.seen


def moves_for(presentation) -> _Moves:
    return _Moves(presentation.graph, presentation.flavor is Flavor.COXETER)
