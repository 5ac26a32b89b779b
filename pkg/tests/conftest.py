import itertools

import pytest

from raagcurves.graphs import Graph
from raagcurves.oracle import closure_codes, moves_for
from raagcurves.words import Presentation, Word


def lettered(kind: str, n: int) -> Graph:
    """Named graph on letters a, b, c, ... (P4 is a-b-c-d, C4 is a-b-c-d-a)."""
    vs = [chr(ord("a") + i) for i in range(n)]
    if kind == "path":
        es = list(zip(vs, vs[1:]))
    elif kind == "cycle":
        es = list(zip(vs, vs[1:] + vs[:1]))
    elif kind == "complete":
        es = list(itertools.combinations(vs, 2))
    else:
        es = []
    return Graph(vs, es)


P4 = lettered("path", 4)
C4 = lettered("cycle", 4)
C5 = lettered("cycle", 5)
K3 = lettered("complete", 3)
E3 = lettered("edgeless", 3)
K2 = lettered("complete", 2)

SMALL_GRAPHS = {"P4": P4, "C4": C4, "C5": C5, "K3": K3, "E3": E3}


def words_up_to(p: Presentation, n: int):
    step = 2 if p.coxeter else 1
    alphabet = range(0, 2 * len(p.vertices), step)
    for k in range(n + 1):
        for codes in itertools.product(alphabet, repeat=k):
            yield Word(p, codes)


def closure_agreement(g, flavor, max_len):
    """Every move preserves the normal form, and every word reaches its normal form.

    Together these give ``equal(u, w) <=> closures of u and w meet`` for all
    words up to ``max_len``: the closure of ``u`` lies in the normal-form
    class of ``u`` and contains ``normal_form(u)``.
    """
    p = Presentation(g, flavor)
    k = p.kernels
    moves = moves_for(p)
    nf: dict = {}
    for w in words_up_to(p, max_len):
        nf[w.codes] = tuple(k.normal_form_codes(k.reduce_codes(w.codes, p.adj, p.coxeter), p.adj))
    reaches: set = set()
    for codes in sorted(nf, key=len):
        target = nf[codes]
        for x in moves.neighbours(codes):
            if nf[x] != target:
                return False, f"move {codes} -> {x} changes the normal form"
        if codes in reaches:
            continue
        if any(len(x) < len(codes) and x in reaches for x in moves.neighbours(codes)):
            reaches.add(codes)
            continue
        cls = closure_codes(moves, codes)
        if target not in cls:
            return False, f"{codes} does not reach its normal form"
        if all(len(x) == len(codes) for x in cls):
            reaches.update(cls)
        else:
            reaches.add(codes)
    return True, len(nf)


@pytest.fixture
def artin_p4():
    return Presentation(P4, "artin")


@pytest.fixture
def coxeter_c4():
    return Presentation(C4, "coxeter")
