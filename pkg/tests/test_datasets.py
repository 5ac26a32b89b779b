import itertools

import pytest

from raagcurves.errors import ConditionStarError, DataError
from raagcurves.datasets import (
    REALISATIONS,
    gamma0_gamma1_bundle,
    gamma_map,
    load_curves,
    load_graph,
    realisation_matches,
    validate_gamma_pair,
)
from raagcurves.graphs import Graph, enumerate_cliques, find_induced_embeddings, is_triangle_free
from raagcurves.maps import diagonal_hom, verify_reduced_preservation
from raagcurves.words import Word, normal_form


@pytest.fixture(scope="module")
def bundle():
    return gamma0_gamma1_bundle()


def test_bundle_validates(bundle):
    assert all(bundle.checks.values())
    assert str(bundle.hom.image_word("q")) == "e f"
    for v in "abcdgh":
        assert str(bundle.hom.image_word(v)) == v


def test_hom_on_inverse(bundle):
    p = bundle.hom.source
    assert str(bundle.hom(p.parse("q^-1"))) == "f^-1 e^-1"
    assert str(bundle.hom(p.identity())) == "1"


def test_bad_transcriptions_rejected(bundle):
    g0, g1 = bundle.gamma0, bundle.gamma1
    no_cycle = Graph(g0.vertices, [e for e in g0.sorted_edges() if e != ("a", "b")])
    with pytest.raises(DataError, match="4-cycle"):
        validate_gamma_pair(no_cycle, g1)
    qg = Graph(g0.vertices, g0.sorted_edges() + [("g", "q")])
    with pytest.raises(DataError, match="q and g"):
        validate_gamma_pair(qg, g1)
    missing = Graph(g1.vertices, [e for e in g1.sorted_edges() if e != ("a", "e")])
    with pytest.raises(DataError, match="well defined"):
        validate_gamma_pair(g0, missing)


def test_gamma0_not_induced_in_gamma1(bundle):
    assert find_induced_embeddings(bundle.gamma0, bundle.gamma1, None) == []


def test_gamma1_has_a_four_clique(bundle):
    assert not is_triangle_free(bundle.gamma1)
    assert frozenset("abef") in enumerate_cliques(bundle.gamma1, 4)


def test_collapse_map_fails_condition_star(bundle):
    with pytest.raises(ConditionStarError):
        diagonal_hom(gamma_map(bundle.gamma0, bundle.gamma1))


def test_phi_never_kills_a_word(bundle):
    rep = verify_reduced_preservation(bundle.hom, 2000, 20, seed=0)
    assert rep.trivial_images == 0
    assert rep.lipschitz_constant == 2


def test_phi_injective_on_short_words(bundle):
    """Distinct elements of A(G0) of length <= 4 have distinct images."""
    p = bundle.hom.source
    seen = {}
    for k in range(5):
        for codes in itertools.product(range(2 * len(p.vertices)), repeat=k):
            w = Word(p, codes)
            key = normal_form(w).codes
            img = normal_form(bundle.hom(w)).codes
            assert seen.setdefault(img, key) == key


@pytest.mark.parametrize("surface", sorted(REALISATIONS))
def test_realisations_match_gamma1(surface):
    cs = load_curves(surface)
    iso = realisation_matches(cs, load_graph("gamma1.json"))
    assert iso is not None and len(set(iso.values())) == 8
    assert realisation_matches(cs, load_graph("gamma0.json")) is None


def test_user_data_dir_shadows_package(tmp_path, bundle):
    bad = Graph(bundle.gamma0.vertices, [e for e in bundle.gamma0.sorted_edges() if e != ("a", "b")])
    (tmp_path / "gamma0.json").write_text(bad.to_json())
    with pytest.raises(DataError):
        gamma0_gamma1_bundle(str(tmp_path))
