from __future__ import annotations

import pytest

from ratassoc import (
    CapExceededError,
    Diagonal,
    FHVector,
    NonIntegralError,
    SimplicialComplex,
    build_ass,
    build_hat_ass,
    deletion,
    f_vector,
    h_vector,
    is_flag,
    rational_catalan,
    rational_kirkman,
    rational_narayana,
)

from helpers import ass, coprime_pairs, hat, is_fuss, obstruction_graph


def d(i, j, b=5):
    return Diagonal(i, j, b)


def test_hat_3_5_structure():
    cpx = hat(3, 5)
    assert len(cpx.ground) == 6
    facets = cpx.facets()
    triangles = [f for f in facets if len(f) == 3]
    assert {frozenset(t) for t in triangles} == {
        frozenset({d(0, 2), d(0, 4), d(2, 4)}),
        frozenset({d(1, 3), d(1, 5), d(3, 5)}),
    }
    assert cpx.n_faces == 18
    assert not cpx.is_pure()


def test_hat_2_3_is_two_points():
    cpx = hat(2, 3)
    assert set(cpx.ground) == {Diagonal(0, 2, 3), Diagonal(1, 3, 3)}
    assert {frozenset(f) for f in cpx.facets()} == {
        frozenset({Diagonal(0, 2, 3)}),
        frozenset({Diagonal(1, 3, 3)}),
    }
    assert cpx.has_face([])


@pytest.mark.parametrize("a,b", [(2, 3), (3, 4), (2, 5), (3, 7), (4, 9), (4, 5), (5, 11)])
def test_models_coincide_at_fuss_level(a, b):
    assert is_fuss(a, b)
    assert hat(a, b) == ass(a, b)


@pytest.mark.parametrize("a,b", [(3, 5), (5, 8), (4, 7), (5, 7), (3, 8), (7, 9)])
def test_path_model_is_strict_subcomplex_outside_fuss(a, b):
    assert not is_fuss(a, b)
    assert ass(a, b).mask_set < hat(a, b).mask_set


def test_ass_facet_counts():
    assert len(ass(3, 5).facets()) == 7
    assert len(ass(5, 8).facets()) == 99


@pytest.mark.parametrize("a,b", coprime_pairs(max_sum=12))
def test_ass_is_pure_with_catalan_facets(a, b):
    cpx = ass(a, b)
    facets = cpx.facets()
    assert len(facets) == rational_catalan(a, b)
    assert all(len(f) == a - 1 for f in facets)
    assert cpx.dim == a - 2


def test_f_vector_examples():
    assert f_vector(ass(3, 5)).f == (1, 6, 7)
    point = SimplicialComplex([d(0, 2)], [[d(0, 2)]])
    assert f_vector(point).f == (1, 1)
    fh58 = f_vector(ass(5, 8))
    assert fh58.f == tuple(rational_kirkman(5, 8, i) for i in range(1, 6))


def test_h_vector_examples():
    assert h_vector(ass(3, 5)).h == (1, 4, 2)
    simplex = SimplicialComplex(
        [d(0, 2), d(0, 3), d(0, 4)], [[d(0, 2), d(0, 3), d(0, 4)]]
    )
    assert h_vector(simplex).h == (1, 0, 0, 0)
    assert h_vector(ass(5, 8)).h == tuple(rational_narayana(5, 8, i) for i in range(1, 6))


def test_fh_top_term_consistency():
    for a, b in coprime_pairs(max_sum=11):
        fh = FHVector.of(ass(a, b))
        assert sum(fh.h) == fh.f[-1]


def test_formula_examples():
    assert rational_catalan(3, 5) == 7
    assert rational_kirkman(3, 5, 2) == 6
    assert rational_narayana(5, 8, 5) == 7


def test_formula_validation():
    with pytest.raises(ValueError):
        rational_kirkman(3, 5, 0)
    with pytest.raises(ValueError):
        rational_narayana(3, 5, 4)


def test_exact_division_guard():
    from ratassoc.complexes import _exact_div

    with pytest.raises(NonIntegralError):
        _exact_div(7, 3, "guard")


def test_is_flag_on_models():
    for a, b in [(3, 5), (5, 8), (4, 7), (2, 3)]:
        assert is_flag(ass(a, b)).is_flag
        assert is_flag(hat(a, b)).is_flag


def test_is_flag_witness_on_hollow_triangle():
    # three mutually noncrossing diagonals, all pairs present, no 2-face
    verts = [d(0, 2, 6), d(0, 4, 6), d(2, 4, 6)]
    faces = [[verts[0], verts[1]], [verts[0], verts[2]], [verts[1], verts[2]]]
    hollow = SimplicialComplex(verts, faces)
    report = is_flag(hollow)
    assert not report.is_flag
    assert report.witness == frozenset(verts)


def test_deletion_examples():
    cpx = hat(3, 5)
    v = d(0, 2)
    without = cpx.deletion([[v]])
    assert all(v not in f for f in without.faces())
    assert without.n_faces == sum(1 for f in cpx.faces() if v not in f)
    assert cpx.deletion([]) == cpx


@pytest.mark.parametrize("a,b", [(3, 5), (5, 8), (4, 7), (5, 7), (3, 7)])
def test_deleting_obstruction_edges_yields_path_model(a, b):
    graph = obstruction_graph(a, b)
    edges = [list(e.pair()) for e in graph.edges]
    assert deletion(hat(a, b), edges) == ass(a, b)


def test_build_caps():
    with pytest.raises(CapExceededError):
        build_hat_ass(8, 15)
    with pytest.raises(CapExceededError):
        build_ass(8, 15)
    with pytest.raises(CapExceededError):
        build_hat_ass(5, 8, max_faces=100)
    with pytest.raises(CapExceededError):
        build_ass(5, 8, max_faces=100)


def test_json_round_trip():
    cpx = ass(3, 5)
    doc = cpx.to_json(include_faces=True)
    assert doc["schema"] == 1
    back = SimplicialComplex.from_json(doc)
    assert back == cpx
    # facets alone regenerate the complex by closure
    slim = SimplicialComplex.from_json(cpx.to_json())
    assert slim == cpx
