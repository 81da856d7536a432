from __future__ import annotations

import random
from math import comb

import pytest

from ratassoc import (
    Diagonal,
    SimplicialComplex,
    alexander_duality_check,
    alexander_partition_check,
    betti_numbers,
    check_wedge,
)
from ratassoc.homology import _build_matrices, _check_dd_zero

from helpers import all_facets, ass, coprime_pairs, hat


def test_betti_examples():
    assert betti_numbers(ass(3, 5), "gf2").nonzero() == {1: 2}
    assert betti_numbers(ass(5, 8), "q").nonzero() == {3: 7}
    assert betti_numbers(ass(2, 3), "gf2").nonzero() == {0: 1}


def test_full_simplex_is_acyclic():
    verts = [Diagonal(0, k, 9) for k in range(2, 7)]
    simplex = SimplicialComplex(verts, [verts])
    for field in ("gf2", "q"):
        assert betti_numbers(simplex, field).nonzero() == {}


def test_lonely_empty_face_complex():
    cpx = ass(1, 4)
    assert cpx.dim == -1
    assert betti_numbers(cpx, "gf2").nonzero() == {-1: 1}
    assert betti_numbers(cpx, "q", method="direct").nonzero() == {-1: 1}


def test_boundary_squared_vanishes():
    for a, b in [(3, 5), (5, 8), (4, 7)]:
        by_dim, mats = _build_matrices(set(ass(a, b).mask_set))
        _check_dd_zero(by_dim, mats)


@pytest.mark.parametrize("a,b", coprime_pairs(max_sum=12))
def test_reduction_agrees_with_direct_ranks(a, b):
    for cpx in (ass(a, b), hat(a, b)):
        for field in ("gf2", "q"):
            fast = betti_numbers(cpx, field)
            slow = betti_numbers(cpx, field, method="direct")
            assert fast.values == slow.values


def test_reduction_agrees_on_random_subcomplexes():
    rng = random.Random(20130815)
    for a, b in [(4, 7), (5, 8), (5, 7)]:
        facets = list(all_facets(a, b))
        for _ in range(4):
            chosen = rng.sample(facets, k=rng.randint(1, len(facets) // 2))
            cpx = SimplicialComplex(hat(a, b).ground, chosen, a=a, b=b)
            for field in ("gf2", "q"):
                assert (
                    betti_numbers(cpx, field).values
                    == betti_numbers(cpx, field, method="direct").values
                )


@pytest.mark.parametrize("a,b", [(2, 3), (3, 5), (2, 5), (4, 7), (5, 8)])
def test_wedge_examples(a, b):
    report = check_wedge(a, b, ass=ass(a, b))
    assert report.ok
    assert report.expected_spheres == comb(b, a) // b
    assert report.sphere_dim == a - 2


def test_wedge_counts_match_quoted_values():
    assert check_wedge(3, 5, ass=ass(3, 5)).expected_spheres == 2
    assert check_wedge(2, 3, ass=ass(2, 3)).expected_spheres == 1
    assert check_wedge(4, 7, ass=ass(4, 7)).expected_spheres == 5
    assert check_wedge(5, 8, ass=ass(5, 8)).expected_spheres == 7


@pytest.mark.parametrize("a,b", [(3, 5), (5, 8), (4, 7), (5, 7), (3, 8)])
def test_collapse_preserves_betti(a, b):
    for field in ("gf2", "q"):
        left = betti_numbers(hat(a, b), field)
        right = betti_numbers(ass(a, b), field)
        assert left.nonzero() == right.nonzero()


def test_partition_checks():
    p5 = alexander_partition_check(5)
    assert p5.ok and p5.total_diagonals == 9
    assert (3, 6, 3) in p5.pairs
    p8 = alexander_partition_check(8)
    assert p8.ok and p8.total_diagonals == 27


def test_duality_examples():
    r = alexander_duality_check(3, 5, ass_left=ass(3, 5), ass_right=ass(2, 5))
    assert r.ok and r.rank_left == r.rank_right == 2
    r = alexander_duality_check(5, 8, ass_left=ass(5, 8), ass_right=ass(3, 8))
    assert r.ok and r.expected_rank == 7
    assert any("surrogate" in note for note in r.notes)


@pytest.mark.parametrize("b", [4, 5, 6, 7, 8])
def test_classical_model_is_a_sphere(b):
    vec = betti_numbers(ass(b - 1, b), "q")
    assert vec.nonzero() == {b - 3: 1}
