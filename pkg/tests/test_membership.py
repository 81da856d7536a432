from __future__ import annotations

import pytest

from ratassoc import (
    Diagonal,
    NotAFaceOfHatError,
    all_admissible_diagonals,
    is_face_of_ass,
    partition_of,
    valley_path,
)
from ratassoc import parse_face
from ratassoc.lattice import young_contains

from helpers import all_facets, coprime_pairs, hat, oracle_in_ass


def face(text, b):
    return parse_face(text, b)


def test_worked_rejection_with_break_column():
    result = valley_path(face("5-7,2-4,0-5,0-4", 8), 5, 8)
    assert not result.is_member
    assert result.break_x == 0


def test_second_worked_rejection():
    result = valley_path(face("5-7,4-8,2-4,0-4", 8), 5, 8)
    assert not result.is_member
    assert result.break_x == 0
    assert not is_face_of_ass(face("5-7,4-8,2-4,0-4", 8), 5, 8)


def test_empty_face_gets_staircase_path():
    result = valley_path([], 5, 8)
    assert result.is_member
    assert result.valley_path.word == "N" * 5 + "E" * 8


def test_obstructing_pair_rejected():
    assert not is_face_of_ass(face("0-4,2-4", 5), 3, 5)
    assert not is_face_of_ass(face("1-5,3-5", 5), 3, 5)


def test_wedge_with_shared_smaller_endpoint_accepted():
    # a wedge at the top point whose completion is not even a diagonal;
    # it must still belong to the path model
    assert is_face_of_ass(face("0-5,1-5", 8), 5, 8)


def test_single_diagonals_always_members():
    for a, b in coprime_pairs(max_sum=12):
        for diag in all_admissible_diagonals(a, b):
            result = valley_path([diag], a, b)
            assert result.is_member
            assert oracle_in_ass([diag], a, b)


@pytest.mark.parametrize("a,b", [(3, 5), (5, 8), (4, 7), (5, 7)])
def test_facets_accepted_with_facet_containment(a, b):
    from ratassoc import facet_of

    for facet in all_facets(a, b):
        result = valley_path(facet, a, b)
        assert result.is_member
        assert facet <= facet_of(result.valley_path)


@pytest.mark.parametrize("a,b", coprime_pairs(max_sum=12))
def test_oracle_equivalence_exhaustive(a, b):
    for f in hat(a, b).faces():
        assert is_face_of_ass(f, a, b) == oracle_in_ass(f, a, b)


def test_accepted_path_vertical_runs_sit_at_face_columns():
    for a, b in [(3, 5), (5, 8), (4, 7)]:
        for f in hat(a, b).faces():
            result = valley_path(f, a, b)
            if not result.is_member or not f:
                continue
            runs = set(result.valley_path.vertical_run_xs())
            wanted = {d.i for d in f}
            assert wanted <= runs
            assert runs <= wanted | {0}


def test_valley_path_minimizes_partition_among_witnesses():
    # optional structural property, checked at small scale only
    from ratassoc import enumerate_dyck_paths, facet_of

    for a, b in [(3, 5), (2, 5), (4, 7)]:
        for f in hat(a, b).faces():
            result = valley_path(f, a, b)
            if not result.is_member:
                continue
            mine = partition_of(result.valley_path)
            for path in enumerate_dyck_paths(a, b):
                if f <= facet_of(path):
                    assert young_contains(mine, partition_of(path))


def test_rejects_non_faces():
    with pytest.raises(NotAFaceOfHatError):
        valley_path(face("0-4,1-5", 5), 3, 5)  # crossing pair
    with pytest.raises(NotAFaceOfHatError):
        valley_path(face("0-3", 5), 3, 5)  # inadmissible diagonal
    with pytest.raises(NotAFaceOfHatError):
        valley_path([Diagonal(0, 2, 6)], 3, 5)  # wrong polygon
