from fractions import Fraction

import pytest

from lpdm import (
    ArgumentError,
    Facet,
    HRep,
    LpdmSpec,
    contains,
    dimension,
    face,
    feasible_sets,
    hrep,
    intersect,
    is_linked,
    relabel,
    vertex_set,
)


def test_hrep_worked():
    h = hrep(LpdmSpec.of(3, {1}, {1, 3}))
    assert h == HRep(3, (1, 0, 0), (2, 1, 1))


def test_hrep_validates():
    with pytest.raises(ArgumentError):
        HRep(2, (0,), (1, 1))
    with pytest.raises(ArgumentError):
        HRep(2, (0, 2), (2, 1))  # not a suffix profile
    with pytest.raises(ArgumentError):
        HRep(2, (2, 1), (1, 1))  # lower above upper


def test_contains():
    h = hrep(LpdmSpec.of(3, {1}, {1, 3}))
    assert contains(h, (1, 0, 0))
    assert contains(h, (1, 0, 1))
    assert contains(h, (Fraction(1, 2), Fraction(1, 2), Fraction(1, 2)))
    assert not contains(h, (0, 0, 0))  # below the lower bound
    assert not contains(h, (1, 1, 1))  # above the upper bound
    assert not contains(h, (2, 0, 0))  # outside the cube
    with pytest.raises(ArgumentError):
        contains(h, (1, 0))


def test_vertices_satisfy_hrep(specs_n3):
    for m in specs_n3:
        h = hrep(m)
        verts = vertex_set(m)
        assert len(verts) == len(feasible_sets(m))
        for v in verts:
            assert contains(h, v)


def test_vertex_set_worked():
    assert vertex_set(LpdmSpec.of(2, (), {1, 2})) == [
        (0, 0), (1, 0), (0, 1), (1, 1)
    ]


def test_dimension():
    assert dimension(LpdmSpec.of(3, {1}, {1, 3})) == 3
    assert dimension(LpdmSpec.of(3, {1, 3}, {1, 3})) == 0
    assert dimension(LpdmSpec.of(2, {2}, {1, 2})) == 1


def test_is_linked():
    assert is_linked(LpdmSpec.of(3, (), {1, 2, 3}))
    assert not is_linked(LpdmSpec.of(3, {1, 3}, {1, 3}))
    assert not is_linked(LpdmSpec.of(2, {2}, {1, 2}))


def test_intersect_worked():
    got = intersect(LpdmSpec.of(2, (), {2}), LpdmSpec.of(2, {1}, {1, 2}))
    assert got == LpdmSpec.of(2, {1}, {2})


def test_intersect_empty_and_mismatch():
    assert intersect(LpdmSpec.of(2, {1, 2}, {1, 2}), LpdmSpec.of(2, (), ())) is None
    with pytest.raises(ArgumentError):
        intersect(LpdmSpec.of(2, (), ()), relabel(LpdmSpec.of(2, (), ()), (3, 4)))


def test_intersect_matches_set_intersection(specs_n3):
    for m1 in specs_n3[:12]:
        for m2 in specs_n3[:12]:
            got = intersect(m1, m2)
            want = set(feasible_sets(m1).members) & set(feasible_sets(m2).members)
            if got is None:
                assert not want
            else:
                assert set(feasible_sets(got).members) == want


def test_facet_validates():
    with pytest.raises(ArgumentError):
        Facet("weird", 1, 0)
    with pytest.raises(ArgumentError):
        Facet("coordinate", 0, 1)
    with pytest.raises(ArgumentError):
        Facet("coordinate", 1, 2)
    with pytest.raises(ArgumentError):
        Facet("suffix", 1, 0)


def test_face_coordinate_worked():
    m = LpdmSpec.of(5, {1, 3}, {2, 3, 5})
    res = face(m, Facet("coordinate", 3, 1))
    assert res.kind == "coordinate-1"
    assert len(res.family) == 9
    one, rest = res.factors
    assert one == LpdmSpec((3,), frozenset({3}), frozenset({3}))
    assert rest == LpdmSpec((1, 2, 4, 5), frozenset({1}), frozenset({2, 5}))
    assert len(res.family) == len(feasible_sets(one)) * len(feasible_sets(rest))


def test_face_suffix_worked():
    m = LpdmSpec.of(2, (), {1, 2})
    res = face(m, Facet("suffix", 2, "lower"))
    assert res.kind == "suffix-lower"
    assert {frozenset(a) for a in res.family.members} == {frozenset(), frozenset({1})}
    low, high = res.factors
    assert low == LpdmSpec((1,), frozenset(), frozenset({1}))
    assert high == LpdmSpec((2,), frozenset(), frozenset())


def test_face_empty():
    res = face(LpdmSpec.of(2, {2}, {2}), Facet("coordinate", 1, 1))
    assert len(res.family) == 0 and res.factors is None


def test_face_index_out_of_range():
    with pytest.raises(ArgumentError):
        face(LpdmSpec.of(2, (), ()), Facet("coordinate", 3, 0))
