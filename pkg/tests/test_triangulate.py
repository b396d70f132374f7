from fractions import Fraction

import pytest

from lpdm import (
    ArgumentError,
    DomainError,
    LatticeSimplex,
    LpdmSpec,
    Permutation,
    all_permutations,
    ehrhart_volume,
    eulerian_simplex,
    fractional_prefix_sums,
    hrep,
    is_toric,
    simplex_cell,
    simplex_volume,
    subdivide,
    triangulate_toric,
    volume,
)


def test_fractional_prefix_sums():
    assert fractional_prefix_sums((Fraction(1, 2), Fraction(3, 4))) == (
        Fraction(1, 2),
        Fraction(1, 4),
    )
    assert fractional_prefix_sums(()) == ()
    with pytest.raises(ArgumentError):
        fractional_prefix_sums((2, 0))


def test_lattice_simplex_validates():
    with pytest.raises(ArgumentError):
        LatticeSimplex(((0, 0), (1, 0)))
    with pytest.raises(ArgumentError):
        LatticeSimplex(())
    simp = LatticeSimplex(((0, 0), (1, 0), (0, 1)))
    assert simp.n == 2 and simp.perm is None
    assert simp.barycenter() == (Fraction(1, 3), Fraction(1, 3))


def test_eulerian_simplex_worked():
    simp = eulerian_simplex(Permutation((1, 3, 2)))
    assert simp.vertices == ((1, 0, 0), (0, 1, 0), (1, 1, 0), (1, 0, 1))
    assert simp.perm == Permutation((1, 3, 2))


def test_eulerian_simplices_unimodular():
    for n in (1, 2, 3, 4):
        for w in all_permutations(n):
            assert simplex_volume(eulerian_simplex(w).vertices) == Fraction(
                1, [1, 1, 2, 6, 24][n]
            )


def test_prefix_sum_transport():
    # reversing then summing the barycenter recovers the inverse
    # permutation scaled into the open cube
    for n in (1, 2, 3, 4):
        for w in all_permutations(n):
            bary = eulerian_simplex(w).barycenter()
            got = fractional_prefix_sums(tuple(reversed(bary)))
            winv = w.inverse().images
            assert got == tuple(Fraction(winv[i], n + 1) for i in range(n))


def test_simplex_cell_worked():
    assert simplex_cell(Permutation((1, 3, 2))).members == frozenset({1})
    assert simplex_cell(Permutation((2, 3, 1))).members == frozenset({2})
    assert simplex_cell(Permutation((3, 2, 5, 4, 6, 1))).members == frozenset({2, 4, 5})
    assert simplex_cell(Permutation((1, 2))).members == frozenset()


def test_simplex_cell_closed_form():
    for n in (1, 2, 3, 4):
        for w in all_permutations(n):
            want = frozenset(n - d for d in w.inverse().descent_set().members)
            assert simplex_cell(w).members == want


def test_simplex_cell_differs_from_both_descents_and_ascents():
    swapped = Permutation((1, 3, 2))
    assert simplex_cell(swapped).members != swapped.descent_set().members
    cycled = Permutation((2, 3, 1))
    assert simplex_cell(cycled).members != cycled.ascent_set().members


def test_is_toric():
    assert is_toric(LpdmSpec.of(3, {1}, {1, 3}))
    assert is_toric(LpdmSpec.of(3, (), {3}))
    assert not is_toric(LpdmSpec.of(3, (), {1, 2, 3}))
    assert not is_toric(LpdmSpec.of(3, {3}, {3}))
    assert not is_toric(LpdmSpec.of(0))


def test_triangulate_toric_worked():
    simps = triangulate_toric(LpdmSpec.of(3, {1}, {1, 3}))
    assert [s.perm.images for s in simps] == [(1, 3, 2), (3, 1, 2)]
    with pytest.raises(DomainError):
        triangulate_toric(LpdmSpec.of(3, (), {1, 2, 3}))


def test_subdivide_cube():
    sub = subdivide(LpdmSpec.of(3, (), {1, 2, 3}))
    assert [(sorted(c.lower), sorted(c.upper)) for c in sub.cells] == [
        ([], [3]),
        ([1], [1, 3]),
        ([2], [2, 3]),
        ([1, 2], [1, 2, 3]),
    ]
    with pytest.raises(DomainError):
        subdivide(LpdmSpec.of(3, {1, 3}, {1, 3}))


def test_volume_worked():
    assert volume(LpdmSpec.of(3, {1}, {1, 3})) == Fraction(1, 3)
    assert volume(LpdmSpec.of(3, (), {1, 3})) == Fraction(1, 2)
    assert volume(LpdmSpec.of(3, (), {1, 2, 3})) == 1
    assert volume(LpdmSpec.of(3, {1, 3}, {1, 3})) == 0
    # middle slab of the 4-cube: the second Eulerian number over 4!
    assert volume(LpdmSpec.of(4, {1}, {3, 4})) == Fraction(11, 24)


def test_volume_matches_lattice_count_route(specs_n3):
    for m in specs_n3:
        assert volume(m) == ehrhart_volume(hrep(m))
