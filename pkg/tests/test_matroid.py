from fractions import Fraction

import pytest

from lpdm import (
    ArgumentError,
    DomainError,
    LpdmSpec,
    OrderError,
    SetFamily,
    SubsetMask,
    TypeALpmSpec,
    catalan_spec,
    classify_elements,
    contract,
    delete,
    direct_sum,
    dual,
    envelope_bases,
    envelope_ground,
    envelope_project,
    exchange_witness,
    family_interval_bounds,
    feasible_sets,
    homogeneous_component,
    project_element,
    relabel,
    signed_label_set,
    verify_exchange,
)


def fam(*sets):
    return {frozenset(s) for s in sets}


def test_spec_validates():
    with pytest.raises(ArgumentError):
        LpdmSpec.of(3, lower={4})
    with pytest.raises(ArgumentError):
        LpdmSpec((1, 1, 2), frozenset(), frozenset())
    with pytest.raises(OrderError):
        LpdmSpec.of(3, lower={1, 2}, upper={3})
    m = LpdmSpec.of(3, {1}, {1, 3})
    assert m.n == 3 and m.standard_ground()
    assert m.position(3) == 3
    with pytest.raises(ArgumentError):
        m.position(9)


def test_set_family_canonical_order():
    f = SetFamily((1, 2, 3), ({3}, {1, 2}, {3}, set(), {1}))
    assert f.members == (frozenset(), frozenset({1}), frozenset({3}), frozenset({1, 2}))
    assert len(f) == 4
    assert {1, 2} in f and {2, 3} not in f
    assert f.sorted_member_lists() == [[], [1], [3], [1, 2]]
    with pytest.raises(ArgumentError):
        SetFamily((1, 2), ({3},))


def test_feasible_sets_worked():
    got = set(feasible_sets(LpdmSpec.of(3, {1}, {1, 3})).members)
    assert got == fam({1}, {2}, {3}, {1, 2}, {1, 3})


def test_feasible_sets_six_set_interval():
    got = set(feasible_sets(LpdmSpec.of(5, {3, 4}, {2, 3, 5})).members)
    assert got == fam({3, 4}, {3, 5}, {1, 3, 4}, {1, 3, 5}, {2, 3, 4}, {2, 3, 5})


def test_feasible_sets_fifteen_set_interval():
    got = set(feasible_sets(LpdmSpec.of(5, {1, 3}, {2, 3, 5})).members)
    want = fam(
        {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4}, {1, 5}, {2, 5}, {3, 5},
        {1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5}, {2, 3, 4}, {2, 3, 5},
    )
    assert got == want and len(got) == 15


def test_exchange_holds_on_intervals(specs_n3):
    for m in specs_n3:
        assert verify_exchange(feasible_sets(m))


def test_exchange_witness_on_violating_family():
    bad = SetFamily((1, 2, 3), (frozenset(), frozenset({1}), frozenset({1, 2, 3})))
    witness = exchange_witness(bad)
    assert witness is not None
    a1, a2, e = witness
    assert e in (a1 ^ a2)
    assert not verify_exchange(bad)
    with pytest.raises(DomainError):
        exchange_witness(SetFamily((1, 2), ()))


def test_classify_elements():
    loops, coloops = classify_elements(LpdmSpec.of(3, {2}, {2}))
    assert coloops == frozenset({2}) and loops == frozenset({1, 3})
    loops, coloops = classify_elements(LpdmSpec.of(3, {1}, {1, 3}))
    assert loops == frozenset() and coloops == frozenset()


def test_dual_worked():
    assert dual(LpdmSpec.of(3, {1}, {1, 3})) == LpdmSpec.of(3, {2}, {2, 3})
    m = LpdmSpec.of(4, {2, 3}, {1, 3, 4})
    assert dual(dual(m)) == m


def test_dual_complements_family():
    m = LpdmSpec.of(4, {2}, {1, 4})
    g = frozenset(m.ground)
    want = {g - a for a in feasible_sets(m).members}
    assert set(feasible_sets(dual(m)).members) == want


def test_delete_worked():
    got = delete(LpdmSpec.of(5, {3, 4}, {2, 3, 5}), 5)
    assert got.ground == (1, 2, 3, 4)
    assert (got.lower, got.upper) == (frozenset({3, 4}), frozenset({2, 3, 4}))
    want = {a for a in feasible_sets(LpdmSpec.of(5, {3, 4}, {2, 3, 5})).members if 5 not in a}
    assert set(feasible_sets(got).members) == want


def test_delete_coloop_rejected():
    with pytest.raises(DomainError):
        delete(LpdmSpec.of(2, {2}, {2}), 2)


def test_contract_worked():
    got = contract(LpdmSpec.of(5, {3, 4}, {2, 3, 5}), 5)
    assert got.ground == (1, 2, 3, 4)
    assert (got.lower, got.upper) == (frozenset({3}), frozenset({2, 3}))
    assert set(feasible_sets(got).members) == fam({3}, {1, 3}, {2, 3})


def test_contract_loop_rejected():
    with pytest.raises(DomainError):
        contract(LpdmSpec.of(2, {1}, {1}), 2)


def test_minors_match_filters(specs_n3):
    for m in specs_n3:
        members = set(feasible_sets(m).members)
        for label in m.ground:
            keep = {a for a in members if label not in a}
            if keep:
                assert set(feasible_sets(delete(m, label)).members) == keep
            through = {a - {label} for a in members if label in a}
            if through:
                assert set(feasible_sets(contract(m, label)).members) == through


def test_direct_sum_bounds_union():
    left = LpdmSpec.of(1, {1}, {1})
    right = relabel(LpdmSpec.of(1, frozenset(), {1}), (2,))
    total = direct_sum(left, right)
    assert total == LpdmSpec((1, 2), frozenset({1}), frozenset({1, 2}))
    # the interval of the summed bounds can exceed the set of pairwise
    # unions: {2} is feasible here but is not a union of summand sets
    assert set(feasible_sets(total).members) == fam({1}, {2}, {1, 2})


def test_direct_sum_rejects_overlap():
    m = LpdmSpec.of(2, {1}, {1})
    with pytest.raises(ArgumentError):
        direct_sum(m, m)


def test_relabel():
    m = LpdmSpec.of(3, {1}, {1, 3})
    r = relabel(m, (10, 20, 30))
    assert r.ground == (10, 20, 30)
    assert (r.lower, r.upper) == (frozenset({10}), frozenset({10, 30}))
    with pytest.raises(ArgumentError):
        relabel(m, (1, 1, 2))
    with pytest.raises(ArgumentError):
        relabel(m, (1, 2))


def test_homogeneous_component_worked():
    fixed = LpdmSpec.of(6, {1, 3, 5}, {2, 4, 5, 6})
    c3 = homogeneous_component(fixed, 3)
    assert (c3.lower, c3.upper) == ((1, 3, 5), (4, 5, 6))
    c4 = homogeneous_component(fixed, 4)
    assert (c4.lower, c4.upper) == ((1, 2, 3, 5), (2, 4, 5, 6))
    assert homogeneous_component(fixed, 6) is None
    with pytest.raises(ArgumentError):
        homogeneous_component(fixed, 7)


def test_homogeneous_component_matches_size_filter(specs_n3):
    for m in specs_n3:
        members = set(feasible_sets(m).members)
        for k in range(m.n + 1):
            comp = homogeneous_component(m, k)
            want = {a for a in members if len(a) == k}
            if comp is None:
                assert not want
            else:
                assert set(comp.bases().members) == want


def test_type_a_spec_validates():
    with pytest.raises(ArgumentError):
        TypeALpmSpec((1, 2, 3), 2, (1,), (2, 3))
    with pytest.raises(ArgumentError):
        TypeALpmSpec((1, 2, 3), 2, (2, 1), (2, 3))
    with pytest.raises(ArgumentError):
        TypeALpmSpec((1, 2, 3), 2, (1, 3), (1, 2))


def test_envelope_ground_and_encoding():
    assert envelope_ground(2) == (-2, -1, 1, 2)
    assert signed_label_set(SubsetMask(3, frozenset({1, 3}))) == frozenset({1, -2, 3})


def test_envelope_bases_smallest_case():
    f = envelope_bases(LpdmSpec.of(1, frozenset(), {1}))
    assert f.ground == (-1, 1)
    assert set(f.members) == fam({-1}, {1})
    with pytest.raises(ArgumentError):
        envelope_bases(relabel(LpdmSpec.of(2, {1}, {1}), (3, 4)))


def test_envelope_project_worked():
    assert envelope_project(frozenset({-5, -1, 2, 3, 4}), 5) == (0, 1, 1, 1, 0)
    assert envelope_project(frozenset({1, -1}), 2) == (Fraction(1, 2), Fraction(1, 2))
    with pytest.raises(ArgumentError):
        envelope_project(frozenset({1}), 2)
    with pytest.raises(ArgumentError):
        envelope_project(frozenset({1, 7}), 2)


def test_project_element_gap():
    m = LpdmSpec.of(5, {3, 4}, {2, 3, 5})
    proj = project_element(feasible_sets(m), 4)
    assert proj.ground == (1, 2, 3, 5)
    assert set(proj.members) == fam({3}, {1, 3}, {2, 3}, {3, 5}, {1, 3, 5}, {2, 3, 5})
    lo, hi, is_interval = family_interval_bounds(proj)
    assert lo == frozenset({3}) and hi == frozenset({2, 3, 5})
    assert not is_interval
    with pytest.raises(ArgumentError):
        project_element(proj, 4)


def test_project_loop_and_coloop():
    m = LpdmSpec.of(3, {2}, {2})
    members = feasible_sets(m)
    dropped_loop = project_element(members, 1)
    assert set(dropped_loop.members) == set(feasible_sets(delete(m, 1)).members)
    dropped_coloop = project_element(members, 2)
    assert set(dropped_coloop.members) == set(feasible_sets(contract(m, 2)).members)


def test_family_interval_bounds_on_intervals(specs_n3):
    for m in specs_n3:
        lo, hi, is_interval = family_interval_bounds(feasible_sets(m))
        assert is_interval and lo == m.lower and hi == m.upper
    with pytest.raises(DomainError):
        family_interval_bounds(SetFamily((1,), ()))


def test_catalan_spec():
    assert catalan_spec(2) == LpdmSpec.of(4, frozenset(), {1, 3})
    assert len(feasible_sets(catalan_spec(2))) == 6
    assert len(feasible_sets(catalan_spec(3))) == 20
    with pytest.raises(ArgumentError):
        catalan_spec(0)
