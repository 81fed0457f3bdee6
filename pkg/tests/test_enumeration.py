"""Enumeration soundness, classification, filled verdicts, scans."""

import json

import pytest

from lmpfs import (CapacityError, ElementSet, GroupSpec, automorphisms,
                   canonical_form, classify_up_to_aut, enumerate_lmpfs,
                   filled_summary, fills, is_filled, is_locally_maximal,
                   is_product_free, lift_from_quotient, make_cyclic,
                   make_dihedral, make_elementary_abelian_2,
                   make_generalized_quaternion, min_lmpfs_size,
                   normal_subgroups, quotient, scan_filled)

from conftest import (brute_force_maximal_masks,
                      brute_force_product_free_masks)


# -- soundness and completeness ---------------------------------------------

@pytest.mark.parametrize("g", [
    make_cyclic(3), make_cyclic(8), make_dihedral(3), make_dihedral(6),
    make_generalized_quaternion(2), make_elementary_abelian_2(3),
], ids=lambda g: g.name)
def test_enumeration_matches_brute_force(g):
    pf = brute_force_product_free_masks(g)
    expected = sorted(brute_force_maximal_masks(g, pf))
    got = sorted(s.bits for s in enumerate_lmpfs(g))
    assert got == expected


def test_enumerated_sets_satisfy_closure_criterion():
    for g in (make_dihedral(7), make_generalized_quaternion(3)):
        for s in enumerate_lmpfs(g):
            assert is_product_free(g, s)
            assert is_locally_maximal(g, s)


def test_c3_enumeration():
    g = make_cyclic(3)
    sets = enumerate_lmpfs(g)
    assert [s.indices() for s in sets] == [(1,), (2,)]
    report = classify_up_to_aut(g, sets)
    assert len(report.orbits) == 1


def test_d6_size3_is_reflection_coset():
    g = make_dihedral(3)
    sets = enumerate_lmpfs(g, size=3)
    assert [s.indices() for s in sets] == [(3, 4, 5)]


def test_d14_has_no_size6_sets():
    assert enumerate_lmpfs(make_dihedral(7), size=6) == []


def test_size_filter_consistent_with_full_enumeration():
    g = make_dihedral(8)
    full = enumerate_lmpfs(g)
    for size in range(1, 9):
        filtered = enumerate_lmpfs(g, size=size)
        assert filtered == [s for s in full if len(s) == size]


def test_max_size_at_most_half_group_order():
    for g in (make_dihedral(6), make_cyclic(12),
              make_generalized_quaternion(3)):
        for s in enumerate_lmpfs(g):
            assert len(s) <= g.order // 2


def test_half_order_sets_are_index2_coset_complements():
    # every product-free set of size |G|/2 is the complement of an index-2
    # subgroup, is locally maximal, and fills
    for g in (make_dihedral(6), make_cyclic(8),
              make_elementary_abelian_2(3)):
        for s in enumerate_lmpfs(g, size=g.order // 2):
            complement = (g.full_set() - s)
            members = list(complement)
            assert 0 in members
            assert all(g.mul(a, b) in complement
                       for a in members for b in members)
            assert is_locally_maximal(g, s)
            assert fills(g, s)


def test_enumeration_capacity():
    with pytest.raises(CapacityError):
        enumerate_lmpfs(make_cyclic(70, max_order=100))
    with pytest.raises(CapacityError):
        enumerate_lmpfs(make_cyclic(40), max_order=30)


def test_enumeration_cap_env_override(monkeypatch):
    monkeypatch.setenv("LMPFS_MAX_ORDER", "10")
    with pytest.raises(CapacityError):
        enumerate_lmpfs(make_dihedral(7))
    monkeypatch.setenv("LMPFS_MAX_ORDER", "20")
    assert enumerate_lmpfs(make_dihedral(7))


def test_trivial_group_has_no_sets():
    assert enumerate_lmpfs(make_cyclic(1)) == []


# -- determinism ----------------------------------------------------------------

def test_worker_counts_give_identical_output():
    g = make_dihedral(7)
    payloads = []
    for workers in (1, 2, 8):
        sets = enumerate_lmpfs(g, workers=workers)
        payloads.append(json.dumps([list(s) for s in sets]))
    assert payloads[0] == payloads[1] == payloads[2]


def test_output_sorted_by_bitmask():
    sets = enumerate_lmpfs(make_dihedral(6))
    bits = [s.bits for s in sets]
    assert bits == sorted(bits)
    assert len(set(bits)) == len(bits)


# -- classification ----------------------------------------------------------------

def test_classify_d14_size4():
    g = make_dihedral(7)
    report = classify_up_to_aut(g, enumerate_lmpfs(g, size=4))
    assert len(report.orbits) == 1
    target = canonical_form(g, g.set([2, 3, 7, 13]))
    assert report.orbits[0].canonical == target


def test_classify_d12_size4_is_four_orbits():
    g = make_dihedral(6)
    report = classify_up_to_aut(g, enumerate_lmpfs(g, size=4))
    assert len(report.orbits) == 4
    listed = [
        g.set([3, 6, 7, 8]),    # {x^3, y, x*y, x^2*y}
        g.set([2, 3, 6, 11]),   # {x^2, x^3, y, x^5*y}
        g.set([1, 5, 6, 9]),    # {x, x^5, y, x^3*y}
        g.set([1, 4, 6, 9]),    # {x, x^4, y, x^3*y}
    ]
    got = {o.canonical.indices() for o in report.orbits}
    want = {canonical_form(g, s).indices() for s in listed}
    assert got == want


def test_classify_singleton_orbit_lengths():
    g = make_dihedral(5)
    auts = automorphisms(g)
    sets = enumerate_lmpfs(g, size=5)
    report = classify_up_to_aut(g, sets, auts=auts)
    assert report.total == len(sets)
    for orbit in report.orbits:
        assert len(auts) % orbit.orbit_length == 0  # orbit-stabilizer


def test_classify_counts_and_sizes():
    g = make_dihedral(7)
    report = classify_up_to_aut(g, enumerate_lmpfs(g))
    assert report.min_size == 4
    assert report.max_size == 7
    assert 6 not in report.counts_by_size
    assert sum(c[0] for c in report.counts_by_size.values()) == report.total


def test_classify_rejects_non_closed_input():
    g = make_dihedral(6)
    sets = enumerate_lmpfs(g, size=4)
    with pytest.raises(RuntimeError):
        classify_up_to_aut(g, sets[:1])


def test_canonical_is_lex_least_sorted_tuple():
    g = make_dihedral(7)
    auts = automorphisms(g)
    report = classify_up_to_aut(g, enumerate_lmpfs(g, size=4), auts=auts)
    orbit = report.orbits[0]
    images = [a.apply(orbit.canonical).indices() for a in auts]
    assert orbit.canonical.indices() == min(images)


# -- filled verdicts -------------------------------------------------------------

def test_is_filled_examples():
    assert is_filled(make_dihedral(7)).filled
    assert is_filled(make_cyclic(5)).filled
    assert is_filled(make_cyclic(4)).filled is False
    verdict = is_filled(make_dihedral(8))
    assert not verdict.filled
    assert verdict.witness is not None
    assert not fills(make_dihedral(8), verdict.witness)


def test_d16_witness_in_known_orbit():
    g = make_dihedral(8)
    verdict = is_filled(g)
    y = g.set([1, 6, 8, 12])
    assert canonical_form(g, verdict.witness) == canonical_form(g, y)


def test_is_filled_counts_all_sets():
    g = make_dihedral(7)
    verdict = is_filled(g)
    assert verdict.lmpfs_count == len(enumerate_lmpfs(g))


def test_trivial_group_vacuously_filled():
    verdict = is_filled(make_cyclic(1))
    assert verdict.filled and verdict.lmpfs_count == 0


def test_size_k_sets_never_fill_order_k_times_k_plus_1():
    # in a dihedral group of order k(k+1), no size-k set fills (k = 3, 4, 5)
    for k in (3, 4, 5):
        order = k * (k + 1)
        g = make_dihedral(order // 2)
        for s in enumerate_lmpfs(g, size=k):
            assert not fills(g, s)


def test_min_lmpfs_size_examples():
    assert min_lmpfs_size(make_dihedral(3)) == 2
    assert min_lmpfs_size(make_dihedral(7)) == 4
    assert min_lmpfs_size(make_cyclic(2)) == 1
    with pytest.raises(ValueError):
        min_lmpfs_size(make_cyclic(1))


def test_no_size1_or_size2_sets_beyond_small_dihedral():
    # size-1 never occurs for n > 1; size-2 only in the order-4 and order-6
    # groups, automorphic to {x, y}
    for n in range(2, 11):
        g = make_dihedral(n)
        assert enumerate_lmpfs(g, size=1) == []
        size2 = enumerate_lmpfs(g, size=2)
        if n in (2, 3):
            target = canonical_form(g, g.set([1, n]))
            assert {canonical_form(g, s) for s in size2} == {target}
        else:
            assert size2 == []


# -- filled scans ------------------------------------------------------------------

def test_scan_dihedral_family():
    specs = [GroupSpec(kind="dihedral", param=n) for n in range(2, 17)]
    entries = scan_filled(specs, max_order=32)
    filled = {e.spec.param for e in entries if e.verdict.filled}
    assert filled == {2, 3, 4, 5, 6, 7, 11}


def test_scan_records_errors_and_continues():
    specs = [GroupSpec(kind="dihedral", param=1),
             GroupSpec(kind="cyclic", param=5)]
    entries = scan_filled(specs, max_order=31)
    assert entries[0].error is not None
    assert entries[1].verdict.filled


def test_scan_empty():
    assert scan_filled([], max_order=31) == []


def test_scan_respects_max_order():
    specs = [GroupSpec(kind="cyclic", param=n) for n in (5, 20)]
    entries = scan_filled(specs, max_order=10)
    assert [e.order for e in entries] == [5]


def test_filled_summary_grouping():
    specs = [GroupSpec(kind="cyclic", param=3),
             GroupSpec(kind="dihedral", param=3),
             GroupSpec(kind="cyclic", param=7)]
    summary = filled_summary(scan_filled(specs, max_order=31))
    assert summary == {3: ["C3"], 6: ["D6"]}


# -- structural facts over the catalog -------------------------------------------

def test_quotient_heredity_up_to_24(catalog_entries):
    # if G is filled then so is every proper quotient
    for entry in catalog_entries:
        if entry.order > 24:
            continue
        g = entry.group
        if not is_filled(g).filled:
            continue
        for n in normal_subgroups(g):
            if len(n) in (1, g.order):
                continue
            q, _ = quotient(g, n)
            assert is_filled(q).filled, (entry.name, n.indices())


def test_index3_normal_subgroup_forces_not_filled(catalog_entries):
    # every group of order > 3 with an index-3 normal subgroup is not
    # filled, witnessed by the lift of a non-identity quotient element
    found = 0
    for entry in catalog_entries:
        if entry.order <= 3:
            continue
        g = entry.group
        for n in normal_subgroups(g):
            if len(n) * 3 != g.order:
                continue
            found += 1
            assert not is_filled(g).filled, entry.name
            witness = lift_from_quotient(g, n, ElementSet.from_indices([1], 3))
            assert is_locally_maximal(g, witness)
            assert not fills(g, witness)
            break
    assert found >= 8  # plenty of such groups below order 32
