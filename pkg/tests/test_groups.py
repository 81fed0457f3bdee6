"""Group construction, validation, subgroups, quotients, automorphisms."""

import math

import pytest

from lmpfs import (CapacityError, Group, GroupValidationError, automorphisms,
                   classify_up_to_aut, direct_product, element_meta,
                   enumerate_lmpfs, make_cyclic, make_dihedral,
                   make_elementary_abelian_2, make_generalized_quaternion,
                   normal_subgroups, quotient, subgroups)
from lmpfs.groups import as_cyclic, as_dihedral, as_generalized_quaternion

from conftest import brute_force_subgroup_masks, is_normal_oracle


# -- constructors ------------------------------------------------------------

def test_cyclic_trivial_group():
    g = make_cyclic(1)
    assert g.order == 1
    assert g.element_orders == (1,)


def test_cyclic_examples():
    assert make_cyclic(3).element_orders == (1, 3, 3)
    assert make_cyclic(5).inverses == (0, 4, 3, 2, 1)
    with pytest.raises(ValueError):
        make_cyclic(0)


def test_dihedral_reflections_are_involutions():
    g = make_dihedral(3)
    assert [g.element_orders[i] for i in (3, 4, 5)] == [2, 2, 2]


def test_dihedral_presentation_product():
    g = make_dihedral(7)
    assert g.mul(1, 7) == 8  # x * y = x*y


def test_dihedral_unique_rotation_involution():
    g = make_dihedral(6)
    assert g.element_orders[3] == 2
    rotation_involutions = [i for i in range(6) if g.element_orders[i] == 2]
    assert rotation_involutions == [3]


def test_dihedral_rejects_small_parameter():
    with pytest.raises(ValueError):
        make_dihedral(1)


def test_elementary_abelian():
    assert make_elementary_abelian_2(1).order == 2
    g = make_elementary_abelian_2(2)
    assert all(g.element_orders[i] == 2 for i in range(1, 4))
    assert make_elementary_abelian_2(3).name == "C2^3"
    with pytest.raises(ValueError):
        make_elementary_abelian_2(0)


def test_quaternion_unique_involution():
    g = make_generalized_quaternion(2)
    involutions = [i for i in range(8) if g.element_orders[i] == 2]
    assert involutions == [2]  # a^2


def test_quaternion_b_squares_to_a_n():
    g = make_generalized_quaternion(2)
    assert g.element_orders[4] == 4  # b
    assert g.mul(4, 4) == 2  # b^2 = a^2


def test_quaternion_cyclic_half():
    g = make_generalized_quaternion(3)
    assert g.order == 12
    # <a> has index 2: the first 6 indices close under multiplication
    for i in range(6):
        for j in range(6):
            assert g.mul(i, j) < 6
    with pytest.raises(ValueError):
        make_generalized_quaternion(1)


def test_direct_product_klein_matches_elementary_abelian():
    prod = direct_product(make_cyclic(2), make_cyclic(2))
    e22 = make_elementary_abelian_2(2)
    rep_a = classify_up_to_aut(prod, enumerate_lmpfs(prod))
    rep_b = classify_up_to_aut(e22, enumerate_lmpfs(e22))
    assert [ (o.size, o.orbit_length) for o in rep_a.orbits] == \
        [(o.size, o.orbit_length) for o in rep_b.orbits]


def test_direct_product_d8_c2():
    g = direct_product(make_dihedral(4), make_cyclic(2))
    assert g.order == 16
    assert g.name == "D8xC2"


def test_direct_product_coprime_cyclic():
    g = direct_product(make_cyclic(3), make_cyclic(5))
    assert g.order == 15
    assert g.is_abelian()
    assert max(g.element_orders) == 15  # cyclic of order 15


def test_direct_product_capacity():
    with pytest.raises(CapacityError):
        direct_product(make_cyclic(100), make_cyclic(100), max_order=4096)


# -- validation ---------------------------------------------------------------

def test_rejects_non_latin_table():
    with pytest.raises(GroupValidationError):
        Group("bad", [[0, 0], [1, 1]])


def test_rejects_wrong_identity():
    with pytest.raises(GroupValidationError):
        Group("bad", [[1, 0], [0, 1]])


def test_rejects_non_associative_table():
    # the rows are permutations and 0 is an identity, but this is a loop,
    # not a group (order-5 non-associative Latin square)
    table = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(GroupValidationError):
        Group("loop5", table)


def test_rejects_ragged_table():
    with pytest.raises(GroupValidationError):
        Group("bad", [[0, 1], [1]])


# -- element metadata ---------------------------------------------------------

def test_element_meta_identity():
    g = make_dihedral(7)
    assert element_meta(g, 0) == (1, False, 0)


def test_element_meta_reflection():
    g = make_dihedral(7)
    order, is_involution, inverse = element_meta(g, 9)
    assert (order, is_involution, inverse) == (2, True, 9)


def test_element_meta_rotation():
    g = make_dihedral(7)
    assert element_meta(g, 1) == (7, False, 6)
    with pytest.raises(ValueError):
        element_meta(g, 14)


# -- subgroups and quotients ---------------------------------------------------

def test_normal_subgroups_prime_cyclic():
    g = make_cyclic(5)
    assert [len(h) for h in normal_subgroups(g)] == [1, 5]


def test_normal_subgroups_dihedral_against_oracle():
    g = make_dihedral(6)
    expected = sorted(m for m in brute_force_subgroup_masks(g)
                      if is_normal_oracle(g, m))
    got = sorted(h.bits for h in normal_subgroups(g))
    assert got == expected


def test_subgroups_against_oracle_assorted():
    for g in (make_dihedral(4), make_generalized_quaternion(2),
              make_cyclic(12), make_elementary_abelian_2(3)):
        assert sorted(h.bits for h in subgroups(g)) == \
            sorted(brute_force_subgroup_masks(g))


def test_rotation_subgroup_always_normal():
    for n in (3, 5, 8):
        g = make_dihedral(n)
        rotations = g.set(range(n))
        assert rotations in normal_subgroups(g)


def test_normal_subgroups_sorted_by_size_then_mask():
    subs = normal_subgroups(make_dihedral(6))
    keys = [(len(h), h.bits) for h in subs]
    assert keys == sorted(keys)


def test_quotient_d12_by_rotation_squares():
    g = make_dihedral(6)
    h = g.set([0, 2, 4])  # <x^2>
    q, proj = quotient(g, h)
    assert q.order == 4
    assert proj[0] == 0
    # projection respects products
    for a in range(g.order):
        for b in range(g.order):
            assert proj[g.mul(a, b)] == q.mul(proj[a], proj[b])


def test_quotient_d32_by_x8_is_dihedral16():
    g = make_dihedral(16)
    h = g.set(range(0, 16, 8))
    q, _ = quotient(g, h)
    assert q.order == 16
    # the order profile of the order-16 dihedral group is unique among
    # order-16 groups: one involution in nine, two of order 4, four of order 8
    assert sorted(q.element_orders) == sorted(make_dihedral(8).element_orders)
    assert not q.is_abelian()


def test_quotient_c15():
    g = make_cyclic(15)
    q, _ = quotient(g, g.set([0, 5, 10]))
    assert q.order == 5


def test_quotient_rejects_non_normal():
    g = make_dihedral(3)
    with pytest.raises(ValueError):
        quotient(g, g.set([0, 3]))  # reflection subgroup is not normal
    with pytest.raises(ValueError):
        quotient(g, g.set([0, 1]))  # not a subgroup at all


# -- automorphisms --------------------------------------------------------------

def dihedral_automorphism_oracle(n: int) -> set[tuple[int, ...]]:
    """x -> x^a (gcd(a, n) = 1), y -> x^b*y, built directly."""
    out = set()
    for a in range(1, n):
        if math.gcd(a, n) != 1:
            continue
        for b in range(n):
            perm = [0] * (2 * n)
            for i in range(n):
                perm[i] = (a * i) % n
                perm[n + i] = n + (a * i + b) % n
            out.add(tuple(perm))
    return out


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7, 10])
def test_dihedral_automorphisms_match_generator_oracle(n):
    g = make_dihedral(n)
    auts = automorphisms(g)
    euler_phi = sum(1 for a in range(1, n) if math.gcd(a, n) == 1)
    assert len(auts) == n * euler_phi
    assert {a.perm for a in auts} == dihedral_automorphism_oracle(n)


def test_aut_klein_four_has_six_elements():
    assert len(automorphisms(make_elementary_abelian_2(2))) == 6


def test_aut_identity_first_lexicographic_order():
    g = make_generalized_quaternion(2)
    auts = automorphisms(g)
    perms = [a.perm for a in auts]
    assert perms[0] == tuple(range(8))
    assert perms == sorted(perms)


def test_aut_closed_under_composition_and_inverse():
    for g in (make_dihedral(5), make_generalized_quaternion(3),
              make_cyclic(8), make_elementary_abelian_2(3)):
        auts = automorphisms(g)
        assert len(auts) <= 200
        perms = {a.perm for a in auts}
        for a in auts:
            assert a.inverse().perm in perms
            for b in auts:
                assert a.compose(b).perm in perms


def test_aut_homomorphism_identity_holds():
    g = make_dihedral(6)
    for a in automorphisms(g):
        for u in range(g.order):
            for v in range(g.order):
                assert a(g.mul(u, v)) == g.mul(a(u), a(v))


def test_aut_moves_central_family_transitively_in_d12():
    # the size-4 sets {x^3, x^i*y, x^(i+1)*y, x^(i+2)*y} form one orbit
    g = make_dihedral(6)
    auts = automorphisms(g)
    family = [g.set([3, 6 + i, 6 + (i + 1) % 6, 6 + (i + 2) % 6])
              for i in range(6)]
    orbit = {a.apply(family[0]).bits for a in auts}
    assert {s.bits for s in family} <= orbit


def test_aut_capacity_errors():
    with pytest.raises(CapacityError):
        automorphisms(make_cyclic(100), max_order=64)
    with pytest.raises(CapacityError):
        automorphisms(make_elementary_abelian_2(4), max_count=100)


def test_trivial_group_automorphisms():
    assert [a.perm for a in automorphisms(make_cyclic(1))] == [(0,)]


# -- family detection -----------------------------------------------------------

def test_family_detection_structural():
    g = Group("anon", make_dihedral(5).table)
    assert as_dihedral(g) == 5
    g2 = Group("anon", make_generalized_quaternion(3).table)
    assert as_generalized_quaternion(g2) == 3
    g3 = Group("anon", make_cyclic(9).table)
    assert as_cyclic(g3) == 9
    assert as_dihedral(make_cyclic(8)) is None
