"""Dihedral-specific structure: rotation/reflection split, the order bound,
and the named witness constructions for filled/non-filled dihedral groups.

Throughout, the dihedral group of order 2n uses the package encoding:
indices below n are rotations x^i, indices n+i are reflections x^i*y.
"""

from dataclasses import dataclass

from .groups import Group, as_dihedral, make_dihedral
from .pfs import (fills, is_locally_maximal, is_product_free,
                  lift_from_quotient, set_product)
from .sets import ElementSet
from .groups import quotient
from .enumeration import is_filled


def _require_dihedral(g: Group) -> int:
    n = as_dihedral(g)
    if n is None:
        raise ValueError(f"{g.name} does not use the dihedral encoding")
    return n


@dataclass(frozen=True)
class DihedralView:
    """Rotation/reflection accessors for a dihedral group of order 2n."""

    group: Group
    n: int

    @classmethod
    def of(cls, g: Group) -> "DihedralView":
        return cls(group=g, n=_require_dihedral(g))

    def rotations(self) -> ElementSet:
        return ElementSet((1 << self.n) - 1, 2 * self.n)

    def reflections(self) -> ElementSet:
        return ElementSet(((1 << self.n) - 1) << self.n, 2 * self.n)

    def rot(self, s: ElementSet) -> ElementSet:
        return s & self.rotations()

    def ref(self, s: ElementSet) -> ElementSet:
        return s & self.reflections()

    def m1(self) -> ElementSet:
        """The reflection coset, the non-identity coset of <x>."""
        return self.reflections()

    def m2(self) -> ElementSet:
        """Odd rotations and even reflections (n even only)."""
        return self._odd_even_coset(even_reflections=True)

    def m3(self) -> ElementSet:
        """Odd rotations and odd reflections (n even only)."""
        return self._odd_even_coset(even_reflections=False)

    def _odd_even_coset(self, even_reflections: bool) -> ElementSet:
        if self.n % 2:
            raise ValueError("this maximal-subgroup coset exists only for even n")
        n = self.n
        rot = sum(1 << i for i in range(1, n, 2))
        offset = 0 if even_reflections else 1
        ref = sum(1 << (n + i) for i in range(offset, n, 2))
        return ElementSet(rot | ref, 2 * n)


def rot_ref_split(g: Group, s: ElementSet) -> tuple[ElementSet, ElementSet]:
    """Split a subset into its rotation and reflection parts."""
    view = DihedralView.of(g)
    if s.size != g.order:
        raise ValueError("set is bound to a different group order")
    return view.rot(s), view.ref(s)


def reflection_coverage(g: Group, s: ElementSet) -> bool:
    """Whether B u AB u A^-1B covers all reflections (A, B the rotation and
    reflection parts of s).  Holds for every locally maximal set."""
    view = DihedralView.of(g)
    if not is_product_free(g, s):
        raise ValueError("reflection coverage is defined for product-free sets")
    a = view.rot(s)
    b = view.ref(s)
    covered = b
    if a and b:
        a_inv = ElementSet.from_indices(
            [(-i) % view.n for i in a], g.order)
        covered = covered | set_product(g, a, b) | set_product(g, a_inv, b)
    return covered == view.reflections()


def size_bound(g: Group, s: ElementSet) -> tuple[bool, int]:
    """The dihedral order bound |G| <= |S|^2 + |S| for locally maximal sets.

    Returns (bound_holds, bound_value); requires s locally maximal.
    """
    _require_dihedral(g)
    if not is_locally_maximal(g, s):
        raise ValueError("size bound applies to locally maximal sets only")
    value = len(s) ** 2 + len(s)
    return g.order <= value, value


@dataclass(frozen=True)
class SWConstruction:
    """The middle-block set of the dihedral group of order 2(6k+1), with
    its two one-reflection-larger product-free extensions."""

    k: int
    n: int
    group: Group
    s: ElementSet
    v: ElementSet
    u: ElementSet


def sw_construction(k: int) -> SWConstruction:
    """Build the middle-block set S = {x^(2k+1)..x^(4k), x^(2k+1)y..x^(4k)y}
    in the dihedral group of order 2(6k+1), with the extensions
    V = S u {x^(2k)y} and U = S u {x^(4k+1)y}.

    Post-checked: S, V, U product-free; S is not locally maximal; V is
    locally maximal and fills; the group splits as V + VV.
    """
    if k < 1:
        raise ValueError(f"construction parameter must be >= 1, got {k}")
    n = 6 * k + 1
    g = make_dihedral(n)
    rot = range(2 * k + 1, 4 * k + 1)
    s = g.set(list(rot) + [n + i for i in rot])
    v = s.add(n + 2 * k)
    u = s.add(n + 4 * k + 1)
    if not (len(s) == 4 * k and len(v) == 4 * k + 1 and len(u) == 4 * k + 1):
        raise RuntimeError("internal error: construction has wrong sizes")
    for name, subset in (("S", s), ("V", v), ("U", u)):
        if not is_product_free(g, subset):
            raise RuntimeError(f"internal error: {name} is not product-free")
    if is_locally_maximal(g, s):
        raise RuntimeError("internal error: S should not be locally maximal")
    if not is_locally_maximal(g, v):
        raise RuntimeError("internal error: V should be locally maximal")
    if not fills(g, v):
        raise RuntimeError("internal error: V should fill the group")
    vv = set_product(g, v, v)
    expected_vv = g.set(
        list(range(0, 2 * k + 1)) + list(range(4 * k + 1, 6 * k + 1))
        + [n + i for i in range(0, 2 * k)]
        + [n + i for i in range(4 * k + 1, 6 * k + 1)])
    if vv != expected_vv:
        raise RuntimeError("internal error: VV does not match its block form")
    if not v.isdisjoint(vv) or (v | vv) != g.full_set():
        raise RuntimeError("internal error: the group is not V + VV")
    return SWConstruction(k=k, n=n, group=g, s=s, v=v, u=u)


@dataclass(frozen=True)
class QuotientWitnessChain:
    """A non-filling witness pulled back through a quotient of order 16."""

    group: Group
    subgroup: ElementSet
    quotient_group: Group
    quotient_witness: ElementSet
    lifted_witness: ElementSet


def not_filled_by_quotient(n: int) -> QuotientWitnessChain | None:
    """For 8 | n, a verified non-filling locally maximal set of the dihedral
    group of order 2n, lifted from its order-16 dihedral quotient by <x^8>.

    Returns None when 8 does not divide n.
    """
    if n < 2:
        raise ValueError(f"dihedral parameter must be >= 2, got {n}")
    if n % 8:
        return None
    g = make_dihedral(n)
    subgroup = g.set(range(0, n, 8))
    quot, _ = quotient(g, subgroup)
    if quot.order != 16:
        raise RuntimeError("internal error: quotient should have order 16")
    verdict = is_filled(quot)
    if verdict.filled or verdict.witness is None:
        raise RuntimeError(
            "internal error: the order-16 dihedral quotient must not be filled")
    lifted = lift_from_quotient(g, subgroup, verdict.witness)
    if not is_locally_maximal(g, lifted) or fills(g, lifted):
        raise RuntimeError("internal error: lifted witness failed its post-check")
    return QuotientWitnessChain(group=g, subgroup=subgroup,
                                quotient_group=quot,
                                quotient_witness=verdict.witness,
                                lifted_witness=lifted)
