"""Finite groups as validated Cayley tables with 0-based element indices.

Conventions fixed across the package:

* the identity is always element 0;
* cyclic groups list powers of the generator in order (element i is x^i);
* dihedral groups of order 2n list the n rotations first (element i is x^i)
  and then the n reflections (element n+i is x^i*y);
* generalized quaternion groups of order 4n list the 2n powers of a first
  and then the 2n products a^i*b;
* direct products use pair encoding (a, b) -> a*|H| + b.

Every constructor output passes full validation: Latin-square rows and
columns, identity law, two-sided inverses, and the O(n^3) associativity
check.
"""

from dataclasses import dataclass

import numpy as np

from .errors import CapacityError, GroupValidationError
from .sets import ElementSet

DEFAULT_CONSTRUCTION_CAP = 4096
DEFAULT_AUT_ORDER_CAP = 64
DEFAULT_AUT_COUNT_CAP = 1_000_000


class Group:
    """A finite group given by its multiplication table.

    Immutable after construction; safe to share between workers.
    """

    __slots__ = ("name", "order", "table", "inverses", "element_orders",
                 "family", "family_param")

    def __init__(self, name: str, table, *, family: str | None = None,
                 family_param: int | None = None):
        rows = tuple(tuple(int(x) for x in row) for row in table)
        _validate_table(rows)
        object.__setattr__(self, "name", str(name))
        object.__setattr__(self, "order", len(rows))
        object.__setattr__(self, "table", rows)
        object.__setattr__(self, "inverses", _inverses_from_table(rows))
        object.__setattr__(self, "element_orders", _element_orders(rows))
        object.__setattr__(self, "family", family)
        object.__setattr__(self, "family_param", family_param)

    def __setattr__(self, name, value):
        raise AttributeError("Group is immutable")

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def elements(self) -> range:
        return range(self.order)

    def set(self, indices) -> ElementSet:
        """Convenience constructor for an ElementSet bound to this group."""
        return ElementSet.from_indices(indices, self.order)

    def full_set(self) -> ElementSet:
        return ElementSet.full(self.order)

    def nonidentity_set(self) -> ElementSet:
        return ElementSet(((1 << self.order) - 1) & ~1, self.order)

    def is_abelian(self) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a]
                   for a in range(self.order) for b in range(a + 1, self.order))

    def __repr__(self) -> str:
        return f"Group({self.name!r}, order={self.order})"


def _validate_table(rows: tuple[tuple[int, ...], ...]) -> None:
    n = len(rows)
    if n == 0:
        raise GroupValidationError("empty multiplication table")
    for i, row in enumerate(rows):
        if len(row) != n:
            raise GroupValidationError(f"row {i} has length {len(row)}, expected {n}")
    t = np.array(rows, dtype=np.int64)
    if t.min() < 0 or t.max() >= n:
        raise GroupValidationError("table entries must be element indices 0..n-1")
    ident = np.arange(n)
    if not (np.sort(t, axis=1) == ident).all():
        raise GroupValidationError("some row is not a permutation (Latin square fails)")
    if not (np.sort(t, axis=0) == ident[:, None]).all():
        raise GroupValidationError("some column is not a permutation (Latin square fails)")
    if not ((t[0] == ident).all() and (t[:, 0] == ident).all()):
        raise GroupValidationError("element 0 is not a two-sided identity")
    # inverses: every row must contain the identity (Latin square guarantees it),
    # and a*b = 0 must force b*a = 0.
    right_inv = np.argmin(t, axis=1)
    if not (t[right_inv, ident] == 0).all():
        raise GroupValidationError("inverses are not two-sided")
    for a in range(n):
        if not (t[t[a]] == t[a][t]).all():
            raise GroupValidationError(f"associativity fails in row {a}")


def _inverses_from_table(rows) -> tuple[int, ...]:
    return tuple(row.index(0) for row in rows)


def _element_orders(rows) -> tuple[int, ...]:
    orders = []
    for a in range(len(rows)):
        k, c = 1, a
        while c != 0:
            c = rows[c][a]
            k += 1
        orders.append(k)
    return tuple(orders)


def _check_cap(order: int, cap: int) -> None:
    if order > cap:
        raise CapacityError(f"group order {order} exceeds cap {cap}")


def make_cyclic(n: int, *, max_order: int = DEFAULT_CONSTRUCTION_CAP) -> Group:
    """Cyclic group of order n; element i is the i-th power of the generator."""
    if n < 1:
        raise ValueError(f"cyclic group order must be >= 1, got {n}")
    _check_cap(n, max_order)
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return Group(f"C{n}", table, family="cyclic", family_param=n)


def make_dihedral(n: int, *, max_order: int = DEFAULT_CONSTRUCTION_CAP) -> Group:
    """Dihedral group of order 2n (n >= 2): rotations 0..n-1, reflections n..2n-1."""
    if n < 2:
        raise ValueError(f"dihedral parameter must be >= 2, got {n}")
    _check_cap(2 * n, max_order)
    table = [[0] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        for j in range(n):
            table[i][j] = (i + j) % n
            table[i][n + j] = n + (i + j) % n
            table[n + i][j] = n + (i - j) % n
            table[n + i][n + j] = (i - j) % n
    return Group(f"D{2 * n}", table, family="dihedral", family_param=n)


def make_elementary_abelian_2(k: int, *, max_order: int = DEFAULT_CONSTRUCTION_CAP) -> Group:
    """Elementary abelian 2-group of order 2^k; the product is bitwise XOR."""
    if k < 1:
        raise ValueError(f"elementary abelian rank must be >= 1, got {k}")
    n = 1 << k
    _check_cap(n, max_order)
    table = [[i ^ j for j in range(n)] for i in range(n)]
    return Group(f"C2^{k}" if k > 1 else "C2", table,
                 family="elementary_abelian_2", family_param=k)


def make_generalized_quaternion(n: int, *, max_order: int = DEFAULT_CONSTRUCTION_CAP) -> Group:
    """Generalized quaternion (dicyclic) group of order 4n (n >= 2).

    Presentation a^(2n) = 1, b^2 = a^n, b*a = a^(-1)*b; element i < 2n is
    a^i and element 2n+i is a^i*b.  The unique involution is a^n.
    """
    if n < 2:
        raise ValueError(f"generalized quaternion parameter must be >= 2, got {n}")
    m = 2 * n
    _check_cap(2 * m, max_order)
    table = [[0] * (2 * m) for _ in range(2 * m)]
    for i in range(m):
        for j in range(m):
            table[i][j] = (i + j) % m
            table[i][m + j] = m + (i + j) % m
            table[m + i][j] = m + (i - j) % m
            table[m + i][m + j] = (i - j + n) % m
    return Group(f"Q{4 * n}", table, family="generalized_quaternion", family_param=n)


def direct_product(g: Group, h: Group, *,
                   max_order: int = DEFAULT_CONSTRUCTION_CAP) -> Group:
    """Direct product with pair encoding (a, b) -> a*|H| + b."""
    order = g.order * h.order
    _check_cap(order, max_order)
    hn = h.order
    gt, ht = g.table, h.table
    table = [[0] * order for _ in range(order)]
    for a1 in range(g.order):
        for b1 in range(hn):
            row = table[a1 * hn + b1]
            grow, hrow = gt[a1], ht[b1]
            for a2 in range(g.order):
                ga = grow[a2] * hn
                for b2 in range(hn):
                    row[a2 * hn + b2] = ga + hrow[b2]
    return Group(f"{g.name}x{h.name}", table, family="product")


def element_meta(g: Group, a: int) -> tuple[int, bool, int]:
    """(order, is_involution, inverse) for one element."""
    if not 0 <= a < g.order:
        raise ValueError(f"element index {a} out of range 0..{g.order - 1}")
    order = g.element_orders[a]
    return order, order == 2, g.inverses[a]


# -- structural family detection -------------------------------------------
#
# Constructors tag the groups they build, but groups loaded from files can
# also match an encoding exactly; detection falls back to a table check.

def as_cyclic(g: Group) -> int | None:
    if g.family == "cyclic":
        return g.family_param
    n = g.order
    t = g.table
    if all(t[i][j] == (i + j) % n for i in range(n) for j in range(n)):
        return n
    return None


def as_dihedral(g: Group) -> int | None:
    if g.family == "dihedral":
        return g.family_param
    if g.order % 2 or g.order < 4:
        return None
    n = g.order // 2
    try:
        model = make_dihedral(n)
    except (ValueError, CapacityError):
        return None
    return n if g.table == model.table else None


def as_generalized_quaternion(g: Group) -> int | None:
    if g.family == "generalized_quaternion":
        return g.family_param
    if g.order % 4 or g.order < 8:
        return None
    n = g.order // 4
    try:
        model = make_generalized_quaternion(n)
    except (ValueError, CapacityError):
        return None
    return n if g.table == model.table else None


# -- subgroups, normality, quotients ----------------------------------------

def closure_mask(g: Group, seed: int) -> int:
    """Bitmask of the subgroup generated by the elements of the seed mask."""
    t = g.table
    elems = [0]
    seen = 1
    bits = seed
    while bits:
        low = bits & -bits
        e = low.bit_length() - 1
        bits ^= low
        if not (seen >> e) & 1:
            elems.append(e)
            seen |= low
    i = 0
    while i < len(elems):
        a = elems[i]
        row = t[a]
        for j in range(len(elems)):
            b = elems[j]
            for w in (row[b], t[b][a]):
                if not (seen >> w) & 1:
                    seen |= 1 << w
                    elems.append(w)
        i += 1
    return seen


def subgroups(g: Group) -> list[ElementSet]:
    """All subgroups, found by closing the lattice under single-generator joins."""
    n = g.order
    found = {1}
    work = [1]
    while work:
        h = work.pop()
        free = (((1 << n) - 1) & ~h)
        while free:
            low = free & -free
            free ^= low
            k = closure_mask(g, h | low)
            if k not in found:
                found.add(k)
                work.append(k)
    masks = sorted(found, key=lambda m: (m.bit_count(), m))
    return [ElementSet(m, n) for m in masks]


def is_subgroup_mask(g: Group, mask: int) -> bool:
    if not mask & 1:
        return False
    t = g.table
    elems = [i for i in range(g.order) if (mask >> i) & 1]
    for a in elems:
        if not (mask >> g.inverses[a]) & 1:
            return False
        row = t[a]
        for b in elems:
            if not (mask >> row[b]) & 1:
                return False
    return True


def is_normal_mask(g: Group, mask: int) -> bool:
    t = g.table
    inv = g.inverses
    elems = [i for i in range(g.order) if (mask >> i) & 1]
    for a in range(1, g.order):
        ia = inv[a]
        row = t[a]
        for h in elems:
            if not (mask >> t[row[h]][ia]) & 1:
                return False
    return True


def normal_subgroups(g: Group) -> list[ElementSet]:
    """Normal subgroups (including the trivial one and the whole group),
    sorted by size then bitmask."""
    return [h for h in subgroups(g) if is_normal_mask(g, h.bits)]


def quotient(g: Group, n: ElementSet) -> tuple[Group, tuple[int, ...]]:
    """Quotient by a normal subgroup, plus the element -> coset-index map.

    Cosets are indexed in order of their least element, so the identity
    coset is index 0.
    """
    if n.size != g.order:
        raise ValueError("subgroup set is bound to a different group order")
    if not is_subgroup_mask(g, n.bits):
        raise ValueError("quotient requires a subgroup")
    if not is_normal_mask(g, n.bits):
        raise ValueError("quotient requires a normal subgroup")
    t = g.table
    members = list(n)
    proj = [-1] * g.order
    reps = []
    for a in range(g.order):
        if proj[a] < 0:
            idx = len(reps)
            reps.append(a)
            for h in members:
                proj[t[a][h]] = idx
    m = len(reps)
    qtable = [[proj[t[reps[i]][reps[j]]] for j in range(m)] for i in range(m)]
    q = Group(f"{g.name}/N{len(members)}", qtable)
    return q, tuple(proj)


# -- automorphisms -----------------------------------------------------------

@dataclass(frozen=True)
class Automorphism:
    """A group automorphism as a permutation of element indices."""

    perm: tuple[int, ...]

    def __call__(self, index: int) -> int:
        return self.perm[index]

    def apply(self, s: ElementSet) -> ElementSet:
        bits = 0
        for i in s:
            bits |= 1 << self.perm[i]
        return ElementSet(bits, s.size)

    def compose(self, other: "Automorphism") -> "Automorphism":
        """self after other."""
        return Automorphism(tuple(self.perm[i] for i in other.perm))

    def inverse(self) -> "Automorphism":
        out = [0] * len(self.perm)
        for i, j in enumerate(self.perm):
            out[j] = i
        return Automorphism(tuple(out))


def _greedy_generator_chain(g: Group) -> list[tuple[int, int]]:
    """Generators chosen to grow the generated subgroup fastest.

    Returns (generator, subgroup-mask-after-adding) pairs; ties break to the
    smallest element index.
    """
    chain = []
    current = 1
    full = (1 << g.order) - 1
    while current != full:
        best: tuple[int, int] | None = None
        for a in range(1, g.order):
            if (current >> a) & 1:
                continue
            grown = closure_mask(g, current | (1 << a))
            if best is None or grown.bit_count() > best[1].bit_count():
                best = (a, grown)
        assert best is not None
        chain.append((best[0], best[1]))
        current = best[1]
    return chain


def _level_program(g: Group, prev_mask: int, gen: int,
                   level_mask: int) -> list[tuple[int, int, int]]:
    """Multiplication steps (product, a, b) building the new level from the
    previous one plus the new generator."""
    t = g.table
    known = [i for i in range(g.order) if (prev_mask >> i) & 1]
    seen = prev_mask
    steps = []
    if not (seen >> gen) & 1:
        known.append(gen)
        seen |= 1 << gen
    i = 0
    while seen != level_mask:
        a = known[i]
        row = t[a]
        for j in range(len(known)):
            b = known[j]
            for w, u, v in ((row[b], a, b), (t[b][a], b, a)):
                if not (seen >> w) & 1:
                    seen |= 1 << w
                    known.append(w)
                    steps.append((w, u, v))
        i += 1
    return steps


def automorphisms(g: Group, *, max_order: int = DEFAULT_AUT_ORDER_CAP,
                  max_count: int = DEFAULT_AUT_COUNT_CAP) -> list[Automorphism]:
    """The full automorphism group, identity first, in lexicographic order.

    Generator images are tried filtered by element order; partial maps are
    verified level by level on the subgroup chain, so dead branches die
    early.
    """
    if g.order > max_order:
        raise CapacityError(
            f"automorphism computation capped at order {max_order}, got {g.order}")
    n = g.order
    if n == 1:
        return [Automorphism((0,))]
    t_np = np.array(g.table, dtype=np.int64)
    chain = _greedy_generator_chain(g)
    levels = []
    prev = 1
    for gen, mask in chain:
        steps = _level_program(g, prev, gen, mask)
        elems = np.array([i for i in range(n) if (mask >> i) & 1])
        sub = t_np[np.ix_(elems, elems)]
        levels.append((gen, steps, elems, sub))
        prev = mask
    orders = g.element_orders
    results: list[tuple[int, ...]] = []

    def extend(level: int, img: np.ndarray, used: int) -> None:
        if level == len(levels):
            if len(results) >= max_count:
                raise CapacityError(
                    f"automorphism group larger than cap {max_count}")
            results.append(tuple(int(x) for x in img))
            return
        gen, steps, elems, sub = levels[level]
        want = orders[gen]
        for c in range(1, n):
            if orders[c] != want or (used >> c) & 1:
                continue
            img2 = img.copy()
            img2[gen] = c
            used2 = used | (1 << c)
            ok = True
            for w, u, v in steps:
                val = g.table[img2[u]][img2[v]]
                if (used2 >> val) & 1:
                    ok = False
                    break
                img2[w] = val
                used2 |= 1 << val
            if not ok:
                continue
            mapped = img2[elems]
            if not (img2[sub] == t_np[np.ix_(mapped, mapped)]).all():
                continue
            extend(level + 1, img2, used2)

    start = np.full(n, -1, dtype=np.int64)
    start[0] = 0
    extend(0, start, 1)
    results.sort()
    return [Automorphism(p) for p in results]
