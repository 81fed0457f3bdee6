#!/usr/bin/env python3
"""Generate the packaged catalog of all groups of order 2..31.

Every group is built from explicit constructions (cyclic, dihedral,
elementary abelian, generalized quaternion, direct/semidirect products,
permutation closures, one central product).  Before anything is written the
list is verified to be complete and duplicate-free:

* the number of groups per order must match the published count of
  isomorphism classes (OEIS A000001);
* the groups of each order must be pairwise non-isomorphic, checked by a
  brute-force generator-image isomorphism search (invariant prefilters make
  this fast).

Together those two checks guarantee the catalog contains exactly one group
per isomorphism class.  Output: src/lmpfs/data/smallgroups/<order>/<name>.json
with "abelian" and "nilpotent" metadata flags.

Usage: python scripts/generate_catalog.py [output_dir]
"""

import json
import sys
from pathlib import Path

import numpy as np

from lmpfs.groups import (Group, automorphisms, direct_product, make_cyclic,
                          make_dihedral, make_elementary_abelian_2,
                          make_generalized_quaternion, quotient,
                          _greedy_generator_chain, _level_program)
from lmpfs.sets import ElementSet

# Isomorphism-class counts for orders 1..31 (OEIS A000001).
GROUP_COUNTS = [1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14,
                1, 5, 1, 5, 2, 2, 1, 15, 2, 2, 5, 4, 1, 4, 1]


# -- builders ----------------------------------------------------------------

def perm_group(name: str, generators: list[tuple[int, ...]]) -> Group:
    """Group generated by permutations, elements sorted lexicographically
    (the identity sorts first)."""
    degree = len(generators[0])
    identity = tuple(range(degree))
    elems = {identity}
    frontier = [identity]
    while frontier:
        new = []
        for p in frontier:
            for q in generators:
                composed = tuple(p[q[i]] for i in range(degree))
                if composed not in elems:
                    elems.add(composed)
                    new.append(composed)
        frontier = new
    ordered = sorted(elems)
    assert ordered[0] == identity
    index = {p: i for i, p in enumerate(ordered)}
    table = [[index[tuple(p[q[i]] for i in range(degree))] for q in ordered]
             for p in ordered]
    return Group(name, table)


def semidirect(name: str, n_group: Group, h_group: Group,
               phi: list[tuple[int, ...]]) -> Group:
    """Semidirect product N x| H with pair encoding (a, h) -> a*|H| + h.

    ``phi[h]`` is the automorphism of N carried by h; the group axioms of
    the resulting table (validated by the Group constructor) force phi to be
    a homomorphism into Aut(N), so a wrong action fails loudly.
    """
    hn = h_group.order
    order = n_group.order * hn
    nt, ht = n_group.table, h_group.table
    table = [[0] * order for _ in range(order)]
    for a in range(n_group.order):
        for h1 in range(hn):
            act = phi[h1]
            row = table[a * hn + h1]
            for b in range(n_group.order):
                nb = nt[a][act[b]] * hn
                hrow = ht[h1]
                for h2 in range(hn):
                    row[b * hn + h2] = nb + hrow[h2]
    return Group(name, table)


def semidirect_cyclic(name: str, n_group: Group, m: int,
                      action: tuple[int, ...]) -> Group:
    """N x| C_m where the generator of C_m acts by the given automorphism."""
    powers = [tuple(range(n_group.order))]
    for _ in range(m - 1):
        prev = powers[-1]
        powers.append(tuple(action[prev[i]] for i in range(n_group.order)))
    return semidirect(name, n_group, make_cyclic(m), powers)


def cyclic_action(n: int, multiplier: int) -> tuple[int, ...]:
    return tuple((multiplier * i) % n for i in range(n))


def inversion_action(g: Group) -> tuple[int, ...]:
    return tuple(g.inverses)


def renamed(name: str, g: Group) -> Group:
    return Group(name, g.table)


def central_product_d8_c4() -> Group:
    """The order-16 central product: (Q8 x C4) / <(z, c^2)> where z is the
    unique involution of Q8."""
    q8 = make_generalized_quaternion(2)
    c4 = make_cyclic(4)
    prod = direct_product(q8, c4)
    z_pair = 2 * 4 + 2  # (a^2, c^2)
    q, _ = quotient(prod, ElementSet.from_indices([0, z_pair], prod.order))
    return renamed("D8oC4", q)


def order3_automorphism(g: Group) -> tuple[int, ...]:
    for a in automorphisms(g):
        if a.perm != tuple(range(g.order)) and \
                a.compose(a).compose(a).perm == tuple(range(g.order)):
            return a.perm
    raise RuntimeError(f"no order-3 automorphism found for {g.name}")


def alternating4() -> Group:
    return perm_group("A4", [(1, 2, 0, 3), (1, 0, 3, 2)])


def symmetric4() -> Group:
    return perm_group("S4", [(1, 0, 2, 3), (1, 2, 3, 0)])


def klein_swap_action() -> tuple[int, ...]:
    # swap the two C2 factors of the Klein group in XOR encoding
    return (0, 2, 1, 3)


def c3_d8_twist() -> Group:
    """C3 x| D8 where the order-4 rotation of D8 inverts C3 (the reflections
    y and x^2*y act trivially)."""
    c3 = make_cyclic(3)
    d8 = make_dihedral(4)
    identity = tuple(range(3))
    invert = (0, 2, 1)
    kernel = {0, 2, 4, 6}  # 1, x^2, y, x^2*y
    phi = [identity if h in kernel else invert for h in range(8)]
    return semidirect("C3:D8", c3, d8, phi)


def heisenberg3() -> Group:
    """Extraspecial group of order 27 and exponent 3: (C3 x C3) x| C3 with a
    shear action."""
    c3c3 = direct_product(make_cyclic(3), make_cyclic(3))
    shear = tuple((((i // 3) + (i % 3)) % 3) * 3 + (i % 3) for i in range(9))
    return semidirect_cyclic("C3^2:C3", c3c3, 3, shear)


def build_catalog() -> dict[int, list[Group]]:
    """All isomorphism classes of groups of order 2..31, by explicit
    construction."""
    c = make_cyclic
    d = make_dihedral
    e2 = make_elementary_abelian_2
    q = make_generalized_quaternion
    x = direct_product
    groups: dict[int, list[Group]] = {}

    def put(*gs: Group) -> None:
        for g in gs:
            groups.setdefault(g.order, []).append(g)

    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31):
        put(c(p))
    put(c(4), e2(2))
    put(c(6), d(3))
    put(c(8), x(c(4), c(2)), e2(3), d(4), q(2))
    put(c(9), x(c(3), c(3)))
    put(c(10), d(5))
    put(c(12), x(c(6), c(2)), d(6), q(3), alternating4())
    put(c(14), d(7))
    put(c(15))
    put(c(16), x(c(4), c(4)), x(c(8), c(2)), x(c(4), e2(2)), e2(4),
        d(8), q(4),
        semidirect_cyclic("SD16", c(8), 2, cyclic_action(8, 3)),
        semidirect_cyclic("M16", c(8), 2, cyclic_action(8, 5)),
        x(d(4), c(2)), x(q(2), c(2)),
        semidirect_cyclic("C4:C4", c(4), 4, cyclic_action(4, 3)),
        semidirect_cyclic("C2^2:C4", e2(2), 4, klein_swap_action()),
        central_product_d8_c4())
    put(c(18), x(c(3), c(6)), d(9), x(c(3), d(3)),
        semidirect_cyclic("C3^2:C2", x(c(3), c(3)), 2,
                          inversion_action(x(c(3), c(3)))))
    put(c(20), x(c(2), c(10)), d(10), q(5),
        semidirect_cyclic("F20", c(5), 4, cyclic_action(5, 2)))
    put(c(21), semidirect_cyclic("C7:C3", c(7), 3, cyclic_action(7, 2)))
    put(c(22), d(11))
    put(c(24), x(c(12), c(2)), x(c(6), e2(2)), d(12), q(6),
        semidirect_cyclic("C3:C8", c(3), 8, cyclic_action(3, 2)),
        semidirect_cyclic("SL(2,3)", q(2), 3, order3_automorphism(q(2))),
        symmetric4(), x(alternating4(), c(2)), x(c(2), q(3)),
        x(c(4), d(3)), x(e2(2), d(3)), x(c(3), d(4)), x(c(3), q(2)),
        c3_d8_twist())
    put(c(25), x(c(5), c(5)))
    put(c(26), d(13))
    put(c(27), x(c(9), c(3)), x(x(c(3), c(3)), c(3)), heisenberg3(),
        semidirect_cyclic("C9:C3", c(9), 3, cyclic_action(9, 4)))
    put(c(28), x(c(2), c(14)), d(14), q(7))
    put(c(30), d(15), x(c(3), d(5)), x(c(5), d(3)))
    return groups


# -- isomorphism testing ------------------------------------------------------

def conjugacy_class_sizes(g: Group) -> tuple[int, ...]:
    t = g.table
    inv = g.inverses
    seen = [False] * g.order
    sizes = []
    for a in range(g.order):
        if seen[a]:
            continue
        cls = {t[t[x][a]][inv[x]] for x in range(g.order)}
        for b in cls:
            seen[b] = True
        sizes.append(len(cls))
    return tuple(sorted(sizes))


def center_size(g: Group) -> int:
    t = g.table
    return sum(1 for a in range(g.order)
               if all(t[a][b] == t[b][a] for b in range(g.order)))


def derived_subgroup_mask(g: Group) -> int:
    from lmpfs.groups import closure_mask
    t = g.table
    inv = g.inverses
    seed = 0
    for a in range(g.order):
        for b in range(g.order):
            seed |= 1 << t[t[inv[a]][inv[b]]][t[a][b]]
    return closure_mask(g, seed)


def signature(g: Group) -> tuple:
    return (g.order, tuple(sorted(g.element_orders)), g.is_abelian(),
            center_size(g), conjugacy_class_sizes(g),
            derived_subgroup_mask(g).bit_count())


def find_isomorphism(g1: Group, g2: Group) -> tuple[int, ...] | None:
    """Brute-force generator-image isomorphism search; None if none exists."""
    if signature(g1) != signature(g2):
        return None
    n = g1.order
    if n == 1:
        return (0,)
    t1_np = np.array(g1.table, dtype=np.int64)
    t2_np = np.array(g2.table, dtype=np.int64)
    t2 = g2.table
    chain = _greedy_generator_chain(g1)
    levels = []
    prev = 1
    for gen, mask in chain:
        steps = _level_program(g1, prev, gen, mask)
        elems = np.array([i for i in range(n) if (mask >> i) & 1])
        levels.append((gen, steps, elems, t1_np[np.ix_(elems, elems)]))
        prev = mask
    orders1, orders2 = g1.element_orders, g2.element_orders

    def extend(level: int, img: np.ndarray, used: int) -> tuple[int, ...] | None:
        if level == len(levels):
            return tuple(int(v) for v in img)
        gen, steps, elems, sub = levels[level]
        want = orders1[gen]
        for cand in range(1, n):
            if orders2[cand] != want or (used >> cand) & 1:
                continue
            img2 = img.copy()
            img2[gen] = cand
            used2 = used | (1 << cand)
            ok = True
            for w, u, v in steps:
                val = t2[img2[u]][img2[v]]
                if (used2 >> val) & 1:
                    ok = False
                    break
                img2[w] = val
                used2 |= 1 << val
            if not ok:
                continue
            mapped = img2[elems]
            if not (img2[sub] == t2_np[np.ix_(mapped, mapped)]).all():
                continue
            found = extend(level + 1, img2, used2)
            if found is not None:
                return found
        return None

    start = np.full(n, -1, dtype=np.int64)
    start[0] = 0
    return extend(0, start, 1)


def is_nilpotent(g: Group) -> bool:
    """Upper central series check: keep quotienting by the center."""
    while g.order > 1:
        t = g.table
        center = [a for a in range(g.order)
                  if all(t[a][b] == t[b][a] for b in range(g.order))]
        if len(center) == 1:
            return False
        g, _ = quotient(g, ElementSet.from_indices(center, g.order))
    return True


# -- verification and output --------------------------------------------------

def verify_catalog(groups: dict[int, list[Group]]) -> None:
    for order in range(2, 32):
        expected = GROUP_COUNTS[order - 1]
        got = groups.get(order, [])
        if len(got) != expected:
            raise SystemExit(
                f"order {order}: built {len(got)} groups, published count "
                f"is {expected}: {[g.name for g in got]}")
        names = [g.name for g in got]
        if len(set(names)) != len(names):
            raise SystemExit(f"order {order}: duplicate names {names}")
        for i in range(len(got)):
            for j in range(i + 1, len(got)):
                iso = find_isomorphism(got[i], got[j])
                if iso is not None:
                    raise SystemExit(
                        f"order {order}: {got[i].name} and {got[j].name} "
                        f"are isomorphic via {iso}")
    print(f"verified: {sum(len(v) for v in groups.values())} groups, "
          "counts match, pairwise non-isomorphic")


def sanitize(name: str) -> str:
    return (name.replace(":", "-").replace("(", "").replace(")", "")
            .replace(",", "_"))


def write_catalog(groups: dict[int, list[Group]], outdir: Path) -> None:
    for order in sorted(groups):
        subdir = outdir / f"{order:02d}"
        subdir.mkdir(parents=True, exist_ok=True)
        for g in groups[order]:
            payload = {
                "name": g.name,
                "order": g.order,
                "table": [list(row) for row in g.table],
                "abelian": g.is_abelian(),
                "nilpotent": is_nilpotent(g),
            }
            path = subdir / f"{sanitize(g.name)}.json"
            with open(path, "w", encoding="utf-8") as fh:
                json.dump(payload, fh, separators=(",", ":"))
                fh.write("\n")
    print(f"wrote catalog to {outdir}")


def main() -> None:
    outdir = Path(sys.argv[1]) if len(sys.argv) > 1 else \
        Path(__file__).resolve().parent.parent / "src" / "lmpfs" / "data" / "smallgroups"
    groups = build_catalog()
    verify_catalog(groups)
    write_catalog(groups, outdir)


if __name__ == "__main__":
    main()
