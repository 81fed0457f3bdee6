"""Shared fixtures: group pools, catalog access, and independent oracles.

The oracles here deliberately avoid the package's own set predicates so the
test suite cross-checks two separate routes to the same answers.
"""

import pytest

from lmpfs import (default_catalog_dir, load_catalog, make_cyclic,
                   make_dihedral, make_elementary_abelian_2,
                   make_generalized_quaternion)
from lmpfs.enumeration import _flat_table
from lmpfs import _kernel


def brute_force_product_free_masks(g) -> list[int]:
    """All product-free subsets by direct 2^n scan (independent oracle)."""
    n = g.order
    table = g.table
    out = []
    for mask in range(1, 1 << n):
        members = [i for i in range(n) if (mask >> i) & 1]
        ok = True
        for x in members:
            row = table[x]
            for y in members:
                if (mask >> row[y]) & 1:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(mask)
    return out


def brute_force_maximal_masks(g, pf_masks: list[int]) -> list[int]:
    """Locally maximal members of the product-free family, by the
    definition: no one-element extension stays in the family."""
    family = set(pf_masks)
    out = []
    for mask in pf_masks:
        if not any((mask | (1 << e)) in family
                   for e in range(g.order) if not (mask >> e) & 1):
            out.append(mask)
    return out


def brute_force_subgroup_masks(g) -> list[int]:
    """All subgroups by exhaustive subset closure check (independent oracle;
    Lagrange filtering keeps the scan small)."""
    n = g.order
    table = g.table
    divisors = {d for d in range(1, n + 1) if n % d == 0}
    out = []
    for mask in range(1, 1 << n, 2):  # must contain the identity bit
        if mask.bit_count() not in divisors:
            continue
        members = [i for i in range(n) if (mask >> i) & 1]
        ok = True
        for a in members:
            row = table[a]
            for b in members:
                if not (mask >> row[b]) & 1:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(mask)
    return out


def is_normal_oracle(g, mask: int) -> bool:
    table = g.table
    inv = g.inverses
    members = [i for i in range(g.order) if (mask >> i) & 1]
    return all((mask >> table[table[t][h]][inv[t]]) & 1
               for t in range(g.order) for h in members)


@pytest.fixture(scope="session")
def catalog_entries():
    directory = default_catalog_dir()
    assert directory is not None, "packaged small-group catalog is missing"
    problems: list[str] = []
    entries = load_catalog(directory, problems)
    assert not problems, problems
    return entries


@pytest.fixture(scope="session")
def small_builtin_pool():
    """Builtin-family groups of order at most 12."""
    pool = [make_cyclic(n) for n in range(1, 13)]
    pool += [make_dihedral(n) for n in range(2, 7)]
    pool += [make_elementary_abelian_2(k) for k in (1, 2, 3)]
    pool += [make_generalized_quaternion(n) for n in (2, 3)]
    return pool


_ENUM_CACHE: dict = {}


def cached_lmpfs_masks(g) -> list[int]:
    """Kernel output (DFS order) cached per table across the session."""
    key = g.table
    if key not in _ENUM_CACHE:
        _ENUM_CACHE[key] = _kernel.enumerate_masks(g.order, _flat_table(g))
    return _ENUM_CACHE[key]
