"""Pure-Python enumeration kernel for locally maximal product-free sets.

Mirrors the compiled kernel in ``_ckernel.pyx``; both must produce identical
output.  Sets are bitmasks over element indices, the identity (bit 0) never
participates.

The search walks every product-free set once, depth-first, adding elements
in ascending index order.  Alongside the current set S it keeps a ``blocked``
mask: exactly the elements whose addition would break product-freeness.  A
set is emitted when nothing outside it is addable, which is local maximality
by definition.  Blocking is monotone along a branch, so the mask is extended
incrementally: when e joins S, the new conflicts are

    f with e*f in S        f with f*e in S        f in e*S or S*e
    f with f*s = e         f with s*f = e         f with f*f = e

plus e*e itself.  All pair conflicts are precomputed in ``pair_block``.
"""

IMPLEMENTATION = "pure"


def enumerate_masks(n: int, table_flat: list[int], size_filter: int = 0,
                    first: int = -1) -> list[int]:
    """All locally maximal product-free subsets, as bitmasks in DFS order.

    ``size_filter`` > 0 keeps only sets of that cardinality (and prunes the
    search below them); ``first`` >= 0 restricts to sets whose least element
    is ``first``, which is the worker partitioning hook.
    """
    if n <= 1:
        return []
    if n > 64:
        raise ValueError(f"kernel supports group orders up to 64, got {n}")
    mul = [table_flat[i * n:(i + 1) * n] for i in range(n)]
    inv = [mul[a].index(0) for a in range(n)]
    universe = ((1 << n) - 1) & ~1

    sqrt_mask = [0] * n
    for f in range(1, n):
        sqrt_mask[mul[f][f]] |= 1 << f

    pair_block = [[0] * n for _ in range(n)]
    for e in range(1, n):
        ie = inv[e]
        row_e, row_ie = mul[e], mul[ie]
        pb_e = pair_block[e]
        for s in range(1, n):
            si = inv[s]
            pb_e[s] = ((1 << row_ie[s]) | (1 << mul[s][ie])
                       | (1 << row_e[s]) | (1 << mul[s][e])
                       | (1 << row_e[si]) | (1 << mul[si][e]))

    out: list[int] = []

    def dfs(s_mask: int, blocked: int, start: int, size: int) -> None:
        free = universe & ~(s_mask | blocked)
        if free == 0:
            if s_mask and (size_filter == 0 or size == size_filter):
                out.append(s_mask)
            return
        if size_filter and size >= size_filter:
            return
        cand = free & ~((1 << start) - 1)
        while cand:
            low = cand & -cand
            cand ^= low
            e = low.bit_length() - 1
            pb_e = pair_block[e]
            delta = sqrt_mask[e] | pb_e[e]
            rest = s_mask
            while rest:
                sl = rest & -rest
                rest ^= sl
                delta |= pb_e[sl.bit_length() - 1]
            dfs(s_mask | low, blocked | delta, e + 1, size + 1)

    if first >= 0:
        if 1 <= first < n:
            delta = sqrt_mask[first] | pair_block[first][first]
            dfs(1 << first, delta, first + 1, 1)
    else:
        dfs(0, 0, 1, 0)
    return out
