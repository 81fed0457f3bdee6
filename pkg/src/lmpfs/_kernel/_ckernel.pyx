# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernel; see pure.py for the algorithm notes.

Both kernels must produce identical output for identical input.
"""

from libc.stdlib cimport malloc, free

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil

IMPLEMENTATION = "compiled"

ctypedef unsigned long long u64

cdef struct Ctx:
    int n
    int size_filter
    u64 universe
    int *mul          # n*n product table
    u64 *sqrt_mask    # per element e: {f : f*f == e}
    u64 *pair_block   # n*n conflict masks


cdef void dfs(Ctx *ctx, list out, u64 s_mask, u64 blocked, int start, int size):
    cdef u64 free_mask = ctx.universe & ~(s_mask | blocked)
    cdef u64 cand, low, delta, rest, sl
    cdef int e, n = ctx.n
    cdef u64 *pb_e
    if free_mask == 0:
        if s_mask != 0 and (ctx.size_filter == 0 or size == ctx.size_filter):
            out.append(s_mask)
        return
    if ctx.size_filter != 0 and size >= ctx.size_filter:
        return
    if start >= 64:
        return
    cand = free_mask >> start << start
    while cand:
        low = cand & (~cand + 1)
        cand ^= low
        e = __builtin_ctzll(low)
        pb_e = ctx.pair_block + (<size_t>e) * n
        delta = ctx.sqrt_mask[e] | pb_e[e]
        rest = s_mask
        while rest:
            sl = rest & (~rest + 1)
            rest ^= sl
            delta |= pb_e[__builtin_ctzll(sl)]
        dfs(ctx, out, s_mask | low, blocked | delta, e + 1, size + 1)


def enumerate_masks(int n, table_flat, int size_filter=0, int first=-1):
    """All locally maximal product-free subsets, as bitmasks in DFS order."""
    if n <= 1:
        return []
    if n > 64:
        raise ValueError(f"kernel supports group orders up to 64, got {n}")
    cdef Ctx ctx
    cdef int a, b, e, s, ie, si
    cdef int *inv = NULL
    cdef u64 delta
    cdef list out = []
    ctx.n = n
    ctx.size_filter = size_filter
    if n < 64:
        ctx.universe = (((<u64>1) << n) - 1) & ~(<u64>1)
    else:
        ctx.universe = ~(<u64>1)
    ctx.mul = <int *>malloc(n * n * sizeof(int))
    ctx.sqrt_mask = <u64 *>malloc(n * sizeof(u64))
    ctx.pair_block = <u64 *>malloc(n * n * sizeof(u64))
    inv = <int *>malloc(n * sizeof(int))
    if ctx.mul == NULL or ctx.sqrt_mask == NULL or ctx.pair_block == NULL or inv == NULL:
        free(ctx.mul); free(ctx.sqrt_mask); free(ctx.pair_block); free(inv)
        raise MemoryError()
    try:
        for a in range(n * n):
            ctx.mul[a] = table_flat[a]
        for a in range(n):
            for b in range(n):
                if ctx.mul[a * n + b] == 0:
                    inv[a] = b
                    break
        for a in range(n):
            ctx.sqrt_mask[a] = 0
        for a in range(1, n):
            ctx.sqrt_mask[ctx.mul[a * n + a]] |= (<u64>1) << a
        for e in range(1, n):
            ie = inv[e]
            for s in range(1, n):
                si = inv[s]
                ctx.pair_block[e * n + s] = (
                    ((<u64>1) << ctx.mul[ie * n + s])
                    | ((<u64>1) << ctx.mul[s * n + ie])
                    | ((<u64>1) << ctx.mul[e * n + s])
                    | ((<u64>1) << ctx.mul[s * n + e])
                    | ((<u64>1) << ctx.mul[e * n + si])
                    | ((<u64>1) << ctx.mul[si * n + e]))
        if first >= 0:
            if 1 <= first < n:
                delta = ctx.sqrt_mask[first] | ctx.pair_block[first * n + first]
                dfs(&ctx, out, (<u64>1) << first, delta, first + 1, 1)
        else:
            dfs(&ctx, out, 0, 0, 1, 0)
        return out
    finally:
        free(inv)
        free(ctx.mul)
        free(ctx.sqrt_mask)
        free(ctx.pair_block)
