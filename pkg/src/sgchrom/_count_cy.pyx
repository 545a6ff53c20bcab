# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled kernel for exact proper-coloring counts.

Same search as ``_count_py`` (component-splitting backtracking with
incremental forbidden-color tables), with C arrays and 128-bit counter
arithmetic.  The caller guarantees palette_size ** vertex_count fits in
128 bits; anything larger goes to the pure-Python lane.
"""

from libc.stdlib cimport calloc, free

from .errors import BudgetExceededError

cdef extern from *:
    ctypedef unsigned long long u128 "unsigned __int128"

KERNEL_NAME = "compiled"


cdef struct Ctx:
    int n
    int k
    int n_slots
    int pal_len
    int* palette
    int* adj_start
    int* adj_vert
    int* adj_sign
    int* forb            # n * n_slots counts
    int* allowed
    unsigned char* uncolored
    int* work            # (2n + 4) rows of n ints
    long long* stamp
    long long stamp_val
    long long budget
    long long nodes
    bint aborted


cdef u128 count_region(Ctx* c, int* region, int rlen, int depth) noexcept:
    cdef u128 total = 1
    cdef int* slab
    cdef long long sv
    cdef int i, j, t, x, y, comp_len, start
    if rlen == 0:
        return total
    slab = c.work + depth * c.n
    c.stamp_val += 2
    sv = c.stamp_val
    for i in range(rlen):
        c.stamp[region[i]] = sv
    for i in range(rlen):
        start = region[i]
        if c.stamp[start] != sv:
            continue
        slab[0] = start
        c.stamp[start] = sv + 1
        comp_len = 1
        j = 0
        while j < comp_len:
            x = slab[j]
            j += 1
            for t in range(c.adj_start[x], c.adj_start[x + 1]):
                y = c.adj_vert[t]
                if c.stamp[y] == sv:
                    c.stamp[y] = sv + 1
                    slab[comp_len] = y
                    comp_len += 1
        total = total * count_component(c, slab, comp_len, depth)
        if total == 0 or c.aborted:
            return total if not c.aborted else 0
    return total


cdef u128 count_component(Ctx* c, int* comp, int clen, int depth) noexcept:
    cdef int v, w, i, t, pi, slot, wslot, color, deg, res_deg
    cdef int best, bdeg1, bdeg2, dead
    cdef int* rest
    cdef u128 total = 0

    c.nodes += 1
    if c.nodes > c.budget:
        c.aborted = True
        return 0
    if clen == 1:
        return <u128> c.allowed[comp[0]]

    best = comp[0]
    bdeg1 = -1
    bdeg2 = -1
    for i in range(clen):
        v = comp[i]
        res_deg = 0
        for t in range(c.adj_start[v], c.adj_start[v + 1]):
            if c.uncolored[c.adj_vert[t]]:
                res_deg += 1
        deg = c.adj_start[v + 1] - c.adj_start[v]
        if res_deg > bdeg1 or (
            res_deg == bdeg1 and (deg > bdeg2 or (deg == bdeg2 and v < best))
        ):
            best = v
            bdeg1 = res_deg
            bdeg2 = deg
    v = best

    rest = c.work + (depth + 1) * c.n
    i = 0
    for t in range(clen):
        if comp[t] != v:
            rest[i] = comp[t]
            i += 1

    for pi in range(c.pal_len):
        slot = c.palette[pi]
        if c.forb[v * c.n_slots + slot] > 0:
            continue
        color = slot - c.k
        dead = 0
        for t in range(c.adj_start[v], c.adj_start[v + 1]):
            w = c.adj_vert[t]
            if not c.uncolored[w]:
                continue
            wslot = c.adj_sign[t] * color + c.k
            c.forb[w * c.n_slots + wslot] += 1
            if c.forb[w * c.n_slots + wslot] == 1:
                c.allowed[w] -= 1
                if c.allowed[w] == 0:
                    dead = 1
        if not dead:
            c.uncolored[v] = 0
            total = total + count_region(c, rest, clen - 1, depth + 2)
            c.uncolored[v] = 1
        for t in range(c.adj_start[v], c.adj_start[v + 1]):
            w = c.adj_vert[t]
            if not c.uncolored[w]:
                continue
            wslot = c.adj_sign[t] * color + c.k
            c.forb[w * c.n_slots + wslot] -= 1
            if c.forb[w * c.n_slots + wslot] == 0:
                c.allowed[w] += 1
        if c.aborted:
            return 0
    return total


def count_colorings(int vertex_count, edges, zero_forbidden, int k, bint zero_free, budget):
    """Entry point mirroring ``_count_py.count_colorings``."""
    cdef Ctx c
    cdef int i, u, v, s, slot
    cdef int m = len(edges)
    cdef u128 total
    cdef unsigned long long hi, lo
    cdef long long cap = 1 << 62

    if vertex_count == 0:
        return 1

    c.n = vertex_count
    c.k = k
    c.n_slots = 2 * k + 1
    c.budget = cap if budget > cap else <long long> budget
    c.nodes = 0
    c.stamp_val = 0
    c.aborted = False

    c.palette = <int*> calloc(c.n_slots if c.n_slots > 0 else 1, sizeof(int))
    c.adj_start = <int*> calloc(vertex_count + 1, sizeof(int))
    c.adj_vert = <int*> calloc(2 * m if m > 0 else 1, sizeof(int))
    c.adj_sign = <int*> calloc(2 * m if m > 0 else 1, sizeof(int))
    c.forb = <int*> calloc(vertex_count * c.n_slots, sizeof(int))
    c.allowed = <int*> calloc(vertex_count, sizeof(int))
    c.uncolored = <unsigned char*> calloc(vertex_count, sizeof(unsigned char))
    c.work = <int*> calloc((2 * vertex_count + 4) * vertex_count, sizeof(int))
    c.stamp = <long long*> calloc(vertex_count, sizeof(long long))
    if (
        c.palette == NULL or c.adj_start == NULL or c.adj_vert == NULL
        or c.adj_sign == NULL or c.forb == NULL or c.allowed == NULL
        or c.uncolored == NULL or c.work == NULL or c.stamp == NULL
    ):
        _free_ctx(&c)
        raise MemoryError("kernel allocation failed")

    try:
        c.pal_len = 0
        for slot in range(c.n_slots):
            if zero_free and slot == k:
                continue
            c.palette[c.pal_len] = slot
            c.pal_len += 1

        # CSR adjacency.
        for u, v, s in edges:
            c.adj_start[u + 1] += 1
            c.adj_start[v + 1] += 1
        for i in range(vertex_count):
            c.adj_start[i + 1] += c.adj_start[i]
        fill = [c.adj_start[i] for i in range(vertex_count)]
        for u, v, s in edges:
            c.adj_vert[fill[u]] = v
            c.adj_sign[fill[u]] = s
            fill[u] += 1
            c.adj_vert[fill[v]] = u
            c.adj_sign[fill[v]] = s
            fill[v] += 1

        for i in range(vertex_count):
            c.allowed[i] = c.pal_len
            c.uncolored[i] = 1
        if not zero_free:
            for v in zero_forbidden:
                c.forb[v * c.n_slots + k] = 1
                c.allowed[v] -= 1

        region = <int*> calloc(vertex_count, sizeof(int))
        if region == NULL:
            raise MemoryError("kernel allocation failed")
        try:
            for i in range(vertex_count):
                region[i] = i
            total = count_region(&c, region, vertex_count, 0)
        finally:
            free(region)

        if c.aborted:
            raise BudgetExceededError(
                f"coloring search exceeded budget of {budget} nodes"
            )
        hi = <unsigned long long> (total >> 64)
        lo = <unsigned long long> total
        return (int(hi) << 64) | int(lo)
    finally:
        _free_ctx(&c)


cdef void _free_ctx(Ctx* c) noexcept:
    free(c.palette)
    free(c.adj_start)
    free(c.adj_vert)
    free(c.adj_sign)
    free(c.forb)
    free(c.allowed)
    free(c.uncolored)
    free(c.work)
    free(c.stamp)
