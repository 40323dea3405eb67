# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled counting kernels.

Semantics match lexext._core_py exactly; that module is the readable
reference.  Orders up to 62 are supported so every adjacency bitmask fits
one 64-bit word and every count fits a signed 64-bit integer.
"""

from libc.stdint cimport int64_t, uint64_t

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

MAX_ORDER = 62

cdef int64_t PASCAL[63][63]


cdef void _init_pascal() noexcept nogil:
    cdef int a, b
    for a in range(63):
        for b in range(63):
            PASCAL[a][b] = 0
        PASCAL[a][0] = 1
    for a in range(1, 63):
        for b in range(1, a + 1):
            PASCAL[a][b] = PASCAL[a - 1][b - 1] + PASCAL[a - 1][b]


_init_pascal()


cdef void _profile_rec(uint64_t* adj, uint64_t mask, int size, int64_t* counts) noexcept nogil:
    cdef uint64_t rest = mask
    cdef int v, d, q, j
    cdef int best_v = -1
    cdef int best_d = 0
    while rest:
        v = __builtin_ctzll(rest)
        rest &= rest - 1
        d = __builtin_popcountll(adj[v] & mask)
        if d > best_d:
            best_d = d
            best_v = v
    if best_v < 0:
        q = __builtin_popcountll(mask)
        for j in range(q + 1):
            counts[size + j] += PASCAL[q][j]
        return
    _profile_rec(adj, mask & ~((<uint64_t>1) << best_v), size, counts)
    _profile_rec(adj, mask & ~(adj[best_v] | ((<uint64_t>1) << best_v)), size + 1, counts)


cdef void _mis_rec(uint64_t* adj, uint64_t mask, int size, int* best) noexcept nogil:
    cdef uint64_t rest = mask
    cdef int v, d, pc
    cdef int best_v = -1
    cdef int best_d = 0
    if size > best[0]:
        best[0] = size
    pc = __builtin_popcountll(mask)
    if size + pc <= best[0]:
        return
    while rest:
        v = __builtin_ctzll(rest)
        rest &= rest - 1
        d = __builtin_popcountll(adj[v] & mask)
        if d > best_d:
            best_d = d
            best_v = v
    if best_v < 0:
        best[0] = size + pc
        return
    _mis_rec(adj, mask & ~(adj[best_v] | ((<uint64_t>1) << best_v)), size + 1, best)
    _mis_rec(adj, mask & ~((<uint64_t>1) << best_v), size, best)


cdef bint _next_combo(int* c, int k, int p) noexcept nogil:
    cdef int i = k - 1
    cdef int j
    while i >= 0 and c[i] == p - k + i:
        i -= 1
    if i < 0:
        return False
    c[i] += 1
    for j in range(i + 1, k):
        c[j] = c[j - 1] + 1
    return True


def profile_counts(adj, int n):
    """Counts of independent sets by size; see _core_py.profile_counts."""
    if not 0 <= n <= 62:
        raise ValueError("compiled kernel supports 0 <= n <= 62")
    cdef uint64_t cadj[62]
    cdef int64_t counts[63]
    cdef int i
    for i in range(n):
        cadj[i] = adj[i]
    for i in range(n + 1):
        counts[i] = 0
    cdef uint64_t full = 0
    if n > 0:
        full = ((<uint64_t>1) << n) - 1
    with nogil:
        _profile_rec(cadj, full, 0, counts)
    return [counts[i] for i in range(n + 1)]


def max_independent_size(adj, int n):
    """Size of a largest independent set; see _core_py.max_independent_size."""
    if not 0 <= n <= 62:
        raise ValueError("compiled kernel supports 0 <= n <= 62")
    cdef uint64_t cadj[62]
    cdef int best = 0
    cdef int i
    for i in range(n):
        cadj[i] = adj[i]
    cdef uint64_t full = 0
    if n > 0:
        full = ((<uint64_t>1) << n) - 1
    with nogil:
        _mis_rec(cadj, full, 0, &best)
    return best


def scan_graph_range(int n, int m, first_combo, long long steps):
    """Reduce profiles over a rank range of m-edge graphs.

    Same contract and return shape as _core_py.scan_graph_range.
    """
    if not 1 <= n <= 62:
        raise ValueError("compiled kernel supports 1 <= n <= 62")
    cdef int p = n * (n - 1) // 2
    if not 0 <= m <= p:
        raise ValueError(f"m={m} outside 0..{p}")
    if len(first_combo) != m:
        raise ValueError("first_combo length must equal m")
    cdef int pu[1891]
    cdef int pv[1891]
    cdef int combo[1891]
    cdef uint64_t adj[62]
    cdef int64_t counts[63]
    cdef int64_t max_ir[63]
    cdef int64_t ir_count[63]
    cdef int i, j, r, u, v, alpha
    cdef int64_t c, total
    cdef int64_t max_alpha = -1
    cdef int64_t alpha_count = 0
    cdef int64_t max_total = -1
    cdef int64_t total_count = 0
    cdef long long checked = 0
    cdef uint64_t full = ((<uint64_t>1) << n) - 1

    i = 0
    for u in range(n):
        for v in range(u + 1, n):
            pu[i] = u
            pv[i] = v
            i += 1
    for i in range(m):
        combo[i] = first_combo[i]
        if not 0 <= combo[i] < p:
            raise ValueError("combination slot out of range")
    for r in range(n + 1):
        max_ir[r] = -1
        ir_count[r] = 0

    with nogil:
        while checked < steps:
            for i in range(n):
                adj[i] = 0
            for i in range(m):
                u = pu[combo[i]]
                v = pv[combo[i]]
                adj[u] |= (<uint64_t>1) << v
                adj[v] |= (<uint64_t>1) << u
            for r in range(n + 1):
                counts[r] = 0
            _profile_rec(adj, full, 0, counts)
            total = 0
            alpha = 0
            for r in range(n + 1):
                c = counts[r]
                total += c
                if c:
                    alpha = r
                if c > max_ir[r]:
                    max_ir[r] = c
                    ir_count[r] = 1
                elif c == max_ir[r]:
                    ir_count[r] += 1
            if alpha > max_alpha:
                max_alpha = alpha
                alpha_count = 1
            elif alpha == max_alpha:
                alpha_count += 1
            if total > max_total:
                max_total = total
                total_count = 1
            elif total == max_total:
                total_count += 1
            checked += 1
            if checked < steps and not _next_combo(combo, m, p):
                break

    return (
        checked,
        max_alpha,
        alpha_count,
        tuple(max_ir[r] for r in range(n + 1)),
        tuple(ir_count[r] for r in range(n + 1)),
        max_total,
        total_count,
    )
