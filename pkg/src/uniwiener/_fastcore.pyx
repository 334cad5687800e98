# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: BFS distance sums and canonical-ordering search.

Mirrors the `_purecore` API; see there for the semantics.  Graphs arrive in
CSR form (indptr, indices) as 32-bit integer buffers.
"""

from libc.stdlib cimport free, malloc


def bfs_distances(int n, int[::1] indptr, int[::1] indices, int source):
    """Hop counts from `source`; -1 marks unreachable vertices."""
    cdef long long *dist = <long long *> malloc(n * sizeof(long long))
    cdef int *queue = <int *> malloc(n * sizeof(int))
    if dist == NULL or queue == NULL:
        free(dist)
        free(queue)
        raise MemoryError()
    cdef int head = 0, tail = 0, v, w, k
    cdef int i
    for i in range(n):
        dist[i] = -1
    dist[source] = 0
    queue[tail] = source
    tail += 1
    while head < tail:
        v = queue[head]
        head += 1
        for k in range(indptr[v], indptr[v + 1]):
            w = indices[k]
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                queue[tail] = w
                tail += 1
    out = [dist[i] for i in range(n)]
    free(dist)
    free(queue)
    return out


def eccentricities(int n, int[::1] indptr, int[::1] indices):
    """Per-vertex eccentricity, or None when the graph is disconnected."""
    cdef long long *dist = <long long *> malloc(n * sizeof(long long))
    cdef int *queue = <int *> malloc(n * sizeof(int))
    if dist == NULL or queue == NULL:
        free(dist)
        free(queue)
        raise MemoryError()
    cdef int head, tail, v, w, k, src, seen
    cdef long long ecc
    cdef int i
    out = []
    for src in range(n):
        for i in range(n):
            dist[i] = -1
        dist[src] = 0
        queue[0] = src
        head = 0
        tail = 1
        seen = 1
        ecc = 0
        while head < tail:
            v = queue[head]
            head += 1
            for k in range(indptr[v], indptr[v + 1]):
                w = indices[k]
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    if dist[w] > ecc:
                        ecc = dist[w]
                    queue[tail] = w
                    tail += 1
                    seen += 1
        if seen < n:
            free(dist)
            free(queue)
            return None
        out.append(ecc)
    free(dist)
    free(queue)
    return out


def transmission_sum(int n, int[::1] indptr, int[::1] indices):
    """Sum of d(u, v) over all ordered pairs, or -1 if disconnected."""
    cdef long long *dist = <long long *> malloc(n * sizeof(long long))
    cdef int *queue = <int *> malloc(n * sizeof(int))
    if dist == NULL or queue == NULL:
        free(dist)
        free(queue)
        raise MemoryError()
    cdef long long total = 0
    cdef int head, tail, v, w, k, src, seen
    cdef int i
    for src in range(n):
        for i in range(n):
            dist[i] = -1
        dist[src] = 0
        queue[0] = src
        head = 0
        tail = 1
        seen = 1
        while head < tail:
            v = queue[head]
            head += 1
            for k in range(indptr[v], indptr[v + 1]):
                w = indices[k]
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    total += dist[w]
                    queue[tail] = w
                    tail += 1
                    seen += 1
        if seen < n:
            free(dist)
            free(queue)
            return -1
    free(dist)
    free(queue)
    return total


cdef struct SearchState:
    int n
    unsigned long long *masks
    unsigned long long *best
    int *order
    unsigned char *used
    int *cell_of_pos
    int *cell_start
    int *cell_items


cdef void _search(SearchState *st, int p) noexcept:
    if p == st.n:
        return
    cdef int ci = st.cell_of_pos[p]
    cdef int lo = st.cell_start[ci]
    cdef int hi = st.cell_start[ci + 1]
    cdef int idx, i, q, v
    cdef unsigned long long col, mv
    for idx in range(lo, hi):
        v = st.cell_items[idx]
        if st.used[v]:
            continue
        mv = st.masks[v]
        col = 0
        for i in range(p):
            col = (col << 1) | ((mv >> st.order[i]) & 1ULL)
        if st.best[p] != <unsigned long long> -1 and col < st.best[p]:
            continue
        if st.best[p] == <unsigned long long> -1 or col > st.best[p]:
            st.best[p] = col
            for q in range(p + 1, st.n):
                st.best[q] = <unsigned long long> -1
        st.used[v] = 1
        st.order[p] = v
        _search(st, p + 1)
        st.used[v] = 0


def canonical_columns(int n, int[::1] indptr, int[::1] indices, cells):
    """Maximal column encoding over cell-respecting orderings (see _purecore)."""
    if n == 0:
        return []
    if n > 64:
        raise ValueError("compiled canonical search limited to 64 vertices")
    cdef SearchState st
    st.n = n
    st.masks = <unsigned long long *> malloc(n * sizeof(unsigned long long))
    st.best = <unsigned long long *> malloc(n * sizeof(unsigned long long))
    st.order = <int *> malloc(n * sizeof(int))
    st.used = <unsigned char *> malloc(n * sizeof(unsigned char))
    st.cell_of_pos = <int *> malloc(n * sizeof(int))
    st.cell_start = <int *> malloc((len(cells) + 1) * sizeof(int))
    st.cell_items = <int *> malloc(n * sizeof(int))
    if (st.masks == NULL or st.best == NULL or st.order == NULL or st.used == NULL
            or st.cell_of_pos == NULL or st.cell_start == NULL or st.cell_items == NULL):
        _free_state(&st)
        raise MemoryError()
    cdef int v, k, pos, ci
    for v in range(n):
        st.masks[v] = 0
        st.best[v] = <unsigned long long> -1
        st.used[v] = 0
    for v in range(n):
        for k in range(indptr[v], indptr[v + 1]):
            st.masks[v] |= 1ULL << indices[k]
    pos = 0
    ci = 0
    for cell in cells:
        st.cell_start[ci] = pos
        for v in cell:
            st.cell_items[pos] = v
            st.cell_of_pos[pos] = ci
            pos += 1
        ci += 1
    st.cell_start[ci] = pos
    if pos != n:
        _free_state(&st)
        raise ValueError("cells must partition the vertices")
    _search(&st, 0)
    out = [st.best[v] for v in range(n)]
    free(st.cell_items)
    free(st.cell_start)
    free(st.cell_of_pos)
    free(st.used)
    free(st.order)
    free(st.best)
    free(st.masks)
    return out


cdef void _free_state(SearchState *st) noexcept:
    free(st.cell_items)
    free(st.cell_start)
    free(st.cell_of_pos)
    free(st.used)
    free(st.order)
    free(st.best)
    free(st.masks)
