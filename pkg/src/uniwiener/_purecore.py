"""Pure-Python kernels: BFS distance sums and canonical-ordering search.

Same API as the compiled `_fastcore` module; selected as a fallback at import
time by `kernels`.  Graphs arrive in CSR form (indptr, indices).
"""


def bfs_distances(n, indptr, indices, source):
    """Hop counts from `source`; -1 marks unreachable vertices."""
    dist = [-1] * n
    dist[source] = 0
    frontier = [source]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for v in frontier:
            for k in range(indptr[v], indptr[v + 1]):
                w = indices[k]
                if dist[w] < 0:
                    dist[w] = d
                    nxt.append(w)
        frontier = nxt
    return dist


def eccentricities(n, indptr, indices):
    """Per-vertex eccentricity, or None when the graph is disconnected."""
    adj = [list(indices[indptr[v]:indptr[v + 1]]) for v in range(n)]
    out = []
    for src in range(n):
        dist = [-1] * n
        dist[src] = 0
        frontier = [src]
        seen = 1
        d = 0
        while frontier:
            d += 1
            nxt = []
            for v in frontier:
                for w in adj[v]:
                    if dist[w] < 0:
                        dist[w] = d
                        nxt.append(w)
                        seen += 1
            frontier = nxt
        if seen < n:
            return None
        out.append(d - 1 if d else 0)
    return out


def transmission_sum(n, indptr, indices):
    """Sum of d(u, v) over all ordered pairs, or -1 if the graph is disconnected.

    One BFS per source vertex; the Wiener index is half this value.
    """
    adj = [list(indices[indptr[v]:indptr[v + 1]]) for v in range(n)]
    total = 0
    for src in range(n):
        dist = [-1] * n
        dist[src] = 0
        frontier = [src]
        seen = 1
        d = 0
        while frontier:
            d += 1
            nxt = []
            for v in frontier:
                for w in adj[v]:
                    if dist[w] < 0:
                        dist[w] = d
                        total += d
                        nxt.append(w)
                        seen += 1
            frontier = nxt
        if seen < n:
            return -1
    return total


def canonical_columns(n, indptr, indices, cells):
    """Maximal column encoding of the adjacency matrix over constrained orderings.

    Orderings must list the vertices cell by cell (cells are an
    isomorphism-invariant partition, already in visit order).  Position p
    contributes the integer whose bits are adjacency between the vertex placed
    at p and the vertices placed at 0..p-1, earliest placement most
    significant.  Returns the lexicographically greatest column sequence.
    """
    if n == 0:
        return []
    masks = [0] * n
    for v in range(n):
        for k in range(indptr[v], indptr[v + 1]):
            masks[v] |= 1 << indices[k]

    cell_of_pos = []
    for idx, cell in enumerate(cells):
        cell_of_pos.extend([idx] * len(cell))

    best = [-1] * n
    used = [False] * n
    order = [0] * n

    def search(p):
        if p == n:
            return
        for v in cells[cell_of_pos[p]]:
            if used[v]:
                continue
            col = 0
            mv = masks[v]
            for i in range(p):
                col = (col << 1) | ((mv >> order[i]) & 1)
            if col < best[p]:
                continue
            if col > best[p]:
                best[p] = col
                for q in range(p + 1, n):
                    best[q] = -1
            used[v] = True
            order[p] = v
            search(p + 1)
            used[v] = False

    search(0)
    return best
