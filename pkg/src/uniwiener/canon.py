"""Canonical, isomorphism-invariant byte codes for small connected graphs.

The code is the extremal adjacency-matrix encoding over all vertex orderings
compatible with an invariant vertex partition.  The partition comes from
iterated degree/eccentricity refinement; the remaining search is exact, so
two graphs get equal codes if and only if they are isomorphic.  Intended for
desk-scale inputs (n <= DEFAULT_MAX_N by default).
"""

from __future__ import annotations

from typing import TYPE_CHECKING

from . import kernels
from .errors import DisconnectedError, TooLargeError

if TYPE_CHECKING:
    from .graph import Graph

DEFAULT_MAX_N = 20

CanonicalCode = bytes


def refined_cells(g: "Graph") -> list[list[int]]:
    """Invariant ordered partition of the vertices.

    Vertices are first keyed by (degree, eccentricity), then refined by the
    sorted multiset of neighbor keys until the partition stabilizes.  Cells
    are returned coarsest-key-last so that high-degree vertices are placed
    first during the ordering search.
    """
    n = g.n
    indptr, indices = g.csr()
    ecc = kernels.eccentricities(n, indptr, indices)
    if ecc is None:
        raise DisconnectedError("canonical code needs a connected graph")

    keys: list[tuple] = [(g.degree(v), ecc[v]) for v in range(n)]
    ranks = _rank(keys)
    nclasses = len(set(ranks))
    while True:
        sigs = [
            (ranks[v], tuple(sorted(ranks[w] for w in g.neighbors(v))))
            for v in range(n)
        ]
        ranks = _rank(sigs)
        new_nclasses = len(set(ranks))
        if new_nclasses == nclasses:
            break
        nclasses = new_nclasses

    cells: dict[int, list[int]] = {}
    for v in range(n):
        cells.setdefault(ranks[v], []).append(v)
    # Descending rank puts the structurally "largest" vertices first.
    return [cells[r] for r in sorted(cells, reverse=True)]


def _rank(values: list[tuple]) -> list[int]:
    ordered = sorted(set(values))
    index = {val: i for i, val in enumerate(ordered)}
    return [index[v] for v in values]


def canonical_code(g: "Graph", max_n: int = DEFAULT_MAX_N) -> CanonicalCode:
    """Byte code equal for two graphs exactly when they are isomorphic.

    Raises TooLargeError beyond `max_n` and DisconnectedError on disconnected
    input.  Codes sort by vertex count first, so streams ordered by code stay
    grouped by size.
    """
    n = g.n
    if n > max_n or n > 64:
        raise TooLargeError(f"canonical code limited to {min(max_n, 64)} vertices, got {n}")
    if n == 0:
        return b"\x00"
    cells = refined_cells(g)
    indptr, indices = g.csr()
    cols = kernels.canonical_columns(n, indptr, indices, cells)
    bits = 0
    nbits = 0
    for p in range(1, n):
        bits = (bits << p) | cols[p]
        nbits += p
    nbytes = (nbits + 7) // 8
    return bytes([n]) + bits.to_bytes(nbytes, "big")


def decode_canonical(code: CanonicalCode) -> tuple[int, list[tuple[int, int]]]:
    """Rebuild (n, edges) from a canonical code; the edge list is itself canonical."""
    n = code[0]
    nbits = n * (n - 1) // 2
    bits = int.from_bytes(code[1:], "big")
    edges = []
    offset = 0  # bits consumed from the most significant end
    for p in range(1, n):
        for i in range(p):
            if (bits >> (nbits - 1 - offset)) & 1:
                edges.append((i, p))
            offset += 1
    return n, sorted(edges)
