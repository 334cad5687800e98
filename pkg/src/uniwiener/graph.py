"""Graph representation, distance/Wiener computation, and closed forms.

Vertices are dense 0-based integers.  All values are immutable after
construction and every operation is pure, so graphs can be shared freely
across parallel workers.
"""

from __future__ import annotations

import math
from array import array
from dataclasses import dataclass

from . import kernels
from .errors import (
    DisconnectedError,
    DuplicateEdgeError,
    EdgeCountMismatchError,
    GirthTooSmallError,
    InvalidClassKeyError,
    NotConnectedError,
    SelfLoopError,
    VertexOutOfRangeError,
)

INFINITE_TRANSMISSION = math.inf


class Graph:
    """Undirected simple graph: vertex count plus sorted neighbor lists."""

    __slots__ = ("n", "adj", "_csr_cache")

    def __init__(self, n: int, adj: tuple[tuple[int, ...], ...]):
        self.n = n
        self.adj = adj
        self._csr_cache: tuple[array, array] | None = None

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        """Build a graph, rejecting self-loops, duplicates and bad vertex ids."""
        if n < 0:
            raise VertexOutOfRangeError("vertex count must be nonnegative")
        nbrs: list[list[int]] = [[] for _ in range(n)]
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise VertexOutOfRangeError(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise SelfLoopError(f"self-loop at {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise DuplicateEdgeError(f"duplicate edge {key}")
            seen.add(key)
            nbrs[u].append(v)
            nbrs[v].append(u)
        return cls(n, tuple(tuple(sorted(a)) for a in nbrs))

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def csr(self) -> tuple[array, array]:
        if self._csr_cache is None:
            indptr = array("i", [0] * (self.n + 1))
            indices = array("i")
            for v in range(self.n):
                indices.extend(self.adj[v])
                indptr[v + 1] = len(indices)
            self._csr_cache = (indptr, indices)
        return self._csr_cache

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        indptr, indices = self.csr()
        dist = kernels.bfs_distances(self.n, indptr, indices, 0)
        return all(d >= 0 for d in dist)

    def relabeled(self, mapping: dict[int, int]) -> "Graph":
        """Copy with vertex ids renamed through `mapping` (a bijection)."""
        return Graph.from_edges(self.n, [(mapping[u], mapping[v]) for u, v in self.edges()])

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class DistanceVector:
    """BFS result from one source; unreachable vertices have dist None."""

    source: int
    dist: tuple[int | None, ...]

    @property
    def reachable(self) -> tuple[bool, ...]:
        return tuple(d is not None for d in self.dist)

    @property
    def transmission(self) -> int | float:
        """Sum of distances from the source; infinite when not all reachable."""
        if not all(self.reachable):
            return INFINITE_TRANSMISSION
        return sum(self.dist)  # type: ignore[arg-type]


@dataclass(frozen=True)
class ClassKey:
    """The pair (n, r): unicyclic graphs on n vertices, r of even degree."""

    n: int
    r: int

    def __post_init__(self):
        if self.n < 3:
            raise InvalidClassKeyError(f"need n >= 3, got n={self.n}")
        if not 0 <= self.r <= self.n:
            raise InvalidClassKeyError(f"need 0 <= r <= n, got r={self.r}, n={self.n}")
        if (self.n - self.r) % 2 != 0:
            raise InvalidClassKeyError(
                f"n - r must be even (odd-degree vertices pair up), got ({self.n}, {self.r})"
            )


class UnicyclicGraph:
    """Validated connected graph with exactly one cycle.

    `cycle` is the cycle's vertex sequence (deterministic orientation:
    starts at the smallest cycle vertex and proceeds toward its smaller
    cycle neighbor); `girth` is its length.
    """

    __slots__ = ("graph", "cycle", "_cycle_set")

    def __init__(self, graph: Graph, cycle: tuple[int, ...]):
        self.graph = graph
        self.cycle = cycle
        self._cycle_set = frozenset(cycle)

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def girth(self) -> int:
        return len(self.cycle)

    @property
    def cycle_set(self) -> frozenset[int]:
        return self._cycle_set

    def cycle_neighbors(self, u: int) -> tuple[int, int]:
        """The two neighbors of cycle vertex u along the cycle."""
        i = self.cycle.index(u)
        g = self.girth
        return self.cycle[(i - 1) % g], self.cycle[(i + 1) % g]

    def tree_members(self, u: int) -> tuple[int, ...]:
        """Vertices of the hanging tree rooted at cycle vertex u (u included)."""
        if u not in self._cycle_set:
            raise VertexOutOfRangeError(f"{u} is not a cycle vertex")
        prev, nxt = self.cycle_neighbors(u)
        members = [u]
        stack = [w for w in self.graph.neighbors(u) if w not in (prev, nxt)]
        seen = {u, *stack}
        while stack:
            v = stack.pop()
            members.append(v)
            for w in self.graph.neighbors(v):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return tuple(sorted(members))

    def star_branches(self, u: int) -> list[list[int]] | None:
        """Branch paths of the tree at u when that tree is a subdivided star.

        Each branch is the vertex path leaving u (u excluded).  Returns None
        when some tree vertex other than u branches (degree > 2).
        """
        prev, nxt = self.cycle_neighbors(u)
        branches = []
        for w in self.graph.neighbors(u):
            if w in (prev, nxt):
                continue
            path = [w]
            prior, cur = u, w
            while True:
                ahead = [x for x in self.graph.neighbors(cur) if x != prior]
                if not ahead:
                    break
                if len(ahead) > 1:
                    return None
                prior, cur = cur, ahead[0]
                path.append(cur)
            branches.append(path)
        return branches

    def tree_is_star(self, u: int) -> bool:
        """True when every vertex hanging at u is a leaf adjacent to u."""
        branches = self.star_branches(u)
        return branches is not None and all(len(b) == 1 for b in branches)

    def __eq__(self, other) -> bool:
        return isinstance(other, UnicyclicGraph) and self.graph == other.graph

    def __hash__(self) -> int:
        return hash(self.graph)

    def __repr__(self) -> str:
        return f"UnicyclicGraph(n={self.n}, girth={self.girth})"


def build_unicyclic(n: int, edges) -> UnicyclicGraph:
    """Validate (n, edges) as a unicyclic graph and extract its cycle."""
    g = Graph.from_edges(n, edges)
    return as_unicyclic(g)


def as_unicyclic(g: Graph) -> UnicyclicGraph:
    """Wrap an existing Graph, checking |E| = |V| and connectivity."""
    if g.m != g.n:
        raise EdgeCountMismatchError(f"unicyclic graph needs |E| = |V|, got {g.m} != {g.n}")
    if not g.is_connected():
        raise NotConnectedError("graph is not connected")
    return UnicyclicGraph(g, _extract_cycle(g))


def _extract_cycle(g: Graph) -> tuple[int, ...]:
    """Peel leaves until only the cycle remains, then walk it."""
    deg = [g.degree(v) for v in range(g.n)]
    queue = [v for v in range(g.n) if deg[v] == 1]
    removed = [False] * g.n
    while queue:
        v = queue.pop()
        removed[v] = True
        deg[v] = 0
        for w in g.neighbors(v):
            if not removed[w]:
                deg[w] -= 1
                if deg[w] == 1:
                    queue.append(w)
    cycle_vertices = [v for v in range(g.n) if not removed[v]]
    start = min(cycle_vertices)
    on_cycle = set(cycle_vertices)
    second = min(w for w in g.neighbors(start) if w in on_cycle)
    seq = [start, second]
    while True:
        cur, prev = seq[-1], seq[-2]
        nxt = next(w for w in g.neighbors(cur) if w in on_cycle and w != prev)
        if nxt == start:
            break
        seq.append(nxt)
    return tuple(seq)


# -- distance and Wiener computation -----------------------------------------

def distances(g: Graph, u: int) -> DistanceVector:
    """BFS distances from u."""
    if not 0 <= u < g.n:
        raise VertexOutOfRangeError(f"vertex {u} outside 0..{g.n - 1}")
    indptr, indices = g.csr()
    raw = kernels.bfs_distances(g.n, indptr, indices, u)
    return DistanceVector(u, tuple(d if d >= 0 else None for d in raw))


def transmission(g: Graph, u: int) -> int | float:
    """Sum of distances from u to all vertices; infinite when disconnected."""
    return distances(g, u).transmission


def wiener(g: Graph | UnicyclicGraph) -> int:
    """Sum of shortest-path distances over unordered vertex pairs."""
    if isinstance(g, UnicyclicGraph):
        g = g.graph
    indptr, indices = g.csr()
    total = kernels.transmission_sum(g.n, indptr, indices)
    if total < 0:
        raise DisconnectedError("Wiener index undefined: graph is disconnected")
    return total // 2


def even_degree_count(g: Graph | UnicyclicGraph) -> int:
    """Number of vertices of even degree (isolated vertices count: degree 0)."""
    if isinstance(g, UnicyclicGraph):
        g = g.graph
    return sum(1 for v in range(g.n) if g.degree(v) % 2 == 0)


# -- closed forms -------------------------------------------------------------

def wiener_cycle_closed(g: int) -> int:
    """Wiener index of the cycle on g vertices: k^3 for g=2k, k(k+1)(2k+1)/2 for g=2k+1."""
    if g < 3:
        raise GirthTooSmallError(f"cycles need length >= 3, got {g}")
    k = g // 2
    if g % 2 == 0:
        return k**3
    return k * (k + 1) * (2 * k + 1) // 2


def wiener_path_closed(t: int) -> int:
    """Wiener index of the path with t edges: t(t+1)(t+2)/6."""
    if t < 0:
        raise VertexOutOfRangeError("path edge count must be nonnegative")
    return t * (t + 1) * (t + 2) // 6


def cycle_transmission_closed(g: int) -> int:
    """Transmission of any vertex on the cycle of length g, i.e. 2 W(C_g) / g.

    Evaluates to k^2 for g = 2k and k(k+1) for g = 2k+1.
    """
    if g < 3:
        raise GirthTooSmallError(f"cycles need length >= 3, got {g}")
    k = g // 2
    if g % 2 == 0:
        return k * k
    return k * (k + 1)


def wiener_vertex_join(w1: int, w2: int, n1: int, n2: int, d1: int, d2: int) -> int:
    """Wiener index of two graphs identified at a vertex u.

    w_i are the parts' Wiener indices, n_i their orders, d_i the transmission
    of u inside part i: W = w1 + w2 + (n1-1) d2 + (n2-1) d1.
    """
    if n1 < 1 or n2 < 1:
        raise VertexOutOfRangeError("parts must be nonempty")
    return w1 + w2 + (n1 - 1) * d2 + (n2 - 1) * d1


def vertex_identify(g1: Graph, u1: int, g2: Graph, u2: int) -> tuple[Graph, int]:
    """Glue g1 and g2 by identifying u1 with u2; returns (graph, glued vertex).

    g1 keeps its labels; g2's vertices are appended densely.
    """
    if not 0 <= u1 < g1.n or not 0 <= u2 < g2.n:
        raise VertexOutOfRangeError("identification vertex out of range")
    offset = g1.n
    mapping = {}
    nxt = offset
    for v in range(g2.n):
        if v == u2:
            mapping[v] = u1
        else:
            mapping[v] = nxt
            nxt += 1
    edges = g1.edges() + [(mapping[a], mapping[b]) for a, b in g2.edges()]
    return Graph.from_edges(g1.n + g2.n - 1, edges), u1
