"""Wiener-decreasing graph operations.

Each transform validates its full precondition list and raises a structured
error instead of proceeding.  Input graphs are never mutated; every operation
returns a new graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Literal

from .canon import canonical_code
from .errors import (
    BranchesAlreadyBalancedError,
    ExcludedConfigurationError,
    GirthTooSmallError,
    InvalidPartitionError,
    NoLeafNeighborError,
    NotABridgeError,
    NotASubdividedStarError,
    PreconditionViolatedError,
    TrivialBridgeError,
    TrivialPartError,
    VertexOutOfRangeError,
    WrongShapeError,
)
from .families import hang_at_first, make_star
from .graph import Graph, UnicyclicGraph, as_unicyclic

Direction = Literal["x_to_y", "y_to_x"]


# -- shifting a part between two cut vertices ---------------------------------

@dataclass(frozen=True)
class ShiftSpec:
    """Decomposition of a graph at two cut vertices u, v.

    `x_side` contains u, `y_side` contains v; the middle part H is the rest
    of the graph together with u and v.  No edge may leave x_side except
    through u, and none may leave y_side except through v.
    """

    graph: Graph
    u: int
    v: int
    x_side: frozenset[int]
    y_side: frozenset[int]

    def validate(self) -> None:
        g, u, v = self.graph, self.u, self.v
        x, y = self.x_side, self.y_side
        if u == v:
            raise InvalidPartitionError("cut vertices must be distinct")
        if u not in x or v in x or v not in y or u in y:
            raise InvalidPartitionError("x_side must contain u only, y_side v only")
        if x & y:
            raise InvalidPartitionError("x_side and y_side overlap")
        for side, anchor in ((x, u), (y, v)):
            for w in side:
                if not 0 <= w < g.n:
                    raise InvalidPartitionError(f"vertex {w} out of range")
                if w == anchor:
                    continue
                for z in g.neighbors(w):
                    if z not in side:
                        raise InvalidPartitionError(
                            f"edge ({w}, {z}) leaves the moved part away from its cut vertex"
                        )

    def h_side(self) -> frozenset[int]:
        rest = set(range(self.graph.n)) - (self.x_side - {self.u}) - (self.y_side - {self.v})
        return frozenset(rest)


def shift(spec: ShiftSpec, direction: Direction) -> Graph:
    """Reattach one part at the other cut vertex (X onto v, or Y onto u)."""
    spec.validate()
    if len(spec.x_side) < 2 or len(spec.y_side) < 2:
        raise TrivialPartError("both parts need at least two vertices")
    if direction == "x_to_y":
        moved, anchor, target = spec.x_side, spec.u, spec.v
    elif direction == "y_to_x":
        moved, anchor, target = spec.y_side, spec.v, spec.u
    else:
        raise InvalidPartitionError(f"unknown direction {direction!r}")
    edges = []
    for a, b in spec.graph.edges():
        if a in moved and b in moved and anchor in (a, b):
            other = b if a == anchor else a
            edges.append((target, other))
        else:
            edges.append((a, b))
    return Graph.from_edges(spec.graph.n, edges)


def bridges(g: Graph) -> list[tuple[int, int]]:
    """All bridges of g, as (u, v) with u < v."""
    out = []
    for u, v in g.edges():
        if not _connected_without(g, u, v):
            out.append((u, v))
    return out


def _connected_without(g: Graph, u: int, v: int) -> bool:
    """Whether u and v stay connected after removing edge uv."""
    seen = {u}
    stack = [u]
    while stack:
        w = stack.pop()
        for z in g.neighbors(w):
            if w == u and z == v:
                continue
            if z not in seen:
                if z == v:
                    return True
                seen.add(z)
                stack.append(z)
    return False


def shift_over_bridge(g: Graph, bridge: tuple[int, int]) -> Graph:
    """Collapse a nontrivial bridge: move one side onto the other endpoint.

    The two directions coincide, leaving the far endpoint pendant.  Strictly
    decreases the Wiener index; preserves the even-degree count whenever at
    least one endpoint has odd degree.
    """
    u, v = bridge
    if not g.has_edge(u, v):
        raise NotABridgeError(f"({u}, {v}) is not an edge")
    if _connected_without(g, u, v):
        raise NotABridgeError(f"({u}, {v}) is not a bridge")
    if g.degree(u) == 1 or g.degree(v) == 1:
        raise TrivialBridgeError("bridge endpoint is a leaf")
    x_side = _component_without(g, u, v)
    spec = ShiftSpec(g, u, v, frozenset(x_side), frozenset(set(range(g.n)) - x_side))
    return shift(spec, "x_to_y")


def _component_without(g: Graph, u: int, v: int) -> set[int]:
    """Vertices on u's side once edge uv is removed."""
    seen = {u}
    stack = [u]
    while stack:
        w = stack.pop()
        for z in g.neighbors(w):
            if w == u and z == v:
                continue
            if z not in seen:
                seen.add(z)
                stack.append(z)
    return seen


# -- cycle-edge contraction with a compensating leaf ---------------------------

@dataclass(frozen=True)
class ContractionChoice:
    """Cycle edge (u, v) with d(u) maximal, then d(u)+d(v) maximal."""

    u: int
    v: int


@lru_cache(maxsize=None)
def _excluded_codes() -> frozenset[bytes]:
    """Pentagon with one pendant, and with two pendants two apart."""
    one = hang_at_first(5, make_star(1))
    two = _pentagon_two_pendants()
    return frozenset({canonical_code(one.graph), canonical_code(two.graph)})


def _pentagon_two_pendants() -> UnicyclicGraph:
    edges = [(i, (i + 1) % 5) for i in range(5)] + [(0, 5), (3, 6)]
    return as_unicyclic(Graph.from_edges(7, edges))


def contraction_choice(g: UnicyclicGraph) -> ContractionChoice:
    """Canonical choice: maximize d(u), then d(u)+d(v), then lowest cycle order."""
    deg = g.graph.degree
    dmax = max(deg(u) for u in g.cycle)
    best: tuple[int, int, int] | None = None
    for i, u in enumerate(g.cycle):
        if deg(u) != dmax:
            continue
        for v in g.cycle_neighbors(u):
            j = g.cycle.index(v)
            cand = (-(deg(u) + deg(v)), i, j)
            if best is None or cand < best:
                best = cand
    assert best is not None
    return ContractionChoice(g.cycle[best[1]], g.cycle[best[2]])


def check_contraction_preconditions(g: UnicyclicGraph) -> str | None:
    """The failed precondition's name, or None when contraction applies."""
    if g.girth < 4:
        return "girth >= 4"
    deg = g.graph.degree
    if max(deg(v) for v in range(g.n)) < 3:
        return "max degree >= 3"
    big = 0
    for u in g.cycle:
        d = deg(u)
        if d >= 4:
            big += 1
        if d == 2:
            continue
        if d % 2 == 0:
            return "cycle degrees 2 or odd"
        members = g.tree_members(u)
        leaves = [w for w in members if w != u and deg(w) == 1 and g.graph.has_edge(u, w)]
        if len(members) - 1 != d - 2 or len(leaves) != d - 2:
            return "odd cycle vertex adjacent to exactly d-2 leaves"
    if big > 1:
        return "at most one cycle vertex of degree >= 4"
    if canonical_code(g.graph) in _excluded_codes():
        return "excluded configuration"
    return None


def contract_and_leaf(
    g: UnicyclicGraph, choice: ContractionChoice | None = None
) -> UnicyclicGraph:
    """Contract the chosen cycle edge and add a leaf at the kept endpoint.

    Preserves the vertex count and the even-degree count, shortens the cycle
    by one, and strictly decreases the Wiener index on admissible inputs.
    """
    failed = check_contraction_preconditions(g)
    if failed == "excluded configuration":
        raise ExcludedConfigurationError("pentagon-with-pendants configuration excluded")
    if failed is not None:
        raise PreconditionViolatedError(failed)
    if choice is None:
        choice = contraction_choice(g)
    else:
        _validate_choice(g, choice)
    u, v = choice.u, choice.v
    # Merge v into u, then add a fresh leaf at u; relabel densely with the
    # freed id reused for the new leaf.
    edges = []
    for a, b in g.graph.edges():
        if {a, b} == {u, v}:
            continue
        a2 = u if a == v else a
        b2 = u if b == v else b
        edges.append((a2, b2))
    edges.append((u, v))  # v's old id becomes the new leaf
    out = as_unicyclic(Graph.from_edges(g.n, edges))
    assert out.girth == g.girth - 1
    return out


def _validate_choice(g: UnicyclicGraph, choice: ContractionChoice) -> None:
    deg = g.graph.degree
    u, v = choice.u, choice.v
    if u not in g.cycle_set or v not in g.cycle_set or v not in g.cycle_neighbors(u):
        raise PreconditionViolatedError("choice must be a cycle edge")
    dmax = max(deg(w) for w in g.cycle)
    if deg(u) != dmax:
        raise PreconditionViolatedError("d(u) must be maximal on the cycle")
    best_pair = max(
        deg(a) + deg(b)
        for a in g.cycle
        if deg(a) == dmax
        for b in g.cycle_neighbors(a)
    )
    if deg(u) + deg(v) != best_pair:
        raise PreconditionViolatedError("d(u) + d(v) must be maximal subject to d(u)")


def cycle_distance_drop(g: int) -> int:
    """Total pair-distance decrease among kept cycle vertices when a cycle
    of length g is contracted to length g-1: k(k-1)/2 with k = floor(g/2)."""
    if g < 4:
        raise GirthTooSmallError(f"contraction needs girth >= 4, got {g}")
    k = g // 2
    return k * (k - 1) // 2


# -- rebalancing subdivided-star branches --------------------------------------

def rebalance(
    g: UnicyclicGraph, center: int, long_branch: int, short_branch: int
) -> UnicyclicGraph:
    """Move the long branch's end vertex to extend the short branch.

    Branches are identified by their first vertex (the neighbor of `center`).
    Requires the tree at `center` to be a subdivided star and the two branch
    lengths to differ by at least 2; strictly decreases the Wiener index while
    preserving the vertex count and even-degree count.
    """
    if center not in g.cycle_set:
        raise NotASubdividedStarError(f"{center} is not a cycle vertex")
    branches = g.star_branches(center)
    if branches is None:
        raise NotASubdividedStarError(f"tree at {center} is not a subdivided star")
    by_head = {path[0]: path for path in branches}
    if long_branch not in by_head or short_branch not in by_head:
        raise NotASubdividedStarError("branch ids must be neighbors of the center")
    long_path, short_path = by_head[long_branch], by_head[short_branch]
    if len(long_path) - len(short_path) < 2:
        raise BranchesAlreadyBalancedError(
            f"branch lengths {len(long_path)} and {len(short_path)} differ by < 2"
        )
    end = long_path[-1]
    before_end = long_path[-2] if len(long_path) >= 2 else center
    target = short_path[-1]
    edges = [e for e in g.graph.edges() if set(e) != {before_end, end}]
    edges.append((target, end))
    return as_unicyclic(Graph.from_edges(g.n, edges))


# -- the girth-reducing operation on single-star compositions -------------------

def _single_star_shape(g: UnicyclicGraph) -> tuple[int, list[list[int]]] | None:
    """(center, branches) when g is a cycle with one subdivided star hanging
    at a single cycle vertex and nothing anywhere else; None otherwise."""
    deg = g.graph.degree
    carriers = [u for u in g.cycle if deg(u) > 2]
    if len(carriers) != 1:
        return None
    center = carriers[0]
    branches = g.star_branches(center)
    if branches is None:
        return None
    return center, branches


def operation_A(g: UnicyclicGraph) -> UnicyclicGraph:
    """Identify one cycle neighbor into the star center and extend a pendant
    branch by one new leaf.

    Applies to a cycle of girth >= 4 carrying a single almost-balanced
    subdivided star with branch lengths at most 2, where the center has a
    pendant neighbor.  Preserves the vertex count and even-degree count and
    shortens the cycle by one.
    """
    if g.girth < 4:
        raise GirthTooSmallError(f"operation needs girth >= 4, got {g.girth}")
    shape = _single_star_shape(g)
    if shape is None:
        raise WrongShapeError("graph must be a cycle with one subdivided star")
    center, branches = shape
    if not branches or max(len(b) for b in branches) > 2:
        raise WrongShapeError("star branches must have length 1 or 2")
    leaf_heads = sorted(b[0] for b in branches if len(b) == 1)
    if not leaf_heads:
        raise NoLeafNeighborError("the star center has no pendant neighbor")
    w = leaf_heads[0]
    _, v = g.cycle_neighbors(center)  # contract toward the cycle successor
    edges = []
    for a, b in g.graph.edges():
        if {a, b} == {center, v}:
            continue
        a2 = center if a == v else a
        b2 = center if b == v else b
        edges.append((a2, b2))
    edges.append((w, v))  # the freed id becomes the new leaf on branch w
    return as_unicyclic(Graph.from_edges(g.n, edges))


def operation_A_delta_closed(g: int, tsize: int) -> Fraction:
    """Closed-form Wiener change of the girth-reducing operation.

    For cycle length g = 2k: k^2/2 - 9k/2 + (k-2)|T| + 6; for g = 2k+1 the
    constant is 4 instead of 6.  |T| = tsize is the star's vertex count
    (center included).  Positive values mean the operation decreases W.
    """
    if g < 4:
        raise GirthTooSmallError(f"operation needs girth >= 4, got {g}")
    if tsize < 1:
        raise VertexOutOfRangeError("tree must have at least one vertex")
    k = g // 2
    const = 6 if g % 2 == 0 else 4
    return Fraction(k * k, 2) - Fraction(9 * k, 2) + (k - 2) * tsize + const


# -- exhaustive spec enumeration helpers (used by the verification suite) ------

def all_shift_specs(g: Graph) -> Iterator[ShiftSpec]:
    """Every valid two-cut-vertex decomposition of g with nontrivial parts."""
    comps: dict[int, list[frozenset[int]]] = {}
    for u in range(g.n):
        comps[u] = _components_minus(g, u)
    for u, v in combinations(range(g.n), 2):
        x_parts = [c for c in comps[u] if v not in c]
        y_parts = [c for c in comps[v] if u not in c]
        if not x_parts or not y_parts:
            continue
        for xs in _nonempty_unions(x_parts):
            for ys in _nonempty_unions(y_parts):
                yield ShiftSpec(g, u, v, xs | {u}, ys | {v})


def _components_minus(g: Graph, u: int) -> list[frozenset[int]]:
    """Connected components of g - u."""
    seen = {u}
    out = []
    for start in range(g.n):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        seen.add(start)
        while stack:
            w = stack.pop()
            for z in g.neighbors(w):
                if z not in seen:
                    seen.add(z)
                    comp.add(z)
                    stack.append(z)
        out.append(frozenset(comp))
    return out


def _nonempty_unions(parts: list[frozenset[int]]) -> Iterator[frozenset[int]]:
    for size in range(1, len(parts) + 1):
        for combo in combinations(parts, size):
            yield frozenset().union(*combo)
