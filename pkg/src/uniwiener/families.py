"""Named graph families: paths, cycles, subdivided stars, cycle-with-trees
compositions, and the candidate minimum-Wiener configurations.

`theorem1_family` generates every configuration allowed by the structure
theorem (minimizers must look like this); `theorem2_family` generates the
exact minimizer set claimed for r <= (n+3)/2.  Both enumerate all
parameterizations fitting (n, r) and deduplicate by canonical code.
"""

from __future__ import annotations

from dataclasses import dataclass

from .canon import canonical_code
from .errors import (
    ClassKeyOutOfTheoremRangeError,
    GirthTooSmallError,
    TooFewVerticesError,
    VertexOutOfRangeError,
)
from .graph import ClassKey, Graph, UnicyclicGraph, as_unicyclic, even_degree_count
from .trees import K1, RootedTree


@dataclass(frozen=True)
class SubdividedStarSpec:
    """Branch profile of a subdivided star: lengths in edges, nonincreasing."""

    b: int
    lengths: tuple[int, ...]

    def __post_init__(self):
        if self.b != len(self.lengths):
            raise VertexOutOfRangeError("branch count must match lengths")
        if any(ln < 1 for ln in self.lengths):
            raise VertexOutOfRangeError("branch lengths must be >= 1")
        if list(self.lengths) != sorted(self.lengths, reverse=True):
            raise VertexOutOfRangeError("lengths must be nonincreasing")

    @property
    def is_balanced(self) -> bool:
        return self.b == 0 or self.lengths[0] == self.lengths[-1]

    @property
    def is_almost_balanced(self) -> bool:
        return self.b == 0 or self.lengths[0] - self.lengths[-1] <= 1

    @property
    def t(self) -> int:
        """Maximum branch length."""
        return self.lengths[0] if self.b else 0


@dataclass(frozen=True)
class HComposition:
    """A cycle of length `girth` with rooted tree i grafted at cycle vertex i."""

    girth: int
    trees: tuple[RootedTree, ...]

    def __post_init__(self):
        if self.girth < 3:
            raise GirthTooSmallError(f"girth must be >= 3, got {self.girth}")
        if len(self.trees) != self.girth:
            raise VertexOutOfRangeError("need one tree per cycle vertex")

    @property
    def total_vertices(self) -> int:
        return self.girth + sum(t.size - 1 for t in self.trees)


def make_cycle(g: int) -> UnicyclicGraph:
    if g < 3:
        raise GirthTooSmallError(f"cycles need length >= 3, got {g}")
    return as_unicyclic(Graph.from_edges(g, [(i, (i + 1) % g) for i in range(g)]))


def make_path(t: int) -> Graph:
    """Path with t edges (t + 1 vertices); t = 0 gives a single vertex."""
    if t < 0:
        raise VertexOutOfRangeError("edge count must be nonnegative")
    return Graph.from_edges(t + 1, [(i, i + 1) for i in range(t)])


def make_star(b: int) -> RootedTree:
    """Star with b branches of length 1; b = 0 gives a single vertex."""
    if b < 0:
        raise VertexOutOfRangeError("branch count must be nonnegative")
    return RootedTree(b + 1, (0,) * (b + 1))


def make_sab(b: int, m: int) -> RootedTree:
    """Almost-balanced subdivided star: b branches totaling m edges.

    m mod b branches get length ceil(m/b), the rest floor(m/b); when b
    divides m the star is balanced.
    """
    if b < 1:
        raise VertexOutOfRangeError("need at least one branch")
    if m < b:
        raise TooFewVerticesError(f"{b} branches need at least {b} edges, got {m}")
    q, rem = divmod(m, b)
    lengths = [q + 1] * rem + [q] * (b - rem)
    parent = [0]
    for ln in lengths:
        anchor = 0
        for _ in range(ln):
            parent.append(anchor)
            anchor = len(parent) - 1
    return RootedTree(m + 1, tuple(parent))


def sab_spec(b: int, m: int) -> SubdividedStarSpec:
    q, rem = divmod(m, b)
    return SubdividedStarSpec(b, tuple([q + 1] * rem + [q] * (b - rem)))


def make_H(spec: HComposition) -> UnicyclicGraph:
    """Cycle of length g with tree i identified at cycle vertex i."""
    g = spec.girth
    edges = [(i, (i + 1) % g) for i in range(g)]
    nxt = g
    for i, tree in enumerate(spec.trees):
        mapping = {tree.root: i}
        for v in range(tree.size):
            if v != tree.root:
                mapping[v] = nxt
                nxt += 1
        edges.extend((mapping[a], mapping[b]) for a, b in tree.edges())
    return as_unicyclic(Graph.from_edges(spec.total_vertices, edges))


def hang_at_first(girth: int, tree: RootedTree) -> UnicyclicGraph:
    """H composition with `tree` at one cycle vertex and trivial trees elsewhere."""
    return make_H(HComposition(girth, (tree,) + (K1,) * (girth - 1)))


def pentagon_with_pendant() -> UnicyclicGraph:
    """The 6-vertex configuration: a 5-cycle with one pendant vertex."""
    return hang_at_first(5, make_star(1))


def _dedup_sorted(graphs: list[UnicyclicGraph]) -> list[UnicyclicGraph]:
    by_code = {canonical_code(g.graph): g for g in graphs}
    return [by_code[c] for c in sorted(by_code)]


def _triangle_star_shapes(key: ClassKey) -> list[UnicyclicGraph]:
    """Triangle with an odd star at u and K_1/K_2 at the other two cycle
    vertices, for every parameterization realizing (n, r) with r <= 2."""
    out = []
    for b1 in range(1, key.n, 2):
        for x1 in (0, 1):
            for x2 in (0, 1):
                n = 3 + b1 + x1 + x2
                if n != key.n:
                    continue
                comp = HComposition(
                    3, (make_sab(b1, b1), make_star(x1), make_star(x2))
                )
                h = make_H(comp)
                if even_degree_count(h) == key.r:
                    out.append(h)
    return out


def theorem1_family(key: ClassKey) -> list[UnicyclicGraph]:
    """All configurations the structure theorem allows for minimizers of (n, r).

    r <= 2: triangle-based shapes (odd star at u, K_1 or K_2 at x and y).
    r >= 3: the pendant pentagon when it lies in the class, plus every cycle
    with an almost-balanced subdivided star of even branch count at one
    vertex.  Sorted by canonical code.
    """
    n, r = key.n, key.r
    if r <= 2:
        return _dedup_sorted(_triangle_star_shapes(key))
    out = []
    pent = pentagon_with_pendant()
    if n == pent.n and even_degree_count(pent) == r:
        out.append(pent)
    if r == n:
        out.append(make_cycle(n))
    else:
        b = n - r
        if b >= 2 and b % 2 == 0:
            for g in range(3, n + 1):
                m = n - g
                if m < b:
                    break
                out.append(hang_at_first(g, make_sab(b, m)))
    return _dedup_sorted(out)


def theorem2_family(key: ClassKey) -> list[UnicyclicGraph]:
    """The exact minimizer set for (n, r) in the characterized range.

    r <= 2: the same triangle-based shapes as the structure theorem.
    r >= 3: one cycle-with-star shape of girth min(r, 5) whose subdivided
    star is almost balanced with branch lengths at most 2, plus the pendant
    pentagon for (6, 4).  Raises ClassKeyOutOfTheoremRangeError when
    r > (n+3)/2.
    """
    n, r = key.n, key.r
    if 2 * r > n + 3:
        raise ClassKeyOutOfTheoremRangeError(
            f"characterization covers r <= (n+3)/2; got (n, r) = ({n}, {r})"
        )
    if r <= 2:
        return _dedup_sorted(_triangle_star_shapes(key))
    out = []
    pent = pentagon_with_pendant()
    if n == pent.n and even_degree_count(pent) == r:
        out.append(pent)
    if r == n:
        out.append(make_cycle(n))
    else:
        g = min(r, 5)
        b = n - r
        m = n - g
        if b >= 2 and b % 2 == 0 and m >= b:
            spec = sab_spec(b, m)
            if spec.t <= 2:
                out.append(hang_at_first(g, make_sab(b, m)))
    return _dedup_sorted(out)
