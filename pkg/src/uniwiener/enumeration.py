"""Isomorph-free exhaustive enumeration of unicyclic graphs.

Fast route: for each girth, graft multisets of rooted trees onto the cycle
positions and quotient by the cycle's dihedral symmetry; tuples of rooted-tree
classes in dihedral-canonical form correspond one-to-one to isomorphism
classes.  A slow labeled-filter oracle and a labeled counting formula guard
the fast route's correctness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations, product
from multiprocessing import Pool

from .canon import CanonicalCode, canonical_code
from .errors import EmptyClassError, InvalidClassKeyError, TooFewVerticesError, TooLargeError
from .families import HComposition, make_H
from .graph import (
    ClassKey,
    Graph,
    UnicyclicGraph,
    build_unicyclic,
    even_degree_count,
    wiener,
)
from .trees import RootedTree, rooted_trees

ORACLE_MAX_N = 9
ENUMERATION_MAX_N = 16


@dataclass(frozen=True)
class ClassSummary:
    """Per-(n, r) summary: class size, minimum Wiener value, all minimizers."""

    key: ClassKey
    count: int
    min_wiener: int
    minimizers: tuple[UnicyclicGraph, ...]
    minimizer_codes: tuple[CanonicalCode, ...]


def _compositions(total: int, parts: int):
    """Ordered compositions of `total` into `parts` positive parts."""
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _dihedral_min(t: tuple) -> tuple:
    best = t
    for seq in (t, tuple(reversed(t))):
        for k in range(len(t)):
            rot = seq[k:] + seq[:k]
            if rot < best:
                best = rot
    return best


def _unit_tuples(n: int, girth: int, smax: int):
    """Dihedral-canonical tree-class tuples for one work unit.

    A unit covers the compositions of n into `girth` tree sizes whose largest
    size is `smax`; units partition the search space, so workers never emit
    the same isomorphism class twice.
    """
    for sizes in _compositions(n, girth):
        if max(sizes) != smax:
            continue
        for idxs in product(*(range(len(rooted_trees(s))) for s in sizes)):
            t = tuple(zip(sizes, idxs))
            if _dihedral_min(t) == t:
                yield t


def _graph_from_tuple(girth: int, t: tuple) -> UnicyclicGraph:
    trees = tuple(rooted_trees(s)[i] for s, i in t)
    return make_H(HComposition(girth, trees))


def _enum_unit(args: tuple[int, int, int]) -> list[tuple[bytes, tuple]]:
    n, girth, smax = args
    out = []
    for t in _unit_tuples(n, girth, smax):
        g = _graph_from_tuple(girth, t)
        out.append((canonical_code(g.graph), tuple(g.graph.edges())))
    return out


def enumerate_unicyclic(n: int, jobs: int = 1) -> list[UnicyclicGraph]:
    """One representative per isomorphism class of unicyclic graphs on n
    vertices, ordered by ascending canonical code.

    The output is independent of `jobs`; work is partitioned by
    (girth, largest tree size).
    """
    if n < 3:
        raise TooFewVerticesError(f"unicyclic graphs need n >= 3, got {n}")
    if n > ENUMERATION_MAX_N:
        raise TooLargeError(f"enumeration bounded at n <= {ENUMERATION_MAX_N}")
    units = [
        (n, girth, smax)
        for girth in range(3, n + 1)
        for smax in range(1, n - girth + 2)
    ]
    if jobs > 1:
        with Pool(jobs) as pool:
            chunks = pool.map(_enum_unit, units)
    else:
        chunks = [_enum_unit(u) for u in units]
    merged: dict[bytes, tuple] = {}
    for chunk in chunks:
        for code, edges in chunk:
            assert code not in merged, "duplicate isomorphism class across units"
            merged[code] = edges
    return [build_unicyclic(n, merged[c]) for c in sorted(merged)]


def enumerate_labeled_oracle(n: int) -> list[UnicyclicGraph]:
    """Slow independent oracle: filter all labeled n-edge graphs on n vertices
    for connectivity, then collapse by canonical code."""
    if n < 3:
        raise TooFewVerticesError(f"unicyclic graphs need n >= 3, got {n}")
    if n > ORACLE_MAX_N:
        raise TooLargeError(f"labeled filtering bounded at n <= {ORACLE_MAX_N}")
    pairs = list(combinations(range(n), 2))
    vmask = [(1 << u) | (1 << v) for u, v in pairs]
    full = (1 << n) - 1
    found: dict[bytes, list[tuple[int, int]]] = {}
    for combo in combinations(range(len(pairs)), n):
        cover = 0
        for i in combo:
            cover |= vmask[i]
        if cover != full:
            continue
        parent = list(range(n))
        merges = 0
        for i in combo:
            a, b = pairs[i]
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            while parent[b] != b:
                parent[b] = parent[parent[b]]
                b = parent[b]
            if a != b:
                parent[a] = b
                merges += 1
        if merges != n - 1:
            continue
        # Connected with n edges on n vertices: unicyclic.  Defer full
        # validation and cycle extraction to the surviving representatives.
        edges = [pairs[i] for i in combo]
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for a, b in edges:
            nbrs[a].append(b)
            nbrs[b].append(a)
        g = Graph(n, tuple(tuple(row) for row in nbrs))
        code = canonical_code(g)
        if code not in found:
            found[code] = edges
    return [build_unicyclic(n, found[c]) for c in sorted(found)]


def class_summaries(n: int, jobs: int = 1) -> dict[int, ClassSummary]:
    """Exact minimum-Wiener summaries for every realized r on n vertices."""
    by_r: dict[int, list[UnicyclicGraph]] = {}
    for g in enumerate_unicyclic(n, jobs=jobs):
        by_r.setdefault(even_degree_count(g.graph), []).append(g)
    out = {}
    for r, graphs in sorted(by_r.items()):
        values = [wiener(g) for g in graphs]
        wmin = min(values)
        mins = tuple(g for g, w in zip(graphs, values) if w == wmin)
        out[r] = ClassSummary(
            key=ClassKey(n, r),
            count=len(graphs),
            min_wiener=wmin,
            minimizers=mins,
            minimizer_codes=tuple(canonical_code(g.graph) for g in mins),
        )
    return out


def min_wiener(n: int, r: int, jobs: int = 1) -> ClassSummary:
    """Minimum Wiener value over the (n, r) class and every minimizer.

    Raises EmptyClassError when no unicyclic graph realizes (n, r) (including
    parity-impossible pairs).
    """
    try:
        ClassKey(n, r)
    except InvalidClassKeyError as exc:
        raise EmptyClassError(f"no unicyclic graph realizes ({n}, {r}): {exc}") from exc
    summaries = class_summaries(n, jobs=jobs)
    if r not in summaries:
        raise EmptyClassError(f"no unicyclic graph realizes ({n}, {r})")
    return summaries[r]


# -- independent counting cross-checks -----------------------------------------

def labeled_unicyclic_count(n: int) -> int:
    """Number of labeled connected unicyclic graphs on n vertices.

    Sum over cycle lengths k of C(n, k) * (k-1)!/2 ways to place the cycle
    times k * n^(n-k-1) rooted forests filling in the rest.
    """
    total = 0
    for k in range(3, n + 1):
        cycle_ways = math.comb(n, k) * math.factorial(k - 1) // 2
        forest_ways = 1 if k == n else k * n ** (n - k - 1)
        total += cycle_ways * forest_ways
    return total


def h_decomposition(g: UnicyclicGraph) -> tuple[RootedTree, ...]:
    """The rooted trees hanging at each cycle position, in cycle order."""
    out = []
    for u in g.cycle:
        members = g.tree_members(u)
        index = {u: 0}
        order = [u]
        for v in members:
            if v != u:
                index[v] = len(order)
                order.append(v)
        parent = [0] * len(order)
        seen = {u}
        stack = [u]
        while stack:
            v = stack.pop()
            for w in g.graph.neighbors(v):
                if w in index and w not in seen:
                    seen.add(w)
                    parent[index[w]] = index[v]
                    stack.append(w)
        out.append(RootedTree(len(order), tuple(parent)))
    return tuple(out)


def aut_order(g: UnicyclicGraph) -> int:
    """Order of the automorphism group: dihedral stabilizer of the tree-code
    sequence times the rooted automorphisms of each hanging tree."""
    trees = h_decomposition(g)
    codes = [t.code() for t in trees]
    girth = g.girth
    stab = 0
    for seq in (codes, list(reversed(codes))):
        for k in range(girth):
            if seq[k:] + seq[:k] == codes:
                stab += 1
    total = stab
    for t in trees:
        total *= t.aut_order()
    return total
