"""Rooted trees: the components grafted onto cycle vertices.

Isomorph-free generation uses the Beyer-Hedetniemi level-sequence successor
algorithm, so each rooted tree on a given number of vertices appears exactly
once.  Canonical rooted codes (sorted-subtree encoding) are cached per size.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import VertexOutOfRangeError
from .graph import Graph


@dataclass(frozen=True)
class RootedTree:
    """Tree with a distinguished root; parent[root] == root."""

    size: int
    parent: tuple[int, ...]
    root: int = 0

    def __post_init__(self):
        if self.size != len(self.parent):
            raise VertexOutOfRangeError("parent vector length must equal size")
        if self.parent[self.root] != self.root:
            raise VertexOutOfRangeError("root must be its own parent")

    def children(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.size)]
        for v, p in enumerate(self.parent):
            if v != self.root:
                out[p].append(v)
        return out

    def edges(self) -> list[tuple[int, int]]:
        return [(min(v, p), max(v, p)) for v, p in enumerate(self.parent) if v != self.root]

    def as_graph(self) -> Graph:
        return Graph.from_edges(self.size, self.edges())

    def code(self) -> tuple:
        """Canonical rooted encoding: nested tuples with children sorted."""
        kids = self.children()

        def enc(v: int) -> tuple:
            return tuple(sorted(enc(c) for c in kids[v]))

        return enc(self.root)

    def aut_order(self) -> int:
        """Order of the rooted automorphism group."""
        kids = self.children()

        def rec(v: int) -> tuple[tuple, int]:
            encs = []
            total = 1
            for c in kids[v]:
                e, a = rec(c)
                encs.append(e)
                total *= a
            encs.sort()
            i = 0
            while i < len(encs):
                j = i
                while j < len(encs) and encs[j] == encs[i]:
                    j += 1
                total *= math.factorial(j - i)
                i = j
            return tuple(encs), total

        return rec(self.root)[1]


K1 = RootedTree(1, (0,))


def from_code(code: tuple) -> RootedTree:
    """Inverse of RootedTree.code(): rebuild a representative tree."""
    parent = [0]

    def build(c: tuple, root: int):
        for sub in c:
            v = len(parent)
            parent.append(root)
            build(sub, v)

    build(code, 0)
    return RootedTree(len(parent), tuple(parent))


def level_sequences(n: int):
    """All canonical level sequences of rooted trees on n vertices.

    Beyer-Hedetniemi successor scheme: start from the path [1..n] and
    repeatedly regenerate the tail from the last deep position, ending at the
    star [1, 2, 2, ...].  Each rooted tree appears exactly once.
    """
    if n < 1:
        return
    levels = list(range(1, n + 1))
    while True:
        yield tuple(levels)
        p = next((i for i in range(n - 1, -1, -1) if levels[i] > 2), None)
        if p is None:
            return
        q = p - 1
        while levels[q] != levels[p] - 1:
            q -= 1
        for i in range(p, n):
            levels[i] = levels[i - (p - q)]


def tree_from_levels(levels: tuple[int, ...]) -> RootedTree:
    parent = [0] * len(levels)
    latest_at_level = {1: 0}
    for v in range(1, len(levels)):
        parent[v] = latest_at_level[levels[v] - 1]
        latest_at_level[levels[v]] = v
    return RootedTree(len(levels), tuple(parent))


@lru_cache(maxsize=None)
def rooted_trees(size: int) -> tuple[RootedTree, ...]:
    """All rooted trees on `size` vertices, one per isomorphism class."""
    return tuple(tree_from_levels(ls) for ls in level_sequences(size))
