import random

import pytest

from uniwiener.canon import refined_cells
from uniwiener.enumeration import enumerate_unicyclic
from uniwiener.graph import Graph, distances, transmission, wiener
from uniwiener.kernels import BACKEND, available_backends

from conftest import random_tree


def _corpus():
    graphs = [g.graph for g in enumerate_unicyclic(7)]
    rng = random.Random(5)
    graphs += [random_tree(rng, rng.randint(2, 11)) for _ in range(20)]
    return graphs


def test_backend_selected():
    assert BACKEND in ("pure", "compiled")


def test_backends_agree_on_everything():
    backends = available_backends()
    if len(backends) < 2:
        pytest.skip("compiled kernels unavailable")
    for g in _corpus():
        indptr, indices = g.csr()
        cells = refined_cells(g)
        results = []
        for mod in backends.values():
            results.append(
                (
                    mod.transmission_sum(g.n, indptr, indices),
                    mod.eccentricities(g.n, indptr, indices),
                    mod.bfs_distances(g.n, indptr, indices, 0),
                    mod.canonical_columns(g.n, indptr, indices, cells),
                )
            )
        assert results[0] == results[1], g.edges()


def test_backends_agree_on_disconnected():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    indptr, indices = g.csr()
    for mod in available_backends().values():
        assert mod.transmission_sum(g.n, indptr, indices) == -1
        assert mod.eccentricities(g.n, indptr, indices) is None
        assert mod.bfs_distances(g.n, indptr, indices, 0) == [0, 1, -1, -1]


def test_wiener_against_floyd_warshall():
    # quadratic all-pairs oracle, independent of the BFS kernels
    for g in _corpus()[:25]:
        n = g.n
        inf = float("inf")
        dist = [[0 if i == j else inf for j in range(n)] for i in range(n)]
        for u, v in g.edges():
            dist[u][v] = dist[v][u] = 1
        for k in range(n):
            for i in range(n):
                for j in range(n):
                    alt = dist[i][k] + dist[k][j]
                    if alt < dist[i][j]:
                        dist[i][j] = alt
        expected = sum(dist[i][j] for i in range(n) for j in range(i + 1, n))
        assert wiener(g) == expected
        for u in range(n):
            assert transmission(g, u) == sum(dist[u])
            assert list(distances(g, u).dist) == dist[u]
