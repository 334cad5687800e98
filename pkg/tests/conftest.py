import io
import random
from contextlib import redirect_stdout

import pytest

from uniwiener.cli import run
from uniwiener.graph import Graph


def random_tree(rng: random.Random, n: int) -> Graph:
    """Uniform random labeled tree on n vertices (Pruefer decoding)."""
    if n == 1:
        return Graph.from_edges(1, [])
    if n == 2:
        return Graph.from_edges(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = min(u for u in range(n) if degree[u] == 1)
        edges.append((min(leaf, v), max(leaf, v)))
        degree[leaf] -= 1
        degree[v] -= 1
    last = [u for u in range(n) if degree[u] == 1]
    edges.append((min(last), max(last)))
    return Graph.from_edges(n, edges)


@pytest.fixture
def cli():
    """Run the CLI in-process: cli(args, stdin=...) -> (exit_code, stdout)."""

    def invoke(argv, stdin: str | None = None):
        import sys

        old_stdin = sys.stdin
        if stdin is not None:
            sys.stdin = io.StringIO(stdin)
        buf = io.StringIO()
        try:
            with redirect_stdout(buf):
                code = run(argv)
        finally:
            sys.stdin = old_stdin
        return code, buf.getvalue()

    return invoke
