"""Edge-list and DOT serialization.

Edge-list format (authoritative): line 1 is `n m`, then m lines `u v` with
0 <= u < v < n, written in lexicographic order.  Files written by the CLI
re-parse byte-exactly.
"""

from __future__ import annotations

from .graph import Graph


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> tuple[int, list[tuple[int, int]]]:
    """Parse a single edge-list document into (n, edges)."""
    graphs = parse_edge_list_stream(text)
    if len(graphs) != 1:
        raise ValueError(f"expected one graph, found {len(graphs)}")
    return graphs[0]


def parse_edge_list_stream(text: str) -> list[tuple[int, list[tuple[int, int]]]]:
    """Parse a stream of whitespace-separated edge-list blocks."""
    tokens = text.split()
    out = []
    pos = 0
    while pos < len(tokens):
        if pos + 2 > len(tokens):
            raise ValueError("truncated header: expected `n m`")
        n, m = int(tokens[pos]), int(tokens[pos + 1])
        pos += 2
        if n < 0 or m < 0:
            raise ValueError("vertex and edge counts must be nonnegative")
        if pos + 2 * m > len(tokens):
            raise ValueError(f"truncated edge list: expected {m} edges")
        edges = []
        for _ in range(m):
            edges.append((int(tokens[pos]), int(tokens[pos + 1])))
            pos += 2
        out.append((n, edges))
    return out


def format_dot(g: Graph) -> str:
    """DOT text with one node statement per vertex and one per edge."""
    lines = ["graph G {"]
    lines.extend(f"  {v};" for v in range(g.n))
    lines.extend(f"  {u} -- {v};" for u, v in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"
