"""Finite simple undirected graphs with vertices 0..n-1.

Graphs are immutable after construction.  The edge-list text format used
throughout the CLI is line based: an optional leading ``vertices N``
directive, then one ``u v`` pair per line; ``#`` starts a comment and
blank lines are ignored.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Graph:
    """A simple graph: no loops, no duplicate edges, symmetric adjacency."""

    vertex_count: int
    edges: frozenset[tuple[int, int]]
    adjacency: tuple[frozenset[int], ...]
    name: str = ""

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def vertices(self) -> range:
        return range(self.vertex_count)

    def relabel(self, perm: list[int]) -> "Graph":
        """Return the isomorphic graph in which old vertex v becomes perm[v]."""
        if sorted(perm) != list(range(self.vertex_count)):
            raise ValueError("perm must be a permutation of the vertex ids")
        edges = [(perm[u], perm[v]) for u, v in self.edges]
        return graph_from_edges(self.vertex_count, edges, name=self.name)


def graph_from_edges(
    vertex_count: int, edges, name: str = "", allow_duplicates: bool = False
) -> Graph:
    """Build a Graph from an iterable of (u, v) pairs, validating simplicity.

    Loops are always rejected.  Duplicate edges are rejected unless
    `allow_duplicates` is set (then they are merged); input files never set
    it, because a repeated line in data usually means a bug upstream.
    """
    if vertex_count < 0:
        raise ValueError("vertex_count must be nonnegative")
    seen: set[tuple[int, int]] = set()
    for u, v in edges:
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{vertex_count - 1}")
        if u == v:
            raise ValueError(f"loop at vertex {u} is not allowed")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            if allow_duplicates:
                continue
            raise ValueError(f"duplicate edge ({key[0]}, {key[1]})")
        seen.add(key)
    adj: list[set[int]] = [set() for _ in range(vertex_count)]
    for u, v in seen:
        adj[u].add(v)
        adj[v].add(u)
    return Graph(
        vertex_count=vertex_count,
        edges=frozenset(seen),
        adjacency=tuple(frozenset(a) for a in adj),
        name=name,
    )


def parse_edge_list(text: str, name: str = "") -> Graph:
    """Parse the edge-list text format into a Graph.

    The vertex count is ``1 + max id`` unless an explicit ``vertices N``
    directive appears first.  Non-integer tokens, loops and duplicate
    edges are all rejected.
    """
    declared: int | None = None
    pairs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if declared is None and not pairs and tokens[0] == "vertices":
            if len(tokens) != 2:
                raise ValueError(f"line {lineno}: expected 'vertices N'")
            try:
                declared = int(tokens[1])
            except ValueError:
                raise ValueError(f"line {lineno}: vertex count {tokens[1]!r} is not an integer")
            if declared < 0:
                raise ValueError(f"line {lineno}: vertex count must be nonnegative")
            continue
        if len(tokens) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer vertex id in {line!r}")
        if u < 0 or v < 0:
            raise ValueError(f"line {lineno}: vertex ids must be nonnegative")
        pairs.append((u, v))
    if declared is not None:
        n = declared
    elif pairs:
        n = 1 + max(max(u, v) for u, v in pairs)
    else:
        n = 0
    return graph_from_edges(n, pairs, name=name)


def format_edge_list(g: Graph, comment: str = "") -> str:
    """Render a Graph in the edge-list text format (round-trips with parse)."""
    lines = []
    if comment:
        for part in comment.splitlines():
            lines.append(f"# {part}")
    lines.append(f"vertices {g.vertex_count}")
    for u, v in sorted(g.edges):
        lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"


def parse_config(text: str) -> dict[int, int]:
    """Parse a brush configuration file: one ``vertex amount`` pair per line."""
    config: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ValueError(f"line {lineno}: expected 'vertex amount', got {line!r}")
        try:
            v, amount = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer token in {line!r}")
        if amount < 0:
            raise ValueError(f"line {lineno}: amounts must be nonnegative")
        if v in config:
            raise ValueError(f"line {lineno}: vertex {v} listed twice")
        config[v] = amount
    return config


def format_config(config: dict[int, int], comment: str = "") -> str:
    lines = []
    if comment:
        for part in comment.splitlines():
            lines.append(f"# {part}")
    for v in sorted(config):
        if config[v]:
            lines.append(f"{v} {config[v]}")
    return "\n".join(lines) + "\n"


def is_connected(g: Graph) -> bool:
    """True if g has at most one connected component (edgeless K_1 counts)."""
    n = g.vertex_count
    if n <= 1:
        return True
    seen = [False] * n
    stack = [0]
    seen[0] = True
    count = 1
    while stack:
        u = stack.pop()
        for w in g.adjacency[u]:
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    return count == n
