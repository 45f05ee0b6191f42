"""Generators for the graph families used throughout the package.

Vertex numbering conventions (also emitted by the CLI as comments):

* path(n):    0-1-2-...-(n-1)
* cycle(n):   0-1-...-(n-1)-0
* star(l):    centre 0, leaves 1..l
* complete(n)
* comb(n):    path 0..n-1, leaf (n+i) attached to path vertex i
* sunlet(n):  cycle 0..n-1, leaf (n+i) attached to cycle vertex i
* subdivided_sunlet(n, k): sunlet(n) whose pendant edges at cycle
  positions 0..k-1 are each subdivided n times; the j-th inner vertex of
  the thread at position i is 2n + i*n + j
* bouquet(k): 5k triangles sharing centre 0; triangle j has the rim pair
  (1+2j, 2+2j)
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph, graph_from_edges


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)], name=f"P_{n}")


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)], name=f"C_{n}")


def star(leaves: int) -> Graph:
    if leaves < 1:
        raise ValueError("star needs at least one leaf")
    return graph_from_edges(
        leaves + 1, [(0, i) for i in range(1, leaves + 1)], name=f"K_1,{leaves}"
    )


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete needs n >= 1")
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return graph_from_edges(n, edges, name=f"K_{n}")


def comb(n: int) -> Graph:
    """The n-comb: a path on n vertices with one pendant leaf per vertex."""
    if n < 1:
        raise ValueError("comb needs n >= 1")
    edges = [(i, i + 1) for i in range(n - 1)]
    edges += [(i, n + i) for i in range(n)]
    return graph_from_edges(2 * n, edges, name=f"B_{n}")


def sunlet(n: int) -> Graph:
    """The n-sunlet: a cycle on n vertices with one pendant leaf per vertex."""
    if n < 3:
        raise ValueError("sunlet needs n >= 3")
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    return graph_from_edges(2 * n, edges, name=f"S_{n}")


def subdivided_sunlet(n: int, k: int) -> Graph:
    """sunlet(n) with the k pendant edges at cycle positions 0..k-1 each
    subdivided n times (2n + n*k vertices).

    All choices of k consecutive pendant edges are isomorphic, so fixing
    positions 0..k-1 keeps outputs reproducible.
    """
    if n < 3:
        raise ValueError("subdivided sunlet needs n >= 3")
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    edges = [(i, (i + 1) % n) for i in range(n)]
    for i in range(k, n):
        edges.append((i, n + i))
    for i in range(k):
        inner = [2 * n + i * n + j for j in range(n)]
        chain = [i] + inner + [n + i]
        edges += list(zip(chain, chain[1:]))
    return graph_from_edges(2 * n + n * k, edges, name=f"G_{n},{k}")


# Alias matching the usual parameter order in discussions of this family.
g_nk = subdivided_sunlet


def bouquet(k: int) -> Graph:
    """5k triangles sharing a single centre vertex (10k + 1 vertices)."""
    if k < 1:
        raise ValueError("bouquet needs k >= 1")
    edges = []
    for j in range(5 * k):
        a, b = 1 + 2 * j, 2 + 2 * j
        edges += [(0, a), (0, b), (a, b)]
    return graph_from_edges(10 * k + 1, edges, name=f"bouquet_{k}")


@dataclass(frozen=True)
class SeededInstance:
    """A graph together with an initial brush configuration."""

    graph: Graph
    init: dict[int, int] = field(default_factory=dict)
    label: str = ""


def comb_union_seeded(sizes) -> SeededInstance:
    """Disjoint union of combs B_{n_i} with one brush on each degree-2 vertex.

    For n_i >= 2 the degree-2 vertices of B_{n_i} are the two path
    endpoints (in B_2, both path vertices).  The expected game length from
    this seed is sum(n_i) - m, with m the number of combs, whoever starts.
    """
    sizes = list(sizes)
    if not sizes:
        raise ValueError("need at least one comb")
    if any(n < 2 for n in sizes):
        raise ValueError("every comb must have n >= 2")
    edges: list[tuple[int, int]] = []
    init: dict[int, int] = {}
    offset = 0
    for n in sizes:
        for i in range(n - 1):
            edges.append((offset + i, offset + i + 1))
        for i in range(n):
            edges.append((offset + i, offset + n + i))
        init[offset] = 1
        init[offset + n - 1] = 1
        offset += 2 * n
    label = "comb_union(" + ",".join(str(n) for n in sizes) + ")"
    graph = graph_from_edges(offset, edges, name=label)
    return SeededInstance(graph=graph, init=init, label=label)
