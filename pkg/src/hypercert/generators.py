"""Instance generators: planted bridge families and random hypergraphs."""

from __future__ import annotations

import itertools
import random

from .hypergraph import Cut, Hypergraph


def planted_bridges(r: int, block_size: int = 2) -> tuple[Hypergraph, Cut]:
    """r disjoint bridges {i_k} + T_k with |T_k| = block_size.

    Block k occupies vertices k*(block_size+1) .. (k+1)*(block_size+1)-1, the
    first of which is the A-vertex.  With block_size=2 and r=3 this is the
    three-CCZ example on nine qubits.
    """
    if r < 1 or block_size < 1:
        raise ValueError("need r >= 1 and block_size >= 1")
    width = block_size + 1
    edges = [range(k * width, (k + 1) * width) for k in range(r)]
    a = [k * width for k in range(r)]
    b = [v for v in range(r * width) if v % width]
    return Hypergraph(r * width, edges), Cut(a, b)


def random_hypergraph(
    rng: random.Random, n: int, n_edges: int, min_degree: int = 2, max_degree: int = 4
) -> Hypergraph:
    max_degree = min(max_degree, n)
    edges = []
    for _ in range(n_edges):
        k = rng.randint(min_degree, max_degree)
        edges.append(rng.sample(range(n), k))
    return Hypergraph(n, edges)


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Hypergraph:
    edges = [pair for pair in itertools.combinations(range(n), 2) if rng.random() < p]
    return Hypergraph(n, edges)


def random_cut(rng: random.Random, n: int) -> Cut:
    """Uniform ordered bipartition with both sides nonempty (n >= 2)."""
    vertices = list(range(n))
    rng.shuffle(vertices)
    k = rng.randint(1, n - 1)
    return Cut(sorted(vertices[:k]), sorted(vertices[k:]))


def all_bipartitions(n: int):
    """Every unordered bipartition with both sides nonempty; vertex 0 stays in A."""
    rest = list(range(1, n))
    for k in range(len(rest) + 1):
        for extra in itertools.combinations(rest, k):
            a = (0, *extra)
            if len(a) == n:
                continue
            yield Cut(a, [v for v in range(n) if v not in a])
