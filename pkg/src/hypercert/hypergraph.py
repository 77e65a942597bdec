"""Hypergraphs, ordered bipartitions and bridge blocks (0-based vertices)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .anf import AnfPolynomial, InvalidCutError, anf_from_hyperedges


@dataclass(frozen=True)
class Hypergraph:
    n: int
    edges: tuple[frozenset[int], ...]

    def __init__(self, n: int, edges: Iterable[Iterable[int]]):
        frozen = tuple(frozenset(e) for e in edges)
        for e in frozen:
            for v in e:
                if not 0 <= v < n:
                    raise IndexError(f"edge {sorted(e)} has vertex {v} outside 0..{n - 1}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozen)

    def phase_polynomial(self) -> AnfPolynomial:
        return anf_from_hyperedges(self.n, self.edges)


@dataclass(frozen=True)
class Cut:
    """Ordered bipartition; orderings fix row/column encodings downstream."""

    a_vertices: tuple[int, ...]
    b_vertices: tuple[int, ...]

    def __init__(self, a_vertices: Sequence[int], b_vertices: Sequence[int]):
        a, b = tuple(a_vertices), tuple(b_vertices)
        if len(set(a)) != len(a) or len(set(b)) != len(b):
            raise InvalidCutError("cut sides contain repeated vertices")
        if set(a) & set(b):
            raise InvalidCutError(f"cut sides overlap at {sorted(set(a) & set(b))}")
        object.__setattr__(self, "a_vertices", a)
        object.__setattr__(self, "b_vertices", b)

    @property
    def n(self) -> int:
        return len(self.a_vertices) + len(self.b_vertices)

    @property
    def a_set(self) -> frozenset[int]:
        return frozenset(self.a_vertices)

    @property
    def b_set(self) -> frozenset[int]:
        return frozenset(self.b_vertices)

    def validate(self, n: int) -> None:
        if sorted(self.a_vertices + self.b_vertices) != list(range(n)):
            raise InvalidCutError(
                f"cut {list(self.a_vertices)}|{list(self.b_vertices)} does not cover 0..{n - 1} exactly"
            )

    def reversed(self) -> "Cut":
        return Cut(self.b_vertices, self.a_vertices)


@dataclass(frozen=True)
class BridgeBlock:
    a_vertex: int
    b_support: frozenset[int]

    def __post_init__(self):
        if not self.b_support:
            raise ValueError("bridge block needs a nonempty B-support")

    @property
    def vertices(self) -> frozenset[int]:
        return self.b_support | {self.a_vertex}

    def __repr__(self) -> str:
        return f"BridgeBlock({self.a_vertex}, {sorted(self.b_support)})"


def cross_edges(g: Hypergraph, cut: Cut) -> list[frozenset[int]]:
    """Edges meeting both sides, with input multiplicity preserved."""
    cut.validate(g.n)
    a, b = cut.a_set, cut.b_set
    return [e for e in g.edges if e & a and e & b]


def local_edges(g: Hypergraph, cut: Cut) -> tuple[list[frozenset[int]], list[frozenset[int]]]:
    cut.validate(g.n)
    a, b = cut.a_set, cut.b_set
    a_local = [e for e in g.edges if not e & b]
    b_local = [e for e in g.edges if e & b and not e & a]
    return a_local, b_local


def odd_edges(edges: Iterable[frozenset[int]]) -> list[frozenset[int]]:
    """Edges surviving mod-2 cancellation, in order of first appearance."""
    counts: dict[frozenset[int], int] = {}
    for e in edges:
        counts[e] = counts.get(e, 0) ^ 1
    return [e for e, c in counts.items() if c]


def bridge_blocks(cross: Iterable[frozenset[int]], cut: Cut) -> list[BridgeBlock]:
    a = cut.a_set
    blocks = []
    for e in cross:
        ea = e & a
        if len(ea) != 1:
            continue
        tb = frozenset(e - ea)
        if not tb:
            continue
        (i,) = ea
        blocks.append(BridgeBlock(i, tb))
    return blocks
