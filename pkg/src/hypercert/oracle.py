"""Brute-force Schmidt ranks from explicit sign matrices.

Row index of a sign matrix encodes u over the cut's A-ordering with the first
listed vertex as the most significant bit; columns encode v the same way.
Ranks are exact: fraction-free (Bareiss) elimination over the integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .anf import AnfPolynomial, cut_decompose
from .hypergraph import Cut, Hypergraph


class ResourceLimitError(RuntimeError):
    pass


@dataclass(frozen=True)
class OracleLimits:
    max_side: int = 14
    max_total: int = 26

    def check(self, a: int, b: int) -> None:
        if a > self.max_side or b > self.max_side or a + b > self.max_total:
            raise ResourceLimitError(
                f"sign matrix 2^{a} x 2^{b} exceeds the brute-force cap "
                f"(each side <= {self.max_side}, total <= {self.max_total})"
            )


DEFAULT_LIMITS = OracleLimits()


@dataclass(frozen=True, eq=False)
class SignMatrix:
    row_vertices: tuple[int, ...]
    col_vertices: tuple[int, ...]
    entries: np.ndarray  # int8, shape (2^a, 2^b), values +-1

    @property
    def row_bits(self) -> int:
        return len(self.row_vertices)

    @property
    def col_bits(self) -> int:
        return len(self.col_vertices)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SignMatrix):
            return NotImplemented
        return (
            self.row_vertices == other.row_vertices
            and self.col_vertices == other.col_vertices
            and np.array_equal(self.entries, other.entries)
        )


def _index_masks(vertices: tuple[int, ...]) -> np.ndarray:
    """Vertex bitmask of every row (or column) index, MSB = first vertex."""
    k = len(vertices)
    idx = np.arange(1 << k, dtype=np.uint64)
    masks = np.zeros(1 << k, dtype=np.uint64)
    for pos, v in enumerate(vertices):
        bit = (idx >> np.uint64(k - 1 - pos)) & np.uint64(1)
        masks |= bit << np.uint64(v)
    return masks


def _sign_matrix(f: AnfPolynomial, cut: Cut, limits: OracleLimits) -> SignMatrix:
    cut.validate(f.n)
    a, b = len(cut.a_vertices), len(cut.b_vertices)
    limits.check(a, b)
    x = _index_masks(cut.a_vertices)[:, None] | _index_masks(cut.b_vertices)[None, :]
    parity = np.zeros(x.shape, dtype=np.uint8)
    for m in f.monomials:
        mm = np.uint64(m)
        parity ^= ((x & mm) == mm).astype(np.uint8)
    entries = (1 - 2 * parity.astype(np.int8)).astype(np.int8)
    return SignMatrix(cut.a_vertices, cut.b_vertices, entries)


def build_sign_matrix(f_ab: AnfPolynomial, cut: Cut, limits: OracleLimits = DEFAULT_LIMITS) -> SignMatrix:
    """R[u, v] = (-1)^{f_AB(u, v)} for the phase-cleaned cross part."""
    return _sign_matrix(f_ab, cut, limits)


def build_coefficient_matrix(f_g: AnfPolynomial, cut: Cut, limits: OracleLimits = DEFAULT_LIMITS) -> SignMatrix:
    """Signs of the full coefficient matrix M, without the 2^{-n/2} factor."""
    return _sign_matrix(f_g, cut, limits)


def _dedupe_up_to_sign(arr: np.ndarray) -> np.ndarray:
    # rescaling a row by -1 or dropping a repeated row leaves the rank unchanged
    signs = arr[:, :1]
    return np.unique(arr * signs, axis=0)


# Bareiss numerators are products of two minors; keep them inside int64.
_INT64_SAFE = 2**31


def _bareiss_rank(mat: np.ndarray) -> int:
    try:
        work = mat.astype(np.int64)
    except OverflowError:
        work = mat.astype(object)
    rows, cols = work.shape
    prev = 1
    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        nz = np.flatnonzero(work[rank:, col])
        if nz.size == 0:
            continue
        p = rank + int(nz[0])
        if p != rank:
            work[[rank, p]] = work[[p, rank]]
        pivot = int(work[rank, col])
        if work.dtype != object and int(np.abs(work[rank:, col:]).max()) >= _INT64_SAFE:
            work = work.astype(object)
        below = work[rank + 1 :, col : col + 1]
        block = work[rank + 1 :, col + 1 :]
        block[...] = (pivot * block - below * work[rank, col + 1 :]) // prev
        below[...] = 0
        prev = pivot
        rank += 1
    return rank


def real_rank_exact(m: SignMatrix | np.ndarray) -> int:
    """Exact rank over Q; no floating point anywhere."""
    arr = m.entries if isinstance(m, SignMatrix) else np.asarray(m)
    if arr.size == 0:
        return 0
    if np.all(np.abs(arr) == 1):
        arr = arr.astype(np.int64)
        arr = _dedupe_up_to_sign(arr)
        arr = _dedupe_up_to_sign(arr.T).T
    return _bareiss_rank(arr)


def schmidt_rank(g: Hypergraph, cut: Cut, limits: OracleLimits = DEFAULT_LIMITS) -> int:
    _, _, f_ab = cut_decompose(g.phase_polynomial(), cut)
    return real_rank_exact(build_sign_matrix(f_ab, cut, limits))


def restricted_submatrix(m: SignMatrix, fixed: Mapping[int, int]) -> SignMatrix:
    """Submatrix with the given vertices pinned; free bits keep their order."""
    known = set(m.row_vertices) | set(m.col_vertices)
    unknown = sorted(set(fixed) - known)
    if unknown:
        raise KeyError(f"cannot fix unknown vertices {unknown}")
    for v, bit in fixed.items():
        if bit not in (0, 1):
            raise ValueError(f"bit for vertex {v} must be 0 or 1, got {bit!r}")

    def select(vertices: tuple[int, ...]) -> tuple[np.ndarray, tuple[int, ...]]:
        k = len(vertices)
        idx = np.arange(1 << k)
        keep = np.ones(idx.shape, dtype=bool)
        for pos, v in enumerate(vertices):
            if v in fixed:
                keep &= ((idx >> (k - 1 - pos)) & 1) == fixed[v]
        return idx[keep], tuple(v for v in vertices if v not in fixed)

    rows, free_rows = select(m.row_vertices)
    cols, free_cols = select(m.col_vertices)
    return SignMatrix(free_rows, free_cols, m.entries[np.ix_(rows, cols)])
