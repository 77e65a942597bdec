"""Dense F2 matrices as row bitmasks, and the bilinear slice of a cross phase."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .anf import AnfPolynomial, vertices_of


class ContractError(ValueError):
    """An operation was handed input outside its stated precondition."""


@dataclass(frozen=True)
class F2Matrix:
    """``bits[r]`` holds row r; bit c of it is entry (r, c)."""

    rows: int
    cols: int
    bits: tuple[int, ...]

    def __post_init__(self):
        if len(self.bits) != self.rows:
            raise ValueError(f"expected {self.rows} rows, got {len(self.bits)}")
        limit = 1 << self.cols
        for r, row in enumerate(self.bits):
            if not 0 <= row < limit:
                raise ValueError(f"row {r} has bits outside {self.cols} columns")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "F2Matrix":
        if cols is None:
            cols = len(rows[0]) if rows else 0
        bits = []
        for r, row in enumerate(rows):
            if len(row) != cols:
                raise ValueError(f"row {r} has length {len(row)}, expected {cols}")
            mask = 0
            for c, b in enumerate(row):
                if b not in (0, 1):
                    raise ValueError(f"entry ({r}, {c}) is {b!r}, not a bit")
                if b:
                    mask |= 1 << c
            bits.append(mask)
        return cls(len(rows), cols, tuple(bits))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "F2Matrix":
        return cls(rows, cols, (0,) * rows)

    @classmethod
    def identity(cls, size: int) -> "F2Matrix":
        return cls(size, size, tuple(1 << i for i in range(size)))

    def __getitem__(self, rc: tuple[int, int]) -> int:
        r, c = rc
        if not (0 <= r < self.rows and 0 <= c < self.cols):
            raise IndexError(rc)
        return (self.bits[r] >> c) & 1

    def to_rows(self) -> list[list[int]]:
        return [[(row >> c) & 1 for c in range(self.cols)] for row in self.bits]

    def transpose(self) -> "F2Matrix":
        out = [0] * self.cols
        for r, row in enumerate(self.bits):
            for c in range(self.cols):
                if (row >> c) & 1:
                    out[c] |= 1 << r
        return F2Matrix(self.cols, self.rows, tuple(out))

    def __xor__(self, other: "F2Matrix") -> "F2Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return F2Matrix(self.rows, self.cols, tuple(x ^ y for x, y in zip(self.bits, other.bits)))

    def is_identity(self) -> bool:
        return self.rows == self.cols and self == F2Matrix.identity(self.rows)

    def __str__(self) -> str:
        return "\n".join(" ".join(str(b) for b in row) for row in self.to_rows()) or "(empty)"


def rank_f2(m: F2Matrix) -> int:
    """Gaussian elimination on a copy; the pivot row is the first with the column bit set."""
    work = list(m.bits)
    rank = 0
    for col in range(m.cols):
        bit = 1 << col
        pivot = next((r for r in range(rank, len(work)) if work[r] & bit), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        prow = work[rank]
        for r in range(rank + 1, len(work)):
            if work[r] & bit:
                work[r] ^= prow
        rank += 1
        if rank == len(work):
            break
    return rank


def bilinear_slice(f_ab: AnfPolynomial, cut) -> F2Matrix:
    """Degree-2 cross monomials u_i v_j as an |A| x |B| matrix in cut order."""
    row_of = {v: k for k, v in enumerate(cut.a_vertices)}
    col_of = {v: k for k, v in enumerate(cut.b_vertices)}
    bits = [0] * len(row_of)
    for m in f_ab.monomials:
        support = vertices_of(m)
        in_a = [v for v in support if v in row_of]
        in_b = [v for v in support if v in col_of]
        if len(in_a) + len(in_b) != len(support):
            raise ContractError(f"monomial {support} has vertices outside the cut")
        if not in_a or not in_b:
            raise ContractError(f"monomial {support} is cut-local; pass the cross part only")
        if len(support) == 2:
            bits[row_of[in_a[0]]] |= 1 << col_of[in_b[0]]
    return F2Matrix(len(row_of), len(col_of), tuple(bits))


def is_purely_bilinear(f_ab: AnfPolynomial) -> bool:
    return all(bin(m).count("1") == 2 for m in f_ab.monomials)
