"""Residual-free bilinear cores: search, certificate extraction, verification.

The search side works at the level of hyperedges (reduced supports with
parity counts).  The verifier takes the other route: it restricts the cross
phase polynomial symbolically and reads the core off the surviving
monomials, so a certificate is rechecked without any search state.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .anf import cut_decompose, restrict, vertices_of
from .f2 import ContractError, F2Matrix, rank_f2
from .hypergraph import BridgeBlock, Cut, Hypergraph, bridge_blocks, cross_edges, odd_edges


class CertificateRejected(Exception):
    """Verification failed; ``reason`` is a short stable code."""

    MALFORMED = "malformed"
    RANK_MISMATCH = "rank mismatch"
    RESIDUAL_FOUND = "residual found"
    GAMMA_MISMATCH = "gamma mismatch"

    def __init__(self, reason: str, detail: str = ""):
        super().__init__(f"{reason}: {detail}" if detail else reason)
        self.reason = reason
        self.detail = detail


@dataclass(frozen=True)
class Restriction:
    active_a: tuple[int, ...]
    active_b: tuple[int, ...]
    beta: Mapping[int, int] = field(default_factory=dict)
    alpha: Mapping[int, int] = field(default_factory=dict)

    @property
    def fixed(self) -> dict[int, int]:
        return {**self.beta, **self.alpha}

    def problems(self, cut: Cut) -> list[str]:
        out = []
        I, J = self.active_a, self.active_b
        if len(set(I)) != len(I) or len(set(J)) != len(J):
            out.append("active sets contain duplicates")
        if not set(I) <= cut.a_set:
            out.append(f"active_a {sorted(set(I) - cut.a_set)} not in A")
        if not set(J) <= cut.b_set:
            out.append(f"active_b {sorted(set(J) - cut.b_set)} not in B")
        if set(self.beta) != cut.a_set - set(I):
            out.append("beta does not cover exactly A minus active_a")
        if set(self.alpha) != cut.b_set - set(J):
            out.append("alpha does not cover exactly B minus active_b")
        if any(b not in (0, 1) for b in (*self.beta.values(), *self.alpha.values())):
            out.append("restriction bits must be 0 or 1")
        return out

    def validate(self, cut: Cut) -> None:
        problems = self.problems(cut)
        if problems:
            raise ValueError("; ".join(problems))


@dataclass(frozen=True)
class CoreCertificate:
    restriction: Restriction
    gamma_core: F2Matrix
    t: int
    bound: int

    @classmethod
    def from_core(cls, restriction: Restriction, gamma_core: F2Matrix) -> "CoreCertificate":
        t = rank_f2(gamma_core)
        return cls(restriction, gamma_core, t, 2**t)

    @property
    def rectangular(self) -> bool:
        return self.gamma_core.rows != self.gamma_core.cols


ReducedSupportSet = frozenset  # of frozenset[int], each a surviving active support


def odd_reduced_supports(cross: Iterable[frozenset[int]], r: Restriction, cut: Cut) -> ReducedSupportSet:
    problems = r.problems(cut)
    if problems:
        raise ContractError("restriction inconsistent with cut: " + "; ".join(problems))
    fixed = r.fixed
    active = frozenset(r.active_a) | frozenset(r.active_b)
    parity: set[frozenset[int]] = set()
    for e in cross:
        if any(fixed.get(v) == 0 for v in e):
            continue
        parity ^= {frozenset(e & active)}
    return frozenset(parity)


def _is_residual(support: frozenset[int], I: frozenset[int], J: frozenset[int]) -> bool:
    return len(support) >= 3 and bool(support & I) and bool(support & J)


def residual_free(s: ReducedSupportSet, I: Sequence[int], J: Sequence[int]) -> bool:
    I_set, J_set = frozenset(I), frozenset(J)
    return not any(_is_residual(sup, I_set, J_set) for sup in s)


def core_matrix(s: ReducedSupportSet, I: Sequence[int], J: Sequence[int]) -> F2Matrix:
    if not residual_free(s, I, J):
        raise ContractError("core_matrix needs a residual-free support set")
    row_of = {v: k for k, v in enumerate(I)}
    col_of = {v: k for k, v in enumerate(J)}
    bits = [0] * len(I)
    for sup in s:
        if len(sup) != 2:
            continue
        x, y = sorted(sup)
        if x in col_of:
            x, y = y, x
        if x in row_of and y in col_of:
            bits[row_of[x]] |= 1 << col_of[y]
    return F2Matrix(len(I), len(J), tuple(bits))


def _block_key(block: BridgeBlock) -> tuple:
    return (len(block.b_support), block.a_vertex, sorted(block.b_support))


def _greedy_pack(ordered: Iterable[BridgeBlock], r: int) -> list[BridgeBlock] | None:
    chosen: list[BridgeBlock] = []
    used_a: set[int] = set()
    used_b: set[int] = set()
    for block in ordered:
        if block.a_vertex in used_a or block.b_support & used_b:
            continue
        chosen.append(block)
        used_a.add(block.a_vertex)
        used_b |= block.b_support
        if len(chosen) == r:
            return chosen
    return None


def candidate_block_families(
    blocks: Sequence[BridgeBlock], r: int, restarts: int = 0, seed: int = 0
) -> list[list[BridgeBlock]]:
    """Greedy family first, then up to ``restarts`` distinct jittered-greedy families."""
    families = []
    seen = set()
    first = _greedy_pack(sorted(blocks, key=_block_key), r)
    if first is not None:
        families.append(first)
        seen.add(frozenset(first))
    rng = random.Random(f"{seed}:{r}")
    pool = sorted(blocks, key=_block_key)
    for _ in range(restarts):
        # multiplicative noise keeps the small-|T| bias but lets orders cross sizes
        noise = [len(b.b_support) * rng.uniform(0.5, 1.5) for b in pool]
        order = [b for _, b in sorted(zip(noise, pool), key=lambda nb: nb[0])]
        fam = _greedy_pack(order, r)
        if fam is not None and frozenset(fam) not in seen:
            families.append(fam)
            seen.add(frozenset(fam))
    return families


def select_disjoint_blocks(
    blocks: Sequence[BridgeBlock], r: int, restarts: int = 0, seed: int = 0
) -> list[BridgeBlock] | None:
    """r blocks with distinct A-vertices and disjoint B-supports, or None."""
    families = candidate_block_families(blocks, r, restarts, seed)
    return families[0] if families else None


def canonical_restriction(blocks: Sequence[BridgeBlock], cut: Cut) -> Restriction:
    ordered = sorted(blocks, key=lambda b: b.a_vertex)
    I = tuple(b.a_vertex for b in ordered)
    J = tuple(min(b.b_support) for b in ordered)
    beta = {v: 0 for v in cut.a_vertices if v not in I}
    linearized = set()
    for b, j in zip(ordered, J):
        linearized |= b.b_support - {j}
    alpha = {v: int(v in linearized) for v in cut.b_vertices if v not in J}
    return Restriction(I, J, beta, alpha)


def check_bridge_conditions(blocks: Sequence[BridgeBlock], cross: Iterable[frozenset[int]]) -> bool:
    """Disjoint bridge matching: the three structural conditions on cross edges."""
    a_seen: set[int] = set()
    b_seen: set[int] = set()
    for block in blocks:
        if block.a_vertex in a_seen or block.b_support & b_seen:
            return False
        a_seen.add(block.a_vertex)
        b_seen |= block.b_support
    block_sets = [blk.vertices for blk in blocks]
    cross = list(cross)
    for e in cross:
        if sum(1 for bs in block_sets if e & bs) >= 2:
            return False
    surviving = odd_edges(cross)
    for bs in block_sets:
        inside = {e for e in surviving if e <= bs}
        if inside != {bs}:
            return False
    return True


def certify_blocks(g: Hypergraph, cut: Cut, blocks: Sequence[BridgeBlock]) -> CoreCertificate | None:
    """Canonical restriction for the given blocks, kept only if residual-free."""
    restriction = canonical_restriction(blocks, cut)
    supports = odd_reduced_supports(cross_edges(g, cut), restriction, cut)
    if not residual_free(supports, restriction.active_a, restriction.active_b):
        return None
    gamma = core_matrix(supports, restriction.active_a, restriction.active_b)
    return CoreCertificate.from_core(restriction, gamma)


def search_and_verify(
    g: Hypergraph, cut: Cut, r_max: int, restarts: int = 0, seed: int = 0
) -> CoreCertificate | None:
    """Try block-family sizes from r_max downward; first verified core wins."""
    if r_max < 1:
        raise ValueError("r_max must be >= 1")
    cross = cross_edges(g, cut)
    # repeated bridge edges cancel in the phase, so they are not candidates
    blocks = bridge_blocks(odd_edges(cross), cut)
    for r in range(min(r_max, len(blocks)), 0, -1):
        for family in candidate_block_families(blocks, r, restarts, seed):
            cert = certify_blocks(g, cut, family)
            if cert is not None:
                return cert
    return None


def check_certificate(g: Hypergraph, cut: Cut, c: CoreCertificate) -> None:
    """Raise CertificateRejected unless c certifies SR >= c.bound on (g, cut)."""
    R = c.restriction
    try:
        cut.validate(g.n)
    except ValueError as exc:
        raise CertificateRejected(CertificateRejected.MALFORMED, str(exc)) from None
    problems = R.problems(cut)
    if problems:
        raise CertificateRejected(CertificateRejected.MALFORMED, "; ".join(problems))
    gamma = c.gamma_core
    if (gamma.rows, gamma.cols) != (len(R.active_a), len(R.active_b)):
        raise CertificateRejected(
            CertificateRejected.MALFORMED,
            f"gamma_core is {gamma.rows}x{gamma.cols}, active sets are {len(R.active_a)}x{len(R.active_b)}",
        )
    t = rank_f2(gamma)
    if c.t != t or c.bound != 2**c.t:
        raise CertificateRejected(
            CertificateRejected.RANK_MISMATCH, f"claimed t={c.t}, bound={c.bound}; gamma_core has rank {t}"
        )

    _, _, f_ab = cut_decompose(g.phase_polynomial(), cut)
    core = restrict(f_ab, R.fixed)
    I, J = frozenset(R.active_a), frozenset(R.active_b)
    row_of = {v: k for k, v in enumerate(R.active_a)}
    col_of = {v: k for k, v in enumerate(R.active_b)}
    bits = [0] * len(row_of)
    for m in core.monomials:
        support = frozenset(vertices_of(m))
        if not (support & I and support & J):
            continue  # local to one side: absorbed into row/column phases
        if len(support) >= 3:
            raise CertificateRejected(
                CertificateRejected.RESIDUAL_FOUND, f"cross monomial on {sorted(support)} survives"
            )
        (i,) = support & I
        (j,) = support & J
        bits[row_of[i]] |= 1 << col_of[j]
    extracted = F2Matrix(len(row_of), len(col_of), tuple(bits))
    if extracted != gamma:
        raise CertificateRejected(CertificateRejected.GAMMA_MISMATCH, "gamma_core differs from the restricted phase")


def verify_certificate(g: Hypergraph, cut: Cut, c: CoreCertificate) -> bool:
    try:
        check_certificate(g, cut, c)
    except CertificateRejected:
        return False
    return True
