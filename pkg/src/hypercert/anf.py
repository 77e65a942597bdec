"""Boolean phase polynomials in algebraic normal form over F2.

A monomial is an int bitmask over the vertices (bit ``i`` set means ``x_i``
is a factor); the empty mask is the constant 1.  A polynomial is the set of
monomials whose coefficient is 1, so XOR of polynomials is symmetric
difference of monomial sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence, Union

MAX_VERTICES = 64

Assignment = Union[Sequence[int], Mapping[int, int]]


class MissingVariableError(ValueError):
    pass


class InvalidCutError(ValueError):
    pass


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vertices_of(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def _check_n(n: int) -> None:
    if not 0 <= n <= MAX_VERTICES:
        raise ValueError(f"vertex count must be in [0, {MAX_VERTICES}], got {n}")


def _check_vertex(n: int, v: int) -> None:
    if not 0 <= v < n:
        raise IndexError(f"vertex {v} out of range for n={n}")


@dataclass(frozen=True)
class AnfPolynomial:
    n: int
    monomials: frozenset[int] = frozenset()

    def __post_init__(self):
        _check_n(self.n)
        full = (1 << self.n) - 1
        for m in self.monomials:
            if m & ~full:
                raise IndexError(f"monomial {vertices_of(m)} exceeds n={self.n}")

    @classmethod
    def from_monomials(cls, n: int, monomials: Iterable[Iterable[int]]) -> "AnfPolynomial":
        """Build from vertex sets with mod-2 cancellation of repeats."""
        acc: set[int] = set()
        for mono in monomials:
            acc ^= {mask_of(mono)}
        return cls(n, frozenset(acc))

    def __xor__(self, other: "AnfPolynomial") -> "AnfPolynomial":
        if other.n != self.n:
            raise ValueError("polynomials over different vertex counts")
        return AnfPolynomial(self.n, self.monomials ^ other.monomials)

    def __len__(self) -> int:
        return len(self.monomials)

    def __contains__(self, vertices) -> bool:
        return mask_of(vertices) in self.monomials

    def is_zero(self) -> bool:
        return not self.monomials

    def degree(self) -> int:
        return max((bin(m).count("1") for m in self.monomials), default=-1)

    def supports(self) -> list[tuple[int, ...]]:
        """Monomial supports as sorted vertex tuples, in a canonical order."""
        return sorted((vertices_of(m) for m in self.monomials), key=lambda s: (len(s), s))

    def __str__(self) -> str:
        if not self.monomials:
            return "0"
        terms = ["1" if not s else "".join(f"x{i}" for i in s) for s in self.supports()]
        return " + ".join(terms)


def anf_from_hyperedges(n: int, edges: Iterable[Iterable[int]]) -> AnfPolynomial:
    """XOR of one monomial per hyperedge; repeated edges cancel."""
    _check_n(n)
    acc: set[int] = set()
    for edge in edges:
        for v in edge:
            _check_vertex(n, v)
        acc ^= {mask_of(edge)}
    return AnfPolynomial(n, frozenset(acc))


def _assignment_mask(n: int, x: Assignment) -> int:
    if isinstance(x, Mapping):
        missing = [i for i in range(n) if i not in x]
        if missing:
            raise MissingVariableError(f"assignment missing variables {missing}")
        bits = [x[i] for i in range(n)]
    else:
        if len(x) != n:
            raise MissingVariableError(f"assignment has {len(x)} bits, need {n}")
        bits = list(x)
    mask = 0
    for i, b in enumerate(bits):
        if b not in (0, 1):
            raise ValueError(f"bit for x{i} must be 0 or 1, got {b!r}")
        if b:
            mask |= 1 << i
    return mask


def evaluate_mask(f: AnfPolynomial, x: int) -> int:
    """Evaluate at the point whose set bits are the variables equal to 1."""
    out = 0
    for m in f.monomials:
        if m & x == m:
            out ^= 1
    return out


def evaluate(f: AnfPolynomial, x: Assignment) -> int:
    return evaluate_mask(f, _assignment_mask(f.n, x))


def boolean_derivative(f: AnfPolynomial, i: int) -> AnfPolynomial:
    """f(x) xor f(x xor e_i): peels x_i off every monomial that contains it."""
    _check_vertex(f.n, i)
    bit = 1 << i
    acc: set[int] = set()
    for m in f.monomials:
        if m & bit:
            acc ^= {m & ~bit}
    return AnfPolynomial(f.n, frozenset(acc))


def restrict(f: AnfPolynomial, fixed: Mapping[int, int]) -> AnfPolynomial:
    """Substitute fixed bits; the result keeps the parent's vertex indexing."""
    zeros = ones = 0
    for v, b in fixed.items():
        _check_vertex(f.n, v)
        if b == 0:
            zeros |= 1 << v
        elif b == 1:
            ones |= 1 << v
        else:
            raise ValueError(f"bit for x{v} must be 0 or 1, got {b!r}")
    acc: set[int] = set()
    for m in f.monomials:
        if m & zeros:
            continue
        acc ^= {m & ~ones}
    return AnfPolynomial(f.n, frozenset(acc))


def cut_decompose(f: AnfPolynomial, cut) -> tuple[AnfPolynomial, AnfPolynomial, AnfPolynomial]:
    """Split into (A-local, B-local, cross) parts; the constant goes to A."""
    a_vertices, b_vertices = tuple(cut.a_vertices), tuple(cut.b_vertices)
    if sorted(a_vertices + b_vertices) != list(range(f.n)):
        raise InvalidCutError(f"cut {a_vertices}|{b_vertices} does not partition 0..{f.n - 1}")
    a_mask, b_mask = mask_of(a_vertices), mask_of(b_vertices)
    f_a, f_b, f_ab = set(), set(), set()
    for m in f.monomials:
        if m & ~a_mask == 0:
            f_a.add(m)
        elif m & ~b_mask == 0:
            f_b.add(m)
        else:
            f_ab.add(m)
    return (
        AnfPolynomial(f.n, frozenset(f_a)),
        AnfPolynomial(f.n, frozenset(f_b)),
        AnfPolynomial(f.n, frozenset(f_ab)),
    )


def truth_table(f: AnfPolynomial) -> list[int]:
    """Values at x = 0 .. 2^n - 1, where bit i of the index is x_i."""
    table = [0] * (1 << f.n)
    for m in f.monomials:
        table[m] ^= 1
    # zeta transform over the subset lattice
    step = 1
    while step < len(table):
        for x in range(len(table)):
            if x & step:
                table[x] ^= table[x ^ step]
        step <<= 1
    return table


def anf_from_truth_table(n: int, table: Sequence[int]) -> AnfPolynomial:
    _check_n(n)
    if len(table) != 1 << n:
        raise ValueError(f"truth table for n={n} needs {1 << n} entries, got {len(table)}")
    coeffs = [int(b) & 1 for b in table]
    # Moebius transform; over F2 it is its own inverse
    step = 1
    while step < len(coeffs):
        for x in range(len(coeffs)):
            if x & step:
                coeffs[x] ^= coeffs[x ^ step]
        step <<= 1
    return AnfPolynomial(n, frozenset(m for m, c in enumerate(coeffs) if c))
