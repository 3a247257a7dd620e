"""GF(2) linear algebra over bit-packed ints.

A matrix is a list of row ints with bit k of each row holding the entry in
column k (column 0 is the leftmost pivot column).  Field elements in their
coordinate representation can be used directly as rows.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


class DependentInput(ValueError):
    """Linearly dependent elements where independence is required."""


@dataclass(frozen=True)
class BitMatrix:
    """Dense bit matrix, row-major; data[r] bit c is the (r, c) entry."""

    rows: int
    cols: int
    data: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols <= 0 or len(self.data) != self.rows:
            raise ValueError("inconsistent BitMatrix shape")

    def row(self, r: int) -> int:
        return self.data[r]


def _eliminate(rows: list[int], ncols: int) -> tuple[list[int], list[int], list[int]]:
    """In-place RREF with deterministic pivoting (leftmost column, lowest
    row).  Returns (reduced rows, pivot column per reduced row, transform)
    where transform[r] records the input-row combination producing row r.
    """
    work = list(rows)
    trans = [1 << r for r in range(len(work))]
    pivots: list[int] = []
    rank = 0
    for col in range(ncols):
        piv = None
        for r in range(rank, len(work)):
            if (work[r] >> col) & 1:
                piv = r
                break
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        trans[rank], trans[piv] = trans[piv], trans[rank]
        for r in range(len(work)):
            if r != rank and ((work[r] >> col) & 1):
                work[r] ^= work[rank]
                trans[r] ^= trans[rank]
        pivots.append(col)
        rank += 1
        if rank == len(work):
            break
    return work, pivots, trans


def rank(rows: Sequence[int], ncols: int) -> int:
    """Rank over GF(2)."""
    _, pivots, _ = _eliminate(list(rows), ncols)
    return len(pivots)


def solve(rows: Sequence[int], ncols: int, rhs: int) -> tuple[int | None, list[int]]:
    """Solve M x = rhs over GF(2); rhs bit r is the right-hand side of row r.

    Returns (particular solution with free variables set to 0, or None if
    inconsistent; basis of the nullspace).  Pivoting is deterministic, so
    identical inputs reproduce identical outputs.
    """
    nrows = len(rows)
    aug = [rows[r] | (((rhs >> r) & 1) << ncols) for r in range(nrows)]
    red, pivots, _ = _eliminate(aug, ncols)
    kernel = _kernel_from_rref(red, pivots, ncols)
    particular = 0
    for r, col in enumerate(pivots):
        if (red[r] >> ncols) & 1:
            particular |= 1 << col
    for r in range(len(pivots), nrows):
        if red[r] >> ncols:
            return None, kernel
    return particular, kernel


def nullspace(rows: Sequence[int], ncols: int) -> list[int]:
    """Basis of {x : M x = 0}."""
    red, pivots, _ = _eliminate(list(rows), ncols)
    return _kernel_from_rref(red, pivots, ncols)


def _kernel_from_rref(red: list[int], pivots: list[int], ncols: int) -> list[int]:
    pivot_set = set(pivots)
    kernel = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = 1 << free
        for r, col in enumerate(pivots):
            if (red[r] >> free) & 1:
                vec |= 1 << col
        kernel.append(vec)
    return kernel


def invert(rows: Sequence[int], n: int) -> list[int]:
    """Inverse of a square n x n bit matrix; raises DependentInput if singular."""
    aug = [rows[r] | (1 << (n + r)) for r in range(n)]
    red, pivots, _ = _eliminate(aug, n)
    if len(pivots) != n:
        raise DependentInput("matrix is singular over GF(2)")
    return [red[r] >> n for r in range(n)]


def transpose(rows: Sequence[int], ncols: int) -> list[int]:
    """Transpose a bit matrix given as rows; result has len(rows) columns."""
    out = []
    for c in range(ncols):
        v = 0
        for r, row in enumerate(rows):
            v |= ((row >> c) & 1) << r
        out.append(v)
    return out


def dot(row: int, vec: int) -> int:
    """GF(2) inner product of two bit vectors."""
    return (row & vec).bit_count() & 1


def span(basis: Sequence[int]) -> list[int]:
    """All 2^k combinations of k basis vectors (in subset-doubling order)."""
    out = [0]
    for b in basis:
        out += [v ^ b for v in out]
    return out


# -- operations on field elements -------------------------------------------


def independent(ctx, elems: Sequence[int]) -> bool:
    """True iff the field elements are linearly independent over GF(2)."""
    return rank(elems, ctx.m) == len(elems)


def complete_to_basis(ctx, elems: Sequence[int]) -> list[int]:
    """Complete independent elements to a basis of GF(2^m)/GF(2), greedily
    appending the unit vectors 1, alpha, ..., alpha^(m-1) that extend rank."""
    m = ctx.m
    basis = list(elems)
    red, pivots, _ = _eliminate(basis, m)
    if len(pivots) != len(elems):
        raise DependentInput("cannot complete dependent elements to a basis")
    work = [red[r] for r in range(len(pivots))]
    for k in range(m):
        if len(basis) == m:
            break
        cand = 1 << k
        rem = _reduce_against(cand, work, pivots)
        if rem:
            basis.append(cand)
            work, pivots, _ = _eliminate(work + [rem], m)
    assert len(basis) == m
    return basis


def _reduce_against(vec: int, rref_rows: list[int], pivots: list[int]) -> int:
    for r, col in enumerate(pivots):
        if (vec >> col) & 1:
            vec ^= rref_rows[r]
    return vec


def dual_basis(ctx, basis: Sequence[int]) -> list[int]:
    """The trace-dual basis: the unique elements b'_j with
    Tr(b_i * b'_j) = 1 iff i = j.

    Computed with one m x m inversion of the matrix G[i][k] = Tr(b_i * alpha^k):
    the coordinate vector of b'_j is column j of G^(-1).
    """
    m = ctx.m
    if len(basis) != m or rank(basis, m) != m:
        raise DependentInput("dual basis requires a full basis")
    G = []
    for b in basis:
        row = 0
        for k in range(m):
            if ctx.trace(ctx.mul(b, 1 << k)):
                row |= 1 << k
        G.append(row)
    ginv = invert(G, m)
    # coordinates w.r.t. the polynomial basis coincide with the bit packing,
    # so column j of G^(-1) *is* the element b'_j
    dual = []
    for j in range(m):
        e = 0
        for k in range(m):
            if (ginv[k] >> j) & 1:
                e |= 1 << k
        dual.append(e)
    return dual
