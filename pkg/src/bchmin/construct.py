"""Assemble explicit codeword supports from equation solutions, convert them
between designed distances at the support level, and build the Gold-function
and Grigorescu-Kaufman special supports.

A support is kept compressed as X + span(B) (a small set plus a subspace
basis) until expanded to an explicit element set.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import gflinalg, linearized
from .gflinalg import BitMatrix
from .solvers import BadDegree, SolutionVector


class BadS(ValueError):
    """s outside 0..m-2i."""


class CollisionDetected(ValueError):
    """X + span(B) produced fewer elements than |X| * 2^|B|."""


class NotCosetUnion(ValueError):
    """Support is not a union of cosets of the given subspace."""


class BadDistanceParity(ValueError):
    """Distance parity requirement violated."""


class SupportNotInU(ValueError):
    """Support not contained in the subspace being up-converted over."""


class XNotInSupport(ValueError):
    """Puncturing point must belong to the support."""


class DegenerateY(ValueError):
    """The six Grigorescu-Kaufman elements collapse for this y."""


@dataclass(frozen=True)
class SupportSpec:
    """Compressed support X + span(B) of a distance-d(m, s, i) codeword.

    x_generators are the 2i independent elements whose bit-combinations
    listed by the quadratic-form rows make up x_set; solution is the
    equation solution the construction started from.
    """

    ctx: object
    x_set: frozenset
    basis: tuple[int, ...]
    m: int
    i: int
    s: int
    method: str
    solution: tuple[int, ...]
    x_generators: tuple[int, ...]

    @property
    def weight(self) -> int:
        return len(self.x_set) << len(self.basis)


@dataclass(frozen=True)
class CodewordSupport:
    """Explicit support of a claimed codeword of eBCH(d) (coordinates are
    all of GF(2^m)) or, punctured, of BCH(d) (coordinates are the nonzero
    elements)."""

    ctx: object
    elems: frozenset
    claimed_distance: int
    extended: bool

    @property
    def weight(self) -> int:
        return len(self.elems)


def quadform_rows(i: int) -> BitMatrix:
    """Rows are all (x_1, ..., x_2i) with x_1 x_2 + ... + x_{2i-1} x_{2i} = 1,
    in lexicographic order; bit j-1 of a row int holds x_j."""
    if i < 1:
        raise ValueError("i must be >= 1")
    rows = []
    w = 2 * i
    for v in range(1 << w):
        # enumerate lexicographically on (x_1, ..., x_2i): x_1 is the MSB of v
        acc = 0
        for k in range(i):
            acc ^= ((v >> (w - 1 - 2 * k)) & (v >> (w - 2 - 2 * k))) & 1
        if acc:
            row = 0
            for j in range(w):
                if (v >> (w - 1 - j)) & 1:
                    row |= 1 << j
            rows.append(row)
    assert len(rows) == (1 << (w - 1)) - (1 << (i - 1))
    return BitMatrix(len(rows), w, tuple(rows))


def build_support(sol: SolutionVector, s: int) -> SupportSpec:
    """Support of the distance-d(m, s, i) codeword seeded by sol.

    The solution entries are completed to a basis, whose trace-dual basis
    b'_1..b'_m splits into quadratic-form generators (first 2i), the
    annihilated directions (next s), and the free subspace part.  With A
    the annihilator of span(b'_{2i+1}, ..., b'_{2i+s}), the support is
      { row-combinations of A(b'_1), ..., A(b'_2i) } + span of the A-images
    of the remaining dual vectors.
    """
    ctx = sol.ctx
    m, i = ctx.m, sol.i
    if not 0 <= s <= m - 2 * i:
        raise BadS(f"s must be in 0..{m - 2 * i}, got {s}")
    basis = gflinalg.complete_to_basis(ctx, list(sol.b))
    dual = gflinalg.dual_basis(ctx, basis)
    ann = linearized.annihilator(ctx, dual[2 * i : 2 * i + s])
    gens = tuple(linearized.lin_eval(ann, bp) for bp in dual[: 2 * i])
    tail = tuple(linearized.lin_eval(ann, bp) for bp in dual[2 * i + s :])
    assert gflinalg.independent(ctx, gens + tail)
    x_set = set()
    for row in quadform_rows(i).data:
        e = 0
        for j in range(2 * i):
            if (row >> j) & 1:
                e ^= gens[j]
        x_set.add(e)
    assert len(x_set) == (1 << (2 * i - 1)) - (1 << (i - 1))
    return SupportSpec(
        ctx=ctx,
        x_set=frozenset(x_set),
        basis=tail,
        m=m,
        i=i,
        s=s,
        method="quadform",
        solution=sol.b,
        x_generators=gens,
    )


def expand(spec: SupportSpec) -> CodewordSupport:
    """Explicit element set X + span(B); collision-free by construction."""
    elems = set()
    for v in gflinalg.span(spec.basis):
        elems.update(x ^ v for x in spec.x_set)
    if len(elems) != spec.weight:
        raise CollisionDetected("X + span(B) is smaller than |X| * 2^|B|")
    return CodewordSupport(spec.ctx, frozenset(elems), spec.weight, extended=True)


def down_convert(cw: CodewordSupport, V_basis) -> CodewordSupport:
    """Image A(S) of the support under the annihilator A of span(V_basis):
    collapses each coset of the subspace to a point and divides the
    distance by 2^s."""
    if not cw.extended:
        raise ValueError("down-conversion applies to extended supports")
    ctx = cw.ctx
    V_basis = list(V_basis)
    s = len(V_basis)
    new_d = (cw.claimed_distance + (1 << s) - 1) >> s
    if new_d % 2:
        raise BadDistanceParity(f"ceil(d / 2^s) = {new_d} must be even")
    for v in V_basis:
        for x in cw.elems:
            if x ^ v not in cw.elems:
                raise NotCosetUnion("support is not a union of cosets of span(V)")
    ann = linearized.annihilator(ctx, V_basis)
    image = {linearized.lin_eval(ann, x) for x in cw.elems}
    assert len(image) == len(cw.elems) >> s
    return CodewordSupport(ctx, frozenset(image), new_d, extended=True)


def up_convert(cw: CodewordSupport, U_basis) -> CodewordSupport:
    """Preimage of the support under the image polynomial of span(U_basis):
    blows each point up to a kernel coset and multiplies the distance by
    2^(m-k)."""
    if not cw.extended:
        raise ValueError("up-conversion applies to extended supports")
    ctx = cw.ctx
    U_basis = list(U_basis)
    k = len(U_basis)
    red, pivots, _ = gflinalg._eliminate(list(U_basis), ctx.m)
    if len(pivots) != k:
        raise linearized.DependentGenerators("U basis is dependent")
    for x in cw.elems:
        if gflinalg._reduce_against(x, red, pivots):
            raise SupportNotInU(f"support element {x} outside span(U)")
    bmap = linearized.image_map_for_subspace(ctx, U_basis)
    preimage = bmap.preimage_set(cw.elems)
    factor = 1 << (ctx.m - k)
    assert len(preimage) == len(cw.elems) * factor
    return CodewordSupport(
        ctx, frozenset(preimage), cw.claimed_distance * factor, extended=True
    )


def gold_support(ctx, i: int) -> CodewordSupport:
    """Zero set of x -> Tr(beta * x^(2^i + 1)) on the subfield GF(2^2i),
    for the first subfield element beta outside GF(2^i); a weight
    2^(2i-1) - 2^(i-1) member of the matching extended BCH code whenever
    2i | m."""
    if i < 1 or ctx.m % (2 * i):
        raise BadDegree(f"2i = {2 * i} must divide m = {ctx.m}")
    elems, _ = ctx.subfield(2 * i)
    beta = next(x for x in elems if not ctx.in_subfield(x, i))
    d = 1 << i
    support = frozenset(
        x for x in elems if ctx.trace_rel(ctx.mul(beta, ctx.pow(x, d + 1)), 1, 2 * i) == 0
    )
    weight = (1 << (2 * i - 1)) - (1 << (i - 1))
    assert len(support) == weight
    return CodewordSupport(ctx, support, weight, extended=True)


def gk_support(ctx, y: int) -> CodewordSupport:
    """The explicit six-element support {0, 1, 1+y^4, y+y^2+y^4,
    y^2+y^3+y^4, y+y^3+y^4} of a weight-6 word of eBCH(6)."""
    if ctx.m < 4:
        raise ValueError("m >= 4 required")
    y2 = ctx.mul(y, y)
    y3 = ctx.mul(y2, y)
    y4 = ctx.mul(y2, y2)
    elems = {0, 1, 1 ^ y4, y ^ y2 ^ y4, y2 ^ y3 ^ y4, y ^ y3 ^ y4}
    if len(elems) != 6:
        raise DegenerateY(f"six elements collapse for y={y}")
    return CodewordSupport(ctx, frozenset(elems), 6, extended=True)


def puncture(cw: CodewordSupport, x: int) -> CodewordSupport:
    """Translate the support by one of its own elements and drop the zero
    coordinate: an extended weight-d support becomes a weight-(d-1) support
    of the punctured code."""
    if not cw.extended:
        raise ValueError("puncturing applies to extended supports")
    if x not in cw.elems:
        raise XNotInSupport(f"{x} is not in the support")
    elems = {x ^ e for e in cw.elems}
    elems.discard(0)
    return CodewordSupport(
        cw.ctx, frozenset(elems), cw.claimed_distance - 1, extended=False
    )
