import pytest
from hypothesis import given
from hypothesis import strategies as st

from bchmin.gf2m import (
    BadTowerDegrees,
    GF2m,
    NonPrimitiveAlpha,
    NotInSubfield,
    ReduciblePolynomial,
    Unsupported,
    UnsupportedDegree,
    ZeroHasNoLog,
    default_field,
    parse_poly,
)

from conftest import random_nonzero, rng


# -- construction ------------------------------------------------------------


def test_make_field_standard_quartic():
    ctx = GF2m(4, 0x13)
    # alpha generates the full multiplicative group of order 15
    seen = set()
    x = 1
    for _ in range(15):
        seen.add(x)
        x = ctx.mul(x, ctx.alpha)
    assert x == 1 and len(seen) == 15


def test_make_field_default_degree8():
    ctx = default_field(8)
    assert ctx.poly == 0x11D
    assert ctx.n == 255


def test_make_field_rejects_reducible():
    with pytest.raises(ReduciblePolynomial):
        GF2m(4, 0x15)  # X^4 + X^2 + 1 = (X^2 + X + 1)^2


def test_make_field_rejects_nonprimitive():
    # X^4 + X^3 + X^2 + X + 1 is irreducible but X has order 5
    with pytest.raises(NonPrimitiveAlpha):
        GF2m(4, 0x1F)


def test_make_field_rejects_bad_degree():
    with pytest.raises(UnsupportedDegree):
        GF2m(1, 0x3)
    with pytest.raises(UnsupportedDegree):
        GF2m(33, (1 << 33) | 1)
    with pytest.raises(ValueError):
        GF2m(5, 0x13)  # degree-4 modulus for m=5


def test_parse_poly_forms():
    assert parse_poly("0x11D") == 0x11D
    assert parse_poly("8,4,3,2,0") == 0x11D
    assert parse_poly(0x13) == 0x13


def test_default_polys_all_valid():
    for m in range(2, 33):
        ctx = default_field(m)
        assert ctx.m == m


# -- arithmetic ---------------------------------------------------------------


def test_mul_identity_and_inverse(gf256):
    r = rng(7)
    for _ in range(100):
        x = random_nonzero(gf256, r)
        assert gf256.mul(x, 1) == x
        assert gf256.mul(x, gf256.pow(x, gf256.n - 1)) == 1
        assert gf256.mul(x, gf256.inv(x)) == 1


def test_mul_reduction_quartic(gf16):
    # alpha^3 * alpha = alpha^4 = alpha + 1 under X^4 + X + 1
    assert gf16.mul(0b1000, 0b0010) == 0b0011


def test_pow_edge_cases(gf256):
    assert gf256.pow(0, 0) == 1
    assert gf256.pow(0, 5) == 0
    with pytest.raises(ZeroDivisionError):
        gf256.pow(0, -1)
    with pytest.raises(ZeroDivisionError):
        gf256.inv(0)
    x = 0xAB
    assert gf256.pow(x, -1) == gf256.inv(x)
    assert gf256.pow(x, gf256.n) == 1


def test_nontable_path_matches_table_path():
    from bchmin.gf2m import _clmul

    assert GF2m(17)._log is None  # no eager tables past m=16
    small = GF2m(8)
    r = rng(3)
    for _ in range(200):
        a, b = r.getrandbits(8), r.getrandbits(8)
        assert small.mul(a, b) == small._reduce(_clmul(a, b))


@given(st.integers(0, 255), st.integers(0, 255), st.integers(0, 255))
def test_field_axioms_gf256(a, b, c):
    ctx = default_field(8)
    assert ctx.mul(a, b) == ctx.mul(b, a)
    assert ctx.mul(ctx.mul(a, b), c) == ctx.mul(a, ctx.mul(b, c))
    assert ctx.mul(a, b ^ c) == ctx.mul(a, b) ^ ctx.mul(a, c)


# -- Frobenius and trace -------------------------------------------------------


def test_frobenius_identities(gf256):
    r = rng(11)
    for _ in range(100):
        x = r.getrandbits(8)
        assert gf256.frobenius(x, 0) == x
        assert gf256.frobenius(x, 8) == x
        root = gf256.frobenius(x, -1)
        assert gf256.mul(root, root) == x


def test_frobenius_fixes_exactly_prime_field():
    ctx = default_field(6)
    fixed = [x for x in range(64) if ctx.frobenius(x, 1) == x]
    assert fixed == [0, 1]


@given(st.integers(0, 255), st.integers(0, 255))
def test_trace_linear_and_frobenius_invariant(x, y):
    ctx = default_field(8)
    assert ctx.trace(x) in (0, 1)
    assert ctx.trace(ctx.mul(x, x)) == ctx.trace(x)
    assert ctx.trace(x ^ y) == ctx.trace(x) ^ ctx.trace(y)


@pytest.mark.parametrize("m", [2, 3, 4, 6, 8, 10, 12])
def test_trace_balanced(m):
    ctx = default_field(m)
    ones = sum(ctx.trace(x) for x in range(1 << m))
    assert ones == 1 << (m - 1)


def test_trace_rel_constants():
    for m in (4, 6, 9):
        ctx = default_field(m)
        assert ctx.trace_rel(0, 1, m) == 0
        assert ctx.trace_rel(1, 1, m) == m % 2
        # absolute trace agrees with the masked-parity implementation
        r = rng(5)
        for _ in range(50):
            x = r.getrandbits(m)
            assert ctx.trace_rel(x, 1, m) == ctx.trace(x)


def test_trace_tower_transitivity():
    # Tr^c_a = Tr^b_a o Tr^c_b on random x, for every chain a | b | c | m
    for m in (8, 12, 16):
        ctx = default_field(m)
        r = rng(m)
        divs = [d for d in range(1, m + 1) if m % d == 0]
        chains = [
            (a, b, c)
            for c in divs
            for b in divs
            for a in divs
            if c % b == 0 and b % a == 0
        ]
        for a, b, c in chains:
            for _ in range(10):
                # sample x inside GF(2^c)
                x = ctx.norm_rel(r.getrandbits(m), c, m) if c < m else r.getrandbits(m)
                assert ctx.trace_rel(ctx.trace_rel(x, b, c), a, b) == ctx.trace_rel(x, a, c)


def test_trace_rel_errors(gf256):
    with pytest.raises(BadTowerDegrees):
        gf256.trace_rel(1, 3, 8)  # 3 does not divide 8
    with pytest.raises(NotInSubfield):
        gf256.trace_rel(gf256.alpha, 1, 4)  # alpha not in GF(16)


def test_norm_rel_basics(gf256):
    assert gf256.norm_rel(0, 4, 8) == 0
    assert gf256.norm_rel(1, 4, 8) == 1
    r = rng(9)
    for _ in range(100):
        x = r.getrandbits(8)
        nm = gf256.norm_rel(x, 4, 8)
        assert gf256.frobenius(nm, 4) == nm  # lands in GF(16)


def test_norm_rel_surjective_onto_subfield(gf256):
    f16, _ = gf256.subfield(4)
    image = {gf256.norm_rel(x, 4, 8) for x in range(1, 256)}
    assert image == {x for x in f16 if x}


# -- cube roots and Artin-Schreier ---------------------------------------------


def test_cube_root_odd_m_roundtrip():
    ctx = default_field(5)
    r = rng(21)
    for _ in range(100):
        x = r.getrandbits(5)
        roots = ctx.cube_roots(ctx.pow(x, 3) if x else 0)
        assert roots == {x}


def test_cube_roots_of_unity_even_m(gf256):
    roots = gf256.cube_roots(1)
    f4, c = gf256.subfield(2)
    assert roots == {1, c, gf256.mul(c, c)}
    assert all(gf256.pow(x, 3) == 1 for x in roots)


def test_cube_root_census_gf16(gf16):
    # oracle: enumerate all cubes over GF(16) directly
    cubes = {gf16.pow(x, 3) for x in range(16) if x}
    assert len(cubes) == (16 - 1) // 3
    for z in range(1, 16):
        roots = gf16.cube_roots(z)
        assert all(gf16.pow(x, 3) == z for x in roots)
        if z in cubes:
            assert len(roots) == 3
        else:
            assert roots == set()


def test_artin_schreier_solutions(gf256):
    assert gf256.artin_schreier_solve(0) == {0, 1}
    r = rng(13)
    for _ in range(100):
        w = r.getrandbits(8)
        sols = gf256.artin_schreier_solve(w)
        if gf256.trace(w):
            assert sols == set()
        else:
            assert len(sols) == 2
            for x in sols:
                assert gf256.mul(x, x) ^ x == w


def test_artin_schreier_conjugate_product_solvable():
    # x^2 + x = a^2 b + a b^2 with a generating GF(4), b generating GF(8)
    ctx = default_field(6)
    _, a = ctx.subfield(2)
    _, b = ctx.subfield(3)
    w = ctx.mul(ctx.mul(a, a), b) ^ ctx.mul(a, ctx.mul(b, b))
    sols = ctx.artin_schreier_solve(w)
    assert sols
    for x in sols:
        assert ctx.mul(x, x) ^ x == w


# -- subfields and logs ----------------------------------------------------------


def test_subfield_prime_field(gf256):
    elems, gen = gf256.subfield(1)
    assert elems == [0, 1]
    assert gen == 1


def test_subfield_gf4_in_gf16(gf16):
    elems, gen = gf16.subfield(2)
    assert len(elems) == 4
    for x in elems:
        if x:
            assert gf16.pow(x, 3) == 1
    assert gen in elems and not gf16.in_subfield(gen, 1)


def test_subfield_bad_degree(gf256):
    with pytest.raises(BadTowerDegrees):
        gf256.subfield(3)


def test_subfield_generator_generates():
    ctx = default_field(12)
    for ell in (2, 3, 4, 6):
        elems, gen = ctx.subfield(ell)
        assert len(elems) == 1 << ell
        # gen lies in no proper subfield of GF(2^ell)
        for d in range(1, ell):
            if ell % d == 0:
                assert not ctx.in_subfield(gen, d)


def test_discrete_log_basics(gf256):
    assert gf256.log(1) == 0
    assert gf256.log(gf256.alpha) == 1
    assert gf256.log(gf256.exp(30)) == 30
    with pytest.raises(ZeroHasNoLog):
        gf256.log(0)


@pytest.mark.parametrize("m", [4, 8, 10, 12])
def test_log_exp_roundtrip_exhaustive(m):
    ctx = default_field(m)
    for x in range(1, 1 << m):
        assert ctx.exp(ctx.log(x)) == x


def test_log_unsupported_for_large_m():
    ctx = GF2m(25)
    with pytest.raises(Unsupported):
        ctx.log(3)
