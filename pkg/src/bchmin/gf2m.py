"""Arithmetic in GF(2^m): field construction, Frobenius, traces, norms,
cube roots, Artin-Schreier solving, subfield enumeration, discrete logs.

Field elements are plain Python ints: bit k is the coefficient of alpha^k
in the polynomial basis {1, alpha, ..., alpha^(m-1)}, where alpha is the
residue class of X modulo the primitive polynomial.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from . import gflinalg


class UnsupportedDegree(ValueError):
    """Extension degree outside the supported range 2..32."""


class ReduciblePolynomial(ValueError):
    """The supplied modulus is reducible over GF(2)."""


class NonPrimitiveAlpha(ValueError):
    """X is not a generator of the multiplicative group modulo the modulus."""


class NotInSubfield(ValueError):
    """Element does not lie in the requested subfield."""


class BadTowerDegrees(ValueError):
    """Requested subfield degrees do not form a divisor tower."""


class ZeroHasNoLog(ValueError):
    """Discrete log of the zero element requested."""


class Unsupported(RuntimeError):
    """Log tables are only built for m <= 24."""


# Built-in primitive polynomials, degree -> modulus (bit k = coeff of X^k).
_DEFAULT_POLYS = {
    2: 0x7,
    3: 0xB,
    4: 0x13,
    5: 0x25,
    6: 0x43,
    7: 0x89,
    8: 0x11D,
    9: 0x211,
    10: 0x409,
    11: 0x805,
    12: 0x1053,
    13: 0x201B,
    14: 0x4443,
    15: 0x8003,
    16: 0x1100B,
    17: 0x20009,
    18: 0x40081,
    19: 0x80027,
    20: 0x100009,
    21: 0x200005,
    22: 0x400003,
    23: 0x800021,
    24: 0x100001B,
    25: 0x2000009,
    26: 0x4000047,
    27: 0x8000027,
    28: 0x10000009,
    29: 0x20000005,
    30: 0x40000053,
    31: 0x80000009,
    32: 0x1000000AF,
}

_LOG_TABLE_MAX_M = 24
_EAGER_TABLE_MAX_M = 16


def parse_poly(spec: int | str) -> int:
    """Parse a modulus given as an int, a hex string ("0x11D"), or a
    comma-separated exponent list ("8,4,3,2,0")."""
    if isinstance(spec, int):
        return spec
    s = spec.strip()
    if s.lower().startswith("0x"):
        return int(s, 16)
    if "," in s:
        poly = 0
        for part in s.split(","):
            poly |= 1 << int(part.strip())
        return poly
    return int(s, 0)


def _clmul(a: int, b: int) -> int:
    """Carry-less product of two GF(2) polynomials packed into ints."""
    acc = 0
    while b:
        if b & 1:
            acc ^= a
        a <<= 1
        b >>= 1
    return acc


def _polymod(a: int, b: int) -> int:
    db = b.bit_length()
    while a.bit_length() >= db:
        a ^= b << (a.bit_length() - db)
    return a


def _polygcd(a: int, b: int) -> int:
    while b:
        a, b = b, _polymod(a, b)
    return a


def _factorize(x: int) -> list[int]:
    """Distinct prime factors by trial division; for 2^m - 1 with m <= 32
    any cofactor surviving division up to 2^16 + 1 is prime."""
    primes = []
    d = 2
    while d * d <= x:
        if x % d == 0:
            primes.append(d)
            while x % d == 0:
                x //= d
        d += 1
    if x > 1:
        primes.append(x)
    return primes


def _is_irreducible(poly: int, m: int) -> bool:
    """Ben-Or style test: X^(2^m) = X mod poly, and X^(2^(m/p)) - X is
    coprime to poly for every prime p | m."""
    checkpoints = {m // p for p in _factorize(m)}
    cur = 2  # the class of X
    for k in range(1, m + 1):
        cur = _polymod(_clmul(cur, cur), poly)
        if k < m and k in checkpoints and _polygcd(cur ^ 2, poly) != 1:
            return False
    return cur == 2


class GF2m:
    """A concrete representation of GF(2^m) with a designated primitive
    element alpha (the class of X).

    Parameters
    ----------
    m : int
        Extension degree, 2 <= m <= 32.
    poly : int or str or None
        Primitive polynomial of degree m (see `parse_poly` for accepted
        forms).  Defaults to a built-in primitive polynomial for this m.

    Raises
    ------
    UnsupportedDegree, ReduciblePolynomial, NonPrimitiveAlpha
    """

    def __init__(self, m: int, poly: int | str | None = None):
        if not 2 <= m <= 32:
            raise UnsupportedDegree(f"m must be in 2..32, got {m}")
        if poly is None:
            poly = _DEFAULT_POLYS[m]
        else:
            poly = parse_poly(poly)
        if poly.bit_length() != m + 1:
            raise ValueError(
                f"modulus {hex(poly)} does not have degree {m}"
            )
        if not _is_irreducible(poly, m):
            raise ReduciblePolynomial(f"{hex(poly)} is reducible over GF(2)")

        self.m = m
        self.poly = poly
        self.n = (1 << m) - 1
        self.alpha = 2
        self._mask = self.n
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self._exp_np = None
        self._log_np = None

        for p in _factorize(self.n):
            if self._pow_nontable(2, self.n // p) == 1:
                raise NonPrimitiveAlpha(
                    f"X has order < 2^{m}-1 modulo {hex(poly)}"
                )

        # bit k set iff Tr(alpha^k) = 1; makes trace a masked parity
        tmask = 0
        for k in range(m):
            if self._trace_direct(1 << k):
                tmask |= 1 << k
        self._trace_mask = tmask

        if m <= _EAGER_TABLE_MAX_M:
            self._build_tables()

    def __repr__(self) -> str:
        return f"GF2m(m={self.m}, poly={hex(self.poly)})"

    # -- core arithmetic ----------------------------------------------------

    def add(self, a: int, b: int) -> int:
        """Field addition (bitwise XOR)."""
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        """Field multiplication modulo the primitive polynomial."""
        if self._log is not None:
            if a == 0 or b == 0:
                return 0
            e = self._log[a] + self._log[b]
            if e >= self.n:
                e -= self.n
            return self._exp[e]
        return self._reduce(_clmul(a, b))

    def square(self, a: int) -> int:
        return self.mul(a, a)

    def inv(self, a: int) -> int:
        """Multiplicative inverse; raises ZeroDivisionError for 0."""
        if a == 0:
            raise ZeroDivisionError("0 has no inverse in GF(2^m)")
        if self._log is not None:
            e = self._log[a]
            return self._exp[(self.n - e) % self.n]
        return self._pow_nontable(a, self.n - 1)

    def pow(self, a: int, e: int) -> int:
        """a^e with the exponent reduced mod 2^m - 1 for nonzero a."""
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("0 cannot be raised to a negative power")
            return 0
        e %= self.n
        if self._log is not None:
            return self._exp[(self._log[a] * e) % self.n]
        return self._pow_nontable(a, e)

    def _reduce(self, x: int) -> int:
        poly, m = self.poly, self.m
        for k in range(x.bit_length() - 1, m - 1, -1):
            if (x >> k) & 1:
                x ^= poly << (k - m)
        return x

    def _pow_nontable(self, a: int, e: int) -> int:
        r = 1
        base = a
        while e:
            if e & 1:
                r = self._reduce(_clmul(r, base))
            base = self._reduce(_clmul(base, base))
            e >>= 1
        return r

    # -- Frobenius, trace, norm ---------------------------------------------

    def frobenius(self, x: int, k: int = 1) -> int:
        """x^(2^(k mod m)); negative k inverts squaring."""
        k %= self.m
        for _ in range(k):
            x = self.mul(x, x)
        return x

    def _trace_direct(self, x: int) -> int:
        t = 0
        cur = x
        for _ in range(self.m):
            t ^= cur
            cur = self._reduce(_clmul(cur, cur))
        return t

    def trace(self, x: int) -> int:
        """Absolute trace GF(2^m) -> GF(2), as an int in {0, 1}."""
        return (x & self._trace_mask).bit_count() & 1

    def in_subfield(self, x: int, ell: int) -> bool:
        """True iff x lies in the subfield of 2^ell elements (ell | m)."""
        return self.frobenius(x, ell) == x

    def trace_rel(self, x: int, a: int, b: int) -> int:
        """Relative trace from the 2^b-element subfield onto the 2^a one."""
        self._check_tower(a, b)
        if not self.in_subfield(x, b):
            raise NotInSubfield(f"element {x} is not in GF(2^{b})")
        acc = 0
        cur = x
        for _ in range(b // a):
            acc ^= cur
            cur = self.frobenius(cur, a)
        return acc

    def norm_rel(self, x: int, a: int, b: int) -> int:
        """Relative norm from the 2^b-element subfield onto the 2^a one."""
        self._check_tower(a, b)
        if not self.in_subfield(x, b):
            raise NotInSubfield(f"element {x} is not in GF(2^{b})")
        if x == 0:
            return 0
        return self.pow(x, ((1 << b) - 1) // ((1 << a) - 1))

    def _check_tower(self, a: int, b: int) -> None:
        if a < 1 or b % a != 0 or self.m % b != 0:
            raise BadTowerDegrees(f"need a | b | m, got a={a}, b={b}, m={self.m}")

    # -- root finding --------------------------------------------------------

    def cube_roots(self, z: int) -> set[int]:
        """All cube roots of z.  Unique for odd m; for even m the roots are
        the nonzero kernel of the linear map x -> x^4 + z*x (empty set when
        z is a cubic non-residue)."""
        if z == 0:
            return {0}
        if self.m % 2 == 1:
            inv3 = pow(3, -1, self.n)
            return {self.pow(z, inv3)}
        cols = [self.pow(1 << k, 4) ^ self.mul(z, 1 << k) for k in range(self.m)]
        rows = gflinalg.transpose(cols, self.m)
        roots = set()
        for x in gflinalg.span(gflinalg.nullspace(rows, self.m)):
            if x and self.pow(x, 3) == z:
                roots.add(x)
        return roots

    def artin_schreier_solve(self, w: int) -> set[int]:
        """Solution set of x^2 + x = w: empty when Tr(w) = 1, else a coset
        of {0, 1}."""
        if self.trace(w) == 1:
            return set()
        cols = [self.square(1 << k) ^ (1 << k) for k in range(self.m)]
        rows = gflinalg.transpose(cols, self.m)
        x0, _ = gflinalg.solve(rows, self.m, w)
        assert x0 is not None
        return {x0, x0 ^ 1}

    # -- subfields and logs ----------------------------------------------------

    def subfield(self, ell: int) -> tuple[list[int], int]:
        """All 2^ell elements of the subfield GF(2^ell), sorted, plus a
        generator g with GF(2)(g) = GF(2^ell)."""
        if ell < 1 or self.m % ell != 0:
            raise BadTowerDegrees(f"{ell} does not divide m={self.m}")
        cols = [self.frobenius(1 << k, ell) ^ (1 << k) for k in range(self.m)]
        rows = gflinalg.transpose(cols, self.m)
        elems = sorted(gflinalg.span(gflinalg.nullspace(rows, self.m)))
        assert len(elems) == 1 << ell
        proper = [ell // p for p in _factorize(ell)] if ell > 1 else []
        gen = next(
            x for x in elems
            if x and all(self.frobenius(x, d) != x for d in proper)
        )
        return elems, gen

    def _build_tables(self) -> None:
        n, m, poly = self.n, self.m, self.poly
        exp = [0] * n
        log = [0] * (n + 1)
        cur = 1
        for k in range(n):
            exp[k] = cur
            log[cur] = k
            cur <<= 1
            if cur >> m:
                cur ^= poly
        assert cur == 1  # alpha has order n
        self._exp = exp
        self._log = log

    def _ensure_tables(self) -> None:
        if self._log is None:
            if self.m > _LOG_TABLE_MAX_M:
                raise Unsupported(f"log tables are not built for m={self.m} > 24")
            self._build_tables()

    def log(self, x: int) -> int:
        """Discrete log base alpha (table-backed, m <= 24)."""
        if x == 0:
            raise ZeroHasNoLog("discrete log of 0 requested")
        self._ensure_tables()
        return self._log[x]

    def exp(self, e: int) -> int:
        """alpha^e."""
        return self.pow(self.alpha, e)

    def exp_array(self) -> np.ndarray:
        """Antilog table as an int32 numpy array (m <= 24)."""
        self._ensure_tables()
        if self._exp_np is None:
            self._exp_np = np.array(self._exp, dtype=np.int32)
        return self._exp_np

    def log_array(self) -> np.ndarray:
        """Log table as an int32 numpy array; entry 0 is unused."""
        self._ensure_tables()
        if self._log_np is None:
            self._log_np = np.array(self._log, dtype=np.int32)
        return self._log_np


@lru_cache(maxsize=None)
def default_field(m: int, poly: int | None = None) -> GF2m:
    """Shared GF2m instances; fields are immutable so caching is safe."""
    return GF2m(m, poly)


def make_field(m: int, poly: int | str | None = None) -> GF2m:
    """Construct a field context (alias of the GF2m constructor)."""
    return GF2m(m, poly)
