"""Double circulant codes of length 2n, the cyclic codes generated by
single vectors, and the simultaneous-shift group action on codewords.

A code here is the [2n, n] code with parity check [I | A], A the circulant
whose (i, j) entry is a_((i - j) mod n).  A word x = (x_L, x_R) belongs to
the code exactly when x_L(Z) = x_R(Z) a(Z) in F2[Z]/(Z^n + 1).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .gf2poly import (Poly, degree, divmod_raw, gcd_raw, mod_raw,
                      poly_mul_mod, ring_modulus)


@dataclass(frozen=True)
class BitVec:
    """Fixed-length GF(2) vector; bit i of `bits` is coordinate i."""

    bits: int
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("length must be >= 1")
        if not 0 <= self.bits < (1 << self.n):
            raise ValueError("bits out of range for length")

    def weight(self) -> int:
        return self.bits.bit_count()

    def __xor__(self, other: "BitVec") -> "BitVec":
        if self.n != other.n:
            raise ValueError("length mismatch")
        return BitVec(self.bits ^ other.bits, self.n)

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise IndexError(i)
        return (self.bits >> i) & 1

    def halves(self) -> tuple["BitVec", "BitVec"]:
        if self.n % 2:
            raise ValueError("halves of an odd-length vector")
        h = self.n // 2
        return BitVec(self.bits & ((1 << h) - 1), h), BitVec(self.bits >> h, h)


def bitvec_to_str(v: BitVec) -> str:
    return f"{v.n}:{hex(v.bits)}"


def bitvec_from_str(s: str) -> BitVec:
    try:
        n, bits = s.strip().split(":")
        return BitVec(int(bits, 16), int(n))
    except (ValueError, IndexError) as e:
        raise ValueError(f"bad vector serialization: {s!r}") from e


def _rotl(bits: int, j: int, n: int) -> int:
    j %= n
    if j == 0:
        return bits
    mask = (1 << n) - 1
    return ((bits << j) | (bits >> (n - j))) & mask


@dataclass(frozen=True)
class DoubleCirculantCode:
    """The [2n, n] code defined by the circulant column a."""

    n: int
    a: BitVec

    def __post_init__(self):
        if self.a.n != self.n:
            raise ValueError("circulant vector length must equal n")

    def serialize(self) -> str:
        return f"n={self.n};a={hex(self.a.bits)}"

    @staticmethod
    def deserialize(s: str) -> "DoubleCirculantCode":
        try:
            left, right = s.strip().split(";")
            n = int(left.split("=")[1])
            a = int(right.split("=")[1], 16)
        except (ValueError, IndexError) as e:
            raise ValueError(f"bad code serialization: {s!r}") from e
        return DoubleCirculantCode(n, BitVec(a, n))

    def parity_rows(self) -> list[int]:
        """Rows of [I | A] packed as 2n-bit ints (left block low bits).

        Row i has right-block bit j exactly when a_((i - j) mod n) = 1, so
        the block is the i-rotation of the index-reversed column."""
        n = self.n
        rev = 0
        for k in range(n):
            if (self.a.bits >> k) & 1:
                rev |= 1 << ((n - k) % n)
        return [(1 << i) | (_rotl(rev, i, n) << n) for i in range(n)]

    def generator_rows(self) -> list[int]:
        """Rows (Z^i a | e_i); the codewords with single-bit right half."""
        rows = []
        for i in range(self.n):
            rows.append(_rotl(self.a.bits, i, self.n) | (1 << (self.n + i)))
        return rows


def dc_sample(n: int, seed: int) -> DoubleCirculantCode:
    """Uniform circulant column from a deterministic generator."""
    if n < 1:
        raise ValueError("n must be >= 1")
    bits = random.Random(seed).getrandbits(n)
    return DoubleCirculantCode(n, BitVec(bits, n))


def dc_contains(code: DoubleCirculantCode, x: BitVec) -> bool:
    """Membership via the residue identity x_L = x_R * a."""
    if x.n != 2 * code.n:
        raise ValueError("word length must be 2n")
    left, right = x.halves()
    prod = poly_mul_mod(Poly(right.bits, code.n), Poly(code.a.bits, code.n))
    return prod.bits == left.bits


def shift_action(j: int, x: BitVec) -> BitVec:
    """Rotate both halves of x by j positions (coordinate i gains i+j)."""
    if x.n % 2:
        raise ValueError("shift action needs even length")
    n = x.n // 2
    left, right = x.halves()
    return BitVec(_rotl(left.bits, j, n) | (_rotl(right.bits, j, n) << n), x.n)


def orbit_length(x: BitVec) -> int:
    """Smallest divisor d of n with d.x = x under the half-pair rotation."""
    n = x.n // 2
    for d in range(1, n + 1):
        if n % d == 0 and shift_action(d, x) == x:
            return d
    raise AssertionError("orbit of x did not close")


def canonical_rep(x: BitVec) -> BitVec:
    """Least packed value over the rotation orbit of x; constant on orbits."""
    best = x.bits
    n = x.n // 2
    cur = x
    for _ in range(n - 1):
        cur = shift_action(1, cur)
        if cur.bits < best:
            best = cur.bits
    return BitVec(best, x.n)


@dataclass(frozen=True)
class CyclicCode:
    """Cyclic code of length n with generator g dividing Z^n + 1.

    The zero code is g = Z^n + 1; the full space is g = 1."""

    n: int
    g: int

    def __post_init__(self):
        if self.g <= 0:
            raise ValueError("generator must be a nonzero polynomial")
        if mod_raw(ring_modulus(self.n), self.g) != 0:
            raise ValueError("generator must divide Z^n + 1")

    @property
    def dim(self) -> int:
        return self.n - degree(self.g)

    def size(self) -> int:
        return 1 << self.dim

    def basis(self) -> list[int]:
        """Shifted generators g, Zg, ..., Z^(dim-1) g as raw polys (< n deg)."""
        return [self.g << i for i in range(self.dim)]

    def dual(self) -> "CyclicCode":
        """Generator of the dual: reciprocal of (Z^n + 1) / g."""
        h = divmod_raw(ring_modulus(self.n), self.g)[0]
        d = degree(h)
        rev = 0
        for i in range(d + 1):
            if (h >> i) & 1:
                rev |= 1 << (d - i)
        return CyclicCode(self.n, rev)

    def serialize(self) -> str:
        return f"n={self.n};g={hex(self.g)}"


def cyclic_from_vector(u: BitVec) -> CyclicCode:
    """Smallest cyclic code containing u: generator gcd(u(Z), Z^n + 1)."""
    if u.bits == 0:
        return CyclicCode(u.n, ring_modulus(u.n))
    return CyclicCode(u.n, gcd_raw(u.bits, ring_modulus(u.n)))


def cyclic_contains(code: CyclicCode, v: BitVec) -> bool:
    if v.n != code.n:
        raise ValueError("length mismatch")
    return mod_raw(v.bits, code.g) == 0


def membership_probability(x: BitVec) -> Fraction:
    """Over a uniform circulant column, the probability that x is a codeword:
    1/|C(x_R)| when x_L lies in the cyclic code spanned by x_R, else 0."""
    left, right = x.halves()
    c = cyclic_from_vector(right)
    if not cyclic_contains(c, left):
        return Fraction(0)
    return Fraction(1, c.size())


def divisor_codes(n: int) -> list[CyclicCode]:
    """All cyclic codes of odd length n, one per divisor of Z^n + 1,
    ordered by ascending codimension then generator value."""
    from .gf2poly import factorize, mul_raw

    fac = factorize(n)
    out = []
    for mask in range(1 << len(fac.factors)):
        g = 1
        for i, f in enumerate(fac.factors):
            if (mask >> i) & 1:
                g = mul_raw(g, f)
        out.append(CyclicCode(n, g))
    out.sort(key=lambda c: (c.n - c.dim, c.g))
    return out


def nonrepetition_codes(n: int) -> list[CyclicCode]:
    """Cyclic codes of length n = p^m whose generator is not a multiple of
    the p-block marker polynomial; the recursion class of the level bound."""
    from .gf2poly import mod_raw as _mod, repetition_poly

    p = _smallest_prime_factor(n)
    m = 0
    t = n
    while t % p == 0:
        t //= p
        m += 1
    if t != 1:
        raise ValueError("n must be a prime power")
    marker = repetition_poly(n, p).bits
    keep = []
    for code in divisor_codes(n):
        if _mod(code.g, marker) != 0:
            keep.append(code)
    return keep


def _smallest_prime_factor(n: int) -> int:
    if n < 2:
        raise ValueError("n must be >= 2")
    d = 2
    while d * d <= n:
        if n % d == 0:
            return d
        d += 1
    return n


def orbit_table(n: int, wmax: int | None = None) -> list[tuple[str, int, int]]:
    """(representative, orbit length, weight) rows over canonical orbit
    representatives of all nonzero words of length 2n, optionally truncated
    to weight <= wmax.  Exhaustive in 2^(2n); keep n small."""
    if n > 10:
        from .gf2poly import BudgetExceededError

        raise BudgetExceededError("orbit_table enumerates 4^n words; n <= 10")
    rows = []
    seen = set()
    for bits in range(1, 1 << (2 * n)):
        x = BitVec(bits, 2 * n)
        if wmax is not None and x.weight() > wmax:
            continue
        rep = canonical_rep(x)
        if rep.bits in seen:
            continue
        seen.add(rep.bits)
        rows.append((bitvec_to_str(rep), orbit_length(rep), rep.weight()))
    return rows


def orbit_table_csv(n: int, wmax: int | None = None) -> str:
    """The orbit table as CSV text."""
    lines = ["representative,orbit_length,weight"]
    lines.extend(f"{r},{length},{w}" for r, length, w in orbit_table(n, wmax))
    return "\n".join(lines) + "\n"
