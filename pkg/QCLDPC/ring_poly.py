"""
Polynomials over GF(2) and the quotient ring F2[X]/(X^r - 1).

An r x r binary circulant matrix is identified with the polynomial whose
coefficients are its first row. Polynomials are stored as Python integers:
bit e is the coefficient of X^e, so addition is XOR and shifting is
multiplication by a power of X.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, List

from QCLDPC.errors import DimensionError


def _mul(a: int, b: int) -> int:
    if a < b:
        a, b = b, a
    c = 0
    while b:
        if b & 1:
            c ^= a
        a <<= 1
        b >>= 1
    return c


def _divmod(a: int, b: int):
    if b == 0:
        raise ZeroDivisionError("division by zero polynomial")
    n = b.bit_length()
    q = 0
    while a.bit_length() >= n:
        shift = a.bit_length() - n
        q ^= 1 << shift
        a ^= b << shift
    return q, a


def _reduce(value: int, r: int) -> int:
    """Reduce modulo X^r - 1 by folding the high part onto the low part."""
    mask = (1 << r) - 1
    while value >> r:
        value = (value & mask) ^ (value >> r)
    return value


def _exponents(bits: int) -> Iterator[int]:
    e = 0
    while bits:
        if bits & 1:
            yield e
        bits >>= 1
        e += 1


@dataclass(frozen=True)
class PlainPoly:
    """Polynomial over GF(2) of unbounded degree (outside any quotient ring)."""

    coeffs: int = 0

    @classmethod
    def from_exponents(cls, exps: Iterable[int]) -> "PlainPoly":
        bits = 0
        for e in exps:
            if e < 0:
                raise ValueError(f"negative exponent {e} in a plain polynomial")
            bits ^= 1 << e
        return cls(bits)

    @classmethod
    def x_power_minus_one(cls, r: int) -> "PlainPoly":
        return cls((1 << r) | 1)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return self.coeffs.bit_length() - 1

    def is_zero(self) -> bool:
        return self.coeffs == 0

    def exponents(self) -> List[int]:
        return list(_exponents(self.coeffs))

    def divmod(self, other: "PlainPoly"):
        q, rem = _divmod(self.coeffs, other.coeffs)
        return PlainPoly(q), PlainPoly(rem)

    def __add__(self, other: "PlainPoly") -> "PlainPoly":
        return PlainPoly(self.coeffs ^ other.coeffs)

    def __mul__(self, other: "PlainPoly") -> "PlainPoly":
        return PlainPoly(_mul(self.coeffs, other.coeffs))

    def __str__(self) -> str:
        return _format_terms(self.exponents())


@dataclass(frozen=True)
class RingPoly:
    """Element of F2[X]/(X^r - 1); the first row of an r x r circulant."""

    r: int
    coeffs: int = 0

    def __post_init__(self):
        if self.r < 1:
            raise ValueError(f"ring size r must be >= 1, got {self.r}")
        if self.coeffs < 0 or self.coeffs >> self.r:
            raise ValueError(f"coefficients exceed ring size r={self.r}")

    @classmethod
    def zero(cls, r: int) -> "RingPoly":
        return cls(r, 0)

    @classmethod
    def one(cls, r: int) -> "RingPoly":
        return cls(r, 1)

    @classmethod
    def monomial(cls, r: int, e: int) -> "RingPoly":
        return cls(r, 1 << (e % r))

    def is_zero(self) -> bool:
        return self.coeffs == 0

    @property
    def weight(self) -> int:
        return bin(self.coeffs).count("1")

    def exponents(self) -> List[int]:
        return list(_exponents(self.coeffs))

    def lift(self) -> PlainPoly:
        """The same coefficients read as a polynomial of degree < r."""
        return PlainPoly(self.coeffs)

    def __add__(self, other: "RingPoly") -> "RingPoly":
        return poly_add(self, other)

    def __mul__(self, other: "RingPoly") -> "RingPoly":
        return poly_mul(self, other)

    def __str__(self) -> str:
        return _format_terms(self.exponents())


def _format_terms(exps: List[int]) -> str:
    if not exps:
        return "0"
    terms = []
    for e in exps:
        terms.append("1" if e == 0 else "X" if e == 1 else f"X^{e}")
    return " + ".join(terms)


def poly_from_exponents(r: int, exps: Iterable[int]) -> RingPoly:
    """Sum of X^e over exps, exponents reduced mod r; repeats cancel in pairs."""
    if r < 1:
        raise ValueError(f"ring size r must be >= 1, got {r}")
    bits = 0
    for e in exps:
        bits ^= 1 << (e % r)
    return RingPoly(r, bits)


def _check_same_ring(a: RingPoly, b: RingPoly):
    if a.r != b.r:
        raise DimensionError(f"ring sizes differ: {a.r} vs {b.r}")


def poly_add(a: RingPoly, b: RingPoly) -> RingPoly:
    """Coefficient-wise XOR; both operands must live in the same ring."""
    _check_same_ring(a, b)
    return RingPoly(a.r, a.coeffs ^ b.coeffs)


def poly_mul(a: RingPoly, b: RingPoly) -> RingPoly:
    """
    Product in F2[X]/(X^r - 1).

    Args:
        a: Left factor
        b: Right factor, same r as a

    Returns:
        The carry-less product with exponents folded mod r

    Raises:
        DimensionError: If the ring sizes differ
    """
    _check_same_ring(a, b)
    return RingPoly(a.r, _reduce(_mul(a.coeffs, b.coeffs), a.r))


def poly_transpose(p: RingPoly) -> RingPoly:
    """X^k -> X^(r-k); the polynomial of the transposed circulant."""
    bits = 0
    for e in _exponents(p.coeffs):
        bits |= 1 << ((p.r - e) % p.r)
    return RingPoly(p.r, bits)


def poly_gcd(a: PlainPoly, b: PlainPoly) -> PlainPoly:
    """Monic gcd over GF(2) by Euclid's algorithm."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd of two zero polynomials is undefined")
    x, y = a.coeffs, b.coeffs
    while y:
        x, y = y, _divmod(x, y)[1]
    return PlainPoly(x)


def gcd_with_modulus(p: RingPoly) -> PlainPoly:
    """K(X) = gcd(p(X), X^r - 1), with p lifted to F2[X]."""
    return poly_gcd(p.lift(), PlainPoly.x_power_minus_one(p.r))


def circulant_rank(p: RingPoly) -> int:
    """
    Rank over GF(2) of the r x r circulant whose first row is p.

    Args:
        p: First row of the circulant

    Returns:
        r - deg gcd(p, X^r - 1), or 0 when p is zero
    """
    if p.is_zero():
        return 0
    return p.r - gcd_with_modulus(p).degree
