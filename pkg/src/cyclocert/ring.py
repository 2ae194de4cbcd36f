"""Exact arithmetic in the quotient ring Z[x]/(N, x**p - d).

N may be composite: every operation stays correct over Z/NZ, and the norm is
computed as an integer resultant so that unit/zero-divisor classification
works even when modular elimination would hit non-invertible pivots.
Elements are coefficient vectors of length exactly p, fully reduced into
[0, N) after every operation.  Everything here is a pure function of
immutable inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd
from typing import Iterable

PRIME_DEGREES = (3, 5, 7, 11, 13)


@dataclass(frozen=True)
class RingContext:
    """Ring description: modulus N, prime degree p, reduction base d.

    ``phi_p_n`` caches the cyclotomic value N^(p-1) + ... + N + 1 and
    ``disc_ok`` records gcd(N, p*d) = 1, the condition for the ring to have
    usable discriminant data.
    """

    N: int
    p: int
    d: int
    phi_p_n: int
    disc_ok: bool


@dataclass(frozen=True)
class RingElement:
    """Residue as exactly p coefficients in [0, N), constant term first."""

    coeffs: tuple[int, ...]


def cyclotomic_value(n: int, p: int) -> int:
    """Value of the p-th cyclotomic polynomial at n: n^(p-1) + ... + n + 1."""
    return sum(n**i for i in range(p))


def _build_context(N: int, p: int, d: int) -> RingContext:
    if p not in PRIME_DEGREES:
        raise ValueError(f"degree must be one of {PRIME_DEGREES}")
    if d <= 0:
        raise ValueError("base d must be positive")
    d_red = d % N
    if d_red == 0:
        raise ValueError("degenerate base: d ≡ 0 (mod N)")
    return RingContext(
        N=N,
        p=p,
        d=d_red,
        phi_p_n=cyclotomic_value(N, p),
        disc_ok=gcd(N, p * d_red) == 1,
    )


def make_context(N: int, p: int, d: int) -> RingContext:
    """Context for the ring Z[x]/(N, x**p - d) with d reduced mod N."""
    if N <= 3 or N % 2 == 0:
        raise ValueError("modulus must be odd and greater than 3")
    ctx = _build_context(N, p, d)
    if ctx.d == 1:
        # x**p - 1 splits off x - 1; keep the base strictly inside (1, N)
        raise ValueError("degenerate base: d ≡ 1 (mod N)")
    return ctx


def unchecked_context(N: int, p: int, d: int) -> RingContext:
    """Context without the oddness gate; composite sweeps visit even N too."""
    if N < 2:
        raise ValueError("modulus must be at least 2")
    return _build_context(N, p, d)


def element(ctx: RingContext, coeffs: Iterable[int]) -> RingElement:
    """Reduce a coefficient sequence of length at most p into the ring."""
    cs = [c % ctx.N for c in coeffs]
    if len(cs) > ctx.p:
        raise ValueError(f"at most {ctx.p} coefficients allowed")
    cs.extend([0] * (ctx.p - len(cs)))
    return RingElement(tuple(cs))


def zero(ctx: RingContext) -> RingElement:
    return RingElement((0,) * ctx.p)


def one(ctx: RingContext) -> RingElement:
    return RingElement((1 % ctx.N,) + (0,) * (ctx.p - 1))


def theta(ctx: RingContext) -> RingElement:
    return element(ctx, (0, 1))


def scalar(ctx: RingContext, c: int) -> RingElement:
    return element(ctx, (c,))


def is_zero(a: RingElement) -> bool:
    return all(c == 0 for c in a.coeffs)


def ring_add(ctx: RingContext, a: RingElement, b: RingElement) -> RingElement:
    N = ctx.N
    return RingElement(tuple((x + y) % N for x, y in zip(a.coeffs, b.coeffs)))


def ring_sub(ctx: RingContext, a: RingElement, b: RingElement) -> RingElement:
    N = ctx.N
    return RingElement(tuple((x - y) % N for x, y in zip(a.coeffs, b.coeffs)))


def ring_mul(ctx: RingContext, a: RingElement, b: RingElement) -> RingElement:
    """Product reduced by x**p = d and then mod N.

    Schoolbook convolution of length 2p-1, folding the coefficient of
    x^(p+i) into x^i with multiplier d.
    """
    p, N, d = ctx.p, ctx.N, ctx.d
    conv = [0] * (2 * p - 1)
    for i, ai in enumerate(a.coeffs):
        if ai:
            for j, bj in enumerate(b.coeffs):
                conv[i + j] += ai * bj
    for i in range(2 * p - 2, p - 1, -1):
        conv[i - p] += d * conv[i]
    return RingElement(tuple(c % N for c in conv[:p]))


def ring_pow(ctx: RingContext, a: RingElement, e: int) -> RingElement:
    """a**e by square and multiply; a**0 is the multiplicative identity."""
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    result = one(ctx)
    base = a
    while e:
        if e & 1:
            result = ring_mul(ctx, result, base)
        e >>= 1
        if e:
            base = ring_mul(ctx, base, base)
    return result


def _bareiss_det(m: list[list[int]]) -> int:
    """Exact integer determinant by fraction-free elimination."""
    n = len(m)
    m = [row[:] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i = m[i]
            row_k = m[k]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - lead * row_k[j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def sylvester_norm(ctx: RingContext, a: RingElement) -> int:
    """Resultant of x**p - d with the lifted element, reduced mod N.

    Builds the (2p-1) x (2p-1) Sylvester matrix with all entries lifted to
    [0, N), takes its exact integer determinant, and reduces.  Since
    x**p - d is monic, padding the element to formal degree p-1 leaves the
    resultant unchanged, and the determinant equals the product of the
    element evaluated at the p roots, i.e. the ring norm.
    """
    p, N, d = ctx.p, ctx.N, ctx.d
    size = 2 * p - 1
    f_desc = [1] + [0] * (p - 1) + [(-d) % N]  # x^p - d, descending
    a_desc = list(reversed(a.coeffs))
    rows = []
    for i in range(p - 1):
        rows.append([0] * i + f_desc + [0] * (size - i - p - 1))
    for j in range(p):
        rows.append([0] * j + a_desc + [0] * (size - j - p))
    return _bareiss_det(rows) % N


def ring_norm(ctx: RingContext, a: RingElement) -> int:
    """Norm of an element as a residue in [0, N); multiplicative.

    Cubic contexts use the closed form A³ + d·B³ + d²·C³ - 3d·A·B·C for the
    element A + Bθ + Cθ²; higher degrees go through the Sylvester resultant.
    """
    if ctx.p == 3:
        A, B, C = a.coeffs
        d = ctx.d
        return (A**3 + d * B**3 + d * d * C**3 - 3 * d * A * B * C) % ctx.N
    return sylvester_norm(ctx, a)


class UnitKind(Enum):
    UNIT = "UNIT"
    ZERO = "ZERO"
    ZERO_DIVISOR = "ZERO_DIVISOR"


@dataclass(frozen=True)
class UnitClassification:
    """Outcome of gcd(norm, N): a ZERO_DIVISOR carries the factor it found."""

    kind: UnitKind
    factor: int | None = None


def classify_unit(ctx: RingContext, a: RingElement) -> UnitClassification:
    """Classify an element via g = gcd(norm(a), N).

    UNIT when g = 1; ZERO for the zero element or g = N; otherwise a
    ZERO_DIVISOR whose factor g properly divides N.  Finding a zero divisor
    is a success case: it factors N.
    """
    if is_zero(a):
        return UnitClassification(UnitKind.ZERO)
    g = gcd(ring_norm(ctx, a), ctx.N)
    if g == 1:
        return UnitClassification(UnitKind.UNIT)
    if g == ctx.N:
        return UnitClassification(UnitKind.ZERO)
    return UnitClassification(UnitKind.ZERO_DIVISOR, factor=g)
