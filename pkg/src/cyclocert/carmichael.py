"""Classification of composites that fool the cubic Fermat analog.

A composite N ≡ 1 (mod 3) with gcd(N, 3d) = 1 is a cubic Carmichael number
when every unit z of the ring satisfies z^(N³-1) = 1.  Under the hypothesis
that x³ - d stays irreducible modulo every prime factor, this is equivalent
to the Korselt-style conditions: N squarefree and (q³-1) | (N³-1) for every
prime q | N.  The direct definition is decidable by exhaustive enumeration
for tiny N; the Korselt route only needs the factorization of N.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import gcd, isqrt

from .numtheory import is_probable_prime, pth_residue
from .ring import RingElement, UnitKind, classify_unit, one, ring_pow, unchecked_context

FACTOR_LIMIT = 10**12
DIRECT_LIMIT = 60
SEARCH_LIMIT = 10**8

_TRIAL_LIMIT = 10**6
_trial_primes: list[int] | None = None


def _get_trial_primes() -> list[int]:
    global _trial_primes
    if _trial_primes is None:
        flags = bytearray(b"\x01") * (_TRIAL_LIMIT + 1)
        flags[0:2] = b"\x00\x00"
        for i in range(2, isqrt(_TRIAL_LIMIT) + 1):
            if flags[i]:
                flags[i * i :: i] = b"\x00" * len(range(i * i, _TRIAL_LIMIT + 1, i))
        _trial_primes = [i for i, f in enumerate(flags) if f]
    return _trial_primes


def _pollard_rho(n: int) -> int:
    """Brent-cycle rho with a deterministic parameter sweep; n composite, odd."""
    if n % 2 == 0:
        return 2
    for c in range(1, 64):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = gcd(abs(x - y), n)
        if d != n:
            return d
    raise ArithmeticError(f"rho failed to split {n}")


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization as (prime, exponent) pairs, ascending.

    Trial division by sieved primes up to 1e6, then deterministic rho on
    whatever composite cofactor remains.
    """
    if n < 2:
        raise ValueError("nothing to factor below 2")
    factors: dict[int, int] = {}
    rest = n
    for p in _get_trial_primes():
        if p * p > rest:
            break
        while rest % p == 0:
            factors[p] = factors.get(p, 0) + 1
            rest //= p
    stack = [rest] if rest > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_probable_prime(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.append(d)
        stack.append(m // d)
    return sorted(factors.items())


@dataclass(frozen=True)
class CarmichaelReport:
    """Per-candidate record of the Korselt-style conditions.

    korselt_ok covers squarefreeness plus the divisibility condition;
    irreducibility_ok records whether x³ - d is irreducible modulo every
    prime factor, the hypothesis under which korselt_ok is equivalent to the
    direct definition.  direct_ok is filled only for tiny N.
    """

    N: int
    squarefree: bool
    factor_list: tuple[int, ...]
    korselt_ok: bool
    irreducibility_ok: bool
    direct_ok: bool | None = None


def _factor_irreducible(q: int, d: int) -> bool:
    # x^3 - d mod q: for q ≡ 2 (mod 3) cubing is a bijection, so a root
    # always exists; for q ≡ 1 (mod 3) irreducible iff d is a non-residue
    if q == 3 or q % 3 == 2:
        return False
    return not pth_residue(d, q, 3)


def _report_from_factors(n: int, d: int, factors: list[tuple[int, int]]) -> CarmichaelReport:
    squarefree = all(e == 1 for _, e in factors)
    n3 = n**3 - 1
    divisibility = all(n3 % (q**3 - 1) == 0 for q, _ in factors)
    irreducible = all(_factor_irreducible(q, d) for q, _ in factors)
    return CarmichaelReport(
        N=n,
        squarefree=squarefree,
        factor_list=tuple(q for q, _ in factors),
        korselt_ok=squarefree and divisibility,
        irreducibility_ok=irreducible,
    )


def korselt_check(n: int, d: int) -> CarmichaelReport:
    """Korselt-style report for a composite n ≡ 1 (mod 3), gcd(n, 3d) = 1."""
    if n > FACTOR_LIMIT:
        raise ValueError(f"factoring backend capped at {FACTOR_LIMIT}")
    if n % 3 != 1:
        raise ValueError("require n ≡ 1 (mod 3)")
    if gcd(n, 3 * d) != 1:
        raise ValueError("require gcd(n, 3d) = 1")
    factors = factorize(n)
    if len(factors) == 1 and factors[0][1] == 1:
        raise ValueError("n must be composite")
    return _report_from_factors(n, d, factors)


def carmichael_direct(n: int, d: int) -> bool:
    """Direct definition by exhaustive enumeration: every unit z has
    z^(n³-1) = 1.  Only feasible for n up to DIRECT_LIMIT.

    Scalars are swept first: they fail early for almost every composite,
    which keeps the full n³-element enumeration off the hot path.
    """
    if n > DIRECT_LIMIT:
        raise ValueError(f"exhaustive enumeration capped at {DIRECT_LIMIT}")
    if n < 4 or is_probable_prime(n):
        raise ValueError("n must be composite")
    if gcd(n, 3 * d) != 1:
        raise ValueError("require gcd(n, 3d) = 1")
    ctx = unchecked_context(n, 3, d)
    e = n**3 - 1
    for c in range(2, n):
        if gcd(c, n) == 1 and pow(c, e, n) != 1:
            return False
    for coeffs in product(range(n), repeat=3):
        z = RingElement(coeffs)
        if classify_unit(ctx, z).kind is not UnitKind.UNIT:
            continue
        if ring_pow(ctx, z, e) != one(ctx):
            return False
    return True


def search_carmichael(bound: int, d: int) -> list[CarmichaelReport]:
    """All composite n ≡ 1 (mod 3) up to bound with korselt_ok, ascending.

    Uses a smallest-prime-factor sieve when the bound allows, so repeated
    factorizations stay cheap; larger bounds fall back to per-candidate
    factoring.
    """
    if bound > SEARCH_LIMIT:
        raise ValueError(f"search capped at {SEARCH_LIMIT}")
    spf = None
    if bound <= 10**7:
        import array

        spf = array.array("i", range(bound + 1))
        i = 2
        while i * i <= bound:
            if spf[i] == i:
                for j in range(i * i, bound + 1, i):
                    if spf[j] == j:
                        spf[j] = i
            i += 1
    hits = []
    for n in range(4, bound + 1):
        if n % 3 != 1 or gcd(n, 3 * d) != 1:
            continue
        if spf is not None:
            m = n
            factors: dict[int, int] = {}
            while m > 1:
                p = spf[m]
                factors[p] = factors.get(p, 0) + 1
                m //= p
            factor_items = sorted(factors.items())
        else:
            factor_items = factorize(n)
        if len(factor_items) == 1 and factor_items[0][1] == 1:
            continue  # prime
        report = _report_from_factors(n, d, factor_items)
        if report.korselt_ok:
            hits.append(report)
    return hits
