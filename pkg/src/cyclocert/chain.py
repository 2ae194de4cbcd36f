"""Candidate construction: pairs (N, q, k) with Phi_p(N) = k·q.

Two directions are implemented.  The forward direction derives N from a seed
prime q via the odd square root of -3 mod q; it only lands on a target bit
length when that root happens to be small, so it is practical for small
sizes only.  The reversed direction samples N first and hunts for a large
prime factor q of Phi_p(N) with a small cofactor k; it is the default and is
what reproduces the reference tables, where q is close to N^(p-1).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from math import gcd

from .numtheory import SeedPrime, is_probable_prime, make_seed, monogenic_ok, pth_residue, sqrt_minus3
from .ring import cyclotomic_value

DEFAULT_K_MAX = 10_000
DEFAULT_ATTEMPT_BUDGET = 100_000


class ChainStatus(Enum):
    ACCEPTED = "ACCEPTED"
    REJECT_BITLENGTH = "REJECT_BITLENGTH"
    REJECT_CONGRUENCE = "REJECT_CONGRUENCE"
    REJECT_BOUND = "REJECT_BOUND"
    REJECT_GCD = "REJECT_GCD"
    REJECT_NO_SEED = "REJECT_NO_SEED"


@dataclass(frozen=True)
class ChainResult:
    """Outcome of one construction attempt.

    When ACCEPTED: Phi_p(N) = k·q exactly, N ≡ 1 (mod p), and the structural
    bound (q+1)² > N^p holds.  Rejections carry whatever was computed before
    the failing check.
    """

    status: ChainStatus
    p: int
    N: int | None = None
    q: int | None = None
    k: int | None = None

    @property
    def accepted(self) -> bool:
        return self.status is ChainStatus.ACCEPTED


def structural_bound_ok(N: int, q: int, p: int) -> bool:
    """Exact integer form of the bound q > N^(p/2) - 1: (q+1)² > N^p."""
    if N < 2 or q < 2:
        raise ValueError("require N, q >= 2")
    return (q + 1) ** 2 > N**p


def forward_construct(seed: SeedPrime, p: int = 3, target_bits: int | None = None) -> ChainResult:
    """Build N from a seed prime q ≡ 1 (mod 3) via the odd root of -3.

    Both roots of -3 mod q sum to q, so exactly one is odd; with S that odd
    root, N = (S-1)/2 satisfies q | N² + N + 1 unconditionally.  Acceptance
    additionally needs N ≡ 1 (mod 3), the target bit length when given, and
    the structural bound.
    """
    if p != 3:
        raise ValueError("forward construction is specific to degree 3")
    q = seed.q
    roots = sqrt_minus3(q)
    s = roots[0] if roots[0] % 2 == 1 else roots[1]
    n = (s - 1) // 2
    phi = cyclotomic_value(n, p)
    k, rem = divmod(phi, q)
    if rem != 0:
        raise ArithmeticError("odd root construction must divide the cyclotomic value")
    if n % 3 != 1:
        return ChainResult(ChainStatus.REJECT_CONGRUENCE, p=p, N=n, q=q, k=k)
    if target_bits is not None and n.bit_length() != target_bits:
        return ChainResult(ChainStatus.REJECT_BITLENGTH, p=p, N=n, q=q, k=k)
    if not structural_bound_ok(n, q, p):
        return ChainResult(ChainStatus.REJECT_BOUND, p=p, N=n, q=q, k=k)
    return ChainResult(ChainStatus.ACCEPTED, p=p, N=n, q=q, k=k)


def _sample_candidate(rng: random.Random, bits: int, p: int) -> int | None:
    """Random odd N ≡ 1 (mod p) with exact bit length, or None on edge underflow."""
    r = rng.getrandbits(bits) | (1 << (bits - 1))
    n = r - ((r - 1) % (2 * p))  # odd and ≡ 1 (mod p) since p is odd
    if n.bit_length() != bits or n < 5:
        return None
    return n


def reversed_construct(
    target_bits: int,
    p: int,
    k_max: int = DEFAULT_K_MAX,
    rng: random.Random | None = None,
    attempt_budget: int = DEFAULT_ATTEMPT_BUDGET,
    prefilter: bool = True,
) -> ChainResult:
    """Sample N ≡ 1 (mod p) of the target size and scan small cofactors.

    For each candidate, q = Phi_p(N)/k is tested for probable primality over
    cofactors k <= k_max, accepting the first prime quotient that satisfies
    the structural bound.  Candidates failing a cheap compositeness filter
    are skipped by default: a composite N can never certify, so scanning its
    cofactors would be wasted work.
    """
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    if target_bits < 3:
        raise ValueError("target bit length must be at least 3")
    if rng is None:
        rng = random.Random(0)
    for _ in range(attempt_budget):
        n = _sample_candidate(rng, target_bits, p)
        if n is None:
            continue
        if prefilter and not is_probable_prime(n, rounds=2):
            continue
        phi = cyclotomic_value(n, p)
        for k in range(1, k_max + 1):
            if phi % k != 0:
                continue
            q = phi // k
            if not structural_bound_ok(n, q, p):
                break  # q only shrinks as k grows
            if is_probable_prime(q):
                return ChainResult(ChainStatus.ACCEPTED, p=p, N=n, q=q, k=k)
    return ChainResult(ChainStatus.REJECT_NO_SEED, p=p)


def random_seed_prime(rng: random.Random, bits: int, rounds: int = 20) -> SeedPrime:
    """Random probable prime q ≡ 1 (mod 3) with the exact bit length."""
    while True:
        r = rng.getrandbits(bits) | (1 << (bits - 1)) | 1
        q = r - ((r - 1) % 6)  # q ≡ 1 (mod 6)
        if q.bit_length() != bits or q <= 7:
            continue
        if is_probable_prime(q, rounds=rounds):
            return make_seed(q, 3)


def forward_search(
    target_bits: int,
    rng: random.Random | None = None,
    attempt_budget: int = DEFAULT_ATTEMPT_BUDGET,
) -> ChainResult:
    """Drive forward_construct over random seeds until one lands on target.

    The odd root of -3 is essentially uniform in (0, q), so the chance that
    N = (S-1)/2 has exactly the target bit length falls off exponentially;
    this search is only practical for small targets.
    """
    if rng is None:
        rng = random.Random(0)
    seed_bits = (3 * target_bits + 1) // 2 + 1  # q strictly above 2^(1.5 L)
    last = ChainResult(ChainStatus.REJECT_NO_SEED, p=3)
    for _ in range(attempt_budget):
        seed = random_seed_prime(rng, seed_bits, rounds=4)
        result = forward_construct(seed, 3, target_bits=target_bits)
        if result.accepted:
            return result
        last = result
    return ChainResult(ChainStatus.REJECT_NO_SEED, p=3, N=last.N, q=last.q, k=last.k)


def select_base_d(N: int, p: int, d_max: int = 1000) -> int:
    """Smallest admissible base d in [2, d_max] for the candidate N.

    Admissible means: power-basis predicate holds, gcd(N, p·d) = 1, and d is
    not a p-th power residue mod N.
    """
    if N % p != 1:
        raise ValueError("require N ≡ 1 (mod p)")
    for d in range(2, d_max + 1):
        if not monogenic_ok(d, p):
            continue
        if gcd(N, p * d) != 1:
            continue
        if not pth_residue(d, N, p):
            return d
    raise ValueError(f"no admissible base d <= {d_max} for N = {N}")


def cyclotomic_roots(p: int, q: int) -> set[int]:
    """All residues N mod q with Phi_p(N) ≡ 0, i.e. of multiplicative order p.

    Exists exactly when q ≡ 1 (mod p): raise a generator candidate g to
    (q-1)/p; any result h ≠ 1 has order exactly p, and the p-1 nontrivial
    powers of h are precisely the roots.
    """
    if p == q:
        raise ValueError("degrees p and q must be distinct primes")
    if q % p != 1:
        raise ValueError("Phi_p has roots mod q only when q ≡ 1 (mod p)")
    e = (q - 1) // p
    for g in range(2, q):
        h = pow(g, e, q)
        if h != 1:
            roots = set()
            x = h
            for _ in range(p - 1):
                roots.add(x)
                x = x * h % q
            return roots
    raise ArithmeticError(f"no element of order {p} mod {q}; is q prime?")
