"""Shared test scaffolding: scripted RNGs and tiny reference oracles."""

from __future__ import annotations

from cyclocert import RingContext, RingElement, ring_mul


class ScriptedBits:
    """Feeds preset values to getrandbits; raising StopIteration ends a search."""

    def __init__(self, values):
        self._values = iter(values)

    def getrandbits(self, bits):
        return next(self._values)


class ScriptedDraws:
    """Feeds preset coefficient draws to randrange, cycling the last batch."""

    def __init__(self, draws):
        self._draws = list(draws)
        self._pos = 0

    def randrange(self, n):
        value = self._draws[self._pos % len(self._draws)]
        self._pos += 1
        return value % n


def slow_pow(ctx: RingContext, a: RingElement, e: int) -> RingElement:
    """Exponentiation by repeated multiplication; the oracle for ring_pow."""
    result = RingElement((1 % ctx.N,) + (0,) * (ctx.p - 1))
    for _ in range(e):
        result = ring_mul(ctx, result, a)
    return result


def sieve_primes(limit: int) -> list[int]:
    flags = bytearray(b"\x01") * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for i in range(2, int(limit**0.5) + 1):
        if flags[i]:
            flags[i * i :: i] = b"\x00" * len(range(i * i, limit + 1, i))
    return [i for i, f in enumerate(flags) if f]
