"""Quotient ring arithmetic: contexts, multiplication, norms, classification."""

import random
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclocert import (
    RingElement,
    UnitKind,
    classify_unit,
    cyclotomic_value,
    element,
    make_context,
    one,
    ring_mul,
    ring_norm,
    ring_pow,
    scalar,
    sylvester_norm,
    theta,
    unchecked_context,
    zero,
)
from helpers import slow_pow


def ctx7():
    return make_context(7, 3, 2)


class TestMakeContext:
    def test_small_cubic_context(self):
        ctx = ctx7()
        assert ctx.phi_p_n == 57
        assert ctx.disc_ok

    def test_degenerate_base_rejected(self):
        with pytest.raises(ValueError):
            make_context(7, 3, 14)

    def test_reference_degree5_context(self):
        n = 10376766241
        ctx = make_context(n, 5, 2)
        assert ctx.phi_p_n == cyclotomic_value(n, 5) == sum(n**i for i in range(5))

    @pytest.mark.parametrize("n", [2, 3, 10, 100])
    def test_even_or_tiny_modulus_rejected(self, n):
        with pytest.raises(ValueError):
            make_context(n, 3, 2)

    def test_base_reduced_mod_n(self):
        assert make_context(7, 3, 9).d == 2

    def test_base_congruent_one_rejected(self):
        with pytest.raises(ValueError):
            make_context(7, 3, 8)

    def test_nonprime_degree_rejected(self):
        with pytest.raises(ValueError):
            make_context(7, 4, 2)

    def test_unchecked_context_allows_even(self):
        ctx = unchecked_context(4, 3, 3)
        assert ctx.N == 4 and ctx.d == 3

    def test_phi_times_n_minus_one(self):
        for n, p in [(7, 3), (13, 3), (11, 5), (9, 7)]:
            ctx = make_context(n, p, 2)
            assert ctx.phi_p_n * (n - 1) == n**p - 1


class TestRingMul:
    def test_theta_cubed_reduces_to_d(self):
        ctx = ctx7()
        assert ring_mul(ctx, theta(ctx), element(ctx, (0, 0, 1))).coeffs == (2, 0, 0)

    def test_square_without_reduction(self):
        ctx = ctx7()
        a = element(ctx, (1, 1))
        assert ring_mul(ctx, a, a).coeffs == (1, 2, 1)

    def test_theta_fourth_power(self):
        ctx = ctx7()
        t2 = element(ctx, (0, 0, 1))
        assert ring_mul(ctx, t2, t2).coeffs == (0, 2, 0)

    @pytest.mark.parametrize("n", [5, 7])
    def test_commutative_exhaustively_tiny(self, n):
        ctx = make_context(n, 3, 2)
        elems = [RingElement(c) for c in product(range(n), repeat=3)]
        for a in elems:
            for b in elems:
                assert ring_mul(ctx, a, b) == ring_mul(ctx, b, a)

    @given(st.data())
    @settings(max_examples=60)
    def test_commutative_and_associative_random(self, data):
        n = data.draw(st.integers(3, 2**64).map(lambda v: v * 2 + 1), label="N")
        d = data.draw(st.integers(2, n - 1), label="d")
        ctx = make_context(n, 3, d)
        coeff = st.integers(0, n - 1)
        a, b, c = (
            RingElement(tuple(data.draw(coeff) for _ in range(3))) for _ in range(3)
        )
        assert ring_mul(ctx, a, b) == ring_mul(ctx, b, a)
        left = ring_mul(ctx, ring_mul(ctx, a, b), c)
        right = ring_mul(ctx, a, ring_mul(ctx, b, c))
        assert left == right


class TestRingPow:
    def test_theta_sixth_is_scalar_four(self):
        ctx = ctx7()
        assert ring_pow(ctx, theta(ctx), 6).coeffs == (4, 0, 0)

    def test_zeroth_power_is_identity(self):
        ctx = ctx7()
        assert ring_pow(ctx, theta(ctx), 0) == one(ctx)

    def test_matches_repeated_multiplication(self):
        ctx = ctx7()
        a = element(ctx, (1, 1))
        assert ring_pow(ctx, a, 6) == slow_pow(ctx, a, 6)
        assert ring_pow(ctx, a, 6).coeffs == (3, 1, 6)

    def test_negative_exponent_rejected(self):
        with pytest.raises(ValueError):
            ring_pow(ctx7(), theta(ctx7()), -1)

    @given(st.data())
    @settings(max_examples=40)
    def test_exponent_additivity(self, data):
        n = data.draw(st.integers(3, 2**32).map(lambda v: v * 2 + 1))
        d = data.draw(st.integers(2, n - 1))
        ctx = make_context(n, 3, d)
        a = RingElement(tuple(data.draw(st.integers(0, n - 1)) for _ in range(3)))
        e1 = data.draw(st.integers(0, 500))
        e2 = data.draw(st.integers(0, 500))
        combined = ring_pow(ctx, a, e1 + e2)
        split = ring_mul(ctx, ring_pow(ctx, a, e1), ring_pow(ctx, a, e2))
        assert combined == split


class TestRingNorm:
    def test_norm_of_theta_is_d(self):
        assert ring_norm(ctx7(), theta(ctx7())) == 2

    def test_norm_of_scalar_is_cube(self):
        ctx = ctx7()
        assert ring_norm(ctx, scalar(ctx, 3)) == 27 % 7 == 6

    def test_norm_of_one_plus_theta(self):
        ctx = ctx7()
        assert ring_norm(ctx, element(ctx, (1, 1))) == 3

    def test_sylvester_matches_closed_form(self):
        rng = random.Random(2024)
        for _ in range(1000):
            n = rng.randrange(3, 2**48) * 2 + 1
            d = rng.randrange(2, n - 1)
            ctx = make_context(n, 3, d)
            a = RingElement(tuple(rng.randrange(n) for _ in range(3)))
            assert ring_norm(ctx, a) == sylvester_norm(ctx, a)

    def test_degree5_norm_of_theta(self):
        # product of the five roots of x^5 - d is d
        ctx = make_context(11, 5, 2)
        assert ring_norm(ctx, theta(ctx)) == 2

    @pytest.mark.parametrize("p", [7, 11, 13])
    def test_higher_degree_norm_of_theta(self, p):
        ctx = make_context(29, p, 3)
        assert ring_norm(ctx, theta(ctx)) == 3
        assert ring_norm(ctx, one(ctx)) == 1

    def test_bareiss_against_laplace(self):
        from cyclocert.ring import _bareiss_det

        def laplace(m):
            n = len(m)
            if n == 1:
                return m[0][0]
            total = 0
            for j in range(n):
                if m[0][j]:
                    minor = [row[:j] + row[j + 1 :] for row in m[1:]]
                    total += (-1) ** j * m[0][j] * laplace(minor)
            return total

        rng = random.Random(77)
        for _ in range(200):
            n = rng.randrange(1, 6)
            m = [[rng.randrange(-9, 10) for _ in range(n)] for _ in range(n)]
            assert _bareiss_det(m) == laplace(m)

    @given(st.data())
    @settings(max_examples=60)
    def test_multiplicative(self, data):
        n = data.draw(st.integers(3, 2**40).map(lambda v: v * 2 + 1))
        d = data.draw(st.integers(2, n - 1))
        ctx = make_context(n, 3, d)
        a = RingElement(tuple(data.draw(st.integers(0, n - 1)) for _ in range(3)))
        b = RingElement(tuple(data.draw(st.integers(0, n - 1)) for _ in range(3)))
        prod_norm = ring_norm(ctx, ring_mul(ctx, a, b))
        assert prod_norm == ring_norm(ctx, a) * ring_norm(ctx, b) % n

    @given(st.data())
    @settings(max_examples=15)
    def test_multiplicative_degree5(self, data):
        n = data.draw(st.integers(3, 2**24).map(lambda v: v * 2 + 1))
        d = data.draw(st.integers(2, n - 1))
        ctx = make_context(n, 5, d)
        a = RingElement(tuple(data.draw(st.integers(0, n - 1)) for _ in range(5)))
        b = RingElement(tuple(data.draw(st.integers(0, n - 1)) for _ in range(5)))
        prod_norm = ring_norm(ctx, ring_mul(ctx, a, b))
        assert prod_norm == ring_norm(ctx, a) * ring_norm(ctx, b) % n


class TestClassifyUnit:
    def test_theta_is_unit(self):
        cls = classify_unit(ctx7(), theta(ctx7()))
        assert cls.kind is UnitKind.UNIT and cls.factor is None

    def test_zero_divisor_factors_modulus(self):
        ctx = make_context(15, 3, 2)
        cls = classify_unit(ctx, scalar(ctx, 5))
        assert cls.kind is UnitKind.ZERO_DIVISOR
        assert cls.factor == 5

    def test_zero_element(self):
        ctx = ctx7()
        assert classify_unit(ctx, zero(ctx)).kind is UnitKind.ZERO

    @pytest.mark.parametrize("n", [7, 13])
    def test_field_structure_every_nonzero_is_unit(self, n):
        # d = 2 is a cubic non-residue mod 7 and 13, so the ring is a field
        assert pow(2, (n - 1) // 3, n) != 1
        ctx = make_context(n, 3, 2)
        for coeffs in product(range(n), repeat=3):
            if coeffs == (0, 0, 0):
                continue
            assert classify_unit(ctx, RingElement(coeffs)).kind is UnitKind.UNIT

    def test_witness_divides_modulus(self):
        rng = random.Random(5)
        found = 0
        while found < 20:
            n = rng.randrange(3, 2**20) * 2 + 1
            d = rng.randrange(2, n - 1)
            ctx = make_context(n, 3, d)
            a = RingElement(tuple(rng.randrange(n) for _ in range(3)))
            cls = classify_unit(ctx, a)
            if cls.kind is UnitKind.ZERO_DIVISOR:
                assert 1 < cls.factor < n and n % cls.factor == 0
                found += 1


class TestElementConstruction:
    def test_short_vectors_padded(self):
        ctx = ctx7()
        assert element(ctx, (1,)).coeffs == (1, 0, 0)

    def test_too_many_coefficients_rejected(self):
        with pytest.raises(ValueError):
            element(ctx7(), (1, 2, 3, 4))

    def test_coefficients_reduced(self):
        assert element(ctx7(), (-1, 9, 7)).coeffs == (6, 2, 0)
