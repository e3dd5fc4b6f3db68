"""Valuation-tracked p-adic arithmetic: examples and ring properties."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from padichyp.padic import (
    PadicValue,
    PrecisionError,
    congruent_mod,
    is_odd_prime,
    padic_add,
    padic_inv,
    padic_mul,
    padic_neg,
    rational_to_padic,
    teichmuller,
)

PRIMES = [3, 5, 7, 13, 97]


def test_embed_one_third_mod_49():
    v = rational_to_padic(Fraction(1, 3), 7, 2)
    assert (v.valuation, v.unit) == (0, 33)  # 3*33 = 99 = 1 mod 49
    assert 3 * 33 % 49 == 1


def test_embed_zero_is_exact():
    v = rational_to_padic(0, 7, 2)
    assert v.is_zero and v.abs_prec == float("inf")


def test_embed_p_power_denominator():
    v = rational_to_padic(Fraction(1, 7), 7, 2)
    assert (v.valuation, v.unit) == (-1, 1)


def test_embed_rejects_even_and_composite_p():
    with pytest.raises(ValueError):
        rational_to_padic(1, 2, 2)
    with pytest.raises(ValueError):
        rational_to_padic(1, 9, 2)


def test_mul_valuations_add():
    a = PadicValue(5, 0, 3, 2)
    b = PadicValue(5, 1, 2, 2)
    c = padic_mul(a, b)
    assert (c.valuation, c.unit) == (1, 6)


def test_add_of_value_and_negation_is_zero():
    x = rational_to_padic(Fraction(3, 4), 7, 3)
    z = padic_add(x, padic_neg(x))
    assert z.is_zero
    assert z.abs_prec >= 3


def test_inv_of_33_mod_49():
    v = padic_inv(PadicValue(7, 0, 33, 2))
    assert (v.valuation, v.unit) == (0, 3)


def test_inv_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        padic_inv(PadicValue.zero(7))


def test_mixed_primes_raise():
    with pytest.raises(ValueError):
        padic_add(PadicValue(5, 0, 1, 2), PadicValue(7, 0, 1, 2))


def test_congruent_mod_reflexive():
    v = rational_to_padic(Fraction(5, 3), 7, 3)
    for k in range(0, 4):
        assert congruent_mod(v, v, k)


def test_congruent_mod_89_over_64_is_8_mod_9():
    a = PadicValue(3, 0, 8, 2)
    b = rational_to_padic(Fraction(89, 64), 3, 2)
    assert congruent_mod(a, b, 2)


def test_congruent_mod_valuation_threshold():
    v = PadicValue(7, 1, 1, 1)
    z = PadicValue.zero(7)
    assert congruent_mod(v, z, 1)
    assert not congruent_mod(v, z, 2)


def test_congruent_mod_insufficient_precision_is_an_error():
    a = rational_to_padic(1, 7, 2)
    b = rational_to_padic(1, 7, 5)
    with pytest.raises(PrecisionError):
        congruent_mod(a, b, 3)


def test_cancellation_zero_keeps_finite_precision():
    a = rational_to_padic(1, 7, 3)
    b = rational_to_padic(1 + 7**3, 7, 3)  # same digits to precision 3
    d = a - b
    assert d.is_zero and d.abs_prec == 3
    with pytest.raises(PrecisionError):
        congruent_mod(d, PadicValue.zero(7), 4)


def test_partial_cancellation_reduces_relative_precision():
    a = rational_to_padic(1, 7, 3)
    b = rational_to_padic(-(1 + 7), 7, 3)
    s = a + b  # = -7 + O(7^3)
    assert s.valuation == 1 and s.rel_prec == 2


def test_teichmuller_fixed_point_and_example():
    assert teichmuller(1, 7, 3).unit == 1
    t = teichmuller(3, 7, 2)
    assert t.unit == 31  # 3^7 = 2187 = 31 mod 49
    assert pow(3, 7, 49) == 31


def test_teichmuller_rejects_multiples_of_p():
    with pytest.raises(ValueError):
        teichmuller(14, 7, 2)


def test_is_odd_prime():
    assert [p for p in range(20) if is_odd_prime(p)] == [3, 5, 7, 11, 13, 17, 19]


# -- property tests ---------------------------------------------------------

small_rationals = st.fractions(
    min_value=Fraction(-50), max_value=Fraction(50), max_denominator=30)


@given(st.sampled_from(PRIMES), small_rationals, small_rationals)
@settings(max_examples=60, deadline=None)
def test_embedding_is_a_ring_homomorphism(p, q1, q2):
    N = 4
    e1, e2 = rational_to_padic(q1, p, N), rational_to_padic(q2, p, N)
    for op, pop in [(lambda a, b: a + b, padic_add),
                    (lambda a, b: a * b, padic_mul)]:
        combined = rational_to_padic(op(q1, q2), p, N)
        direct = pop(e1, e2)
        k = min(combined.abs_prec, direct.abs_prec)
        if k > -10:
            assert congruent_mod(combined, direct, int(min(k, N)) if k != float("inf") else N)


@given(st.sampled_from(PRIMES), small_rationals, small_rationals)
@settings(max_examples=60, deadline=None)
def test_valuation_additivity(p, q1, q2):
    if q1 == 0 or q2 == 0:
        return
    a, b = rational_to_padic(q1, p, 3), rational_to_padic(q2, p, 3)
    assert padic_mul(a, b).valuation == a.valuation + b.valuation


@given(st.sampled_from(PRIMES), st.integers(min_value=1, max_value=96),
       st.integers(min_value=1, max_value=6))
@settings(max_examples=80, deadline=None)
def test_teichmuller_is_a_root_of_unity(p, a, N):
    if a % p == 0:
        return
    t = teichmuller(a, p, N)
    pN = p**N
    assert t.unit % p == a % p
    assert pow(t.unit, p - 1, pN) == 1


@given(st.sampled_from(PRIMES), small_rationals, small_rationals,
       st.integers(min_value=1, max_value=3))
@settings(max_examples=60, deadline=None)
def test_congruence_is_symmetric_and_shift_invariant(p, q1, q2, k):
    N = 5
    a, b = rational_to_padic(q1, p, N), rational_to_padic(q2, p, N)
    if min(a.abs_prec, b.abs_prec) < k:
        return
    ab = congruent_mod(a, b, k)
    assert ab == congruent_mod(b, a, k)
    diff = a - b
    if diff.abs_prec >= k:
        assert ab == congruent_mod(diff, PadicValue.zero(p), k)
