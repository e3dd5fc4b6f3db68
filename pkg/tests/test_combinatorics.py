"""Harmonic sums, Apery numbers, the rising-factorial lemma sums and the
exact binomial/harmonic identities."""

import math
import random
from fractions import Fraction

import pytest

from padichyp.combinatorics import (
    HarmonicCache,
    apery,
    bin_harmonic_id1,
    bin_harmonic_id2,
    harmonic,
    lemma_P_sum,
    lemma_PQ_expected,
    lemma_Q_sum,
    power_sum_check,
)
from padichyp.padic import congruent_mod, rational_to_padic


def test_harmonic_values():
    assert harmonic(0, 1) == 0
    assert harmonic(0, 5) == 0
    assert harmonic(3, 1) == Fraction(11, 6)
    assert harmonic(2, 2) == Fraction(5, 4)


def test_harmonic_prefix_property():
    for i in (1, 2, 3):
        cache = HarmonicCache(i)
        for n in range(1, 40):
            assert cache.value(n) - cache.value(n - 1) == Fraction(1, n**i)


def test_apery_values():
    assert [apery(n) for n in range(5)] == [1, 5, 73, 1445, 33001]


def test_power_sums():
    assert power_sum_check(5, 4)   # divisible case: sum = -1
    assert power_sum_check(5, 3)   # generic case: sum = 0
    assert power_sum_check(3, 2)   # 1 + 4 = 5 = -1 mod 3
    for p in (7, 11, 13):
        for k in range(1, 2 * (p - 1) + 1):
            assert power_sum_check(p, k), (p, k)


def _brute_pq(a, p, second_order):
    """From-scratch evaluation: raw loops, no caches, no recurrences."""
    total = Fraction(0)
    for j in range(p):
        prod = Fraction(1)
        for ai in a:
            f = Fraction(1)
            for t in range(ai):
                f *= j + 1 + t
            prod *= f
        h1 = Fraction(0)
        h2 = Fraction(0)
        for ai in a:
            h1 += sum(Fraction(1, u) for u in range(j + 1, ai + j + 1))
            h2 += sum(Fraction(1, u**2) for u in range(j + 1, ai + j + 1))
        if second_order:
            total += prod * (j * h1 + Fraction(j * j, 2) * (h1 * h1 - h2))
        else:
            total += prod * (1 + j * h1)
    return total


def test_first_order_sum_interior_case():
    v = lemma_P_sum((1,), 5)
    assert congruent_mod(v, rational_to_padic(0, 5, 2), 1)


def test_boundary_values():
    p = 5
    vP = lemma_P_sum((4, 4), p)
    vQ = lemma_Q_sum((4, 4), p)
    assert lemma_PQ_expected((4, 4), p) == (1, -1)
    assert congruent_mod(vP, rational_to_padic(1, p, 2), 1)
    assert congruent_mod(vQ, rational_to_padic(-1, p, 2), 1)


def test_random_tuples_match_expectation_and_brute_force():
    rng = random.Random(99)
    for p in (5, 7, 11):
        for _ in range(12):
            n = rng.randint(1, 5)
            a = []
            budget = 2 * (p - 1)
            for i in range(n):
                hi = budget - (n - i - 1)
                if hi < 1:
                    break
                v = rng.randint(1, hi)
                a.append(v)
                budget -= v
            a = tuple(a) or (1,)
            eP, eQ = lemma_PQ_expected(a, p)
            vP, vQ = lemma_P_sum(a, p), lemma_Q_sum(a, p)
            assert congruent_mod(vP, rational_to_padic(eP, p, 2), 1), (p, a)
            assert congruent_mod(vQ, rational_to_padic(eQ, p, 2), 1), (p, a)
            # independent evaluation route
            assert congruent_mod(
                rational_to_padic(_brute_pq(a, p, False), p, 2), vP, 1)
            assert congruent_mod(
                rational_to_padic(_brute_pq(a, p, True), p, 2), vQ, 1)


def test_tuple_sum_out_of_range_rejected():
    with pytest.raises(ValueError):
        lemma_P_sum((5, 4), 5)
    with pytest.raises(ValueError):
        lemma_Q_sum((0,), 5)


def test_identity_one_by_hand_at_1_1():
    # k=0 term is 1; k=1 term 4*[1 + (3/2 + 0 + 3/2 + 0 - 4)] = 0; rhs 1
    assert bin_harmonic_id1(1, 1) == 0


def test_identity_one_small_grid():
    for m in range(1, 13):
        for n in range(1, m + 1):
            assert bin_harmonic_id1(m, n) == 0, (m, n)


def test_identity_one_requires_m_at_least_n():
    with pytest.raises(ValueError):
        bin_harmonic_id1(3, 4)


def test_identity_two_example_and_small_grid():
    assert bin_harmonic_id2(5, 3, 3, 1, 0) == 0
    for l in range(2, 11):
        for m in range((l + 1) // 2, l):
            for n in range((l + 1) // 2, m + 1):
                if 2 * n < l:
                    continue
                for c1, c2 in [(1, 0), (0, 1), (Fraction(2, 3), Fraction(-1, 5))]:
                    assert bin_harmonic_id2(l, m, n, c1, c2) == 0, (l, m, n)


def test_identity_two_linearity_makes_basis_sufficient():
    l, m, n = 9, 7, 5
    c1, c2 = Fraction(3, 7), Fraction(-5, 2)
    v = bin_harmonic_id2(l, m, n, c1, c2)
    b10 = bin_harmonic_id2(l, m, n, 1, 0)
    b01 = bin_harmonic_id2(l, m, n, 0, 1)
    assert v == c1 * b10 + c2 * b01 == 0


def test_identity_two_precondition():
    with pytest.raises(ValueError):
        bin_harmonic_id2(10, 9, 4, 1, 1)  # n < l/2
