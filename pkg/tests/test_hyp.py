"""Rising factorials and truncated hypergeometric evaluation."""

import math
import random
from fractions import Fraction

import pytest

from padichyp.combinatorics import apery
from padichyp.hyp import HypParams, rising_factorial, truncated_hyp, truncated_hyp_exact
from padichyp.padic import congruent_mod, rational_to_padic


def test_rising_factorial_basics():
    assert rising_factorial(Fraction(5, 9), 0) == 1
    assert rising_factorial(Fraction(1, 2), 2) == Fraction(3, 4)
    for n in range(8):
        assert rising_factorial(1, n) == math.factorial(n)


def test_zero_truncation_is_one():
    p = HypParams((Fraction(1, 2),), (), Fraction(1), 0)
    assert truncated_hyp_exact(p) == 1


def test_gauss_value_89_over_64():
    p = HypParams((Fraction(1, 2), Fraction(1, 2)), (Fraction(1),), Fraction(1), 2)
    assert truncated_hyp_exact(p) == Fraction(89, 64)
    v = truncated_hyp(p, 3, 2)
    assert v.residue(2) == 8


def test_quartic_halves_match_apery_mod_p2():
    for p in (7, 11, 13):
        params = HypParams((Fraction(1, 2),) * 4, (Fraction(1),) * 3, Fraction(1), p - 1)
        lhs = truncated_hyp(params, p, 3)
        rhs = rational_to_padic(apery((p - 1) // 2), p, 3)
        assert congruent_mod(lhs, rhs, 2)


def test_frozen_quartic_value():
    params = HypParams((Fraction(1, 2),) * 4, (Fraction(1),) * 3, Fraction(1), 6)
    t = truncated_hyp_exact(params)
    assert t == Fraction(1213486850785, 1099511627776)
    assert truncated_hyp(params, 7, 3).residue(3) == 24


def test_degenerate_geometric_collapse():
    # single top parameter 1, no bottoms: every term is 1
    for m in (0, 1, 5, 20):
        params = HypParams((Fraction(1),), (), Fraction(1), m)
        assert truncated_hyp_exact(params) == m + 1


def test_term_recurrence_matches_from_scratch_terms():
    # recompute every term independently via rising factorials
    rng = random.Random(11)
    for _ in range(8):
        r, s = rng.randint(1, 3), rng.randint(0, 2)
        top = tuple(Fraction(rng.randint(1, 9), rng.randint(1, 9)) for _ in range(r))
        bottom = tuple(Fraction(rng.randint(1, 9), rng.randint(1, 9)) for _ in range(s))
        z = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
        m = rng.randint(0, 50)
        params = HypParams(top, bottom, z, m)
        direct = Fraction(0)
        for k in range(m + 1):
            num = Fraction(1)
            for a in top:
                num *= rising_factorial(a, k)
            den = Fraction(math.factorial(k))
            for b in bottom:
                den *= rising_factorial(b, k)
            direct += num * z**k / den
        assert truncated_hyp_exact(params) == direct


def test_partial_sums_integral_for_theorem_shapes():
    for p in (7, 11):
        for args in [(Fraction(1, 3), Fraction(2, 3)),
                     (Fraction(1, 5), Fraction(2, 5), Fraction(3, 5), Fraction(4, 5))]:
            for m in range(p):
                params = HypParams(args, (Fraction(1),) * (len(args) - 1), Fraction(1), m)
                v = truncated_hyp(params, p, 2)
                assert v.is_zero or v.valuation >= 0


def test_validation():
    with pytest.raises(ValueError):
        HypParams((Fraction(1, 2),), (Fraction(-1),), Fraction(1), 3)
    with pytest.raises(ValueError):
        HypParams((Fraction(1, 2),), (Fraction(0),), Fraction(1), 3)
    params = HypParams((Fraction(1, 7),), (), Fraction(1), 3)
    with pytest.raises(ValueError):
        truncated_hyp(params, 7, 2)  # parameter not p-integral
    params = HypParams((Fraction(1, 2),), (), Fraction(1), 7)
    with pytest.raises(ValueError):
        truncated_hyp(params, 7, 2)  # truncation past p - 1
