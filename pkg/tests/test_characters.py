"""Character values, the scaled binomial sums and the scaled Gaussian series."""

import random
from fractions import Fraction

import pytest

from padichyp.characters import (
    Character,
    char_binomial_scaled,
    char_value,
    characters_for_arguments,
    greene_series_scaled,
)
from padichyp.gfunction import GArguments, g_function
from padichyp.padic import congruent_mod, rational_to_padic
from padichyp.qseries import gamma_coeffs


def test_trivial_character_values():
    eps = Character.trivial(5)
    for x in range(1, 5):
        assert char_value(eps, x, 2).unit == 1
    assert char_value(eps, 0, 2).is_zero


def test_quadratic_character_at_minus_one():
    # phi(-1) = (-1)^((p-1)/2)
    assert char_value(Character.quadratic(5), -1, 1).unit == 1
    v = char_value(Character.quadratic(7), -1, 1)
    assert v.unit == 6  # = -1 mod 7


def test_every_character_fixes_one():
    for p in (5, 7, 13):
        for e in range(p - 1):
            assert char_value(Character(p, e), 1, 2).unit == 1


def test_character_values_are_roots_of_unity():
    p, N = 13, 3
    pN = p**N
    for e in (1, 3, 6):
        chi = Character(p, e)
        for x in range(1, p):
            u = char_value(chi, x, N).unit
            assert pow(u, p - 1, pN) == 1
            assert u % p == pow(x, (p - 1 - e) % (p - 1), p) % p


def test_character_group_structure():
    p = 11
    a, b = Character(p, 3), Character(p, 5)
    assert (a * b).exponent == 8
    assert a.inverse().exponent == p - 1 - 3
    assert Character.of_order(5, p).exponent == 2
    with pytest.raises(ValueError):
        Character.of_order(3, p)


def test_binomial_examples_p5():
    p, N = 5, 3
    eps, phi = Character.trivial(p), Character.quadratic(p)
    assert char_binomial_scaled(eps, eps, N).residue(N) == 3  # p - 2
    m1 = rational_to_padic(-1, p, N)
    assert congruent_mod(char_binomial_scaled(phi, eps, N), m1, N)
    assert congruent_mod(char_binomial_scaled(eps, phi, N), m1, N)


def test_binomials_stay_integral():
    p, N = 13, 3
    for ea in range(p - 1):
        for eb in range(0, p - 1, 3):
            v = char_binomial_scaled(Character(p, ea), Character(p, eb), N)
            assert v.is_zero or v.valuation >= 0


def test_series_vanishes_at_argument_zero():
    p = 7
    phi, eps = Character.quadratic(p), Character.trivial(p)
    assert greene_series_scaled([phi, phi], [eps], 0, 3).is_zero


def test_series_matches_two_term_g_value():
    # scaled 2F1 with both characters quadratic equals the two-argument G at
    # one half, which is -1 at p = 3
    p, N = 3, 4
    phi, eps = Character.quadratic(p), Character.trivial(p)
    s = greene_series_scaled([phi, phi], [eps], 1, N)
    assert congruent_mod(s, rational_to_padic(-1, p, N), N)
    g = g_function(GArguments(p, (Fraction(1, 2), Fraction(1, 2)), N))
    assert congruent_mod(s, g, N)


def test_series_permutation_invariance():
    p, N = 13, 3
    rng = random.Random(5)
    top = characters_for_arguments(
        [Fraction(1, 3), Fraction(1, 2), Fraction(2, 3)], p)
    bottom = [Character(p, 2), Character.trivial(p)]
    base = greene_series_scaled(top, bottom, 3, N)
    for _ in range(3):
        pairs = list(zip(top[1:], bottom))
        rng.shuffle(pairs)
        shuffled_top = [top[0]] + [a for a, _ in pairs]
        shuffled_bottom = [b for _, b in pairs]
        assert congruent_mod(
            base, greene_series_scaled(shuffled_top, shuffled_bottom, 3, N), N)


def test_quartic_quadratic_series_hits_form_coefficient():
    # scaled 4F3 at phi^4 minus p equals the q^p coefficient of the level-8 form
    for p in (7, 11, 13):
        N = 5
        phi, eps = Character.quadratic(p), Character.trivial(p)
        s = greene_series_scaled([phi] * 4, [eps] * 3, 1, N)
        val = s - rational_to_padic(p, p, N)
        coeff = gamma_coeffs(p).coefficient(p)
        assert congruent_mod(val, rational_to_padic(coeff, p, N), 4)


def test_mixed_primes_rejected():
    with pytest.raises(ValueError):
        greene_series_scaled(
            [Character.quadratic(7), Character.quadratic(5)],
            [Character.trivial(7)], 1, 2)


def test_characters_need_full_order():
    with pytest.raises(ValueError):
        characters_for_arguments([Fraction(1, 5)], 7)
