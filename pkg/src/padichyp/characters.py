"""Multiplicative characters of F_p* embedded p-adically, Greene's scaled
character binomial and the scaled Gaussian hypergeometric series.

Characters are powers of the inverse Teichmuller character: chi = wbar^e with
e in [0, p-2], so chi(x) = omega(x)^(-e) is a (p-1)-th root of unity in Z_p*
and chi(0) = 0 by convention (including the trivial character).  Working with
Teichmuller roots of unity instead of complex ones turns every identity into
an exact congruence mod p^N.

The scaled binomial absorbs the 1/p of Greene's definition:

    beta(A, B) = p * (A over B) = B(-1) * sum_{x in F_p} A(x) Bbar(1-x),

an honest element of Z_p.  The scaled series computed here is

    (-1)^n p^n {n+1}F_n(A_0,...,A_n; B_1,...,B_n | x)
        = (-1)^n/(p-1) * sum_chi beta(A_0 chi, chi) prod_i beta(A_i chi, B_i chi) chi(x),

which is exactly the left-hand side appearing in the G-function identity and
the theorem statements, so no negative valuations ever materialize.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .padic import PadicValue, check_prime


@lru_cache(maxsize=None)
def _dlog_table(p: int) -> tuple[int, tuple[int, ...]]:
    """(primitive root g, index table) with table[x] = log_g(x) for x in [1, p-1]."""
    check_prime(p)
    order = p - 1
    for g in range(2, p):
        seen, acc = 0, 1
        for _ in range(order):
            acc = acc * g % p
            seen += 1
            if acc == 1:
                break
        if seen == order:
            break
    else:  # pragma: no cover - every prime has a primitive root
        raise AssertionError("no primitive root found")
    table = [0] * p
    acc = 1
    for k in range(order):
        table[acc] = k
        acc = acc * g % p
    return g, tuple(table)


@lru_cache(maxsize=None)
def _omega_powers(p: int, N: int) -> tuple[int, ...]:
    """omega(g)^k mod p^N for k in [0, p-2], g the cached primitive root."""
    g, _ = _dlog_table(p)
    pN = p**N
    zeta = pow(g, p ** (N - 1), pN)
    out = [1] * (p - 1)
    for k in range(1, p - 1):
        out[k] = out[k - 1] * zeta % pN
    return tuple(out)


@dataclass(frozen=True)
class Character:
    """chi = wbar^exponent on F_p*, extended by chi(0) = 0."""

    prime: int
    exponent: int

    def __post_init__(self) -> None:
        check_prime(self.prime)
        object.__setattr__(self, "exponent", self.exponent % (self.prime - 1))

    @classmethod
    def trivial(cls, p: int) -> "Character":
        return cls(p, 0)

    @classmethod
    def quadratic(cls, p: int) -> "Character":
        return cls(p, (p - 1) // 2)

    @classmethod
    def of_order(cls, d: int, p: int, power: int = 1) -> "Character":
        """rho^power where rho = wbar^((p-1)/d); requires p = 1 mod d."""
        if (p - 1) % d != 0:
            raise ValueError(f"no character of order {d} for p={p}")
        return cls(p, power * ((p - 1) // d))

    @property
    def is_trivial(self) -> bool:
        return self.exponent == 0

    def __mul__(self, other: "Character") -> "Character":
        if self.prime != other.prime:
            raise ValueError("mixed primes")
        return Character(self.prime, self.exponent + other.exponent)

    def inverse(self) -> "Character":
        return Character(self.prime, -self.exponent)

    def value_residue(self, x: int, N: int) -> int:
        """chi(x) as an integer residue mod p^N (0 for x = 0)."""
        p = self.prime
        x %= p
        if x == 0:
            return 0
        _, dlog = _dlog_table(p)
        pw = _omega_powers(p, N)
        return pw[(-self.exponent * dlog[x]) % (p - 1)]


def char_value(chi: Character, x: int, N: int) -> PadicValue:
    """chi(x) as a PadicValue: a (p-1)-th root of unity, or zero at x = 0."""
    r = chi.value_residue(x, N)
    if r == 0:
        return PadicValue.zero(chi.prime)
    return PadicValue(chi.prime, 0, r, N)


@dataclass(frozen=True)
class BinomialTable:
    """beta(A chi, B chi) for every character chi of F_p*, at fixed (A, B).

    entries[e] is the residue mod p^N for chi = wbar^e.
    """

    prime: int
    precision: int
    a_exponent: int
    b_exponent: int
    entries: tuple[int, ...]


def _beta_residue(p: int, ea: int, eb: int, N: int) -> int:
    """beta(wbar^ea, wbar^eb) = wbar^eb(-1) * sum_x wbar^ea(x) wbar^(-eb)(1-x)."""
    _, dlog = _dlog_table(p)
    pw = _omega_powers(p, N)
    order = p - 1
    pN = p**N
    total = 0
    for x in range(2, p):  # x = 0 and x = 1 drop out via chi(0) = 0
        total += pw[(-ea * dlog[x] + eb * dlog[(1 - x) % p]) % order]
    total = total * pw[(-eb * dlog[p - 1]) % order]
    return total % pN


def char_binomial_scaled(A: Character, B: Character, N: int) -> PadicValue:
    """The scaled Greene binomial beta(A, B) = B(-1) sum_x A(x) Bbar(1-x)."""
    if A.prime != B.prime:
        raise ValueError("mixed primes")
    r = _beta_residue(A.prime, A.exponent, B.exponent, N)
    return PadicValue.from_residue(r, A.prime, N)


def binomial_table(A: Character, B: Character, N: int) -> BinomialTable:
    if A.prime != B.prime:
        raise ValueError("mixed primes")
    p = A.prime
    entries = tuple(
        _beta_residue(p, (A.exponent + e) % (p - 1), (B.exponent + e) % (p - 1), N)
        for e in range(p - 1)
    )
    return BinomialTable(p, N, A.exponent, B.exponent, entries)


def greene_series_scaled(top, bottom, x: int, N: int) -> PadicValue:
    """(-1)^n p^n {n+1}F_n(top; bottom | x)_p, entirely inside Z_p.

    top is A_0..A_n, bottom is B_1..B_n; all characters must share one prime.
    """
    top = list(top)
    bottom = list(bottom)
    if len(top) != len(bottom) + 1 or not bottom:
        raise ValueError("need n+1 top characters and n >= 1 bottom characters")
    p = top[0].prime
    for c in (*top, *bottom):
        if c.prime != p:
            raise ValueError("mixed primes")
    x %= p
    if x == 0:
        return PadicValue.zero(p)
    pN = p**N
    order = p - 1
    eps = Character.trivial(p)
    tables = [binomial_table(top[0], eps, N)]
    tables += [binomial_table(a, b, N) for a, b in zip(top[1:], bottom)]
    _, dlog = _dlog_table(p)
    pw = _omega_powers(p, N)
    total = 0
    for e in range(order):
        term = pw[(-e * dlog[x]) % order]
        for t in tables:
            term = term * t.entries[e] % pN
        total += term
    total = total * pow(order, -1, pN) % pN
    n = len(bottom)
    if n % 2:
        total = -total % pN
    return PadicValue.from_residue(total, p, N)


def characters_for_arguments(args, p: int) -> list[Character]:
    """rho_i^(m_i) for fractions m_i/d_i, i.e. wbar^(m_i (p-1)/d_i).

    Requires p = 1 mod d_i for every i.
    """
    out = []
    for q in args:
        q = Fraction(q)
        if (p - 1) % q.denominator != 0:
            raise ValueError(f"p={p} is not 1 mod {q.denominator}")
        out.append(Character(p, q.numerator * ((p - 1) // q.denominator)))
    return out
