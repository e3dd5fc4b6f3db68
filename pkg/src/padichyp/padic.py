"""Fixed-relative-precision p-adic numbers over exact rationals.

A value of ``Q_p`` is stored in the canonical decomposition ``u * p^v`` where
``u`` is a unit known modulo ``p^N``; ``N`` is the *relative* precision and
``v + N`` the *absolute* precision (the value is pinned down modulo
``p^(v+N)``).  Zero is a distinguished state: ``valuation is None`` together
with an absolute precision bound, which is ``math.inf`` for exact zeros and
finite for zeros produced by cancelling additions.  Keeping the finite bound
is what makes :func:`congruent_mod` sound: it can never certify a congruence
past what the inputs actually determine.

Only odd primes are supported, and primes are capped by a configurable bound
(default 500) so that downstream table builders stay desk-sized.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

DEFAULT_PRIME_BOUND = 500

_prime_bound = DEFAULT_PRIME_BOUND


class PrecisionError(ArithmeticError):
    """A computation or comparison was requested past certified precision."""


def set_prime_bound(bound: int) -> None:
    """Raise or lower the largest admissible prime (table-size guard)."""
    if bound < 3:
        raise ValueError("prime bound must be at least 3")
    global _prime_bound
    _prime_bound = bound


def prime_bound() -> int:
    return _prime_bound


def is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def check_prime(p: int) -> None:
    if not is_odd_prime(p):
        raise ValueError(f"p={p} is not an odd prime")
    if p > _prime_bound:
        raise ValueError(f"p={p} exceeds the configured prime bound {_prime_bound}")


def valuation_of_int(n: int, p: int) -> int:
    """Exponent of the largest power of p dividing n (n must be nonzero)."""
    if n == 0:
        raise ValueError("valuation of 0 is undefined")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


@dataclass(frozen=True)
class PadicValue:
    """An element of Q_p known to fixed relative precision.

    ``valuation is None`` encodes zero; then ``unit == 0`` and ``rel_prec``
    holds the absolute precision to which the value is known to vanish.
    """

    prime: int
    valuation: int | None
    unit: int
    rel_prec: int | float

    def __post_init__(self) -> None:
        check_prime(self.prime)
        if self.valuation is None:
            if self.unit != 0:
                raise ValueError("zero value must have unit 0")
            # rel_prec holds the absolute precision here; it may be negative
            # (a cancelled sum of negative-valuation values) or infinite
        else:
            if self.rel_prec < 1:
                raise PrecisionError("relative precision fell below 1")
            modulus = self.prime**self.rel_prec
            if not 0 < self.unit < modulus:
                raise ValueError("unit out of range for stated precision")
            if self.unit % self.prime == 0:
                raise ValueError("unit must be coprime to p")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, p: int, abs_prec: int | float = math.inf) -> "PadicValue":
        return cls(p, None, 0, abs_prec)

    @classmethod
    def from_residue(cls, r: int, p: int, N: int) -> "PadicValue":
        """Interpret an integer known modulo p^N as a p-adic value."""
        if N < 1:
            raise PrecisionError("need at least one digit of precision")
        pN = p**N
        r %= pN
        if r == 0:
            return cls.zero(p, N)
        v = valuation_of_int(r, p)
        return cls(p, v, (r // p**v) % p ** (N - v), N - v)

    # -- inspectors --------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.valuation is None

    @property
    def abs_prec(self) -> int | float:
        if self.valuation is None:
            return self.rel_prec
        return self.valuation + self.rel_prec

    def residue(self, k: int) -> int:
        """The integer in [0, p^k) congruent to the value mod p^k.

        Requires valuation >= 0 and absolute precision >= k.
        """
        if self.abs_prec < k:
            raise PrecisionError(f"residue mod p^{k} exceeds absolute precision")
        if self.is_zero:
            return 0
        if self.valuation < 0:
            raise ValueError("negative valuation has no integer residue")
        return (self.unit * self.prime**self.valuation) % self.prime**k

    def to_rational_digits(self) -> tuple[int | None, int]:
        """(valuation, unit) pair as serialized in reports."""
        return self.valuation, self.unit

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        if self.is_zero:
            return f"O({self.prime}^{self.rel_prec})"
        return (
            f"{self.unit}*{self.prime}^{self.valuation}"
            f" + O({self.prime}^{self.abs_prec})"
        )

    # -- arithmetic --------------------------------------------------------

    def _require_same_prime(self, other: "PadicValue") -> None:
        if self.prime != other.prime:
            raise ValueError("mixed primes")

    def __add__(self, other: "PadicValue") -> "PadicValue":
        return padic_add(self, other)

    def __sub__(self, other: "PadicValue") -> "PadicValue":
        return padic_add(self, padic_neg(other))

    def __mul__(self, other: "PadicValue") -> "PadicValue":
        return padic_mul(self, other)

    def __neg__(self) -> "PadicValue":
        return padic_neg(self)

    def inverse(self) -> "PadicValue":
        return padic_inv(self)


def rational_to_padic(q: Rational | int, p: int, N: int) -> PadicValue:
    """Embed a rational into Q_p with unit known mod p^N.

    p may divide numerator or denominator; both contribute to the valuation.
    """
    check_prime(p)
    if N < 1:
        raise PrecisionError("need at least one digit of precision")
    q = Fraction(q)
    if q == 0:
        return PadicValue.zero(p)
    vn = valuation_of_int(q.numerator, p)
    vd = valuation_of_int(q.denominator, p)
    v = vn - vd
    pN = p**N
    num = q.numerator // p**vn
    den = q.denominator // p**vd
    unit = num * pow(den, -1, pN) % pN
    return PadicValue(p, v, unit, N)


def padic_add(a: PadicValue, b: PadicValue) -> PadicValue:
    a._require_same_prime(b)
    p = a.prime
    if a.is_zero and b.is_zero:
        return PadicValue.zero(p, min(a.abs_prec, b.abs_prec))
    if a.is_zero:
        a, b = b, a
    if b.is_zero:
        if b.abs_prec >= a.abs_prec:
            return a
        if b.abs_prec <= a.valuation:
            return PadicValue.zero(p, b.abs_prec)
        return PadicValue(p, a.valuation, a.unit % p ** (b.abs_prec - a.valuation),
                          b.abs_prec - a.valuation)
    absprec = min(a.abs_prec, b.abs_prec)
    v = min(a.valuation, b.valuation)
    n = absprec - v
    if n <= 0:
        return PadicValue.zero(p, absprec)
    pn = p**n
    s = (a.unit * p ** (a.valuation - v) + b.unit * p ** (b.valuation - v)) % pn
    if s == 0:
        # all known digits cancelled; the sum vanishes to absolute precision
        return PadicValue.zero(p, absprec)
    t = valuation_of_int(s, p)
    if v + t >= absprec:
        return PadicValue.zero(p, absprec)
    return PadicValue(p, v + t, (s // p**t) % p ** (n - t), n - t)


def padic_mul(a: PadicValue, b: PadicValue) -> PadicValue:
    a._require_same_prime(b)
    p = a.prime
    if a.is_zero or b.is_zero:
        # val(xy) >= bound(x) + val(y); exact zeros stay exact
        za = a.abs_prec if a.is_zero else a.valuation
        zb = b.abs_prec if b.is_zero else b.valuation
        return PadicValue.zero(p, za + zb)
    n = min(a.rel_prec, b.rel_prec)
    return PadicValue(p, a.valuation + b.valuation, a.unit * b.unit % p**n, n)


def padic_neg(a: PadicValue) -> PadicValue:
    if a.is_zero:
        return a
    return PadicValue(a.prime, a.valuation, -a.unit % a.prime**a.rel_prec, a.rel_prec)


def padic_inv(a: PadicValue) -> PadicValue:
    if a.is_zero:
        raise ZeroDivisionError("inversion of p-adic zero")
    n = a.rel_prec
    return PadicValue(a.prime, -a.valuation, pow(a.unit, -1, a.prime**n), n)


def congruent_mod(a: PadicValue, b: PadicValue, k: int) -> bool:
    """True iff valuation(a - b) >= k.

    Both operands must carry absolute precision >= k; anything less is a hard
    :class:`PrecisionError`, never a silent pass or fail.
    """
    a._require_same_prime(b)
    if a.abs_prec < k or b.abs_prec < k:
        raise PrecisionError(
            f"congruence mod p^{k} requested but operands are only known "
            f"mod p^{a.abs_prec} and p^{b.abs_prec}"
        )
    d = a - b
    if d.is_zero:
        return True
    return d.valuation >= k


def teichmuller(a: int, p: int, N: int) -> PadicValue:
    """The (p-1)-th root of unity congruent to a mod p: a^(p^(N-1)) mod p^N."""
    check_prime(p)
    if a % p == 0:
        raise ValueError("Teichmuller lift requires gcd(a, p) = 1")
    if N < 1:
        raise PrecisionError("need at least one digit of precision")
    u = pow(a, p ** (N - 1), p**N)
    return PadicValue(p, 0, u, N)
