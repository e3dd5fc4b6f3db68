"""Rising factorials and truncated generalized hypergeometric series.

The truncated series

    rFs[a_1,...,a_r; b_1,...,b_s | z]_m = sum_{k=0}^m prod (a_i)_k / prod (b_j)_k * z^k / k!

is accumulated over exact rationals via the term recurrence
term_k = term_(k-1) * prod(a_i + k - 1) * z / (k * prod(b_j + k - 1)) and only
then reduced p-adically, so p-divisible numerators along the way cost nothing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .padic import PadicValue, rational_to_padic


def rising_factorial(a, n: int) -> Fraction:
    """(a)_0 = 1 and (a)_n = a(a+1)...(a+n-1)."""
    if n < 0:
        raise ValueError("rising factorial needs n >= 0")
    a = Fraction(a)
    out = Fraction(1)
    for k in range(n):
        out *= a + k
    return out


@dataclass(frozen=True)
class HypParams:
    top: tuple[Fraction, ...]
    bottom: tuple[Fraction, ...]
    z: Fraction
    truncation: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "top", tuple(Fraction(a) for a in self.top))
        object.__setattr__(self, "bottom", tuple(Fraction(b) for b in self.bottom))
        object.__setattr__(self, "z", Fraction(self.z))
        if self.truncation < 0:
            raise ValueError("truncation must be >= 0")
        for b in self.bottom:
            if b <= 0 and b.denominator == 1:
                raise ValueError("bottom parameters may not be zero or negative integers")


def truncated_hyp_exact(params: HypParams) -> Fraction:
    """The truncated series as an exact rational."""
    total = Fraction(1)
    term = Fraction(1)
    for k in range(1, params.truncation + 1):
        num = Fraction(1)
        for a in params.top:
            num *= a + k - 1
        den = Fraction(k)
        for b in params.bottom:
            den *= b + k - 1
        term = term * num * params.z / den
        total += term
    return total


def truncated_hyp(params: HypParams, p: int, N: int) -> PadicValue:
    """The truncated series reduced into Z_p mod p^N.

    Requires p-integral parameters and truncation <= p - 1 so that no k!
    picks up a factor of p.
    """
    for q in (*params.top, *params.bottom, params.z):
        if q.denominator % p == 0:
            raise ValueError("parameters must be p-integral")
    if params.truncation > p - 1:
        raise ValueError("truncation beyond p - 1 is outside the guaranteed range")
    return rational_to_padic(truncated_hyp_exact(params), p, N)
