"""Integer q-expansions of Dedekind eta products.

eta(z) = q^(1/24) prod_(n>=1) (1 - q^n), so a product prod eta(s_i z)^(e_i)
starts at q^(sum s_i e_i / 24) (which must be an integer) and its tail is a
polynomial product expanded by repeated multiplication with sparse binomials
(1 - q^(s n)).  Coefficients are exact integers throughout.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from fractions import Fraction


@dataclass
class QSeries:
    """Truncated integer q-series: coeffs[k] is the coefficient of
    q^(offset + k), valid through q^truncation inclusive."""

    offset: int
    coeffs: list[int]
    truncation: int = field(default=-1)

    def __post_init__(self) -> None:
        if self.truncation < 0:
            self.truncation = self.offset + len(self.coeffs) - 1
        expected = self.truncation - self.offset + 1
        if len(self.coeffs) != expected:
            raise ValueError("coefficient window does not match truncation")

    def coefficient(self, n: int) -> int:
        if n > self.truncation:
            raise IndexError(f"coefficient of q^{n} is beyond truncation {self.truncation}")
        if n < self.offset:
            return 0
        return self.coeffs[n - self.offset]

    def __add__(self, other: "QSeries") -> "QSeries":
        off = min(self.offset, other.offset)
        trunc = min(self.truncation, other.truncation)
        out = [0] * (trunc - off + 1)
        for src in (self, other):
            for k, c in enumerate(src.coeffs):
                n = src.offset + k
                if n <= trunc:
                    out[n - off] += c
        return QSeries(off, out, trunc)

    def __mul__(self, other: "QSeries") -> "QSeries":
        off = self.offset + other.offset
        trunc = min(self.truncation + other.offset, other.truncation + self.offset)
        out = [0] * (trunc - off + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    k = i + j
                    if off + k > trunc:
                        break
                    out[k] += a * b
        return QSeries(off, out, trunc)

    def scale(self, c: int) -> "QSeries":
        return QSeries(self.offset, [c * a for a in self.coeffs], self.truncation)


def eta_product(factors, truncation: int) -> QSeries:
    """prod_i eta(scale_i * z)^(exponent_i) up to q^truncation.

    The combined leading exponent sum(scale*exponent)/24 must be an integer;
    negative exponents are rejected (never needed here).
    """
    if truncation < 1:
        raise ValueError("truncation must be >= 1")
    factors = [(int(s), int(e)) for s, e in factors]
    for s, e in factors:
        if s < 1:
            raise ValueError("eta scale must be a positive integer")
        if e < 0:
            raise ValueError("negative eta exponents are not supported")
    lead = sum(Fraction(s * e, 24) for s, e in factors)
    if lead.denominator != 1:
        raise ValueError(f"leading exponent {lead} is not an integer")
    offset = int(lead)
    length = truncation - offset + 1
    if length < 1:
        raise ValueError("truncation is below the leading term")
    co = [0] * length
    co[0] = 1
    for s, e in factors:
        n = 1
        while s * n < length:
            k = s * n
            for _ in range(e):
                for i in range(length - 1, k - 1, -1):
                    co[i] -= co[i - k]
            n += 1
    return QSeries(offset, co, truncation)


def gamma_coeffs(truncation: int) -> QSeries:
    """The weight-4 level-8 form q prod (1-q^(2n))^4 (1-q^(4n))^4."""
    return eta_product([(2, 4), (4, 4)], truncation)


def rv_form_coeffs(truncation: int) -> QSeries:
    """The weight-4 level-25 combination f1 + 5 f2 + 20 f3 + 25 f4 + 25 f5
    with f_i = eta(z)^(5-i) eta(5z)^4 eta(25z)^(i-1); f_i starts at q^i."""
    weights = (1, 5, 20, 25, 25)
    total = QSeries(1, [0] * truncation, truncation)
    for i in range(1, 6):
        if i > truncation:
            continue  # f_i starts at q^i, beyond the window
        fi = eta_product([(1, 5 - i), (5, 4), (25, i - 1)], truncation)
        if fi.offset != i:
            raise AssertionError(f"f_{i} leading power {fi.offset} != {i}")
        total = total + fi.scale(weights[i - 1])
    return total


def hecke_bound_ok(series: QSeries, p: int) -> bool:
    """Deligne bound for a weight-4 form: |a(p)| <= 2 p^(3/2)."""
    return series.coefficient(p) ** 2 <= 4 * p**3


def write_coefficients_csv(series: QSeries, fileobj) -> None:
    """Two columns n, coefficient from the leading power to the truncation."""
    w = csv.writer(fileobj)
    w.writerow(["n", "coefficient"])
    for n in range(series.offset, series.truncation + 1):
        w.writerow([n, series.coefficient(n)])
