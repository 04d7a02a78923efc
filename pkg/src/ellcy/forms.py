"""Generators for the specific modular objects the computation needs.

Everything here returns a :class:`~ellcy.series.QSeries` truncated to a
requested number of terms counted from the leading exponent.  Two of the
generators are deliberately redundant: the E8 theta series is computed by
exhaustive lattice-vector counting and never via the weight-4 Eisenstein
series, so that the classical identity Theta_E8 = E_4 is available as a
cross-check of two unrelated algorithms.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .series import QSeries


def sigma(k: int, n: int) -> int:
    """Divisor power sum: sum of d^k over the divisors d of n."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    total = 0
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            total += d ** k
            e = n // d
            if e != d:
                total += e ** k
    return total


def eta_power(e: int, nterms: int) -> QSeries:
    """q^(e/24) * prod_{n>=1} (1 - q^n)^e, keeping nterms terms.

    The exponent denominator is 24/gcd(e, 24): 1 for eta^24 (= Delta)
    and 2 for eta^12.
    """
    if e < 2 or e % 2:
        raise ValueError("the exponent must be a positive even integer")
    if nterms < 1:
        raise ValueError("nterms must be positive")
    # product part, integer exponents 0..nterms-1
    cs = [Fraction(0)] * nterms
    cs[0] = Fraction(1)
    for n in range(1, nterms):
        for _ in range(e):
            # multiply by (1 - q^n) in place
            for i in range(nterms - 1, n - 1, -1):
                cs[i] -= cs[i - n]
    exp_den = 24 // math.gcd(e, 24)
    shift = e * exp_den // 24  # e/24 in units of 1/exp_den
    if exp_den == 1:
        return QSeries(cs, shift, shift + nterms, 1)
    scaled = [Fraction(0)] * (nterms * exp_den)
    scaled[::exp_den] = cs
    return QSeries(scaled, shift, shift + nterms * exp_den, exp_den)


def delta(nterms: int) -> QSeries:
    """The discriminant cusp form Delta = eta^24 = q - 24q^2 + ..."""
    return eta_power(24, nterms)


def inverse_delta(nterms: int) -> QSeries:
    """1/Delta = q^-1 + 24 + 324q + 3200q^2 + ..., nterms terms."""
    return delta(nterms).invert()


def inverse_sqrt_delta(nterms: int) -> QSeries:
    """1/sqrt(Delta) = q^(-1/2)(1 + 12q + ...), nterms terms."""
    return delta(nterms).sqrt().invert()


def eisenstein(k: int, nterms: int) -> QSeries:
    """Eisenstein series of weight k in {4, 6, 10}.

    E4 and E6 come straight from divisor sums; E10 is returned as the
    product E4 * E6, exactly as it enters the Noether-Lefschetz formula.
    """
    if nterms < 1:
        raise ValueError("nterms must be positive")
    if k == 4:
        cs = [Fraction(1)] + [Fraction(240 * sigma(3, n))
                              for n in range(1, nterms)]
        return QSeries(cs, 0, nterms)
    if k == 6:
        cs = [Fraction(1)] + [Fraction(-504 * sigma(5, n))
                              for n in range(1, nterms)]
        return QSeries(cs, 0, nterms)
    if k == 10:
        return eisenstein(4, nterms) * eisenstein(6, nterms)
    raise ValueError(f"unsupported Eisenstein weight {k}; expected 4, 6 or 10")


@lru_cache(maxsize=None)
def _half_norm_profiles(parity: int, bound: int) -> dict[tuple[int, int], int]:
    """Count 4-tuples of integers of the given parity by (norm, sum mod 4).

    Works in doubled coordinates y = 2x, so `norm` here is sum(y_i^2)
    and `bound` is its inclusive cap.  Exhaustive enumeration.
    """
    lim = math.isqrt(bound)
    if parity == 1:
        vals = [y for y in range(-lim, lim + 1) if y % 2]
    else:
        vals = [y for y in range(-lim, lim + 1) if y % 2 == 0]
    counts: dict[tuple[int, int], int] = {}
    for y1 in vals:
        n1 = y1 * y1
        if n1 > bound:
            continue
        for y2 in vals:
            n2 = n1 + y2 * y2
            if n2 > bound:
                continue
            for y3 in vals:
                n3 = n2 + y3 * y3
                if n3 > bound:
                    continue
                for y4 in vals:
                    n4 = n3 + y4 * y4
                    if n4 > bound:
                        continue
                    key = (n4, (y1 + y2 + y3 + y4) % 4)
                    counts[key] = counts.get(key, 0) + 1
    return counts


@lru_cache(maxsize=None)
def e8_norm_counts(max_half_norm: int) -> tuple[int, ...]:
    """Number of E8 lattice vectors of each even norm, by enumeration.

    Entry m is the count of vectors with positive-definite norm 2m, for
    0 <= m <= max_half_norm.  Vectors are modelled in the standard
    coordinates (all-integer or all-half-integer 8-tuples with even
    coordinate sum) and counted by exhaustively enumerating each half of
    the coordinates and convolving the two halves; no modular-forms input
    is used anywhere.
    """
    if max_half_norm < 0:
        raise ValueError("max_half_norm must be non-negative")
    bound = 8 * max_half_norm  # cap on sum(y_i^2) with y = 2x
    counts = [0] * (max_half_norm + 1)
    for parity in (0, 1):
        halves = _half_norm_profiles(parity, bound)
        for (na, sa), ca in halves.items():
            for (nb, sb), cb in halves.items():
                if (na + nb) % 8:
                    continue
                if (sa + sb) % 4:
                    continue  # coordinate sum of x must be even
                m = (na + nb) // 8
                if m <= max_half_norm:
                    counts[m] += ca * cb
    return tuple(counts)


def theta_e8(nterms: int) -> QSeries:
    """Theta series of the E8 lattice, by exhaustive vector counting.

    Coefficient of q^m is the number of lattice vectors of norm 2m.
    Independent of :func:`eisenstein` by construction.
    """
    if nterms < 1:
        raise ValueError("nterms must be positive")
    counts = e8_norm_counts(nterms - 1)
    return QSeries([Fraction(c) for c in counts], 0, nterms)


class YauZaslowTable:
    """Reduced genus-0 K3 invariants r_h, read off from 1/Delta.

    r_h is the coefficient of q^(h-1) in 1/Delta; the table starts
    1, 24, 324, 3200, ...
    """

    def __init__(self, r: list[Fraction]):
        self.r = list(r)
        self.hmax = len(r) - 1

    def __getitem__(self, h: int) -> Fraction:
        if not 0 <= h <= self.hmax:
            raise IndexError(f"h={h} outside the tabulated range 0..{self.hmax}")
        return self.r[h]

    def __len__(self) -> int:
        return self.hmax + 1


def yau_zaslow(hmax: int) -> YauZaslowTable:
    """Tabulate the reduced K3 invariants r_0, ..., r_hmax."""
    if hmax < 0:
        raise ValueError("hmax must be non-negative")
    inv = inverse_delta(hmax + 1)
    return YauZaslowTable([inv.coeff_at(h - 1) for h in range(hmax + 1)])
