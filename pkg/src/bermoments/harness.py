"""Sign-conjecture checks, threshold search, and asymptotic traces.

Two sign predictions are tested exactly, coefficient by coefficient:

* (W): (-1)^k Gamma_2k(V, n+1) > 0 for every k, and
* (S): (-1)^k Gamma_2k(V, spread) >= 0 with spread = alpha_mu - alpha_1.

Because the transform is monotone in nu (passing at some nu implies passing
at every larger nu), the smallest admissible nu for a window of indices can
be bracketed by exact rational bisection.

The trace sequence normalizes the exact Bernoulli moments the same way the
polynomials are normalized in the cosine limit; it converges to the cosine
sum of the centered spectrum, which for a genuine singularity is the signed
monodromy trace, namely 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .bernpoly import scaled_to_cosine
from .moments import bernoulli_moments, moments_of_spectrum
from .series import bernoulli_numbers
from .spectra import Spectrum

__all__ = [
    "ConjectureReport",
    "check_conjecture",
    "nu_threshold",
    "trace_convergence",
    "trace_limit",
    "curve_correction_terms",
    "curve_correction_coefficient",
]


@dataclass(frozen=True)
class ConjectureReport:
    """Per-index verdicts of a sign-conjecture check."""

    mode: str
    nu: Fraction
    k_max: int
    rows: tuple  # (k, Gamma_2k, sign_ok)

    def __post_init__(self):
        if self.mode not in ("W", "S"):
            raise ValueError("mode must be 'W' or 'S'")

    @property
    def overall(self) -> bool:
        return all(ok for _, _, ok in self.rows)


def conjecture_nu(s: Spectrum, mode: str) -> Fraction:
    """The nu used by each conjecture: n+1 for (W), the spread for (S)."""
    if mode == "W":
        return Fraction(s.n + 1)
    if mode == "S":
        return s.spread
    raise ValueError("mode must be 'W' or 'S'")


def check_conjecture(s: Spectrum, mode: str, k_max: int) -> ConjectureReport:
    """Exact signs of (-1)^k Gamma_2k for k = 0..k_max.

    Mode 'W' demands strict positivity, mode 'S' allows zeros.  Exact
    rational comparison leaves no tolerance questions.
    """
    if k_max < 0:
        raise ValueError("k_max must be >= 0")
    nu = conjecture_nu(s, mode)
    gamma = bernoulli_moments(moments_of_spectrum(s, 2 * k_max), nu)
    rows = []
    for k in range(k_max + 1):
        value = gamma.moment(2 * k)
        signed = (-1) ** k * value
        ok = signed > 0 if mode == "W" else signed >= 0
        rows.append((k, value, ok))
    return ConjectureReport(mode, nu, k_max, tuple(rows))


def nu_threshold(
    s: Spectrum,
    k: int,
    nu_hi,
    steps: int,
    k_cap: int | None = None,
) -> Fraction:
    """Upper estimate of the smallest nu with nonnegative signs from index k up.

    A probe at nu passes when (-1)^k' Gamma_2k'(V, nu) >= 0 for every
    k <= k' <= k_cap (k_cap defaults to k).  Passing is monotone in nu, so
    bisection between 0 and nu_hi brackets the threshold; the returned value
    is a passing endpoint within nu_hi / 2**steps of the infimum over the
    probed window.  It never claims to be the true infimum.
    """
    if steps < 1:
        raise ValueError("steps must be >= 1")
    if k < 0:
        raise ValueError("k must be >= 0")
    nu_hi = Fraction(nu_hi)
    if nu_hi <= 0:
        raise ValueError("nu_hi must be positive")
    cap = k if k_cap is None else k_cap
    if cap < k:
        raise ValueError("k_cap must be >= k")
    v = moments_of_spectrum(s, 2 * cap)

    def passes(nu: Fraction) -> bool:
        gamma = bernoulli_moments(v, nu)
        return all(
            (-1) ** kk * gamma.moment(2 * kk) >= 0 for kk in range(k, cap + 1)
        )

    if not passes(nu_hi):
        raise ValueError(f"the sign property already fails at nu_hi = {nu_hi}")
    if passes(Fraction(0)):
        return Fraction(0)
    lo, hi = Fraction(0), nu_hi
    for _ in range(steps):
        mid = (lo + hi) / 2
        if passes(mid):
            hi = mid
        else:
            lo = mid
    return hi


def trace_convergence(s: Spectrum, nu, k_max: int) -> list:
    """The cosine-normalized Bernoulli moments for k = 1..k_max, as floats.

    Entry k is (-1)^k Gamma_2k * (2pi)^2k Gamma(nu) / (2 (2k)! (2k)^(nu-1)),
    computed from the exact rational moment and scaled in the log domain.
    The sequence approaches :func:`trace_limit`.
    """
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    nu = Fraction(nu)
    if nu <= 0:
        raise ValueError("nu must be positive")
    gamma = bernoulli_moments(moments_of_spectrum(s, 2 * k_max), nu)
    return [
        scaled_to_cosine(gamma.moment(2 * k), k, float(nu)) for k in range(1, k_max + 1)
    ]


def trace_limit(s: Spectrum) -> float:
    """sum m_j cos(2 pi a_j) over the centered spectrum; 1 for singularities."""
    return sum(float(m) * math.cos(2 * math.pi * float(a)) for a, m in s.centered())


# -- sign mechanics of the curve correction term --------------------------------


def _geometric_sum(base: Fraction, terms: int) -> Fraction:
    total = Fraction(0)
    power = Fraction(1)
    for _ in range(terms):
        total += power
        power *= base
    return total


def curve_correction_coefficient(k: int, n1: int, n2: int, w1: int, w2: int) -> Fraction:
    """2k-th Bernoulli moment of the curve correction block, directly.

    The block is (P_(w2) - P_(w1*n1*n2)) * P_(n2) in the generating-function
    picture, with P_m the geometric block of denominator m, transformed at
    nu = 2.  The double sum below is its coefficient formula:

      sum_i C(2k,2i) B_2i B_2(k-i) ((w1 n1 n2)^(1-2i) - w2^(1-2i))
                                   (1 - n2^(1-2(k-i)))
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    bern = bernoulli_numbers(2 * k + 1)
    a = Fraction(w1 * n1 * n2)
    total = Fraction(0)
    for i in range(k + 1):
        total += (
            comb(2 * k, 2 * i)
            * bern[2 * i]
            * bern[2 * (k - i)]
            * (a ** (1 - 2 * i) - Fraction(w2) ** (1 - 2 * i))
            * (1 - Fraction(n2) ** (1 - 2 * (k - i)))
        )
    return total


def curve_correction_terms(k: int, n1: int, n2: int, w1: int, w2: int) -> list:
    """The factored form of :func:`curve_correction_coefficient`.

    Returns the list of exact terms whose sum, multiplied by the positive
    edge determinant delta = w2 - w1*n1*n2 and by n2 - 1, reproduces the
    coefficient.  Every term carries the sign (-1)^k, which is what makes
    the correction compatible with the strict sign prediction.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    bern = bernoulli_numbers(2 * k + 1)
    a = Fraction(w1 * n1 * n2)
    w2f = Fraction(w2)
    n2f = Fraction(n2)

    def mixed_sum(i: int) -> Fraction:
        # sum_{j=0}^{2(i-1)} w2^j * (w1 n1 n2)^(2(i-1)-j)
        total = Fraction(0)
        for j in range(2 * i - 1):
            total += w2f**j * a ** (2 * (i - 1) - j)
        return total

    terms = [
        -bern[2 * k] * _geometric_sum(n2f, 2 * k - 1) / n2f ** (2 * k - 1),
        -bern[2 * k] * mixed_sum(k) / (a * w2f) ** (2 * k - 1),
    ]
    for i in range(1, k):
        terms.append(
            comb(2 * k, 2 * i)
            * bern[2 * i]
            * bern[2 * (k - i)]
            * mixed_sum(i)
            / (a * w2f) ** (2 * i - 1)
            * _geometric_sum(n2f, 2 * (k - i) - 1)
            / n2f ** (2 * (k - i) - 1)
        )
    return terms
