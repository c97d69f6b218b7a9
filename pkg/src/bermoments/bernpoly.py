"""Generalized Bernoulli polynomials in the centered normalization.

The two-parameter family computed here consists of the polynomials
A_k(x, nu) defined by the generating identity

    e^(x*t) * exp(nu * log((t/2)/sinh(t/2))) = sum_k A_k(x, nu) t^k / k!

They are degree k in x, degree floor(k/2) in nu, and odd or even in x
according to the parity of k.  Norlund's classical generalized Bernoulli
polynomials are the same family in shifted coordinates,
B_k^(nu)(x) = A_k(x - nu/2, nu); for nu = 1 one recovers the ordinary
Bernoulli polynomials B_k(x) = A_k(x - 1/2, 1) and numbers B_k = B_k(0).

Exact polynomial generation and evaluation stay in Fraction arithmetic.
Floating point appears only in the asymptotic normalizers (which converge
to cosine and sine waves as k grows) and in the Fourier partial sums of the
periodized polynomials.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from math import comb

from .polynomials import MPoly
from .series import theta_series

X = "x"
NU = "nu"


@lru_cache(maxsize=None)
def _zero_value_polys(order: int) -> tuple:
    """A_k(0, nu) for k = 0..order, as polynomials in nu.

    Expands exp(nu * theta) with nu symbolic; the factorial-normalized
    coefficients are exactly the values at x = 0.
    """
    nu = MPoly.var(NU)
    expanded = theta_series(order).scale(nu).exp()
    return tuple(expanded.moment(k) for k in range(order + 1))


def centered_bernoulli_at_zero(k: int) -> MPoly:
    """A_k(0, nu) as a polynomial in nu (zero for odd k)."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return _zero_value_polys(k)[k]


@lru_cache(maxsize=None)
def centered_bernoulli_poly(k: int) -> MPoly:
    """A_k(x, nu) as an exact polynomial in x and nu.

    Assembled from the x = 0 values via the binomial expansion of e^(x*t):
    A_k = sum_j C(k, 2j) A_2j(0, nu) x^(k-2j).
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    zeros = _zero_value_polys(k)
    x = MPoly.var(X)
    total = MPoly()
    for j in range(k // 2 + 1):
        total = total + comb(k, 2 * j) * zeros[2 * j] * x ** (k - 2 * j)
    return total


@lru_cache(maxsize=None)
def _zero_values_at(order: int, nu: Fraction) -> tuple:
    """A_k(0, nu) for k = 0..order at a fixed rational nu."""
    expanded = theta_series(order).scale(nu).exp()
    return tuple(expanded.moment(k) for k in range(order + 1))


def centered_bernoulli_value(k: int, x, nu) -> Fraction:
    """Exact value A_k(x, nu) at rational arguments.

    Evaluates through the x = 0 values at the given nu rather than through
    the symbolic polynomial, which keeps large k cheap.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    x = Fraction(x)
    zeros = _zero_values_at(k, Fraction(nu))
    total = Fraction(0)
    for j in range(k // 2 + 1):
        total += comb(k, 2 * j) * zeros[2 * j] * x ** (k - 2 * j)
    return total


def generalized_bernoulli_value(k: int, nu, x) -> Fraction:
    """Norlund's B_k^(nu)(x) = A_k(x - nu/2, nu), exactly."""
    nu = Fraction(nu)
    return centered_bernoulli_value(k, Fraction(x) - nu / 2, nu)


def periodize(x):
    """Reduce x to the period interval (-1/2, 1/2], exactly for Fractions."""
    half = Fraction(1, 2) if isinstance(x, (Fraction, int)) else 0.5
    y = x - math.floor(x + half)
    if y == -half:
        y = half
    return y


def _log_abs(value: Fraction) -> float:
    # math.log handles arbitrarily large ints, so this never overflows
    return math.log(abs(value.numerator)) - math.log(value.denominator)


def _log_gamma_signed(nu: float) -> tuple:
    """(log|Gamma(nu)|, sign of Gamma(nu)); nu must not be a nonpositive integer."""
    if nu <= 0 and nu == int(nu):
        raise ValueError("nu must not be a nonpositive integer")
    if nu > 0:
        return math.lgamma(nu), 1
    sign = -1 if math.floor(-nu) % 2 == 0 else 1
    return math.lgamma(nu), sign


def scaled_to_cosine(value: Fraction, k: int, nu: float) -> float:
    """(-1)^k * value * (2pi)^2k * Gamma(nu) / (2 * (2k)! * (2k)^(nu-1)).

    Log-domain scaling of an exact rational; this is the normalization under
    which both A_2k(x, nu) and the 2k-th Bernoulli moments converge to
    cosine expressions as k grows.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    log_gamma, gamma_sign = _log_gamma_signed(nu)
    if value == 0:
        return 0.0
    sign = 1 if value > 0 else -1
    log_mag = (
        _log_abs(value)
        + 2 * k * math.log(2 * math.pi)
        + log_gamma
        - math.log(2)
        - math.lgamma(2 * k + 1)
        - (nu - 1) * math.log(2 * k)
    )
    return (-1) ** k * sign * gamma_sign * math.exp(log_mag)


def cos_scaled_value(k: int, x, nu) -> float:
    """The cosine-normalized even value; tends to cos(2*pi*x) as k grows."""
    exact = centered_bernoulli_value(2 * k, Fraction(x), Fraction(nu))
    return scaled_to_cosine(exact, k, float(nu))


def sin_scaled_value(k: int, x, nu) -> float:
    """Odd-index analogue of :func:`cos_scaled_value`; tends to sin(2*pi*x).

    Normalizes A_(2k-1)(x, nu) by (-1)^(k-1) (2pi)^(2k-1) Gamma(nu) /
    (2 (2k-1)! (2k-1)^(nu-1)).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    m = 2 * k - 1
    nu_f = float(nu)
    log_gamma, gamma_sign = _log_gamma_signed(nu_f)
    exact = centered_bernoulli_value(m, Fraction(x), Fraction(nu))
    if exact == 0:
        return 0.0
    sign = 1 if exact > 0 else -1
    log_mag = (
        _log_abs(exact)
        + m * math.log(2 * math.pi)
        + log_gamma
        - math.log(2)
        - math.lgamma(m + 1)
        - (nu_f - 1) * math.log(m)
    )
    return (-1) ** (k - 1) * sign * gamma_sign * math.exp(log_mag)


def fourier_partial_sum(k: int, x: float, terms: int) -> float:
    """Partial Fourier sum of the 1-periodic extension of A_k(., 1).

    The periodization f_k agrees with A_k(x, 1) on (-1/2, 1/2].  Its Fourier
    series has harmonics (-1)^n / n^k against cos(2 pi n x) for even k and
    sin(2 pi n x) for odd k; uniform convergence needs k >= 2.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if terms < 1:
        raise ValueError("terms must be >= 1")
    two_pi = 2 * math.pi
    if k % 2 == 0:
        sign = (-1) ** (k // 2 - 1)
        trig = math.cos
    else:
        sign = (-1) ** ((k + 1) // 2)
        trig = math.sin
    acc = 0.0
    for n in range(1, terms + 1):
        acc += ((-1) ** n / n**k) * trig(two_pi * n * x)
    return sign * 2 * math.factorial(k) / two_pi**k * acc


def verify_multiplication_formula(k: int, nu: int, shift: int = 0) -> bool:
    """Check the order-reduction identity for integer nu >= 1 and k >= nu.

    It writes A_k(x, nu) through the lower polynomials A_j(x, nu), j < nu,
    paired with one-parameter polynomials evaluated at x + (nu-1)/2 - shift:

        A_k(x, nu) = C(k-1, nu-1) * sum_j (-1)^(nu-1-j) C(nu-1, j)
                     * k/(k-j) * A_j(x, nu) * A_(k-j)(x + (nu-1)/2 - shift, 1)

    Any shift in 0..nu-1 leaves the identity valid.  Returns True iff it
    holds as an exact polynomial identity in x.
    """
    if nu < 1 or k < nu:
        raise ValueError("need integer nu >= 1 and k >= nu")
    if not 0 <= shift <= nu - 1:
        raise ValueError("shift must lie in 0..nu-1")
    x = MPoly.var(X)
    lhs = centered_bernoulli_poly(k).subs({NU: nu})
    rhs = MPoly()
    for j in range(nu):
        left = centered_bernoulli_poly(j).subs({NU: nu})
        moved = centered_bernoulli_poly(k - j).subs(
            {NU: 1, X: x + Fraction(nu - 1, 2) - shift}
        )
        rhs = rhs + (-1) ** (nu - 1 - j) * comb(nu - 1, j) * Fraction(k, k - j) * left * moved
    rhs = comb(k - 1, nu - 1) * rhs
    return lhs == rhs
