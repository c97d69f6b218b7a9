"""Moment generating series and their Bernoulli-moment transforms.

For a spectrum the raw moments are V_2k = sum m_i (alpha_i - (n-1)/2)^2k,
collected into the even series V(t) = sum V_2k t^2k/(2k)!.  For a compact
complex manifold the analogous series runs over the signed Euler
characteristics chi_p at exponents p - n/2.

The Bernoulli moments at parameter nu are the coefficients of

    Gamma(V, nu) = V * exp(nu * log((t/2)/sinh(t/2))),

an invertible triangular transform of the V_2k with polynomial-in-nu
coefficients.  This module also provides the closed product forms for
quasihomogeneous and hyperbolic singularities and for a few standard
manifolds, each written so it can be cross-checked against the definitional
route.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Optional

from .bernpoly import centered_bernoulli_value, generalized_bernoulli_value
from .series import DEFAULT_ORDER, TruncatedSeries, bernoulli_numbers, theta_series
from .spectra import Spectrum, TpqrParams, WeightSystem

__all__ = [
    "MomentSeries",
    "ChiVector",
    "moments_of_spectrum",
    "bernoulli_moments",
    "bernoulli_moment_direct",
    "moments_qh_product",
    "gamma_qh_product_nplus1",
    "gamma_qh_product_spread",
    "q_exponent_poly",
    "q_factor_series",
    "gamma_tpqr_closed",
    "moments_of_chi",
    "gamma_pn_closed",
    "gamma_k3_closed",
    "gamma_genus_closed",
]


@dataclass(frozen=True)
class MomentSeries:
    """An even exact series of moments.

    ``nu`` is None for a raw moment series V and records the transform
    parameter for a Bernoulli-moment series Gamma(V, nu).
    """

    series: TruncatedSeries
    nu: Optional[Fraction] = None

    def __post_init__(self):
        if not self.series.is_even():
            raise ValueError("moment series must be even in t")
        if self.nu is not None:
            object.__setattr__(self, "nu", Fraction(self.nu))

    @property
    def order(self) -> int:
        return self.series.order

    @property
    def is_raw(self) -> bool:
        return self.nu is None

    def moment(self, k: int) -> Fraction:
        """The factorial-normalized coefficient (V_k, or Gamma_k)."""
        return self.series.moment(k)

    def __mul__(self, other: "MomentSeries") -> "MomentSeries":
        if not isinstance(other, MomentSeries):
            return NotImplemented
        if self.nu is None and other.nu is None:
            nu = None
        else:
            nu = (self.nu or Fraction(0)) + (other.nu or Fraction(0))
        return MomentSeries(self.series * other.series, nu)


def moments_of_spectrum(s: Spectrum, order: int = DEFAULT_ORDER) -> MomentSeries:
    """The series sum_i m_i exp(t*(alpha_i - (n-1)/2)); even by symmetry."""
    coeffs = []
    centered = s.centered()
    powers = [Fraction(1)] * len(centered)
    for k in range(order + 1):
        total = Fraction(0)
        for idx, (a, mult) in enumerate(centered):
            total += mult * powers[idx]
            powers[idx] *= a
        coeffs.append(total / factorial(k))
    return MomentSeries(TruncatedSeries(tuple(coeffs)))


def bernoulli_moments(v: MomentSeries, nu) -> MomentSeries:
    """Gamma(V, nu) = V * exp(nu * theta); v must be a raw moment series."""
    if not v.is_raw:
        raise ValueError("bernoulli_moments expects a raw moment series")
    nu = Fraction(nu)
    transform = theta_series(v.order).scale(nu).exp()
    return MomentSeries(v.series * transform, nu)


def bernoulli_moment_direct(s: Spectrum, nu, k: int) -> Fraction:
    """Gamma_2k(V(s), nu) summed pointwise over the spectrum.

    Equals the series route exactly: Gamma_2k = sum_j m_j A_2k(a_j, nu)
    with a_j the centered spectral numbers.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    nu = Fraction(nu)
    total = Fraction(0)
    for a, mult in s.centered():
        total += mult * centered_bernoulli_value(2 * k, a, nu)
    return total


# -- closed forms for quasihomogeneous singularities ---------------------------


def _qh_moment_factor(w: Fraction, order: int) -> TruncatedSeries:
    """Factor with Gamma-free coefficients w^2k * 2/(2k+1) * B_(2k+1)(1/(2w))."""
    coeffs = [Fraction(0)] * (order + 1)
    for two_k in range(0, order + 1, 2):
        value = (
            w**two_k
            * Fraction(2, two_k + 1)
            * generalized_bernoulli_value(two_k + 1, 1, Fraction(1, 2 * w))
        )
        coeffs[two_k] = value / factorial(two_k)
    return TruncatedSeries(tuple(coeffs))


def moments_qh_product(ws: WeightSystem, order: int = DEFAULT_ORDER) -> MomentSeries:
    """Raw moment series of a quasihomogeneous singularity as a weight product.

    One factor per weight, built from odd Bernoulli polynomial values; equals
    moments_of_spectrum(spectrum_from_weights(ws)).
    """
    product = TruncatedSeries.one(order)
    for w in ws.weights:
        product = product * _qh_moment_factor(w, order)
    return MomentSeries(product)


def gamma_weight_factor(w, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Per-weight factor with coefficients (-B_2k)(1 - w^(2k-1)).

    The k = 0 coefficient is 1/w - 1, so the product over a weight system has
    constant term mu.  The coefficient signs alternate as (-1)^k for any
    weight in (0, 1/2].
    """
    w = Fraction(w)
    bern = bernoulli_numbers(order + 1)
    coeffs = [Fraction(0)] * (order + 1)
    for two_k in range(0, order + 1, 2):
        coeffs[two_k] = (-bern[two_k]) * (1 - w ** (two_k - 1)) / factorial(two_k)
    return TruncatedSeries(tuple(coeffs))


def gamma_qh_product_nplus1(ws: WeightSystem, order: int = DEFAULT_ORDER) -> MomentSeries:
    """Bernoulli moments of a quasihomogeneous singularity at nu = n + 1.

    Product over the weights of :func:`gamma_weight_factor`; every factor
    coefficient has sign (-1)^k, which settles the strict sign prediction in
    the quasihomogeneous case.
    """
    product = TruncatedSeries.one(order)
    for w in ws.weights:
        product = product * gamma_weight_factor(w, order)
    return MomentSeries(product, Fraction(len(ws.weights)))


def q_exponent_poly(k: int):
    """The weight polynomial 1 - 2w + w^2k - (1-w)^2k driving the Q factor.

    Returns a polynomial in the variable w.  It vanishes at 0, 1/2, 1; for
    k >= 2 these are its only zeros and it is positive exactly on
    (0, 1/2) and (1, +inf).
    """
    from .polynomials import MPoly

    if k < 1:
        raise ValueError("k must be >= 1")
    w = MPoly.var("w")
    return 1 - 2 * w + w ** (2 * k) - (1 - w) ** (2 * k)


def q_factor_series(w, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """The one-weight factor Q(t, w) of the spread-normalized moments.

    Q(t, w) = exp(sum_k (-B_2k/(2k)) * p_2k(w) * t^2k/(2k)!) with p_2k the
    polynomial of :func:`q_exponent_poly`.  Q_0 = 1 and Q_2 = 0.  `w` may be
    a Fraction or a polynomial, in which case the expansion is symbolic.
    """
    if isinstance(w, (int, Fraction)):
        w = Fraction(w)
    bern = bernoulli_numbers(order + 1)
    exponent = [w * 0] * (order + 1)
    for two_k in range(2, order + 1, 2):
        p = 1 - 2 * w + w**two_k - (1 - w) ** two_k
        exponent[two_k] = Fraction(-1, two_k) * bern[two_k] * p / factorial(two_k)
    return TruncatedSeries(tuple(exponent)).exp()


def gamma_qh_product_spread(ws: WeightSystem, order: int = DEFAULT_ORDER) -> MomentSeries:
    """Bernoulli moments of a quasihomogeneous singularity at nu = spread.

    mu times the product of the Q factors of the weights; in particular the
    t^2 coefficient vanishes identically.
    """
    product = TruncatedSeries.one(order)
    for w in ws.weights:
        product = product * q_factor_series(w, order)
    return MomentSeries(product.scale(ws.mu), ws.spread)


def gamma_tpqr_closed(params: TpqrParams, order: int = DEFAULT_ORDER) -> MomentSeries:
    """Bernoulli moments of T_{p,q,r} at nu = 1 (its spectral spread).

    Gamma_2k = B_2k * (-1 + p^(1-2k) + q^(1-2k) + r^(1-2k)).
    """
    bern = bernoulli_numbers(order + 1)
    coeffs = [Fraction(0)] * (order + 1)
    for two_k in range(0, order + 1, 2):
        bracket = Fraction(-1)
        for m in (params.p, params.q, params.r):
            bracket += Fraction(m) ** (1 - two_k)
        coeffs[two_k] = bern[two_k] * bracket / factorial(two_k)
    return MomentSeries(TruncatedSeries(tuple(coeffs)), Fraction(1))


# -- compact complex manifolds ---------------------------------------------------


@dataclass(frozen=True)
class ChiVector:
    """The signed Euler characteristics (chi_0, ..., chi_n) of a manifold."""

    chi: tuple

    def __post_init__(self):
        values = tuple(int(c) for c in self.chi)
        if not values:
            raise ValueError("need at least chi_0")
        n = len(values) - 1
        for p, c in enumerate(values):
            if c != values[n - p]:
                raise ValueError("Serre symmetry chi_p = chi_(n-p) fails")
        object.__setattr__(self, "chi", values)

    @property
    def n(self) -> int:
        return len(self.chi) - 1


def moments_of_chi(chi: ChiVector, order: int = DEFAULT_ORDER) -> MomentSeries:
    """The series sum_p chi_p exp(t*(p - n/2)); even by Serre symmetry."""
    n = chi.n
    coeffs = []
    exps = [Fraction(2 * p - n, 2) for p in range(n + 1)]
    powers = [Fraction(1)] * (n + 1)
    for k in range(order + 1):
        total = Fraction(0)
        for p, c in enumerate(chi.chi):
            total += c * powers[p]
            powers[p] *= exps[p]
        coeffs.append(total / factorial(k))
    return MomentSeries(TruncatedSeries(tuple(coeffs)))


def gamma_pn_closed(n: int, order: int = DEFAULT_ORDER) -> MomentSeries:
    """Bernoulli moments of projective n-space at nu = n.

    Gamma_2k = -2/(2k+1) * B_(2k+1)^(n+1)(0), the odd generalized Bernoulli
    numbers of order n + 1.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    coeffs = [Fraction(0)] * (order + 1)
    for two_k in range(0, order + 1, 2):
        value = Fraction(-2, two_k + 1) * generalized_bernoulli_value(two_k + 1, n + 1, 0)
        coeffs[two_k] = value / factorial(two_k)
    return MomentSeries(TruncatedSeries(tuple(coeffs)), Fraction(n))


def gamma_k3_closed(order: int = DEFAULT_ORDER) -> MomentSeries:
    """Bernoulli moments of a K3 surface at nu = 2.

    Gamma_2k = -4/(2k+1) * B_(2k+1)^(3)(0) + 18 * B_2k^(2)(1); the signed
    values vanish at k = 1 and equal 24(2k-1)|B_2k| afterwards.
    """
    coeffs = [Fraction(0)] * (order + 1)
    for two_k in range(0, order + 1, 2):
        value = Fraction(-4, two_k + 1) * generalized_bernoulli_value(
            two_k + 1, 3, 0
        ) + 18 * generalized_bernoulli_value(two_k, 2, 1)
        coeffs[two_k] = value / factorial(two_k)
    return MomentSeries(TruncatedSeries(tuple(coeffs)), Fraction(2))


def gamma_genus_closed(g: int, order: int = DEFAULT_ORDER) -> MomentSeries:
    """Bernoulli moments of a genus-g Riemann surface at nu = 1.

    Gamma_2k = (1 - g) * 2 * B_2k.
    """
    bern = bernoulli_numbers(order + 1)
    coeffs = [Fraction(0)] * (order + 1)
    for two_k in range(0, order + 1, 2):
        coeffs[two_k] = (1 - g) * 2 * bern[two_k] / factorial(two_k)
    return MomentSeries(TruncatedSeries(tuple(coeffs)), Fraction(1))
