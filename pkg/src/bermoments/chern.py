"""Moments of compact complex manifolds from Chern numbers.

Hirzebruch-Riemann-Roch turns the moment series of a manifold into an
integral of a universal expression in the Chern roots.  Expanding that
expression in elementary symmetric polynomials produces, for every k >= 1
and 0 <= j <= 2k-1, a polynomial q_kj(nu, y_1..y_j), quasihomogeneous of
degree j when y_i carries weight i, such that

    Gamma_2k(V(X), nu) = sum_j  integral_X q_kj(n - nu, c_1..c_j) * c_(n-j)

and in particular V_2k is the value at nu = 0.  The construction goes
through a Todd-like exponential with symmetric-polynomial coefficients and
a twist by exp(-nu * theta); all intermediate polynomials are stable in the
number m of variables once their weighted degree is at most m.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .polynomials import MPoly
from .series import TruncatedSeries, bernoulli_numbers, theta_series

__all__ = [
    "ChernData",
    "power_sum_in_elementary",
    "shift_difference_poly",
    "todd_factor_poly",
    "twisted_todd_poly",
    "d_poly",
    "chern_moment_poly",
    "moment_from_chern",
    "bernoulli_moment_from_chern",
    "chern_data_pn",
    "chern_data_k3",
    "chern_data_genus",
    "builtin_chern_data",
    "builtin_chi_vector",
    "partitions_of",
]

NU = "nu"


def _y(i: int) -> MPoly:
    return MPoly.var(f"y{i}")


def _mono_weight(mono) -> int:
    total = 0
    for name, e in mono:
        if name.startswith("y"):
            total += int(name[1:]) * e
    return total


def graded_part(poly: MPoly, weight: int) -> MPoly:
    """The part of `poly` whose y-monomials have weighted degree `weight`."""
    return MPoly.from_terms(
        (mono, c) for mono, c in poly.terms() if _mono_weight(mono) == weight
    )


def weight_truncate(poly: MPoly, cap: int) -> MPoly:
    """Drop y-monomials of weighted degree above `cap`."""
    return MPoly.from_terms(
        (mono, c) for mono, c in poly.terms() if _mono_weight(mono) <= cap
    )


def y_weight_degree(poly: MPoly) -> int:
    """The largest weighted y-degree among the monomials (0 for zero)."""
    return max((_mono_weight(mono) for mono, _ in poly.terms()), default=0)


@lru_cache(maxsize=None)
def power_sum_in_elementary(r: int, m: int) -> MPoly:
    """The power sum p_r(x_1..x_m) written in the elementary symmetric y_i.

    Newton's identity p_r = sum_{i<r} (-1)^(i-1) y_i p_(r-i) + (-1)^(r-1) r y_r,
    with y_i = 0 for i > m.
    """
    if r < 1 or m < 1:
        raise ValueError("need r >= 1 and m >= 1")
    sums = [MPoly.const(m)]  # p_0 = m
    for s in range(1, r + 1):
        acc = MPoly()
        for i in range(1, s):
            if i <= m:
                acc = acc + (-1) ** (i - 1) * _y(i) * sums[s - i]
        if s <= m:
            acc = acc + (-1) ** (s - 1) * s * _y(s)
        sums.append(acc)
    return sums[r]


def shift_difference_poly(k: int, j: int, m: int) -> MPoly:
    """Coefficient of t^j in sum_i (x_i^2k - (x_i - t)^2k + t^2k), in the y_i.

    Equals (-1)^(j+1) C(2k, j) p_(2k-j); quasihomogeneous of weighted degree
    2k - j, and independent of m once 2k - j <= m.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if not 1 <= j <= 2 * k - 1:
        raise ValueError("j must lie in 1..2k-1")
    return (-1) ** (j + 1) * comb(2 * k, j) * power_sum_in_elementary(2 * k - j, m)


@lru_cache(maxsize=None)
def _todd_exponent(m: int, t_order: int, cap: int) -> TruncatedSeries:
    """sum_i [theta(x_i) - theta(x_i - t) + theta(t)] as a series in t.

    Coefficients are symmetric polynomials, truncated at weighted degree
    `cap`.  Each t^j coefficient receives finitely many contributions because
    the weight of the (k', j) term is exactly 2k' - j.
    """
    bern = bernoulli_numbers(t_order + cap + 1)
    coeffs = [MPoly() for _ in range(t_order + 1)]
    if m > 0:
        for kp in range(1, (t_order + cap) // 2 + 1):
            factor = Fraction(-1, 2 * kp) * bern[2 * kp] / factorial(2 * kp)
            j_lo = max(1, 2 * kp - cap)
            j_hi = min(2 * kp - 1, t_order)
            for j in range(j_lo, j_hi + 1):
                coeffs[j] = coeffs[j] + factor * shift_difference_poly(kp, j, m)
    return TruncatedSeries(tuple(coeffs))


@lru_cache(maxsize=None)
def _todd_series(m: int, t_order: int, cap: int) -> TruncatedSeries:
    expanded = _todd_exponent(m, t_order, cap).exp()
    return TruncatedSeries(tuple(weight_truncate(MPoly() + c, cap) for c in expanded.coeffs))


@lru_cache(maxsize=None)
def _twisted_series(m: int, t_order: int, cap: int) -> TruncatedSeries:
    nu = MPoly.var(NU)
    twist = theta_series(t_order).scale(-1 * nu).exp()
    product = _todd_series(m, t_order, cap) * twist
    return TruncatedSeries(tuple(weight_truncate(MPoly() + c, cap) for c in product.coeffs))


def todd_factor_poly(k: int, l: int, m: int) -> MPoly:
    """b_kl: the weight-l part of the t^k coefficient of the Todd exponential."""
    if k < 1 or l < 1:
        raise ValueError("need k >= 1 and l >= 1")
    series = _todd_series(m, k, l)
    return graded_part(MPoly() + series.coeff(k), l)


def twisted_todd_poly(k: int, l: int, m: int) -> MPoly:
    """c_kl: like :func:`todd_factor_poly` but twisted by exp(-nu * theta).

    c_k0 = A_k(0, -nu)/k! and c_0l = 0 for l >= 1; for k, l >= 1 it equals
    sum_j A_j(0, -nu)/j! * b_(k-j),l.
    """
    if k < 0 or l < 0:
        raise ValueError("need k >= 0 and l >= 0")
    series = _twisted_series(m, k, l)
    return graded_part(MPoly() + series.coeff(k), l)


def d_poly(k: int, j: int, m: int) -> MPoly:
    """k! (-1)^j c_(k-j),j: the bookkeeping polynomials of the construction."""
    if k < 1 or not 0 <= j <= k - 1:
        raise ValueError("need k >= 1 and 0 <= j <= k-1")
    return factorial(k) * (-1) ** j * twisted_todd_poly(k - j, j, m)


@lru_cache(maxsize=None)
def chern_moment_poly(k: int, j: int) -> MPoly:
    """q_kj(nu, y_1..y_j): the universal Chern-number coefficient polynomial.

    Quasihomogeneous of weighted degree j in the y_i; the nu-degree is k for
    j = 0 and at most k - 1 - floor(j/2) otherwise.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if not 0 <= j <= 2 * k - 1:
        raise ValueError("j must lie in 0..2k-1")
    return d_poly(2 * k, j, j if j >= 1 else 1)


class ChernData:
    """Chern numbers of an n-dimensional manifold, indexed by partitions of n."""

    def __init__(self, n: int, numbers: dict):
        if n < 1:
            raise ValueError("n must be >= 1")
        canonical = {}
        for partition, value in numbers.items():
            key = tuple(sorted((int(p) for p in partition), reverse=True))
            if sum(key) != n or any(p < 1 for p in key):
                raise ValueError(f"{key} is not a partition of {n}")
            canonical[key] = Fraction(value)
        self.n = n
        self.numbers = canonical

    def number(self, partition) -> Fraction:
        key = tuple(sorted((int(p) for p in partition), reverse=True))
        try:
            return self.numbers[key]
        except KeyError:
            raise KeyError(f"missing Chern number for partition {key}") from None


def _integrate(poly: MPoly, data: ChernData, j: int) -> Fraction:
    """Pair a weight-j polynomial in the y_i (Chern classes) with c_(n-j)."""
    total = Fraction(0)
    for mono, coeff in poly.terms():
        parts = []
        for name, e in mono:
            if name == NU:
                raise ValueError("polynomial still contains nu")
            parts.extend([int(name[1:])] * e)
        if data.n - j >= 1:
            parts.append(data.n - j)
        total += coeff * data.number(parts)
    return total


def moment_from_chern(data: ChernData, k: int) -> Fraction:
    """V_2k of the manifold, evaluated from its Chern numbers."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return data.number((data.n,))
    total = Fraction(0)
    for j in range(0, min(2 * k - 1, data.n) + 1):
        q = chern_moment_poly(k, j).subs({NU: Fraction(data.n)})
        total += _integrate(q, data, j)
    return total


def bernoulli_moment_from_chern(data: ChernData, nu, k: int) -> Fraction:
    """Gamma_2k(V(X), nu) from Chern numbers; the nu argument becomes n - nu."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return data.number((data.n,))
    nu = Fraction(nu)
    total = Fraction(0)
    for j in range(0, min(2 * k - 1, data.n) + 1):
        q = chern_moment_poly(k, j).subs({NU: Fraction(data.n) - nu})
        total += _integrate(q, data, j)
    return total


def partitions_of(n: int) -> list:
    """All partitions of n as descending tuples."""
    out = []

    def _build(remaining, largest, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(remaining, largest), 0, -1):
            _build(remaining - part, part, prefix + [part])

    _build(n, n, [])
    return out


def chern_data_pn(n: int) -> ChernData:
    """Chern numbers of P^n from c(P^n) = (1+h)^(n+1), integral of h^n = 1."""
    numbers = {}
    for partition in partitions_of(n):
        value = 1
        for p in partition:
            value *= comb(n + 1, p)
        numbers[partition] = Fraction(value)
    return ChernData(n, numbers)


def chern_data_k3() -> ChernData:
    """A K3 surface: c_1 = 0 and Euler number 24."""
    return ChernData(2, {(2,): Fraction(24), (1, 1): Fraction(0)})


def chern_data_genus(g: int) -> ChernData:
    """A compact Riemann surface of genus g: integral of c_1 = 2 - 2g."""
    return ChernData(1, {(1,): Fraction(2 - 2 * g)})


def builtin_chern_data(spec: str) -> ChernData:
    """Dispatch 'pn:N', 'k3' or 'genus:G' to the builders above."""
    name, _, arg = spec.lower().partition(":")
    if name == "pn":
        return chern_data_pn(int(arg))
    if name == "k3":
        return chern_data_k3()
    if name == "genus":
        return chern_data_genus(int(arg))
    raise ValueError(f"unknown builtin manifold {spec!r}")


def builtin_chi_vector(spec: str):
    """The chi vector of the same builtin manifolds."""
    from .moments import ChiVector

    name, _, arg = spec.lower().partition(":")
    if name == "pn":
        return ChiVector(tuple([1] * (int(arg) + 1)))
    if name == "k3":
        return ChiVector((2, 20, 2))
    if name == "genus":
        g = int(arg)
        return ChiVector((1 - g, 1 - g))
    raise ValueError(f"unknown builtin manifold {spec!r}")
