"""Moment series, Bernoulli-moment transforms, and closed product forms."""

import random
from fractions import Fraction as F
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bermoments import (
    ChiVector,
    MomentSeries,
    TruncatedSeries,
    WeightSystem,
    abstract_spectrum,
    bernoulli_moment_direct,
    bernoulli_moments,
    bernoulli_numbers,
    exp_linear,
    gamma_genus_closed,
    gamma_k3_closed,
    gamma_pn_closed,
    gamma_qh_product_nplus1,
    gamma_qh_product_spread,
    gamma_tpqr_closed,
    generalized_bernoulli_value,
    moments_of_chi,
    moments_of_spectrum,
    moments_qh_product,
    q_exponent_poly,
    q_factor_series,
    sinhc_half,
    spectrum_from_weights,
    spectrum_tpqr,
    thom_sebastiani,
    TpqrParams,
)
from bermoments.polynomials import MPoly

from helpers import lagrange_value, random_brieskorn_weights, random_fraction

CUSP = WeightSystem((F(1, 3), F(1, 2)))

FIXED_SYSTEMS = [
    WeightSystem((F(1, 2),)),
    CUSP,
    WeightSystem((F(1, 5), F(1, 4), F(1, 3))),
    WeightSystem((F(4, 15), F(1, 5))),
    WeightSystem((F(2, 5), F(1, 5), F(1, 2))),
]


def even_moment_series(rng: random.Random, order: int) -> MomentSeries:
    coeffs = [F(0)] * (order + 1)
    coeffs[0] = F(rng.randint(1, 9))
    for two_k in range(2, order + 1, 2):
        coeffs[two_k] = random_fraction(rng) / factorial(two_k)
    return MomentSeries(TruncatedSeries(tuple(coeffs)))


class TestMomentSeries:
    def test_must_be_even(self):
        with pytest.raises(ValueError, match="even"):
            MomentSeries(TruncatedSeries.from_coeffs([1, 1], order=4))

    def test_transform_needs_raw_input(self):
        v = MomentSeries(TruncatedSeries.one(4))
        gamma = bernoulli_moments(v, 2)
        with pytest.raises(ValueError, match="raw"):
            bernoulli_moments(gamma, 1)

    def test_product_combines_parameters(self):
        v = MomentSeries(TruncatedSeries.one(4))
        a = bernoulli_moments(v, F(1, 2))
        b = bernoulli_moments(v, F(3, 2))
        assert (a * b).nu == 2
        assert (v * v).nu is None


class TestSpectrumMoments:
    def test_cusp_values(self):
        v = moments_of_spectrum(spectrum_from_weights(CUSP), 10)
        assert v.moment(0) == 2
        assert v.moment(2) == F(1, 18)
        assert v.moment(4) == F(1, 648)

    def test_node_is_constant(self):
        v = moments_of_spectrum(spectrum_from_weights(WeightSystem((F(1, 2),))), 8)
        assert v.series == TruncatedSeries.one(8)

    def test_even_for_symmetric_spectra(self):
        rng = random.Random(3)
        for _ in range(5):
            ws = random_brieskorn_weights(rng, rng.randint(1, 3))
            assert moments_of_spectrum(spectrum_from_weights(ws), 11).series.is_even()


class TestBernoulliMoments:
    def test_cusp_spread_variance_vanishes(self):
        v = moments_of_spectrum(spectrum_from_weights(CUSP), 10)
        assert bernoulli_moments(v, F(1, 3)).moment(2) == 0

    def test_cusp_at_dimension_parameter(self):
        v = moments_of_spectrum(spectrum_from_weights(CUSP), 10)
        assert bernoulli_moments(v, 2).moment(2) == F(-5, 18)

    def test_zero_parameter_is_identity(self):
        rng = random.Random(5)
        v = even_moment_series(rng, 12)
        assert bernoulli_moments(v, 0).series == v.series

    def test_explicit_low_order_formulas(self):
        # Gamma_0..Gamma_6 as polynomials in nu, recovered by interpolation
        rng = random.Random(6)
        v = even_moment_series(rng, 6)
        v0, v2, v4, v6 = (v.moment(k) for k in (0, 2, 4, 6))

        def explicit(k: int, n: F) -> F:
            if k == 0:
                return v0
            if k == 1:
                return v2 - v0 * n / 12
            if k == 2:
                return v4 - v2 * n / 2 + v0 * (n / 120 + n**2 / 48)
            return (
                v6
                - v4 * F(5, 4) * n
                + v2 * (n / 8 + 5 * n**2 / 16)
                - v0 * (n / 252 + n**2 / 96 + 5 * n**3 / 576)
            )

        grid = [F(0), F(1), F(2), F(3)]
        samples = {n: bernoulli_moments(v, n) for n in grid}
        for nu in (F(7, 3), F(-1, 2), F(12, 7)):
            direct = bernoulli_moments(v, nu)
            for k in range(4):
                interpolated = lagrange_value(
                    [(n, samples[n].moment(2 * k)) for n in grid], nu
                )
                assert interpolated == direct.moment(2 * k) == explicit(k, nu)

    def test_direct_summation_route(self):
        rng = random.Random(7)
        for _ in range(4):
            ws = random_brieskorn_weights(rng, rng.randint(1, 3))
            s = spectrum_from_weights(ws)
            nu = random_fraction(rng)
            gamma = bernoulli_moments(moments_of_spectrum(s, 10), nu)
            for k in range(6):
                assert bernoulli_moment_direct(s, nu, k) == gamma.moment(2 * k)

    def test_abstract_spectrum_value(self):
        ex = abstract_spectrum(2, ((0, 3), (F(1, 2), 6), (1, 3)))
        assert bernoulli_moment_direct(ex, 3, 1) == F(-3, 2)

    @given(
        data=st.data(),
        nu1=st.fractions(min_value=-3, max_value=3, max_denominator=4),
        nu2=st.fractions(min_value=-3, max_value=3, max_denominator=4),
    )
    @settings(max_examples=25, deadline=None)
    def test_multiplicativity(self, data, nu1, nu2):
        rng = random.Random(data.draw(st.integers(0, 10**6)))
        a = even_moment_series(rng, 16)
        b = even_moment_series(rng, 16)
        lhs = bernoulli_moments(a * b, nu1 + nu2)
        rhs = bernoulli_moments(a, nu1) * bernoulli_moments(b, nu2)
        assert lhs.series == rhs.series and lhs.nu == rhs.nu

    def test_sinh_quotient_recovers_raw_series(self):
        for ws in (CUSP, WeightSystem((F(1, 4), F(1, 3), F(1, 2)))):
            s = spectrum_from_weights(ws)
            v = moments_of_spectrum(s, 12)
            gamma = bernoulli_moments(v, s.n + 1)
            assert gamma.series * sinhc_half(12) ** (s.n + 1) == v.series

    def test_nu_monotonicity_of_sign_window(self):
        rng = random.Random(8)
        k0 = 6
        for _ in range(6):
            ws = random_brieskorn_weights(rng, rng.randint(1, 3))
            v = moments_of_spectrum(spectrum_from_weights(ws), 2 * k0)
            grid = [F(i, 4) for i in range(0, 24, 3)]
            passed = [
                all(
                    (-1) ** k * bernoulli_moments(v, nu).moment(2 * k) >= 0
                    for k in range(k0 + 1)
                )
                for nu in grid
            ]
            first = passed.index(True) if True in passed else len(passed)
            assert all(passed[first:])


class TestQuasihomogeneousClosedForms:
    def test_moment_factor_examples(self):
        # k = 0 factor for w = 1/3 is 2*B_1(3/2) = 2
        series = moments_qh_product(WeightSystem((F(1, 3),)), 6)
        assert series.moment(0) == 2
        # a single half weight collapses to the constant series
        assert moments_qh_product(WeightSystem((F(1, 2),)), 8).series == TruncatedSeries.one(8)

    def test_matches_spectrum_route(self):
        for ws in FIXED_SYSTEMS:
            direct = moments_of_spectrum(spectrum_from_weights(ws), 20)
            closed = moments_qh_product(ws, 20)
            assert closed.series == direct.series

    def test_gamma_product_at_dimension_plus_one(self):
        for ws in FIXED_SYSTEMS:
            v = moments_of_spectrum(spectrum_from_weights(ws), 20)
            closed = gamma_qh_product_nplus1(ws, 20)
            assert closed.series == bernoulli_moments(v, ws.n + 1).series
            assert closed.nu == len(ws.weights)

    def test_gamma_factor_signs(self):
        from bermoments.moments import gamma_weight_factor

        for w in (F(1, 2), F(1, 3), F(2, 5)):
            factor = gamma_weight_factor(w, 16)
            for k in range(0, 9):
                assert (-1) ** k * factor.moment(2 * k) > 0

    def test_gamma_product_at_spread(self):
        for ws in FIXED_SYSTEMS:
            s = spectrum_from_weights(ws)
            v = moments_of_spectrum(s, 20)
            closed = gamma_qh_product_spread(ws, 20)
            assert closed.series == bernoulli_moments(v, s.spread).series
            assert closed.moment(2) == 0

    def test_quartic_and_sextic_sums(self):
        for ws in FIXED_SYSTEMS:
            closed = gamma_qh_product_spread(ws, 8)
            mu = ws.mu
            quartic = mu / 30 * sum((F(1, 2) - w) * w * (1 - w) for w in ws.weights)
            sextic = (
                mu
                / 42
                * sum(
                    (F(1, 2) - w) * w * (1 - w) * (w * (1 - w) - F(4, 3))
                    for w in ws.weights
                )
            )
            assert closed.moment(4) == quartic
            assert closed.moment(6) == sextic


class TestQFactor:
    def test_exponent_poly_values(self):
        w = MPoly.var("w")
        assert q_exponent_poly(1) == MPoly()
        assert q_exponent_poly(2) == 4 * (F(1, 2) - w) * w * (1 - w)
        assert q_exponent_poly(2).eval({"w": F(1, 4)}) == F(3, 16)
        assert q_exponent_poly(3) == 6 * (F(1, 2) - w) * w * (1 - w) * (F(4, 3) - w * (1 - w))

    def test_exponent_poly_zeros_and_derivative_signs(self):
        for k in range(2, 9):
            p = q_exponent_poly(k)
            for root in (0, F(1, 2), 1):
                assert p.eval({"w": root}) == 0
            dp = p.derivative("w")
            assert dp.eval({"w": 0}) == 2 * k - 2 > 0
            assert dp.eval({"w": 1}) == 2 * k - 2
            assert dp.eval({"w": F(1, 2)}) == -2 + k * F(1, 2 ** (2 * k - 3)) < 0
            # the third derivative is positive, which pins the three simple
            # zeros as the only real zeros
            dddp = dp.derivative("w").derivative("w")
            for w in (F(-1, 2), F(1, 4), F(3, 4), F(2)):
                assert dddp.eval({"w": w}) > 0

    def test_low_coefficients(self):
        w = MPoly.var("w")
        q = q_factor_series(w, 8)
        assert q.moment(0) == 1
        assert q.moment(2) == MPoly()
        assert q.moment(4) == q_exponent_poly(2) / 120
        assert q.moment(6) == -q_exponent_poly(3) / 252

    def test_half_weight_is_flat(self):
        q = q_factor_series(F(1, 2), 8)
        for k in range(1, 4):
            assert q.moment(2 * k) == 0

    def test_sign_inside_the_positive_region(self):
        rng = random.Random(9)
        samples = []
        while len(samples) < 20:
            w = F(rng.randint(1, 199), 400)
            if 0 < w < F(1, 2):
                samples.append(w)
            w2 = 1 + F(rng.randint(1, 800), 400)
            if len(samples) < 20 and 1 < w2 < 3:
                samples.append(w2)
        for w in samples:
            q = q_factor_series(w, 12)
            for k in range(2, 7):
                assert (-1) ** k * q.moment(2 * k) > 0

    def test_derivatives_at_the_simple_zeros(self):
        w = MPoly.var("w")
        q = q_factor_series(w, 12)
        bern = bernoulli_numbers(13)
        for k in range(2, 7):
            dq = q.moment(2 * k).derivative("w")
            assert dq.eval({"w": 0}) == dq.eval({"w": 1}) == -bern[2 * k] * (1 - F(1, k))
            assert dq.eval({"w": F(1, 2)}) == bern[2 * k] * (F(1, k) - F(1, 2 ** (2 * k - 2)))


class TestTpqrClosedForm:
    def test_237_values(self):
        gamma = gamma_tpqr_closed(TpqrParams(2, 3, 7), 10)
        assert gamma.moment(0) == 11
        assert gamma.moment(2) == F(-1, 252)

    def test_matches_spectrum_route(self):
        for p, q, r in [(2, 3, 7), (3, 3, 4), (5, 5, 5), (2, 2, 2)]:
            params = TpqrParams(p, q, r)
            v = moments_of_spectrum(spectrum_tpqr(params), 20)
            assert gamma_tpqr_closed(params, 20).series == bernoulli_moments(v, 1).series

    def test_hyperbolic_variance_sign(self):
        for p, q, r in [(2, 3, 7), (2, 4, 5), (3, 3, 4)]:
            params = TpqrParams(p, q, r)
            assert params.is_hyperbolic
            assert -gamma_tpqr_closed(params, 4).moment(2) > 0


class TestThomSebastianiMoments:
    def test_series_multiplicativity(self):
        rng = random.Random(10)
        for _ in range(6):
            wa = random_brieskorn_weights(rng, rng.randint(1, 2))
            wb = random_brieskorn_weights(rng, rng.randint(1, 2))
            sa, sb = spectrum_from_weights(wa), spectrum_from_weights(wb)
            joined = thom_sebastiani(sa, sb)
            va, vb = moments_of_spectrum(sa, 12), moments_of_spectrum(sb, 12)
            assert moments_of_spectrum(joined, 12).series == (va * vb).series
            for nu_a, nu_b in ((sa.spread, sb.spread), (F(sa.n + 1), F(sb.n + 1))):
                lhs = bernoulli_moments(moments_of_spectrum(joined, 12), nu_a + nu_b)
                rhs = bernoulli_moments(va, nu_a) * bernoulli_moments(vb, nu_b)
                assert lhs.series == rhs.series


class TestPolynomialCharacterization:
    @staticmethod
    def _gamma_at(mu: int, nu, k: int) -> F:
        ws = WeightSystem((F(1, mu + 1),))
        v = moments_of_spectrum(spectrum_from_weights(ws), 2 * k)
        return bernoulli_moments(v, nu).moment(2 * k)

    def test_values_interpolate_in_w_at_one(self):
        # across the chain singularities x^(mu+1), the Bernoulli moments at
        # nu = n + 1 = 1 depend polynomially on w = 1/(mu+1), degree <= 2k;
        # this pole cancellation pins the theta series, so it fails for any
        # other transform parameter
        for k in range(1, 4):
            points = [
                (F(1, mu + 1), self._gamma_at(mu, 1, k)) for mu in range(1, 2 * k + 2)
            ]
            for mu_extra in (2 * k + 2, 2 * k + 3):
                assert self._gamma_at(mu_extra, 1, k) == lagrange_value(
                    points, F(1, mu_extra + 1)
                )

    def test_other_parameters_are_not_polynomial(self):
        for nu in (F(1, 2), F(2)):
            points = [
                (F(1, mu + 1), self._gamma_at(mu, nu, 1)) for mu in range(1, 8)
            ]
            assert self._gamma_at(8, nu, 1) != lagrange_value(points, F(1, 9))


class TestManifoldMoments:
    def test_chi_vector_requires_serre_symmetry(self):
        with pytest.raises(ValueError, match="Serre"):
            ChiVector((1, 2, 3))

    def test_k3_values(self):
        v = moments_of_chi(ChiVector((2, 20, 2)), 10)
        assert v.moment(0) == 24
        assert v.moment(2) == 4

    def test_projective_space_series(self):
        for n in (1, 2, 3, 5):
            chi = ChiVector(tuple([1] * (n + 1)))
            direct = moments_of_chi(chi, 10).series
            total = TruncatedSeries.zero(10)
            for p in range(n + 1):
                total = total + exp_linear(F(2 * p - n, 2), 10)
            assert direct == total

    def test_genus_series_is_scaled_projective_line(self):
        p1 = moments_of_chi(ChiVector((1, 1)), 10).series
        for g in (0, 2, 3):
            vg = moments_of_chi(ChiVector((1 - g, 1 - g)), 10).series
            assert vg == p1.scale(1 - g)

    def test_k3_closed_form(self):
        closed = gamma_k3_closed(12)
        route = bernoulli_moments(moments_of_chi(ChiVector((2, 20, 2)), 12), 2)
        assert closed.series == route.series
        assert closed.moment(2) == 0
        bern = bernoulli_numbers(13)
        for k in range(2, 7):
            assert (-1) ** k * closed.moment(2 * k) == 24 * (2 * k - 1) * abs(bern[2 * k])

    def test_genus_closed_form(self):
        bern = bernoulli_numbers(11)
        for g in (0, 2, 3):
            closed = gamma_genus_closed(g, 10)
            route = bernoulli_moments(moments_of_chi(ChiVector((1 - g, 1 - g)), 10), 1)
            assert closed.series == route.series
            for k in range(6):
                assert closed.moment(2 * k) == (1 - g) * 2 * bern[2 * k]

    def test_projective_closed_form(self):
        for n in (1, 2, 3, 5):
            chi = ChiVector(tuple([1] * (n + 1)))
            closed = gamma_pn_closed(n, 12)
            route = bernoulli_moments(moments_of_chi(chi, 12), n)
            assert closed.series == route.series

    def test_projective_low_sign_pattern(self):
        # below the dimension the signed moments alternate the other way
        assert gamma_pn_closed(3, 4).moment(2) > 0

    def test_low_order_norlund_identities(self):
        bern = bernoulli_numbers(14) + [F(0)]

        def b(k):
            return bern[k] if k >= 0 else F(0)

        for k in range(13):
            assert generalized_bernoulli_value(k, 2, 0) == (1 - k) * b(k) - k * b(k - 1)
            assert generalized_bernoulli_value(k, 3, 0) == (
                F(k - 2) * (k - 1) * b(k) / 2
                + F(3, 2) * (k - 2) * k * b(k - 1)
                + (k - 1) * k * b(k - 2)
            )
            assert generalized_bernoulli_value(k, 2, 1) == (1 - k) * b(k)
