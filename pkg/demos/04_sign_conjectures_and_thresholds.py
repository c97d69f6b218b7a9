"""Bernoulli moments, their alternating signs, and threshold search.

The Bernoulli moments of a spectrum are predicted to satisfy
(-1)^k Gamma_2k > 0 at nu = n + 1 (weak form) and >= 0 at nu = spread
(strong form).  Both are decided exactly here, and the smallest admissible
nu for a window of indices is bracketed by rational bisection.

Run as: python demos/04_sign_conjectures_and_thresholds.py
"""

from fractions import Fraction as F

from bermoments import (
    PuiseuxData,
    TpqrParams,
    WeightSystem,
    abstract_spectrum,
    check_conjecture,
    gamma_qh_product_spread,
    nu_threshold,
    spectrum_curve,
    spectrum_from_weights,
    spectrum_tpqr,
    trace_convergence,
    trace_limit,
)

cusp = spectrum_from_weights(WeightSystem((F(1, 3), F(1, 2))))

print("=== exact sign checks ===")
for label, s, mode in [
    ("cusp, strong", cusp, "S"),
    ("cusp, weak", cusp, "W"),
    ("T_{2,3,7}, strong", spectrum_tpqr(TpqrParams(2, 3, 7)), "S"),
    ("curve (2,3),(2,7), weak", spectrum_curve(PuiseuxData(((2, 3), (2, 7)))), "W"),
]:
    report = check_conjecture(s, mode, 8)
    verdicts = " ".join("+" if ok else "-" for _, _, ok in report.rows)
    print(f"{label:26s} nu={report.nu}:  k=0..8 [{verdicts}]  overall={report.overall}")

print()
print("a spectrum with too much mass at the ends fails the weak form:")
lopsided = abstract_spectrum(2, ((0, 5), (F(1, 2), 2), (1, 5)))
report = check_conjecture(lopsided, "W", 6)
for k, value, ok in report.rows:
    print(f"  k={k}: Gamma_2k = {value}   {'ok' if ok else 'SIGN FAILS'}")

print()
print("=== the closed product form behind the strong case ===")
gamma = gamma_qh_product_spread(WeightSystem((F(1, 3), F(1, 2))), 12)
print("cusp at nu = spread:", [str(gamma.moment(2 * k)) for k in range(7)])

print()
print("=== bisecting the smallest admissible nu ===")
print("for the cusp at k = 1 the exact threshold is 12 V_2 / V_0 = 1/3")
for steps in (8, 16, 24):
    estimate = nu_threshold(cusp, 1, 1, steps)
    print(f"  {steps:2d} bisection steps: {estimate}  ~ {float(estimate):.8f}")

print()
print("=== normalized moments approach the monodromy trace ===")
values = trace_convergence(cusp, 2, 40)
print("cusp, nu=2, limit", trace_limit(cusp))
for k in (5, 10, 20, 40):
    print(f"  k={k:2d}: {values[k - 1]:+.6f}")
