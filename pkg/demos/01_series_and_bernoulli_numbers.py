"""Tour of the exact series engine and the Bernoulli numbers.

Everything below is computed in rational arithmetic; nothing is rounded.
Run as: python demos/01_series_and_bernoulli_numbers.py
"""

from fractions import Fraction as F

from bermoments import TruncatedSeries, bernoulli_numbers, exp_linear, sinhc_half, theta_series

print("=== truncated power series ===")
s = TruncatedSeries.from_coeffs([0, 1, F(1, 2)], order=6)
print("s        =", s.coeffs)
print("exp(s)   =", s.exp().coeffs)
print("roundtrip:", s.exp().log() == s)

print()
print("exp(t/6) * exp(-t/6) =", (exp_linear(F(1, 6), 6) * exp_linear(F(-1, 6), 6)).coeffs)

print()
print("=== Bernoulli numbers from the binomial recursion ===")
for k, b in enumerate(bernoulli_numbers(13)):
    print(f"B_{k:<2} = {b}")

print()
print("=== the theta series log((t/2)/sinh(t/2)) ===")
theta = theta_series(10)
print("plain coefficients:", theta.coeffs)
print("factorial-normalized value at t^2k is -B_2k/(2k):")
bern = bernoulli_numbers(11)
for k in range(1, 6):
    print(f"  2k = {2*k}: {theta.moment(2*k)}  (check: {F(-1, 2*k) * bern[2*k]})")

print()
print("theta equals -log(sinh(t/2)/(t/2)):", theta == sinhc_half(10).log().scale(-1))
