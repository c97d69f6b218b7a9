"""The two-parameter Bernoulli polynomials A_k(x, nu) and their limits.

The polynomials are generated by e^(x t) exp(nu log((t/2)/sinh(t/2))).
They are symmetric in x, interpolate the classical Bernoulli polynomials
at nu = 1, and after the right normalization converge to cosine waves.

Run as: python demos/02_generalized_bernoulli_polynomials.py
"""

from fractions import Fraction as F

from bermoments import (
    centered_bernoulli_poly,
    centered_bernoulli_value,
    cos_scaled_value,
    fourier_partial_sum,
    generalized_bernoulli_value,
    verify_multiplication_formula,
)

print("=== the first polynomials ===")
for k in range(7):
    print(f"A_{k}(x, nu) = {centered_bernoulli_poly(k)}")

print()
print("=== classical specializations ===")
print("A_k(-1/2, 1) are the Bernoulli numbers:")
print("  ", [centered_bernoulli_value(k, F(-1, 2), 1) for k in range(9)])
print("B_3^(4)(0) = (0-1)(0-2)(0-3) =", generalized_bernoulli_value(3, 4, 0))
print("A_4(x, 5) factorizes:", centered_bernoulli_poly(4).subs({"nu": 5}))

print()
print("=== the order-reduction identity ===")
for k, nu in [(4, 2), (6, 3), (2, 2)]:
    print(f"k={k}, nu={nu}: holds = {verify_multiplication_formula(k, nu)}")

print()
print("=== cosine asymptotics ===")
print("normalized (-1)^k A_2k(x, nu) against cos(2 pi x):")
for x, nu, target in [(F(0), 1, 1.0), (F(1, 2), 3, -1.0), (F(1, 4), 2, 0.0)]:
    row = ", ".join(f"k={k}: {cos_scaled_value(k, x, nu):+.5f}" for k in (10, 25, 50))
    print(f"  x={x}, nu={nu} (target {target:+.1f}):  {row}")

print()
print("=== Fourier series of the periodized polynomials ===")
for k in (2, 3, 4):
    x = 0.3
    exact = float(centered_bernoulli_value(k, F(3, 10), 1))
    approx = fourier_partial_sum(k, x, 2000)
    print(f"  k={k}, x={x}: partial sum {approx:+.10f}, exact {exact:+.10f}")
