"""Building spectra: weights, hyperbolic triples, curve branches, joins.

Run as: python demos/03_singularity_spectra.py
"""

from fractions import Fraction as F

from bermoments import (
    PuiseuxData,
    TpqrParams,
    WeightSystem,
    spectrum_curve,
    spectrum_from_weights,
    spectrum_tpqr,
    thom_sebastiani,
)

print("=== quasihomogeneous spectra from weights ===")
for label, ws in [
    ("A_2  (x^3)", WeightSystem((F(1, 3),))),
    ("cusp (x^3 + y^2)", WeightSystem((F(1, 3), F(1, 2)))),
    ("Z_11 (x^3 y + y^5)", WeightSystem((F(4, 15), F(1, 5)))),
]:
    s = spectrum_from_weights(ws)
    print(f"{label}: n={s.n}, mu={s.mu}, spread={s.spread}")
    print("   ", [(str(a), str(m)) for a, m in s.entries])

print()
print("=== hyperbolic surface singularities ===")
t237 = spectrum_tpqr(TpqrParams(2, 3, 7))
print("T_{2,3,7}: mu =", t237.mu, " hyperbolic =", TpqrParams(2, 3, 7).is_hyperbolic)
print(t237.to_text())

print("=== irreducible plane curve from Puiseux pairs ===")
data = PuiseuxData(((2, 3), (2, 7)))
print("pairs (2,3),(2,7): internal weights", data.w, "multiplied pairs", data.nprime)
curve = spectrum_curve(data)
print("mu =", curve.mu, "entries:")
print(curve.to_text())

print("=== Thom-Sebastiani joins ===")
a = spectrum_from_weights(WeightSystem((F(1, 3),)))
b = spectrum_from_weights(WeightSystem((F(1, 2),)))
joined = thom_sebastiani(a, b)
print("A_2 joined with A_1 equals the cusp:",
      joined == spectrum_from_weights(WeightSystem((F(1, 3), F(1, 2)))))
