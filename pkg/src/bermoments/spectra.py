"""Spectra of isolated hypersurface singularities.

A spectrum is a finite multiset of rational numbers alpha_1 <= ... <= alpha_mu
attached to a singularity in n+1 variables.  It always lies in (-1, n) and is
symmetric about (n-1)/2.  Multiplicities are positive integers for genuine
singularities; positive rationals are allowed so that abstract test spectra
can be written down directly.

Constructors:

* :func:`spectrum_from_weights` expands the product generating function of a
  quasihomogeneous singularity with normalized weights in (0, 1/2] by exact
  polynomial division.
* :func:`spectrum_tpqr` builds the hyperbolic surface singularity spectrum
  {0, 1} plus the interior fractions with denominators p, q, r.
* :func:`spectrum_curve` expands the Eisenbud-Neumann generating function of
  an irreducible plane curve branch given by its Puiseux pairs.
* :func:`thom_sebastiani` forms the join {alpha_i + beta_j + 1}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "Spectrum",
    "WeightSystem",
    "TpqrParams",
    "PuiseuxData",
    "spectrum_from_weights",
    "spectrum_tpqr",
    "spectrum_curve",
    "thom_sebastiani",
    "abstract_spectrum",
]


def _normalize_entries(entries):
    merged: dict = {}
    for alpha, mult in entries:
        alpha = Fraction(alpha)
        mult = Fraction(mult)
        merged[alpha] = merged.get(alpha, Fraction(0)) + mult
    return tuple(sorted(merged.items()))


@dataclass(frozen=True)
class Spectrum:
    """Ambient parameter n plus the sorted multiset of spectral numbers."""

    n: int
    entries: tuple

    def __post_init__(self):
        entries = _normalize_entries(self.entries)
        if not entries:
            raise ValueError("a spectrum needs at least one spectral number")
        for alpha, mult in entries:
            if mult <= 0:
                raise ValueError(f"multiplicity of {alpha} must be positive")
        lookup = dict(entries)
        for alpha, mult in entries:
            if lookup.get(self.n - 1 - alpha) != mult:
                raise ValueError(
                    f"spectrum is not symmetric about {Fraction(self.n - 1, 2)}: "
                    f"alpha = {alpha}"
                )
        if not (-1 < entries[0][0] and entries[-1][0] < self.n):
            raise ValueError("spectral numbers must lie strictly between -1 and n")
        object.__setattr__(self, "entries", entries)

    @property
    def mu(self) -> Fraction:
        """Total multiplicity (the Milnor number for genuine spectra)."""
        return sum((m for _, m in self.entries), Fraction(0))

    @property
    def alpha_min(self) -> Fraction:
        return self.entries[0][0]

    @property
    def alpha_max(self) -> Fraction:
        return self.entries[-1][0]

    @property
    def spread(self) -> Fraction:
        """alpha_mu - alpha_1, the nu parameter of the strong sign conjecture."""
        return self.alpha_max - self.alpha_min

    def centered(self) -> tuple:
        """Entries shifted by (n-1)/2, i.e. symmetric about 0."""
        c = Fraction(self.n - 1, 2)
        return tuple((alpha - c, mult) for alpha, mult in self.entries)

    # -- text format -----------------------------------------------------------

    def to_text(self) -> str:
        lines = [f"n {self.n}"]
        lines.extend(f"alpha {alpha} mult {mult}" for alpha, mult in self.entries)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Spectrum":
        n = None
        entries = []
        for raw in text.splitlines():
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            fields = line.split()
            if fields[0] == "n" and len(fields) == 2:
                n = int(fields[1])
            elif fields[0] == "alpha" and len(fields) == 4 and fields[2] == "mult":
                entries.append((Fraction(fields[1]), Fraction(fields[3])))
            else:
                raise ValueError(f"unrecognized spectrum line: {line!r}")
        if n is None:
            raise ValueError("spectrum file is missing the 'n <int>' line")
        return cls(n, tuple(entries))


@dataclass(frozen=True)
class WeightSystem:
    """Normalized weights of a quasihomogeneous singularity."""

    weights: tuple

    def __post_init__(self):
        ws = tuple(Fraction(w) for w in self.weights)
        if not ws:
            raise ValueError("need at least one weight")
        for w in ws:
            if not 0 < w <= Fraction(1, 2):
                raise ValueError(f"weight {w} outside (0, 1/2]")
        object.__setattr__(self, "weights", ws)

    @property
    def n(self) -> int:
        return len(self.weights) - 1

    @property
    def mu(self) -> Fraction:
        """prod(1/w - 1) over the weights."""
        mu = Fraction(1)
        for w in self.weights:
            mu *= 1 / w - 1
        return mu

    @property
    def spread(self) -> Fraction:
        """sum(1 - 2w) over the weights."""
        return sum((1 - 2 * w for w in self.weights), Fraction(0))


@dataclass(frozen=True)
class TpqrParams:
    """Parameters of the surface singularity family T_{p,q,r}."""

    p: int
    q: int
    r: int

    def __post_init__(self):
        if min(self.p, self.q, self.r) < 2:
            raise ValueError("p, q, r must all be >= 2")

    @property
    def is_hyperbolic(self) -> bool:
        return Fraction(1, self.p) + Fraction(1, self.q) + Fraction(1, self.r) < 1

    @property
    def mu(self) -> int:
        return self.p + self.q + self.r - 1


@dataclass(frozen=True)
class PuiseuxData:
    """Puiseux pairs (n_i, r_i) of an irreducible plane curve branch."""

    pairs: tuple

    def __post_init__(self):
        pairs = tuple((int(n), int(r)) for n, r in self.pairs)
        if not pairs:
            raise ValueError("need at least one Puiseux pair")
        for n, r in pairs:
            if n < 2:
                raise ValueError("each n_i must be >= 2")
            if math.gcd(n, r) != 1:
                raise ValueError(f"pair ({n}, {r}) is not coprime")
        if pairs[0][1] <= pairs[0][0]:
            raise ValueError("the first pair needs r_1 > n_1")
        object.__setattr__(self, "pairs", pairs)
        for k, delta in enumerate(self.deltas, start=1):
            if delta <= 0:
                raise ValueError(
                    f"edge determinant w_{k+1} - w_{k}*n_{k}*n_{k+1} = {delta} "
                    "must be positive"
                )

    @property
    def g(self) -> int:
        return len(self.pairs)

    @property
    def w(self) -> tuple:
        """w_1..w_g with w_1 = r_1, w_(k+1) = r_(k+1) - r_k n_(k+1) + n_k n_(k+1) w_k."""
        ws = [self.pairs[0][1]]
        for k in range(1, self.g):
            n_prev, r_prev = self.pairs[k - 1]
            n_k, r_k = self.pairs[k]
            ws.append(r_k - r_prev * n_k + n_prev * n_k * ws[-1])
        return tuple(ws)

    @property
    def nprime(self) -> tuple:
        """n'_0..n'_g with n'_k = n_(k+1)*...*n_g and n'_0 the full product."""
        out = [1]
        for n, _ in reversed(self.pairs):
            out.append(out[-1] * n)
        return tuple(reversed(out))

    @property
    def deltas(self) -> tuple:
        """Edge determinants w_(k+1) - w_k n_k n_(k+1), one per adjacent pair."""
        ws = self.w
        return tuple(
            ws[k + 1] - ws[k] * self.pairs[k][0] * self.pairs[k + 1][0]
            for k in range(self.g - 1)
        )


# -- exact dense polynomial helpers (integer coefficients in the variable S) --


def _pmul(a: list, b: list) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            if bj:
                out[i + j] += ai * bj
    return out


def _pdivexact(num: list, den: list) -> list:
    """Exact quotient num/den over the integers; raises if a remainder is left."""
    num = list(num)
    while den and den[-1] == 0:
        den = den[:-1]
    if not den:
        raise ZeroDivisionError("division by the zero polynomial")
    while len(num) < len(den):
        num.append(0)
    lead = den[-1]
    quot = [0] * (len(num) - len(den) + 1)
    for i in range(len(quot) - 1, -1, -1):
        c = num[i + len(den) - 1]
        if c % lead:
            raise ValueError("inexact polynomial division")
        q = c // lead
        quot[i] = q
        if q:
            for j, dj in enumerate(den):
                num[i + j] -= q * dj
    if any(num):
        raise ValueError("polynomial division left a remainder")
    return quot


def _geometric_block(m: int, denom: int) -> list:
    """(T^(1/m) - T)/(1 - T^(1/m)) as a polynomial in S = T^(1/denom).

    Expanded by exact division; equals S^(denom/m) + S^(2*denom/m) + ...
    + S^((m-1)*denom/m).
    """
    step = denom // m
    num = [0] * (denom + 1)
    num[step] += 1
    num[denom] -= 1
    den = [0] * (step + 1)
    den[0] = 1
    den[step] = -1
    return _pdivexact(num, den)


def _entries_from_dense(coeffs: list, denom: int, shift: Fraction = Fraction(1)):
    entries = []
    for e, c in enumerate(coeffs):
        if c == 0:
            continue
        if c < 0:
            raise ValueError("generating function produced a negative coefficient")
        entries.append((Fraction(e, denom) - shift, Fraction(c)))
    return entries


def spectrum_from_weights(ws: WeightSystem) -> Spectrum:
    """Spectrum of the quasihomogeneous singularity with the given weights.

    Expands prod (T^w_i - T)/(1 - T^w_i) exactly as a polynomial in
    S = T^(1/D), D the lcm of the weight denominators; the exponents of the
    result, shifted down by 1, are the spectral numbers.  A division
    remainder means the weights do not belong to a singularity.
    """
    weights = ws.weights
    denom = math.lcm(*(w.denominator for w in weights))
    num = [1]
    den = [1]
    for w in weights:
        a = int(w * denom)
        f_num = [0] * (denom + 1)
        f_num[a] += 1
        f_num[denom] -= 1
        f_den = [0] * (a + 1)
        f_den[0] = 1
        f_den[a] = -1
        num = _pmul(num, f_num)
        den = _pmul(den, f_den)
    quot = _pdivexact(num, den)
    return Spectrum(ws.n, tuple(_entries_from_dense(quot, denom)))


def spectrum_tpqr(params: TpqrParams) -> Spectrum:
    """Spectrum of T_{p,q,r}: {0, 1} plus i/p, i/q, i/r for interior i; n = 2."""
    counts: dict = {Fraction(0): Fraction(1), Fraction(1): Fraction(1)}
    for m in (params.p, params.q, params.r):
        for i in range(1, m):
            alpha = Fraction(i, m)
            counts[alpha] = counts.get(alpha, Fraction(0)) + 1
    return Spectrum(2, tuple(counts.items()))


def spectrum_curve(data: PuiseuxData) -> Spectrum:
    """Spectrum of an irreducible plane curve branch from its Puiseux pairs.

    Expands the alternating Eisenbud-Neumann sum of products of geometric
    blocks over a common denominator and checks that the combination has
    nonnegative integer coefficients.
    """
    g = data.g
    w = (None,) + data.w  # 1-based
    np = data.nprime  # 0-based: n'_0 .. n'_g
    moduli = {np[0], w[1] * np[1]}
    for k in range(1, g):
        moduli.update({w[k + 1] * np[k + 1], w[k] * np[k - 1], np[k]})
    denom = math.lcm(*moduli)

    total = [0] * (2 * denom + 1)

    def _accumulate(poly, sign=1):
        for e, c in enumerate(poly):
            if c:
                total[e] += sign * c

    _accumulate(_pmul(_geometric_block(np[0], denom), _geometric_block(w[1] * np[1], denom)))
    for k in range(1, g):
        plus = _geometric_block(w[k + 1] * np[k + 1], denom)
        minus = _geometric_block(w[k] * np[k - 1], denom)
        block = _geometric_block(np[k], denom)
        _accumulate(_pmul(plus, block))
        _accumulate(_pmul(minus, block), sign=-1)
    return Spectrum(1, tuple(_entries_from_dense(total, denom)))


def thom_sebastiani(a: Spectrum, b: Spectrum) -> Spectrum:
    """Spectrum of a sum of singularities in disjoint variables.

    Entries are alpha_i + beta_j + 1 with multiplied multiplicities;
    the ambient parameter is n_a + n_b + 1.
    """
    merged: dict = {}
    for alpha, ma in a.entries:
        for beta, mb in b.entries:
            key = alpha + beta + 1
            merged[key] = merged.get(key, Fraction(0)) + ma * mb
    return Spectrum(a.n + b.n + 1, tuple(merged.items()))


def abstract_spectrum(n: int, entries) -> Spectrum:
    """Spectrum given directly; rational multiplicities are allowed.

    The range and symmetry requirements are still enforced.
    """
    return Spectrum(n, tuple(entries))
