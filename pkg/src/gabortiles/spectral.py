"""Spectral pairs (A, B): (A° − A°) ∩ Z(χ̂_B) = ∅ and (B° − B°) ∩ Z(χ̂_A) = ∅.

For a tight pair, Λ is a spectrum of A exactly when B + Λ tiles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import numpy as np
from scipy.optimize import brentq, minimize_scalar

from .fourier import ft_indicator, ft_parts_array
from .intervals import RATIONAL, IntervalUnion, format_scalar, normalize, open_difference_set, quadrant_parts, to_scalar
from .tiling import ProductRegion2D, check_tiling_1d, check_tiling_2d

ZERO_TOL = 1e-9
BOUNDARY_EPS = 1e-9


def _parts(u: IntervalUnion) -> list:
    return [(float(p.lo), float(p.hi)) for p in u.parts]


def _single_interval_zeros(B: IntervalUnion, lo, hi) -> list:
    """Zeros k/ℓ (k ≥ 1) of χ̂ of one interval of length ℓ inside [lo, hi]."""
    ell = B.parts[0].length
    k0 = max(1, math.ceil(lo * ell))
    out = []
    k = k0
    while k / ell <= hi:
        out.append(k / ell)
        k += 1
    return out


def locate_zeros(B: IntervalUnion, lo: float, hi: float, tol: float = ZERO_TOL) -> list:
    """Zeros of χ̂_B on [lo, hi] with lo ≥ 0.

    Scans |χ̂_B| with step 1/(8·diam B), refines every local minimum by bounded
    minimization, and adds roots of Re χ̂_B found by bracketing where the
    modulus also vanishes.  A zero is accepted when |χ̂_B| ≤ tol there.
    """
    parts = _parts(B)
    diam = float(B.diameter)
    step = 1.0 / (8.0 * diam)
    n = max(3, math.ceil((hi - lo) / step) + 1)
    grid = np.linspace(lo, hi, n)
    vals = ft_parts_array(parts, grid)
    mod = np.abs(vals)

    def f(x):
        return abs(ft_parts_array(parts, np.array([x]))[0])

    # the bounded minimizer never evaluates the bracket ends themselves
    found = [float(x) for x in (lo, hi) if f(x) <= tol]
    h = grid[1] - grid[0]
    for i in range(n):
        left = mod[i - 1] if i > 0 else np.inf
        right = mod[i + 1] if i < n - 1 else np.inf
        if mod[i] <= left and mod[i] <= right:
            a, b = max(lo, grid[i] - h), min(hi, grid[i] + h)
            res = minimize_scalar(f, bounds=(a, b), method="bounded", options={"xatol": 1e-13})
            if res.fun <= tol:
                found.append(float(res.x))
    re = vals.real
    for i in range(n - 1):
        if re[i] == 0 or re[i] * re[i + 1] < 0:
            x = grid[i] if re[i] == 0 else brentq(lambda y: ft_parts_array(parts, np.array([y]))[0].real,
                                                  grid[i], grid[i + 1], xtol=1e-14)
            if f(x) <= tol:
                found.append(float(x))
    found.sort()
    out = []
    for x in found:
        if not out or x - out[-1] > 1e-7:
            out.append(x)
    return out


def _in_open(x, parts) -> bool:
    """x strictly inside some (lo, hi) triple, treating points within BOUNDARY_EPS of an open end as outside."""
    for lo, hi, lo_closed in parts:
        exact = not isinstance(x, float)
        if exact:
            if (x >= lo if lo_closed else x > lo) and x < hi:
                return True
        else:
            above = x >= float(lo) - BOUNDARY_EPS if lo_closed else x > float(lo) + BOUNDARY_EPS
            if above and x < float(hi) - BOUNDARY_EPS:
                return True
    return False


def _difference_hits(A: IntervalUnion, B: IntervalUnion, tol: float) -> list:
    """Zeros of χ̂_B inside the folded A° − A°."""
    parts = quadrant_parts(open_difference_set(A))
    hits = []
    if len(B) == 1 and B.mode == RATIONAL and A.mode == RATIONAL:
        for lo, hi, _ in parts:
            for z in _single_interval_zeros(B, lo, hi):
                if _in_open(z, parts) and z not in hits:
                    hits.append(z)
        return sorted(hits)
    for lo, hi, _ in parts:
        for z in locate_zeros(B, float(lo), float(hi), tol):
            if _in_open(z, parts):
                hits.append(z)
    return sorted(set(hits))


@dataclass(frozen=True)
class SpectralPairVerdict:
    A: IntervalUnion
    B: IntervalUnion
    is_spectral_pair: bool
    tight: bool
    witnesses_a: tuple
    witnesses_b: tuple

    def to_json(self) -> dict:
        return {"A": self.A.to_json(), "B": self.B.to_json(), "is_spectral_pair": self.is_spectral_pair,
                "tight": self.tight,
                "witnesses": {"zeros_of_ft_B_in_A_diff": [format_scalar(x) for x in self.witnesses_a],
                              "zeros_of_ft_A_in_B_diff": [format_scalar(x) for x in self.witnesses_b]}}


def spectral_pair_check(A: IntervalUnion, B: IntervalUnion, tol: float = ZERO_TOL) -> SpectralPairVerdict:
    """Decide whether (A, B) is a spectral pair; witnesses are offending zeros ν ≥ 0."""
    if not A or not B:
        raise ValueError("spectral pairs need nonempty sets")
    wa = tuple(_difference_hits(A, B, tol))
    wb = tuple(_difference_hits(B, A, tol))
    ok = not wa and not wb
    tight = A.measure() == 1 and B.measure() == 1 if A.mode == B.mode == RATIONAL else \
        abs(float(A.measure()) - 1) < 1e-12 and abs(float(B.measure()) - 1) < 1e-12
    return SpectralPairVerdict(A, B, ok, ok and tight, wa, wb)


@dataclass(frozen=True)
class ProductPair:
    A: ProductRegion2D
    B: ProductRegion2D
    is_spectral_pair: bool
    tight: bool


def spectral_pair_product(p1: SpectralPairVerdict, p2: SpectralPairVerdict) -> ProductPair:
    """(A₁ × A₂, B₁ × B₂) is a spectral pair, tight when both factors are."""
    if not (p1.is_spectral_pair and p2.is_spectral_pair):
        raise ValueError("both factors must be verified spectral pairs")
    return ProductPair(ProductRegion2D(p1.A, p2.A), ProductRegion2D(p1.B, p2.B), True, p1.tight and p2.tight)


def ft_region(R: Union[IntervalUnion, ProductRegion2D], xi) -> complex:
    """χ̂_R at ξ (scalar for 1-D, pair for 2-D)."""
    if isinstance(R, IntervalUnion):
        return ft_indicator(R, xi)
    if R.is_product:
        return ft_indicator(R.time_factor, xi[0]) * ft_indicator(R.freq_factor, xi[1])
    total = 0j
    for x0, x1, y0, y1 in R.rects():
        total += ft_indicator(normalize([(x0, x1)]), xi[0]) * ft_indicator(normalize([(y0, y1)]), xi[1])
    return total


@dataclass(frozen=True)
class KooResult:
    tiling: bool
    orthogonal: bool
    spectrum: bool
    max_cross: float

    @property
    def agree(self) -> bool:
        return self.spectrum == self.tiling

    def __bool__(self) -> bool:
        return self.agree


def koo_check(pair, lam, window, tol: float = ZERO_TOL) -> KooResult:
    """Compare both sides of "Λ is a spectrum of A ⇔ B + Λ tiles" for a tight pair.

    ``pair`` is a :class:`SpectralPairVerdict` or :class:`ProductPair`.  The
    spectral side checks pairwise orthogonality of the exponentials on Λ ∩ window;
    completeness is taken from the tiling side, so spectrum = orthogonal ∧ tiling.
    """
    if not pair.tight:
        raise ValueError("koo_check needs a tight spectral pair")
    A, B = pair.A, pair.B
    if isinstance(B, IntervalUnion):
        lo, hi = (to_scalar(x) for x in window)
        v = check_tiling_1d(B, lam, (lo, hi))
        pts = lam.enumerate(lo, hi)
        diffs = sorted({abs(p - q) for i, p in enumerate(pts) for q in pts[i + 1:]})
    else:
        v = check_tiling_2d(B, lam, window)
        (x0, x1), (y0, y1) = window
        pts = lam.enumerate((to_scalar(x0), to_scalar(x1)), (to_scalar(y0), to_scalar(y1)))
        diffs = sorted({(p[0] - q[0], p[1] - q[1]) for i, p in enumerate(pts) for q in pts[i + 1:]})
    tiles = v.passed and v.status == "tiling"
    worst = max((abs(ft_region(A, d)) for d in diffs), default=0.0)
    orth = worst <= tol
    return KooResult(tiles, orth, orth and tiles, worst)


def chi_b_hat_product_form(beta, omega) -> float:
    """|χ̂_B(ω)| for B = ⋃_{k=0}^{2β} [2k/n, (2k+1)/n), n = 2β+1, in product form.

    |χ̂_B(ω)| = |sin(πω/n)/(πω)| · |sin(2πω)/sin(2πω/n)|.  The ratio of sines is
    evaluated as the Dirichlet sum Σ_k cos((n-1-2k)·2πω/n) near its removable
    singularities.
    """
    b = to_scalar(beta)
    n = 2 * b + 1
    if not (isinstance(n, Fraction) and n.denominator == 1) and not float(n).is_integer():
        raise ValueError("beta must lie in ½ℕ")
    n = int(n)
    w = float(omega)
    if w == 0:
        first = 1.0 / n
    else:
        first = abs(math.sin(math.pi * w / n) / (math.pi * w))
    s = 2 * math.pi * w / n
    if abs(math.sin(s)) < 0.1:
        ratio = sum(math.cos((n - 1 - 2 * k) * s) for k in range(n))
    else:
        ratio = math.sin(n * s) / math.sin(s)
    return first * abs(ratio)
