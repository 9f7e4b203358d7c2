"""Fourier transforms of interval indicators and the STFT with indicator windows.

For indicator functions ``f = χ_F`` and ``g = χ_G`` the short-time Fourier
transform reduces to a Fourier transform of an intersection::

    V_g f(t, ν) = ∫ χ_F(x) χ_G(x - t) e^{-2πixν} dx = FT[χ_{F ∩ (G+t)}](ν)

The quadrature routines here do not use that reduction; they integrate the
defining integrand directly and serve as the independent check.
"""

from __future__ import annotations

import cmath
import math
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .intervals import IntervalUnion, Scalar, intersect, to_scalar, translate
from .window import WindowParams

SERIES_CUTOFF = 1e-8


class TimeFrequencyPoint(NamedTuple):
    t: Scalar
    nu: Scalar


def _part_ft(a: float, b: float, nu: float) -> complex:
    length = b - a
    x = math.pi * nu * length
    if abs(x) < SERIES_CUTOFF:
        mag = length * (1.0 - x * x / 6.0)
    else:
        mag = math.sin(x) / (math.pi * nu)
    return mag * cmath.exp(-1j * math.pi * (a + b) * nu)


def ft_indicator(A: IntervalUnion, nu) -> complex:
    """FT[χ_A](ν) = Σ_parts sin(πν(b-a))/(πν) · e^{-πi(a+b)ν}."""
    nu = float(nu)
    total = 0j
    for p in A.parts:
        total += _part_ft(float(p.lo), float(p.hi), nu)
    return total


def ft_parts_array(parts, nu: np.ndarray) -> np.ndarray:
    """Vectorized FT over an array of frequencies; ``parts`` is a list of (lo, hi) floats."""
    nu = np.asarray(nu, dtype=float)
    out = np.zeros(nu.shape, dtype=complex)
    for a, b in parts:
        length = b - a
        x = np.pi * nu * length
        small = np.abs(x) < SERIES_CUTOFF
        safe = np.where(small, 1.0, nu)
        mag = np.where(small, length * (1.0 - x * x / 6.0), np.sin(x) / (np.pi * safe))
        out += mag * np.exp(-1j * np.pi * (a + b) * nu)
    return out


def _float_parts(A: IntervalUnion) -> list:
    return [(float(p.lo), float(p.hi)) for p in A.parts]


def overlap(w: WindowParams, t) -> IntervalUnion:
    """Ω ∩ (Ω + t)."""
    om = w.omega
    return intersect(om, translate(om, to_scalar(t), promote=True), promote=True)


def stft_ww(w: WindowParams, t, nu) -> complex:
    """V_g g(t, ν) for g = χ_Ω."""
    t = to_scalar(t)
    if t >= 0:
        return ft_indicator(overlap(w, t), nu)
    # Ω ∩ (Ω + t) = (Ω ∩ (Ω + |t|)) + t for t < 0
    reflected = translate(overlap(w, -t), t, promote=True)
    return ft_indicator(reflected, nu)


def stft_cross(F: IntervalUnion, w: WindowParams, t, nu) -> complex:
    """V_g f(t, ν) for f = χ_F and g = χ_Ω."""
    shifted = translate(w.omega, to_scalar(t), promote=True)
    return ft_indicator(intersect(F, shifted, promote=True), nu)


def decay_bound(w: WindowParams, t, nu) -> float:
    """Upper bound for |V_g g(t, ν)|: min(|overlap|, #parts / (π|ν|))."""
    ov = overlap(w, abs(to_scalar(t)))
    m = float(ov.measure())
    nu = abs(float(nu))
    if nu == 0 or not ov:
        return m
    return min(m, len(ov) / (math.pi * nu))


def stft_ww_grid(w: WindowParams, ts, nus) -> np.ndarray:
    """Complex array ``V[i, j] = V_g g(ts[i], nus[j])``."""
    nus = np.asarray(nus, dtype=float)
    rows = []
    for t in ts:
        t = float(t)
        ov = overlap(w, abs(t))
        parts = _float_parts(ov)
        if t < 0:
            parts = [(a + t, b + t) for a, b in parts]
        rows.append(ft_parts_array(parts, nus))
    return np.array(rows).reshape(len(rows), len(nus))


# quadrature oracle --------------------------------------------------------

@lru_cache(maxsize=None)
def _gauss_legendre(order: int):
    return np.polynomial.legendre.leggauss(order)


def _panel_rule(lo: float, hi: float, panels: int, order: int):
    x, wts = _gauss_legendre(order)
    h = (hi - lo) / panels
    starts = lo + h * np.arange(panels)
    nodes = (starts[:, None] + h * (x[None, :] + 1.0) / 2.0).ravel()
    weights = np.tile(wts * h / 2.0, panels)
    return nodes, weights


def _integrate_indicator_product(sets, nu: float, n: int, order: int = 8) -> complex:
    """∫ Π_S χ_S(x) e^{-2πixν} dx by composite Gauss-Legendre.

    The integration range is cut at every endpoint of every set; on each cell
    membership is decided at the midpoint, so no set algebra is involved.
    """
    if n < 2:
        raise ValueError("need at least 2 panels per part")
    floats = [s.to_float() for s in sets]
    cuts = sorted({float(e) for s in floats for e in s.endpoints()})
    total = 0j
    for lo, hi in zip(cuts, cuts[1:]):
        mid = 0.5 * (lo + hi)
        if not all(s.contains(mid) for s in floats):
            continue
        panels = max(n, math.ceil(8 * abs(nu) * (hi - lo)))
        nodes, weights = _panel_rule(lo, hi, panels, order)
        total += complex(np.sum(weights * np.exp(-2j * np.pi * nu * nodes)))
    return total


def quadrature_stft(F: IntervalUnion, G: IntervalUnion, t, nu, n: int = 64) -> complex:
    """Quadrature of ∫ χ_F(x) χ_G(x - t) e^{-2πixν} dx."""
    shifted = translate(G.to_float(), float(t))
    return _integrate_indicator_product([F, shifted], float(nu), n)


def covariance_check(F: IntervalUnion, w: WindowParams, lam: TimeFrequencyPoint, x, nu, n: int = 64):
    """Both sides of V_g(f_λ)(x, ν) = e^{-2πi t(ν-ω)} V_g f(x - t, ν - ω), λ = (t, ω).

    The left side integrates the shifted, modulated indicator by quadrature;
    the right side uses the closed form.
    """
    t0, w0 = float(lam[0]), float(lam[1])
    x, nu = float(x), float(nu)
    # f_λ(y) = χ_F(y - t0) e^{2πiyω0}; the modulation folds into the frequency
    lhs = _integrate_indicator_product(
        [translate(F.to_float(), t0), translate(w.omega.to_float(), x)], nu - w0, n)
    rhs = cmath.exp(-2j * math.pi * t0 * (nu - w0)) * stft_cross(F, w, x - t0, nu - w0)
    return lhs, rhs


# two-dimensional quadrature ----------------------------------------------

def _t_breakpoints(F: IntervalUnion, G: IntervalUnion, lo: float, hi: float) -> list:
    cuts = {lo, hi}
    for f in F.endpoints():
        for g in G.endpoints():
            d = float(f) - float(g)
            if lo < d < hi:
                cuts.add(d)
    return sorted(cuts)


def stft_inner_product_box(F1: IntervalUnion, G1: IntervalUnion, F2: IntervalUnion, G2: IntervalUnion,
                           t_range, nu_max: float, panels_per_period: float = 2.0,
                           order: int = 8) -> complex:
    """∫∫ V_{G1}F1 · conj(V_{G2}F2) over [t_lo, t_hi] × [-ν_max, ν_max]."""
    t_lo, t_hi = map(float, t_range)
    nu_max = float(nu_max)
    F1f, G1f, F2f, G2f = (s.to_float() for s in (F1, G1, F2, G2))
    cuts = sorted(set(_t_breakpoints(F1f, G1f, t_lo, t_hi)) | set(_t_breakpoints(F2f, G2f, t_lo, t_hi)))
    diam = max(float(s.diameter) for s in (F1f, G1f, F2f, G2f) if s)
    nu_panels = max(2, math.ceil(panels_per_period * 2 * nu_max * diam))
    nu_nodes, nu_w = _panel_rule(-nu_max, nu_max, nu_panels, order)
    same = F1 is F2 and G1 is G2
    total = 0j
    for lo, hi in zip(cuts, cuts[1:]):
        t_panels = max(2, math.ceil(panels_per_period * nu_max * (hi - lo)))
        t_nodes, t_w = _panel_rule(lo, hi, t_panels, order)
        for t, wt in zip(t_nodes, t_w):
            p1 = _float_parts(intersect(F1f, translate(G1f, float(t))))
            p2 = p1 if same else _float_parts(intersect(F2f, translate(G2f, float(t))))
            if not p1 or not p2:
                continue
            v1 = ft_parts_array(p1, nu_nodes)
            v2 = v1 if same else ft_parts_array(p2, nu_nodes)
            total += wt * complex(np.sum(nu_w * v1 * np.conj(v2)))
    return total


def stft_energy_box(F: IntervalUnion, G: IntervalUnion, t_range, nu_max: float, **kw) -> float:
    """∫∫ |V_G F|² over [t_lo, t_hi] × [-ν_max, ν_max]."""
    return stft_inner_product_box(F, G, F, G, t_range, nu_max, **kw).real
