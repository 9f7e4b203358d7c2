"""Symbolic catalogs of the zero set of V_g g, g = χ_Ω, on the quadrant t, ν ≥ 0.

Only the quadrant is described; the full zero set follows from
|V(t, ν)| = |V(t, -ν)| = |V(-t, ν)|.

Two regimes are catalogued: 0 < α < 1/2 with β a positive integer, and
α = 1/2 with β ≥ 1/2.  For t ≥ α the overlap Ω ∩ (Ω + t) is empty or a single
interval and the zeros are strips and hyperbolas ν = k / length.  For
0 ≤ t < α the overlap is two intervals and V vanishes exactly when the four
unit vectors e^{-2πiν·endpoint} cancel in pairs, which yields lattice points
and horizontal lines.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

import numpy as np

from .fourier import stft_ww
from .intervals import RATIONAL, Scalar, to_scalar
from .window import ALPHA_HALF, ALPHA_LT_HALF, HALF, WindowParams, is_integer

log = logging.getLogger(__name__)

BOUNDARY_ZERO_TOL = 1e-9
SAMPLE_ORACLE_TOL = 1e-8


class SamplePoint(NamedTuple):
    t: float
    nu: float
    component_id: int
    component_kind: str


@dataclass(frozen=True)
class Span:
    """Interval with per-end closedness; ``hi`` may be ``math.inf``."""

    lo: Scalar
    hi: Scalar
    lo_closed: bool = True
    hi_closed: bool = False

    def contains(self, x) -> bool:
        above = x >= self.lo if self.lo_closed else x > self.lo
        below = x <= self.hi if self.hi_closed else x < self.hi
        return above and below

    def clamp(self, x):
        return min(max(x, self.lo), self.hi)

    @property
    def bounded(self) -> bool:
        return self.hi != math.inf

    def meet(self, other: "Span", tol: float = 0.0) -> Optional["Span"]:
        if self.lo > other.lo:
            lo, lc = self.lo, self.lo_closed
        elif self.lo < other.lo:
            lo, lc = other.lo, other.lo_closed
        else:
            lo, lc = self.lo, self.lo_closed and other.lo_closed
        if self.hi < other.hi:
            hi, hc = self.hi, self.hi_closed
        elif self.hi > other.hi:
            hi, hc = other.hi, other.hi_closed
        else:
            hi, hc = self.hi, self.hi_closed and other.hi_closed
        width = hi - lo
        if width > tol or (lc and hc and width >= -tol):
            return Span(lo, hi, lc, hc)
        return None

    def interior_point(self):
        if self.hi == math.inf:
            return self.lo + 1 if not self.lo_closed else self.lo
        if self.hi <= self.lo:
            return self.lo
        return (self.lo + self.hi) / 2

    def describe(self) -> str:
        hi = "inf" if self.hi == math.inf else str(self.hi)
        return f"{'[' if self.lo_closed else '('}{self.lo}, {hi}{']' if self.hi_closed else ')'}"

    def to_json(self) -> dict:
        from .intervals import format_scalar
        return {"lo": format_scalar(self.lo), "hi": None if self.hi == math.inf else format_scalar(self.hi),
                "lo_closed": self.lo_closed, "hi_closed": self.hi_closed}


def _with_end(span: Span, end: str, closed: bool) -> Span:
    if end == "lo":
        return Span(span.lo, span.hi, closed, span.hi_closed)
    return Span(span.lo, span.hi, span.lo_closed, closed)


def _scaled_dist(p, q, scale) -> float:
    return math.hypot((float(p[0]) - float(q[0])) / scale[0], (float(p[1]) - float(q[1])) / scale[1])


def _uniform(lo: float, hi: float, n: int) -> list:
    if n <= 1 or hi <= lo:
        return [lo]
    return [lo + (hi - lo) * i / (n - 1) for i in range(n)]


# components ---------------------------------------------------------------

@dataclass(frozen=True)
class VerticalStrip:
    """Every (t, ν) with t in ``t_range``: the overlap is empty there."""

    t_range: Span
    label: str = ""
    kind = "vertical_strip"

    def exact_contains(self, t, nu) -> bool:
        return self.t_range.contains(t)

    def candidates(self, t, nu) -> list:
        return [(self.t_range.clamp(t), nu)]

    def sample(self, t_max: float, nu_max: float, resolution: int) -> list:
        r = self.t_range
        lo, hi = float(r.lo), min(float(r.hi), t_max)
        if lo > t_max:
            return []
        side = max(1, int(math.isqrt(max(resolution, 1))))
        if hi <= lo:
            if not (r.lo_closed and (r.hi_closed or r.hi > r.lo)):
                return []
            ts = [lo]
        else:
            ts = [lo + (hi - lo) * (i + 0.5) / side for i in range(side)]
        nus = [nu_max * (j + 0.5) / side for j in range(side)]
        return [(t, nu) for t in ts for nu in nus]

    def meets(self, t_spans, nu_spans, tol):
        for ts in t_spans:
            m = ts.meet(self.t_range, tol)
            if m is not None and nu_spans:
                return (m.interior_point(), nu_spans[0].interior_point())
        return None

    def probe(self, end: str):
        x = self.t_range.lo if end == "lo" else self.t_range.hi
        return (x, 1) if x != math.inf else None

    def with_range(self, span: Span):
        return VerticalStrip(span, self.label)

    def to_json(self) -> dict:
        return {"kind": self.kind, "label": self.label, "t_range": self.t_range.to_json()}


@dataclass(frozen=True)
class HyperbolaFamily:
    """ν = k / (c + sign·t) for k = 1, 2, ... and t in ``t_range``."""

    t_range: Span
    c: Scalar
    sign: int
    label: str = ""
    kind = "hyperbola_family"

    def length(self, t):
        return self.c + self.sign * t

    def exact_contains(self, t, nu) -> bool:
        if not self.t_range.contains(t):
            return False
        L = self.length(t)
        if L <= 0:
            return False
        k = nu * L
        return k >= 1 and k == int(k)

    def candidates(self, t, nu) -> list:
        out = []
        tc = self.t_range.clamp(t)
        L = self.length(tc)
        if L > 0:
            k0 = float(nu) * float(L)
            for k in {math.floor(k0), math.ceil(k0)}:
                if k >= 1:
                    out.append((tc, k / L))
        if nu > 0:
            L = self.length(t)
            k0 = float(nu) * float(L) if L > 0 else 0.0
            for k in {math.floor(k0), math.ceil(k0)}:
                if k >= 1:
                    tt = (k / nu - self.c) / self.sign
                    if self.t_range.contains(tt):
                        out.append((tt, nu))
        return out

    def _branch_range(self, k: int, t_max: float, nu_max: float):
        """t-interval of branch k inside [0, t_max] × [0, ν_max]."""
        lo, hi = float(self.t_range.lo), min(float(self.t_range.hi), t_max)
        if hi < lo:
            return None
        # ν ≤ ν_max  ⇔  length ≥ k / ν_max
        bound = (k / nu_max - float(self.c)) / self.sign
        if self.sign > 0:
            lo = max(lo, bound)
        else:
            hi = min(hi, bound)
        return (lo, hi) if hi > lo else None

    def sample(self, t_max: float, nu_max: float, resolution: int) -> list:
        pts = []
        k = 1
        while True:
            rng = self._branch_range(k, t_max, nu_max)
            if rng is None:
                break
            lo, hi = rng
            if not self.t_range.contains(lo):
                lo += 1e-9 * (hi - lo)
            if not self.t_range.contains(hi):
                hi -= 1e-9 * (hi - lo)
            dense = np.linspace(lo, hi, 4097)
            nus = k / (float(self.c) + self.sign * dense)
            seg = np.hypot(np.diff(dense) / t_max, np.diff(nus) / nu_max)
            s = np.concatenate([[0.0], np.cumsum(seg)])
            targets = np.linspace(0.0, s[-1], max(2, resolution))
            for t in np.interp(targets, s, dense):
                t = float(t)
                pts.append((t, k / (float(self.c) + self.sign * t)))
            k += 1
        return pts

    def meets(self, t_spans, nu_spans, tol):
        if not nu_spans:
            return None
        nu_top = max(s.hi for s in nu_spans)
        for ts in t_spans:
            m = ts.meet(self.t_range, tol)
            if m is None:
                continue
            La, Lb = self.length(m.lo), self.length(m.hi) if m.hi != math.inf else -math.inf
            if self.sign > 0:
                L_small, L_big, c_small, c_big = La, Lb, m.lo_closed, m.hi_closed
            else:
                L_small, L_big, c_small, c_big = Lb, La, m.hi_closed, m.lo_closed
            if L_big <= 0:
                continue
            k = 1
            while k <= nu_top * L_big + 1:
                lo_nu = k / L_big
                hi_nu, hc = (k / L_small, c_small) if L_small > 0 else (math.inf, False)
                image = Span(lo_nu, hi_nu, c_big, hc)
                for ns in nu_spans:
                    hit = image.meet(ns, tol)
                    if hit is not None:
                        nu = hit.interior_point()
                        return ((k / nu - self.c) / self.sign, nu)
                k += 1
        return None

    def probe(self, end: str):
        x = self.t_range.lo if end == "lo" else self.t_range.hi
        L = self.length(x)
        return (x, 1 / L) if L > 0 else None

    def with_range(self, span: Span):
        return HyperbolaFamily(span, self.c, self.sign, self.label)

    def to_json(self) -> dict:
        from .intervals import format_scalar
        return {"kind": self.kind, "label": self.label, "t_range": self.t_range.to_json(),
                "c": format_scalar(self.c), "sign": self.sign}


@dataclass(frozen=True)
class HorizontalLineFamily:
    """ν = (q·j + r) / d for integers j ≥ j_min, every t in ``t_range``."""

    t_range: Span
    q: int
    r: int
    d: Scalar
    j_min: int = 0
    label: str = ""
    kind = "horizontal_line_family"

    def value(self, j: int):
        return (self.q * j + self.r) / self.d

    def _index(self, nu):
        return (nu * self.d - self.r) / self.q

    def exact_contains(self, t, nu) -> bool:
        if not self.t_range.contains(t):
            return False
        j = self._index(nu)
        return j == int(j) and j >= self.j_min

    def candidates(self, t, nu) -> list:
        j0 = float(self._index(nu))
        tc = self.t_range.clamp(t)
        return [(tc, self.value(j)) for j in {math.floor(j0), math.ceil(j0)} if j >= self.j_min]

    def values_upto(self, nu_max) -> list:
        out = []
        j = self.j_min
        while self.value(j) <= nu_max:
            out.append(self.value(j))
            j += 1
        return out

    def sample(self, t_max: float, nu_max: float, resolution: int) -> list:
        lo, hi = float(self.t_range.lo), min(float(self.t_range.hi), t_max)
        if hi < lo:
            return []
        if not self.t_range.contains(hi):
            hi -= 1e-9 * (hi - lo)
        ts = _uniform(lo, hi, resolution)
        return [(t, float(v)) for v in self.values_upto(nu_max) for t in ts]

    def meets(self, t_spans, nu_spans, tol):
        if not nu_spans:
            return None
        nu_top = max(s.hi for s in nu_spans)
        t_hits = [m for ts in t_spans if (m := ts.meet(self.t_range, tol)) is not None]
        if not t_hits:
            return None
        for v in self.values_upto(nu_top):
            point = Span(v, v, True, True)
            for ns in nu_spans:
                if point.meet(ns, tol) is not None:
                    return (t_hits[0].interior_point(), v)
        return None

    def probe(self, end: str):
        x = self.t_range.lo if end == "lo" else self.t_range.hi
        j = self.j_min
        while self.value(j) <= 0:
            j += 1
        return (x, self.value(j))

    def with_range(self, span: Span):
        return HorizontalLineFamily(span, self.q, self.r, self.d, self.j_min, self.label)

    def to_json(self) -> dict:
        from .intervals import format_scalar
        return {"kind": self.kind, "label": self.label, "t_range": self.t_range.to_json(),
                "q": self.q, "r": self.r, "d": format_scalar(self.d), "j_min": self.j_min}


@dataclass(frozen=True)
class DiscretePointFamily:
    """Points (c + sign·k/ν, ν) with ν = n/d, integers n, k ≥ 1, t in ``t_range``."""

    t_range: Span
    d: Scalar
    c: Scalar
    sign: int
    label: str = ""
    kind = "discrete_point_family"

    def exact_contains(self, t, nu) -> bool:
        if not self.t_range.contains(t) or nu <= 0:
            return False
        n = nu * self.d
        k = self.sign * (t - self.c) * nu
        return n == int(n) and n >= 1 and k == int(k) and k >= 1

    def point(self, n: int, k: int):
        nu = n / self.d
        return (self.c + self.sign * k / nu, nu)

    def _ks(self, nu, lo, hi) -> range:
        if self.sign > 0:
            a, b = nu * (lo - self.c), nu * (hi - self.c)
        else:
            a, b = nu * (self.c - hi), nu * (self.c - lo)
        return range(max(1, math.floor(a) - 1), math.ceil(b) + 2)

    def enumerate(self, t_max, nu_max) -> list:
        lo = self.t_range.lo
        hi = min(self.t_range.hi, t_max)
        out = []
        n = 1
        while n / self.d <= nu_max:
            nu = n / self.d
            for k in self._ks(nu, lo, hi):
                t, _ = self.point(n, k)
                if self.t_range.contains(t) and t <= t_max:
                    out.append((t, nu))
            n += 1
        return out

    def candidates(self, t, nu) -> list:
        out = []
        n0 = float(nu) * float(self.d)
        for n in {math.floor(n0), math.ceil(n0)}:
            if n < 1:
                continue
            nu_n = n / self.d
            k0 = self.sign * (float(t) - float(self.c)) * float(nu_n)
            for k in {math.floor(k0), math.ceil(k0)}:
                if k >= 1:
                    p = self.point(n, k)
                    if self.t_range.contains(p[0]):
                        out.append(p)
        return out

    def sample(self, t_max: float, nu_max: float, resolution: int) -> list:
        return [(float(t), float(nu)) for t, nu in self.enumerate(t_max, nu_max)]

    def meets(self, t_spans, nu_spans, tol):
        if not nu_spans:
            return None
        nu_top = max(s.hi for s in nu_spans)
        t_top = max(s.hi for s in t_spans) if t_spans else -1
        for t, nu in self.enumerate(min(t_top, self.t_range.hi), nu_top):
            pt, pn = Span(t, t, True, True), Span(nu, nu, True, True)
            if any(pt.meet(s, tol) for s in t_spans) and any(pn.meet(s, tol) for s in nu_spans):
                return (t, nu)
        return None

    def probe(self, end: str, n_max: int = 400):
        x = self.t_range.lo if end == "lo" else self.t_range.hi
        for n in range(1, n_max + 1):
            nu = n / self.d
            k = self.sign * (x - self.c) * nu
            kr = round(float(k))
            if kr >= 1 and (k == kr if not isinstance(k, float) else abs(k - kr) < 1e-12):
                return (x, nu)
        return None

    def with_range(self, span: Span):
        return DiscretePointFamily(span, self.d, self.c, self.sign, self.label)

    def to_json(self) -> dict:
        from .intervals import format_scalar
        return {"kind": self.kind, "label": self.label, "t_range": self.t_range.to_json(),
                "d": format_scalar(self.d), "c": format_scalar(self.c), "sign": self.sign}


# catalog --------------------------------------------------------------------

@dataclass(frozen=True)
class ZeroSetDescription:
    alpha: Scalar
    beta: Scalar
    regime: str
    components: tuple
    notes: tuple = ()
    resonance: str = "none"

    @property
    def window(self) -> WindowParams:
        return WindowParams(self.alpha, self.beta)

    @property
    def exact(self) -> bool:
        return not isinstance(self.alpha, float)

    def contains(self, p, tol: float = 1e-9) -> bool:
        return contains(self, p, tol)

    def distance(self, p, scale=(1.0, 1.0)) -> float:
        return distance(self, p, scale)

    def sample(self, t_max, nu_max, resolution: int = 200) -> list:
        return sample(self, t_max, nu_max, resolution)

    def to_json(self) -> dict:
        from .intervals import format_scalar
        return {"alpha": format_scalar(self.alpha), "beta": format_scalar(self.beta), "regime": self.regime,
                "resonance": self.resonance, "notes": list(self.notes),
                "components": [c.to_json() for c in self.components]}


def _decide_boundaries(w: WindowParams, comps: list) -> tuple:
    """Fix the closedness of every finite t-range end by evaluating V there."""
    fixed, notes = [], []
    for i, comp in enumerate(comps):
        span = comp.t_range
        for end in ("lo", "hi"):
            x = span.lo if end == "lo" else span.hi
            if x == math.inf:
                continue
            p = comp.probe(end)
            if p is None:
                closed = False
                why = "not attained (nu unbounded or no lattice point)"
                if isinstance(comp, DiscretePointFamily):
                    closed = span.lo_closed if end == "lo" else span.hi_closed
                    why = "no lattice point found at the end; derivation's convention kept"
            else:
                v = abs(stft_ww(w, p[0], p[1]))
                closed = v < BOUNDARY_ZERO_TOL
                why = f"|V({float(p[0]):.6g}, {float(p[1]):.6g})| = {v:.3g}"
            span = _with_end(span, end, closed)
            notes.append(f"component {i} ({comp.label}) t={x}: {'closed' if closed else 'open'}; {why}")
        fixed.append(comp.with_range(span))
    return tuple(fixed), notes


def _resonance(alpha: Scalar, beta: Scalar):
    """Return the denominator q of r = (β+α)/(1-2α) when r = odd/even, else None."""
    if isinstance(alpha, Fraction):
        r = (beta + alpha) / (1 - 2 * alpha)
        flag = "exact"
    else:
        x = (float(beta) + float(alpha)) / (1 - 2 * float(alpha))
        r = Fraction(x).limit_denominator(1000)
        if abs(float(r) - x) > 1e-12:
            return None, "none"
        flag = "numerically resonant"
    if r.numerator % 2 == 1 and r.denominator % 2 == 0:
        return r.denominator, flag
    return None, "none"


def zero_set_alpha_lt_half(alpha, beta) -> ZeroSetDescription:
    w = WindowParams(alpha, beta)
    a, b = w.alpha, w.beta
    if w.is_half() or a >= HALF:
        raise ValueError("wrong regime: this catalog needs 0 < alpha < 1/2")
    if not is_integer(b, 1e-12 if isinstance(b, float) else 0):
        raise ValueError("wrong regime: this catalog needs beta to be a positive integer")
    one = 1 if isinstance(a, Fraction) else 1.0
    comps = [
        VerticalStrip(Span(one - a, b, True, True), "empty overlap, 1-alpha <= t <= beta"),
        VerticalStrip(Span(b + 1, math.inf, True, False), "empty overlap, t >= beta+1"),
        HyperbolaFamily(Span(a, one - a), one - a, -1, "nu = k/(1-alpha-t)"),
        HyperbolaFamily(Span(b, b + a), -b, 1, "nu = k/(t-beta)"),
        HorizontalLineFamily(Span(b + a, b + 1 - a), 1, 0, a, 1, "nu = k/alpha"),
        HyperbolaFamily(Span(b + 1 - a, b + 1), b + 1, -1, "nu = k/(beta+1-t)"),
        DiscretePointFamily(Span(0 * a, a), one - 2 * a, a, -1, "(alpha - k/nu, nu), nu = n/(1-2alpha)"),
        DiscretePointFamily(Span(0 * a, a), 2 * b + 1, -b, 1, "(k/nu - beta, nu), nu = n/(2beta+1)"),
    ]
    notes = ["pairing e^{-2pi i nu t} = e^{-2pi i nu (beta+1)}, e^{-2pi i nu alpha} = "
             "e^{-2pi i nu (beta+alpha+t)} gives nu(2beta+1) in Z; integer nu is the subfamily "
             "n divisible by 2beta+1"]
    q, flag = _resonance(a, b)
    if q is not None:
        comps.append(HorizontalLineFamily(Span(0 * a, a), q, q // 2, one - 2 * a, 0,
                                          "resonant lines nu = n/(1-2alpha)"))
        notes.append(f"resonance r = (beta+alpha)/(1-2alpha) has even denominator {q} ({flag})")
    comps, bnotes = _decide_boundaries(w, comps)
    return ZeroSetDescription(a, b, ALPHA_LT_HALF, comps, tuple(notes + bnotes), flag if q else "none")


def zero_set_alpha_half(beta) -> ZeroSetDescription:
    b = to_scalar(beta)
    half = HALF if isinstance(b, Fraction) else 0.5
    w = WindowParams(half, b)
    if b < half:
        raise ValueError("wrong regime: alpha = 1/2 needs beta >= 1/2 (beta < 1/2 is open)")
    zero = 0 * half
    comps = [
        VerticalStrip(Span(half, b, True, True), "empty overlap, 1/2 <= t <= beta"),
        VerticalStrip(Span(b + 1, math.inf, True, False), "empty overlap, t >= beta+1"),
        HyperbolaFamily(Span(b, b + half, False, False), -b, 1, "nu = k/(t-beta)"),
        HyperbolaFamily(Span(b + half, b + 1), b + 1, -1, "nu = k/(beta+1-t)"),
        HyperbolaFamily(Span(zero, half, True, True), half, -1, "nu = k/(1/2-t)"),
        DiscretePointFamily(Span(zero, half, True, True), 2 * b + 1, -b, 1, "(k/nu - beta, nu), nu = n/(2beta+1)"),
        HorizontalLineFamily(Span(zero, half, True, True), 2, 1, 2 * b + 1, 0, "nu = (2j+1)/(2beta+1)"),
    ]
    t0 = half / 2 if isinstance(half, Fraction) else 0.25
    odd = abs(stft_ww(w, t0, 1 / (2 * b + 1)))
    even = abs(stft_ww(w, t0, 2 / (2 * b + 1)))
    notes = [f"horizontal lines on 0 <= t < 1/2: odd numerators vanish (|V(t,1/(2beta+1))| = {odd:.3g}), "
             f"even numerators do not (|V(t,2/(2beta+1))| = {even:.3g})"]
    comps, bnotes = _decide_boundaries(w, comps)
    return ZeroSetDescription(w.alpha, b, ALPHA_HALF, comps, tuple(notes + bnotes))


def zero_catalog(w: WindowParams) -> Optional[ZeroSetDescription]:
    """The catalog for ``w`` when its regime has one, else None."""
    if w.is_half():
        return zero_set_alpha_half(w.beta) if w.beta >= HALF else None
    if is_integer(w.beta, 1e-12 if not w.exact else 0):
        return zero_set_alpha_lt_half(w.alpha, w.beta)
    return None


# queries --------------------------------------------------------------------

def reflect(p):
    """Map (t, ν) to the quadrant t, ν ≥ 0."""
    return (abs(p[0]), abs(p[1]))


def _check_quadrant(p):
    if p[0] < 0 or p[1] < 0:
        raise ValueError("point outside the quadrant t, nu >= 0: apply symmetry first")


def contains(zs: ZeroSetDescription, p, tol: float = 1e-9) -> bool:
    """Membership of ``p`` in the catalogued quadrant zero set.

    With ``tol == 0`` and rational data the test is exact; otherwise it is
    "within ``tol``" in the Euclidean (t, ν) metric.
    """
    _check_quadrant(p)
    t, nu = p
    if tol == 0 and zs.exact and not isinstance(t, float) and not isinstance(nu, float):
        t, nu = to_scalar(t), to_scalar(nu)
        return any(c.exact_contains(t, nu) for c in zs.components)
    return distance(zs, p) <= tol


def distance(zs: ZeroSetDescription, p, scale=(1.0, 1.0)) -> float:
    """Distance from ``p`` to the nearest catalogued zero, coordinates divided by ``scale``.

    Computed against concrete points on the components, so it never
    underestimates the true distance.
    """
    _check_quadrant(p)
    t, nu = float(p[0]), float(p[1])
    best = math.inf
    for comp in zs.components:
        for q in comp.candidates(t, nu):
            best = min(best, _scaled_dist((t, nu), q, scale))
        if best == 0.0:
            break
    return best


def sample(zs: ZeroSetDescription, t_max, nu_max, resolution: int = 200) -> list:
    """Deterministic points of every component inside [0, t_max] × [0, ν_max].

    Each emitted point is re-checked against the closed-form STFT; points with
    |V| ≥ 1e-8 are dropped and logged.
    """
    t_max, nu_max = float(t_max), float(nu_max)
    if t_max <= 0 or nu_max <= 0:
        return []
    w = zs.window
    out, rejected = [], 0
    for i, comp in enumerate(zs.components):
        for t, nu in comp.sample(t_max, nu_max, resolution):
            t, nu = float(t), float(nu)
            if not (0 <= t <= t_max and 0 <= nu <= nu_max):
                continue
            if abs(stft_ww(w, t, nu)) >= SAMPLE_ORACLE_TOL:
                rejected += 1
                continue
            out.append(SamplePoint(t, nu, i, comp.kind))
    if rejected:
        log.warning("dropped %d sampled points failing the |V| < %g check", rejected, SAMPLE_ORACLE_TOL)
    return out


def zero_free_predicates(w: WindowParams, t, nu, tol: float = 1e-9) -> bool:
    """True when (t, ν) lies in a region known to be zero-free.

    Single interval I: |ν| < 1/|I|.  Two unequal intervals of total length < 1:
    |ν| ≤ 1.  Equal intervals of length ≤ 1/2: |ν| < 2 off the odd lattice
    ν = k / (2·(midpoint gap)).  The three-interval overlap arising when
    β < t < α: |ν| ≤ 1.
    """
    from .fourier import overlap
    t, nu = to_scalar(t), to_scalar(nu)
    t, nu = abs(t), abs(nu)
    ov = overlap(w, t)
    if not ov:
        return False
    if nu == 0:
        return True
    parts = ov.parts
    exact = ov.mode == RATIONAL and not isinstance(nu, float)
    eps = 0 if exact else 1e-12
    if len(parts) == 1:
        return nu * parts[0].length < 1
    if len(parts) == 2:
        l1, l2 = parts[0].length, parts[1].length
        if abs(l1 - l2) <= eps:
            if l1 > HALF or nu >= 2:
                return False
            gap = parts[1].midpoint - parts[0].midpoint
            x = nu * 2 * gap
            k = round(x)
            if k % 2 == 1 and abs(x - k) <= (0 if exact else max(tol * 2 * float(gap), eps)):
                return False
            return True
        return l1 + l2 < 1 and nu <= 1
    if len(parts) == 3:
        a, b = w.alpha, w.beta
        if 0 < b < t < a < HALF:
            return nu <= 1
    return False
