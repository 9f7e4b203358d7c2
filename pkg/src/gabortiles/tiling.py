"""Packing and tiling checks for interval unions on ℝ and product regions on ℝ².

Coverage is computed by endpoint sweeps.  In rational mode every count is an
exact integer; in float mode segments shorter than ``SLIVER`` are ignored when
deciding a verdict, since they are artifacts of rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Callable, Optional, Sequence

from .intervals import (FLOAT, RATIONAL, Interval, IntervalUnion, Scalar, common_mode,
                        format_scalar, to_scalar)
from .window import HALF, is_half_integer_multiple, is_integer

SLIVER = 1e-9

PACKING_STRICT = "packing_strict"
TILING = "tiling"
OVERLAP = "overlap"
GAP = "gap"


# translation sets -------------------------------------------------------------

@dataclass(frozen=True)
class Coset:
    """The arithmetic progression pℤ + o."""

    p: Scalar
    o: Scalar

    def __post_init__(self):
        p, o = to_scalar(self.p), to_scalar(self.o)
        if not p > 0:
            raise ValueError(f"coset period must be positive, got {p}")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "o", o)

    def enumerate(self, lo, hi) -> list:
        """Members in the closed range [lo, hi]."""
        k0 = math.ceil((lo - self.o) / self.p)
        k1 = math.floor((hi - self.o) / self.p)
        return [self.o + k * self.p for k in range(k0, k1 + 1)]

    def contains(self, x, tol: float = 0.0) -> bool:
        q = (to_scalar(x) - self.o) / self.p
        if isinstance(q, Fraction):
            return q.denominator == 1
        return abs(q - round(q)) * float(self.p) <= tol

    def to_json(self) -> dict:
        return {"p": _enc(self.p), "o": _enc(self.o)}


def _enc(x):
    """Translation-set JSON writes every scalar as a string."""
    v = format_scalar(x)
    return v if isinstance(v, str) else repr(v)


def _lcm_rational(values) -> Scalar:
    """Least common multiple of positive rationals; floats give None."""
    if any(isinstance(v, float) for v in values):
        return None
    num = reduce(lambda a, b: a * b // math.gcd(a, b), (v.numerator for v in values), 1)
    den = reduce(math.gcd, (v.denominator for v in values), 0)
    return Fraction(num, den)


@dataclass(frozen=True)
class TranslationSet1D:
    points: tuple = ()
    cosets: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(sorted(set(to_scalar(x) for x in self.points))))
        object.__setattr__(self, "cosets", tuple(c if isinstance(c, Coset) else Coset(*c) for c in self.cosets))

    @classmethod
    def integers(cls, p=1, offsets=(0,)) -> "TranslationSet1D":
        """pℤ + offsets."""
        return cls((), tuple(Coset(p, o) for o in offsets))

    @property
    def mode(self) -> str:
        vals = list(self.points) + [v for c in self.cosets for v in (c.p, c.o)]
        return common_mode(vals, promote=True)

    @property
    def period(self) -> Optional[Scalar]:
        """A common period of all cosets when there are no isolated points."""
        if self.points or not self.cosets:
            return None
        return _lcm_rational([c.p for c in self.cosets])

    def enumerate(self, lo, hi) -> list:
        """Members in [lo, hi] with multiplicity (overlapping cosets repeat points)."""
        out = [x for x in self.points if lo <= x <= hi]
        for c in self.cosets:
            out.extend(c.enumerate(lo, hi))
        return sorted(out)

    def contains(self, x, tol: float = 0.0) -> bool:
        x = to_scalar(x)
        if any(abs(x - p) <= tol for p in self.points):
            return True
        return any(c.contains(x, tol) for c in self.cosets)

    def scale(self, c) -> "TranslationSet1D":
        c = to_scalar(c)
        return TranslationSet1D(tuple(x * c for x in self.points),
                                tuple(Coset(k.p * c, k.o * c) for k in self.cosets))

    def shift(self, a) -> "TranslationSet1D":
        a = to_scalar(a)
        return TranslationSet1D(tuple(x + a for x in self.points),
                                tuple(Coset(k.p, k.o + a) for k in self.cosets))

    def to_json(self) -> dict:
        return {"dim": 1, "points": [_enc(x) for x in self.points], "cosets": [c.to_json() for c in self.cosets]}

    @classmethod
    def from_json(cls, d: dict) -> "TranslationSet1D":
        if not isinstance(d, dict):
            raise ValueError("translation set must be a JSON object")
        if d.get("dim", 1) != 1:
            raise ValueError("expected a 1-D translation set (dim = 1)")
        pts = d.get("points", [])
        cos = d.get("cosets", [])
        if not isinstance(pts, list) or not isinstance(cos, list):
            raise ValueError("'points' and 'cosets' must be lists")
        try:
            return cls(tuple(to_scalar(x) for x in pts), tuple(Coset(c["p"], c["o"]) for c in cos))
        except (KeyError, TypeError) as e:
            raise ValueError(f"coset entries need 'p' and 'o': {e}") from None


@dataclass(frozen=True)
class Fiber:
    t: Scalar
    freq_set: TranslationSet1D


@dataclass(frozen=True)
class TranslationSet2D:
    """Λ ⊂ ℝ² as fibers {t} × F_t.

    With ``t_period`` the listed fibers are a fundamental set repeated under
    t ↦ t + m·P.  Without it, ``t_extent`` names the closed t-range on which
    the list is complete; when both are absent the list is all of Λ.
    """

    fibers: tuple
    t_period: Optional[Scalar] = None
    t_extent: Optional[tuple] = None

    def __post_init__(self):
        fibers = tuple(f if isinstance(f, Fiber) else Fiber(to_scalar(f[0]), f[1]) for f in self.fibers)
        fibers = tuple(Fiber(to_scalar(f.t), f.freq_set) for f in fibers)
        ts = [f.t for f in fibers]
        if len(set(ts)) != len(ts):
            raise ValueError("fiber t-values must be distinct")
        period = None if self.t_period is None else to_scalar(self.t_period)
        if period is not None:
            if not period > 0:
                raise ValueError("t_period must be positive")
            reduced = [t % period for t in ts]
            if len(set(reduced)) != len(reduced):
                raise ValueError("fundamental fibers collide modulo the declared period")
        extent = None if self.t_extent is None else tuple(to_scalar(x) for x in self.t_extent)
        object.__setattr__(self, "fibers", tuple(sorted(fibers, key=lambda f: f.t)))
        object.__setattr__(self, "t_period", period)
        object.__setattr__(self, "t_extent", extent)

    @classmethod
    def from_points(cls, points) -> "TranslationSet2D":
        by_t: dict = {}
        for t, nu in points:
            by_t.setdefault(to_scalar(t), []).append(to_scalar(nu))
        return cls(tuple(Fiber(t, TranslationSet1D(tuple(nus))) for t, nus in by_t.items()))

    @property
    def finite(self) -> bool:
        return self.t_period is None and all(not f.freq_set.cosets for f in self.fibers)

    def fibers_in(self, lo, hi) -> list:
        """Fibers with t in [lo, hi]; errors when the data cannot cover that range."""
        if self.t_period is None:
            if self.t_extent is not None and (lo < self.t_extent[0] or hi > self.t_extent[1]):
                raise ValueError(f"missing fibers: t-range [{lo}, {hi}] exceeds the listed extent "
                                 f"[{self.t_extent[0]}, {self.t_extent[1]}]")
            return [f for f in self.fibers if lo <= f.t <= hi]
        P = self.t_period
        out = []
        for f in self.fibers:
            for m in range(math.ceil((lo - f.t) / P), math.floor((hi - f.t) / P) + 1):
                out.append(Fiber(f.t + m * P, f.freq_set))
        return sorted(out, key=lambda f: f.t)

    def enumerate(self, t_range, nu_range) -> list:
        pts = []
        for f in self.fibers_in(*t_range):
            pts.extend((f.t, nu) for nu in f.freq_set.enumerate(*nu_range))
        return pts

    def freq_period(self) -> Optional[Scalar]:
        periods = [f.freq_set.period for f in self.fibers]
        if not periods or any(p is None for p in periods):
            return None
        return _lcm_rational(periods)

    def to_json(self) -> dict:
        d = {"dim": 2, "fibers": [{"t": _enc(f.t), "set": f.freq_set.to_json()} for f in self.fibers]}
        if self.t_period is not None:
            d["t_period"] = _enc(self.t_period)
        if self.t_extent is not None:
            d["t_extent"] = [_enc(x) for x in self.t_extent]
        return d

    @classmethod
    def from_json(cls, d: dict) -> "TranslationSet2D":
        if not isinstance(d, dict) or d.get("dim") != 2:
            raise ValueError("expected a 2-D translation set object with \"dim\": 2")
        fibers = d.get("fibers")
        if not isinstance(fibers, list) or not fibers:
            raise ValueError("'fibers' must be a non-empty list")
        out = []
        for i, f in enumerate(fibers):
            if not isinstance(f, dict) or "t" not in f or "set" not in f:
                raise ValueError(f"fiber {i} needs keys 't' and 'set'")
            out.append(Fiber(to_scalar(f["t"]), TranslationSet1D.from_json(f["set"])))
        period = d.get("t_period")
        extent = d.get("t_extent")
        return cls(tuple(out), None if period is None else to_scalar(period),
                   None if extent is None else tuple(extent))


def lattice(p_t=1, p_nu=1, offset_t=0, offset_nu=0) -> TranslationSet2D:
    """The lattice (p_t ℤ + offset_t) × (p_nu ℤ + offset_nu)."""
    return TranslationSet2D((Fiber(to_scalar(offset_t), TranslationSet1D.integers(p_nu, (offset_nu,))),),
                            t_period=p_t)


# regions ------------------------------------------------------------------------

@dataclass(frozen=True)
class ProductRegion2D:
    """Either a product ``time_factor × freq_factor`` or an explicit rectangle list.

    Rectangles are ``(x0, x1, y0, y1)`` meaning [x0, x1) × [y0, y1).
    """

    time_factor: Optional[IntervalUnion] = None
    freq_factor: Optional[IntervalUnion] = None
    rect_list: Optional[tuple] = None

    def __post_init__(self):
        if self.rect_list is None and (self.time_factor is None or self.freq_factor is None):
            raise ValueError("give both factors or a rectangle list")
        if self.rect_list is not None:
            rects = tuple(tuple(to_scalar(v) for v in r) for r in self.rect_list)
            for r in rects:
                if not (r[0] < r[1] and r[2] < r[3]):
                    raise ValueError(f"degenerate rectangle {r}")
            for i, a in enumerate(rects):
                for b in rects[i + 1:]:
                    if a[0] < b[1] and b[0] < a[1] and a[2] < b[3] and b[2] < a[3]:
                        raise ValueError("rectangles must be pairwise disjoint")
            object.__setattr__(self, "rect_list", rects)

    @property
    def is_product(self) -> bool:
        return self.rect_list is None

    def rects(self) -> list:
        if self.rect_list is not None:
            return list(self.rect_list)
        return [(a.lo, a.hi, b.lo, b.hi) for a in self.time_factor.parts for b in self.freq_factor.parts]

    def measure(self) -> Scalar:
        total = 0
        for x0, x1, y0, y1 in self.rects():
            total += (x1 - x0) * (y1 - y0)
        return to_scalar(total) if isinstance(total, int) else total

    def bbox(self) -> tuple:
        rs = self.rects()
        return (min(r[0] for r in rs), max(r[1] for r in rs), min(r[2] for r in rs), max(r[3] for r in rs))

    @property
    def mode(self) -> str:
        return common_mode([v for r in self.rects() for v in r], promote=True)

    def to_json(self) -> dict:
        if self.is_product:
            return {"time_factor": self.time_factor.to_json(), "freq_factor": self.freq_factor.to_json()}
        return {"rects": [[format_scalar(v) for v in r] for r in self.rect_list]}

    @classmethod
    def from_json(cls, d: dict) -> "ProductRegion2D":
        if "rects" in d:
            return cls(rect_list=tuple(tuple(to_scalar(v) for v in r) for r in d["rects"]))
        if "time_factor" in d and "freq_factor" in d:
            return cls(IntervalUnion.from_json(d["time_factor"]), IntervalUnion.from_json(d["freq_factor"]))
        raise ValueError("region JSON needs 'rects' or both 'time_factor' and 'freq_factor'")


# verdicts -------------------------------------------------------------------------

@dataclass(frozen=True)
class Verdict:
    status: str
    witness: Optional[tuple]
    checked_window: tuple
    margin: object
    coverage_at_witness: Optional[int] = None
    global_certificate: bool = False
    passed: bool = False
    note: str = ""

    def __post_init__(self):
        if (self.witness is not None) != (self.status in (OVERLAP, GAP)):
            raise ValueError("a witness is present exactly for overlap and gap verdicts")

    def to_json(self) -> dict:
        def enc(v):
            if isinstance(v, (tuple, list)):
                return [enc(x) for x in v]
            return format_scalar(v) if isinstance(v, (Fraction, float, int)) else v
        return {"status": self.status, "passed": self.passed,
                "witness": None if self.witness is None else enc(self.witness),
                "coverage_at_witness": self.coverage_at_witness,
                "checked_window": enc(self.checked_window), "margin": enc(self.margin),
                "global_certificate": self.global_certificate, "note": self.note}


# 1-D sweep ------------------------------------------------------------------------

def _as_window(window) -> tuple:
    if isinstance(window, Interval):
        return window.lo, window.hi
    lo, hi = window
    return to_scalar(lo), to_scalar(hi)


def _sweep(segments, lo, hi) -> list:
    """Multiplicity of half-open segments restricted to [lo, hi) as (Interval, count) pieces."""
    events: dict = {}
    for a, b in segments:
        a, b = max(a, lo), min(b, hi)
        if a < b:
            events[a] = events.get(a, 0) + 1
            events[b] = events.get(b, 0) - 1
    events.setdefault(lo, 0)
    events.setdefault(hi, 0)
    xs = sorted(events)
    out, count = [], 0
    for x, y in zip(xs, xs[1:]):
        count += events[x]
        if out and out[-1][1] == count:
            out[-1] = (Interval(out[-1][0].lo, y), count)
        else:
            out.append((Interval(x, y), count))
    return out


def coverage_profile_1d(A: IntervalUnion, lam: TranslationSet1D, window) -> list:
    """Exact multiplicity Σ_λ χ_{A+λ} on ``window`` as a step function."""
    if not A:
        raise ValueError("empty tile")
    lo, hi = _as_window(window)
    mode = common_mode([lo, hi] + A.endpoints(), promote=True)
    if mode == FLOAT:
        lo, hi = float(lo), float(hi)
    translates = lam.enumerate(lo - A.sup, hi - A.inf)
    segs = [(p.lo + x, p.hi + x) for x in translates for p in A.parts]
    return _sweep(segs, lo, hi)


def _shrink(lo, hi, margin):
    a, b = lo + margin, hi - margin
    if not a < b:
        raise ValueError("insufficient margin: the window shrunk by the margin is empty")
    return a, b


def _classify_profile(profile, tiling: bool, exact: bool):
    """First offending piece for a packing (count > 1) or tiling (count != 1) check."""
    for iv, c in profile:
        if not exact and iv.length <= SLIVER:
            continue
        if c > 1:
            return OVERLAP, iv, c
    if tiling:
        for iv, c in profile:
            if not exact and iv.length <= SLIVER:
                continue
            if c < 1:
                return GAP, iv, c
    return None


def _check_1d(A, lam, window, margin, tiling: bool) -> Verdict:
    lo, hi = _as_window(window)
    diam = A.diameter
    margin = diam if margin is None else to_scalar(margin)
    if margin < diam:
        raise ValueError(f"insufficient margin: {margin} < diameter {diam}")
    a, b = _shrink(lo, hi, margin)
    profile = coverage_profile_1d(A, lam, (a, b))
    exact = all(isinstance(v, Fraction) for v in (a, b)) and A.mode == RATIONAL and lam.mode == RATIONAL
    bad = _classify_profile(profile, tiling, exact)
    period = lam.period
    is_global = period is not None and (b - a) >= period
    if bad is not None:
        status, iv, c = bad
        return Verdict(status, (iv.midpoint,), (a, b), margin, c, False, False)
    full = all(c == 1 for iv, c in profile if exact or iv.length > SLIVER)
    status = TILING if full else PACKING_STRICT
    return Verdict(status, None, (a, b), margin, None, is_global, True)


def check_packing_1d(A: IntervalUnion, lam: TranslationSet1D, window, margin=None) -> Verdict:
    """Σ_λ χ_{A+λ} ≤ 1 on ``window`` shrunk by ``margin`` (default: diameter of A)."""
    return _check_1d(A, lam, window, margin, tiling=False)


def check_tiling_1d(A: IntervalUnion, lam: TranslationSet1D, window, margin=None) -> Verdict:
    """Σ_λ χ_{A+λ} ≡ 1 on ``window`` shrunk by ``margin`` (default: diameter of A).

    For periodic Λ a pass on a window at least one period long is a global
    certificate: the coverage function has the same period.
    """
    return _check_1d(A, lam, window, margin, tiling=True)


# 2-D sweep ------------------------------------------------------------------------

def _check_2d(R: ProductRegion2D, lam: TranslationSet2D, window, margin, tiling: bool) -> Verdict:
    (wx0, wx1), (wy0, wy1) = ((to_scalar(a), to_scalar(b)) for a, b in window)
    bx0, bx1, by0, by1 = R.bbox()
    if margin is None:
        margin = (bx1 - bx0, by1 - by0)
    mx, my = (to_scalar(m) for m in margin)
    if mx < bx1 - bx0 or my < by1 - by0:
        raise ValueError("insufficient margin: smaller than the region's bounding box")
    x0, x1 = _shrink(wx0, wx1, mx)
    y0, y1 = _shrink(wy0, wy1, my)
    rects = []
    for f in lam.fibers_in(x0 - bx1, x1 - bx0):
        for nu in f.freq_set.enumerate(y0 - by1, y1 - by0):
            for r in R.rects():
                rects.append((r[0] + f.t, r[1] + f.t, r[2] + nu, r[3] + nu))
    exact = R.mode == RATIONAL and not any(isinstance(v, float) for r in rects for v in r) \
        and not any(isinstance(v, float) for v in (x0, x1, y0, y1))
    xs = sorted({x0, x1} | {v for r in rects for v in (r[0], r[1]) if x0 < v < x1})
    found_gap = None
    full = True
    for xa, xb in zip(xs, xs[1:]):
        if not exact and xb - xa <= SLIVER:
            continue
        active = [(r[2], r[3]) for r in rects if r[0] <= xa and r[1] >= xb]
        profile = _sweep(active, y0, y1)
        bad = _classify_profile(profile, True, exact)
        if bad is None:
            continue
        status, iv, c = bad
        witness = ((xa + xb) / 2, iv.midpoint)
        if status == OVERLAP:
            return Verdict(OVERLAP, witness, ((x0, x1), (y0, y1)), (mx, my), c, False, False)
        full = False
        if found_gap is None:
            found_gap = (witness, c)
    if not full:
        if tiling:
            return Verdict(GAP, found_gap[0], ((x0, x1), (y0, y1)), (mx, my), found_gap[1], False, False)
        # packing holds, but a gap means the region is not tiled
        status = PACKING_STRICT
    else:
        status = TILING
    fp = lam.freq_period()
    is_global = (lam.t_period is not None and fp is not None
                 and x1 - x0 >= lam.t_period and y1 - y0 >= fp)
    return Verdict(status, None, ((x0, x1), (y0, y1)), (mx, my), None, is_global, True)


def check_tiling_2d(R: ProductRegion2D, lam: TranslationSet2D, window, margin=None) -> Verdict:
    """Exact coverage of R + Λ on a box by an x-sweep with 1-D y-counting.

    ``window`` is ``((x0, x1), (y0, y1))``; ``margin`` defaults to the region's
    bounding-box side lengths.
    """
    return _check_2d(R, lam, window, margin, tiling=True)


def check_packing_2d(R: ProductRegion2D, lam: TranslationSet2D, window, margin=None) -> Verdict:
    return _check_2d(R, lam, window, margin, tiling=False)


# classification ------------------------------------------------------------------------

@dataclass(frozen=True)
class Classification:
    alpha: Scalar
    beta: Scalar
    tiles: bool
    spectral: bool
    tiling_set: Optional[TranslationSet1D]
    tolerance_mode: bool = False

    def to_json(self) -> dict:
        return {"alpha": format_scalar(self.alpha), "beta": format_scalar(self.beta), "tiles": self.tiles,
                "spectral": self.spectral, "tolerance_mode": self.tolerance_mode,
                "tiling_set": None if self.tiling_set is None else self.tiling_set.to_json()}


def laba_classify(alpha, beta, tol: Optional[float] = None) -> Classification:
    """Whether [0, α) ∪ [α+β, 1+β) tiles ℝ (equivalently, is spectral).

    Tiles iff 0 < α < 1/2 with β a positive integer, or α = 1/2 with β ∈ ½ℕ.
    Float input is accepted only with an explicit ``tol``.
    """
    a, b = to_scalar(alpha), to_scalar(beta)
    floaty = isinstance(a, float) or isinstance(b, float)
    if floaty and tol is None:
        raise ValueError("float input needs an explicit tolerance (pass tol=...) or exact p/q strings")
    t = tol or 0.0
    if not (0 < a <= HALF + t):
        raise ValueError(f"outside normalized regime: alpha = {a} is not in (0, 1/2]")
    if not b > 0:
        raise ValueError(f"outside normalized regime: beta = {b} must be positive")
    half = abs(a - HALF) <= t if floaty else a == HALF
    if is_integer(b, t):
        tiles, lam = True, TranslationSet1D.integers()
    elif half and is_half_integer_multiple(b, t):
        n = round(2 * b) + 1
        lam = TranslationSet1D.integers(n, tuple(Fraction(j, 2) for j in range(n)))
        tiles = True
    else:
        tiles, lam = False, None
    return Classification(a, b, tiles, tiles, lam, floaty)


def _circle_parts(A: IntervalUnion, x, p) -> Optional[list]:
    """Parts of A + x reduced modulo p, split at the seam; None if a part self-overlaps."""
    out = []
    for part in A.parts:
        if part.length > p:
            return None
        a = (part.lo + x) % p
        b = a + part.length
        if b <= p:
            out.append((a, b))
        else:
            out.extend([(a, p), (0 * p, b - p)])
    return out


def _disjoint_add(covered: list, new: list) -> Optional[list]:
    merged = sorted(covered + new)
    for (a0, b0), (a1, b1) in zip(merged, merged[1:]):
        if a1 < b0:
            return None
    return merged


def _first_uncovered(covered: list, p):
    x = 0 * p
    for a, b in covered:
        if a > x:
            return x
        x = max(x, b)
    return x if x < p else None


def find_periodic_tiling(A: IntervalUnion, max_period: int = 4, max_offsets: int = 8) -> Optional[TranslationSet1D]:
    """Search for a tiling A ⊕ (F + pℤ) = ℝ with integer p ≤ ``max_period``, |F| ≤ ``max_offsets``.

    A bounded search: a None result only rules out such small periodic tilings.
    Requires rational endpoints.  A tiling set of a measure-m tile with period
    p has exactly p/m offsets, so only p with p/m integral are tried.  The
    search fills the circle ℝ/pℤ left to right: the translate covering the
    leftmost uncovered point must have a part starting exactly there.
    """
    if A.mode != RATIONAL:
        raise ValueError("periodic tiling search needs exact rational endpoints")
    m = A.measure()
    first = A.parts[0].lo

    def extend(covered, offsets, p, budget):
        x = _first_uncovered(covered, p)
        if x is None:
            return offsets
        if budget == 0:
            return None
        for part in A.parts:
            shift = x - part.lo
            cp = _circle_parts(A, shift, p)
            nxt = None if cp is None else _disjoint_add(covered, cp)
            if nxt is not None:
                found = extend(nxt, offsets + [shift % p], p, budget - 1)
                if found is not None:
                    return found
        return None

    for p in range(1, max_period + 1):
        count = Fraction(p) / m
        if count.denominator != 1 or count > max_offsets:
            continue
        start = _circle_parts(A, -first, Fraction(p))
        if start is None or _disjoint_add([], start) is None:
            continue
        found = extend(_disjoint_add([], start), [(-first) % p], Fraction(p), int(count) - 1)
        if found is not None:
            return TranslationSet1D.integers(p, tuple(sorted(found)))
    return None


# cross-checks --------------------------------------------------------------------------

def induced_time_set(lam: TranslationSet2D) -> TranslationSet1D:
    """The multiset of fiber t-values, as cosets when Λ declares a t-period."""
    if lam.t_period is not None:
        return TranslationSet1D((), tuple(Coset(lam.t_period, f.t) for f in lam.fibers))
    return TranslationSet1D(tuple(f.t for f in lam.fibers))


def _convolve(F: Callable, lam: TranslationSet2D, x, support) -> float:
    rt, rn = support
    total = 0.0
    for f in lam.fibers_in(x[0] - rt, x[0] + rt):
        for nu in f.freq_set.enumerate(x[1] - rn, x[1] + rn):
            total += F(float(x[0] - f.t), float(x[1] - nu))
    return total


@dataclass(frozen=True)
class GLWResult:
    f_values: tuple
    g_values: tuple
    f_is_one: bool
    g_is_one: bool

    @property
    def agree(self) -> bool:
        return self.f_is_one == self.g_is_one


def glw_profiles(F: Callable, G: Callable, lam: TranslationSet2D, grid: Sequence,
                 support_f=(3, 50), support_g=(3, 3), tol_f: float = 1e-6, tol_g: float = 1e-9) -> GLWResult:
    """Evaluate F * δ_Λ and G * δ_Λ on ``grid`` and decide whether each is ≡ 1."""
    fv = tuple(_convolve(F, lam, x, support_f) for x in grid)
    gv = tuple(_convolve(G, lam, x, support_g) for x in grid)
    return GLWResult(fv, gv, all(abs(v - 1) <= tol_f for v in fv), all(abs(v - 1) <= tol_g for v in gv))


def glw_equivalence_test(F: Callable, G: Callable, lam: TranslationSet2D, grid: Sequence, **kw) -> bool:
    """For F, G ≥ 0 of unit integral that both pack with Λ, F + Λ tiles iff G + Λ does.

    Returns whether the two "≡ 1 on the grid" verdicts agree.
    """
    return glw_profiles(F, G, lam, grid, **kw).agree
