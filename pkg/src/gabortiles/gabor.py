"""Orthonormal Gabor bases with window g = χ_Ω: packing regions, orthogonality, tiling, frame sums.

A system {g_λ} is an orthonormal basis exactly when D + Λ tiles ℝ² for a tight
orthogonal packing region D and Λ − Λ lies in Z(V_g g) ∪ {0}.  Completeness is
never tested directly; it is read off the tiling and cross-checked by the
frame sum Σ_λ |V_g g(ω − λ)|², which must equal 1 everywhere.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional, Union

import numpy as np

from .fourier import ft_parts_array, overlap, stft_ww
from .intervals import (RATIONAL, IntervalUnion, Scalar, format_scalar, normalize, open_difference_set,
                        quadrant_parts, to_scalar)
from .tiling import (Fiber, ProductRegion2D, TranslationSet1D, TranslationSet2D, Verdict,
                     check_tiling_1d, check_tiling_2d, laba_classify)
from .window import ALPHA_HALF, ALPHA_LT_HALF, HALF, WindowParams, is_integer
from .zerosets import Span, zero_catalog

OPEN_CASE = "open case: alpha = 1/2 with beta < 1/2 has no known tight orthogonal packing region"


# packing regions ------------------------------------------------------------------

@dataclass(frozen=True)
class PackingRegion:
    region: ProductRegion2D
    tight: bool
    regime: str

    def measure(self) -> Scalar:
        return self.region.measure()

    def to_json(self) -> dict:
        return {"region": self.region.to_json(), "tight": self.tight, "regime": self.regime,
                "measure": format_scalar(self.measure())}


def half_case_blocks(beta) -> IntervalUnion:
    """Frequency factor for α = 1/2: blocks [2k/n, (2k+1)/n), k ≤ ⌊2β⌋, n = 2β+1, plus a thin block.

    The thin block [2(⌊2β⌋+1)/n, (2(⌊2β⌋+1) + {2β})/n) is empty when β ∈ ½ℕ.
    """
    b = to_scalar(beta)
    n = 2 * b + 1
    m = math.floor(2 * b)
    frac = 2 * b - m
    pairs = [(2 * k / n, (2 * k + 1) / n) for k in range(m + 1)]
    pairs.append((2 * (m + 1) / n, (2 * (m + 1) + frac) / n))
    return normalize(pairs, promote=True)


def packing_region(w: WindowParams) -> PackingRegion:
    """A tight orthogonal packing region D for χ_Ω (|D| = 1)."""
    if w.is_half():
        if w.beta < HALF:
            raise ValueError(f"no tight region known: {OPEN_CASE}")
        freq = half_case_blocks(w.beta)
        regime = ALPHA_HALF
    else:
        one = Fraction(1) if w.exact else 1.0
        freq = normalize([(0 * one, one)])
        regime = ALPHA_LT_HALF
    region = ProductRegion2D(w.omega, freq)
    m = region.measure()
    if w.exact:
        assert m == 1, f"packing region measure {m} != 1"
    else:
        assert abs(m - 1) < 1e-12, f"packing region measure {m} != 1"
    return PackingRegion(region, True, regime)


def _quadrant_spans(u: IntervalUnion) -> list:
    return [Span(lo, hi, closed, False) for lo, hi, closed in quadrant_parts(open_difference_set(u))]


def _sample_union(u: IntervalUnion, rng: np.random.Generator, n: int) -> np.ndarray:
    parts = [(float(p.lo), float(p.hi)) for p in u.parts]
    lengths = np.array([b - a for a, b in parts])
    idx = rng.choice(len(parts), size=n, p=lengths / lengths.sum())
    lo = np.array([parts[i][0] for i in idx])
    return lo + rng.random(n) * lengths[idx]


@dataclass(frozen=True)
class PackingVerdict:
    zero_free: bool
    catalog_used: bool
    catalog_hits: tuple
    spot_checked: int
    spot_min: float
    spot_failures: tuple

    def to_json(self) -> dict:
        return {"zero_free": self.zero_free, "catalog_used": self.catalog_used,
                "catalog_hits": [[c, [format_scalar(v) for v in p]] for c, p in self.catalog_hits],
                "spot_checked": self.spot_checked, "spot_min": self.spot_min,
                "spot_failures": [list(p) for p in self.spot_failures]}


def sample_difference_points(R: ProductRegion2D, n: int, seed: int = 0) -> np.ndarray:
    """``n`` random points of D° − D°, folded onto the quadrant; shape (n, 2)."""
    rng = np.random.default_rng(seed)
    if R.is_product:
        t = _sample_union(R.time_factor, rng, n) - _sample_union(R.time_factor, rng, n)
        nu = _sample_union(R.freq_factor, rng, n) - _sample_union(R.freq_factor, rng, n)
    else:
        rects = [tuple(map(float, r)) for r in R.rects()]
        areas = np.array([(r[1] - r[0]) * (r[3] - r[2]) for r in rects])

        def draw():
            idx = rng.choice(len(rects), size=n, p=areas / areas.sum())
            r = np.array([rects[i] for i in idx])
            return (r[:, 0] + rng.random(n) * (r[:, 1] - r[:, 0]),
                    r[:, 2] + rng.random(n) * (r[:, 3] - r[:, 2]))
        (t1, n1), (t2, n2) = draw(), draw()
        t, nu = t1 - t2, n1 - n2
    return np.abs(np.column_stack([t, nu]))


def verify_packing_region(w: WindowParams, R: Union[PackingRegion, ProductRegion2D], n_spot: int = 10_000,
                          seed: int = 0, tol: float = 1e-9, spot_tol: float = 1e-10) -> PackingVerdict:
    """Check (D° − D°) ∩ Z(V_g g) = ∅.

    When the regime has a zero catalog, every component is intersected with the
    folded difference sets of the two factors (exactly in rational mode, within
    ``tol`` otherwise).  Independently, ``n_spot`` random points of D° − D° must
    have |V_g g| > ``spot_tol``.
    """
    region = R.region if isinstance(R, PackingRegion) else R
    hits = []
    catalog = zero_catalog(w)
    if catalog is not None and region.is_product:
        t_spans = _quadrant_spans(region.time_factor)
        nu_spans = _quadrant_spans(region.freq_factor)
        exact = w.exact and region.mode == RATIONAL
        for comp in catalog.components:
            hit = comp.meets(t_spans, nu_spans, 0 if exact else tol)
            if hit is not None:
                hits.append((comp.label, hit))
    pts = sample_difference_points(region, n_spot, seed)
    vals = np.array([abs(stft_ww(w, float(t), float(nu))) for t, nu in pts]) if n_spot else np.array([np.inf])
    bad = tuple((float(t), float(nu)) for (t, nu), v in zip(pts, vals) if v <= spot_tol)
    return PackingVerdict(not hits and not bad, catalog is not None, tuple(hits), n_spot,
                          float(vals.min()), bad[:20])


# systems and orthogonality ------------------------------------------------------------

@dataclass(frozen=True)
class GaborSystem:
    """Window parameters plus Λ, either fibered or a finite list of points."""

    window: WindowParams
    lam: Union[TranslationSet2D, tuple]

    def points(self, box=None) -> list:
        if isinstance(self.lam, TranslationSet2D):
            if box is None:
                if not self.lam.finite:
                    raise ValueError("an infinite translation set needs a box to enumerate")
                return [(f.t, nu) for f in self.lam.fibers for nu in f.freq_set.points]
            (x0, x1), (y0, y1) = box
            return self.lam.enumerate((to_scalar(x0), to_scalar(x1)), (to_scalar(y0), to_scalar(y1)))
        pts = [(to_scalar(t), to_scalar(nu)) for t, nu in self.lam]
        if box is not None:
            (x0, x1), (y0, y1) = box
            pts = [p for p in pts if x0 <= p[0] <= x1 and y0 <= p[1] <= y1]
        return pts


@dataclass(frozen=True)
class Violation:
    lam: tuple
    mu: tuple
    difference: tuple
    modulus: float


@dataclass(frozen=True)
class OrthogonalityVerdict:
    orthogonal: bool
    violations: tuple
    pairs_checked: int
    differences_checked: int
    tol: float

    @property
    def witness(self) -> Optional[Violation]:
        return self.violations[0] if self.violations else None

    def has_difference(self, d) -> bool:
        d = (abs(to_scalar(d[0])), abs(to_scalar(d[1])))
        return any(v.difference == d for v in self.violations)

    def to_json(self) -> dict:
        return {"orthogonal": self.orthogonal, "pairs_checked": self.pairs_checked,
                "differences_checked": self.differences_checked, "tol": self.tol,
                "violations": [{"lambda": [format_scalar(x) for x in v.lam], "mu": [format_scalar(x) for x in v.mu],
                                "difference": [format_scalar(x) for x in v.difference], "modulus": v.modulus}
                               for v in self.violations]}


def check_orthogonality(sys: GaborSystem, tol: float = 1e-9, box=None) -> OrthogonalityVerdict:
    """|⟨g_λ, g_μ⟩| = |V_g g(λ − μ)| ≤ tol for every distinct pair in Λ (∩ box).

    Differences are folded onto the quadrant, using |V(t, ν)| = |V(±t, ±ν)|,
    and evaluated once each.  All violations are returned, sorted by
    difference; the first is the witness.
    """
    pts = sys.points(box)
    first_pair: dict = {}
    for i, p in enumerate(pts):
        for q in pts[i + 1:]:
            d = (abs(p[0] - q[0]), abs(p[1] - q[1]))
            if d not in first_pair:
                first_pair[d] = (p, q)
    viol = []
    for d in sorted(first_pair):
        v = abs(stft_ww(sys.window, d[0], d[1]))
        if v > tol:
            p, q = first_pair[d]
            viol.append(Violation(p, q, d, v))
    n = len(pts)
    return OrthogonalityVerdict(not viol, tuple(viol), n * (n - 1) // 2, len(first_pair), tol)


# frame sums --------------------------------------------------------------------

@dataclass(frozen=True)
class FrameSum:
    value: float
    tail_bound: float
    terms: int

    def to_json(self) -> dict:
        return {"value": self.value, "tail_bound": self.tail_bound, "terms": self.terms}


def _side_tail(d0: float, p: float) -> float:
    """Σ_{j≥0} 1/(d0 + j·p)² ≤ 1/d0² + 1/(p·d0)."""
    return 1.0 / d0 ** 2 + 1.0 / (p * d0)


def frame_sum(w: WindowParams, lam: TranslationSet2D, omega, freq_trunc: int = 200) -> FrameSum:
    """Σ_λ |V_g g(ω − λ)|² with frequencies truncated to |ν_λ − ω_ν| ≤ ``freq_trunc``.

    Only fibers with |t_λ − ω_t| < 1 + β contribute; elsewhere the overlap is
    empty.  Excluded frequencies are bounded with |V_g g(t, ν)| ≤ m/(π|ν|),
    m the number of overlap parts, giving the returned tail bound.
    """
    wt, wn = float(omega[0]), float(omega[1])
    reach = float(1 + w.beta)
    total, tail, terms = 0.0, 0.0, 0
    for f in lam.fibers_in(to_scalar(omega[0]) - (1 + w.beta), to_scalar(omega[0]) + (1 + w.beta)):
        t = wt - float(f.t)
        if abs(t) >= reach:
            continue
        ov = overlap(w, abs(to_scalar(omega[0]) - f.t))
        if not ov:
            continue
        parts = [(float(p.lo), float(p.hi)) for p in ov.parts]
        if t < 0:
            parts = [(a + t, b + t) for a, b in parts]
        nus = np.array([float(x) for x in f.freq_set.enumerate(wn - freq_trunc, wn + freq_trunc)])
        if nus.size:
            vals = ft_parts_array(parts, wn - nus)
            total += float(np.sum(np.abs(vals) ** 2))
            terms += nus.size
        m = len(parts)
        for c in f.freq_set.cosets:
            p = float(c.p)
            # nearest excluded members on each side of ω_ν
            above = float(c.o) + p * math.floor((wn + freq_trunc - float(c.o)) / p + 1)
            below = float(c.o) + p * math.ceil((wn - freq_trunc - float(c.o)) / p - 1)
            for d0 in (above - wn, wn - below):
                tail += (m / math.pi) ** 2 * _side_tail(d0, p)
    return FrameSum(total, tail, terms)


# certification --------------------------------------------------------------------

class CertificationError(ValueError):
    pass


@dataclass
class CertificationReport:
    window: WindowParams
    regime: str
    packing_region: PackingRegion
    orthogonality: OrthogonalityVerdict
    tiling: Verdict
    certified: bool
    laba_tiles: bool
    frame_probes: list = field(default_factory=list)

    @property
    def witnesses(self) -> list:
        out = []
        if self.orthogonality.witness is not None:
            v = self.orthogonality.witness
            out.append({"kind": "orthogonality", "difference": [format_scalar(x) for x in v.difference],
                        "modulus": v.modulus})
        if self.tiling.witness is not None:
            out.append({"kind": self.tiling.status, "point": [format_scalar(x) for x in self.tiling.witness],
                        "coverage": self.tiling.coverage_at_witness})
        return out

    @property
    def frame_sums_consistent(self) -> bool:
        return all(abs(p["value"] - 1) <= p["tail_bound"] + 1e-6 for p in self.frame_probes)

    def to_json(self) -> dict:
        return {"window": self.window.to_json(), "regime": self.regime,
                "packing_region": self.packing_region.to_json(),
                "orthogonality": self.orthogonality.to_json(), "tiling": self.tiling.to_json(),
                "certified": self.certified, "laba_tiles": self.laba_tiles, "witnesses": self.witnesses,
                "frame_probes": self.frame_probes,
                "tail_bounds": [p["tail_bound"] for p in self.frame_probes]}


def certify_basis(sys: GaborSystem, window=((-4, 4), (-4, 4)), tol: float = 1e-9, frame_probes: int = 25,
                  freq_trunc: int = 200, seed: int = 0) -> CertificationReport:
    """Certify that {g_λ} is an orthonormal basis, on a bounded box.

    Passes when Λ ∩ box is orthogonal and D + Λ tiles the box shrunk by the
    region's extent, D the tight packing region of the window.  For a passing
    fibered Λ the frame sum is also probed at random points of the box.
    """
    w = sys.window
    if w.is_half() and w.beta < HALF:
        raise CertificationError(OPEN_CASE)
    D = packing_region(w)
    orth = check_orthogonality(sys, tol, window)
    if isinstance(sys.lam, TranslationSet2D):
        lam2 = sys.lam
    else:
        lam2 = TranslationSet2D.from_points(sys.lam)
    tiling = check_tiling_2d(D.region, lam2, window)
    certified = orth.orthogonal and tiling.passed and tiling.status == "tiling"
    laba = laba_classify(w.alpha, w.beta, None if w.exact else 1e-12).tiles
    if certified and not laba:
        raise AssertionError("certified a basis for a window that does not tile the line; "
                             "this contradicts the tiling characterization")
    report = CertificationReport(w, D.regime, D, orth, tiling, certified, laba)
    if certified and frame_probes and not lam2.finite:
        rng = random.Random(seed)
        (x0, x1), (y0, y1) = tiling.checked_window
        for _ in range(frame_probes):
            om = (rng.uniform(float(x0), float(x1)), rng.uniform(float(y0), float(y1)))
            fs = frame_sum(w, lam2, om, freq_trunc)
            report.frame_probes.append({"omega": list(om), "value": fs.value, "tail_bound": fs.tail_bound})
    return report


# standard translation sets -----------------------------------------------------------

def _phase(phases, k):
    if callable(phases):
        return to_scalar(phases(k))
    if isinstance(phases, Mapping):
        return to_scalar(phases[k])
    return to_scalar(phases)


def _check_phase(a):
    if not (0 <= a < 1):
        raise ValueError(f"phases outside [0,1): {a}")


def standard_lambda_lt_half(beta, phases) -> TranslationSet2D:
    """⋃_k {k} × (ℤ + a_k).

    ``phases`` is a sequence (read periodically, so Λ gets that t-period) or a
    mapping k → a_k (Λ is then complete on the key range only).
    """
    if not is_integer(to_scalar(beta)) or to_scalar(beta) <= 0:
        raise ValueError("beta must be a positive integer")
    if isinstance(phases, Mapping):
        keys = sorted(phases)
        fibers = []
        for k in keys:
            a = to_scalar(phases[k])
            _check_phase(a)
            fibers.append(Fiber(to_scalar(k), TranslationSet1D.integers(1, (a,))))
        return TranslationSet2D(tuple(fibers), t_extent=(keys[0], keys[-1]))
    seq = [to_scalar(a) for a in phases]
    if not seq:
        raise ValueError("no phases given")
    for a in seq:
        _check_phase(a)
    fibers = tuple(Fiber(Fraction(k), TranslationSet1D.integers(1, (a,))) for k, a in enumerate(seq))
    return TranslationSet2D(fibers, t_period=len(seq))


class StandardConditionError(ValueError):
    def __init__(self, condition: str, verdict: Verdict, detail: str):
        self.condition = condition
        self.verdict = verdict
        super().__init__(f"condition ({condition}) fails: {detail}; verdict {verdict.status} "
                         f"at {verdict.witness}")


def time_cover_tile(beta) -> IntervalUnion:
    """[0,1) ∪ [2β+1, 2β+2): K satisfies (iii) iff this tiles ℝ with K."""
    n = 2 * to_scalar(beta) + 1
    return normalize([(0, 1), (n, n + 1)])


def freq_cover_tile(beta) -> IntervalUnion:
    """⋃_{j=0}^{2β} [2j, 2j+1): L satisfies (iv) iff this tiles ℝ with L."""
    n = int(2 * to_scalar(beta) + 1)
    return normalize([(2 * j, 2 * j + 1) for j in range(n)])


@dataclass(frozen=True)
class StandardHalfReport:
    condition_iii: Verdict
    half_integer_cover: Verdict
    condition_iv: tuple


def validate_standard_half(beta, K: TranslationSet1D, L, window=(-40, 40)) -> StandardHalfReport:
    """Check (iii) {0, 2β+1} ⊕ K = ℤ and (iv) {0, 2, …, 4β} ⊕ L_k = ℤ by 1-D sweeps.

    Also reports the induced cover ([0,1/2) ∪ [β+1/2, β+1)) + K/2 = ℝ.
    Raises :class:`StandardConditionError` naming the failed condition.
    """
    b = to_scalar(beta)
    if not is_integer(2 * b) or b <= 0:
        raise ValueError("beta must lie in ½ℕ")
    v3 = check_tiling_1d(time_cover_tile(b), K, window)
    if not (v3.passed and v3.status == "tiling"):
        raise StandardConditionError("iii", v3, "{0, 2beta+1} + K is not a tiling of Z")
    half = normalize([(0, HALF), (b + HALF, b + 1)])
    vh = check_tiling_1d(half, K.scale(HALF), window)
    if not (vh.passed and vh.status == "tiling"):
        raise StandardConditionError("iii", vh, "([0,1/2) u [beta+1/2, beta+1)) + K/2 is not a tiling")
    sets = L.values() if isinstance(L, Mapping) else [L]
    v4 = []
    for Lk in sets:
        v = check_tiling_1d(freq_cover_tile(b), Lk, window)
        if not (v.passed and v.status == "tiling"):
            raise StandardConditionError("iv", v, "{0, 2, ..., 4beta} + L_k is not a tiling of Z")
        v4.append(v)
    return StandardHalfReport(v3, vh, tuple(v4))


def standard_lambda_half(beta, K: TranslationSet1D, L, phases=0, window=(-40, 40)) -> TranslationSet2D:
    """Λ = ⋃_{k∈K} {k/2} × (L_k + a_k)/(2β+1), validated first.

    ``K`` must be periodic (cosets only).  ``L`` and ``phases`` are either
    uniform or mappings keyed by the members of K in [0, period).
    """
    b = to_scalar(beta)
    validate_standard_half(b, K, L, window)
    P = K.period
    if P is None:
        raise ValueError("K must be a union of cosets with a common period")
    n = 2 * b + 1
    fibers = []
    for k in K.enumerate(0, P):
        if k == P:
            continue
        Lk = L[k] if isinstance(L, Mapping) else L
        a = _phase(phases, k)
        _check_phase(a)
        fibers.append(Fiber(k / 2, Lk.shift(a).scale(1 / n)))
    return TranslationSet2D(tuple(fibers), t_period=P / 2)
