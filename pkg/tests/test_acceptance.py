"""Acceptance criteria, one test each; a PASS/FAIL line per criterion is printed in the summary."""

import math
import random
import time
from fractions import Fraction as Fr

import numpy as np
import pytest

from gabortiles.fourier import quadrature_stft, stft_energy_box, stft_ww, stft_ww_grid, ft_indicator
from gabortiles.gabor import (GaborSystem, StandardConditionError, certify_basis, check_orthogonality,
                              packing_region, standard_lambda_half, standard_lambda_lt_half, validate_standard_half,
                              verify_packing_region)
from gabortiles.intervals import normalize
from gabortiles.spectral import chi_b_hat_product_form, koo_check, spectral_pair_check
from gabortiles.tiling import (Fiber, TranslationSet1D, TranslationSet2D, check_tiling_1d, coverage_profile_1d,
                               find_periodic_tiling, laba_classify, lattice)
from gabortiles.window import WindowParams
from gabortiles.zerosets import distance, sample, zero_catalog

UNIT = normalize([(0, 1)])


def W(a, b):
    return WindowParams(a, b)


class Clock:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


@pytest.mark.acceptance(1, "closed-form STFT matches quadrature on 1000 random points")
def test_closed_form_vs_quadrature():
    rng = random.Random(2024)
    worst = 0.0
    with Clock() as c:
        for _ in range(1000):
            a = rng.uniform(1e-3, 0.5)
            b = rng.uniform(1e-3, 3.0)
            w = W(a, b)
            t = rng.uniform(-(b + 1), b + 1)
            nu = rng.uniform(-10, 10)
            q = quadrature_stft(w.omega, w.omega, t, nu, n=128)
            worst = max(worst, abs(stft_ww(w, t, nu) - q))
    assert worst <= 1e-9
    assert c.elapsed < 10


@pytest.mark.acceptance(2, "zero catalogs for 1/sqrt(15) and 1/2 are sound and complete on a 600x600 grid")
def test_zero_catalog_figures():
    with Clock() as c:
        for a, b in ((1 / math.sqrt(15), 2.0), (Fr(1, 2), 2)):
            w = W(a, b)
            zs = zero_catalog(w)
            pts = sample(zs, 3, 8, 200)
            assert pts
            assert max(abs(stft_ww(w, p.t, p.nu)) for p in pts) < 1e-8
            ts, nus = np.linspace(0, 3, 600), np.linspace(0, 8, 600)
            V = np.abs(stft_ww_grid(w, ts, nus))
            ii, jj = np.nonzero(V < 1e-6)
            assert len(ii) > 0
            worst = max(distance(zs, (ts[i], nus[j])) for i, j in zip(ii, jj))
            assert worst <= 1e-3
    assert c.elapsed < 60


def _regime_pairs():
    rng = random.Random(7)
    pairs = set()
    while len(pairs) < 20:  # α < 1/2, any β
        q = rng.randint(3, 12)
        a = Fr(rng.randint(1, (q - 1) // 2), q)
        if a < Fr(1, 2):
            pairs.add((a, Fr(rng.randint(1, 30), rng.randint(1, 7))))
    for k in range(1, 16):  # α = 1/2, β ∈ ½ℕ
        pairs.add((Fr(1, 2), Fr(k, 2)))
    while len(pairs) < 50:  # α = 1/2, β ≥ 1/2 not in ½ℕ
        b = Fr(rng.randint(2, 40), rng.choice([3, 4, 5, 7, 8]))
        if b >= Fr(1, 2) and (2 * b).denominator != 1:
            pairs.add((Fr(1, 2), b))
    pairs.add((Fr(1, 2), Fr(3, 4)))
    return sorted(pairs)


@pytest.mark.acceptance(3, "packing regions have measure exactly 1 in every regime")
def test_packing_region_tightness():
    pairs = _regime_pairs()
    assert len(pairs) >= 50
    assert (Fr(1, 2), Fr(3, 4)) in pairs
    for a, b in pairs:
        R = packing_region(W(a, b))
        m = R.measure()
        assert isinstance(m, Fr) and m == 1 and R.tight


@pytest.mark.acceptance(4, "10^4 points of D°-D° avoid the zeros of V_g g")
def test_zero_free_regions():
    for a, b in ((Fr(3, 10), 1), (Fr(3, 10), Fr(1, 5)), (Fr(1, 2), 1), (Fr(1, 2), Fr(3, 2))):
        w = W(a, b)
        v = verify_packing_region(w, packing_region(w), n_spot=10_000, seed=17, spot_tol=1e-10)
        assert v.spot_checked == 10_000
        assert v.spot_min > 1e-10 and not v.spot_failures
        assert v.zero_free


@pytest.mark.acceptance(5, "standard translation set with random phases is certified")
def test_certify_positive():
    rng = random.Random(5)
    phases = [Fr(rng.randint(0, 96), 97) for _ in range(12)]
    w = W(Fr(3, 10), 1)
    rep = certify_basis(GaborSystem(w, standard_lambda_lt_half(1, phases)), window=((-4, 4), (-4, 4)),
                        frame_probes=25, freq_trunc=200, seed=3)
    assert rep.certified
    assert len(rep.frame_probes) == 25
    for p in rep.frame_probes:
        tail = p["tail_bound"]
        assert tail < 1e-2
        assert 1 - tail - 1e-6 <= p["value"] <= 1 + 1e-9 + tail


@pytest.mark.acceptance(6, "non-tiling window: every candidate fails with a witness")
def test_certify_negative():
    w = W(Fr(3, 10), Fr(3, 2))
    assert not laba_classify(w.alpha, w.beta).tiles
    shifted = TranslationSet2D((Fiber(0, TranslationSet1D.integers()),
                                Fiber(1, TranslationSet1D.integers(1, (Fr(1, 2),)))), t_period=2)
    jittered = tuple((Fr(k) + (Fr(1, 10) if (k + n) % 3 == 0 else 0), Fr(n))
                     for k in range(-7, 8) for n in range(-7, 8))
    candidates = [lattice(), lattice(Fr(1, 2), 2), lattice(2, Fr(1, 2)), shifted, jittered]
    for lam in candidates:
        rep = certify_basis(GaborSystem(w, lam), window=((-4, 4), (-4, 4)), frame_probes=0)
        assert not rep.certified
        assert rep.witnesses


@pytest.mark.acceptance(7, "phase a_1 = 1/2 on the rows yields the witness (a_1+beta, 1)")
def test_necessity_witness():
    w = W(Fr(3, 10), 1)
    a = {k: (Fr(1, 2) if k % 2 else Fr(0)) for k in range(-3, 4)}
    pts = tuple((m + a[k], Fr(k)) for k in range(-3, 4) for m in range(-4, 5))
    v = check_orthogonality(GaborSystem(w, pts))
    assert not v.orthogonal
    d = (a[1] + w.beta, Fr(1))
    assert v.has_difference(d)
    hit = next(x for x in v.violations if x.difference == d)
    assert hit.modulus > 0.01
    assert abs(stft_ww(w, d[0], d[1])) > 0.01


@pytest.mark.acceptance(8, "half case: explicit (K, L, a) instance certified; K = 2Z rejected")
def test_half_case_lattice():
    K = TranslationSet1D.integers(6, (0, 1, 2))
    L = TranslationSet1D.integers(6, (0, 1))
    lam = standard_lambda_half(1, K, L, phases={0: 0, 1: Fr(1, 3), 2: Fr(1, 2)})
    rep = certify_basis(GaborSystem(W(Fr(1, 2), 1), lam), window=((-4, 4), (-4, 4)), frame_probes=5)
    assert rep.certified
    with pytest.raises(StandardConditionError) as e:
        validate_standard_half(Fr(1, 2), TranslationSet1D.integers(2), TranslationSet1D.integers(4, (0, 1)))
    assert e.value.condition == "iii"
    with pytest.raises(StandardConditionError) as e:
        validate_standard_half(1, K, TranslationSet1D.integers(2))
    assert e.value.condition == "iv"


@pytest.mark.acceptance(9, "spectral pairs, KOO agreement and the product form of chi_B hat")
def test_spectral_pairs():
    Om = W(Fr(3, 10), 1).omega
    for A in (UNIT, Om):
        v = spectral_pair_check(A, UNIT)
        assert v.is_spectral_pair and v.tight
        r = koo_check(v, TranslationSet1D.integers(), (-6, 6))
        assert r.tiling and r.spectrum
        r = koo_check(v, TranslationSet1D.integers(2), (-6, 6))
        assert not r.tiling and not r.spectrum
    rng = np.random.default_rng(9)
    for beta in (Fr(1, 2), Fr(1), Fr(3, 2), Fr(2)):
        n = 2 * beta + 1
        B = normalize([(Fr(2 * k) / n, Fr(2 * k + 1) / n) for k in range(int(n))])
        oms = rng.uniform(-20, 20, 1000)
        err = max(abs(chi_b_hat_product_form(beta, om) - abs(ft_indicator(B, float(om)))) for om in oms)
        assert err <= 1e-12


def _laba_grid():
    out = []
    alphas = sorted({Fr(p, q) for q in range(1, 7) for p in range(1, q + 1) if Fr(p, q) <= Fr(1, 2)})
    betas = sorted({Fr(p, q) for q in range(1, 7) for p in range(1, 4 * q + 1)})
    for a in alphas:
        for b in betas:
            out.append((a, b))
    return out


@pytest.mark.acceptance(10, "exact tiling kernel and exhaustive classification agreement")
def test_tiling_kernel():
    with Clock() as c:
        prof = coverage_profile_1d(W(Fr(3, 10), 1).omega, TranslationSet1D.integers(), (-5 + 2, 5 - 2))
        assert [n for _, n in prof] == [1] and all(isinstance(n, int) for _, n in prof)
        assert check_tiling_1d(W(Fr(3, 10), 1).omega, TranslationSet1D.integers(), (-5, 5)).status == "tiling"
        half = TranslationSet1D.integers(2, (0, Fr(1, 2)))
        v = check_tiling_1d(W(Fr(1, 2), Fr(1, 2)).omega, half, (-5, 5))
        assert v.status == "tiling"
        checked = 0
        for a, b in _laba_grid():
            cls = laba_classify(a, b)
            A = W(a, b).omega
            if cls.tiles:
                period = cls.tiling_set.period
                span = 2 * A.diameter + period
                assert check_tiling_1d(A, cls.tiling_set, (-span, span)).status == "tiling", (a, b)
            else:
                assert find_periodic_tiling(A, max_period=4, max_offsets=8) is None, (a, b)
            checked += 1
        assert checked > 200
    assert c.elapsed < 30


@pytest.mark.acceptance(11, "energy of V_g g over growing boxes increases towards 1")
def test_isometry_trend():
    f = UNIT
    energies = [stft_energy_box(f, f, (-2, 2), T) for T in (10, 25, 50)]
    assert energies[0] < energies[1] < energies[2]
    assert energies[2] >= 0.9
    assert energies[2] <= 1 + 1e-9
