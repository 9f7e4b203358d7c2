import random
from fractions import Fraction as Fr

import numpy as np
import pytest

from gabortiles.fourier import stft_ww
from gabortiles.gabor import (CertificationError, GaborSystem, StandardConditionError, certify_basis,
                              check_orthogonality, frame_sum, half_case_blocks, packing_region,
                              sample_difference_points, standard_lambda_half, standard_lambda_lt_half,
                              validate_standard_half, verify_packing_region)
from gabortiles.intervals import normalize
from gabortiles.tiling import TranslationSet1D, check_tiling_2d, lattice
from gabortiles.window import WindowParams


def W(a, b):
    return WindowParams(a, b)


def test_region_lt_half():
    R = packing_region(W(Fr(3, 10), 1))
    assert R.measure() == 1 and R.tight
    assert R.region.freq_factor == normalize([(0, 1)])


def test_region_half_integer_beta():
    R = packing_region(W(Fr(1, 2), 1))
    assert R.region.freq_factor == normalize([(0, Fr(1, 3)), (Fr(2, 3), 1), (Fr(4, 3), Fr(5, 3))])
    assert R.measure() == 1


def test_region_non_half_integer_beta():
    F = half_case_blocks(Fr(3, 4))
    assert F == normalize([(0, Fr(2, 5)), (Fr(4, 5), Fr(6, 5)), (Fr(8, 5), Fr(9, 5))])
    assert packing_region(W(Fr(1, 2), Fr(3, 4))).measure() == 1


def test_open_case():
    with pytest.raises(ValueError, match="no tight region known"):
        packing_region(W(Fr(1, 2), Fr(1, 4)))
    with pytest.raises(CertificationError, match="open case"):
        certify_basis(GaborSystem(W(Fr(1, 2), Fr(1, 4)), lattice()))


@pytest.mark.parametrize("a,b", [(Fr(3, 10), 1), (Fr(3, 10), Fr(1, 5)), (Fr(1, 2), 1), (Fr(1, 2), Fr(3, 2)),
                                 (Fr(1, 2), Fr(3, 4)), (Fr(1, 5), Fr(7, 3))])
def test_regions_are_zero_free(a, b):
    w = W(a, b)
    v = verify_packing_region(w, packing_region(w), n_spot=2000, seed=1)
    assert v.zero_free and v.catalog_hits == () and v.spot_min > 1e-10


def test_zero_free_check_catches_a_bad_region():
    # [0,1) × [0,2) contains the difference (0, 1), a zero of V
    w = W(Fr(3, 10), 1)
    from gabortiles.tiling import ProductRegion2D
    R = ProductRegion2D(w.omega, normalize([(0, 2)]))
    v = verify_packing_region(w, R, n_spot=200)
    assert not v.zero_free and v.catalog_hits


def test_difference_samples_lie_in_difference_set():
    R = packing_region(W(Fr(3, 10), 1)).region
    pts = sample_difference_points(R, 500, seed=2)
    assert pts.shape == (500, 2) and (pts >= 0).all()
    assert (pts[:, 0] < 2).all() and (pts[:, 1] < 1).all()


def test_orthogonality_lattice_and_witness():
    w = W(Fr(3, 10), 1)
    v = check_orthogonality(GaborSystem(w, lattice()), box=((-2, 2), (-2, 2)))
    assert v.orthogonal and v.witness is None and v.differences_checked > 0
    v = check_orthogonality(GaborSystem(w, lattice(1, Fr(1, 2))), box=((-2, 2), (-2, 2)))
    assert not v.orthogonal
    assert v.has_difference((0, Fr(1, 2)))
    assert v.witness.modulus == pytest.approx(abs(stft_ww(w, 0, 0.5)))


def test_orthogonality_finite_points():
    w = W(Fr(3, 10), 1)
    v = check_orthogonality(GaborSystem(w, ((0, 0), (1, 0), (0, 1))))
    assert v.orthogonal and v.pairs_checked == 3
    v = check_orthogonality(GaborSystem(w, ((0, 0), (Fr(3, 2), 2))))
    assert not v.orthogonal and v.witness.difference == (Fr(3, 2), 2)


def test_frame_sum_lattice_is_one():
    w = W(0.3, 1.0)
    rng = random.Random(0)
    for _ in range(10):
        om = (rng.uniform(-2, 2), rng.uniform(-2, 2))
        fs = frame_sum(w, lattice(), om)
        assert fs.tail_bound < 1e-2
        assert 1 - fs.tail_bound - 1e-6 <= fs.value <= 1 + 1e-9 + fs.tail_bound


def test_frame_sum_average_equals_density():
    # ∫|V|² = 1, so the mean of the frame sum over a period cell is the density of Λ
    w = W(0.3, 1.0)
    rng = np.random.default_rng(4)
    vals = [frame_sum(w, lattice(1, 2), (t, nu), 300).value for t, nu in zip(rng.random(300), 2 * rng.random(300))]
    assert np.mean(vals) == pytest.approx(0.5, abs=0.03)


def test_certify_standard_lattice():
    w = W(Fr(3, 10), 1)
    rep = certify_basis(GaborSystem(w, standard_lambda_lt_half(1, [0, Fr(1, 3), Fr(5, 7)])), frame_probes=5)
    assert rep.certified and rep.laba_tiles and rep.witnesses == []
    assert rep.frame_sums_consistent and len(rep.frame_probes) == 5


def test_certify_rejects_non_tiles():
    w = W(Fr(3, 10), Fr(3, 2))
    rep = certify_basis(GaborSystem(w, lattice()))
    assert not rep.certified and not rep.laba_tiles and rep.witnesses


def test_standard_phase_validation():
    with pytest.raises(ValueError, match="phases"):
        standard_lambda_lt_half(1, [Fr(3, 2)])
    lam = standard_lambda_lt_half(1, {k: Fr(1, 2) if k % 2 else 0 for k in range(-6, 7)})
    assert lam.t_extent == (-6, 6)
    with pytest.raises(ValueError, match="missing fibers"):
        lam.fibers_in(-8, 0)


def test_half_case_standard_set():
    K = TranslationSet1D.integers(6, (0, 1, 2))
    L = TranslationSet1D.integers(6, (0, 1))
    lam = standard_lambda_half(1, K, L, phases={0: 0, 1: Fr(1, 2), 2: Fr(1, 4)})
    w = W(Fr(1, 2), 1)
    assert check_tiling_2d(packing_region(w).region, lam, ((-6, 6), (-6, 6))).status == "tiling"
    rep = certify_basis(GaborSystem(w, lam), window=((-5, 5), (-5, 5)), frame_probes=3)
    assert rep.certified


def test_half_case_conditions_reject_parity_counterexample():
    L = TranslationSet1D.integers(6, (0, 1))
    with pytest.raises(StandardConditionError) as e:
        validate_standard_half(Fr(1, 2), TranslationSet1D.integers(2), TranslationSet1D.integers(4, (0, 1)))
    assert e.value.condition == "iii"
    # for β = 1 the even integers do complement {0, 3}
    assert validate_standard_half(1, TranslationSet1D.integers(2), L).condition_iii.status == "tiling"
    with pytest.raises(StandardConditionError) as e:
        validate_standard_half(1, TranslationSet1D.integers(6, (0, 1, 2)), TranslationSet1D.integers(2))
    assert e.value.condition == "iv"
    rep = validate_standard_half(Fr(1, 2), TranslationSet1D.integers(4, (0, 1)), TranslationSet1D.integers(4, (0, 1)))
    assert rep.condition_iii.status == "tiling"


def _finite_sum(w, pts, om):
    return sum(abs(stft_ww(w, om[0] - t, om[1] - nu)) ** 2 for t, nu in pts)


def test_orthogonal_finite_sets_pack_and_others_exceed_one():
    w = W(0.3, 1.0)
    rng = random.Random(8)
    good = [(float(k), float(n)) for k in range(-1, 2) for n in range(-2, 3)]
    assert check_orthogonality(GaborSystem(w, tuple(good))).orthogonal
    for _ in range(25):
        om = (rng.uniform(-1, 1), rng.uniform(-2, 2))
        assert _finite_sum(w, good, om) <= 1 + 1e-9
    bad = good + [(0.5, 0.25)]
    assert not check_orthogonality(GaborSystem(w, tuple(bad))).orthogonal
    assert _finite_sum(w, bad, (0.5, 0.25)) > 1


def test_inner_product_of_shifted_windows_matches_quadrature():
    # ⟨M_ν T_t g, M_ν' T_t' g⟩ by a fine midpoint rule on the support
    w = W(0.3, 1.0)
    parts = [(float(p.lo), float(p.hi)) for p in w.omega.parts]
    rng = random.Random(6)
    x = np.linspace(-4, 6, 400_001)
    x = (x[1:] + x[:-1]) / 2
    dx = x[1] - x[0]

    def g(y):
        return sum(((y >= a) & (y < b)).astype(float) for a, b in parts)
    for _ in range(10):
        (t1, n1), (t2, n2) = [(rng.uniform(-1.5, 1.5), rng.uniform(-3, 3)) for _ in range(2)]
        f1 = g(x - t1) * np.exp(2j * np.pi * n1 * x)
        f2 = g(x - t2) * np.exp(2j * np.pi * n2 * x)
        ip = np.sum(f1 * np.conj(f2)) * dx
        assert abs(abs(ip) - abs(stft_ww(w, t1 - t2, n1 - n2))) < 1e-3
