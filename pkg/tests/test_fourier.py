import cmath
import math
from fractions import Fraction as Fr

import numpy as np
import pytest
from hypothesis import given, strategies as st

from gabortiles.fourier import (covariance_check, decay_bound, ft_indicator, overlap, quadrature_stft, stft_cross,
                                stft_inner_product_box, stft_ww, stft_ww_grid)
from gabortiles.intervals import normalize
from gabortiles.window import WindowParams

W = WindowParams(Fr(3, 10), 1)
UNIT = normalize([(0, 1)])


def test_transform_at_zero_is_measure():
    assert ft_indicator(W.omega, 0) == pytest.approx(1.0)
    assert ft_indicator(normalize([(0, Fr(1, 3)), (2, Fr(5, 2))]), 0) == pytest.approx(5 / 6)


@pytest.mark.parametrize("k", [1, 2, 3, -1, -5, 17])
def test_unit_interval_vanishes_at_integers(k):
    assert abs(ft_indicator(UNIT, k)) < 1e-15


def test_unit_interval_at_half():
    assert ft_indicator(UNIT, 0.5) == pytest.approx(2 / math.pi * cmath.exp(-0.5j * math.pi), abs=1e-12)
    assert quadrature_stft(UNIT, normalize([(-5, 5)]), 0, 0.5) == pytest.approx(ft_indicator(UNIT, 0.5), abs=1e-12)


def test_series_branch_is_continuous():
    a = ft_indicator(UNIT, 1e-9)
    b = ft_indicator(UNIT, 2e-8)
    assert abs(a - 1) < 1e-8 and abs(b - 1) < 1e-7


def test_overlap_tables():
    assert overlap(W, Fr(1, 10)) == normalize([(Fr(1, 10), Fr(3, 10)), (Fr(7, 5), 2)])
    w2 = WindowParams(Fr(3, 10), Fr(1, 5))
    assert overlap(w2, Fr(1, 4)) == normalize([(Fr(1, 4), Fr(3, 10)), (Fr(1, 2), Fr(11, 20)), (Fr(3, 4), Fr(6, 5))])
    assert not overlap(W, 2) and not overlap(W, 7)


@given(st.fractions(min_value=0, max_value=Fr(1, 2), max_denominator=20).filter(lambda a: a > 0),
       st.fractions(min_value=0, max_value=4, max_denominator=20).filter(lambda b: b > 0),
       st.fractions(min_value=0, max_value=6, max_denominator=40))
def test_overlap_matches_piecewise_formula(a, b, t):
    """Ω ∩ (Ω+t) for t ≥ 0 from the four pairwise intersections of parts."""
    w = WindowParams(a, b)
    parts = [(0, a), (a + b, 1 + b)]
    raw = [(max(p, q + t), min(r, s + t)) for p, r in parts for q, s in parts]
    assert overlap(w, t) == normalize([(lo, hi) for lo, hi in raw if lo < hi])


def test_window_at_origin():
    assert stft_ww(W, 0, 0) == pytest.approx(1.0)


@given(st.floats(-3, 3), st.floats(-10, 10))
def test_modulus_symmetries(t, nu):
    v = abs(stft_ww(W, t, nu))
    assert abs(stft_ww(W, t, -nu)) == pytest.approx(v, abs=1e-14)
    assert abs(stft_ww(W, -t, nu)) == pytest.approx(v, abs=1e-14)


def test_closed_form_matches_quadrature_example():
    assert abs(stft_ww(W, 0.5, 0.7) - quadrature_stft(W.omega, W.omega, 0.5, 0.7)) < 1e-10
    assert abs(stft_ww(W, 0.1, 1.7) - quadrature_stft(W.omega, W.omega, 0.1, 1.7, n=64)) < 1e-10


def test_negative_shift_phase_is_direct():
    # no symmetry shortcut for the phase: compare the complex value with quadrature
    for t, nu in [(-0.2, 1.3), (-1.5, -2.2), (-0.05, 7.1)]:
        assert abs(stft_ww(W, t, nu) - quadrature_stft(W.omega, W.omega, t, nu)) < 1e-10


def test_quadrature_refinement_converges():
    exact = stft_ww(W, 0.1, 9.3)
    errs = [abs(quadrature_stft(W.omega, W.omega, 0.1, 9.3, n=n) - exact) for n in (2, 4, 8, 16)]
    assert errs[-1] < 1e-12
    assert all(e2 <= e1 or e2 < 1e-13 for e1, e2 in zip(errs, errs[1:]))


def test_cross_transform_cases():
    for nu in (0.0, 0.4, 3.3):
        assert stft_cross(W.omega, W, 0, nu) == pytest.approx(stft_ww(W, 0, nu))
    assert stft_cross(normalize([(10, 11)]), W, 0, 1.2) == 0


def test_cross_transform_random_against_quadrature():
    rng = np.random.default_rng(7)
    for _ in range(200):
        ends = np.sort(rng.uniform(-3, 3, 4))
        F = normalize([(ends[0], ends[1]), (ends[2], ends[3])])
        t, nu = rng.uniform(-3, 3), rng.uniform(-10, 10)
        assert abs(stft_cross(F, W, t, nu) - quadrature_stft(F, W.omega, t, nu, n=128)) < 1e-9


def test_covariance_relation():
    F = UNIT
    lhs, rhs = covariance_check(F, W, (0, 0), 0.3, 1.1)
    assert lhs == pytest.approx(rhs, abs=1e-12)
    assert lhs == pytest.approx(stft_cross(F, W, 0.3, 1.1), abs=1e-12)
    lhs, rhs = covariance_check(F, W, (1, 0), 0.7, 2.4)
    assert abs(lhs - rhs) < 1e-9
    rng = np.random.default_rng(3)
    for _ in range(20):
        lam = (rng.uniform(-2, 2), rng.uniform(-3, 3))
        x, nu = rng.uniform(-2, 2), rng.uniform(-5, 5)
        lhs, rhs = covariance_check(F, W, lam, x, nu)
        assert abs(lhs - rhs) < 1e-9
        assert abs(lhs) == pytest.approx(abs(stft_cross(F, W, x - lam[0], nu - lam[1])), abs=1e-9)


@given(st.floats(-3, 3), st.floats(-40, 40))
def test_decay_bound_holds(t, nu):
    assert abs(stft_ww(W, t, nu)) <= decay_bound(W, t, nu) + 1e-15
    assert abs(stft_ww(W, t, nu)) <= min(float(overlap(W, abs(t)).measure()), 3 / (math.pi * abs(nu) + 1e-300)) + 1e-15


@given(st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=8), min_size=4, max_size=4, unique=True),
       st.floats(-8, 8))
def test_linearity_over_disjoint_pieces(ends, nu):
    e = sorted(ends)
    A, B = normalize([(e[0], e[1])]), normalize([(e[2], e[3])])
    both = normalize([(e[0], e[1]), (e[2], e[3])])
    assert ft_indicator(both, nu) == pytest.approx(ft_indicator(A, nu) + ft_indicator(B, nu), abs=1e-13)


def test_grid_matches_pointwise():
    ts, nus = np.linspace(-2.5, 2.5, 11), np.linspace(-4, 4, 7)
    grid = stft_ww_grid(W, ts, nus)
    for i, t in enumerate(ts):
        for j, nu in enumerate(nus):
            assert grid[i, j] == pytest.approx(stft_ww(W, t, nu), abs=1e-14)


def test_inner_product_relation():
    """⟨V_{g1} f1, V_{g2} f2⟩ → |F1 ∩ F2| |G1 ∩ G2| for indicator functions."""
    F1, F2 = normalize([(0, 1)]), normalize([(Fr(1, 2), Fr(3, 2))])
    G1, G2 = normalize([(0, 1)]), normalize([(0, Fr(1, 2))])
    val = stft_inner_product_box(F1, G1, F2, G2, (-3, 3), 60)
    assert abs(val - 0.5 * 0.5) < 5e-2
