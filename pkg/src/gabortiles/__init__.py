"""Orthonormal Gabor bases whose window is the indicator of two intervals.

Submodules are imported on first attribute access, so ``import gabortiles``
stays cheap and the CLI can set thread limits before numpy loads.
"""

from importlib import import_module

__version__ = "0.1.0"

_EXPORTS = {
    "intervals": ("Interval", "IntervalUnion", "ModeMismatch", "normalize", "intersect", "translate", "measure",
                  "open_difference_set", "to_scalar"),
    "window": ("WindowParams",),
    "fourier": ("TimeFrequencyPoint", "ft_indicator", "stft_ww", "stft_cross", "decay_bound", "quadrature_stft",
                "covariance_check", "stft_energy_box", "stft_inner_product_box"),
    "zerosets": ("ZeroSetDescription", "zero_set_alpha_lt_half", "zero_set_alpha_half", "zero_catalog",
                 "contains", "distance", "sample", "zero_free_predicates"),
    "tiling": ("Coset", "TranslationSet1D", "TranslationSet2D", "Fiber", "ProductRegion2D", "Verdict",
               "coverage_profile_1d", "check_packing_1d", "check_tiling_1d", "check_tiling_2d", "laba_classify",
               "find_periodic_tiling", "glw_equivalence_test", "induced_time_set", "lattice"),
    "gabor": ("PackingRegion", "packing_region", "verify_packing_region", "GaborSystem", "check_orthogonality",
              "frame_sum", "certify_basis", "standard_lambda_lt_half", "standard_lambda_half",
              "StandardConditionError", "CertificationError"),
    "spectral": ("SpectralPairVerdict", "spectral_pair_check", "spectral_pair_product", "koo_check",
                 "chi_b_hat_product_form"),
}
_WHERE = {name: mod for mod, names in _EXPORTS.items() for name in names}
__all__ = sorted(_WHERE)


def __getattr__(name):
    mod = _WHERE.get(name)
    if mod is None:
        raise AttributeError(f"module 'gabortiles' has no attribute {name!r}")
    value = getattr(import_module(f".{mod}", __name__), name)
    globals()[name] = value
    return value
