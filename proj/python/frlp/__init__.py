"""Fractional Fourier Littlewood-Paley toolbox.

Thin Python facade over the C++ core. Signals are complex128 numpy arrays
paired with the physical extent L of the periodic grid they sample.
"""

from ._frlp import (
    FrlpError,
    apply_multiplier,
    apply_potential,
    band_selector,
    besov_norm,
    bmo_norm,
    carleson_score,
    chirp_mul,
    classify_regime,
    descriptors,
    dyadic_square_function,
    effective_radius,
    frft,
    gen_gaussian,
    haar_transform,
    hardy_quasinorm,
    ifrft,
    kato_ponce_region,
    lp_block,
    lp_norm,
    pullback_norm,
    run_checks,
    sharp_maximal,
    square_function,
    synthesize_atom,
    triebel_norm,
    twisted_convolution,
    twisted_product,
    validate_atom,
    validate_sampling,
    weak_norm,
)

__all__ = [
    "FrlpError",
    "apply_multiplier",
    "apply_potential",
    "band_selector",
    "besov_norm",
    "bmo_norm",
    "carleson_score",
    "chirp_mul",
    "classify_regime",
    "descriptors",
    "dyadic_square_function",
    "effective_radius",
    "frft",
    "gen_gaussian",
    "haar_transform",
    "hardy_quasinorm",
    "ifrft",
    "kato_ponce_region",
    "lp_block",
    "lp_norm",
    "pullback_norm",
    "run_checks",
    "sharp_maximal",
    "square_function",
    "synthesize_atom",
    "triebel_norm",
    "twisted_convolution",
    "twisted_product",
    "validate_atom",
    "validate_sampling",
    "weak_norm",
]

__version__ = "0.1.0"
