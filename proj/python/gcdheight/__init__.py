from ._core import (
    GcdHeightError,
    __version__,
    bound,
    bound_coefficient,
    colength_linear,
    gcd_height,
    graded_piece_dim,
    groebner,
    lemma_h0,
    membership,
    normalize_point,
    parse_poly,
    profile,
    quotient_dim,
    sample,
    search,
    verify,
    weil_height,
)

__all__ = [
    "GcdHeightError",
    "__version__",
    "bound",
    "bound_coefficient",
    "colength_linear",
    "gcd_height",
    "graded_piece_dim",
    "groebner",
    "lemma_h0",
    "membership",
    "normalize_point",
    "parse_poly",
    "profile",
    "quotient_dim",
    "sample",
    "search",
    "verify",
    "weil_height",
]
