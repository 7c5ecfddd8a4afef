"""Word interpretations, reduction bounds and asymptotic-class estimates for
S-adic subshifts, backed by the C++ core."""

from ._core import (
    Fixture,
    SadicError,
    build_b_set,
    fine_wilf,
    interpretations,
    least_period,
    periods,
    run_cli,
    simple_double_interpretations,
    star_factorizations,
    __version__,
)

__all__ = [
    "Fixture",
    "SadicError",
    "build_b_set",
    "fine_wilf",
    "interpretations",
    "least_period",
    "periods",
    "run_cli",
    "simple_double_interpretations",
    "star_factorizations",
    "__version__",
]
