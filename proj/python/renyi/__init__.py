"""Solver and Monte Carlo oracle for the unit-disk accretion process.

The heavy lifting lives in the compiled extension; this package just
re-exports its public surface.
"""

from ._core import (
    NonConvergenceError,
    OutOfDomainError,
    Solution,
    __version__,
    compare,
    estimate,
    features,
    sample_accretion,
    sample_positions,
    solve,
)

__all__ = [
    "NonConvergenceError",
    "OutOfDomainError",
    "Solution",
    "__version__",
    "compare",
    "estimate",
    "features",
    "sample_accretion",
    "sample_positions",
    "solve",
]
