"""Effective conductivity of doubly periodic composites."""

from ._effcond import (
    closed_form,
    hexagonal_coefficients,
    lattice_sums,
    percolation_threshold,
    series_coefficients,
    solve,
)

__all__ = [
    "closed_form",
    "hexagonal_coefficients",
    "lattice_sums",
    "percolation_threshold",
    "series_coefficients",
    "solve",
]
