"""Exact chain complex reduction via Morse matchings.

The heavy lifting lives in the C++ extension; this package re-exports it.
"""

from ._core import (
    Cell,
    Complex,
    InputError,
    Reduction,
    ValidationError,
    critical_cells,
    export_dot,
    greedy_matching,
    reduce,
    smith_normal_form,
    validate_matching,
    verify_reduction,
)

__all__ = [
    "Cell",
    "Complex",
    "InputError",
    "Reduction",
    "ValidationError",
    "critical_cells",
    "export_dot",
    "greedy_matching",
    "reduce",
    "smith_normal_form",
    "validate_matching",
    "verify_reduction",
]
