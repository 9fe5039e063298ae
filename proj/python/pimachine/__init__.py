"""Exact two-block collision machine and Grover search simulator."""

from fractions import Fraction

from ._core import (
    compare,
    count,
    g_matrix,
    grover_trace,
    pi_digits,
    simulate,
    success_probability,
    theta_star,
)

__all__ = [
    "compare",
    "count",
    "g_matrix",
    "grover_trace",
    "mass",
    "pi_digits",
    "simulate",
    "success_probability",
    "theta_star",
]


def mass(value):
    """Render an int, Fraction, or num/den string as an exact mass argument."""
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, str):
        return value
    raise TypeError(f"mass must be int, Fraction, or str, got {type(value).__name__}")
