"""Exact computations in the free ring on n noncommuting variables."""

__version__ = "0.1.0"

from .ring import Monomial, Polynomial, parse_poly, render_poly  # noqa: F401
