"""Parsers for curve input formats."""

from braidmono.parsers.polytext import PolynomialParser, format_poly, parse_curve

__all__ = ["PolynomialParser", "format_poly", "parse_curve"]
