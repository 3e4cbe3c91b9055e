"""Tests for the real/imaginary split along complex fibers."""

import sympy as sp

from braidmono.exactpoly import BivariatePoly, pseudo_remainder_in_v, real_imag_split
from braidmono.exactpoly.realimag import U, V


class TestRealImagSplit:
    """f(x, u + i v) = f_e + i v f_oo."""

    def test_split_reassembles(self, curve_c):
        x = curve_c.symbols[0]
        parts = real_imag_split(curve_c)
        whole = sp.expand(curve_c.substitute(x, U + sp.I * V))
        assert sp.expand(parts.f_e.as_expr() + sp.I * V * parts.f_oo.as_expr() - whole) == 0

    def test_square(self):
        x, y = sp.symbols("x y")
        parts = real_imag_split(BivariatePoly.from_sympy(y**2 - x))
        assert sp.expand(parts.f_e.as_expr() - (U**2 - V**2 - x)) == 0
        assert sp.expand(parts.f_oo.as_expr() - 2 * U) == 0


class TestPseudoRemainder:
    """Reduction of f_e modulo f_oo in v."""

    def test_remainder_is_even_and_verifies(self, curve_c):
        parts = real_imag_split(curve_c)
        remainder = pseudo_remainder_in_v(parts.f_e, parts.f_oo)
        assert remainder.is_even
        assert remainder.verify()
        r2, _, r0, _ = remainder.quadratic_parts()
        assert not r2.is_zero
        assert not r0.is_zero
