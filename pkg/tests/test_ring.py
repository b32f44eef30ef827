"""Polynomial ring, term order, and determinant tests."""

import fractions

import pytest
from hypothesis import given, strategies as st

from reescm.ring import (QQ, PrimeField, PolyRing, Variable, VariableMatrix,
                         diag_lex_variables, parse_polynomial)


def small_ring(m=2, n=2):
    return PolyRing(diag_lex_variables(m, n))


def test_variable_order_families():
    vs = diag_lex_variables(2, 3)
    names = [str(v) for v in vs]
    # all z before all x before all y
    zi = [i for i, s in enumerate(names) if s.startswith("z")]
    xi = [i for i, s in enumerate(names) if s.startswith("x")]
    yi = [i for i, s in enumerate(names) if s.startswith("y")]
    assert max(zi) < min(xi) < max(xi) < min(yi)


def test_variable_order_within_family():
    vs = diag_lex_variables(2, 3)
    names = [str(v) for v in vs]
    # z: rows ascending, columns ascending
    assert names.index("z[1,1]") < names.index("z[1,2]") < names.index("z[2,1]")
    # x, y: rows ascending, columns DESCENDING
    assert names.index("x[1,3]") < names.index("x[1,1]") < names.index("x[2,3]")
    assert names.index("y[1,3]") < names.index("y[1,1]") < names.index("y[2,3]")


def test_lex_comparison_is_tuple_comparison():
    ring = small_ring()
    x12 = ring.monomial(Variable("x", 1, 2))
    x11 = ring.monomial(Variable("x", 1, 1))
    assert x12 > x11  # column-descending order puts x[1,2] first


def test_polynomial_arithmetic_and_normalization():
    ring = small_ring()
    p = parse_polynomial(ring, "2*x[1,1]*y[2,2] - 4*x[1,2]")
    q = parse_polynomial(ring, "x[1,2]")
    assert str(p + q.scale(4)) == "2*x[1,1]*y[2,2]"
    r = p.normalized()
    coeffs = [c for _, c in r.terms]
    assert all(c.denominator == 1 for c in map(fractions.Fraction, coeffs))
    assert r.lc > 0


def test_parse_round_trip():
    ring = small_ring()
    text = "z[1,1]*x[2,2] - z[2,2]*x[1,1] + 3*y[1,2]"
    p = parse_polynomial(ring, text)
    assert parse_polynomial(ring, str(p)) == p


def test_prime_field_arithmetic():
    gf = PrimeField(7)
    ring = PolyRing(diag_lex_variables(2, 2), gf)
    p = parse_polynomial(ring, "3*x[1,1] + 5*x[1,1]")
    assert str(p) == "x[1,1]"


def test_determinant_2x2_and_3x3():
    ring = PolyRing(diag_lex_variables(3, 3))
    def x(i, j):
        return ring.var(Variable("x", i, j))
    d2 = VariableMatrix([[x(1, 1), x(1, 2)], [x(2, 1), x(2, 2)]]).determinant()
    assert d2 == x(1, 1) * x(2, 2) - x(1, 2) * x(2, 1)
    mat = [[x(i, j) for j in (1, 2, 3)] for i in (1, 2, 3)]
    d3 = VariableMatrix(mat).determinant()
    # Laplace expansion along the first row
    assert len(d3.terms) == 6


@given(st.lists(st.integers(-5, 5), min_size=3, max_size=3),
       st.lists(st.integers(-5, 5), min_size=3, max_size=3))
def test_addition_commutes(cs, ds):
    ring = small_ring()
    vs = [Variable("x", 1, 1), Variable("x", 1, 2), Variable("y", 2, 1)]
    p = sum((ring.const(c) * ring.var(v) for c, v in zip(cs, vs)), ring.zero())
    q = sum((ring.const(d) * ring.var(v) for d, v in zip(ds, vs)), ring.zero())
    assert p + q == q + p
    assert p * q == q * p


def test_mono_helpers():
    ring = small_ring()
    a = ring.monomial(Variable("x", 1, 1), Variable("y", 2, 2))
    b = ring.monomial(Variable("x", 1, 1))
    assert ring.mono_divides(b, a)
    assert not ring.mono_divides(a, b)
    assert ring.mono_div(a, b) == ring.monomial(Variable("y", 2, 2))
    assert ring.mono_lcm(a, b) == a
    assert ring.mono_degree(a) == 2
