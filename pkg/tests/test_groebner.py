"""Buchberger machinery tests."""

import pytest

from reescm.groebner import (Budget, BudgetExceeded, buchberger, autoreduce,
                             eliminate, ideal_membership, initial_ideal,
                             is_groebner_basis, minimal_monomials, reduce_poly,
                             s_polynomial)
from reescm.ring import PolyRing, Variable, diag_lex_variables, parse_polynomial


def ring23():
    return PolyRing(diag_lex_variables(2, 3))


def P(ring, s):
    return parse_polynomial(ring, s)


def test_reduce_by_self_is_zero():
    ring = ring23()
    g = P(ring, "z[1,1]*x[1,2] - z[1,2]*x[1,1]")
    assert reduce_poly(g, [g]).is_zero()


def test_s_polynomial_coprime_leads():
    ring = ring23()
    f = P(ring, "x[1,1]")
    g = P(ring, "y[1,1]")
    s = s_polynomial(f, g)
    assert s.is_zero()


def test_buchberger_on_twisted_cubic_style_ideal():
    ring = ring23()
    # 2x2 minors of the 2x3 x-matrix
    gens = [
        P(ring, "x[1,1]*x[2,2] - x[1,2]*x[2,1]"),
        P(ring, "x[1,1]*x[2,3] - x[1,3]*x[2,1]"),
        P(ring, "x[1,2]*x[2,3] - x[1,3]*x[2,2]"),
    ]
    gb = buchberger(gens)
    ok, bad = is_groebner_basis(gb)
    assert ok and not bad
    # minors of a generic matrix are already a Groebner basis in this order
    ok2, _ = is_groebner_basis(gens)
    assert ok2


def test_autoreduce_removes_redundant():
    ring = ring23()
    f = P(ring, "x[1,1]")
    g = P(ring, "x[1,1]*y[1,1] + x[1,2]")
    reduced = autoreduce([f, g])
    assert sorted(str(p) for p in reduced) == ["x[1,1]", "x[1,2]"]


def test_minimal_monomials():
    ring = ring23()
    a = ring.monomial(Variable("x", 1, 1))
    ab = ring.mono_mul(a, ring.monomial(Variable("y", 1, 1)))
    c = ring.monomial(Variable("z", 1, 1))
    assert set(minimal_monomials([a, ab, c], ring)) == {a, c}


def test_initial_ideal_requires_gb_when_checked():
    ring = ring23()
    gens = [
        P(ring, "x[1,1]*x[2,2] - x[1,2]*x[2,1]"),
        P(ring, "x[1,1]*x[2,3] - x[1,3]*x[2,1]"),
        P(ring, "x[1,2]*x[2,3] - x[1,3]*x[2,2]"),
    ]
    leads = initial_ideal(gens, check=True)
    assert len(leads) == 3


def test_eliminate_projects_out_variable():
    # eliminate t from {t - x[1,1], t - y[1,1]} => x[1,1] - y[1,1]
    t = Variable("t")
    base = diag_lex_variables(2, 2)
    ring = PolyRing([t] + base)
    f = P(ring, "t - x[1,1]")
    g = P(ring, "t - y[1,1]")
    small, elim = eliminate(ring, [f, g], [t])
    polys = [str(p) for p in elim]
    assert polys == ["x[1,1] - y[1,1]"]
    assert small.nvars == len(base)


def test_ideal_membership():
    ring = ring23()
    gens = [P(ring, "x[1,1]"), P(ring, "y[1,1]")]
    gb = buchberger(gens)
    member = P(ring, "x[1,1]*y[2,2] + y[1,1]")
    assert ideal_membership(member, gb)
    assert not ideal_membership(P(ring, "z[1,1]"), gb)


def test_budget_exceeded_is_raised():
    ring = ring23()
    gens = [
        P(ring, "x[1,1]*x[2,2] - x[1,2]*x[2,1]"),
        P(ring, "x[1,1]*x[2,3] - x[1,3]*x[2,1]"),
        P(ring, "x[1,2]*x[2,3] - x[1,3]*x[2,2]"),
        P(ring, "x[1,1]*y[1,1] - 1"),
    ]
    with pytest.raises(BudgetExceeded):
        buchberger(gens, budget=Budget(max_pairs=1))
