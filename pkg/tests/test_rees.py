"""Instance construction and symbolic family tests (small instances only)."""

import pytest

from reescm import rees
from reescm.groebner import buchberger, reduce_poly
from reescm.rees import InstanceError
from reescm.ring import Variable, parse_polynomial


def inst1():
    return rees.build_instance(2, 2, 2, 2, 2, 2)


def test_instance_validation():
    with pytest.raises(InstanceError):
        rees.build_instance(0, 2, 2, 2, 2, 2)
    with pytest.raises(InstanceError):
        rees.build_instance(2, 2, 3, 2, 2, 2)  # s1 > t1


def test_instance_swap_enforces_s1_ge_s2():
    inst = rees.build_instance(3, 3, 2, 2, 3, 3)
    assert inst.s1 >= inst.s2
    assert inst.swapped
    assert any("swapped" in f for f in inst.flags)


def test_g_family_count_and_shape():
    inst = inst1()
    ring = rees.instance_ring(inst)
    gs = rees.family_generators(inst, "g", ring)
    assert len(gs) == 6  # C(4, 2) position pairs
    g = gs[0].value
    expected = parse_polynomial(
        ring, "z[1,1]*x[1,2] - z[1,1]*y[1,2] - z[1,2]*x[1,1] + z[1,2]*y[1,1]")
    assert g == expected


def test_f_thmk_value():
    inst = inst1()
    ring = rees.instance_ring(inst)
    (f,) = rees.family_generators(inst, "f", ring)
    expected = parse_polynomial(
        ring,
        "z[1,1]*x[2,2] - z[1,2]*x[2,1] - z[2,1]*y[1,2] + z[2,2]*y[1,1]")
    assert f.value == expected


def test_g_reduces_to_zero_against_oracle():
    inst = inst1()
    ring = rees.instance_ring(inst)
    oracle = rees.rees_oracle(inst, ring)
    for e in rees.family_generators(inst, "g", ring):
        assert reduce_poly(e.value, oracle).is_zero()


def test_oracle_equals_thmk_groebner_closure():
    inst = inst1()
    ring = rees.instance_ring(inst)
    oracle = rees.rees_oracle(inst, ring)
    closure = buchberger(rees.thmk_generators(inst, ring))
    lead_o = sorted(p.lm for p in oracle)
    lead_c = sorted(p.lm for p in closure)
    assert lead_o == lead_c


def test_constraint_table_is_shared_by_validator():
    inst = inst1()
    ring = rees.instance_ring(inst)
    for tag in rees.FAMILY_TAGS:
        for e in rees.family_generators(inst, tag, ring):
            assert rees.validate_family_element(inst, e)


def test_invalid_index_rejected():
    inst = inst1()
    bad = rees.FamilyElement("U", (1, 99, (2, 1)),
                             rees.instance_ring(inst).one())
    assert not rees.validate_family_element(inst, bad)


def test_candidate_basis_squarefree_leads():
    inst = inst1()
    ring = rees.instance_ring(inst)
    for e in rees.candidate_basis(inst, ring):
        assert all(x <= 1 for x in e.value.lm), e.family_tag


def test_specialization_sanity_g_vanishes_under_y_to_x():
    inst = inst1()
    ring = rees.instance_ring(inst)

    def substitute_y_with_x(p):
        out = ring.zero()
        for mono, coeff in p.terms:
            repl = ring.unit_monomial
            for i, e in enumerate(mono):
                if not e:
                    continue
                v = ring.variables[i]
                w = Variable("x", v.row, v.col) if v.family == "y" else v
                repl = ring.mono_mul(repl, ring.monomial((w, e)))
            out = out + ring.term(coeff, repl)
        return out

    for e in rees.family_generators(inst, "g", ring):
        assert substitute_y_with_x(e.value).is_zero()


def test_u_boundary_p1_equals_s1_is_single_determinant():
    # at p1 = s1 the replacement sums are empty: one stacked determinant
    inst = rees.build_instance(2, 3, 2, 3, 2, 2)
    ring = rees.instance_ring(inst)
    val = rees.u_element(inst, ring, 2, 1, (3, 2))
    assert len(val.terms) == 6  # a single 3x3 determinant


def test_recursive_families_empty_at_s2_2():
    inst = inst1()
    for tag in ("W_pv", "V_kw", "I_lkq", "I_kw"):
        assert rees.family_generators(inst, tag) == []


def test_initial_families_matches_enumerated_counts():
    inst = inst1()
    fam = rees.initial_families(inst)
    assert len(fam) == 11
    assert all(d <= 4 for d in fam.degrees())


def test_initial_family_example_hX():
    inst = rees.build_instance(2, 3, 2, 3, 2, 2)
    ring = rees.instance_ring(inst)
    monos = rees.initial_family_monomials(inst, "hX", ring)
    strs = sorted(ring.mono_str(m) for m in monos)
    assert strs == ["x[1,2]*x[2,1]", "x[1,3]*x[2,1]", "x[1,3]*x[2,2]"]
