"""Squarefree monomial ideal tests: duality, Betti numbers, CM checks."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from reescm import squarefree as sq
from reescm.squarefree import MonomialIdeal


def ideal(nvars, *supports):
    names = tuple(f"v{i}" for i in range(nvars))
    return MonomialIdeal.from_supports(
        names, [{names[i] for i in sup} for sup in supports])


def named(*idx_sets):
    return {frozenset(f"v{i}" for i in s) for s in idx_sets}


def sup_set(i):
    return set(i.supports())


def mask(*idx):
    m = 0
    for i in idx:
        m |= 1 << i
    return m


def random_ideal(rng, nvars, ngens):
    sup = set()
    for _ in range(ngens):
        size = rng.randint(1, nvars)
        sup.add(frozenset(rng.sample(range(nvars), size)))
    return ideal(nvars, *sup)


def test_minimalization():
    i = ideal(3, {0}, {0, 1}, {1, 2})
    assert sup_set(i) == named({0}, {1, 2})


def test_dual_of_variable_power_ideal():
    # dual of (v0, v1, v2) is (v0*v1*v2)
    i = ideal(3, {0}, {1}, {2})
    d = sq.alexander_dual(i)
    assert sup_set(d) == named({0, 1, 2})
    assert sup_set(sq.alexander_dual(d)) == sup_set(i)


def test_dual_square_example():
    # edge ideal of a 4-cycle dualizes to the two diagonals
    i = ideal(4, {0, 1}, {1, 2}, {2, 3}, {3, 0})
    d = sq.alexander_dual(i)
    assert sup_set(d) == named({0, 2}, {1, 3})


def test_dual_matches_brute_force():
    rng = random.Random(7)
    for _ in range(25):
        i = random_ideal(rng, rng.randint(2, 7), rng.randint(1, 6))
        assert sup_set(sq.alexander_dual(i)) == sup_set(sq.dual_brute_force(i))


def test_dual_involution_randomized():
    rng = random.Random(11)
    for _ in range(40):
        i = random_ideal(rng, rng.randint(2, 9), rng.randint(1, 7))
        dd = sq.alexander_dual(sq.alexander_dual(i))
        assert sup_set(dd) == sup_set(i)


def test_staircase_ideal_and_closed_form_dual():
    for m in (2, 3):
        for n in range(m, 6):
            for l in range(1, m):
                i = sq.staircase_ideal(m, n, l)
                closed = sq.staircase_dual_closed_form(m, n, l)
                brute = sq.alexander_dual(i)
                assert sup_set(closed) == sup_set(brute)


def test_staircase_dual_generator_degree():
    i = sq.staircase_dual_closed_form(3, 4, 2)
    assert set(i.degrees()) == {4 - (3 - 2)}


def test_staircase_rejects_bad_parameters():
    with pytest.raises(sq.SquarefreeError):
        sq.staircase_ideal(3, 2, 1)
    with pytest.raises(sq.SquarefreeError):
        sq.staircase_ideal(3, 4, 3)


def test_homology_of_triangle_boundary():
    # Stanley-Reisner complex of (v0*v1*v2) on 3 vertices is the hollow
    # triangle: one-dimensional reduced homology of rank 1
    i = ideal(3, {0, 1, 2})
    faces = [frozenset(sq._bits(f)) for f in sq.restricted_faces(i, mask(0, 1, 2))]
    dims = sq.reduced_homology_dims(faces)
    assert dims.get(1, 0) == 1 and dims.get(0, 0) == 0


def test_betti_koszul_two_variables():
    i = ideal(2, {0}, {1})
    b = sq.betti_numbers(i)
    assert b.beta(0, 1) == 2 and b.beta(1, 2) == 1
    assert b.regularity() == 1 and b.projdim() == 1


def test_betti_koszul_three_variables():
    i = ideal(3, {0}, {1}, {2})
    b = sq.betti_numbers(i)
    assert (b.beta(0, 1), b.beta(1, 2), b.beta(2, 3)) == (3, 3, 1)


def test_betti_restriction_vs_dual_methods_agree():
    rng = random.Random(3)
    for _ in range(10):
        i = random_ideal(rng, rng.randint(3, 6), rng.randint(2, 5))
        br = sq.betti_numbers(i, method="restriction")
        bd = sq.betti_numbers(i, method="dual")
        assert br.as_triples() == bd.as_triples()


def test_betti_char_independence_squarefree_small():
    rng = random.Random(5)
    for _ in range(8):
        i = random_ideal(rng, rng.randint(3, 6), rng.randint(2, 5))
        b0 = sq.betti_numbers(i)
        bp = sq.betti_numbers(i, char=101)
        assert b0.as_triples() == bp.as_triples()


def test_terai_formula_randomized():
    # reg(dual I) == projdim(I) + 1 for squarefree ideals
    rng = random.Random(13)
    for _ in range(12):
        i = random_ideal(rng, rng.randint(3, 6), rng.randint(2, 5))
        d = sq.alexander_dual(i)
        assert sq.regularity(d) == sq.betti_numbers(i).projdim() + 1


def test_eagon_reiner_iff_reisner_randomized():
    rng = random.Random(17)
    for _ in range(12):
        i = random_ideal(rng, rng.randint(3, 6), rng.randint(2, 5))
        assert sq.eagon_reiner_cm(i) == sq.reisner_cm(i)


def test_linear_resolution_detection():
    i = ideal(3, {0, 1, 2})
    assert sq.has_linear_resolution(i)
    # two disjoint edges: regularity 3 in degree 2, so not linear
    j = ideal(4, {0, 1}, {2, 3})
    assert not sq.has_linear_resolution(j)


def test_intersection_of_ideals():
    a = ideal(3, {0})
    b = ideal(3, {1}, {2})
    c = sq.intersect_ideals(a, b)
    assert sup_set(c) == named({0, 1}, {0, 2})


@settings(max_examples=40, deadline=None)
@given(st.lists(st.frozensets(st.integers(0, 5), min_size=1, max_size=4),
                min_size=1, max_size=5))
def test_dual_involution_hypothesis(supports):
    i = ideal(6, *supports)
    dd = sq.alexander_dual(sq.alexander_dual(i))
    assert sup_set(dd) == sup_set(i)


def test_contains_monomial():
    i = ideal(3, {0, 1})
    assert i.contains_monomial(mask(0, 1, 2))
    assert not i.contains_monomial(mask(0, 2))
