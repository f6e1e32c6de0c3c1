"""Tests for the binomial generator sets of the vanishing ideal."""

import random

import pytest

from cyclecodes import (
    Binomial,
    BudgetExceeded,
    CycleFamilySpec,
    Polynomial,
    SupportsNotDisjoint,
    buchberger_is_groebner,
    build_generators,
    enumerate_toric_set,
    field_new,
    gamma_of,
    iter_disjoint_binomials,
    multivariate_divide,
    parse_polynomial,
    parse_spec_string,
    reduce_mod_torus,
    square_point_property,
    vanishing_membership,
    verify_vanishing,
)


# -- construction ---------------------------------------------------------------


def test_generator_count_flagship():
    # 5 torus relations + C(5,2) = 10 cycle binomials.
    gens = build_generators(CycleFamilySpec.single(5), field_new(5))
    assert len(gens.torus_part) == 5
    assert len(gens.cycle_parts) == 1
    assert len(gens.cycle_parts[0]) == 10
    assert len(gens) == 15
    assert len(gens.all_generators()) == 15


def test_generator_count_torus_field():
    # q - 1 odd: no cycle part at all.
    gens = build_generators(CycleFamilySpec.single(3), field_new(4))
    assert len(gens.torus_part) == 3
    assert gens.cycle_parts == ()
    assert len(gens) == 3


def test_generator_count_two_copies():
    gens = build_generators(CycleFamilySpec.single(3, 2), field_new(5))
    # 6 torus + C(3,1) = 3 per copy.
    assert len(gens.torus_part) == 6
    assert [len(p) for p in gens.cycle_parts] == [3, 3]
    assert len(gens) == 12


def test_torus_generator_shape():
    gens = build_generators(CycleFamilySpec.single(3), field_new(5))
    f5 = field_new(5)
    assert gens.torus_part[0] == Polynomial.binomial(f5, (4, 0, 0), (0, 0, 0))
    assert gens.torus_part[2] == Polynomial.binomial(f5, (0, 0, 4), (0, 0, 0))


def test_cycle_generator_shape():
    gens = build_generators(CycleFamilySpec.single(3), field_new(5))
    texts = sorted(g.to_text() for g in gens.cycle_parts[0])
    assert texts == [
        "t1^2*t2^2 - t3^2",
        "t1^2*t3^2 - t2^2",
        "t2^2*t3^2 - t1^2",
    ]


def test_cycle_generators_supports_disjoint_and_leading_longer():
    for q, k in ((5, 5), (7, 3), (13, 3)):
        field = field_new(q)
        gens = build_generators(CycleFamilySpec.single(k), field)
        gamma = gamma_of(k)
        half = (q - 1) // 2
        for g in gens.cycle_parts[0]:
            b = Binomial.from_polynomial(g)
            b.require_disjoint()
            # Leading monomial is the longer (gamma+1)-variable product.
            assert sum(g.leading_monomial()) == (gamma + 1) * half


def test_second_block_generators_use_second_block_vars():
    gens = build_generators(CycleFamilySpec.single(3, 2), field_new(5))
    for g in gens.cycle_parts[1]:
        for mono, _ in g.terms:
            assert all(e == 0 for e in mono[:3])
            assert any(e for e in mono[3:])


# -- vanishing -------------------------------------------------------------------


def test_generators_vanish_on_point_set():
    for q, spec_text in ((5, "3"), (5, "5"), (3, "3"), (7, "3"), (5, "3x2")):
        field = field_new(q)
        spec = parse_spec_string(spec_text)
        gens = build_generators(spec, field)
        X = enumerate_toric_set(spec, field)
        assert verify_vanishing(gens, X)


def test_perturbed_generator_does_not_vanish():
    field = field_new(5)
    spec = CycleFamilySpec.single(5)
    gens = build_generators(spec, field)
    X = enumerate_toric_set(spec, field)
    g = gens.cycle_parts[0][0]
    (mp, cp), (mm, cm) = g.terms
    bumped = list(mp)
    bumped[next(i for i, e in enumerate(mp) if e)] += 1
    perturbed = Polynomial(field, g.nvars, [(tuple(bumped), cp), (mm, cm)])
    assert not vanishing_membership(perturbed, X)


def test_torus_part_vanishes_on_any_unit_tuples():
    field = field_new(7)
    spec = CycleFamilySpec.single(3)
    gens = build_generators(spec, field)
    X = enumerate_toric_set(spec, field)
    for g in gens.torus_part:
        assert vanishing_membership(g, X)


def test_vanishing_membership_basics():
    field = field_new(5)
    spec = CycleFamilySpec.single(3)
    X = enumerate_toric_set(spec, field)
    assert vanishing_membership(Polynomial.zero(field, 3), X)
    assert not vanishing_membership(Polynomial.constant(field, 3, 1), X)
    f = parse_polynomial("t1^2*t2^2*t3^2 - 1", field, 3)
    assert vanishing_membership(f, X)


def test_groebner_property_small():
    field = field_new(5)
    gens = build_generators(CycleFamilySpec.single(3), field)
    assert buchberger_is_groebner(gens.all_generators())


# -- torus reduction -------------------------------------------------------------


def test_reduce_mod_torus_examples():
    f5 = field_new(5)
    changed, r = reduce_mod_torus(Binomial((4, 0), (0, 1)), f5)
    assert changed and r == Binomial((0, 0), (0, 1))
    changed, r = reduce_mod_torus(Binomial((5, 0), (0, 1)), f5)
    assert changed and r == Binomial((1, 0), (0, 1))
    changed, r = reduce_mod_torus(Binomial((3, 0), (0, 2)), f5)
    assert not changed and r == Binomial((3, 0), (0, 2))


def test_reduce_mod_torus_requires_disjoint():
    with pytest.raises(SupportsNotDisjoint):
        reduce_mod_torus(Binomial((2, 1), (0, 1)), field_new(5))


def test_reduce_mod_torus_preserves_values_on_units():
    rng = random.Random(47)
    field = field_new(5)
    spec = CycleFamilySpec.single(3)
    X = enumerate_toric_set(spec, field)
    for _ in range(30):
        exps = []
        for _v in range(3):
            which = rng.randrange(3)
            e = rng.randrange(0, 2 * (field.q - 1))
            exps.append((e, 0) if which == 0 else (0, e) if which == 1 else (0, 0))
        b = Binomial(tuple(a for a, _ in exps), tuple(m for _, m in exps))
        _, r = reduce_mod_torus(b, field)
        fb = b.to_polynomial(field)
        fr = r.to_polynomial(field)
        for p in X:
            assert fb.evaluate(p) == fr.evaluate(p)


# -- the all-squares necessary condition -------------------------------------------


def test_square_point_property_of_generators():
    field = field_new(5)
    spec = CycleFamilySpec.single(3)
    for g in build_generators(spec, field):
        assert square_point_property(g, spec, field)


def test_square_point_property_detects_failure():
    field = field_new(5)
    spec = CycleFamilySpec.single(3)
    f = parse_polynomial("t1 - 1", field, 3)
    assert not square_point_property(f, spec, field)


def test_square_point_property_zero():
    field = field_new(5)
    spec = CycleFamilySpec.single(3)
    assert square_point_property(Polynomial.zero(field, 3), spec, field)


def test_square_point_property_routes_agree():
    # Route 1 walks all unit tuples; route 2 walks square tuples only.
    # (q-1)^3 = 64 > 10 forces route 2; both must agree.
    field = field_new(5)
    spec = CycleFamilySpec.single(3)
    polys = [
        parse_polynomial("t1^2*t2^2 - t3^2", field, 3),
        parse_polynomial("t1 - 1", field, 3),
        parse_polynomial("t1*t2*t3 - 1", field, 3),
    ]
    for f in polys:
        assert (square_point_property(f, spec, field, budget=10)
                == square_point_property(f, spec, field, budget=1000))


def test_square_point_property_budget_exhausted():
    field = field_new(5)
    spec = CycleFamilySpec.single(3)
    with pytest.raises(BudgetExceeded):
        square_point_property(Polynomial.zero(field, 3), spec, field, budget=4)


# -- the space of candidate binomials ----------------------------------------------


def test_iter_disjoint_binomials_small():
    got = {(b.plus, b.minus) for b in iter_disjoint_binomials(2, 3)}
    # Unordered pairs {a,b}, a != b, per-variable exponents in {0,1}
    # on at most one side.
    assert len(got) == 4
    as_polys = {
        Binomial(p, m).to_polynomial(field_new(3)).to_text() for p, m in got
    }
    assert as_polys == {"t1 - 1", "t2 - 1", "t1 - t2", "t1*t2 - 1"}


def test_iter_disjoint_binomials_count():
    # Per variable: 1 + 2*(q-2) exponent placements; drop a == b == 0,
    # halve for unordered pairs.
    n, q = 3, 5
    per_var = 1 + 2 * (q - 2)
    expected = (per_var ** n - 1) // 2
    assert sum(1 for _ in iter_disjoint_binomials(n, q)) == expected


def test_iter_disjoint_binomials_properties():
    for b in iter_disjoint_binomials(3, 4):
        assert b.supports_disjoint()
        assert all(e <= 2 for e in b.plus + b.minus)
        assert b.plus != b.minus


def test_ideal_completeness_tiny():
    # Every support-disjoint binomial vanishing on X* reduces to zero
    # against the generators, and conversely.
    q, k = 3, 3
    field = field_new(q)
    spec = CycleFamilySpec.single(k)
    X = enumerate_toric_set(spec, field)
    gens = build_generators(spec, field).all_generators()
    seen_vanishing = 0
    for b in iter_disjoint_binomials(k, q):
        f = b.to_polynomial(field)
        vanishes = vanishing_membership(f, X)
        _, r = multivariate_divide(f, gens)
        assert vanishes == r.is_zero
        seen_vanishing += vanishes
    assert seen_vanishing > 0
