from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from chowmot import randgen
from chowmot.chow import Variety
from chowmot.motives import Motive, MotiveSum, SumMorphism, UnsupportedObjectError, decompose_projective
from chowmot.orbit import (
    LAURENT,
    TATE,
    GradedMorphism,
    OrbitError,
    format_graded,
    graded,
    is_orbit_iso_pair,
    orbit_add,
    orbit_compose,
    orbit_hom_dimension,
    orbit_identity,
    orbit_iso_tate,
    orbit_iso_witness,
    project,
    tate_sum_class,
)
from chowmot.sweeps import TATE_OBJECTS, random_laurent, random_sum_morphism, random_tate_graded

STAR = LAURENT.OBJECT


def as_dict(f):
    return {i: c for i, c in f.components}


def test_laurent_square_is_binomial():
    f = graded(LAURENT, STAR, STAR, {0: 1, 1: 1})
    assert as_dict(orbit_compose(LAURENT, f, f)) == {0: 1, 1: 2, 2: 1}


def test_laurent_matches_polynomial_product():
    f = graded(LAURENT, STAR, STAR, {-1: 2, 0: Fraction(1, 3)})
    g = graded(LAURENT, STAR, STAR, {1: -1, 2: 5})
    # (2/t + 1/3)(-t + 5 t^2) = -2 + 10 t - t/3 + 5/3 t^2
    assert as_dict(orbit_compose(LAURENT, f, g)) == {0: -2, 1: Fraction(29, 3), 2: Fraction(5, 3)}


def test_project_and_unit():
    assert project(LAURENT, Fraction(0)).support == ()
    f = graded(LAURENT, STAR, STAR, {-2: 3, 4: 1})
    ident = orbit_identity(LAURENT, STAR)
    assert orbit_compose(LAURENT, ident, f) == f == orbit_compose(LAURENT, f, ident)


def test_graded_rejects_wrong_components():
    one, lef = MotiveSum.units([0]), MotiveSum.units([-1])
    with pytest.raises(OrbitError):
        graded(TATE, one, lef, {0: SumMorphism.identity(one)})
    with pytest.raises(OrbitError):
        orbit_compose(TATE, orbit_identity(TATE, one), orbit_identity(TATE, lef))


def test_lefschetz_round_trip_lands_in_degree_zero():
    one, lef = MotiveSum.units([0]), MotiveSum.units([-1])
    f = graded(TATE, one, lef, {1: SumMorphism.identity(one)})
    g = graded(TATE, lef, one, {-1: SumMorphism.identity(lef)})
    assert f.support == (1,) and g.support == (-1,)
    assert orbit_compose(TATE, f, g) == orbit_identity(TATE, one)
    assert orbit_compose(TATE, g, f) == orbit_identity(TATE, lef)
    assert is_orbit_iso_pair(f, g)


@pytest.mark.parametrize("a, b, expected", [
    ("1 + L", "1 + 1", True),
    ("1 + 1", "1", False),
    ("M(P2)", "3*1", True),
    ("M(P1xP1)", "M(P3)", True),
    ("M(P1xP1)", "M(P2)(7)", False),
    ("1(5)", "L^3", True),
])
def test_orbit_iso_examples(a, b, expected):
    m, n = MotiveSum.parse(a), MotiveSum.parse(b)
    assert orbit_iso_tate(m, n) is expected
    witness = orbit_iso_witness(m, n)
    assert (witness is not None) is expected


def test_projective_decomposition_against_units():
    parts = MotiveSum(tuple(m for m, _ in decompose_projective(2)))
    assert orbit_iso_tate(parts, MotiveSum.units([0, 0, 0]))
    f, g = orbit_iso_witness(parts, MotiveSum.units([0, 0, 0]))
    # (P2, pi_i) is 1(-i), which sits in degree -i over 1
    assert set(f.support) == {-2, -1, 0} and set(g.support) == {0, 1, 2}


def test_tate_sum_class_examples():
    for n in range(6):
        assert tate_sum_class(Motive.of(Variety((n,)))) == n + 1
    assert tate_sum_class(Motive.unit(5)) == 1
    assert tate_sum_class(Motive.of(Variety((1, 1)))) == 4
    with pytest.raises(UnsupportedObjectError):
        tate_sum_class("M(P1)")
    with pytest.raises(UnsupportedObjectError):
        orbit_iso_tate(Motive.unit(0), 3)


def test_orbit_hom_dimension_is_product_of_ranks():
    for x in (Variety((1,)), Variety((2,)), Variety((1, 1))):
        for y in (Variety(()), Variety((1,)), Variety((2,))):
            assert orbit_hom_dimension(Motive.of(x), Motive.of(y)) == x.chow_rank * y.chow_rank


def test_text_form():
    f = graded(LAURENT, STAR, STAR, {-1: 2, 0: Fraction(1, 2)})
    assert format_graded(f) == "{ -1: 2, 0: 1/2 }"
    assert str(GradedMorphism(STAR, STAR)) == "{}"


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_laurent_laws(seed):
    rng = randgen.make_rng("laurent-test", seed)
    f, g, h = (random_laurent(rng) for _ in range(3))
    assert orbit_compose(LAURENT, orbit_compose(LAURENT, f, g), h) == \
        orbit_compose(LAURENT, f, orbit_compose(LAURENT, g, h))
    assert orbit_compose(LAURENT, f, orbit_add(LAURENT, g, h)) == \
        orbit_add(LAURENT, orbit_compose(LAURENT, f, g), orbit_compose(LAURENT, f, h))


@settings(max_examples=12, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_tate_laws(seed):
    rng = randgen.make_rng("tate-test", seed)
    a, b, c, d = (rng.choice(TATE_OBJECTS) for _ in range(4))
    f, g, h = random_tate_graded(rng, a, b), random_tate_graded(rng, b, c), random_tate_graded(rng, c, d)
    assert orbit_compose(TATE, orbit_compose(TATE, f, g), h) == \
        orbit_compose(TATE, f, orbit_compose(TATE, g, h))
    assert orbit_compose(TATE, orbit_identity(TATE, a), f) == f
    assert orbit_compose(TATE, f, orbit_identity(TATE, b)) == f
    u, v = random_sum_morphism(rng, a, b), random_sum_morphism(rng, b, c)
    assert project(TATE, u.then(v)) == orbit_compose(TATE, project(TATE, u), project(TATE, v))
