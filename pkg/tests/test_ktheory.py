from fractions import Fraction
from itertools import combinations_with_replacement
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from chowmot import randgen
from chowmot.chow import ChowClass, Projection, Variety, parse_class
from chowmot.ktheory import (
    KClass,
    bernoulli_numbers,
    box_basis,
    ch,
    ch_inverse,
    dual,
    euler_characteristic,
    euler_pairing,
    grr_pushforward,
    parse_kclass,
    tensor,
    todd,
)

PT, P1, P2 = Variety(()), Variety((1,)), Variety((2,))


def chi_oracle(n, d):
    """chi(P^n, O(d)): count degree-d monomials in n + 1 variables, Serre
    duality for d < 0."""
    if d >= 0:
        return sum(1 for _ in combinations_with_replacement(range(n + 1), d))
    return (-1) ** n * chi_oracle(n, -d - n - 1) if -d - n - 1 >= 0 else 0


def bernoulli_by_series(n):
    """Coefficients of x / (e^x - 1) by power-series division, times k!."""
    e = [Fraction(1, factorial(k + 1)) for k in range(n + 1)]  # (e^x - 1) / x
    inv = [Fraction(1)]
    for k in range(1, n + 1):
        inv.append(-sum(e[j] * inv[k - j] for j in range(1, k + 1)))
    return [c * factorial(k) for k, c in enumerate(inv)]


def test_bernoulli_against_series():
    assert list(bernoulli_numbers(14)) == bernoulli_by_series(14)


def test_ch_examples():
    assert ch(KClass.trivial(P2)) == ChowClass.one(P2)
    assert ch(parse_kclass("O(2)", P2)) == parse_class("1 + 2*h1 + 2*h1^2", P2)
    assert ch(dual(parse_kclass("O(1)", P2))) == parse_class("1 - h1 + 1/2*h1^2", P2)


def test_ch_inverse_examples():
    assert ch_inverse(ChowClass.one(P2)) == KClass.trivial(P2)
    assert ch_inverse(parse_class("h1", P1)) == parse_kclass("O(1) - O", P1)


def test_todd_examples():
    assert todd(PT) == ChowClass.one(PT)
    assert todd(P1) == parse_class("1 + h1", P1)
    assert todd(P2) == parse_class("1 + 3/2*h1 + h1^2", P2)


def test_tensor_and_dual_examples():
    e = parse_kclass("O(1)", P1)
    assert tensor(e, e) == parse_kclass("2*O(1) - O", P1)
    assert tensor(e, KClass.trivial(P1)) == e
    assert dual(KClass.trivial(P2)) == KClass.trivial(P2)
    assert str(parse_kclass("O(-1)", P1)) == "2*O - O(1)"


def test_line_bundle_normalization_is_multiplicative():
    x = Variety((1, 2))
    for a in range(-3, 4):
        for b in range(-3, 4):
            assert KClass.line_bundle(x, (a, b)) == tensor(
                KClass.line_bundle(x, (a, 0)), KClass.line_bundle(x, (0, b)))


@pytest.mark.parametrize("n", range(5))
def test_hrr_on_projective_space(n):
    x = Variety((n,))
    o = KClass.trivial(x)
    for d in range(-6, 7):
        assert euler_pairing(o, KClass.line_bundle(x, (d,))) == chi_oracle(n, d)


def test_euler_small_examples():
    assert euler_pairing(parse_kclass("O", P2), parse_kclass("O(3)", P2)) == 10
    assert euler_pairing(parse_kclass("O(1)", P1), parse_kclass("O", P1)) == 0
    for x in (PT, P1, Variety((1, 1)), Variety((2, 1))):
        assert euler_pairing(KClass.trivial(x), KClass.trivial(x)) == 1


def test_euler_pairing_is_kunneth_multiplicative():
    x = Variety((1, 2))
    for a in range(-2, 3):
        for b in range(-3, 4):
            got = euler_characteristic(KClass.line_bundle(x, (a, b)))
            assert got == chi_oracle(1, a) * chi_oracle(2, b)


def test_grr_pushforward_examples():
    p = Projection(P1, ())
    for d in range(6):
        assert grr_pushforward(p, KClass.line_bundle(P1, (d,))) == KClass.trivial(PT).scale(d + 1)
    ident = Projection(Variety((1, 2)), (0, 1))
    e = parse_kclass("O(1,2) - 3*O", Variety((1, 2)))
    assert grr_pushforward(ident, e) == e


def test_grr_pushforward_on_line_bundles_matches_kunneth():
    x = Variety((1, 2))
    p = Projection(x, (0,))
    for a in range(2):
        for b in range(-4, 4):
            expected = KClass.line_bundle(P1, (a,)).scale(chi_oracle(2, b))
            assert grr_pushforward(p, KClass.line_bundle(x, (a, b))) == expected


def test_box_basis_round_trip():
    x = Variety((1, 1, 2))
    for e in box_basis(x):
        assert ch_inverse(ch(e)) == e


VARS = st.sampled_from([P1, P2, Variety((1, 1)), Variety((2, 1)), Variety((1, 1, 1))])


@settings(max_examples=40, deadline=None)
@given(VARS, st.integers(0, 10 ** 6))
def test_ch_is_a_ring_isomorphism(x, seed):
    rng = randgen.make_rng("k-test", seed)
    e, f = randgen.kclass(rng, x), randgen.kclass(rng, x)
    assert ch(tensor(e, f)) == ch(e) * ch(f)
    assert ch(e + f) == ch(e) + ch(f)
    assert ch_inverse(ch(e)) == e
    c = randgen.chow_class(rng, x)
    assert ch(ch_inverse(c)) == c


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_grr_functorial(seed):
    rng = randgen.make_rng("grr-test", seed)
    blocks = (P1, P1, P2)
    e = randgen.kclass(rng, Variety((1, 1, 2)))
    two = grr_pushforward(Projection.of_blocks((P1, P1), (0,)),
                          grr_pushforward(Projection.of_blocks(blocks, (0, 1)), e))
    assert two == grr_pushforward(Projection.of_blocks(blocks, (0,)), e)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_euler_pairing_integral_on_integral_classes(seed):
    rng = randgen.make_rng("chi-int", seed)
    x = Variety((1, 2))
    e = randgen.kclass(rng, x, integral=True)
    f = randgen.kclass(rng, x, integral=True)
    assert euler_pairing(e, f).denominator == 1
    # chi(E, F) = chi(E^vee (x) F)
    assert euler_pairing(e, f) == euler_characteristic(tensor(dual(e), f))
