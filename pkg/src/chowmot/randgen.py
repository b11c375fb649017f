"""Seeded random objects for the verification sweeps and tests.

Coefficients are small rationals ``p/q`` with ``p`` in ``[-9, 9] \\ {0}`` and
``q`` in ``[1, 9]``; supports are sparse.
"""
from __future__ import annotations

import random
from fractions import Fraction

from .chow import ChowClass, Variety
from .correspondence import ChowCorrespondence
from .graded import SparsePoly, monomial_basis
from .ktheory import KClass


def make_rng(*parts):
    """Deterministic generator keyed by a label and a seed."""
    return random.Random(":".join(str(p) for p in parts))


def rational(rng):
    num = rng.choice([n for n in range(-9, 10) if n])
    return Fraction(num, rng.randint(1, 9))


def poly(rng, caps, density=0.5, constant=None, max_terms=None):
    caps = tuple(caps)
    monos = monomial_basis(caps)
    terms = {e: rational(rng) for e in monos if rng.random() < density}
    if max_terms is not None and len(terms) > max_terms:
        keep = rng.sample(sorted(terms), max_terms)
        terms = {e: terms[e] for e in keep}
    if constant is not None:
        terms[(0,) * len(caps)] = constant
    return SparsePoly(caps, terms)


def nilpotent(rng, caps, density=0.5):
    return poly(rng, caps, density, constant=0)


def unipotent(rng, caps, density=0.5):
    return poly(rng, caps, density, constant=1)


def chow_class(rng, x, density=0.5):
    return ChowClass(x, poly(rng, x.factors, density))


def homogeneous_class(rng, x, d, density=0.6):
    monos = monomial_basis(x.factors, d)
    terms = {e: rational(rng) for e in monos if rng.random() < density}
    return ChowClass(x, SparsePoly(x.factors, terms))


def kclass(rng, x, density=0.5, integral=False):
    combo = {}
    for d in monomial_basis(x.factors):
        if rng.random() < density:
            combo[d] = rng.choice([n for n in range(-9, 10) if n]) if integral else rational(rng)
    return KClass(x, combo)


def correspondence(rng, x, y, density=0.5):
    return ChowCorrespondence(x, y, chow_class(rng, x * y, density))


def small_variety(rng, max_dim=3, max_factors=3):
    factors = []
    budget = rng.randint(0, max_dim)
    while budget and len(factors) < max_factors:
        n = rng.randint(1, budget)
        factors.append(n)
        budget -= n
    return Variety(tuple(factors))
