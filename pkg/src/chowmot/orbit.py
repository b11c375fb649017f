"""Orbit categories ``A/T`` of an additive category by an auto-equivalence.

``Hom_{A/T}(X, Y) = sum_i Hom_A(X, T^i Y)``, and for ``f = (f^i)``,
``g = (g^j)`` the composite has components::

    (g o f)^k = sum_{i+j=k} T^i(g^j) o f^i

Any :class:`AdditiveCategory` can be plugged in.  Two instances ship here:
:class:`LaurentCategory` (one object, ``Hom = Q``, ``T = id``) and
:class:`TateTwistCategory` (direct sums of Chow motives, ``T = (1)``).
"""
from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction

from .motives import (
    Motive,
    MotiveMorphism,
    MotiveSum,
    SumMorphism,
    UnsupportedObjectError,
    hom_dimension,
    hom_degree,
    tate_decompose,
)


class OrbitError(ValueError):
    pass


class AdditiveCategory(ABC):
    """What the orbit construction needs from ``A`` and ``T``.

    ``compose(f, g)`` is "f, then g".  ``shift_morphism(f, i)`` is ``T^i(f)``
    for any integer ``i`` (negative ``i`` uses the designated inverse).
    """

    @abstractmethod
    def source(self, f): ...

    @abstractmethod
    def target(self, f): ...

    @abstractmethod
    def compose(self, f, g): ...

    @abstractmethod
    def identity(self, obj): ...

    @abstractmethod
    def zero(self, source, target): ...

    @abstractmethod
    def add(self, f, g): ...

    @abstractmethod
    def is_zero(self, f): ...

    @abstractmethod
    def shift_object(self, obj, i): ...

    @abstractmethod
    def shift_morphism(self, f, i): ...

    def check_object(self, obj):
        """Hook for instances that only accept some objects."""


@dataclass(frozen=True)
class GradedMorphism:
    """``components`` is a sorted tuple of ``(i, f^i)`` with ``f^i: X -> T^i Y``
    nonzero."""

    source: object
    target: object
    components: tuple = ()

    def component(self, i, default=None):
        for j, f in self.components:
            if j == i:
                return f
        return default

    @property
    def support(self):
        return tuple(i for i, _ in self.components)

    def __str__(self):
        inner = ", ".join(f"{i}: {f}" for i, f in self.components)
        return "{ " + inner + " }" if inner else "{}"


def graded(cat, source, target, components):
    """Build a :class:`GradedMorphism`, checking endpoints and dropping zeros."""
    cat.check_object(source)
    cat.check_object(target)
    out = []
    for i, f in sorted(components.items()):
        if cat.is_zero(f):
            continue
        if cat.source(f) != source or cat.target(f) != cat.shift_object(target, i):
            raise OrbitError(f"component {i} is not a morphism X -> T^{i} Y")
        out.append((i, f))
    return GradedMorphism(source, target, tuple(out))


def project(cat, f):
    """``A -> A/T``: ``f`` placed in degree 0."""
    return graded(cat, cat.source(f), cat.target(f), {0: f})


def orbit_identity(cat, obj):
    return project(cat, cat.identity(obj))


def orbit_zero(cat, source, target):
    return GradedMorphism(source, target, ())


def orbit_compose(cat, f, g):
    """``f`` then ``g`` in ``A/T``."""
    if f.target != g.source:
        raise OrbitError("endpoint mismatch in orbit composition")
    acc = {}
    for i, fi in f.components:
        for j, gj in g.components:
            term = cat.compose(fi, cat.shift_morphism(gj, i))
            k = i + j
            acc[k] = cat.add(acc[k], term) if k in acc else term
    return graded(cat, f.source, g.target, acc)


def orbit_add(cat, f, g):
    if f.source != g.source or f.target != g.target:
        raise OrbitError("endpoint mismatch in orbit addition")
    acc = dict(f.components)
    for i, gi in g.components:
        acc[i] = cat.add(acc[i], gi) if i in acc else gi
    return graded(cat, f.source, f.target, acc)


def orbit_scale(cat, f, c):
    return graded(cat, f.source, f.target, {i: cat.scale(fi, c) for i, fi in f.components})


# instances


class LaurentCategory(AdditiveCategory):
    """One object ``*`` with ``End(*) = Q`` and ``T`` the identity.

    Orbit composition here is multiplication of Laurent polynomials.
    """

    OBJECT = "*"

    def source(self, f):
        return self.OBJECT

    def target(self, f):
        return self.OBJECT

    def compose(self, f, g):
        return Fraction(f) * Fraction(g)

    def identity(self, obj):
        return Fraction(1)

    def zero(self, source, target):
        return Fraction(0)

    def add(self, f, g):
        return Fraction(f) + Fraction(g)

    def scale(self, f, c):
        return Fraction(f) * Fraction(c)

    def is_zero(self, f):
        return f == 0

    def shift_object(self, obj, i):
        return obj

    def shift_morphism(self, f, i):
        return f

    def check_object(self, obj):
        if obj != self.OBJECT:
            raise UnsupportedObjectError(f"LaurentCategory has only the object {self.OBJECT!r}")


class TateTwistCategory(AdditiveCategory):
    """Finite direct sums of Chow motives with ``T(M) = M(1)``.

    ``T`` leaves correspondence classes unchanged and shifts both endpoint
    twists, so ``Hom(M, T^i N)`` is the degree ``dim X + n + i - m`` part.
    """

    def source(self, f):
        return f.source

    def target(self, f):
        return f.target

    def compose(self, f, g):
        return f.then(g)

    def identity(self, obj):
        return SumMorphism.identity(obj)

    def zero(self, source, target):
        return SumMorphism.zero(source, target)

    def add(self, f, g):
        return f + g

    def scale(self, f, c):
        return f.scale(c)

    def is_zero(self, f):
        return f.is_zero()

    def shift_object(self, obj, i):
        return obj.shift(i)

    def shift_morphism(self, f, i):
        return f.shift(i)

    def check_object(self, obj):
        if not isinstance(obj, MotiveSum):
            raise UnsupportedObjectError(
                f"TateTwistCategory objects are MotiveSums, got {type(obj).__name__}"
            )


TATE = TateTwistCategory()
LAURENT = LaurentCategory()


def _as_sum(m):
    if isinstance(m, Motive):
        return MotiveSum((m,))
    if isinstance(m, MotiveSum):
        return m
    raise UnsupportedObjectError(f"expected a Motive or MotiveSum, got {type(m).__name__}")


def _reduce_to_units(m):
    """Block-diagonal ``m -> U`` and ``U -> m`` with ``U`` a sum of twisted units."""
    decs = [tate_decompose(s) for s in m]
    units = MotiveSum(tuple(u for d in decs for u in d.units))
    offsets = []
    pos = 0
    for d in decs:
        offsets.append(pos)
        pos += len(d.units)

    def fwd(j, i):
        d = decs[i]
        local = j - offsets[i]
        if 0 <= local < len(d.units):
            return d.forward.entries[local][0]
        return MotiveMorphism.zero(m.summands[i], units.summands[j])

    def bwd(j, i):
        d = decs[j]
        local = i - offsets[j]
        if 0 <= local < len(d.units):
            return d.backward.entries[0][local]
        return MotiveMorphism.zero(units.summands[i], m.summands[j])

    return (
        units,
        SumMorphism.from_function(m, units, fwd),
        SumMorphism.from_function(units, m, bwd),
    )


def _unit_witness(u, v):
    """Graded map ``u -> v`` between equal-length unit sums, diagonal with the
    ``k``-th entry in degree ``u_k - v_k``."""
    comps = {}
    for k, (a, b) in enumerate(zip(u, v)):
        i = a.twist - b.twist
        comps.setdefault(i, []).append(k)
    out = {}
    for i, ks in comps.items():
        tv = v.shift(i)
        out[i] = SumMorphism.from_function(
            u, tv,
            lambda j, k, ks=ks, tv=tv: (
                MotiveMorphism._make(u.summands[k], tv.summands[j],
                                     u.summands[k].identity().cls)
                if j == k and k in ks
                else MotiveMorphism.zero(u.summands[k], tv.summands[j])
            ),
        )
    return graded(TATE, u, v, out)


def orbit_iso_witness(m, n):
    """Mutually inverse graded morphisms ``m -> n`` and ``n -> m`` in
    ``ChMot/Q(1)``, or ``None`` when the Tate-sum classes differ."""
    m, n = _as_sum(m), _as_sum(n)
    um, fm, gm = _reduce_to_units(m)
    un, fn, gn = _reduce_to_units(n)
    if len(um) != len(un):
        return None
    phi = orbit_compose(TATE, orbit_compose(TATE, project(TATE, fm), _unit_witness(um, un)),
                        project(TATE, gn))
    psi = orbit_compose(TATE, orbit_compose(TATE, project(TATE, fn), _unit_witness(un, um)),
                        project(TATE, gm))
    return phi, psi


def is_orbit_iso_pair(f, g):
    return (
        orbit_compose(TATE, f, g) == orbit_identity(TATE, f.source)
        and orbit_compose(TATE, g, f) == orbit_identity(TATE, g.source)
    )


def orbit_iso_tate(m, n):
    """Decide isomorphism in Chow motives modulo Tate twists.

    Each side is split into twisted units; equal counts give an explicit pair
    of graded morphisms which is then verified with :func:`orbit_compose`.
    """
    witness = orbit_iso_witness(m, n)
    if witness is None:
        return False
    return is_orbit_iso_pair(*witness)


def tate_sum_class(m):
    """Isomorphism invariant of ``sum_i M(i)[2i]``: the number of unit summands."""
    return sum(len(tate_decompose(s).units) for s in _as_sum(m))


def twist_window(m, n):
    """All ``i`` for which ``Hom(m, T^i n)`` can be nonzero."""
    lo = m.twist - n.twist - m.variety.dim
    hi = m.twist - n.twist + n.variety.dim
    return range(lo, hi + 1)


def orbit_hom_dimension(m, n):
    """``sum_i dim Hom(m, n(i))`` over the (finite) degree window."""
    total = 0
    for i in twist_window(m, n):
        assert 0 <= hom_degree(m, n.shift(i)) <= m.variety.dim + n.variety.dim
        total += hom_dimension(m, n.shift(i))
    return total


def format_graded(f, fmt=str):
    inner = ", ".join(f"{i}: {fmt(c)}" for i, c in f.components)
    return "{ " + inner + " }" if inner else "{}"
