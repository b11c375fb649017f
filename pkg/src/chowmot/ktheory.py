"""Rational K_0 of products of projective spaces.

K-classes are stored in the box basis ``[O(d1,...,dk)]`` with
``0 <= d_i <= n_i``.  Line bundles outside the box are brought back into it
through ``ch_inverse(ch(.))``, which is exact.

``ch_inverse`` exploits that ``u_i = [O(e_i)] - [O]`` has
``ch(u_i) = e^{h_i} - 1 = h_i + ...``, so the products ``u^e`` form a basis
on which ``ch`` is unitriangular with respect to total degree.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod

from .chow import (
    ChowClass,
    VarietyMismatchError,
    degree,
    intersection_pairing,
    pushforward,
)
from .graded import SparsePoly, exp_nilpotent, format_terms, monomial_basis
from .textform import evaluate


class KClass:
    """``sum c_d [O(d)]`` over multidegrees ``d`` in the box of ``variety``."""

    __slots__ = ("variety", "_combo", "_hash")

    def __init__(self, variety, combo=None):
        self.variety = variety
        caps = variety.factors
        clean = {}
        for d, c in (combo or {}).items():
            d = tuple(int(x) for x in d)
            if len(d) != len(caps) or any(not 0 <= x <= n for x, n in zip(d, caps)):
                raise ValueError(
                    f"multidegree {d} outside the box of {variety}; use line_bundle()"
                )
            c = Fraction(c)
            if c:
                clean[d] = clean.get(d, 0) + c
        self._combo = {d: c for d, c in clean.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, variety, combo):
        obj = cls.__new__(cls)
        obj.variety = variety
        obj._combo = combo
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, variety):
        return cls._raw(variety, {})

    @classmethod
    def trivial(cls, variety):
        return cls(variety, {(0,) * variety.nvars: 1})

    @classmethod
    def line_bundle(cls, variety, degrees):
        """``[O(degrees)]`` for any integer multidegree."""
        degrees = tuple(int(x) for x in degrees)
        if len(degrees) != variety.nvars:
            raise ValueError(f"O{degrees} needs {variety.nvars} degrees on {variety}")
        if all(0 <= x <= n for x, n in zip(degrees, variety.factors)):
            return cls(variety, {degrees: 1})
        return _normalized_line_bundle(variety, degrees)

    @classmethod
    def parse(cls, text, variety):
        return parse_kclass(text, variety)

    @property
    def combo(self):
        return dict(self._combo)

    def items(self):
        return sorted(self._combo.items())

    def rank(self):
        return sum(self._combo.values(), Fraction(0))

    def is_zero(self):
        return not self._combo

    def is_integral(self):
        return all(c.denominator == 1 for c in self._combo.values())

    def _check(self, other):
        if self.variety != other.variety:
            raise VarietyMismatchError(f"K-classes on {self.variety} and {other.variety}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = KClass.trivial(self.variety).scale(other)
        if not isinstance(other, KClass):
            return NotImplemented
        self._check(other)
        out = dict(self._combo)
        for d, c in other._combo.items():
            s = out.get(d, 0) + c
            if s:
                out[d] = s
            else:
                out.pop(d, None)
        return KClass._raw(self.variety, out)

    __radd__ = __add__

    def __neg__(self):
        return KClass._raw(self.variety, {d: -c for d, c in self._combo.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return KClass.zero(self.variety)
        return KClass._raw(self.variety, {d: c * v for d, v in self._combo.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, KClass):
            return tensor(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(1 / Fraction(other))
        return NotImplemented

    def __pow__(self, m):
        result = KClass.trivial(self.variety)
        for _ in range(m):
            result = tensor(result, self)
        return result

    def __eq__(self, other):
        if not isinstance(other, KClass):
            return NotImplemented
        return self.variety == other.variety and self._combo == other._combo

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.variety, frozenset(self._combo.items())))
        return self._hash

    def __str__(self):
        return format_terms(self.items(), _format_bundle)

    def __repr__(self):
        return f"KClass({self.variety}, {str(self)!r})"


def _format_bundle(d):
    if not any(d):
        return "O"
    return "O(" + ",".join(str(x) for x in d) + ")"


def parse_kclass(text, variety):
    """Read e.g. ``"3*O(1,0) - 1/2*O(0,2) + O"``; ``*`` between K-classes is
    the tensor product."""

    def bundle(*degrees):
        ints = []
        for x in degrees:
            if x.denominator != 1:
                raise ValueError(f"line bundle degree {x} is not an integer")
            ints.append(int(x))
        return KClass.line_bundle(variety, ints)

    def dual_fn(e):
        return dual(e)

    names = {"O": KClass.trivial(variety)}
    value = evaluate(text, names, {"O": bundle, "dual": dual_fn})
    if isinstance(value, (int, Fraction)):
        value = KClass.trivial(variety).scale(value)
    return value


# Chern character


@lru_cache(maxsize=None)
def _ch_line_bundle(variety, d):
    caps = variety.factors
    linear = SparsePoly(caps, {
        tuple(1 if j == i else 0 for j in range(len(caps))): x for i, x in enumerate(d)
    })
    return exp_nilpotent(linear)


def ch(e):
    """Chern character, ``O(d) -> exp(sum d_i h_i)``, extended linearly."""
    caps = e.variety.factors
    acc = SparsePoly.zero(caps)
    for d, c in e._combo.items():
        acc = acc + _ch_line_bundle(e.variety, d).scale(c)
    return ChowClass(e.variety, acc)


@lru_cache(maxsize=None)
def _ch_u_power(variety, e):
    """``ch(u^e)`` with ``u_i = O(e_i) - O``; leading term is ``h^e``."""
    caps = variety.factors
    result = SparsePoly.one(caps)
    for i, m in enumerate(e):
        if m:
            unit = [0] * len(caps)
            unit[i] = 1
            g = _ch_line_bundle(variety, tuple(unit)) - 1
            result = result * g ** m
    return result


@lru_cache(maxsize=None)
def _u_power_in_box(variety, e):
    """``u^e`` expanded in the box basis (binomial theorem per factor)."""
    out = {}
    for j in itertools.product(*(range(m + 1) for m in e)):
        c = prod(comb(m, x) * (-1) ** (m - x) for m, x in zip(e, j))
        out[j] = out.get(j, 0) + c
    return out


def ch_inverse(c):
    """The unique K-class with ``ch(E) = c``."""
    x = c.variety
    remaining = c.poly
    u_coeffs = {}
    for d in range(x.dim + 1):
        piece = remaining.graded_piece(d)
        for e, a in piece.terms.items():
            u_coeffs[e] = a
            remaining = remaining - _ch_u_power(x, e).scale(a)
    if not remaining.is_zero():
        raise ArithmeticError("triangular elimination left a remainder")  # pragma: no cover
    out = {}
    for e, a in u_coeffs.items():
        for j, b in _u_power_in_box(x, e).items():
            out[j] = out.get(j, 0) + a * b
    return KClass(x, out)


@lru_cache(maxsize=None)
def _normalized_line_bundle(variety, degrees):
    return ch_inverse(ChowClass(variety, _ch_line_bundle(variety, degrees)))


# Todd class


@lru_cache(maxsize=None)
def bernoulli_numbers(n):
    """``B_0..B_n`` as Fractions, convention ``B_1 = -1/2``, from
    ``sum_{j<=m} C(m+1, j) B_j = 0``."""
    bs = [Fraction(1)]
    for m in range(1, n + 1):
        s = sum((comb(m + 1, j) * bs[j] for j in range(m)), Fraction(0))
        bs.append(-s / (m + 1))
    return tuple(bs)


def todd_series(n):
    """Coefficients of ``h/(1 - e^{-h})`` up to ``h^n``: ``(-1)^k B_k / k!``."""
    bs = bernoulli_numbers(n)
    return [(-1) ** k * bs[k] / factorial(k) for k in range(n + 1)]


def _todd_poly(caps, indices):
    result = SparsePoly.one(caps)
    for i in indices:
        n = caps[i]
        series = todd_series(n)
        terms = {}
        for k, c in enumerate(series):
            e = [0] * len(caps)
            e[i] = k
            terms[tuple(e)] = c
        result = result * SparsePoly(caps, terms) ** (n + 1)
    return result


@lru_cache(maxsize=None)
def todd(x):
    """``td(X) = prod_i (h_i / (1 - e^{-h_i}))^(n_i + 1)``."""
    return ChowClass(x, _todd_poly(x.factors, range(x.nvars)))


# operations on K-classes


def tensor(e, f):
    e._check(f)
    x = e.variety
    pending = {}
    combo = {}
    for a, ca in e._combo.items():
        for b, cb in f._combo.items():
            d = tuple(p + q for p, q in zip(a, b))
            if all(v <= n for v, n in zip(d, x.factors)):
                combo[d] = combo.get(d, 0) + ca * cb
            else:
                pending[d] = pending.get(d, 0) + ca * cb
    out = KClass(x, combo)
    for d, c in pending.items():
        out = out + KClass.line_bundle(x, d).scale(c)
    return out


def dual(e):
    x = e.variety
    out = KClass.zero(x)
    for d, c in e._combo.items():
        out = out + KClass.line_bundle(x, tuple(-v for v in d)).scale(c)
    return out


def euler_pairing(e, f):
    """``chi(E, F) = deg(ch(E^vee) ch(F) td(X))``."""
    e._check(f)
    return intersection_pairing(ch(dual(e)), ch(f) * todd(e.variety))


def euler_characteristic(e):
    return degree(ch(e) * todd(e.variety))


def pullback_k(p, e):
    """``O(d) -> O(d placed on the kept factors)``."""
    if e.variety != p.target:
        raise VarietyMismatchError(f"pullback expects a K-class on {p.target}, got {e.variety}")
    k = p.source.nvars
    out = {}
    for d, c in e._combo.items():
        new = [0] * k
        for x, pos in zip(d, p.kept):
            new[pos] = x
        out[tuple(new)] = c
    return KClass._raw(p.source, out)


def relative_todd(p):
    """Todd class of the integrated factors, as a class on ``p.source``."""
    return ChowClass(p.source, _todd_poly(p.source.factors, p.dropped))


def grr_pushforward(p, e):
    """``p_! E = ch^{-1}(p_*(ch(E) td_p))``."""
    if e.variety != p.source:
        raise VarietyMismatchError(f"pushforward expects a K-class on {p.source}, got {e.variety}")
    if not p.dropped:
        return e
    return ch_inverse(pushforward(p, ch(e) * relative_todd(p)))


def box_basis(x):
    return [KClass(x, {d: 1}) for d in monomial_basis(x.factors)]
