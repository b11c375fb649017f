"""Chow rings of products of projective spaces.

``CH*(P^n1 x ... x P^nk, Q) = Q[h1..hk]/(h_i^(n_i+1))`` with ``h_i`` the
hyperplane class pulled back from the i-th factor.  Products flatten their
factor lists left to right, so on ``X x Y`` the variables of ``X`` come first.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import prod

from .graded import SparsePoly, format_poly, monomial_basis
from .textform import ParseError, evaluate, poly_namespace


class VarietyMismatchError(ValueError):
    pass


_FACTOR = re.compile(r"P(\d+)$")


@dataclass(frozen=True)
class Variety:
    """A product of projective spaces, given by the factor dimensions."""

    factors: tuple = ()

    def __post_init__(self):
        factors = tuple(int(n) for n in self.factors)
        if any(n < 0 for n in factors):
            raise ValueError(f"negative projective dimension in {factors}")
        object.__setattr__(self, "factors", factors)

    @classmethod
    def point(cls):
        return cls(())

    @classmethod
    def projective(cls, n):
        return cls((n,))

    @classmethod
    def parse(cls, text):
        """Read ``"pt"``, ``"P2"`` or ``"P1xP1xP3"``."""
        s = text.strip()
        if not s:
            raise ParseError("empty variety", text, 0)
        if s == "pt":
            return cls(())
        factors = []
        pos = 0
        for part in s.split("x"):
            m = _FACTOR.match(part.strip())
            if not m:
                raise ParseError("bad projective factor", text, pos, part)
            factors.append(int(m.group(1)))
            pos += len(part) + 1
        return cls(tuple(factors))

    @property
    def dim(self):
        return sum(self.factors)

    @property
    def nvars(self):
        return len(self.factors)

    @property
    def chow_rank(self):
        """``dim_Q CH*(X, Q)``, the number of monomials in the box."""
        return prod(n + 1 for n in self.factors)

    def __mul__(self, other):
        if not isinstance(other, Variety):
            return NotImplemented
        return Variety(self.factors + other.factors)

    def __str__(self):
        if not self.factors:
            return "pt"
        return "x".join(f"P{n}" for n in self.factors)


def product_variety(*xs):
    if len(xs) == 1 and not isinstance(xs[0], Variety):
        xs = tuple(xs[0])
    return Variety(sum((x.factors for x in xs), ()))


class ChowClass:
    """An element of ``CH*(X, Q)``."""

    __slots__ = ("variety", "poly")

    def __init__(self, variety, poly):
        if poly.caps != variety.factors:
            raise VarietyMismatchError(
                f"polynomial profile {poly.caps} does not match variety {variety}"
            )
        self.variety = variety
        self.poly = poly

    @classmethod
    def zero(cls, variety):
        return cls(variety, SparsePoly.zero(variety.factors))

    @classmethod
    def one(cls, variety):
        return cls(variety, SparsePoly.one(variety.factors))

    @classmethod
    def constant(cls, variety, c):
        return cls(variety, SparsePoly.constant(variety.factors, c))

    @classmethod
    def hyperplane(cls, variety, i):
        return cls(variety, SparsePoly.gen(variety.factors, i))

    @classmethod
    def monomial(cls, variety, exps, coeff=1):
        return cls(variety, SparsePoly.monomial(variety.factors, exps, coeff))

    @classmethod
    def point_class(cls, variety):
        return cls.monomial(variety, variety.factors)

    @classmethod
    def parse(cls, text, variety):
        return parse_class(text, variety)

    def _check(self, other):
        if self.variety != other.variety:
            raise VarietyMismatchError(f"classes on {self.variety} and {other.variety}")

    def _wrap(self, value):
        if isinstance(value, ChowClass):
            self._check(value)
            return value.poly
        if isinstance(value, (int, Fraction)):
            return value
        return None

    def __add__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return ChowClass(self.variety, self.poly + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return ChowClass(self.variety, self.poly - o)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return ChowClass(self.variety, -self.poly)

    def __mul__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return ChowClass(self.variety, self.poly * o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return ChowClass(self.variety, self.poly / other)
        return NotImplemented

    def __pow__(self, m):
        return ChowClass(self.variety, self.poly ** m)

    def __eq__(self, other):
        if isinstance(other, ChowClass):
            return self.variety == other.variety and self.poly == other.poly
        if isinstance(other, (int, Fraction)):
            return self.poly == other
        return NotImplemented

    def __hash__(self):
        return hash((self.variety, self.poly))

    def __bool__(self):
        return bool(self.poly)

    def is_zero(self):
        return self.poly.is_zero()

    def graded_piece(self, d):
        return ChowClass(self.variety, self.poly.graded_piece(d))

    def is_homogeneous(self, d=None):
        return self.poly.is_homogeneous(d)

    def coefficient(self, exps):
        return self.poly.coefficient(exps)

    def __str__(self):
        return format_poly(self.poly)

    def __repr__(self):
        return f"ChowClass({self.variety}, {str(self)!r})"


def parse_class(text, variety):
    """Read a class in the graded-ring text form; ``td`` and ``exp`` etc. are
    also available so this doubles as the expression evaluator."""
    from . import graded
    from .ktheory import todd

    caps = variety.factors

    def lift(v):
        if isinstance(v, (int, Fraction)):
            return SparsePoly.constant(caps, v)
        if isinstance(v, ChowClass):
            return v.poly
        return v

    names = poly_namespace(caps)
    functions = {
        "exp": lambda a: graded.exp_nilpotent(lift(a)),
        "sqrt": lambda a: graded.sqrt_unipotent(lift(a)),
        "inv": lambda a: graded.invert_unipotent(lift(a)),
        "td": lambda: todd(variety).poly,
        "deg": lambda a: degree(ChowClass(variety, lift(a))),
        "piece": lambda a, d: lift(a).graded_piece(_int_arg(d)),
    }
    value = evaluate(text, names, functions)
    return ChowClass(variety, lift(value))


def _int_arg(v):
    if isinstance(v, Fraction) and v.denominator == 1:
        return int(v)
    if isinstance(v, int):
        return v
    raise ValueError(f"integer argument expected, got {v}")


@dataclass(frozen=True)
class Projection:
    """Projection of a product onto the factors listed in ``kept``."""

    source: Variety
    kept: tuple

    def __post_init__(self):
        kept = tuple(int(i) for i in self.kept)
        k = self.source.nvars
        if any(not 0 <= i < k for i in kept) or len(set(kept)) != len(kept):
            raise ValueError(f"bad kept indices {kept} for {self.source}")
        if list(kept) != sorted(kept):
            raise ValueError("kept indices must be increasing")
        object.__setattr__(self, "kept", kept)

    @classmethod
    def of_blocks(cls, blocks, keep):
        """Projection of ``blocks[0] x blocks[1] x ...`` onto the blocks in ``keep``."""
        offsets = []
        pos = 0
        for b in blocks:
            offsets.append(pos)
            pos += b.nvars
        kept = []
        for j in sorted(keep):
            kept.extend(range(offsets[j], offsets[j] + blocks[j].nvars))
        return cls(product_variety(*blocks), tuple(kept))

    @property
    def target(self):
        return Variety(tuple(self.source.factors[i] for i in self.kept))

    @property
    def dropped(self):
        return tuple(i for i in range(self.source.nvars) if i not in self.kept)

    @property
    def fiber(self):
        return Variety(tuple(self.source.factors[i] for i in self.dropped))

    @property
    def relative_dim(self):
        return self.fiber.dim


def pullback(p, c):
    if c.variety != p.target:
        raise VarietyMismatchError(f"pullback expects a class on {p.target}, got {c.variety}")
    return ChowClass(p.source, c.poly.reindex(p.source.factors, p.kept))


def pushforward(p, c):
    """Fiber integration: a monomial survives iff every integrated variable
    sits at its top power."""
    if c.variety != p.source:
        raise VarietyMismatchError(f"pushforward expects a class on {p.source}, got {c.variety}")
    caps = p.source.factors
    dropped = p.dropped
    out = {}
    for e, coeff in c.poly.terms.items():
        if all(e[i] == caps[i] for i in dropped):
            key = tuple(e[i] for i in p.kept)
            out[key] = out.get(key, 0) + coeff
    return ChowClass(p.target, SparsePoly(p.target.factors, out))


def degree(c):
    return c.poly.coefficient(c.variety.factors)


def intersection_pairing(a, b):
    """``degree(a * b)`` without forming the product."""
    if a.variety != b.variety:
        raise VarietyMismatchError(f"classes on {a.variety} and {b.variety}")
    top = a.variety.factors
    bt = b.poly.terms
    total = Fraction(0)
    for e, c in a.poly.terms.items():
        other = bt.get(tuple(n - x for n, x in zip(top, e)))
        if other:
            total += c * other
    return total


def diagonal(x):
    """Class of the diagonal on ``x x x`` (first copy's variables, then second's)."""
    xx = x * x
    k = x.nvars
    result = SparsePoly.one(xx.factors)
    for f, n in enumerate(x.factors):
        terms = {}
        for i in range(n + 1):
            e = [0] * (2 * k)
            e[f] = i
            e[k + f] = n - i
            terms[tuple(e)] = 1
        result = result * SparsePoly(xx.factors, terms)
    return ChowClass(xx, result)


def chow_basis(x, degree=None):
    """Monomial basis of ``CH*(x)`` (or of ``CH^degree(x)``) as classes."""
    return [ChowClass.monomial(x, e) for e in monomial_basis(x.factors, degree)]
