"""Exact sparse polynomials in truncated rings Q[h1..hk]/(h_i^(n_i+1)).

A :class:`SparsePoly` carries its profile ``caps`` (the per-variable exponent
caps ``n_i``) and a map from exponent tuples to nonzero ``Fraction``
coefficients.  Values are immutable; every operation returns a new polynomial.

Canonical text form lists terms in lexicographic order of exponents::

    >>> str(SparsePoly.parse("1/2*h1*h2 + 2*h1 + 1", (1, 1)))
    '1 + 2*h1 + 1/2*h1*h2'
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from math import lcm
from types import MappingProxyType

from .kernels import truncated_mul


class ProfileMismatchError(ValueError):
    """Operands live in rings with different truncation profiles."""


class NotNilpotentError(ValueError):
    pass


class NotUnipotentError(ValueError):
    pass


def _as_fraction(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"exact rational coefficient expected, got {type(c).__name__}")


class SparsePoly:
    __slots__ = ("caps", "_terms", "_hash")

    def __init__(self, caps, terms=None):
        caps = tuple(int(c) for c in caps)
        if any(c < 0 for c in caps):
            raise ValueError(f"negative cap in profile {caps}")
        self.caps = caps
        clean = {}
        if terms:
            k = len(caps)
            for e, c in terms.items():
                e = tuple(e)
                if len(e) != k:
                    raise ValueError(f"exponent {e} does not match profile {caps}")
                if any(x < 0 for x in e):
                    raise ValueError(f"negative exponent {e}")
                if any(x > n for x, n in zip(e, caps)):
                    continue  # lies in the truncation ideal
                c = _as_fraction(c)
                if c:
                    clean[e] = clean.get(e, 0) + c
            clean = {e: c for e, c in clean.items() if c}
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, caps, terms):
        # trusted constructor: terms already pruned and within caps
        obj = cls.__new__(cls)
        obj.caps = caps
        obj._terms = terms
        obj._hash = None
        return obj

    # constructors

    @classmethod
    def zero(cls, caps):
        return cls._raw(tuple(caps), {})

    @classmethod
    def one(cls, caps):
        return cls.constant(caps, 1)

    @classmethod
    def constant(cls, caps, c):
        caps = tuple(caps)
        return cls(caps, {(0,) * len(caps): c})

    @classmethod
    def gen(cls, caps, i):
        """The variable ``h_(i+1)`` (0-based index ``i``)."""
        caps = tuple(caps)
        e = [0] * len(caps)
        e[i] = 1
        return cls(caps, {tuple(e): 1})

    @classmethod
    def monomial(cls, caps, exps, coeff=1):
        return cls(caps, {tuple(exps): coeff})

    @classmethod
    def parse(cls, text, caps):
        from .textform import parse_poly

        return parse_poly(text, tuple(caps))

    # inspection

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def items(self):
        """Terms in canonical (lexicographic) order."""
        return sorted(self._terms.items())

    def coefficient(self, exps):
        return self._terms.get(tuple(exps), Fraction(0))

    def constant_term(self):
        return self._terms.get((0,) * len(self.caps), Fraction(0))

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    @property
    def top_degree(self):
        """Largest total degree that can be nonzero in this ring."""
        return sum(self.caps)

    def degrees(self):
        return sorted({sum(e) for e in self._terms})

    def is_homogeneous(self, d=None):
        degs = self.degrees()
        if not degs:
            return True
        return len(degs) == 1 and (d is None or degs[0] == d)

    def graded_piece(self, d):
        if d < 0:
            raise ValueError("graded_piece needs d >= 0")
        return SparsePoly._raw(self.caps, {e: c for e, c in self._terms.items() if sum(e) == d})

    def basis_monomials(self, degree=None):
        return monomial_basis(self.caps, degree)

    # arithmetic

    def _check(self, other):
        if self.caps != other.caps:
            raise ProfileMismatchError(
                f"incompatible profiles {self.caps} and {other.caps}: "
                "classes live on different ambient varieties"
            )

    def _coerce(self, other):
        if isinstance(other, SparsePoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return SparsePoly.constant(self.caps, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return SparsePoly._raw(self.caps, out)

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly._raw(self.caps, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = _as_fraction(c)
        if not c:
            return SparsePoly.zero(self.caps)
        return SparsePoly._raw(self.caps, {e: c * v for e, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(1 / _as_fraction(other))
        return NotImplemented

    def __pow__(self, m):
        if not isinstance(m, int) or m < 0:
            raise ValueError("only nonnegative integer powers are defined")
        result = SparsePoly.one(self.caps)
        base = self
        while m:
            if m & 1:
                result = result * base
            m >>= 1
            if m:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, SparsePoly):
            return self.caps == other.caps and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == SparsePoly.constant(self.caps, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.caps, frozenset(self._terms.items())))
        return self._hash

    # variable bookkeeping

    def reindex(self, caps, positions):
        """Send variable ``i`` of ``self`` to variable ``positions[i]`` of a ring
        with profile ``caps``."""
        caps = tuple(caps)
        k = len(caps)
        out = {}
        for e, c in self._terms.items():
            new = [0] * k
            for x, p in zip(e, positions):
                new[p] = x
            out[tuple(new)] = c
        return SparsePoly(caps, out)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"SparsePoly({self.caps}, {str(self)!r})"


def format_rational(c):
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _format_monomial(e, names):
    parts = []
    for x, name in zip(e, names):
        if x == 1:
            parts.append(name)
        elif x > 1:
            parts.append(f"{name}^{x}")
    return "*".join(parts)


def format_terms(items, format_basis):
    """Join ``(basis, coeff)`` pairs as ``c*b + ...`` with signs folded in."""
    out = []
    for b, c in items:
        mono = format_basis(b)
        mag = abs(c)
        if not mono:
            body = format_rational(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{format_rational(mag)}*{mono}"
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(f" + {body}" if c > 0 else f" - {body}")
    return "".join(out) if out else "0"


def format_poly(p, names=None):
    if names is None:
        names = [f"h{i + 1}" for i in range(len(p.caps))]
    return format_terms(p.items(), lambda e: _format_monomial(e, names))


def monomial_basis(caps, degree=None):
    """All exponent tuples in the box, lexicographic; optionally of one degree."""
    ranges = [range(n + 1) for n in caps]
    exps = itertools.product(*ranges)
    if degree is None:
        return list(exps)
    return [e for e in exps if sum(e) == degree]


def _integerize(p):
    den = 1
    for c in p._terms.values():
        den = lcm(den, c.denominator)
    exps = list(p._terms)
    nums = [c.numerator * (den // c.denominator) for c in p._terms.values()]
    return exps, nums, den


def add(a, b):
    if a.caps != b.caps:
        a._check(b)
    return a + b


def mul(a, b):
    """Truncated product: monomials leaving the box are dropped."""
    a._check(b)
    if not a._terms or not b._terms:
        return SparsePoly.zero(a.caps)
    ea, na, da = _integerize(a)
    eb, nb, db = _integerize(b)
    raw = truncated_mul(a.caps, ea, na, eb, nb)
    den = da * db
    return SparsePoly._raw(a.caps, {e: Fraction(n, den) for e, n in raw.items()})


def graded_piece(a, d):
    return a.graded_piece(d)


def exp_nilpotent(a):
    """``sum a^m / m!``; terminates because ``a`` is nilpotent."""
    if a.constant_term():
        raise NotNilpotentError("exp_nilpotent needs a class with zero constant term")
    result = SparsePoly.one(a.caps)
    term = result
    m = 1
    while True:
        term = (term * a).scale(Fraction(1, m))
        if term.is_zero():
            return result
        result = result + term
        m += 1


def _pieces(a):
    return [a.graded_piece(d) for d in range(a.top_degree + 1)]


def sqrt_unipotent(a):
    """Unique square root with constant term 1, solved one degree at a time.

    In degree d: 2*b_d + sum_{0<i<d} b_i*b_(d-i) = a_d.
    """
    if a.constant_term() != 1:
        raise NotUnipotentError("sqrt_unipotent needs constant term 1")
    top = a.top_degree
    a_d = _pieces(a)
    b = [SparsePoly.one(a.caps)] + [None] * top
    for d in range(1, top + 1):
        acc = a_d[d]
        for i in range(1, d):
            acc = acc - b[i] * b[d - i]
        b[d] = acc.scale(Fraction(1, 2))
    return sum(b[1:], b[0])


def invert_unipotent(a):
    """Multiplicative inverse of a class with constant term 1.

    In degree d: c_d = -sum_{0<i<=d} a_i*c_(d-i).
    """
    if a.constant_term() != 1:
        raise NotUnipotentError("invert_unipotent needs constant term 1")
    top = a.top_degree
    a_d = _pieces(a)
    c = [SparsePoly.one(a.caps)] + [None] * top
    for d in range(1, top + 1):
        acc = SparsePoly.zero(a.caps)
        for i in range(1, d + 1):
            if a_d[i]:
                acc = acc - a_d[i] * c[d - i]
        c[d] = acc
    return sum(c[1:], c[0])
