"""Chow motives with rational coefficients over products of projective spaces.

Conventions (fixed once, all tests are written against them):

* A motive is ``(X, p, m)`` with ``p`` an idempotent correspondence on ``X``,
  homogeneous of degree ``dim X``, and ``m`` the Tate twist.  ``1(i)`` is
  ``(pt, id, i)`` and the Lefschetz motive is ``L = 1(-1)``.
* ``Hom((X, p, m), (Y, q, n))`` consists of classes on ``X x Y`` homogeneous of
  degree ``dim X + n - m`` and absorbed by the projectors, ``c = p.c.q``.
* Composition is written left to right: ``compose(f, g)`` is "f, then g" and
  its kernel is ``compose_chow(f, g)``.

With these conventions ``(P^n, h1^(n-i) h2^i, 0)`` is isomorphic to ``1(-i)``,
so ``M(P^n) = 1 + L + ... + L^n``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .chow import ChowClass, Variety, parse_class
from .correspondence import ChowCorrespondence, compose_chow
from .graded import SparsePoly, monomial_basis
from .textform import ParseError, parse_int


class MotiveError(ValueError):
    pass


class UnsupportedObjectError(TypeError):
    """The decision procedures only accept motives over products of
    projective spaces (Tate-type objects)."""


PT = Variety(())


def is_idempotent(p):
    if p.source != p.target:
        raise MotiveError("idempotence only makes sense for endo-correspondences")
    return compose_chow(p, p) == p


@dataclass(frozen=True)
class Motive:
    variety: Variety
    projector: ChowCorrespondence
    twist: int = 0

    def __post_init__(self):
        p = self.projector
        if p.source != self.variety or p.target != self.variety:
            raise MotiveError(f"projector is not an endomorphism of {self.variety}")
        if not p.kernel.is_homogeneous(self.variety.dim):
            raise MotiveError(f"projector kernel is not homogeneous of degree {self.variety.dim}")
        if not is_idempotent(p):
            raise MotiveError("projector is not idempotent")
        object.__setattr__(self, "twist", int(self.twist))

    @classmethod
    def of(cls, x, twist=0):
        """``M(X)(twist)``: the whole variety, projector the diagonal."""
        return cls(x, ChowCorrespondence.identity(x), twist)

    @classmethod
    def unit(cls, twist=0):
        return cls.of(PT, twist)

    @classmethod
    def lefschetz(cls, power=1):
        return cls.unit(-power)

    def shift(self, i):
        return Motive(self.variety, self.projector, self.twist + i)

    def is_unit_type(self):
        return self.variety == PT and self.projector.kernel == 1

    def identity(self):
        return MotiveMorphism._make(self, self, self.projector.kernel)

    def __str__(self):
        if self.is_unit_type():
            return "1" if self.twist == 0 else f"1({self.twist})"
        return f"M({self.variety}; pi={self.projector.kernel}; twist={self.twist})"


def hom_degree(m, n):
    return m.variety.dim + n.twist - m.twist


@dataclass(frozen=True)
class MotiveMorphism:
    source: Motive
    target: Motive
    cls: ChowClass

    def __post_init__(self):
        x, y = self.source.variety, self.target.variety
        if self.cls.variety != x * y:
            raise MotiveError(f"morphism class lives on {self.cls.variety}, expected {x * y}")
        d = hom_degree(self.source, self.target)
        if not self.cls.is_homogeneous(d):
            raise MotiveError(f"morphism class must be homogeneous of degree {d}")
        if _absorb(self.source, self.target, self.cls) != self.cls:
            raise MotiveError("morphism class is not absorbed by the projectors")

    @classmethod
    def _make(cls, source, target, c):
        obj = object.__new__(cls)
        object.__setattr__(obj, "source", source)
        object.__setattr__(obj, "target", target)
        object.__setattr__(obj, "cls", c)
        return obj

    @classmethod
    def absorbed(cls, source, target, c):
        """Project ``c`` through both projectors; the degree must already match."""
        d = hom_degree(source, target)
        if not c.is_homogeneous(d):
            raise MotiveError(f"morphism class must be homogeneous of degree {d}")
        return cls._make(source, target, _absorb(source, target, c))

    @classmethod
    def zero(cls, source, target):
        return cls._make(source, target, ChowClass.zero(source.variety * target.variety))

    @property
    def correspondence(self):
        return ChowCorrespondence(self.source.variety, self.target.variety, self.cls)

    def then(self, other):
        return compose(self, other)

    def __add__(self, other):
        _same_ends(self, other)
        return MotiveMorphism._make(self.source, self.target, self.cls + other.cls)

    def __sub__(self, other):
        _same_ends(self, other)
        return MotiveMorphism._make(self.source, self.target, self.cls - other.cls)

    def __neg__(self):
        return MotiveMorphism._make(self.source, self.target, -self.cls)

    def scale(self, c):
        return MotiveMorphism._make(self.source, self.target, self.cls * Fraction(c))

    def is_zero(self):
        return self.cls.is_zero()

    def shift(self, i):
        return MotiveMorphism._make(self.source.shift(i), self.target.shift(i), self.cls)

    def __str__(self):
        return f"{self.source} -> {self.target} : {self.cls}"


def _same_ends(f, g):
    if f.source != g.source or f.target != g.target:
        raise MotiveError("morphisms have different endpoints")


def _absorb(source, target, c):
    corr = ChowCorrespondence(source.variety, target.variety, c)
    return compose_chow(compose_chow(source.projector, corr), target.projector).kernel


def compose(f, g):
    """``f`` then ``g``, for single motives or for direct sums."""
    if isinstance(f, SumMorphism):
        return f.then(g)
    if f.target != g.source:
        raise MotiveError(f"cannot compose: {f.target} is not {g.source}")
    return MotiveMorphism._make(f.source, g.target, compose_chow(f.correspondence, g.correspondence).kernel)


def identity(m):
    if isinstance(m, MotiveSum):
        return SumMorphism.identity(m)
    return m.identity()


# direct sums


@dataclass(frozen=True)
class MotiveSum:
    summands: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "summands", tuple(self.summands))

    @classmethod
    def parse(cls, text):
        return parse_motive_sum(text)

    @classmethod
    def units(cls, twists):
        return cls(tuple(Motive.unit(t) for t in twists))

    def __len__(self):
        return len(self.summands)

    def __iter__(self):
        return iter(self.summands)

    def __add__(self, other):
        return MotiveSum(self.summands + other.summands)

    def shift(self, i):
        return MotiveSum(tuple(m.shift(i) for m in self.summands))

    def is_tate_units(self):
        return all(m.is_unit_type() for m in self.summands)

    def __str__(self):
        return " + ".join(str(m) for m in self.summands) if self.summands else "0"


@dataclass(frozen=True)
class SumMorphism:
    """Matrix of motive morphisms; ``entries[j][i]`` maps source summand ``i``
    to target summand ``j``."""

    source: MotiveSum
    target: MotiveSum
    entries: tuple

    def __post_init__(self):
        entries = tuple(tuple(row) for row in self.entries)
        if len(entries) != len(self.target) or any(len(r) != len(self.source) for r in entries):
            raise MotiveError("matrix shape does not match the direct sums")
        for j, row in enumerate(entries):
            for i, f in enumerate(row):
                if f.source != self.source.summands[i] or f.target != self.target.summands[j]:
                    raise MotiveError(f"entry ({j}, {i}) has the wrong endpoints")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_function(cls, source, target, fn):
        return cls(source, target, tuple(
            tuple(fn(j, i) for i in range(len(source))) for j in range(len(target))
        ))

    @classmethod
    def zero(cls, source, target):
        return cls.from_function(
            source, target, lambda j, i: MotiveMorphism.zero(source.summands[i], target.summands[j])
        )

    @classmethod
    def identity(cls, m):
        return cls.from_function(
            m, m,
            lambda j, i: m.summands[i].identity() if i == j
            else MotiveMorphism.zero(m.summands[i], m.summands[j]),
        )

    @classmethod
    def single(cls, f):
        return cls(MotiveSum((f.source,)), MotiveSum((f.target,)), ((f,),))

    def then(self, other):
        if self.target != other.source:
            raise MotiveError("cannot compose: direct sums do not match")
        mid = range(len(self.target))

        def entry(k, i):
            acc = MotiveMorphism.zero(self.source.summands[i], other.target.summands[k])
            for j in mid:
                f, g = self.entries[j][i], other.entries[k][j]
                if not f.is_zero() and not g.is_zero():
                    acc = acc + compose(f, g)
            return acc

        return SumMorphism.from_function(self.source, other.target, entry)

    def __add__(self, other):
        if self.source != other.source or self.target != other.target:
            raise MotiveError("morphisms have different endpoints")
        return SumMorphism.from_function(
            self.source, self.target, lambda j, i: self.entries[j][i] + other.entries[j][i]
        )

    def scale(self, c):
        return SumMorphism.from_function(
            self.source, self.target, lambda j, i: self.entries[j][i].scale(c)
        )

    def is_zero(self):
        return all(f.is_zero() for row in self.entries for f in row)

    def shift(self, i):
        return SumMorphism(self.source.shift(i), self.target.shift(i), tuple(
            tuple(f.shift(i) for f in row) for row in self.entries
        ))


def check_iso_pair(f, g):
    """True iff ``f`` and ``g`` are mutually inverse."""
    if f.source != g.target or f.target != g.source:
        raise MotiveError("candidate inverse pair has mismatched endpoints")
    return compose(f, g) == identity(f.source) and compose(g, f) == identity(g.source)


# hom spaces


def hom_space(m, n):
    """Basis (reduced echelon form over the monomials) of ``Hom(m, n)``."""
    d = hom_degree(m, n)
    xy = m.variety * n.variety
    monos = monomial_basis(xy.factors, d) if d >= 0 else []
    if not monos:
        return []
    rows = []
    for e in monos:
        c = _absorb(m, n, ChowClass.monomial(xy, e))
        rows.append([c.coefficient(e2) for e2 in monos])
    reduced, _ = linalg.rref(rows)
    return [ChowClass(xy, SparsePoly(xy.factors, dict(zip(monos, row)))) for row in reduced]


def hom_dimension(m, n):
    return len(hom_space(m, n))


# decompositions


def _kunneth_witness(x, e, twist=0):
    """Maps ``f: (X, Delta, t) -> 1(t - |e|)`` and ``g`` back with ``f.g = pi_e``.

    ``f`` is ``h^(n-e)`` on ``X x pt`` and ``g`` is ``h^e`` on ``pt x X``.
    """
    cofactor = tuple(n - a for n, a in zip(x.factors, e))
    f_cls = ChowClass.monomial(x * PT, cofactor)
    g_cls = ChowClass.monomial(PT * x, e)
    return f_cls, g_cls


def kunneth_projector(x, e):
    """``pi_e`` with kernel ``prod_i h_i^(n_i - e_i) h_(k+i)^(e_i)``."""
    exps = tuple(n - a for n, a in zip(x.factors, e)) + tuple(e)
    return ChowCorrespondence(x, x, ChowClass.monomial(x * x, exps))


def decompose(x, twist=0):
    """Kunneth decomposition of ``M(X)(twist)`` into ``(X, pi_e, twist)``.

    Returns a list of ``(summand, (f, g))`` with ``f: summand -> 1(twist - |e|)``
    and ``g`` its inverse.
    """
    out = []
    for e in monomial_basis(x.factors):
        summand = Motive(x, kunneth_projector(x, e), twist)
        unit = Motive.unit(twist - sum(e))
        f_cls, g_cls = _kunneth_witness(x, e)
        f = MotiveMorphism._make(summand, unit, f_cls)
        g = MotiveMorphism._make(unit, summand, g_cls)
        out.append((summand, (f, g)))
    return out


def decompose_projective(n):
    """``M(P^n) = sum_i (P^n, pi_i, 0)`` with ``pi_i = h1^(n-i) h2^i`` and
    ``(P^n, pi_i, 0) = 1(-i)``."""
    return decompose(Variety((n,)))


@dataclass(frozen=True)
class TateDecomposition:
    """``forward: M -> U`` and ``backward: U -> M`` mutually inverse, with
    ``U`` a direct sum of twisted units."""

    motive: Motive
    units: MotiveSum
    forward: SumMorphism
    backward: SumMorphism

    @property
    def twists(self):
        return sorted(u.twist for u in self.units)


def tate_decompose(m):
    """Split any motive over a product of projective spaces into twisted units.

    Writes the projector in the Kunneth frame as a block-diagonal idempotent
    matrix (one block per degree) and factors each block as ``A S`` with
    ``S A = 1``; the columns of ``A`` and rows of ``S`` give the maps.
    """
    if not isinstance(m, Motive):
        raise UnsupportedObjectError(f"expected a Motive, got {type(m).__name__}")
    x = m.variety
    frames = {}
    for e in monomial_basis(x.factors):
        frames.setdefault(sum(e), []).append((e, _kunneth_witness(x, e)))

    units = []
    fwd_cls = []
    bwd_cls = []
    p = m.projector
    for d in sorted(frames):
        block = frames[d]
        # P[a][b] = g_a then p then f_b, a scalar on pt x pt
        matrix = []
        for _, (_, g_a) in block:
            g_corr = ChowCorrespondence(PT, x, g_a)
            gp = compose_chow(g_corr, p)
            row = []
            for _, (f_b, _) in block:
                val = compose_chow(gp, ChowCorrespondence(x, PT, f_b)).kernel
                row.append(val.coefficient(()))
            matrix.append(row)
        if not any(any(r) for r in matrix):
            continue
        a, s = linalg.rank_factorization(matrix)
        for k in range(len(s)):
            f_cls = ChowClass.zero(x * PT)
            g_cls = ChowClass.zero(PT * x)
            for idx, (_, (f_e, g_e)) in enumerate(block):
                f_cls = f_cls + f_e * a[idx][k]
                g_cls = g_cls + g_e * s[k][idx]
            units.append(Motive.unit(m.twist - d))
            fwd_cls.append(f_cls)
            bwd_cls.append(g_cls)

    target = MotiveSum(tuple(units))
    single = MotiveSum((m,))
    forward = SumMorphism(single, target, tuple(
        (MotiveMorphism._make(m, u, c),) for u, c in zip(units, fwd_cls)
    ))
    backward = SumMorphism(target, single, (tuple(
        MotiveMorphism._make(u, m, c) for u, c in zip(units, bwd_cls)
    ),))
    return TateDecomposition(m, target, forward, backward)


def tate_twists(m):
    """Sorted twist multiset; decides isomorphism in the motive category
    itself (before passing to Tate orbits)."""
    if isinstance(m, MotiveSum):
        return sorted(t for s in m for t in tate_decompose(s).twists)
    return tate_decompose(m).twists


# text forms


_MOTIVE_FULL = re.compile(
    r"M\(\s*(?P<var>[^;()]+?)\s*;\s*pi\s*=\s*(?P<pi>[^;]+?)\s*;\s*twist\s*=\s*(?P<tw>-?\d+)\s*\)$"
)
_MOTIVE_SHORT = re.compile(r"M\(\s*(?P<var>[^;()]+?)\s*\)(?:\(\s*(?P<tw>-?\d+)\s*\))?$")
_UNIT = re.compile(r"1(?:\(\s*(?P<tw>-?\d+)\s*\))?$")
_LEF = re.compile(r"L(?:\^\s*(?P<pow>-?\d+))?(?:\(\s*(?P<tw>-?\d+)\s*\))?$")


def parse_motive(text):
    """Read ``M(P2; pi=h1^2; twist=0)``, ``M(P1xP1)``, ``M(P2)(1)``, ``1``,
    ``1(i)``, ``L`` or ``L^k``."""
    s = text.strip()
    m = _MOTIVE_FULL.match(s)
    if m:
        x = Variety.parse(m.group("var"))
        kernel = parse_class(m.group("pi"), x * x)
        return Motive(x, ChowCorrespondence(x, x, kernel), int(m.group("tw")))
    m = _MOTIVE_SHORT.match(s)
    if m:
        return Motive.of(Variety.parse(m.group("var")), int(m.group("tw") or 0))
    m = _UNIT.match(s)
    if m:
        return Motive.unit(int(m.group("tw") or 0))
    m = _LEF.match(s)
    if m:
        return Motive.lefschetz(int(m.group("pow") or 1)).shift(int(m.group("tw") or 0))
    raise ParseError("unrecognized motive", text, 0, s)


def _split_top_level(text, sep="+"):
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError("unbalanced parenthesis", text, i, ch)
        elif ch == sep and depth == 0:
            parts.append((start, text[start:i]))
            start = i + 1
    if depth:
        raise ParseError("unbalanced parenthesis", text, len(text))
    parts.append((start, text[start:]))
    return parts


_MULT = re.compile(r"\s*(\d+)\s*\*\s*(.*)$", re.S)


def parse_motive_sum(text):
    """Read a ``+``-separated sum such as ``"1 + L"``, ``"3*1(2)"`` or ``"M(P2)"``."""
    summands = []
    for start, part in _split_top_level(text):
        if not part.strip():
            raise ParseError("empty summand", text, start, "+")
        count = 1
        body = part
        m = _MULT.match(part)
        if m:
            count = parse_int(m.group(1), "multiplicity")
            body = m.group(2)
        try:
            motive = parse_motive(body)
        except ParseError as exc:
            raise ParseError("unrecognized motive", text, start + (len(part) - len(part.lstrip())),
                             body.strip()) from exc
        summands.extend([motive] * count)
    return MotiveSum(tuple(summands))
