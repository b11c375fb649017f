"""K_0-level noncommutative motives of products of projective spaces.

``NM(X)`` for a variety with a full exceptional collection of length ``r`` is
``U(k)^r``; homs between such objects are integer matrices.  The collection
used is the product Beilinson collection ``O(d)``, ``0 <= d_i <= n_i``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .chow import Variety, intersection_pairing
from .graded import monomial_basis
from .ktheory import KClass, ch, dual, todd
from .motives import Motive
from .orbit import tate_sum_class


class InternalConsistencyError(AssertionError):
    """An Euler pairing that must be an integer was not; signals a bug."""


@dataclass(frozen=True)
class ExceptionalCollection:
    variety: Variety
    objects: tuple

    def __len__(self):
        return len(self.objects)


def beilinson_order(x):
    """Box multidegrees ordered by total degree, then lexicographically."""
    return sorted(monomial_basis(x.factors), key=lambda d: (sum(d), d))


def beilinson_collection(x):
    return ExceptionalCollection(x, tuple(KClass(x, {d: 1}) for d in beilinson_order(x)))


def euler_matrix(c):
    """``[chi(E_i, E_j)]`` by Hirzebruch-Riemann-Roch."""
    td = todd(c.variety)
    left = [ch(dual(e)) for e in c.objects]
    right = [ch(f) * td for f in c.objects]
    rows = []
    for a in left:
        row = []
        for b in right:
            chi = intersection_pairing(a, b)
            if chi.denominator != 1:
                raise InternalConsistencyError(f"non-integral Euler pairing {chi}")
            row.append(int(chi))
        rows.append(tuple(row))
    return tuple(rows)


def is_unitriangular(m):
    n = len(m)
    return all(
        m[i][j] == (1 if i == j else m[i][j]) and (i <= j or m[i][j] == 0)
        for i in range(n) for j in range(n)
    )


@dataclass(frozen=True)
class NCMotive:
    rank: int
    euler: tuple

    def identity(self):
        return tuple(tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank))

    def to_json(self):
        return {"rank": self.rank, "euler": [list(r) for r in self.euler]}


@lru_cache(maxsize=None)
def nm_object(x):
    c = beilinson_collection(x)
    return NCMotive(len(c), euler_matrix(c))


def nm_compose(f, g):
    """``f`` then ``g`` for integer matrices ``f: U^r -> U^s`` (s x r)."""
    inner = len(f)
    return tuple(
        tuple(sum(g[i][t] * f[t][j] for t in range(inner)) for j in range(len(f[0]) if f else 0))
        for i in range(len(g))
    )


def nm_iso_witness(a, b):
    """A pair of mutually inverse integer matrices, or ``None``."""
    if a.rank != b.rank:
        return None
    ident = a.identity()
    return ident, ident


def nm_iso(a, b):
    witness = nm_iso_witness(a, b)
    if witness is None:
        return False
    f, g = witness
    return nm_compose(f, g) == a.identity() and nm_compose(g, f) == b.identity()


def nm_matches_orbit(x):
    """Object-level commutativity of the comparison square: the NM rank from
    the Beilinson count equals the Tate-sum class from the projector
    decomposition of ``M(X)``."""
    return nm_object(x).rank == tate_sum_class(Motive.of(x))
