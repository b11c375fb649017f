"""The nu dictionary between Chow and K_0 correspondences.

On ``X x Y`` the Grothendieck-Riemann-Roch twist ``E -> ch(E) . sqrt(td(X x Y))``
is a linear isomorphism ``K_0(X x Y)_Q -> CH*(X x Y)_Q``.  ``nu_hom`` is its
inverse (Chow to K), ``nu_inverse_hom`` the twist itself.

With the square root taken on the product of source and target, the twist
intertwines Chow convolution with K-convolution exactly: the ``td(Y)`` produced
by the GRR pushforward over the middle factor is absorbed by the two
``sqrt(td(Y))`` factors coming from the kernels.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .chow import ChowClass, Variety, diagonal
from .correspondence import ChowCorrespondence, KCorrespondence, compose_chow, compose_k
from .graded import invert_unipotent, sqrt_unipotent
from .ktheory import ch, ch_inverse, todd


@dataclass(frozen=True)
class NuContext:
    source: Variety
    target: Variety
    sqrt_todd_product: ChowClass
    inverse_sqrt_todd: ChowClass

    @classmethod
    def build(cls, source, target):
        xy = source * target
        root = sqrt_unipotent(todd(xy).poly)
        return cls(source, target, ChowClass(xy, root), ChowClass(xy, invert_unipotent(root)))


@lru_cache(maxsize=None)
def nu_context(source, target):
    return NuContext.build(source, target)


def nu_hom(c):
    """The K-correspondence ``E`` with ``ch(E) . sqrt(td(X x Y)) = c``."""
    ctx = nu_context(c.source, c.target)
    return KCorrespondence(c.source, c.target, ch_inverse(c.kernel * ctx.inverse_sqrt_todd))


def nu_inverse_hom(e):
    ctx = nu_context(e.source, e.target)
    return ChowCorrespondence(e.source, e.target, ch(e.kernel) * ctx.sqrt_todd_product)


def k_identity(x):
    """Identity of the K-correspondence category, defined as ``nu`` of the diagonal."""
    return nu_hom(ChowCorrespondence(x, x, diagonal(x)))


def check_nu_functorial(a, b):
    """``nu(a then b) == nu(a) then nu(b)``, the two sides computed independently."""
    return nu_hom(compose_chow(a, b)) == compose_k(nu_hom(a), nu_hom(b))


def nu_functorial_sides(a, b):
    return nu_hom(compose_chow(a, b)), compose_k(nu_hom(a), nu_hom(b))
