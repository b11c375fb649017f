"""Correspondences between products of projective spaces.

A correspondence ``X -> Y`` is a class on ``X x Y`` (variables of ``X`` first).
Composition is the pull-multiply-push convolution over ``X x Y x Z``::

    compose(a, b) = p_XZ*( p_XY^* a . p_YZ^* b )        # a first, then b

At the K_0 level the same formula is evaluated with the tensor product and
the Grothendieck-Riemann-Roch pushforward.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .chow import ChowClass, Projection, Variety, parse_class, pullback, pushforward
from .ktheory import KClass, grr_pushforward, pullback_k, tensor
from .textform import ParseError


class CompositionError(ValueError):
    """The target of the first morphism is not the source of the second."""


def _check_kernel(source, target, kernel):
    if kernel.variety != source * target:
        raise ValueError(
            f"kernel lives on {kernel.variety}, expected {source * target}"
        )


@dataclass(frozen=True, eq=True)
class ChowCorrespondence:
    source: Variety
    target: Variety
    kernel: ChowClass

    def __post_init__(self):
        _check_kernel(self.source, self.target, self.kernel)

    @classmethod
    def identity(cls, x):
        from .chow import diagonal

        return cls(x, x, diagonal(x))

    @classmethod
    def zero(cls, x, y):
        return cls(x, y, ChowClass.zero(x * y))

    @classmethod
    def parse(cls, text):
        return parse_correspondence(text)

    def __add__(self, other):
        return ChowCorrespondence(self.source, self.target, self.kernel + other.kernel)

    def __sub__(self, other):
        return ChowCorrespondence(self.source, self.target, self.kernel - other.kernel)

    def __neg__(self):
        return ChowCorrespondence(self.source, self.target, -self.kernel)

    def scale(self, c):
        return ChowCorrespondence(self.source, self.target, self.kernel * c)

    def then(self, other):
        return compose_chow(self, other)

    def is_zero(self):
        return self.kernel.is_zero()

    def __str__(self):
        return f"corr {self.source} -> {self.target} : {self.kernel}"


@dataclass(frozen=True, eq=True)
class KCorrespondence:
    source: Variety
    target: Variety
    kernel: KClass

    def __post_init__(self):
        _check_kernel(self.source, self.target, self.kernel)

    def __add__(self, other):
        return KCorrespondence(self.source, self.target, self.kernel + other.kernel)

    def scale(self, c):
        return KCorrespondence(self.source, self.target, self.kernel.scale(c))

    def then(self, other):
        return compose_k(self, other)

    def __str__(self):
        return f"kcorr {self.source} -> {self.target} : {self.kernel}"


def _triple_projections(x, y, z):
    blocks = (x, y, z)
    return (
        Projection.of_blocks(blocks, (0, 1)),
        Projection.of_blocks(blocks, (1, 2)),
        Projection.of_blocks(blocks, (0, 2)),
    )


def _check_composable(a, b):
    if a.target != b.source:
        raise CompositionError(
            f"cannot compose {a.source} -> {a.target} with {b.source} -> {b.target}"
        )


def compose_chow(a, b):
    """Composite ``X -> Z`` of ``a: X -> Y`` followed by ``b: Y -> Z``."""
    _check_composable(a, b)
    p_xy, p_yz, p_xz = _triple_projections(a.source, a.target, b.target)
    middle = pullback(p_xy, a.kernel) * pullback(p_yz, b.kernel)
    return ChowCorrespondence(a.source, b.target, pushforward(p_xz, middle))


def compose_k(a, b):
    _check_composable(a, b)
    p_xy, p_yz, p_xz = _triple_projections(a.source, a.target, b.target)
    middle = tensor(pullback_k(p_xy, a.kernel), pullback_k(p_yz, b.kernel))
    return KCorrespondence(a.source, b.target, grr_pushforward(p_xz, middle))


def fm_action(a, alpha):
    """``p_Y*(kernel . p_X^* alpha)``: the map on Chow groups a kernel induces."""
    if alpha.variety != a.source:
        raise ValueError(f"class on {alpha.variety} cannot be acted on by a kernel from {a.source}")
    blocks = (a.source, a.target)
    p_x = Projection.of_blocks(blocks, (0,))
    p_y = Projection.of_blocks(blocks, (1,))
    return pushforward(p_y, a.kernel * pullback(p_x, alpha))


_CORR = re.compile(r"\s*corr\s+(?P<src>\S+)\s*->\s*(?P<tgt>\S+)\s*:(?P<body>.*)$", re.S)


def parse_correspondence(text):
    """Read ``"corr P1 -> P1 : h1 + h2"``."""
    m = _CORR.match(text)
    if not m:
        raise ParseError("expected 'corr <X> -> <Y> : <kernel>'", text, 0, text.split(" ", 1)[0])
    x = Variety.parse(m.group("src"))
    y = Variety.parse(m.group("tgt"))
    body = m.group("body")
    try:
        kernel = parse_class(body, x * y)
    except ParseError as exc:
        offset = m.start("body")
        raise ParseError(
            str(exc).split(" at ")[0], text,
            None if exc.pos is None else exc.pos + offset, exc.token,
        ) from None
    return ChowCorrespondence(x, y, kernel)
