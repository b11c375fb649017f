"""Seeded randomized invariant sweeps behind ``chowmot verify``.

Every suite is deterministic given ``(seed, count)``: its generator is keyed
by the suite name and the seed, and checks run in a fixed order.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb

from . import graded, randgen
from ._kernels_py import truncated_mul as py_truncated_mul
from .chow import (
    ChowClass,
    Projection,
    Variety,
    degree,
    diagonal,
    product_variety,
    pullback,
    pushforward,
)
from .correspondence import ChowCorrespondence, compose_chow, compose_k, fm_action
from .graded import monomial_basis
from .kernels import truncated_mul
from .ktheory import (
    KClass,
    box_basis,
    ch,
    ch_inverse,
    euler_pairing,
    grr_pushforward,
    tensor,
    todd,
)
from .motives import (
    Motive,
    MotiveMorphism,
    MotiveSum,
    SumMorphism,
    check_iso_pair,
    decompose_projective,
    hom_dimension,
    hom_space,
)
from .ncmot import is_unitriangular, nm_iso, nm_matches_orbit, nm_object
from .nu import check_nu_functorial, k_identity, nu_functorial_sides, nu_hom, nu_inverse_hom
from .orbit import (
    LAURENT,
    TATE,
    graded as graded_morphism,
    orbit_compose,
    orbit_hom_dimension,
    orbit_identity,
    orbit_iso_tate,
    project,
    tate_sum_class,
)

SUITES = ("ring", "chow", "grr", "corr", "motives", "orbit", "nu", "nm")

P = {n: Variety((n,)) for n in range(6)}
PT = Variety(())


@dataclass
class Sweep:
    suite: str
    checks: int = 0
    failures: int = 0
    counterexample: str | None = None
    counts: dict = field(default_factory=dict)

    def check(self, label, ok, detail=None):
        """Record one check; ``detail`` may be a string or a thunk, only
        rendered for the first failure."""
        self.checks += 1
        self.counts[label] = self.counts.get(label, 0) + 1
        if not ok:
            self.failures += 1
            if self.counterexample is None:
                if callable(detail):
                    detail = detail()
                self.counterexample = f"{label}: {detail or 'failed'}"

    @property
    def passed(self):
        return self.failures == 0

    def to_json(self):
        return {
            "suite": self.suite,
            "passed": self.passed,
            "checks": self.checks,
            "failures": self.failures,
            "counterexample": self.counterexample,
            "by_property": dict(sorted(self.counts.items())),
        }


def _show(*objs):
    return lambda: " | ".join(str(o) for o in objs)


# ring


RING_PROFILES = ((2,), (1, 1), (2, 1), (1, 1, 1), (3,), (2, 2))


def sweep_ring(seed, count):
    s = Sweep("ring")
    rng = randgen.make_rng("ring", seed)
    for _ in range(count):
        caps = rng.choice(RING_PROFILES)
        a, b, c = (randgen.poly(rng, caps) for _ in range(3))
        one = graded.SparsePoly.one(caps)
        zero = graded.SparsePoly.zero(caps)
        s.check("associativity", (a * b) * c == a * (b * c), _show(a, b, c))
        s.check("commutativity", a * b == b * a, _show(a, b))
        s.check("distributivity", a * (b + c) == a * b + a * c, _show(a, b, c))
        s.check("unit", a * one == a and a + zero == a and a - a == zero, _show(a))
        ab = a * b
        s.check("truncation_ideal", all(all(x <= n for x, n in zip(e, caps)) for e in ab.terms), _show(ab))
        d = rng.randint(0, sum(caps))
        rhs = zero
        for i in range(d + 1):
            rhs = rhs + a.graded_piece(i) * b.graded_piece(d - i)
        s.check("grading", ab.graded_piece(d) == rhs, _show(a, b, d))
        s.check("graded_decomposition", sum((a.graded_piece(i) for i in range(sum(caps) + 1)), zero) == a, _show(a))
        u = randgen.unipotent(rng, caps)
        s.check("sqrt_squared", graded.sqrt_unipotent(u) ** 2 == u, _show(u))
        s.check("inverse", graded.invert_unipotent(u) * u == one, _show(u))
        n1, n2 = randgen.nilpotent(rng, caps), randgen.nilpotent(rng, caps)
        s.check("exp_additive", graded.exp_nilpotent(n1 + n2) == graded.exp_nilpotent(n1) * graded.exp_nilpotent(n2), _show(n1, n2))
        ea, na, _ = graded._integerize(a)
        eb, nb, _ = graded._integerize(b)
        s.check("kernel_backends_agree", truncated_mul(caps, ea, na, eb, nb) == py_truncated_mul(caps, ea, na, eb, nb), _show(a, b))
    return s


# chow


CHOW_TRIPLES = (
    (P[1], P[1], P[1]),
    (P[1], P[2], P[1]),
    (P[2], P[1], P[2]),
    (P[1], P[1], P[2]),
    (P[2], P[2], P[2]),
    (P[1], P[2], P[3]),
    (Variety((1, 1)), P[1], P[2]),
)


def _block_subsets():
    for r in (1, 2):
        yield from itertools.combinations(range(3), r)


def sweep_chow(seed, count):
    s = Sweep("chow")
    rng = randgen.make_rng("chow", seed)
    per_case = max(1, count // len(CHOW_TRIPLES))
    for blocks in CHOW_TRIPLES:
        src = product_variety(*blocks)
        for keep in _block_subsets():
            p = Projection.of_blocks(blocks, keep)
            for _ in range(max(1, per_case // 6)):
                a = randgen.chow_class(rng, p.target)
                b = randgen.chow_class(rng, src)
                lhs = pushforward(p, pullback(p, a) * b)
                rhs = a * pushforward(p, b)
                s.check("projection_formula", lhs == rhs, _show(blocks, keep, a, b))
                a2 = randgen.chow_class(rng, p.target)
                s.check("pullback_ring_map", pullback(p, a * a2) == pullback(p, a) * pullback(p, a2), _show(a, a2))
                d = rng.randint(0, src.dim)
                piece = b.graded_piece(d)
                pushed = pushforward(p, piece)
                s.check("pushforward_degree", pushed.is_homogeneous(d - p.relative_dim) or pushed.is_zero(), _show(piece))
        x, y, z = blocks
        for _ in range(per_case):
            c = randgen.chow_class(rng, src)
            via = pushforward(Projection.of_blocks((x, z), (0,)), pushforward(Projection.of_blocks(blocks, (0, 2)), c))
            direct = pushforward(Projection.of_blocks(blocks, (0,)), c)
            s.check("base_change", via == direct, _show(blocks, c))
    for x in (PT, P[1], P[2], P[3], Variety((1, 1)), Variety((1, 2))):
        p1 = Projection.of_blocks((x, x), (0,))
        p2 = Projection.of_blocks((x, x), (1,))
        for _ in range(max(1, count // 6)):
            alpha, beta = randgen.chow_class(rng, x), randgen.chow_class(rng, x)
            lhs = degree(diagonal(x) * pullback(p1, alpha) * pullback(p2, beta))
            s.check("diagonal_pairing", lhs == degree(alpha * beta), _show(x, alpha, beta))
    return s


# grr


GRR_CASES = (
    ((P[1], P[1]), (1,)),
    ((P[1], P[1]), (0,)),
    ((P[2], P[1]), (0,)),
    ((P[1], P[1], P[1]), (0, 1)),
    ((P[1], P[2]), ()),
)


def grr_projection(blocks, keep):
    return Projection.of_blocks(blocks, keep)


def grr_identity_holds(p, e):
    lhs = ch(grr_pushforward(p, e)) * todd(p.target)
    rhs = pushforward(p, ch(e) * todd(p.source))
    return lhs == rhs


def sweep_grr(seed, count):
    s = Sweep("grr")
    rng = randgen.make_rng("grr", seed)
    for blocks, keep in GRR_CASES:
        p = grr_projection(blocks, keep)
        for _ in range(count):
            e = randgen.kclass(rng, p.source)
            s.check("grr_identity", grr_identity_holds(p, e), _show(blocks, keep, e))
    blocks = (P[1], P[1], P[2])
    for _ in range(max(1, count // 4)):
        e = randgen.kclass(rng, product_variety(*blocks))
        two_step = grr_pushforward(
            Projection.of_blocks((P[1], P[2]), (0,)),
            grr_pushforward(Projection.of_blocks(blocks, (0, 2)), e),
        )
        s.check("grr_functorial", two_step == grr_pushforward(Projection.of_blocks(blocks, (0,)), e), _show(e))
    for x in (P[1], P[2], Variety((1, 1)), Variety((2, 1))):
        for _ in range(max(1, count // 4)):
            e, f = randgen.kclass(rng, x), randgen.kclass(rng, x)
            s.check("ch_ring_map", ch(tensor(e, f)) == ch(e) * ch(f), _show(e, f))
            s.check("ch_round_trip", ch_inverse(ch(e)) == e, _show(e))
            c = randgen.chow_class(rng, x)
            s.check("ch_inverse_round_trip", ch(ch_inverse(c)) == c, _show(c))
        for e in box_basis(x):
            for f in box_basis(x):
                chi = euler_pairing(e, f)
                s.check("hrr_integrality", chi.denominator == 1, _show(e, f, chi))
        for d in monomial_basis(x.factors):
            expected = 1
            for n, k in zip(x.factors, d):
                expected *= comb(n + k, n)
            got = euler_pairing(KClass.trivial(x), KClass(x, {d: 1}))
            s.check("kunneth_euler", got == expected, _show(x, d, got))
    for x, y in ((P[1], P[2]), (P[2], P[2]), (Variety((1, 1)), P[1])):
        px = Projection.of_blocks((x, y), (0,))
        py = Projection.of_blocks((x, y), (1,))
        s.check("todd_product", todd(x * y) == pullback(px, todd(x)) * pullback(py, todd(y)), _show(x, y))
    return s


# correspondences


def sweep_corr(seed, count):
    s = Sweep("corr")
    rng = randgen.make_rng("corr", seed)
    w, x, y, z = P[1], P[1], P[2], P[1]
    for _ in range(count):
        a = randgen.correspondence(rng, w, x)
        b = randgen.correspondence(rng, x, y)
        c = randgen.correspondence(rng, y, z)
        s.check("associativity", compose_chow(compose_chow(a, b), c) == compose_chow(a, compose_chow(b, c)), _show(a, b, c))
        s.check("identity", compose_chow(ChowCorrespondence.identity(w), a) == a and compose_chow(a, ChowCorrespondence.identity(x)) == a, _show(a))
        alpha = randgen.chow_class(rng, w)
        s.check("fm_functorial", fm_action(compose_chow(a, b), alpha) == fm_action(b, fm_action(a, alpha)), _show(a, b, alpha))
        a2 = randgen.correspondence(rng, w, x)
        t = randgen.rational(rng)
        s.check("bilinear", compose_chow(a + a2.scale(t), b) == compose_chow(a, b) + compose_chow(a2, b).scale(t), _show(a, a2, b))
    for _ in range(max(1, count // 4)):
        a = nu_hom(randgen.correspondence(rng, w, x))
        b = nu_hom(randgen.correspondence(rng, x, y))
        c = nu_hom(randgen.correspondence(rng, y, z))
        s.check("k_associativity", compose_k(compose_k(a, b), c) == compose_k(a, compose_k(b, c)), _show(a, b, c))
        s.check("k_identity", compose_k(k_identity(w), a) == a and compose_k(a, k_identity(x)) == a, _show(a))
    return s


# motives


def poincare(x):
    """Betti numbers ``b_d`` of ``x`` from the product of ``1 + q + ... + q^n``."""
    coeffs = [1]
    for n in x.factors:
        new = [0] * (len(coeffs) + n)
        for i, c in enumerate(coeffs):
            for j in range(n + 1):
                new[i + j] += c
        coeffs = new
    return coeffs


def kunneth_hom_dim(x, y, t):
    """Oracle for ``dim Hom(M(X), M(Y)(t))``: Betti numbers of ``X x Y`` in
    degree ``dim X + t``."""
    bxy = poincare(x * y)
    d = x.dim + t
    return bxy[d] if 0 <= d < len(bxy) else 0


def check_projective_decomposition(s, n):
    x = P[n]
    parts = decompose_projective(n)
    projs = [m.projector for m, _ in parts]
    total = projs[0]
    for q in projs[1:]:
        total = total + q
    s.check("projectors_sum_to_diagonal", total == ChowCorrespondence.identity(x), _show(n))
    for i, p in enumerate(projs):
        for j, q in enumerate(projs):
            expected = p if i == j else ChowCorrespondence.zero(x, x)
            s.check("orthogonal_idempotents", compose_chow(p, q) == expected, _show(n, i, j))
    for i, (m, (f, g)) in enumerate(parts):
        s.check("witness_target_twist", f.target == Motive.unit(-i), _show(n, i, f.target))
        s.check("witness_pair", check_iso_pair(f, g), _show(n, i, f, g))


def sweep_motives(seed, count):
    s = Sweep("motives")
    rng = randgen.make_rng("motives", seed)
    for n in range(6):
        check_projective_decomposition(s, n)
    for a in range(5):
        for b in range(5 - a):
            x = Variety(tuple(v for v in (a, b) if v))
            for t in (-1, 0, 1):
                y = P[1]
                got = hom_dimension(Motive.of(x), Motive.of(y, t))
                s.check("kunneth_hom_dimension", got == kunneth_hom_dim(x, y, t), _show(x, y, t, got))
    for _ in range(max(1, count // 10)):
        n = rng.randint(0, 3)
        parts = decompose_projective(n)
        _, (f, g) = rng.choice(parts)
        c = randgen.rational(rng)
        s.check("iso_rescaling", check_iso_pair(f.scale(c), g.scale(1 / c)), _show(n, c))
        s.check("iso_rescaling_detects", not check_iso_pair(f.scale(c), g) or c == 1, _show(n, c))
    pairs = [(Motive.of(P[1]), Motive.of(P[1])), (Motive.of(P[2]), Motive.unit(0)),
             (Motive.unit(0), Motive.of(Variety((1, 1))))]
    for m, nmot in pairs:
        base = hom_dimension(m, nmot)
        for i in range(-3, 4):
            s.check("twist_autoequivalence", hom_dimension(m.shift(i), nmot.shift(i)) == base, _show(m, nmot, i))
    return s


# orbit


def random_laurent(rng, span=3, density=0.5):
    comps = {i: randgen.rational(rng) for i in range(-span, span + 1) if rng.random() < density}
    return graded_morphism(LAURENT, LAURENT.OBJECT, LAURENT.OBJECT, comps)


def random_sum_morphism(rng, source, target, density=0.7):
    def entry(j, i):
        m, n = source.summands[i], target.summands[j]
        acc = MotiveMorphism.zero(m, n)
        for b in hom_space(m, n):
            if rng.random() < density:
                acc = acc + MotiveMorphism._make(m, n, b * randgen.rational(rng))
        return acc

    return SumMorphism.from_function(source, target, entry)


def random_tate_graded(rng, source, target, density=0.7):
    lo = min(m.twist for m in source) - max(n.twist for n in target) - max(m.variety.dim for m in source)
    hi = max(m.twist for m in source) - min(n.twist for n in target) + max(n.variety.dim for n in target)
    comps = {}
    for i in range(lo, hi + 1):
        if rng.random() < density:
            comps[i] = random_sum_morphism(rng, source, target.shift(i))
    return graded_morphism(TATE, source, target, comps)


TATE_OBJECTS = (
    MotiveSum((Motive.of(P[1]),)),
    MotiveSum((Motive.unit(0), Motive.lefschetz(1))),
    MotiveSum((Motive.unit(2),)),
    MotiveSum((Motive.of(P[2], 1), Motive.unit(-1))),
)


def sweep_orbit(seed, count):
    s = Sweep("orbit")
    rng = randgen.make_rng("orbit", seed)
    ident = orbit_identity(LAURENT, LAURENT.OBJECT)
    for _ in range(count):
        f, g, h = (random_laurent(rng) for _ in range(3))
        s.check("laurent_associativity", orbit_compose(LAURENT, orbit_compose(LAURENT, f, g), h) == orbit_compose(LAURENT, f, orbit_compose(LAURENT, g, h)), _show(f, g, h))
        s.check("laurent_unit", orbit_compose(LAURENT, ident, f) == f and orbit_compose(LAURENT, f, ident) == f, _show(f))
    for _ in range(count):
        a, b, c, d = (rng.choice(TATE_OBJECTS) for _ in range(4))
        f = random_tate_graded(rng, a, b)
        g = random_tate_graded(rng, b, c)
        h = random_tate_graded(rng, c, d)
        s.check("tate_associativity", orbit_compose(TATE, orbit_compose(TATE, f, g), h) == orbit_compose(TATE, f, orbit_compose(TATE, g, h)), _show(f, g, h))
        s.check("tate_unit", orbit_compose(TATE, orbit_identity(TATE, a), f) == f and orbit_compose(TATE, f, orbit_identity(TATE, b)) == f, _show(f))
        u = random_sum_morphism(rng, a, b)
        v = random_sum_morphism(rng, b, c)
        s.check("project_functor", project(TATE, u.then(v)) == orbit_compose(TATE, project(TATE, u), project(TATE, v)), _show(u, v))
    for n in range(6):
        units = MotiveSum.units([0] * (n + 1))
        s.check("orbit_iso_projective", orbit_iso_tate(MotiveSum((Motive.of(P[n]),)), units), _show(n))
        s.check("tate_sum_class", tate_sum_class(Motive.of(P[n])) == n + 1, _show(n))
    s.check("orbit_iso_rejects", not orbit_iso_tate(MotiveSum.units([0, 0]), MotiveSum.units([0])), _show("1+1", "1"))
    for n in range(4):
        m = Motive.of(P[n])
        s.check("orbit_end_dimension", orbit_hom_dimension(m, m) == (n + 1) ** 2, _show(n))
    return s


# nu


NU_TRIPLES = ((P[1], P[1], P[1]), (P[1], P[2], P[1]), (P[2], P[1], P[2]))


def nu_pairs(triples, seed, count):
    """Seeded composable pairs ``(a, b)``, ``count`` per triple."""
    rng = randgen.make_rng("nu", seed)
    for x, y, z in triples:
        for _ in range(count):
            yield randgen.correspondence(rng, x, y), randgen.correspondence(rng, y, z)


def nu_sweep(triples, seed, count, suite="nu"):
    s = Sweep(suite)
    for a, b in nu_pairs(triples, seed, count):

        def detail(a=a, b=b):
            lhs, rhs = nu_functorial_sides(a, b)
            return f"{a} ; {b} ; lhs={lhs} ; rhs={rhs}"

        s.check("nu_functorial", check_nu_functorial(a, b), detail)
    return s


def nu_entries(triples, seed, count):
    """Per-pair functoriality records ``{pair, lhs, rhs, equal}``."""
    out = []
    for a, b in nu_pairs(triples, seed, count):
        lhs, rhs = nu_functorial_sides(a, b)
        out.append({"pair": [str(a), str(b)], "lhs": str(lhs), "rhs": str(rhs), "equal": lhs == rhs})
    return out


def sweep_nu(seed, count):
    s = nu_sweep(NU_TRIPLES, seed, count)
    rng = randgen.make_rng("nu-extra", seed)
    for x, y in ((PT, PT), (P[1], P[1]), (P[1], P[2]), (P[2], P[2]), (Variety((1, 1)), P[1])):
        for e in monomial_basis((x * y).factors):
            c = ChowCorrespondence(x, y, ChowClass.monomial(x * y, e))
            s.check("nu_round_trip_basis", nu_inverse_hom(nu_hom(c)) == c, _show(c))
        for _ in range(max(1, count // 10)):
            c = randgen.correspondence(rng, x, y)
            s.check("nu_round_trip", nu_inverse_hom(nu_hom(c)) == c, _show(c))
            e = nu_hom(c)
            s.check("nu_identity", compose_k(k_identity(x), e) == e and compose_k(e, k_identity(y)) == e, _show(c))
    return s


# noncommutative motives


def varieties_up_to(max_dim):
    """Every ordered product of positive-dimensional projective spaces (and
    the point) of total dimension at most ``max_dim``."""
    out = [PT]

    def rec(prefix, budget):
        for n in range(1, budget + 1):
            x = prefix + (n,)
            out.append(Variety(x))
            rec(x, budget - n)

    rec((), max_dim)
    return out


def sweep_nm(seed, count):
    s = Sweep("nm")
    rng = randgen.make_rng("nm", seed)
    family = varieties_up_to(5)
    for x in family:
        nm = nm_object(x)
        s.check("unitriangular", is_unitriangular(nm.euler), _show(x))
        s.check("rank_equals_chow_rank", nm.rank == len(monomial_basis(x.factors)), _show(x))
        s.check("nm_matches_orbit", nm_matches_orbit(x), _show(x))
    small = varieties_up_to(3)
    for _ in range(count):
        x, y = rng.choice(small), rng.choice(small)
        s.check("rank_multiplicative", nm_object(x * y).rank == nm_object(x).rank * nm_object(y).rank, _show(x, y))
        z = rng.choice(small)
        a, b, c = nm_object(x), nm_object(y), nm_object(z)
        s.check("nm_iso_reflexive", nm_iso(a, a), _show(x))
        s.check("nm_iso_symmetric", nm_iso(a, b) == nm_iso(b, a), _show(x, y))
        s.check("nm_iso_transitive", not (nm_iso(a, b) and nm_iso(b, c)) or nm_iso(a, c), _show(x, y, z))
    return s


RUNNERS = {
    "ring": sweep_ring,
    "chow": sweep_chow,
    "grr": sweep_grr,
    "corr": sweep_corr,
    "motives": sweep_motives,
    "orbit": sweep_orbit,
    "nu": sweep_nu,
    "nm": sweep_nm,
}


def run_suite(name, seed=0, count=100):
    if name == "all":
        return [RUNNERS[n](seed, count) for n in SUITES]
    if name not in RUNNERS:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES + ('all',))}")
    return [RUNNERS[name](seed, count)]
