"""The bicategory interface, the strict instance of finite categories, the two
dualities, pseudofunctors and the exhaustive law checkers.

Conventions used everywhere in the package:

* ``comp1(f, g)`` is diagrammatic, "f then g";
* ``lwhisker(f, t)`` is ``f ◁ t`` and ``rwhisker(t, g)`` is ``t ▷ g``;
* ``lunitor(f): id ; f => f`` and ``runitor(f): f ; id => f``;
* ``lassociator(f, g, h): f ; (g ; h) => (f ; g) ; h`` and ``rassociator`` the
  other way round.

Every structural 2-cell comes with a chosen inverse, so no checker ever has to
search for one.
"""
from __future__ import annotations

import itertools
from functools import lru_cache
from dataclasses import dataclass
from typing import Callable

from . import fincat
from .errors import BoundExceeded, NotEnumerable
from .fincat import FinCat, Functor, NatTrans
from .report import LawReport

DEFAULT_LAW_LIMIT = 2_000_000


class Bicategory:
    """Abstract bicategory.  Subclasses supply the cells and operations."""

    name = "B"

    # -- enumeration
    def ones(self, x, y):
        raise NotEnumerable(f"1-cells {x!r} -> {y!r} of {self.name} are not enumerable")

    def twos(self, f, g):
        raise NotEnumerable(f"2-cells of {self.name} are not enumerable")

    # -- boundaries
    def src1(self, f): raise NotImplementedError
    def tgt1(self, f): raise NotImplementedError
    def src2(self, a): raise NotImplementedError
    def tgt2(self, a): raise NotImplementedError

    # -- structure
    def id1(self, x): raise NotImplementedError
    def comp1(self, f, g): raise NotImplementedError
    def id2(self, f): raise NotImplementedError
    def vcomp(self, a, b): raise NotImplementedError
    def lwhisker(self, f, a): raise NotImplementedError
    def rwhisker(self, a, g): raise NotImplementedError
    def lunitor(self, f): raise NotImplementedError
    def linvunitor(self, f): raise NotImplementedError
    def runitor(self, f): raise NotImplementedError
    def rinvunitor(self, f): raise NotImplementedError
    def lassociator(self, f, g, h): raise NotImplementedError
    def rassociator(self, f, g, h): raise NotImplementedError

    def eq2(self, a, b):
        return a == b

    # hooks for layered instances: membership of the cell in its carrier
    def well_typed_1(self, f):
        return True

    def well_typed_2(self, a):
        return True

    def vcomps(self, *cells):
        out = cells[0]
        for c in cells[1:]:
            out = self.vcomp(out, c)
        return out

    def hom(self, x, y):
        """The hom-category ``x -> y`` as a FinCat (1-cells, 2-cells, vcomp)."""
        cache = self.__dict__.setdefault("_hom_cache", {})
        key = (x, y, fincat.current_bound())
        if key not in cache:
            obs = list(self.ones(x, y))
            morphisms = []
            for f in obs:
                for g in obs:
                    morphisms.extend((a, f, g) for a in self.twos(f, g))
            by_src = {}
            for a, f, _ in morphisms:
                by_src.setdefault(f, []).append(a)
            compose = {}
            for a, _, g in morphisms:
                for b in by_src.get(g, ()):
                    compose[a, b] = self.vcomp(a, b)
            cache[key] = FinCat(obs, morphisms, {f: self.id2(f) for f in obs}, compose,
                                name=f"{self.name}({_label(x)},{_label(y)})")
        return cache[key]

    def __repr__(self):
        return self.name


def _label(x):
    name = getattr(x, "name", None)
    return name if isinstance(name, str) else repr(x)


# ------------------------------------------------------------------ CatFin


class CatFin(Bicategory):
    """Finite categories, functors and natural transformations (strict)."""

    name = "CatFin"

    def ones(self, x, y): return fincat.functors(x, y)
    def twos(self, f, g): return fincat.nat_transs(f, g)
    def src1(self, f): return f.source
    def tgt1(self, f): return f.target
    def src2(self, a): return a.source
    def tgt2(self, a): return a.target
    def id1(self, x): return fincat.identity_functor(x)
    def comp1(self, f, g): return fincat.compose_functors(f, g)
    def id2(self, f): return fincat.identity_nat(f)
    def vcomp(self, a, b): return fincat.vcomp(a, b)
    def lwhisker(self, f, a): return fincat.lwhisker(f, a)
    def rwhisker(self, a, g): return fincat.rwhisker(a, g)

    def lunitor(self, f):
        return NatTrans(self.comp1(self.id1(f.source), f), f, fincat.identity_nat(f).components)

    def linvunitor(self, f):
        return NatTrans(f, self.comp1(self.id1(f.source), f), fincat.identity_nat(f).components)

    def runitor(self, f):
        return NatTrans(self.comp1(f, self.id1(f.target)), f, fincat.identity_nat(f).components)

    def rinvunitor(self, f):
        return NatTrans(f, self.comp1(f, self.id1(f.target)), fincat.identity_nat(f).components)

    def lassociator(self, f, g, h):
        return fincat.identity_nat(self.comp1(self.comp1(f, g), h))

    def rassociator(self, f, g, h):
        return fincat.identity_nat(self.comp1(self.comp1(f, g), h))

    def hom(self, x, y):
        return fincat.functor_category(x, y)


CAT_FIN = CatFin()


def cat_fin_bicat():
    return CAT_FIN


# --------------------------------------------------------------- dualities


class Op1(Bicategory):
    """Reverse the 1-cells; 2-cells keep their direction."""

    def __init__(self, base):
        self.base = base
        self.name = f"op1({base.name})"

    def ones(self, x, y): return self.base.ones(y, x)
    def twos(self, f, g): return self.base.twos(f, g)
    def src1(self, f): return self.base.tgt1(f)
    def tgt1(self, f): return self.base.src1(f)
    def src2(self, a): return self.base.src2(a)
    def tgt2(self, a): return self.base.tgt2(a)
    def id1(self, x): return self.base.id1(x)
    def comp1(self, f, g): return self.base.comp1(g, f)
    def id2(self, f): return self.base.id2(f)
    def vcomp(self, a, b): return self.base.vcomp(a, b)
    def lwhisker(self, f, a): return self.base.rwhisker(a, f)
    def rwhisker(self, a, g): return self.base.lwhisker(g, a)
    def lunitor(self, f): return self.base.runitor(f)
    def linvunitor(self, f): return self.base.rinvunitor(f)
    def runitor(self, f): return self.base.lunitor(f)
    def rinvunitor(self, f): return self.base.linvunitor(f)
    def lassociator(self, f, g, h): return self.base.rassociator(h, g, f)
    def rassociator(self, f, g, h): return self.base.lassociator(h, g, f)
    def eq2(self, a, b): return self.base.eq2(a, b)
    def well_typed_1(self, f): return self.base.well_typed_1(f)
    def well_typed_2(self, a): return self.base.well_typed_2(a)
    def hom(self, x, y): return self.base.hom(y, x)


class Op2(Bicategory):
    """Reverse the 2-cells; 1-cells keep their direction."""

    def __init__(self, base):
        self.base = base
        self.name = f"op2({base.name})"

    def ones(self, x, y): return self.base.ones(x, y)
    def twos(self, f, g): return self.base.twos(g, f)
    def src1(self, f): return self.base.src1(f)
    def tgt1(self, f): return self.base.tgt1(f)
    def src2(self, a): return self.base.tgt2(a)
    def tgt2(self, a): return self.base.src2(a)
    def id1(self, x): return self.base.id1(x)
    def comp1(self, f, g): return self.base.comp1(f, g)
    def id2(self, f): return self.base.id2(f)
    def vcomp(self, a, b): return self.base.vcomp(b, a)
    def lwhisker(self, f, a): return self.base.lwhisker(f, a)
    def rwhisker(self, a, g): return self.base.rwhisker(a, g)
    def lunitor(self, f): return self.base.linvunitor(f)
    def linvunitor(self, f): return self.base.lunitor(f)
    def runitor(self, f): return self.base.rinvunitor(f)
    def rinvunitor(self, f): return self.base.runitor(f)
    def lassociator(self, f, g, h): return self.base.rassociator(f, g, h)
    def rassociator(self, f, g, h): return self.base.lassociator(f, g, h)
    def eq2(self, a, b): return self.base.eq2(a, b)
    def well_typed_1(self, f): return self.base.well_typed_1(f)
    def well_typed_2(self, a): return self.base.well_typed_2(a)
    def hom(self, x, y): return self.base.hom(x, y).opposite()


@lru_cache(maxsize=None)
def op1(b):
    return Op1(b)


@lru_cache(maxsize=None)
def op2(b):
    return Op2(b)


# ------------------------------------------------------------ 2-cell tools


def is_invertible_2cell(b, a):
    """The inverse of ``a`` found by exhaustive search, or ``None``."""
    f, g = b.src2(a), b.tgt2(a)
    for s in b.twos(g, f):
        if b.eq2(b.vcomp(a, s), b.id2(f)) and b.eq2(b.vcomp(s, a), b.id2(g)):
            return s
    return None


def all_inverses(b, a):
    f, g = b.src2(a), b.tgt2(a)
    return [s for s in b.twos(g, f)
            if b.eq2(b.vcomp(a, s), b.id2(f)) and b.eq2(b.vcomp(s, a), b.id2(g))]


def postcomp_functor(b, f, w):
    """``hom(w, x) -> hom(w, y)`` sending ``g`` to ``g ; f``."""
    src = b.hom(w, b.src1(f))
    tgt = b.hom(w, b.tgt1(f))
    return Functor(src, tgt,
                   {g: b.comp1(g, f) for g in src.objects},
                   {a: b.rwhisker(a, f) for a in src.mor_ids})


def precomp_functor(b, f, z):
    """``hom(y, z) -> hom(x, z)`` sending ``g`` to ``f ; g``."""
    src = b.hom(b.tgt1(f), z)
    tgt = b.hom(b.src1(f), z)
    return Functor(src, tgt,
                   {g: b.comp1(f, g) for g in src.objects},
                   {a: b.lwhisker(f, a) for a in src.mor_ids})


# ---------------------------------------------------------- pseudofunctors


@dataclass
class Pseudofunctor:
    """A pseudofunctor with chosen inverses of its identitor and compositor.

    ``identitor(x): id1(F x) => F(id1 x)`` and
    ``compositor(f, g): F f ; F g => F(f ; g)``.
    """

    source: Bicategory
    target: Bicategory
    ob: Callable
    mor: Callable
    cell: Callable
    identitor: Callable
    identitor_inv: Callable
    compositor: Callable
    compositor_inv: Callable
    name: str = "F"

    def __repr__(self):
        return self.name


def identity_psfunctor(b):
    return Pseudofunctor(
        b, b, lambda x: x, lambda f: f, lambda a: a,
        lambda x: b.id2(b.id1(x)), lambda x: b.id2(b.id1(x)),
        lambda f, g: b.id2(b.comp1(f, g)), lambda f, g: b.id2(b.comp1(f, g)),
        name=f"id({b.name})",
    )


def compose_psfunctors(p, q):
    """``p`` then ``q``."""
    t = q.target

    def identitor(x):
        return t.vcomp(q.identitor(p.ob(x)), q.cell(p.identitor(x)))

    def identitor_inv(x):
        return t.vcomp(q.cell(p.identitor_inv(x)), q.identitor_inv(p.ob(x)))

    def compositor(f, g):
        return t.vcomp(q.compositor(p.mor(f), p.mor(g)), q.cell(p.compositor(f, g)))

    def compositor_inv(f, g):
        return t.vcomp(q.cell(p.compositor_inv(f, g)), q.compositor_inv(p.mor(f), p.mor(g)))

    return Pseudofunctor(p.source, t, lambda x: q.ob(p.ob(x)), lambda f: q.mor(p.mor(f)),
                         lambda a: q.cell(p.cell(a)), identitor, identitor_inv,
                         compositor, compositor_inv, name=f"{p.name};{q.name}")


# ------------------------------------------------------------ law checkers


class _Sample:
    """Objects, the 1-cells between them and the 2-cells between those."""

    def __init__(self, b, objects, one_cells=None):
        self.b = b
        self.objects = list(dict.fromkeys(objects))
        self.homs = {}
        if one_cells is None:
            for x in self.objects:
                for y in self.objects:
                    self.homs[x, y] = list(b.ones(x, y))
        else:
            for x in self.objects:
                for y in self.objects:
                    self.homs[x, y] = []
            for f in dict.fromkeys(one_cells):
                key = (b.src1(f), b.tgt1(f))
                if key in self.homs:
                    self.homs[key].append(f)
        self._twos = {}

    def ones(self, x, y):
        return self.homs[x, y]

    def all_ones(self):
        return [f for fs in self.homs.values() for f in fs]

    def twos(self, f, g):
        key = (f, g)
        if key not in self._twos:
            self._twos[key] = list(self.b.twos(f, g))
        return self._twos[key]

    def parallel(self, x, y):
        """All (f, g, t) with t: f => g in the sampled hom x -> y."""
        fs = self.homs[x, y]
        return [(f, g, t) for f in fs for g in fs for t in self.twos(f, g)]


class _Budget:
    def __init__(self, rep, limit):
        self.rep = rep
        self.limit = limit

    def tick(self):
        if self.rep.checked > self.limit:
            raise BoundExceeded(f"law checking exceeded {self.limit} instances")


def _typed(b, rep, law, cell, src, tgt, *witness):
    ok = b.src2(cell) == src and b.tgt2(cell) == tgt and b.well_typed_2(cell)
    return rep.expect(ok, law, *witness)


def check_bicat_laws(b, objects, one_cells=None, limit=DEFAULT_LAW_LIMIT):
    """Check the standard bicategory laws on every instance drawn from the sample.

    The sample consists of ``objects``, the 1-cells between them (all of them,
    or just ``one_cells`` if given) and every 2-cell between sampled 1-cells.
    Laws are named after the equation they test; ``typing`` instances check
    that every operation lands in the expected hom.
    """
    rep = LawReport()
    s = _Sample(b, objects, one_cells)
    budget = _Budget(rep, limit)
    eq = b.eq2
    obs = s.objects

    for x in obs:
        rep.expect(b.src1(b.id1(x)) == x and b.tgt1(b.id1(x)) == x and b.well_typed_1(b.id1(x)),
                   "typing", "id1", x)
    for x in obs:
        for y in obs:
            for f in s.ones(x, y):
                rep.expect(b.well_typed_1(f), "typing", "one_cell", f)
                i = b.id2(f)
                _typed(b, rep, "typing", i, f, f, "id2", f)
                ix, iy = b.id1(x), b.id1(y)
                _typed(b, rep, "typing", b.lunitor(f), b.comp1(ix, f), f, "lunitor", f)
                _typed(b, rep, "typing", b.linvunitor(f), f, b.comp1(ix, f), "linvunitor", f)
                _typed(b, rep, "typing", b.runitor(f), b.comp1(f, iy), f, "runitor", f)
                _typed(b, rep, "typing", b.rinvunitor(f), f, b.comp1(f, iy), "rinvunitor", f)
                rep.expect(eq(b.vcomp(b.lunitor(f), b.linvunitor(f)), b.id2(b.comp1(ix, f))),
                           "lunitor_linvunitor", f)
                rep.expect(eq(b.vcomp(b.linvunitor(f), b.lunitor(f)), i), "linvunitor_lunitor", f)
                rep.expect(eq(b.vcomp(b.runitor(f), b.rinvunitor(f)), b.id2(b.comp1(f, iy))),
                           "runitor_rinvunitor", f)
                rep.expect(eq(b.vcomp(b.rinvunitor(f), b.runitor(f)), i), "rinvunitor_runitor", f)

            for f, g, t in s.parallel(x, y):
                _typed(b, rep, "typing", t, f, g, "two_cell", t)
                rep.expect(eq(b.vcomp(b.id2(f), t), t), "id2_left", t)
                rep.expect(eq(b.vcomp(t, b.id2(g)), t), "id2_right", t)
                rep.expect(eq(b.vcomp(b.lwhisker(b.id1(x), t), b.lunitor(g)),
                              b.vcomp(b.lunitor(f), t)), "vcomp_lunitor", t)
                rep.expect(eq(b.vcomp(b.rwhisker(t, b.id1(y)), b.runitor(g)),
                              b.vcomp(b.runitor(f), t)), "vcomp_runitor", t)
                for h in s.ones(x, y):
                    for u in s.twos(g, h):
                        tu = b.vcomp(t, u)
                        _typed(b, rep, "typing", tu, f, h, "vcomp", t, u)
                        for k in s.ones(x, y):
                            for v in s.twos(h, k):
                                rep.expect(eq(b.vcomp(t, b.vcomp(u, v)), b.vcomp(tu, v)),
                                           "vassoc", t, u, v)
                budget.tick()

    for x, y, z in itertools.product(obs, repeat=3):
        for f in s.ones(x, y):
            for g in s.ones(y, z):
                fg = b.comp1(f, g)
                rep.expect(b.src1(fg) == x and b.tgt1(fg) == z and b.well_typed_1(fg),
                           "typing", "comp1", f, g)
                rep.expect(eq(b.lwhisker(f, b.id2(g)), b.id2(fg)), "lwhisker_id2", f, g)
                rep.expect(eq(b.rwhisker(b.id2(f), g), b.id2(fg)), "id2_rwhisker", f, g)
                # triangle
                lhs = b.vcomp(b.lassociator(f, b.id1(y), g), b.rwhisker(b.runitor(f), g))
                rep.expect(eq(lhs, b.lwhisker(f, b.lunitor(g))), "triangle", f, g)
            # whiskering on the right-hand factor
            for g, g2, t in s.parallel(y, z):
                w = b.lwhisker(f, t)
                _typed(b, rep, "typing", w, b.comp1(f, g), b.comp1(f, g2), "lwhisker", f, t)
                for g3 in s.ones(y, z):
                    for u in s.twos(g2, g3):
                        rep.expect(eq(b.lwhisker(f, b.vcomp(t, u)),
                                      b.vcomp(w, b.lwhisker(f, u))), "lwhisker_vcomp", f, t, u)
        for g in s.ones(y, z):
            for f, f2, t in s.parallel(x, y):
                w = b.rwhisker(t, g)
                _typed(b, rep, "typing", w, b.comp1(f, g), b.comp1(f2, g), "rwhisker", t, g)
                for f3 in s.ones(x, y):
                    for u in s.twos(f2, f3):
                        rep.expect(eq(b.rwhisker(b.vcomp(t, u), g),
                                      b.vcomp(w, b.rwhisker(u, g))), "rwhisker_vcomp", t, u, g)
        # interchange
        for f, f2, t in s.parallel(x, y):
            for g, g2, u in s.parallel(y, z):
                rep.expect(eq(b.vcomp(b.rwhisker(t, g), b.lwhisker(f2, u)),
                              b.vcomp(b.lwhisker(f, u), b.rwhisker(t, g2))),
                           "interchange", t, u)
        budget.tick()

    for w, x, y, z in itertools.product(obs, repeat=4):
        for f in s.ones(w, x):
            for g in s.ones(x, y):
                fg = b.comp1(f, g)
                for h in s.ones(y, z):
                    gh = b.comp1(g, h)
                    la = b.lassociator(f, g, h)
                    ra = b.rassociator(f, g, h)
                    top = b.comp1(f, gh)
                    bot = b.comp1(fg, h)
                    _typed(b, rep, "typing", la, top, bot, "lassociator", f, g, h)
                    _typed(b, rep, "typing", ra, bot, top, "rassociator", f, g, h)
                    rep.expect(eq(b.vcomp(la, ra), b.id2(top)), "lassociator_rassociator", f, g, h)
                    rep.expect(eq(b.vcomp(ra, la), b.id2(bot)), "rassociator_lassociator", f, g, h)
                    for h2 in s.ones(y, z):
                        for t in s.twos(h, h2):
                            rep.expect(eq(b.vcomp(b.lwhisker(f, b.lwhisker(g, t)),
                                                  b.lassociator(f, g, h2)),
                                          b.vcomp(la, b.lwhisker(fg, t))),
                                       "lwhisker_lwhisker", f, g, t)
                for g2 in s.ones(x, y):
                    for t in s.twos(g, g2):
                        for h in s.ones(y, z):
                            rep.expect(eq(b.vcomp(b.lwhisker(f, b.rwhisker(t, h)),
                                                  b.lassociator(f, g2, h)),
                                          b.vcomp(b.lassociator(f, g, h),
                                                  b.rwhisker(b.lwhisker(f, t), h))),
                                       "rwhisker_lwhisker", f, t, h)
            for f2 in s.ones(w, x):
                for t in s.twos(f, f2):
                    for g in s.ones(x, y):
                        for h in s.ones(y, z):
                            rep.expect(eq(b.vcomp(b.lassociator(f, g, h),
                                                  b.rwhisker(b.rwhisker(t, g), h)),
                                          b.vcomp(b.rwhisker(t, b.comp1(g, h)),
                                                  b.lassociator(f2, g, h))),
                                       "rwhisker_rwhisker", t, g, h)
        budget.tick()

    for v, w, x, y, z in itertools.product(obs, repeat=5):
        for k in s.ones(v, w):
            for h in s.ones(w, x):
                kh = b.comp1(k, h)
                for g in s.ones(x, y):
                    hg = b.comp1(h, g)
                    for f in s.ones(y, z):
                        gf = b.comp1(g, f)
                        lhs = b.vcomps(b.lwhisker(k, b.lassociator(h, g, f)),
                                       b.lassociator(k, hg, f),
                                       b.rwhisker(b.lassociator(k, h, g), f))
                        rhs = b.vcomp(b.lassociator(k, h, gf), b.lassociator(kh, g, f))
                        rep.expect(eq(lhs, rhs), "pentagon", k, h, g, f)
            budget.tick()
    return rep


def check_pseudofunctor(p, objects, one_cells=None, limit=DEFAULT_LAW_LIMIT):
    """Check the pseudofunctor laws on a sample of the source bicategory."""
    rep = LawReport()
    sb, tb = p.source, p.target
    s = _Sample(sb, objects, one_cells)
    budget = _Budget(rep, limit)
    eq = tb.eq2
    obs = s.objects

    for x in obs:
        fx = p.ob(x)
        i = p.identitor(x)
        ii = p.identitor_inv(x)
        _typed(tb, rep, "typing", i, tb.id1(fx), p.mor(sb.id1(x)), "identitor", x)
        _typed(tb, rep, "typing", ii, p.mor(sb.id1(x)), tb.id1(fx), "identitor_inv", x)
        rep.expect(eq(tb.vcomp(i, ii), tb.id2(tb.id1(fx))), "identitor_inverse", x)
        rep.expect(eq(tb.vcomp(ii, i), tb.id2(p.mor(sb.id1(x)))), "identitor_inverse", x)

    for x in obs:
        for y in obs:
            for f in s.ones(x, y):
                ff = p.mor(f)
                rep.expect(tb.src1(ff) == p.ob(x) and tb.tgt1(ff) == p.ob(y) and tb.well_typed_1(ff),
                           "typing", "mor", f)
                rep.expect(eq(p.cell(sb.id2(f)), tb.id2(ff)), "preserves_id2", f)
                # unit coherences
                lhs = tb.vcomps(tb.rwhisker(p.identitor(x), ff),
                                p.compositor(sb.id1(x), f), p.cell(sb.lunitor(f)))
                rep.expect(eq(lhs, tb.lunitor(ff)), "left_unit_coherence", f)
                rhs = tb.vcomps(tb.lwhisker(ff, p.identitor(y)),
                                p.compositor(f, sb.id1(y)), p.cell(sb.runitor(f)))
                rep.expect(eq(rhs, tb.runitor(ff)), "right_unit_coherence", f)
            for f, g, t in s.parallel(x, y):
                ft = p.cell(t)
                _typed(tb, rep, "typing", ft, p.mor(f), p.mor(g), "cell", t)
                for h in s.ones(x, y):
                    for u in s.twos(g, h):
                        rep.expect(eq(p.cell(sb.vcomp(t, u)), tb.vcomp(ft, p.cell(u))),
                                   "preserves_vcomp", t, u)
            budget.tick()

    for x, y, z in itertools.product(obs, repeat=3):
        for f in s.ones(x, y):
            for g in s.ones(y, z):
                c = p.compositor(f, g)
                ci = p.compositor_inv(f, g)
                top = tb.comp1(p.mor(f), p.mor(g))
                bot = p.mor(sb.comp1(f, g))
                _typed(tb, rep, "typing", c, top, bot, "compositor", f, g)
                _typed(tb, rep, "typing", ci, bot, top, "compositor_inv", f, g)
                rep.expect(eq(tb.vcomp(c, ci), tb.id2(top)), "compositor_inverse", f, g)
                rep.expect(eq(tb.vcomp(ci, c), tb.id2(bot)), "compositor_inverse", f, g)
            for f2, f3, t in s.parallel(x, y):
                for g in s.ones(y, z):
                    rep.expect(eq(tb.vcomp(tb.rwhisker(p.cell(t), p.mor(g)), p.compositor(f3, g)),
                                  tb.vcomp(p.compositor(f2, g), p.cell(sb.rwhisker(t, g)))),
                               "compositor_natural_right", t, g)
        for f in s.ones(x, y):
            for g, g2, t in s.parallel(y, z):
                rep.expect(eq(tb.vcomp(tb.lwhisker(p.mor(f), p.cell(t)), p.compositor(f, g2)),
                              tb.vcomp(p.compositor(f, g), p.cell(sb.lwhisker(f, t)))),
                           "compositor_natural_left", f, t)
        budget.tick()

    for w, x, y, z in itertools.product(obs, repeat=4):
        for f in s.ones(w, x):
            for g in s.ones(x, y):
                for h in s.ones(y, z):
                    pf, pg, ph = p.mor(f), p.mor(g), p.mor(h)
                    lhs = tb.vcomps(tb.lwhisker(pf, p.compositor(g, h)),
                                    p.compositor(f, sb.comp1(g, h)),
                                    p.cell(sb.lassociator(f, g, h)))
                    rhs = tb.vcomps(tb.lassociator(pf, pg, ph),
                                    tb.rwhisker(p.compositor(f, g), ph),
                                    p.compositor(sb.comp1(f, g), h))
                    rep.expect(eq(lhs, rhs), "associativity_coherence", f, g, h)
        budget.tick()
    return rep


def check_strict_commute(p, q, objects, one_cells=None):
    """Report cells on which two pseudofunctors disagree on the nose."""
    rep = LawReport()
    s = _Sample(p.source, objects, one_cells)
    for x in s.objects:
        rep.expect(p.ob(x) == q.ob(x), "objects_agree", x)
        for y in s.objects:
            for f in s.ones(x, y):
                rep.expect(p.mor(f) == q.mor(f), "one_cells_agree", f)
            for f, g, t in s.parallel(x, y):
                rep.expect(p.cell(t) == q.cell(t), "two_cells_agree", t)
    return rep


# ------------------------------------------------------------- adjunctions


def triangle_report(b, l, r, unit, counit):
    """Both triangle composites of ``(l, r, unit, counit)`` compared with identities."""
    rep = LawReport()
    x, y = b.src1(l), b.tgt1(l)
    ok = (b.src1(r) == y and b.tgt1(r) == x
          and b.src2(unit) == b.id1(x) and b.tgt2(unit) == b.comp1(l, r)
          and b.src2(counit) == b.comp1(r, l) and b.tgt2(counit) == b.id1(y))
    if not rep.expect(ok, "adjunction_typing", l, r):
        return rep
    left = b.vcomps(b.linvunitor(l), b.rwhisker(unit, l), b.rassociator(l, r, l),
                    b.lwhisker(l, counit), b.runitor(l))
    rep.expect(b.eq2(left, b.id2(l)), "left_triangle", l)
    right = b.vcomps(b.rinvunitor(r), b.lwhisker(r, unit), b.lassociator(r, l, r),
                     b.rwhisker(counit, r), b.lunitor(r))
    rep.expect(b.eq2(right, b.id2(r)), "right_triangle", r)
    return rep


def find_adjoint_equivalence(b, f):
    """First ``(r, unit, counit)`` making ``f`` an adjoint equivalence, or ``None``.

    Candidates are taken in enumeration order: right adjoints from the hom,
    then invertible units, then invertible counits.
    """
    x, y = b.src1(f), b.tgt1(f)
    for r in b.ones(y, x):
        units = [u for u in b.twos(b.id1(x), b.comp1(f, r)) if is_invertible_2cell(b, u) is not None]
        if not units:
            continue
        counits = [c for c in b.twos(b.comp1(r, f), b.id1(y)) if is_invertible_2cell(b, c) is not None]
        for u in units:
            for c in counits:
                if triangle_report(b, f, r, u, c).ok:
                    return r, u, c
    return None
