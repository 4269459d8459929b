"""Adjunctions, the monad of an adjunction, the adjunction of a monad, and
monadicity (directly and hom-wise)."""
from __future__ import annotations

from dataclasses import dataclass, field

from .bicat import (CAT_FIN, op1, op2, find_adjoint_equivalence, is_invertible_2cell,
                    postcomp_functor, triangle_report)
from .dispbicat import UNIT
from .emkleisli import EMCone, em_category, em_mediator
from .errors import LawError, MissingWitness
from .fincat import Functor, NatTrans, compose_functors, functor_props, identity_functor
from .monad import MonadMorphism, check_monad_morphism, make_monad, mnd_adjequiv_check


@dataclass(frozen=True)
class Adjunction:
    """``l: x -> y`` left adjoint to ``r: y -> x``."""
    bicat: object
    l: object
    r: object
    unit: object
    counit: object
    name: str | None = field(default=None, compare=False)

    @property
    def x(self):
        return self.bicat.src1(self.l)

    @property
    def y(self):
        return self.bicat.tgt1(self.l)

    def data(self):
        return (self.l, self.r, self.unit, self.counit)

    def __repr__(self):
        return self.name or f"Adjunction({self.l!r} -| {self.r!r})"


def check_adjunction(a):
    return triangle_report(a.bicat, a.l, a.r, a.unit, a.counit)


def make_adjunction(b, l, r, unit, counit, name=None):
    a = Adjunction(b, l, r, unit, counit, name)
    rep = check_adjunction(a)
    if not rep.ok:
        raise LawError(f"not an adjunction: {rep.laws()}", rep)
    return a


def identity_adjunction(b, x):
    i = b.id1(x)
    return make_adjunction(b, i, i, b.linvunitor(i), b.lunitor(i),
                           name=f"id_adj({getattr(x, 'name', x)})")


def adj_duals(a):
    """The adjunction read in ``op1`` (``(r, l, η, ε)``) and ``op2`` (``(r, l, ε, η)``)."""
    b = a.bicat
    d1 = make_adjunction(op1(b), a.r, a.l, a.unit, a.counit, name=f"op1({a!r})")
    d2 = make_adjunction(op2(b), a.r, a.l, a.counit, a.unit, name=f"op2({a!r})")
    return d1, d2


def undual(d, which):
    """Inverse of ``adj_duals`` on data."""
    if which == 1:
        return d.r, d.l, d.unit, d.counit
    return d.r, d.l, d.counit, d.unit


@dataclass(frozen=True)
class DispAdjunction:
    ob_x: object
    ob_y: object
    l: object
    r: object
    unit: object
    counit: object


def total_adjunction(t, a, da):
    """Pair an adjunction of ``t.base`` with displayed data into one of ``t``."""
    d = t.disp
    xx, yy = t.Obj(a.x, da.ob_x), t.Obj(a.y, da.ob_y)
    for ob, dd in ((a.x, da.ob_x), (a.y, da.ob_y)):
        if dd not in d.ob(ob):
            raise MissingWitness(f"{dd!r} is not a displayed object over {ob!r}")
    ll, rr = t.Mor(xx, yy, a.l, da.l), t.Mor(yy, xx, a.r, da.r)
    for f in (ll, rr):
        if not t.well_typed_1(f):
            raise MissingWitness(f"no displayed 1-cell {f.disp!r} over {f.base!r}")
    unit = t.Cell(t.id1(xx), t.comp1(ll, rr), a.unit, da.unit)
    counit = t.Cell(t.comp1(rr, ll), t.id1(yy), a.counit, da.counit)
    for c in (unit, counit):
        if not t.well_typed_2(c):
            raise MissingWitness(f"no displayed 2-cell over {c.base!r}")
    return make_adjunction(t, ll, rr, unit, counit, name=f"total({a!r})")


def terminal_disp_adjunction(t, a):
    """Displayed data for ``a`` in the terminal layer, if ``l`` preserves the
    chosen terminal objects (``r`` does so automatically)."""
    d = t.disp
    xs, ys = d.ob(a.x), d.ob(a.y)
    if not xs or not ys:
        raise MissingWitness("a category without terminal object has no displayed object")
    ox, oy = xs[0], ys[0]
    xx, yy = t.Obj(a.x, ox), t.Obj(a.y, oy)
    ls = d.mors(xx, yy, a.l)
    rs = d.mors(yy, xx, a.r)
    if not ls or not rs:
        raise MissingWitness(f"{a!r}: left adjoint does not preserve terminal objects")
    return DispAdjunction(ox, oy, ls[0], rs[0], UNIT, UNIT)


# ---------------------------------------------------------------- monads


def adjunction_to_monad(a):
    """Monad on ``x`` with endo ``l;r``, unit ``η`` and the drawn multiplication."""
    b, l, r = a.bicat, a.l, a.r
    lr = b.comp1(l, r)
    mult = b.vcomps(b.rassociator(l, r, lr),
                    b.lwhisker(l, b.lassociator(r, l, r)),
                    b.lwhisker(l, b.rwhisker(a.counit, r)),
                    b.lwhisker(l, b.lunitor(r)))
    return make_monad(b, a.x, lr, a.unit, mult)


def _em_cone(b, m, cone):
    if cone is not None:
        return cone
    if b is not CAT_FIN:
        raise MissingWitness(f"no Eilenberg-Moore cone supplied for {m!r} in {b.name}")
    return em_category(m)[1]


@dataclass(frozen=True)
class MonadAdjunction:
    adjunction: Adjunction
    free_cone: EMCone
    comparison_cell: object
    equivalence: MonadMorphism


def monad_to_adjunction(b, m, cone=None):
    """The adjunction ``free -| cone.mor`` and the monad morphism
    ``G: mnd(adjunction) -> m`` with underlying 1-cell the identity."""
    e = _em_cone(b, m, cone)
    x, endo = m.ob, m.endo
    q = EMCone(b, m, x, endo, b.vcomp(m.mult, b.linvunitor(endo)))
    w = em_mediator(e, q)
    if w is None:
        raise MissingWitness(f"no mediator for the free cone of {m!r}")
    free = w.mediator
    com = w.comparison.cell
    com_inv = is_invertible_2cell(b, com)
    mor = e.mor
    unit = b.vcomp(m.unit, com_inv)
    # counit: the unique factorization of the evident 2-cell through the cone
    tau = b.vcomps(b.rassociator(mor, free, mor), b.lwhisker(mor, com), e.cell)
    counit = None
    g1, g2 = b.comp1(mor, free), b.id1(e.ob)
    for s in b.twos(g1, g2):
        if b.rwhisker(s, mor) == tau and triangle_report(b, free, mor, unit, s).ok:
            counit = s
            break
    if counit is None:
        raise MissingWitness(f"no counit factorization for {m!r}")
    adj = make_adjunction(b, free, mor, unit, counit, name=f"adj({m!r})")
    m2 = adjunction_to_monad(adj)
    fm = b.comp1(free, mor)
    gcell = b.vcomps(b.lunitor(endo), com_inv, b.rinvunitor(fm))
    g = MonadMorphism(m2, m, b.id1(x), ((gcell, (UNIT, UNIT)), UNIT))
    rep = check_monad_morphism(b, g)
    if not rep.ok:
        raise LawError(f"comparison morphism fails: {rep.laws()}", rep)
    return MonadAdjunction(adj, q, com, g)


def round_trip_check(b, m, cone=None):
    return mnd_adjequiv_check(b, monad_to_adjunction(b, m, cone).equivalence)


# ------------------------------------------------------------ monadicity


def hom_adjunction(a, w):
    """Postcomposition with ``l`` and ``r`` on ``hom(w, -)``, an adjunction of CatFin."""
    b, l, r = a.bicat, a.l, a.r
    lw, rw = postcomp_functor(b, l, w), postcomp_functor(b, r, w)
    cx, cy = lw.source, lw.target
    unit = NatTrans(identity_functor(cx), compose_functors(lw, rw),
                    {f: b.vcomps(b.rinvunitor(f), b.lwhisker(f, a.unit), b.lassociator(f, l, r))
                     for f in cx.objects})
    counit = NatTrans(compose_functors(rw, lw), identity_functor(cy),
                      {f: b.vcomps(b.rassociator(f, r, l), b.lwhisker(f, a.counit), b.runitor(f))
                       for f in cy.objects})
    return make_adjunction(CAT_FIN, lw, rw, unit, counit,
                           name=f"hom({getattr(w, 'name', w)},{a!r})")


def comparison_cone(a):
    """The cone ``(y, r, α • (ε ▷ r))`` over the monad of ``a``."""
    b, l, r = a.bicat, a.l, a.r
    m = adjunction_to_monad(a)
    cell = b.vcomp(b.lassociator(r, l, r), b.rwhisker(a.counit, r))
    return m, EMCone(b, m, a.y, r, cell)


def comparison(a, cone=None):
    """The mediator of the comparison cone, with its witness."""
    m, q = comparison_cone(a)
    e = _em_cone(a.bicat, m, cone)
    w = em_mediator(e, q)
    if w is None:
        raise MissingWitness(f"no comparison 1-cell for {a!r}")
    return w


def catfin_comparison(a):
    """Reference comparison functor in CatFin: ``y |-> (r y, r(ε_y))``."""
    m = adjunction_to_monad(a)
    em, _ = em_category(m)
    r, eps = a.r, a.counit
    d = a.y
    omap = {y: (r.omap[y], r.mmap[eps[y]]) for y in d.objects}
    mmap = {f: (omap[d.src[f]], omap[d.tgt[f]], r.mmap[f]) for f in d.mor_ids}
    return Functor(d, em, omap, mmap)


@dataclass
class MonadicityReport:
    monadic: bool
    comparison: object
    props: object = None

    def to_dict(self):
        out = {"monadic": self.monadic, "comparison": repr(self.comparison)}
        if self.props is not None:
            out["comparison_props"] = self.props.to_dict()
        return out


def is_monadic(a, cone=None):
    w = comparison(a, cone)
    b = a.bicat
    ok = find_adjoint_equivalence(b, w.mediator) is not None
    props = functor_props(w.mediator) if b is CAT_FIN else None
    return MonadicityReport(ok, w.mediator, props)


@dataclass
class ReprMonadicityReport:
    samples: tuple
    per_sample: dict

    @property
    def monadic(self):
        return all(r.monadic for r in self.per_sample.values())

    def to_dict(self):
        return {"samples": list(self.per_sample), "monadic": self.monadic,
                "per_sample": {k: v.to_dict() for k, v in self.per_sample.items()}}


def is_representably_monadic(a, samples):
    per = {}
    for w in samples:
        per[getattr(w, "name", repr(w))] = is_monadic(hom_adjunction(a, w))
    return ReprMonadicityReport(tuple(samples), per)


@dataclass(frozen=True)
class ReprAdjEquivReport:
    direct: bool
    per_sample: dict

    @property
    def agree(self):
        return self.direct == all(self.per_sample.values())

    def to_dict(self):
        return {"direct": self.direct, "per_sample": dict(self.per_sample), "agree": self.agree}


def repr_adjequiv_check(b, f, samples):
    """Adjoint equivalence of ``f`` by search, against postcomposition
    being an equivalence of hom-categories at every sample."""
    direct = find_adjoint_equivalence(b, f) is not None
    per = {getattr(w, "name", repr(w)): functor_props(postcomp_functor(b, f, w)).is_equivalence
           for w in samples}
    return ReprAdjEquivReport(direct, per)
