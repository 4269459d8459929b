"""Eilenberg-Moore cones and Kleisli cocones.

A cone for a monad ``m`` on an object ``e`` is a monad morphism
``id_monad(e) -> m``; a cocone is its mirror image.  In finite categories
both universal objects are built explicitly (algebras, Kleisli maps, the
full image of the free algebras).  Universality is only ever decided on a
declared finite sample of test objects, and every verdict records it.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .bicat import CAT_FIN, is_invertible_2cell, op1
from .dispbicat import UNIT
from .errors import BoundaryError, LawError, MissingWitness
from .fincat import (FinCat, Functor, NatTrans, check_functor, compose_functors,
                     find_iso, functor_props, precomposition_functor, terminal_objects)
from .monad import (MND_MOR_TOKEN, Monad, MonadCell, MonadMorphism, check_monad,
                    hom_monad, id_monad, id_monad_psfunctor,
                    mnd_bicat)
from .report import LawReport


def _label(x):
    n = getattr(x, "name", None)
    return n if isinstance(n, str) else repr(x)


def _eq(b, left, right):
    """Compare two lazily built composites; ill-typed ones compare unequal."""
    try:
        return b.eq2(left(), right())
    except (KeyError, BoundaryError):
        return False


@lru_cache(maxsize=None)
def _psf(b):
    return id_monad_psfunctor(b)


# ------------------------------------------------------------------ cones


@dataclass(frozen=True)
class EMCone:
    """``mor: ob -> ob m`` with ``cell: mor;endo m => id;mor``."""
    bicat: object
    monad: object
    ob: object
    mor: object
    cell: object

    def as_mnd_mor(self):
        b = self.bicat
        return MonadMorphism(id_monad(b, self.ob), self.monad, self.mor,
                             ((self.cell, (UNIT, UNIT)), UNIT))


def em_cone_report(cone):
    """The unit triangle and multiplication square of a cone, as drawn."""
    b, m, mor, cell = cone.bicat, cone.monad, cone.mor, cone.cell
    e = m.endo
    rep = LawReport()
    try:
        typed = (b.src1(mor) == cone.ob and b.tgt1(mor) == m.ob
                 and b.src2(cell) == b.comp1(mor, e)
                 and b.tgt2(cell) == b.comp1(b.id1(cone.ob), mor)
                 and b.well_typed_2(cell))
    except (KeyError, AttributeError):
        typed = False
    if not rep.expect(typed, "cone_typing", mor):
        return rep
    rep.expect(_eq(b, lambda: b.vcomps(b.rinvunitor(mor), b.lwhisker(mor, m.unit), cell),
                   lambda: b.linvunitor(mor)), "cone_unit", mor)
    rep.expect(_eq(b, lambda: b.vcomp(b.lwhisker(mor, m.mult), cell),
                   lambda: b.vcomps(b.lassociator(mor, e, e), b.rwhisker(cell, e),
                                    b.rwhisker(b.lunitor(mor), e), cell)),
               "cone_mult", mor)
    return rep


def em_cones(b, m, x):
    """Every cone for ``m`` with apex ``x``."""
    out = []
    for f in b.ones(x, m.ob):
        for c in b.twos(b.comp1(f, m.endo), b.comp1(b.id1(x), f)):
            cone = EMCone(b, m, x, f, c)
            if em_cone_report(cone).ok:
                out.append(cone)
    return out


@dataclass(frozen=True)
class KleisliCocone:
    """``mor: ob m -> ob`` with ``cell: endo m;mor => mor``."""
    bicat: object
    monad: object
    ob: object
    mor: object
    cell: object


def kleisli_cocone_report(k):
    b, m, mor, cell = k.bicat, k.monad, k.mor, k.cell
    e = m.endo
    rep = LawReport()
    try:
        typed = (b.src1(mor) == m.ob and b.tgt1(mor) == k.ob
                 and b.src2(cell) == b.comp1(e, mor) and b.tgt2(cell) == mor
                 and b.well_typed_2(cell))
    except (KeyError, AttributeError):
        typed = False
    if not rep.expect(typed, "cocone_typing", mor):
        return rep
    rep.expect(_eq(b, lambda: b.vcomp(b.rwhisker(m.unit, mor), cell),
                   lambda: b.lunitor(mor)), "cocone_unit", mor)
    rep.expect(_eq(b, lambda: b.vcomps(b.rassociator(e, e, mor), b.lwhisker(e, cell), cell),
                   lambda: b.vcomp(b.rwhisker(m.mult, mor), cell)), "cocone_mult", mor)
    return rep


def kleisli_cocones(b, m, x):
    out = []
    for f in b.ones(m.ob, x):
        for c in b.twos(b.comp1(m.endo, f), f):
            k = KleisliCocone(b, m, x, f, c)
            if kleisli_cocone_report(k).ok:
                out.append(k)
    return out


# ----------------------------------------------------------- ump reports


@dataclass
class UmpReport:
    kind: str
    samples: tuple
    props: dict = field(default_factory=dict)
    existence: list = field(default_factory=list)
    uniqueness_checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def universal(self):
        return not self.failures

    def fail(self, sample, reason):
        self.failures.append((_label(sample), reason))

    def to_dict(self):
        return {
            "kind": self.kind,
            "samples": [_label(s) for s in self.samples],
            "universal": self.universal,
            "props": {k: v.to_dict() for k, v in self.props.items()},
            "existence": [{"apex": _label(w.apex), "mediator": repr(w.mediator)}
                          for w in self.existence],
            "uniqueness_checked": self.uniqueness_checked,
            "failures": [{"sample": s, "reason": r} for s, r in self.failures],
        }


@dataclass(frozen=True)
class Mediator:
    """A mediating 1-cell with its invertible comparison 2-cell."""
    apex: object
    cone: object
    mediator: object
    comparison: object


# ------------------------------------------------------------ EM objects


@lru_cache(maxsize=None)
def em_category(m):
    """The category of algebras of a monad on a finite category, with its cone."""
    rep = check_monad(CAT_FIN, m)
    if not rep.ok:
        raise LawError(f"not a monad in CatFin: {rep.laws()}", rep)
    c, e, eta, mu = m.ob, m.endo, m.unit, m.mult
    objects = []
    for x in c.objects:
        for a in c.hom(e.omap[x], x):
            if (c.then(eta[x], a) == c.identity[x]
                    and c.then(e.mmap[a], a) == c.then(mu[x], a)):
                objects.append((x, a))
    morphisms = []
    for xa in objects:
        for yb in objects:
            for f in c.hom(xa[0], yb[0]):
                if c.then(e.mmap[f], yb[1]) == c.then(xa[1], f):
                    morphisms.append(((xa, yb, f), xa, yb))
    identity = {xa: (xa, xa, c.identity[xa[0]]) for xa in objects}
    out = {}
    for g, _, t in morphisms:
        out.setdefault(g[0], []).append(g)
    compose = {}
    for g, _, t in morphisms:
        for h in out.get(t, ()):
            compose[g, h] = (g[0], h[1], c.then(g[2], h[2]))
    em = FinCat(objects, morphisms, identity, compose, name=f"EM({_label(m)})")
    forget = Functor(em, c, {xa: xa[0] for xa in objects},
                     {g: g[2] for g, _, _ in morphisms}, name=f"U_{_label(m)}")
    cell = NatTrans(compose_functors(forget, e), forget, {xa: xa[1] for xa in objects})
    return em, EMCone(CAT_FIN, m, em, forget, cell)


def em_functor(cone, x):
    """``hom(x, ob) -> hom_Mnd(id_monad(x), m)``, composing with the cone."""
    b, m = cone.bicat, cone.monad
    t = mnd_bicat(b)
    mor, cell, e = cone.mor, cone.cell, m.endo
    src = b.hom(x, cone.ob)
    tgt = t.hom(id_monad(b, x), m)
    idx = id_monad(b, x)

    def on_ob(f):
        fm = b.comp1(f, mor)
        c = b.vcomps(b.rassociator(f, mor, e), b.lwhisker(f, cell),
                     b.lwhisker(f, b.lunitor(mor)), b.linvunitor(fm))
        return MonadMorphism(idx, m, fm, ((c, (UNIT, UNIT)), UNIT))

    omap = {f: on_ob(f) for f in src.objects}
    mmap = {a: MonadCell(omap[src.src[a]], omap[src.tgt[a]], b.rwhisker(a, mor), MND_MOR_TOKEN)
            for a in src.mor_ids}
    return _checked(Functor(src, tgt, omap, mmap, name=None))


def em_functor_alt(cone, x):
    """``hom(x, ob) -> EM(hom_monad(x, m))``."""
    b, m = cone.bicat, cone.monad
    mor, cell, e = cone.mor, cone.cell, m.endo
    src = b.hom(x, cone.ob)
    tgt, _ = em_category(hom_monad(b, x, m))

    def on_ob(f):
        a = b.vcomps(b.rassociator(f, mor, e), b.lwhisker(f, cell),
                     b.lwhisker(f, b.lunitor(mor)))
        return (b.comp1(f, mor), a)

    omap = {f: on_ob(f) for f in src.objects}
    mmap = {a: (omap[src.src[a]], omap[src.tgt[a]], b.rwhisker(a, mor)) for a in src.mor_ids}
    return _checked(Functor(src, tgt, omap, mmap))


def em_hom_equivalence(b, m, x):
    """``EM(hom_monad(x, m)) -> hom_Mnd(id_monad(x), m)``: ``(h, a) |-> (h, a•λ⁻¹)``."""
    src, _ = em_category(hom_monad(b, x, m))
    t = mnd_bicat(b)
    idx = id_monad(b, x)
    tgt = t.hom(idx, m)
    omap = {ha: MonadMorphism(idx, m, ha[0], ((b.vcomp(ha[1], b.linvunitor(ha[0])), (UNIT, UNIT)), UNIT))
            for ha in src.objects}
    mmap = {g: MonadCell(omap[g[0]], omap[g[1]], g[2], MND_MOR_TOKEN) for g in src.mor_ids}
    return _checked(Functor(src, tgt, omap, mmap))


def _checked(f):
    rep = check_functor(f)
    if not rep.ok:
        raise LawError(f"construction does not give a functor: {rep.laws()}", rep)
    return f


def em_mediator(cone, q):
    """A mediating 1-cell for the cone ``q`` and an invertible Mnd 2-cell
    ``P(h);cone => q``, by exhaustive search; ``None`` if there is none."""
    b = cone.bicat
    t = mnd_bicat(b)
    p = _psf(b)
    emm, qm = cone.as_mnd_mor(), q.as_mnd_mor()
    for h in b.ones(q.ob, cone.ob):
        ph = t.comp1(p.mor(h), emm)
        for c in t.twos(ph, qm):
            if is_invertible_2cell(t, c) is not None:
                return Mediator(q.ob, q, h, c)
    return None


def em_factorizations(cone, g1, g2, tau):
    """All 2-cells ``s: g1 => g2`` with ``P(s) ▷ cone = tau`` (tau a Mnd cell)."""
    b = cone.bicat
    return [s for s in b.twos(g1, g2) if b.rwhisker(s, cone.mor) == tau.cell]


def check_em_universal(cone, samples):
    """Decide universality of ``cone`` on the sample objects."""
    b = cone.bicat
    t = mnd_bicat(b)
    p = _psf(b)
    emm = cone.as_mnd_mor()
    rep = UmpReport("em", tuple(samples))
    for x in samples:
        props = functor_props(em_functor_alt(cone, x))
        rep.props[_label(x)] = props
        if not props.is_equivalence:
            rep.fail(x, "em_functor_alt is not an equivalence")
        for q in em_cones(b, cone.monad, x):
            w = em_mediator(cone, q)
            if w is None:
                rep.fail(x, f"no mediator for cone {q.mor!r}")
            else:
                rep.existence.append(w)
        ones = b.ones(x, cone.ob)
        for g1 in ones:
            p1 = t.comp1(p.mor(g1), emm)
            for g2 in ones:
                p2 = t.comp1(p.mor(g2), emm)
                for tau in t.twos(p1, p2):
                    rep.uniqueness_checked += 1
                    n = len(em_factorizations(cone, g1, g2, tau))
                    if n != 1:
                        rep.fail(x, f"{n} factorizations of a 2-cell {g1!r} => {g2!r}")
    return rep


def em_criteria_bridge(cone, x):
    """Compare the two hom-wise criteria: ``em_functor_alt`` and ``em_functor``
    (whose composite with the hom-equivalence is checked to be ``em_functor``)."""
    b, m = cone.bicat, cone.monad
    alt = em_functor_alt(cone, x)
    direct = em_functor(cone, x)
    heq = em_hom_equivalence(b, m, x)
    composite_matches = compose_functors(alt, heq) == direct
    pa, pd, ph = functor_props(alt), functor_props(direct), functor_props(heq)
    return {
        "alt": pa.is_equivalence,
        "direct": pd.is_equivalence,
        "hom_equivalence": ph.is_equivalence,
        "composite_matches": composite_matches,
        "agree": pa.is_equivalence == pd.is_equivalence and ph.is_equivalence and composite_matches,
    }


def em_with_terminal(m):
    """The algebra on the chosen terminal object of a monad in the terminal
    layer; checked to be terminal among all algebras."""
    xx = m.ob
    base = Monad(xx.base, ((m.endo.base, (m.unit.base, m.mult.base)), UNIT))
    em, _ = em_category(base)
    top = xx.disp
    c = xx.base
    maps = c.hom(base.endo.omap[top], top)
    alg = next((xa for xa in em.objects if xa[0] == top and xa[1] in maps), None)
    if alg is None or all(alg != y for y, _ in terminal_objects(em)):
        raise MissingWitness(f"no terminal algebra on {top!r}")
    return em, alg


# --------------------------------------------------------- Kleisli objects


@lru_cache(maxsize=None)
def kleisli_category(m):
    """Objects of ``C``; maps ``x -> y`` are ``f: x -> m(y)``, composed as ``f;m(g);μ``."""
    rep = check_monad(CAT_FIN, m)
    if not rep.ok:
        raise LawError(f"not a monad in CatFin: {rep.laws()}", rep)
    c, e, eta, mu = m.ob, m.endo, m.unit, m.mult
    morphisms = [((x, y, f), x, y) for x in c.objects for y in c.objects
                 for f in c.hom(x, e.omap[y])]
    identity = {x: (x, x, eta[x]) for x in c.objects}
    out = {}
    for k, x, _ in morphisms:
        out.setdefault(x, []).append(k)
    compose = {}
    for k, _, y in morphisms:
        for h in out.get(y, ()):
            compose[k, h] = (k[0], h[1], c.then(c.then(k[2], e.mmap[h[2]]), mu[h[1]]))
    kl = FinCat(c.objects, morphisms, identity, compose, name=f"Kl({_label(m)})")
    free = Functor(c, kl, {x: x for x in c.objects},
                   {f: (c.src[f], c.tgt[f], c.then(f, eta[c.tgt[f]])) for f in c.mor_ids},
                   name=f"F_{_label(m)}")
    cell = NatTrans(compose_functors(e, free), free,
                    {x: (e.omap[x], x, c.identity[e.omap[x]]) for x in c.objects})
    return kl, KleisliCocone(CAT_FIN, m, kl, free, cell)


@lru_cache(maxsize=None)
def free_alg_functor(m):
    """``C -> EM(m)``: ``x |-> (m x, μ_x)``, ``f |-> m(f)``."""
    em, _ = em_category(m)
    c, e, mu = m.ob, m.endo, m.mult
    omap = {x: (e.omap[x], mu[x]) for x in c.objects}
    mmap = {f: (omap[c.src[f]], omap[c.tgt[f]], e.mmap[f]) for f in c.mor_ids}
    return _checked(Functor(c, em, omap, mmap, name=f"Free_{_label(m)}"))


def full_image(f):
    """Full subcategory of the target on objects isomorphic to an image object."""
    d = f.target
    image = set(f.omap.values())
    keep = [y for y in d.objects if y in image or any(find_iso(d, z, y) for z in image)]
    ks = set(keep)
    morphisms = [(g, s, t) for g, s, t in d.morphisms if s in ks and t in ks]
    ids = {g for g, _, _ in morphisms}
    compose = {k: v for k, v in d.compose.items() if k[0] in ids and k[1] in ids}
    return FinCat(keep, morphisms, {y: d.identity[y] for y in keep}, compose)


@lru_cache(maxsize=None)
def univ_kleisli(m):
    """The full image of the free algebras, with the comparison functor from
    the Kleisli category: ``x |-> (m x, μ_x)``, ``f |-> m(f);μ_y``."""
    kl, _ = kleisli_category(m)
    fa = free_alg_functor(m)
    uk = full_image(fa)
    uk.name = f"UKl({_label(m)})"
    c, e, mu = m.ob, m.endo, m.mult
    omap = {x: fa.omap[x] for x in kl.objects}
    mmap = {k: (omap[k[0]], omap[k[1]], c.then(e.mmap[k[2]], mu[k[1]])) for k in kl.mor_ids}
    return uk, _checked(Functor(kl, uk, omap, mmap, name=f"K_{_label(m)}"))


def univ_kleisli_cocone(m):
    """The cocone on the full-image Kleisli category: the Kleisli cocone followed by K."""
    _, k = kleisli_category(m)
    uk, kk = univ_kleisli(m)
    return KleisliCocone(CAT_FIN, m, uk, compose_functors(k.mor, kk), CAT_FIN.rwhisker(k.cell, kk))


def precomposition_report(m, targets):
    """``functor_props`` of precomposition with K into each target category."""
    _, kk = univ_kleisli(m)
    return {_label(d): functor_props(precomposition_functor(kk, d)) for d in targets}


def kleisli_mediator(k, q):
    """Mediator for the cocone ``q``: a 1-cell ``h`` and an invertible
    ``c: k.mor;h => q.mor`` satisfying the existence square."""
    b, m = k.bicat, k.monad
    e = m.endo
    for h in b.ones(k.ob, q.ob):
        kh = b.comp1(k.mor, h)
        for c in b.twos(kh, q.mor):
            if is_invertible_2cell(b, c) is None:
                continue
            if _eq(b, lambda: b.vcomp(b.lwhisker(e, c), q.cell),
                   lambda: b.vcomps(b.lassociator(e, k.mor, h), b.rwhisker(k.cell, h), c)):
                return Mediator(q.ob, q, h, c)
    return None


def explicit_kleisli_mediator(m, q):
    """In CatFin: ``G(x) = Q(x)`` and ``G(f: x -> m y) = Q(f);cell_y``."""
    kl, _ = kleisli_category(m)
    d = q.ob
    omap = {x: q.mor.omap[x] for x in kl.objects}
    mmap = {g: d.then(q.mor.mmap[g[2]], q.cell[g[1]]) for g in kl.mor_ids}
    return _checked(Functor(kl, d, omap, mmap))


def kleisli_compatible(k, g1, g2, tau):
    b, e = k.bicat, k.monad.endo
    return _eq(b, lambda: b.vcomps(b.lassociator(e, k.mor, g1), b.rwhisker(k.cell, g1), tau),
               lambda: b.vcomps(b.lwhisker(e, tau), b.lassociator(e, k.mor, g2),
                                b.rwhisker(k.cell, g2)))


def kleisli_factorizations(k, g1, g2, tau):
    b = k.bicat
    return [s for s in b.twos(g1, g2) if b.lwhisker(k.mor, s) == tau]


def check_kleisli_universal(k, sample_cocones, sample_objects):
    b = k.bicat
    rep = UmpReport("kleisli", tuple(sample_objects))
    for q in sample_cocones:
        w = kleisli_mediator(k, q)
        if w is None:
            rep.fail(q.ob, f"no mediator for cocone {q.mor!r}")
        else:
            rep.existence.append(w)
    for x in sample_objects:
        ones = b.ones(k.ob, x)
        for g1 in ones:
            for g2 in ones:
                for tau in b.twos(b.comp1(k.mor, g1), b.comp1(k.mor, g2)):
                    if not kleisli_compatible(k, g1, g2, tau):
                        continue
                    rep.uniqueness_checked += 1
                    n = len(kleisli_factorizations(k, g1, g2, tau))
                    if n != 1:
                        rep.fail(x, f"{n} factorizations of a 2-cell {g1!r} => {g2!r}")
    return rep


def op1_em_from_kleisli(k):
    """Read a Kleisli cocone of ``B`` as an EM cone of ``op1(B)``."""
    b = k.bicat
    ob = op1(b)
    cell = b.vcomp(k.cell, b.rinvunitor(k.mor))
    cone = EMCone(ob, k.monad, k.ob, k.mor, cell)
    rep = em_cone_report(cone)
    if not rep.ok:
        raise LawError(f"transferred cone fails: {rep.laws()}", rep)
    return cone


@dataclass(frozen=True)
class TransferReport:
    cocones: int
    cones: int
    bijective: bool
    mediators_match: bool
    universal: bool

    @property
    def ok(self):
        return self.bijective and self.mediators_match and self.universal


def op1_transfer_report(k, samples):
    """Compare cocones of ``B`` with cones of ``op1(B)`` at each sample and
    check that the mediators found on both sides coincide."""
    b = k.bicat
    cone = op1_em_from_kleisli(k)
    ob = cone.bicat
    n_co = n_cone = 0
    bij = match = True
    for x in samples:
        cocones = kleisli_cocones(b, k.monad, x)
        cones = em_cones(ob, k.monad, x)
        n_co += len(cocones)
        n_cone += len(cones)
        image = {(q.mor, b.vcomp(q.cell, b.rinvunitor(q.mor))) for q in cocones}
        if len(image) != len(cocones) or image != {(c.mor, c.cell) for c in cones}:
            bij = False
        for q in cocones:
            wk = kleisli_mediator(k, q)
            we = em_mediator(cone, EMCone(ob, k.monad, x, q.mor, b.vcomp(q.cell, b.rinvunitor(q.mor))))
            if (wk is None) != (we is None):
                match = False
            elif wk is not None and not _same_mediators(k, q, cone):
                match = False
    universal = check_em_universal(cone, samples).universal
    return TransferReport(n_co, n_cone, bij, match, universal)


def _same_mediators(k, q, cone):
    """The sets of mediating 1-cells agree on both sides."""
    b = k.bicat
    ob = cone.bicat
    t = mnd_bicat(ob)
    p = _psf(ob)
    qq = EMCone(ob, k.monad, q.ob, q.mor, b.vcomp(q.cell, b.rinvunitor(q.mor)))
    qm = qq.as_mnd_mor()
    left, right = set(), set()
    for h in b.ones(k.ob, q.ob):
        kh = b.comp1(k.mor, h)
        for c in b.twos(kh, q.mor):
            if is_invertible_2cell(b, c) is not None and _eq(
                    b, lambda: b.vcomp(b.lwhisker(k.monad.endo, c), q.cell),
                    lambda: b.vcomps(b.lassociator(k.monad.endo, k.mor, h),
                                     b.rwhisker(k.cell, h), c)):
                left.add(h)
        ph = t.comp1(p.mor(h), cone.as_mnd_mor())
        if any(is_invertible_2cell(t, c) is not None for c in t.twos(ph, qm)):
            right.add(h)
    return left == right
