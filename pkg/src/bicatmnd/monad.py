"""Monads internal to a bicategory.

``mnd_bicat(B)`` is assembled from displayed layers: endomorphisms, then
units and multiplications side by side, then the full sub-bicategory cut out
by the monad laws.  Monads, monad morphisms and monad cells are the cells of
that total bicategory, with named accessors for their components.

Each pasting diagram is read left to right along the page: the composites
below list their 2-cells in the order they are applied.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .bicat import (CAT_FIN, op2, find_adjoint_equivalence,
                    is_invertible_2cell, postcomp_functor)
from .dispbicat import (UNIT, CellUnit, DispBicategory, Prod, Section, Sigma, TotalBicat,
                        TotalCell, TotalMor, TotalObj, _PropCells, fullsub_disp,
                        local_props, section_to_psfunctor)
from .errors import BoundaryError, LawError
from .fincat import NatTrans, identity_functor
from .report import LawReport

MND_MOR_TOKEN = ((UNIT, (UNIT, UNIT)), UNIT)


# ------------------------------------------------------------- equations


def _guard(fn):
    def wrapped(*args):
        try:
            return fn(*args)
        except (BoundaryError, KeyError):
            return False
    return wrapped


@_guard
def endo_square(b, ex, ey, theta_f, theta_g, t):
    """``(t ▷ e_y) • θ_g = θ_f • (e_x ◁ t)`` for ``t: f => g``."""
    return b.eq2(b.vcomp(b.rwhisker(t, ey), theta_g), b.vcomp(theta_f, b.lwhisker(ex, t)))


@_guard
def unit_compat(b, f, eta_x, eta_y, theta):
    return b.eq2(b.vcomp(b.linvunitor(f), b.rwhisker(eta_x, f)),
                 b.vcomps(b.rinvunitor(f), b.lwhisker(f, eta_y), theta))


@_guard
def mult_compat(b, f, ex, ey, mu_x, mu_y, theta):
    top = b.vcomp(b.lwhisker(f, mu_y), theta)
    bottom = b.vcomps(b.lassociator(f, ey, ey), b.rwhisker(theta, ey),
                      b.rassociator(ex, f, ey), b.lwhisker(ex, theta),
                      b.lassociator(ex, ex, f), b.rwhisker(mu_x, f))
    return b.eq2(top, bottom)


def _typed2(b, a, src, tgt):
    try:
        return b.src2(a) == src and b.tgt2(a) == tgt and b.well_typed_2(a)
    except (AttributeError, KeyError, BoundaryError):
        return False


def monad_law_report(b, x, e, unit, mult):
    rep = LawReport()
    ok = (b.src1(e) == x and b.tgt1(e) == x and b.well_typed_1(e))
    ok = rep.expect(ok, "endo_typing", e) and ok
    ok = rep.expect(_typed2(b, unit, b.id1(x), e), "unit_typing", unit) and ok
    ok = rep.expect(_typed2(b, mult, b.comp1(e, e), e), "mult_typing", mult) and ok
    if not ok:
        return rep
    ide = b.id2(e)
    rep.expect(b.eq2(b.vcomps(b.rinvunitor(e), b.lwhisker(e, unit), mult), ide), "right_unit_law", e)
    rep.expect(b.eq2(b.vcomps(b.linvunitor(e), b.rwhisker(unit, e), mult), ide), "left_unit_law", e)
    rep.expect(b.eq2(b.vcomp(b.lwhisker(e, mult), mult),
                     b.vcomps(b.lassociator(e, e, e), b.rwhisker(mult, e), mult)),
               "associativity_law", e)
    return rep


# ------------------------------------------------------------------ layers


class EndoLayer(_PropCells, DispBicategory):
    """Endomorphisms over objects; 1-cells carry a 2-cell ``f;e_y => e_x;f``."""

    name = "Endo"

    def ob(self, x):
        return list(self.base.ones(x, x))

    def mors(self, xx, yy, f):
        b = self.base
        return list(b.twos(b.comp1(f, yy.disp), b.comp1(xx.disp, f)))

    def twos(self, ff, gg, t):
        ok = endo_square(self.base, ff.src.disp, ff.tgt.disp, ff.disp, gg.disp, t)
        return [UNIT] if ok else []

    def id1(self, xx):
        b, e = self.base, xx.disp
        return b.vcomp(b.lunitor(e), b.rinvunitor(e))

    def comp1(self, ff, gg):
        b = self.base
        f, g = ff.base, gg.base
        ex, ey, ez = ff.src.disp, ff.tgt.disp, gg.tgt.disp
        return b.vcomps(b.rassociator(f, g, ez), b.lwhisker(f, gg.disp),
                        b.lassociator(f, ey, g), b.rwhisker(ff.disp, g),
                        b.rassociator(ex, f, g))

    def well_typed_1(self, ff):
        b = self.base
        return _typed2(b, ff.disp, b.comp1(ff.base, ff.tgt.disp), b.comp1(ff.src.disp, ff.base))

    def well_typed_2(self, aa):
        return aa.disp == UNIT and self.twos(aa.src, aa.tgt, aa.base) == [UNIT]


def _unit_layer(endo_total):
    b = endo_total.base

    def ob(xx):
        return b.twos(b.id1(xx.base), xx.disp)

    def mors(xx, yy, ff):
        ok = unit_compat(b, ff.base, xx.disp, yy.disp, ff.disp)
        return [UNIT] if ok else []

    return CellUnit(endo_total, ob, mors, name="Unit")


def _mult_layer(endo_total):
    b = endo_total.base

    def ob(xx):
        e = xx.disp
        return b.twos(b.comp1(e, e), e)

    def mors(xx, yy, ff):
        ok = mult_compat(b, ff.base, xx.base.disp, yy.base.disp, xx.disp, yy.disp, ff.disp)
        return [UNIT] if ok else []

    return CellUnit(endo_total, ob, mors, name="Mult")


def _is_mnd(b):
    def pred(xx):
        e, (unit, mult) = xx.disp
        return monad_law_report(b, xx.base, e, unit, mult).ok
    return pred


# ------------------------------------------------------------ Mnd(B) cells


class Monad(TotalObj):
    """A monad: ``ob``, ``endo``, ``unit: id => endo``, ``mult: endo;endo => endo``."""

    __slots__ = ("name",)

    def __new__(cls, base, disp, name=None):
        self = super().__new__(cls, base, disp)
        if not hasattr(self, "name") or self.name is None:
            self.name = name
        return self

    @property
    def ob(self):
        return self.base

    @property
    def endo(self):
        return self.disp[0][0]

    @property
    def unit(self):
        return self.disp[0][1][0]

    @property
    def mult(self):
        return self.disp[0][1][1]

    def __repr__(self):
        return self.name or f"Monad({self.endo!r})"


class MonadMorphism(TotalMor):
    """``mor: ob m1 -> ob m2`` with ``cell: mor;endo m2 => endo m1;mor``."""

    __slots__ = ()

    @property
    def mor(self):
        return self.base

    @property
    def cell(self):
        return self.disp[0][0]

    def __repr__(self):
        return f"MonadMorphism({self.mor!r}, {self.cell!r})"


class MonadCell(TotalCell):
    __slots__ = ()

    @property
    def cell(self):
        return self.base

    def __repr__(self):
        return f"MonadCell({self.cell!r})"


class MndBicat(TotalBicat):
    """The total bicategory of the monad layering over ``base``."""

    Obj, Mor, Cell = Monad, MonadMorphism, MonadCell

    def __init__(self, base):
        endo = EndoLayer(base)
        endo_total = TotalBicat(endo, name=f"Endo({base.name})")
        data = Sigma(endo, Prod(_unit_layer(endo_total), _mult_layer(endo_total)), name="MndData")
        data_total = TotalBicat(data, name=f"MndData({base.name})")
        laws = fullsub_disp(data_total, _is_mnd(base), name="isMnd")
        super().__init__(Sigma(data, laws, name="dMnd"), name=f"Mnd({base.name})")
        self.endo_layer = endo
        self.endo_total = endo_total
        self.data_layer = data
        self.data_total = data_total


@lru_cache(maxsize=None)
def mnd_bicat(b):
    return MndBicat(b)


def monads_on(b, x):
    """All monads on the object ``x`` (enumerated through the layers)."""
    return mnd_bicat(b).objects_over(x)


# ------------------------------------------------------------ constructors


def check_monad(b, m):
    return monad_law_report(b, m.ob, m.endo, m.unit, m.mult)


def make_monad(b, x, endo, unit, mult, name=None):
    rep = monad_law_report(b, x, endo, unit, mult)
    if not rep.ok:
        raise LawError(f"not a monad in {b.name}: {rep.laws()}", rep)
    return Monad(x, ((endo, (unit, mult)), UNIT), name=name)


def check_monad_morphism(b, f):
    rep = LawReport()
    m1, m2, g, theta = f.src, f.tgt, f.mor, f.cell
    typed = (b.src1(g) == m1.ob and b.tgt1(g) == m2.ob
             and _typed2(b, theta, b.comp1(g, m2.endo), b.comp1(m1.endo, g)))
    if not rep.expect(typed, "morphism_typing", f):
        return rep
    rep.expect(unit_compat(b, g, m1.unit, m2.unit, theta), "unit_compatibility", f)
    rep.expect(mult_compat(b, g, m1.endo, m2.endo, m1.mult, m2.mult, theta),
               "mult_compatibility", f)
    rep.expect(f.disp[0][1] == (UNIT, UNIT) and f.disp[1] == UNIT, "morphism_token", f)
    return rep


def make_monad_morphism(b, m1, m2, mor, cell):
    f = MonadMorphism(m1, m2, mor, ((cell, (UNIT, UNIT)), UNIT))
    rep = check_monad_morphism(b, f)
    if not rep.ok:
        raise LawError(f"not a monad morphism: {rep.laws()}", rep)
    return f


def check_monad_cell(b, g):
    rep = LawReport()
    f1, f2, t = g.src, g.tgt, g.cell
    if not rep.expect(_typed2(b, t, f1.mor, f2.mor), "cell_typing", g):
        return rep
    rep.expect(endo_square(b, f1.src.endo, f1.tgt.endo, f1.cell, f2.cell, t),
               "cell_compatibility", g)
    return rep


def make_monad_cell(b, f1, f2, cell):
    g = MonadCell(f1, f2, cell, MND_MOR_TOKEN)
    rep = check_monad_cell(b, g)
    if not rep.ok:
        raise LawError(f"not a monad cell: {rep.laws()}", rep)
    return g


def id_monad(b, x):
    i = b.id1(x)
    return Monad(x, ((i, (b.id2(i), b.lunitor(i))), UNIT), name=f"id_monad({_name(x)})")


def _name(x):
    n = getattr(x, "name", None)
    return n if isinstance(n, str) else repr(x)


def id_monad_section(b):
    """The section of the monad layering choosing identity monads."""
    t = mnd_bicat(b)

    def ob(x):
        i = b.id1(x)
        return ((i, (b.id2(i), b.lunitor(i))), UNIT)

    def mor(f):
        return ((b.vcomp(b.runitor(f), b.linvunitor(f)), (UNIT, UNIT)), UNIT)

    def token(*_):
        return MND_MOR_TOKEN

    return Section(t.disp, ob, mor, token, token, token, token, token, name="id_monad", total=t)


def id_monad_psfunctor(b):
    p = section_to_psfunctor(id_monad_section(b))
    p.name = f"id_monad_psfunctor({b.name})"
    return p


def hom_monad(b, x, m):
    """The monad on the hom-category ``hom(x, ob m)`` given by postcomposition."""
    e, unit, mult = m.endo, m.unit, m.mult
    endo = postcomp_functor(b, e, x)
    c = endo.source
    ident = identity_functor(c)
    eta = NatTrans(ident, endo, {f: b.vcomp(b.rinvunitor(f), b.lwhisker(f, unit)) for f in c.objects})
    ee = CAT_FIN.comp1(endo, endo)
    mu = NatTrans(ee, endo, {f: b.vcomp(b.rassociator(f, e, e), b.lwhisker(f, mult))
                             for f in c.objects})
    return make_monad(CAT_FIN, c, endo, eta, mu, name=f"hom_monad({_name(x)},{_name(m)})")


def psfunctor_on_mnd(p, m):
    t = p.target
    x = m.ob
    unit = t.vcomp(p.identitor(x), p.cell(m.unit))
    mult = t.vcomp(p.compositor(m.endo, m.endo), p.cell(m.mult))
    return make_monad(t, p.ob(x), p.mor(m.endo), unit, mult)


# ----------------------------------------------------- distributive laws


class DistributiveLaw:
    """A monad in ``Mnd(B)``, read as a distributive law between two monads
    on the same object."""

    def __init__(self, b, monad):
        self.b = b
        self.monad = monad

    @property
    def m1(self):
        return self.monad.ob

    @property
    def tau(self):
        return self.monad.endo.cell

    @property
    def m2(self):
        d = self.monad
        return Monad(self.m1.ob, ((d.endo.mor, (d.unit.cell, d.mult.cell)), UNIT))

    def classical_report(self):
        return distributive_law_report(self.b, self.m1, self.m2, self.tau)

    def __repr__(self):
        return f"DistributiveLaw({self.m1!r}, {self.m2!r})"


def distributive_law_report(b, m1, m2, tau):
    """The four textbook equations of a distributive law ``e2;e1 => e1;e2``."""
    rep = LawReport()
    e1, e2 = m1.endo, m2.endo
    eta1, eta2, mu1, mu2 = m1.unit, m2.unit, m1.mult, m2.mult
    if not rep.expect(_typed2(b, tau, b.comp1(e2, e1), b.comp1(e1, e2)), "law_typing", tau):
        return rep
    rep.expect(b.eq2(b.vcomps(b.rinvunitor(e2), b.lwhisker(e2, eta1), tau),
                     b.vcomp(b.linvunitor(e2), b.rwhisker(eta1, e2))), "unit1", tau)
    rep.expect(b.eq2(b.vcomps(b.linvunitor(e1), b.rwhisker(eta2, e1), tau),
                     b.vcomp(b.rinvunitor(e1), b.lwhisker(e1, eta2))), "unit2", tau)
    rep.expect(b.eq2(b.vcomp(b.lwhisker(e2, mu1), tau),
                     b.vcomps(b.lassociator(e2, e1, e1), b.rwhisker(tau, e1),
                              b.rassociator(e1, e2, e1), b.lwhisker(e1, tau),
                              b.lassociator(e1, e1, e2), b.rwhisker(mu1, e2))), "mult1", tau)
    rep.expect(b.eq2(b.vcomp(b.rwhisker(mu2, e1), tau),
                     b.vcomps(b.rassociator(e2, e2, e1), b.lwhisker(e2, tau),
                              b.lassociator(e2, e1, e2), b.rwhisker(tau, e2),
                              b.rassociator(e1, e2, e2), b.lwhisker(e1, mu2))), "mult2", tau)
    return rep


def make_distributive_law(b, m1, m2, tau):
    """Package ``tau`` as a monad in ``Mnd(B)``; rejects it if any of its
    parts fails to be a cell of ``Mnd(B)`` or the monad laws fail there."""
    if m1.ob != m2.ob:
        raise BoundaryError("a distributive law needs monads on the same object")
    t = mnd_bicat(b)
    endo = make_monad_morphism(b, m1, m1, m2.endo, tau)
    unit = make_monad_cell(b, t.id1(m1), endo, m2.unit)
    mult = make_monad_cell(b, t.comp1(endo, endo), endo, m2.mult)
    return DistributiveLaw(b, make_monad(t, m1, endo, unit, mult))


def compose_monads(d):
    b = d.b
    m1, m2, tau = d.m1, d.m2, d.tau
    x, e1, e2 = m1.ob, m1.endo, m2.endo
    i = b.id1(x)
    unit = b.vcomps(b.linvunitor(i), b.rwhisker(m1.unit, i), b.lwhisker(e1, m2.unit))
    e12 = b.comp1(e1, e2)
    mult = b.vcomps(b.rassociator(e1, e2, e12),
                    b.lwhisker(e1, b.lassociator(e2, e1, e2)),
                    b.lwhisker(e1, b.rwhisker(tau, e2)),
                    b.lwhisker(e1, b.rassociator(e1, e2, e2)),
                    b.lassociator(e1, e1, b.comp1(e2, e2)),
                    b.rwhisker(m1.mult, b.comp1(e2, e2)),
                    b.lwhisker(e1, m2.mult))
    return make_monad(b, x, e12, unit, mult)


def trivial_distributive_law(b, m):
    """The law between ``m`` and the identity monad on its object."""
    i = id_monad(b, m.ob)
    tau = b.vcomp(b.lunitor(m.endo), b.rinvunitor(m.endo))
    return make_distributive_law(b, m, i, tau)


# -------------------------------------------------------------- comonads


@dataclass(frozen=True)
class Comonad:
    ob: object
    endo: object
    counit: object
    comult: object


def comonad_via_op2(b, m):
    """Read a monad of ``op2(b)`` as a comonad of ``b``."""
    rep = monad_law_report(op2(b), m.ob, m.endo, m.unit, m.mult)
    if not rep.ok:
        raise LawError(f"not a monad in op2({b.name}): {rep.laws()}", rep)
    return Comonad(m.ob, m.endo, m.unit, m.mult)


def comonad_law_report(b, c):
    """Comonad laws stated directly in ``b``."""
    rep = LawReport()
    x, e, eps, delta = c.ob, c.endo, c.counit, c.comult
    ok = (_typed2(b, eps, e, b.id1(x)) and _typed2(b, delta, e, b.comp1(e, e)))
    if not rep.expect(ok, "comonad_typing", e):
        return rep
    ide = b.id2(e)
    rep.expect(b.eq2(b.vcomps(delta, b.lwhisker(e, eps), b.runitor(e)), ide), "right_counit_law", e)
    rep.expect(b.eq2(b.vcomps(delta, b.rwhisker(eps, e), b.lunitor(e)), ide), "left_counit_law", e)
    rep.expect(b.eq2(b.vcomp(delta, b.lwhisker(e, delta)),
                     b.vcomps(delta, b.rwhisker(delta, e), b.rassociator(e, e, e))),
               "coassociativity_law", e)
    return rep


def make_op2_monad(b, x, endo, counit, comult):
    """A comonad of ``b`` presented as a monad of ``op2(b)``."""
    return make_monad(op2(b), x, endo, counit, comult)


# ---------------------------------------------------------- total monads


@dataclass(frozen=True)
class DispMonad:
    ob: object
    endo: object
    unit: object
    mult: object


def total_monad(t, m, dm):
    """Pair a monad of ``t.base`` with a displayed monad over it into a
    monad of the total bicategory ``t``."""
    d = t.disp
    props = local_props(d, [m.ob])
    if not (props.locally_propositional and props.locally_groupoidal):
        raise LawError("displayed layer is not locally propositional and groupoidal")
    xx = t.Obj(m.ob, dm.ob)
    if dm.ob not in d.ob(m.ob):
        raise LawError(f"{dm.ob!r} is not a displayed object over {m.ob!r}")
    ee = t.Mor(xx, xx, m.endo, dm.endo)
    if not t.well_typed_1(ee):
        raise LawError("displayed endomorphism is not a displayed 1-cell over the endomorphism")
    unit = t.Cell(t.id1(xx), ee, m.unit, dm.unit)
    mult = t.Cell(t.comp1(ee, ee), ee, m.mult, dm.mult)
    return make_monad(t, xx, ee, unit, mult)


# ---------------------------------------------------- invertibility checks


def mnd_cell_inverse(b, g):
    """Invert a monad cell whose underlying 2-cell is invertible."""
    s = is_invertible_2cell(b, g.cell)
    if s is None:
        return None
    inv = MonadCell(g.tgt, g.src, s, MND_MOR_TOKEN)
    if not check_monad_cell(b, inv).ok:
        raise LawError("inverse of the underlying 2-cell is not a monad cell")
    return inv


@dataclass(frozen=True)
class AdjEquivReport:
    underlying_adjequiv: bool
    cell_invertible: bool
    is_adjequiv_in_mnd: bool

    @property
    def all_true(self):
        return self.underlying_adjequiv and self.cell_invertible and self.is_adjequiv_in_mnd

    def to_dict(self):
        return {"underlying_adjequiv": self.underlying_adjequiv,
                "cell_invertible": self.cell_invertible,
                "is_adjequiv_in_mnd": self.is_adjequiv_in_mnd}


def mnd_adjequiv_check(b, f):
    under = find_adjoint_equivalence(b, f.mor) is not None
    inv = is_invertible_2cell(b, f.cell) is not None
    in_mnd = find_adjoint_equivalence(mnd_bicat(b), f) is not None
    return AdjEquivReport(under, inv, in_mnd)
