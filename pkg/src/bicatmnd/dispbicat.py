"""Displayed bicategories, their total bicategories and the standard
combinators (product, sigma, full sub-bicategory, unit 2-cells), sections
and the layer of terminal objects over finite categories.

Displayed operations receive *total* cells so that a layer can read the
displayed data of sources and targets; they return only the displayed part.
Displayed 2-cells that are proofs of an equation are the token ``UNIT``,
present exactly when the equation holds.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from . import fincat
from .bicat import CAT_FIN, Bicategory, Pseudofunctor, is_invertible_2cell
from .errors import BoundaryError

UNIT = ()


class _Pair:
    """Hash-consed record: equal field values give the identical object."""

    __slots__ = ("_hash",)
    _fields = ()

    def __new__(cls, *values):
        table = cls.__dict__.get("_table")
        if table is None:
            table = {}
            setattr(cls, "_table", table)
        self = table.get(values)
        if self is None:
            self = object.__new__(cls)
            for f, v in zip(cls._fields, values):
                setattr(self, f, v)
            self._hash = hash((cls.__name__,) + values)
            table[values] = self
        return self

    def __hash__(self):
        return self._hash

    __eq__ = object.__eq__


class TotalObj(_Pair):
    __slots__ = ("base", "disp")
    _fields = ("base", "disp")

    def __repr__(self):
        return f"({self.base!r}, {self.disp!r})"


class TotalMor(_Pair):
    __slots__ = ("src", "tgt", "base", "disp")
    _fields = ("src", "tgt", "base", "disp")

    def __repr__(self):
        return f"({self.base!r}, {self.disp!r})"


class TotalCell(_Pair):
    __slots__ = ("src", "tgt", "base", "disp")
    _fields = ("src", "tgt", "base", "disp")

    def __repr__(self):
        return f"({self.base!r}, {self.disp!r})"


class DispBicategory:
    """A displayed bicategory over ``base``."""

    name = "D"

    def __init__(self, base, name=None):
        self.base = base
        if name:
            self.name = name

    def ob(self, x): raise NotImplementedError
    def mors(self, xx, yy, f): raise NotImplementedError
    def twos(self, ff, gg, t): raise NotImplementedError

    def id1(self, xx): raise NotImplementedError
    def comp1(self, ff, gg): raise NotImplementedError
    def id2(self, ff): raise NotImplementedError
    def vcomp(self, aa, bb): raise NotImplementedError
    def lwhisker(self, ff, aa): raise NotImplementedError
    def rwhisker(self, aa, gg): raise NotImplementedError
    def lunitor(self, ff): raise NotImplementedError
    def linvunitor(self, ff): raise NotImplementedError
    def runitor(self, ff): raise NotImplementedError
    def rinvunitor(self, ff): raise NotImplementedError
    def lassociator(self, ff, gg, hh): raise NotImplementedError
    def rassociator(self, ff, gg, hh): raise NotImplementedError

    def well_typed_1(self, ff):
        return ff.disp in self.mors(ff.src, ff.tgt, ff.base)

    def well_typed_2(self, aa):
        return aa.disp in self.twos(aa.src, aa.tgt, aa.base)

    def __repr__(self):
        return self.name


class _PropCells:
    """Mixin: displayed 2-cells are tokens, so every 2-cell operation returns UNIT."""

    def id2(self, ff): return UNIT
    def vcomp(self, aa, bb): return UNIT
    def lwhisker(self, ff, aa): return UNIT
    def rwhisker(self, aa, gg): return UNIT
    def lunitor(self, ff): return UNIT
    def linvunitor(self, ff): return UNIT
    def runitor(self, ff): return UNIT
    def rinvunitor(self, ff): return UNIT
    def lassociator(self, ff, gg, hh): return UNIT
    def rassociator(self, ff, gg, hh): return UNIT


# ------------------------------------------------------------------ total


class TotalBicat(Bicategory):
    """Pairs of base and displayed cells with componentwise operations."""

    Obj, Mor, Cell = TotalObj, TotalMor, TotalCell

    def __init__(self, disp, name=None):
        self.disp = disp
        self.base = disp.base
        self.name = name or f"total({disp.name})"

    def objects_over(self, x):
        return [self.Obj(x, d) for d in self.disp.ob(x)]

    def objects(self, base_objects):
        return [xx for x in base_objects for xx in self.objects_over(x)]

    @lru_cache(maxsize=1 << 14)
    def ones(self, xx, yy):
        return tuple(self.Mor(xx, yy, f, d)
                     for f in self.base.ones(xx.base, yy.base)
                     for d in self.disp.mors(xx, yy, f))

    @lru_cache(maxsize=1 << 14)
    def twos(self, ff, gg):
        return tuple(self.Cell(ff, gg, t, d)
                     for t in self.base.twos(ff.base, gg.base)
                     for d in self.disp.twos(ff, gg, t))

    def src1(self, ff): return ff.src
    def tgt1(self, ff): return ff.tgt
    def src2(self, aa): return aa.src
    def tgt2(self, aa): return aa.tgt

    @lru_cache(maxsize=1 << 16)
    def id1(self, xx):
        return self.Mor(xx, xx, self.base.id1(xx.base), self.disp.id1(xx))

    @lru_cache(maxsize=1 << 16)
    def comp1(self, ff, gg):
        if ff.tgt != gg.src:
            raise BoundaryError("composition of non-composable total 1-cells")
        return self.Mor(ff.src, gg.tgt, self.base.comp1(ff.base, gg.base), self.disp.comp1(ff, gg))

    @lru_cache(maxsize=1 << 16)
    def id2(self, ff):
        return self.Cell(ff, ff, self.base.id2(ff.base), self.disp.id2(ff))

    @lru_cache(maxsize=1 << 16)
    def vcomp(self, aa, bb):
        if aa.tgt != bb.src:
            raise BoundaryError("vertical composition of non-matching total 2-cells")
        return self.Cell(aa.src, bb.tgt, self.base.vcomp(aa.base, bb.base), self.disp.vcomp(aa, bb))

    @lru_cache(maxsize=1 << 16)
    def lwhisker(self, ff, aa):
        return self.Cell(self.comp1(ff, aa.src), self.comp1(ff, aa.tgt),
                         self.base.lwhisker(ff.base, aa.base), self.disp.lwhisker(ff, aa))

    @lru_cache(maxsize=1 << 16)
    def rwhisker(self, aa, gg):
        return self.Cell(self.comp1(aa.src, gg), self.comp1(aa.tgt, gg),
                         self.base.rwhisker(aa.base, gg.base), self.disp.rwhisker(aa, gg))

    @lru_cache(maxsize=1 << 16)
    def lunitor(self, ff):
        return self.Cell(self.comp1(self.id1(ff.src), ff), ff,
                         self.base.lunitor(ff.base), self.disp.lunitor(ff))

    @lru_cache(maxsize=1 << 16)
    def linvunitor(self, ff):
        return self.Cell(ff, self.comp1(self.id1(ff.src), ff),
                         self.base.linvunitor(ff.base), self.disp.linvunitor(ff))

    @lru_cache(maxsize=1 << 16)
    def runitor(self, ff):
        return self.Cell(self.comp1(ff, self.id1(ff.tgt)), ff,
                         self.base.runitor(ff.base), self.disp.runitor(ff))

    @lru_cache(maxsize=1 << 16)
    def rinvunitor(self, ff):
        return self.Cell(ff, self.comp1(ff, self.id1(ff.tgt)),
                         self.base.rinvunitor(ff.base), self.disp.rinvunitor(ff))

    @lru_cache(maxsize=1 << 16)
    def lassociator(self, ff, gg, hh):
        return self.Cell(self.comp1(ff, self.comp1(gg, hh)), self.comp1(self.comp1(ff, gg), hh),
                         self.base.lassociator(ff.base, gg.base, hh.base),
                         self.disp.lassociator(ff, gg, hh))

    @lru_cache(maxsize=1 << 16)
    def rassociator(self, ff, gg, hh):
        return self.Cell(self.comp1(self.comp1(ff, gg), hh), self.comp1(ff, self.comp1(gg, hh)),
                         self.base.rassociator(ff.base, gg.base, hh.base),
                         self.disp.rassociator(ff, gg, hh))

    def eq2(self, aa, bb):
        return aa == bb

    def well_typed_1(self, ff):
        b = self.base
        f = ff.base
        return (b.src1(f) == ff.src.base and b.tgt1(f) == ff.tgt.base
                and b.well_typed_1(f) and self.disp.well_typed_1(ff))

    def well_typed_2(self, aa):
        b = self.base
        a = aa.base
        return (b.src2(a) == aa.src.base and b.tgt2(a) == aa.tgt.base
                and b.well_typed_2(a) and self.disp.well_typed_2(aa))


def total_bicat(disp):
    """The total bicategory of ``disp`` together with its projection."""
    t = TotalBicat(disp)
    return t, projection(t)


def projection(t):
    b = t.base
    return Pseudofunctor(
        t, b,
        lambda xx: xx.base, lambda ff: ff.base, lambda aa: aa.base,
        lambda xx: b.id2(b.id1(xx.base)), lambda xx: b.id2(b.id1(xx.base)),
        lambda ff, gg: b.id2(b.comp1(ff.base, gg.base)),
        lambda ff, gg: b.id2(b.comp1(ff.base, gg.base)),
        name=f"proj({t.name})",
    )


# ------------------------------------------------------------- combinators


class CellUnit(_PropCells, DispBicategory):
    """Displayed objects and 1-cells given by data, 2-cells all ``UNIT``."""

    def __init__(self, base, ob, mors, id1=None, comp1=None, name="cell_unit"):
        super().__init__(base, name)
        self._ob = ob
        self._mors = mors
        self._id1 = id1 or (lambda xx: UNIT)
        self._comp1 = comp1 or (lambda ff, gg: UNIT)

    def ob(self, x): return list(self._ob(x))
    def mors(self, xx, yy, f): return list(self._mors(xx, yy, f))
    def twos(self, ff, gg, t): return [UNIT]
    def id1(self, xx): return self._id1(xx)
    def comp1(self, ff, gg): return self._comp1(ff, gg)

    def well_typed_2(self, aa):
        return aa.disp == UNIT


def cell_unit_disp(base, ob, mors, id1=None, comp1=None, name="cell_unit"):
    return CellUnit(base, ob, mors, id1, comp1, name)


def fullsub_disp(base, pred, name="fullsub"):
    """Objects satisfying ``pred``; a single proof token over each."""
    return CellUnit(base, lambda x: [UNIT] if pred(x) else [],
                    lambda xx, yy, f: [UNIT], name=name)


def _proj(cell, i):
    if isinstance(cell, TotalObj):
        return TotalObj(cell.base, cell.disp[i])
    if isinstance(cell, TotalMor):
        return TotalMor(_proj(cell.src, i), _proj(cell.tgt, i), cell.base, cell.disp[i])
    return TotalCell(_proj(cell.src, i), _proj(cell.tgt, i), cell.base, cell.disp[i])


class Prod(DispBicategory):
    """Pairs of displayed cells of two layers over the same base."""

    def __init__(self, d1, d2, name=None):
        if d1.base is not d2.base:
            raise BoundaryError("product of displayed bicategories over different bases")
        super().__init__(d1.base, name or f"{d1.name}×{d2.name}")
        self.d1, self.d2 = d1, d2

    def ob(self, x):
        return [(a, b) for a in self.d1.ob(x) for b in self.d2.ob(x)]

    def mors(self, xx, yy, f):
        return [(a, b) for a in self.d1.mors(_proj(xx, 0), _proj(yy, 0), f)
                for b in self.d2.mors(_proj(xx, 1), _proj(yy, 1), f)]

    def twos(self, ff, gg, t):
        return [(a, b) for a in self.d1.twos(_proj(ff, 0), _proj(gg, 0), t)
                for b in self.d2.twos(_proj(ff, 1), _proj(gg, 1), t)]

    def _both(self, op, *cells):
        return (getattr(self.d1, op)(*[_proj(c, 0) for c in cells]),
                getattr(self.d2, op)(*[_proj(c, 1) for c in cells]))

    def id1(self, xx): return self._both("id1", xx)
    def comp1(self, ff, gg): return self._both("comp1", ff, gg)
    def id2(self, ff): return self._both("id2", ff)
    def vcomp(self, aa, bb): return self._both("vcomp", aa, bb)
    def lwhisker(self, ff, aa): return self._both("lwhisker", ff, aa)
    def rwhisker(self, aa, gg): return self._both("rwhisker", aa, gg)
    def lunitor(self, ff): return self._both("lunitor", ff)
    def linvunitor(self, ff): return self._both("linvunitor", ff)
    def runitor(self, ff): return self._both("runitor", ff)
    def rinvunitor(self, ff): return self._both("rinvunitor", ff)
    def lassociator(self, ff, gg, hh): return self._both("lassociator", ff, gg, hh)
    def rassociator(self, ff, gg, hh): return self._both("rassociator", ff, gg, hh)

    def well_typed_1(self, ff):
        return self.d1.well_typed_1(_proj(ff, 0)) and self.d2.well_typed_1(_proj(ff, 1))

    def well_typed_2(self, aa):
        return self.d1.well_typed_2(_proj(aa, 0)) and self.d2.well_typed_2(_proj(aa, 1))


def prod_disp(d1, d2):
    return Prod(d1, d2)


class Sigma(DispBicategory):
    """``d2`` lives over the total bicategory of ``d1``; displayed cells are
    pairs (cell of d1, cell of d2 over the paired total cell)."""

    def __init__(self, d1, d2, name=None):
        super().__init__(d1.base, name or f"sigma({d1.name},{d2.name})")
        self.d1, self.d2 = d1, d2

    # first component as a total cell of d1
    def first(self, c):
        return _proj(c, 0)

    # the cell of total(d1) under c, with the d2 part as its displayed data
    def lift(self, c):
        if isinstance(c, TotalObj):
            return TotalObj(TotalObj(c.base, c.disp[0]), c.disp[1])
        if isinstance(c, TotalMor):
            return TotalMor(self.lift(c.src), self.lift(c.tgt), self.first(c), c.disp[1])
        return TotalCell(self.lift(c.src), self.lift(c.tgt), self.first(c), c.disp[1])

    def ob(self, x):
        return [(a, b) for a in self.d1.ob(x) for b in self.d2.ob(TotalObj(x, a))]

    def mors(self, xx, yy, f):
        x1, y1 = self.first(xx), self.first(yy)
        x2, y2 = self.lift(xx), self.lift(yy)
        return [(a, b) for a in self.d1.mors(x1, y1, f)
                for b in self.d2.mors(x2, y2, TotalMor(x1, y1, f, a))]

    def twos(self, ff, gg, t):
        f1, g1 = self.first(ff), self.first(gg)
        f2, g2 = self.lift(ff), self.lift(gg)
        return [(a, b) for a in self.d1.twos(f1, g1, t)
                for b in self.d2.twos(f2, g2, TotalCell(f1, g1, t, a))]

    def _both(self, op, *cells):
        return (getattr(self.d1, op)(*[self.first(c) for c in cells]),
                getattr(self.d2, op)(*[self.lift(c) for c in cells]))

    def id1(self, xx): return self._both("id1", xx)
    def comp1(self, ff, gg): return self._both("comp1", ff, gg)
    def id2(self, ff): return self._both("id2", ff)
    def vcomp(self, aa, bb): return self._both("vcomp", aa, bb)
    def lwhisker(self, ff, aa): return self._both("lwhisker", ff, aa)
    def rwhisker(self, aa, gg): return self._both("rwhisker", aa, gg)
    def lunitor(self, ff): return self._both("lunitor", ff)
    def linvunitor(self, ff): return self._both("linvunitor", ff)
    def runitor(self, ff): return self._both("runitor", ff)
    def rinvunitor(self, ff): return self._both("rinvunitor", ff)
    def lassociator(self, ff, gg, hh): return self._both("lassociator", ff, gg, hh)
    def rassociator(self, ff, gg, hh): return self._both("rassociator", ff, gg, hh)

    def well_typed_1(self, ff):
        return self.d1.well_typed_1(self.first(ff)) and self.d2.well_typed_1(self.lift(ff))

    def well_typed_2(self, aa):
        return self.d1.well_typed_2(self.first(aa)) and self.d2.well_typed_2(self.lift(aa))


def sigma_disp(d1, d2):
    return Sigma(d1, d2)


# ----------------------------------------------------------------- analysis


@dataclass(frozen=True)
class LocalProps:
    locally_propositional: bool
    locally_groupoidal: bool
    witness: tuple = ()

    def to_dict(self):
        return {"locally_propositional": self.locally_propositional,
                "locally_groupoidal": self.locally_groupoidal}


def local_props(d, base_objects):
    """Decide both local properties over the total cells above ``base_objects``."""
    t = TotalBicat(d)
    b = d.base
    obs = t.objects(base_objects)
    prop, grpd = True, True
    witness = []
    for xx in obs:
        for yy in obs:
            fs = t.ones(xx, yy)
            for ff in fs:
                for gg in fs:
                    for a in b.twos(ff.base, gg.base):
                        cells = d.twos(ff, gg, a)
                        if len(cells) > 1:
                            prop = False
                            witness.append(("not_propositional", ff, gg, a))
                        inv = is_invertible_2cell(b, a)
                        if inv is None:
                            continue
                        for c in cells:
                            aa = TotalCell(ff, gg, a, c)
                            if not any(t.vcomp(aa, bb) == t.id2(ff) and t.vcomp(bb, aa) == t.id2(gg)
                                       for bb in (TotalCell(gg, ff, inv, e)
                                                  for e in d.twos(gg, ff, inv))):
                                grpd = False
                                witness.append(("not_groupoidal", ff, gg, a))
    return LocalProps(prop, grpd, tuple(witness))


# ----------------------------------------------------------------- sections


@dataclass
class Section:
    """A section of ``disp``: displayed data over every base cell together
    with the invertible identity/composition comparison cells."""

    disp: DispBicategory
    ob: Callable
    mor: Callable
    cell: Callable
    sid: Callable
    sid_inv: Callable
    scomp: Callable
    scomp_inv: Callable
    name: str = "s"
    total: Bicategory = None


def section_to_psfunctor(s):
    """The pseudofunctor ``x |-> (x, s(x))`` into the total bicategory."""
    t = s.total if s.total is not None else TotalBicat(s.disp)
    b = s.disp.base

    def ob(x):
        return t.Obj(x, s.ob(x))

    def mor(f):
        return t.Mor(ob(b.src1(f)), ob(b.tgt1(f)), f, s.mor(f))

    def cell(a):
        return t.Cell(mor(b.src2(a)), mor(b.tgt2(a)), a, s.cell(a))

    def identitor(x):
        return t.Cell(t.id1(ob(x)), mor(b.id1(x)), b.id2(b.id1(x)), s.sid(x))

    def identitor_inv(x):
        return t.Cell(mor(b.id1(x)), t.id1(ob(x)), b.id2(b.id1(x)), s.sid_inv(x))

    def compositor(f, g):
        return t.Cell(t.comp1(mor(f), mor(g)), mor(b.comp1(f, g)), b.id2(b.comp1(f, g)),
                      s.scomp(f, g))

    def compositor_inv(f, g):
        return t.Cell(mor(b.comp1(f, g)), t.comp1(mor(f), mor(g)), b.id2(b.comp1(f, g)),
                      s.scomp_inv(f, g))

    return Pseudofunctor(b, t, ob, mor, cell, identitor, identitor_inv,
                         compositor, compositor_inv, name=f"section({s.name})")


def check_section(s, objects, one_cells=None):
    """Section coherences, checked as the pseudofunctor laws of the induced
    pseudofunctor (they are literally the same equations on displayed parts)."""
    from .bicat import check_pseudofunctor
    return check_pseudofunctor(section_to_psfunctor(s), objects, one_cells)


def unit_section(d, name="s"):
    """The section picking the unique displayed data of a layer whose
    displayed objects and 1-cells are all single tokens."""
    return Section(d, lambda x: _only(d.ob(x)),
                   lambda f: UNIT, lambda a: UNIT,
                   lambda x: UNIT, lambda x: UNIT,
                   lambda f, g: UNIT, lambda f, g: UNIT, name=name)


def _only(xs):
    xs = list(xs)
    if len(xs) != 1:
        raise BoundaryError(f"expected exactly one displayed object, found {len(xs)}")
    return xs[0]


# --------------------------------------------------------- terminal objects


def _preserves_terminal(xx, yy, f):
    return [UNIT] if fincat.is_terminal(f.target, f.omap[xx.disp]) else []


@lru_cache(maxsize=None)
def terminal_disp_layer():
    """Over CatFin: chosen terminal objects, and functors preserving them."""
    return CellUnit(CAT_FIN, lambda c: [x for x, _ in fincat.terminal_objects(c)],
                    _preserves_terminal, name="Terminal")


@lru_cache(maxsize=None)
def terminal_total():
    return TotalBicat(terminal_disp_layer(), name="CatFin_Terminal")
