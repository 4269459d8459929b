"""Finite categories given by explicit tables, functors between them and
natural transformations, with exhaustive decision procedures.

Composition is diagrammatic throughout: ``c.then(f, g)`` is "f followed by g".
Identifiers may be any hashable values; categories read from a workspace use
strings, constructed categories (functor categories, algebras, Kleisli maps)
use the cells or tuples they are built from.
"""
from __future__ import annotations

import contextlib
import contextvars
import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import BoundaryError, BoundExceeded, StructuralError
from .report import LawReport

DEFAULT_BOUND = 10**6

_bound = contextvars.ContextVar("enumeration_bound", default=DEFAULT_BOUND)


@contextlib.contextmanager
def enumeration_bound(limit):
    """Temporarily change the maximal number of candidate maps enumerated."""
    token = _bound.set(limit)
    try:
        yield
    finally:
        _bound.reset(token)


def current_bound():
    return _bound.get()


class FinCat:
    """A finite category as object/morphism tables and a composition table.

    ``compose`` maps composable pairs ``(f, g)`` (target f = source g) to the
    morphism "f then g".  Structural problems (dangling identifiers, missing or
    spurious composition entries) raise :class:`StructuralError`; the category
    laws are checked separately by :func:`validate_category`.
    """

    __slots__ = ("objects", "morphisms", "identity", "compose", "name",
                 "src", "tgt", "_homs", "_hash", "__weakref__")

    def __init__(self, objects, morphisms, identity, compose, name=None):
        self.objects = tuple(objects)
        self.morphisms = tuple((m, s, t) for m, s, t in morphisms)
        self.identity = dict(identity)
        self.compose = dict(compose)
        self.name = name
        self.src = {m: s for m, s, _ in self.morphisms}
        self.tgt = {m: t for m, _, t in self.morphisms}
        self._check_structure()
        homs = {}
        for m, s, t in self.morphisms:
            homs.setdefault((s, t), []).append(m)
        self._homs = {k: tuple(v) for k, v in homs.items()}
        self._hash = None

    def _check_structure(self):
        obs = set(self.objects)
        if len(obs) != len(self.objects):
            raise StructuralError(f"duplicate object identifier in {self.label}")
        if len(self.src) != len(self.morphisms):
            raise StructuralError(f"duplicate morphism identifier in {self.label}")
        clash = obs & set(self.src)
        if clash:
            raise StructuralError(f"identifier used for object and morphism: {sorted(map(repr, clash))}")
        for m, s, t in self.morphisms:
            for end in (s, t):
                if end not in obs:
                    raise StructuralError(f"morphism {m!r} refers to unknown object {end!r}")
        if set(self.identity) != obs:
            missing = obs - set(self.identity)
            extra = set(self.identity) - obs
            raise StructuralError(f"identity table mismatch: missing {missing or '{}'}, unknown {extra or '{}'}")
        for x, i in self.identity.items():
            if i not in self.src:
                raise StructuralError(f"identity of {x!r} is unknown morphism {i!r}")
        for (f, g), h in self.compose.items():
            for m in (f, g, h):
                if m not in self.src:
                    raise StructuralError(f"composition entry ({f!r}, {g!r}) refers to unknown morphism {m!r}")
            if self.tgt[f] != self.src[g]:
                raise StructuralError(f"composition defined on non-composable pair ({f!r}, {g!r})")
        for f, _, t in self.morphisms:
            for g, s2, _ in self.morphisms:
                if s2 == t and (f, g) not in self.compose:
                    raise StructuralError(f"missing composite of composable pair ({f!r}, {g!r})")

    @property
    def label(self):
        return self.name if self.name is not None else "<category>"

    @property
    def mor_ids(self):
        return tuple(m for m, _, _ in self.morphisms)

    def hom(self, x, y):
        return self._homs.get((x, y), ())

    def then(self, f, g):
        try:
            return self.compose[f, g]
        except KeyError:
            raise BoundaryError(f"{f!r} and {g!r} are not composable in {self.label}") from None

    def _key(self):
        return (self.objects, self.morphisms,
                frozenset(self.identity.items()), frozenset(self.compose.items()))

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._key())
        return self._hash

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, FinCat) or hash(self) != hash(other):
            return False
        return self._key() == other._key()

    def __repr__(self):
        if self.name is not None:
            return f"FinCat({self.name})"
        return f"FinCat(<{len(self.objects)} objects, {len(self.morphisms)} morphisms>)"

    def opposite(self):
        """The opposite category; identifiers are kept, directions swapped."""
        return FinCat(
            self.objects,
            [(m, t, s) for m, s, t in self.morphisms],
            self.identity,
            {(g, f): h for (f, g), h in self.compose.items()},
            name=None if self.name is None else f"{self.name}^op",
        )

    def relabel(self, rename):
        """Apply ``rename`` to every identifier (it must stay injective)."""
        return FinCat(
            [rename(x) for x in self.objects],
            [(rename(m), rename(s), rename(t)) for m, s, t in self.morphisms],
            {rename(x): rename(i) for x, i in self.identity.items()},
            {(rename(f), rename(g)): rename(h) for (f, g), h in self.compose.items()},
            name=self.name,
        )


def make_category(objects, morphisms, compose, identity=None, name=None):
    """Build a category, composing identities automatically.

    ``morphisms`` lists only the non-identity morphisms unless ``identity`` is
    given; ``compose`` only needs the composites not involving identities.
    """
    morphisms = list(morphisms)
    if identity is None:
        identity = {x: f"id{x}" for x in objects}
        morphisms = [(identity[x], x, x) for x in objects] + morphisms
    table = dict(compose)
    ids = set(identity.values())
    src = {m: s for m, s, _ in morphisms}
    tgt = {m: t for m, _, t in morphisms}
    for f, _, t in morphisms:
        for g, s, _ in morphisms:
            if s != t or (f, g) in table:
                continue
            if f in ids:
                table[f, g] = g
            elif g in ids:
                table[f, g] = f
    del src, tgt
    return FinCat(objects, morphisms, identity, table, name=name)


def validate_category(c):
    """Check the category laws; the report is empty iff ``c`` is a category."""
    rep = LawReport()
    for x in c.objects:
        i = c.identity[x]
        rep.expect(c.src[i] == x and c.tgt[i] == x, "identity_boundary", x, i)
    for (f, g), h in c.compose.items():
        rep.expect(c.src[h] == c.src[f] and c.tgt[h] == c.tgt[g], "compose_boundary", f, g, h)
    for f, s, t in c.morphisms:
        rep.expect(c.compose[c.identity[s], f] == f, "left_unit", f)
        rep.expect(c.compose[f, c.identity[t]] == f, "right_unit", f)
    for f, _, t in c.morphisms:
        for g in _outgoing(c, t):
            fg = c.compose[f, g]
            for h in _outgoing(c, c.tgt[g]):
                gh = c.compose[g, h]
                left = c.compose.get((fg, h))
                right = c.compose.get((f, gh))
                rep.expect(left is not None and left == right, "assoc", f, g, h)
    seen = set()
    for m in list(c.objects) + list(c.mor_ids):
        rep.expect(m not in seen, "distinct_identifiers", m)
        seen.add(m)
    return rep


def _outgoing(c, x):
    return [m for y in c.objects for m in c.hom(x, y)]


def is_isomorphism(c, f):
    """Return the inverse of ``f`` if it has one, else ``None``."""
    s, t = c.src[f], c.tgt[f]
    for g in c.hom(t, s):
        if c.compose[f, g] == c.identity[s] and c.compose[g, f] == c.identity[t]:
            return g
    return None


def find_iso(c, x, y):
    """Exhaustive search for an isomorphism ``x -> y``; returns (f, inverse) or None."""
    for f in c.hom(x, y):
        g = is_isomorphism(c, f)
        if g is not None:
            return f, g
    return None


def terminal_objects(c):
    """Objects ``x`` with every ``hom(y, x)`` a singleton, each paired with
    the family ``{y: unique morphism y -> x}``."""
    out = []
    for x in c.objects:
        evidence = {}
        for y in c.objects:
            h = c.hom(y, x)
            if len(h) != 1:
                break
            evidence[y] = h[0]
        else:
            out.append((x, evidence))
    return out


def is_terminal(c, x):
    return all(len(c.hom(y, x)) == 1 for y in c.objects)


# ---------------------------------------------------------------- functors


class Functor:
    """A functor as object and morphism maps.

    Instances are hash-consed: equal data yields the same object, so equality
    is identity.  A name, if any, is the first one supplied for that data.
    """

    __slots__ = ("source", "target", "omap", "mmap", "name", "_hash")
    _table = {}

    def __new__(cls, source, target, omap, mmap, name=None):
        key = (source, target, frozenset(omap.items()), frozenset(mmap.items()))
        self = cls._table.get(key)
        if self is None:
            self = object.__new__(cls)
            self.source, self.target = source, target
            self.omap, self.mmap = omap, mmap
            self.name = name
            self._hash = hash(key)
            cls._table[key] = self
        elif name and self.name is None:
            self.name = name
        return self

    def __call__(self, x):
        if x in self.omap:
            return self.omap[x]
        return self.mmap[x]

    def __hash__(self):
        return self._hash

    __eq__ = object.__eq__

    def __repr__(self):
        if self.name:
            return self.name
        om = ", ".join(f"{x}->{y}" for x, y in self.omap.items())
        return f"Functor({self.source.label}->{self.target.label}: {om})"


def make_functor(source, target, omap, mmap=None, name=None):
    """Build and validate a functor.  ``mmap`` may omit identities."""
    mmap = dict(mmap or {})
    for x in source.objects:
        i = source.identity[x]
        if i not in mmap and x in omap:
            mmap[i] = target.identity.get(omap[x])
    f = Functor(source, target, dict(omap), mmap, name=name)
    rep = check_functor(f)
    if rep.violations:
        raise StructuralError(f"invalid functor {name or ''}: {rep.laws()}")
    return f


def check_functor(f):
    rep = LawReport()
    c, d = f.source, f.target
    if set(f.omap) != set(c.objects) or set(f.mmap) != set(c.mor_ids):
        rep.fail("functor_total", f)
        return rep
    for x in c.objects:
        if f.omap[x] not in d.identity:
            rep.fail("functor_objects", x)
            return rep
    for m, s, t in c.morphisms:
        fm = f.mmap[m]
        ok = fm in d.src and d.src[fm] == f.omap[s] and d.tgt[fm] == f.omap[t]
        rep.expect(ok, "functor_boundary", m)
    if rep.violations:
        return rep
    for x in c.objects:
        rep.expect(f.mmap[c.identity[x]] == d.identity[f.omap[x]], "functor_identity", x)
    for (g, h), gh in c.compose.items():
        rep.expect(d.compose[f.mmap[g], f.mmap[h]] == f.mmap[gh], "functor_composition", g, h)
    return rep


def identity_functor(c):
    return _identity_functor(c)


@lru_cache(maxsize=None)
def _identity_functor(c):
    return Functor(c, c, {x: x for x in c.objects}, {m: m for m in c.mor_ids})


@lru_cache(maxsize=1 << 16)
def compose_functors(f, g):
    """Diagrammatic composite: first ``f`` then ``g``."""
    if f.target != g.source:
        raise BoundaryError(f"cannot compose {f!r} with {g!r}")
    go, gm = g.omap, g.mmap
    return Functor(f.source, g.target,
                   {x: go[y] for x, y in f.omap.items()},
                   {m: gm[n] for m, n in f.mmap.items()})


def constant_functor(c, d, y):
    i = d.identity[y]
    return Functor(c, d, {x: y for x in c.objects}, {m: i for m in c.mor_ids})


def _check_size(size):
    if size > current_bound():
        raise BoundExceeded(f"enumeration of {size} candidate maps exceeds bound {current_bound()}")


def functors(c, d):
    """All functors ``c -> d`` in a deterministic order."""
    return _functors(c, d, current_bound())


@lru_cache(maxsize=None)
def _functors(c, d, bound):
    # candidates are counted per object map: only type-correct morphism maps
    _check_size(len(d.objects) ** len(c.objects))
    ids = set(c.identity.values())
    free = [(m, s, t) for m, s, t in c.morphisms if m not in ids]
    plans = []
    size = 0
    for image in itertools.product(d.objects, repeat=len(c.objects)):
        omap = dict(zip(c.objects, image))
        choices = [d.hom(omap[s], omap[t]) for _, s, t in free]
        size += math.prod(len(ch) for ch in choices)
        _check_size(size)
        plans.append((omap, choices))
    out = []
    for omap, choices in plans:
        base = {c.identity[x]: d.identity[omap[x]] for x in c.objects}
        for pick in itertools.product(*choices):
            mmap = dict(base)
            mmap.update(zip((m for m, _, _ in free), pick))
            if all(d.compose[mmap[g], mmap[h]] == mmap[gh] for (g, h), gh in c.compose.items()):
                out.append(Functor(c, d, omap, mmap))
    return tuple(out)


def functor_props(f):
    """Decide full faithfulness and essential surjectivity by enumeration."""
    c, d = f.source, f.target
    ff = True
    for x in c.objects:
        for y in c.objects:
            images = [f.mmap[m] for m in c.hom(x, y)]
            target = d.hom(f.omap[x], f.omap[y])
            if len(set(images)) != len(images) or set(images) != set(target):
                ff = False
                break
        if not ff:
            break
    image_obs = set(f.omap.values())
    eso = all(
        y in image_obs or any(find_iso(d, z, y) for z in image_obs)
        for y in d.objects
    )
    return FunctorProps(ff, eso, ff and eso)


@dataclass(frozen=True)
class FunctorProps:
    fully_faithful: bool
    essentially_surjective: bool
    is_equivalence: bool

    def to_dict(self):
        return {"fully_faithful": self.fully_faithful,
                "essentially_surjective": self.essentially_surjective,
                "is_equivalence": self.is_equivalence}


def isomorphisms(c, d):
    """All isomorphisms of categories ``c -> d`` (bijective functors)."""
    if len(c.objects) != len(d.objects) or len(c.morphisms) != len(d.morphisms):
        return []
    out = []
    for f in functors(c, d):
        if len(set(f.omap.values())) == len(c.objects) and len(set(f.mmap.values())) == len(c.morphisms):
            out.append(f)
    return out


def find_isomorphism(c, d):
    found = isomorphisms(c, d)
    return found[0] if found else None


def invert_isomorphism(f):
    return Functor(f.target, f.source,
                   {y: x for x, y in f.omap.items()},
                   {n: m for m, n in f.mmap.items()})


# ---------------------------------------------------- natural transformations


class NatTrans:
    """A natural transformation by components; hash-consed like Functor."""

    __slots__ = ("source", "target", "components", "name", "_hash")
    _table = {}

    def __new__(cls, source, target, components, name=None):
        key = (source, target, frozenset(components.items()))
        self = cls._table.get(key)
        if self is None:
            self = object.__new__(cls)
            self.source, self.target = source, target
            self.components = components
            self.name = name
            self._hash = hash(key)
            cls._table[key] = self
        elif name and self.name is None:
            self.name = name
        return self

    def __getitem__(self, x):
        return self.components[x]

    def __hash__(self):
        return self._hash

    __eq__ = object.__eq__

    def __repr__(self):
        comps = ", ".join(f"{x}:{m}" for x, m in self.components.items())
        return f"NatTrans({comps})"


def check_nat_trans(a):
    rep = LawReport()
    f, g = a.source, a.target
    if f.source != g.source or f.target != g.target:
        rep.fail("nat_boundary", a)
        return rep
    c, d = f.source, f.target
    if set(a.components) != set(c.objects):
        rep.fail("nat_total", a)
        return rep
    for x in c.objects:
        m = a.components[x]
        ok = m in d.src and d.src[m] == f.omap[x] and d.tgt[m] == g.omap[x]
        rep.expect(ok, "component_boundary", x)
    if rep.violations:
        return rep
    for m, s, t in c.morphisms:
        rep.expect(d.compose[f.mmap[m], a[t]] == d.compose[a[s], g.mmap[m]], "naturality", m)
    return rep


def make_nat_trans(source, target, components, name=None):
    a = NatTrans(source, target, dict(components), name=name)
    rep = check_nat_trans(a)
    if rep.violations:
        raise StructuralError(f"invalid natural transformation {name or ''}: {rep.laws()}")
    return a


@lru_cache(maxsize=1 << 16)
def identity_nat(f):
    d = f.target
    return NatTrans(f, f, {x: d.identity[y] for x, y in f.omap.items()})


@lru_cache(maxsize=1 << 16)
def vcomp(a, b):
    """Vertical composite ``a`` then ``b``."""
    if a.target != b.source:
        raise BoundaryError("vertical composition of non-matching transformations")
    d = a.source.target.compose
    bc = b.components
    return NatTrans(a.source, b.target, {x: d[m, bc[x]] for x, m in a.components.items()})


@lru_cache(maxsize=1 << 16)
def lwhisker(f, a):
    """``f ◁ a``: precompose the transformation ``a`` with the functor ``f``."""
    if f.target != a.source.source:
        raise BoundaryError("left whiskering across mismatched categories")
    ac = a.components
    return NatTrans(compose_functors(f, a.source), compose_functors(f, a.target),
                    {x: ac[y] for x, y in f.omap.items()})


@lru_cache(maxsize=1 << 16)
def rwhisker(a, g):
    """``a ▷ g``: postcompose the transformation ``a`` with the functor ``g``."""
    if a.source.target != g.source:
        raise BoundaryError("right whiskering across mismatched categories")
    gm = g.mmap
    return NatTrans(compose_functors(a.source, g), compose_functors(a.target, g),
                    {x: gm[m] for x, m in a.components.items()})


def hcomp(a, b):
    """Horizontal composite of ``a: F => F'`` (C -> D) and ``b: G => G'`` (D -> E)."""
    return vcomp(rwhisker(a, b.source), lwhisker(a.target, b))


def nat_transs(f, g):
    """All natural transformations ``f => g``."""
    return _nat_transs(f, g, current_bound())


@lru_cache(maxsize=None)
def _nat_transs(f, g, bound):
    c, d = f.source, f.target
    choices = [d.hom(f.omap[x], g.omap[x]) for x in c.objects]
    size = 1
    for ch in choices:
        size *= len(ch)
    if size > bound:
        raise BoundExceeded(f"{size} candidate component families exceed bound {bound}")
    out = []
    for pick in itertools.product(*choices):
        comps = dict(zip(c.objects, pick))
        if all(d.compose[f.mmap[m], comps[t]] == d.compose[comps[s], g.mmap[m]]
               for m, s, t in c.morphisms):
            out.append(NatTrans(f, g, comps))
    return tuple(out)


def functor_category(c, d):
    """The category of functors ``c -> d`` and natural transformations."""
    return _functor_category(c, d, current_bound())


@lru_cache(maxsize=None)
def _functor_category(c, d, bound):
    obs = functors(c, d)
    morphisms = []
    for f in obs:
        for g in obs:
            morphisms.extend((a, f, g) for a in nat_transs(f, g))
    identity = {f: identity_nat(f) for f in obs}
    compose = {}
    by_source = {}
    for a, f, _ in morphisms:
        by_source.setdefault(f, []).append(a)
    for a, _, g in morphisms:
        for b in by_source.get(g, ()):
            compose[a, b] = vcomp(a, b)
    name = f"[{c.label},{d.label}]" if c.name and d.name else None
    return FinCat(obs, morphisms, identity, compose, name=name)


def precomposition_functor(k, d):
    """``D^C2 -> D^C1`` given by precomposing with ``k: C1 -> C2``."""
    src = functor_category(k.target, d)
    tgt = functor_category(k.source, d)
    return Functor(src, tgt,
                   {f: compose_functors(k, f) for f in src.objects},
                   {a: lwhisker(k, a) for a in src.mor_ids})
