"""JSON workspace files: parsing with located diagnostics, and serialization.

A workspace is a JSON object::

    {
      "schema_version": 1,
      "bound": 1000000,                       # optional enumeration bound
      "limits": {"max_objects": 6, "max_morphisms": 40},
      "categories": [{"name", "objects", "morphisms": [[m, s, t]],
                      "identity": {x: m}, "compose": [[f, g, "f then g"]]}],
      "functors": [{"name", "source", "target", "objects": {..}, "morphisms": {..}}],
      "transformations": [{"name", "source", "target", "components": {..}}],
      "monads": [{"name", "category", "endo", "unit", "mult"}],
      "distributive_laws": [{"name", "outer", "inner", "tau"}],
      "adjunctions": [{"name", "left", "right", "unit", "counit"}],
      "cones": [{"name", "kind": "em" | "kleisli", "monad", "object", "mor", "cell"}],
      "samples": {"default": ["One", "Arrow"]}
    }

Composition tables are explicit: every composable pair, identities
included, must be listed.  A functor reference is a declared name,
``{"id": category}`` or a list of references composed left to right.
Declared names share one namespace; built-in corpus names are visible
unless the workspace declares the same name.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .bicat import CAT_FIN
from .dispbicat import UNIT
from .errors import (BoundExceeded, InputError, StructuralError, StructuralViolation,
                     UnresolvedName, WorkspaceSyntaxError)
from .fincat import (DEFAULT_BOUND, FinCat, Functor, NatTrans, compose_functors,
                     identity_functor)

SCHEMA_VERSION = 1
DEFAULT_LIMITS = {"max_objects": 6, "max_morphisms": 40}
SECTIONS = ("categories", "functors", "transformations", "monads", "distributive_laws",
            "adjunctions", "cones")


@dataclass(frozen=True)
class DistLawDecl:
    name: str
    outer: object
    inner: object
    tau: object


@dataclass
class Workspace:
    decls: dict = field(default_factory=dict)      # name -> (kind, value)
    samples: dict = field(default_factory=dict)    # set name -> [names]
    bound: int = DEFAULT_BOUND
    limits: dict = field(default_factory=lambda: dict(DEFAULT_LIMITS))
    use_builtins: bool = True

    def get(self, name, kind=None, path=None):
        if name in self.decls:
            k, v = self.decls[name]
        elif self.use_builtins and name in builtins():
            k, v = builtins()[name]
        else:
            raise UnresolvedName(name, path, kind or "name")
        if kind is not None and k != kind:
            raise InputError(f"{name!r} is a {k}, expected a {kind}", path)
        return v

    def kind(self, name):
        if name in self.decls:
            return self.decls[name][0]
        if self.use_builtins and name in builtins():
            return builtins()[name][0]
        raise UnresolvedName(name)

    def names(self, kind=None):
        return [n for n, (k, _) in self.decls.items() if kind is None or k == kind]

    def sample_categories(self, names=None):
        if names is None:
            names = self.samples.get("default", ["One", "Arrow"])
        return [self.get(n, "category", "samples") for n in names]


_BUILTINS = None


def builtins():
    """The corpus categories, fixture monads and fixture adjunctions."""
    global _BUILTINS
    if _BUILTINS is None:
        from . import corpus
        from .monad import trivial_distributive_law
        out = {}
        for c in corpus.corpus() + [corpus.z2()]:
            out[c.name] = ("category", c)
        for m in corpus.fixture_monads():
            out[m.name] = ("monad", m)
        for a in corpus.fixture_adjunctions():
            out[a.name] = ("adjunction", a)
        for m in corpus.fixture_monads():
            out[f"trivial({m.name})"] = ("distributive_law", trivial_distributive_law(CAT_FIN, m))
        out["CeilM/CeilM"] = ("distributive_law", corpus.fixture_distributive_laws()[-1])
        _BUILTINS = out
    return _BUILTINS


# ----------------------------------------------------------------- parsing


def load_workspace(path):
    with open(path, encoding="utf-8") as fh:
        return parse_workspace(fh.read())


def parse_workspace(text, use_builtins=True):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise WorkspaceSyntaxError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(doc, dict):
        raise InputError("workspace must be a JSON object", "$")
    version = doc.get("schema_version")
    if version != SCHEMA_VERSION:
        raise InputError(f"unsupported schema_version {version!r}", "$.schema_version")
    ws = Workspace(use_builtins=use_builtins)
    ws.bound = _int(doc.get("bound", DEFAULT_BOUND), "$.bound")
    ws.limits.update(doc.get("limits", {}))
    p = _Parser(ws)
    for section in SECTIONS:
        entries = doc.get(section, [])
        if not isinstance(entries, list):
            raise InputError("expected a list", f"$.{section}")
        for i, entry in enumerate(entries):
            path = f"$.{section}[{i}]"
            if not isinstance(entry, dict) or not isinstance(entry.get("name"), str):
                raise InputError("declaration needs a string 'name'", path)
            name = entry["name"]
            if name in ws.decls:
                raise StructuralViolation(f"duplicate declaration {name!r}", path)
            kind, value = getattr(p, section)(entry, path)
            ws.decls[name] = (kind, value)
    samples = doc.get("samples", {})
    if not isinstance(samples, dict):
        raise InputError("expected an object", "$.samples")
    for key, names in samples.items():
        for j, n in enumerate(names):
            ws.get(n, "category", f"$.samples.{key}[{j}]")
        ws.samples[key] = list(names)
    unknown = set(doc) - set(SECTIONS) - {"schema_version", "bound", "limits", "samples"}
    if unknown:
        raise InputError(f"unknown top-level keys {sorted(unknown)}", "$")
    return ws


def _int(v, path):
    if not isinstance(v, int) or v <= 0:
        raise InputError("expected a positive integer", path)
    return v


def _need(entry, key, path):
    if key not in entry:
        raise InputError(f"missing field {key!r}", path)
    return entry[key]


class _Parser:
    def __init__(self, ws):
        self.ws = ws

    def categories(self, e, path):
        objects = _need(e, "objects", path)
        obs = set(objects)
        mors = {}
        for i, row in enumerate(_need(e, "morphisms", path)):
            if not (isinstance(row, list) and len(row) == 3):
                raise InputError("morphism entry must be [name, source, target]", f"{path}.morphisms[{i}]")
            m, s, t = row
            for end in (s, t):
                if end not in obs:
                    raise UnresolvedName(end, f"{path}.morphisms[{i}]", "object")
            if m in mors:
                raise StructuralViolation(f"duplicate morphism identifier {m!r}", f"{path}.morphisms[{i}]")
            mors[m] = (s, t)
        identity = _need(e, "identity", path)
        for x, m in identity.items():
            if x not in obs:
                raise UnresolvedName(x, f"{path}.identity", "object")
            if m not in mors:
                raise UnresolvedName(m, f"{path}.identity.{x}", "morphism")
        compose = {}
        for i, row in enumerate(_need(e, "compose", path)):
            if not (isinstance(row, list) and len(row) == 3):
                raise InputError("compose entry must be [f, g, f_then_g]", f"{path}.compose[{i}]")
            for m in row:
                if m not in mors:
                    raise UnresolvedName(m, f"{path}.compose[{i}]", "morphism")
            if (row[0], row[1]) in compose:
                raise StructuralViolation(f"composite of ({row[0]!r}, {row[1]!r}) given twice",
                                          f"{path}.compose[{i}]")
            compose[row[0], row[1]] = row[2]
        lim = self.ws.limits
        if len(objects) > lim["max_objects"] or len(mors) > lim["max_morphisms"]:
            raise BoundExceeded(f"{path}: category exceeds size limits {lim}")
        try:
            c = FinCat(objects, [(m, s, t) for m, (s, t) in mors.items()], identity, compose,
                       name=e["name"])
        except StructuralError as exc:
            raise StructuralViolation(str(exc), path) from None
        return "category", c

    def category(self, name, path):
        return self.ws.get(name, "category", path)

    def functor_ref(self, ref, path):
        if isinstance(ref, str):
            return self.ws.get(ref, "functor", path)
        if isinstance(ref, dict) and set(ref) == {"id"}:
            return identity_functor(self.category(ref["id"], path))
        if isinstance(ref, list) and ref:
            fs = [self.functor_ref(r, f"{path}[{i}]") for i, r in enumerate(ref)]
            out = fs[0]
            for g in fs[1:]:
                if out.target != g.source:
                    raise StructuralViolation("composite of non-composable functors", path)
                out = compose_functors(out, g)
            return out
        raise InputError("functor reference must be a name, {'id': category} or a list", path)

    def functors(self, e, path):
        c = self.category(_need(e, "source", path), f"{path}.source")
        d = self.category(_need(e, "target", path), f"{path}.target")
        omap, mmap = dict(_need(e, "objects", path)), dict(_need(e, "morphisms", path))
        for x in c.objects:
            if x not in omap:
                raise StructuralViolation(f"object {x!r} has no image", f"{path}.objects")
        for x, y in omap.items():
            if x not in c.identity:
                raise UnresolvedName(x, f"{path}.objects", "object")
            if y not in d.identity:
                raise UnresolvedName(y, f"{path}.objects.{x}", "object")
        for m in c.mor_ids:
            if m not in mmap:
                raise StructuralViolation(f"morphism {m!r} has no image", f"{path}.morphisms")
        for m, n in mmap.items():
            if m not in c.src:
                raise UnresolvedName(m, f"{path}.morphisms", "morphism")
            if n not in d.src:
                raise UnresolvedName(n, f"{path}.morphisms.{m}", "morphism")
            if d.src[n] != omap[c.src[m]] or d.tgt[n] != omap[c.tgt[m]]:
                raise StructuralViolation(f"image of {m!r} has the wrong boundary", f"{path}.morphisms.{m}")
        return "functor", Functor(c, d, omap, mmap, name=e["name"])

    def transformations(self, e, path):
        f = self.functor_ref(_need(e, "source", path), f"{path}.source")
        g = self.functor_ref(_need(e, "target", path), f"{path}.target")
        if f.source != g.source or f.target != g.target:
            raise StructuralViolation("source and target functors are not parallel", path)
        comps = dict(_need(e, "components", path))
        c, d = f.source, f.target
        for x in c.objects:
            if x not in comps:
                raise StructuralViolation(f"no component at {x!r}", f"{path}.components")
        for x, m in comps.items():
            if x not in c.identity:
                raise UnresolvedName(x, f"{path}.components", "object")
            if m not in d.src:
                raise UnresolvedName(m, f"{path}.components.{x}", "morphism")
            if d.src[m] != f.omap[x] or d.tgt[m] != g.omap[x]:
                raise StructuralViolation(f"component at {x!r} has the wrong boundary",
                                          f"{path}.components.{x}")
        return "transformation", NatTrans(f, g, comps, name=e["name"])

    def nat(self, name, path, source, target):
        a = self.ws.get(name, "transformation", path)
        if a.source != source or a.target != target:
            raise StructuralViolation(f"{name!r} does not have the required boundary", path)
        return a

    def monads(self, e, path):
        from .monad import Monad
        c = self.category(_need(e, "category", path), f"{path}.category")
        endo = self.functor_ref(_need(e, "endo", path), f"{path}.endo")
        if endo.source != c or endo.target != c:
            raise StructuralViolation("endo is not an endofunctor of the category", f"{path}.endo")
        unit = self.nat(_need(e, "unit", path), f"{path}.unit", identity_functor(c), endo)
        mult = self.nat(_need(e, "mult", path), f"{path}.mult", compose_functors(endo, endo), endo)
        return "monad", Monad(c, ((endo, (unit, mult)), UNIT), name=e["name"])

    def distributive_laws(self, e, path):
        m1 = self.ws.get(_need(e, "outer", path), "monad", f"{path}.outer")
        m2 = self.ws.get(_need(e, "inner", path), "monad", f"{path}.inner")
        if m1.ob != m2.ob:
            raise StructuralViolation("monads live on different categories", path)
        tau = self.nat(_need(e, "tau", path), f"{path}.tau",
                       compose_functors(m2.endo, m1.endo), compose_functors(m1.endo, m2.endo))
        return "distributive_law", DistLawDecl(e["name"], m1, m2, tau)

    def adjunctions(self, e, path):
        from .adjmonadic import Adjunction
        l = self.functor_ref(_need(e, "left", path), f"{path}.left")
        r = self.functor_ref(_need(e, "right", path), f"{path}.right")
        if l.source != r.target or l.target != r.source:
            raise StructuralViolation("left and right adjoints are not opposed", path)
        x, y = l.source, l.target
        unit = self.nat(_need(e, "unit", path), f"{path}.unit", identity_functor(x),
                        compose_functors(l, r))
        counit = self.nat(_need(e, "counit", path), f"{path}.counit",
                          compose_functors(r, l), identity_functor(y))
        return "adjunction", Adjunction(CAT_FIN, l, r, unit, counit, e["name"])

    def cones(self, e, path):
        from .emkleisli import EMCone, KleisliCocone
        kind = _need(e, "kind", path)
        m = self.ws.get(_need(e, "monad", path), "monad", f"{path}.monad")
        ob = self.category(_need(e, "object", path), f"{path}.object")
        mor = self.functor_ref(_need(e, "mor", path), f"{path}.mor")
        if kind == "em":
            if mor.source != ob or mor.target != m.ob:
                raise StructuralViolation("cone 1-cell has the wrong boundary", f"{path}.mor")
            cell = self.nat(_need(e, "cell", path), f"{path}.cell",
                            compose_functors(mor, m.endo), compose_functors(identity_functor(ob), mor))
            return "cone", EMCone(CAT_FIN, m, ob, mor, cell)
        if kind == "kleisli":
            if mor.source != m.ob or mor.target != ob:
                raise StructuralViolation("cocone 1-cell has the wrong boundary", f"{path}.mor")
            cell = self.nat(_need(e, "cell", path), f"{path}.cell", compose_functors(m.endo, mor), mor)
            return "cocone", KleisliCocone(CAT_FIN, m, ob, mor, cell)
        raise InputError(f"unknown cone kind {kind!r}", f"{path}.kind")


# ----------------------------------------------------------- serialization


def _plain(x):
    if isinstance(x, str):
        return x
    if isinstance(x, (tuple, list)):
        return [_plain(y) for y in x]
    name = getattr(x, "name", None)
    return name if isinstance(name, str) else repr(x)


def ident(x):
    """Canonical string identifier: strings are kept, anything else is
    JSON-encoded (tuples as lists)."""
    if isinstance(x, str):
        return x
    return json.dumps(_plain(x), separators=(",", ":"), ensure_ascii=False)


class Serializer:
    """Collects declarations and emits a workspace document."""

    def __init__(self):
        self.sections = {s: [] for s in SECTIONS}
        self._names = {}
        self._used = set()

    def _fresh(self, obj, base):
        key = id(obj)
        if key in self._names:
            return self._names[key][1]
        name = base if isinstance(base, str) and base not in self._used else None
        k = 1
        while name is None or name in self._used:
            name = f"{base or 'decl'}_{k}"
            k += 1
        self._used.add(name)
        self._names[key] = (obj, name)  # keep obj alive so id() stays unique
        return name

    def _known(self, obj):
        hit = self._names.get(id(obj))
        return hit[1] if hit else None

    def category(self, c, name=None):
        known = self._known(c)
        if known:
            return known
        name = self._fresh(c, name or c.name or "category")
        ids = [ident(x) for x in c.objects] + [ident(m) for m in c.mor_ids]
        if len(set(ids)) != len(ids):
            raise StructuralError(f"identifiers of {name} are not distinct as strings")
        self.sections["categories"].append({
            "name": name,
            "objects": [ident(x) for x in c.objects],
            "morphisms": [[ident(m), ident(s), ident(t)] for m, s, t in c.morphisms],
            "identity": {ident(x): ident(i) for x, i in c.identity.items()},
            "compose": [[ident(f), ident(g), ident(h)] for (f, g), h in c.compose.items()],
        })
        return name

    def functor(self, f, name=None):
        known = self._known(f)
        if known:
            return known
        src, tgt = self.category(f.source), self.category(f.target)
        if name is None and f.name is None and f is identity_functor(f.source):
            name = f"id({src})"
        name = self._fresh(f, name or f.name or "functor")
        self.sections["functors"].append({
            "name": name, "source": src, "target": tgt,
            "objects": {ident(x): ident(y) for x, y in f.omap.items()},
            "morphisms": {ident(m): ident(n) for m, n in f.mmap.items()},
        })
        return name

    def nat(self, a, name=None):
        known = self._known(a)
        if known:
            return known
        src, tgt = self.functor(a.source), self.functor(a.target)
        name = self._fresh(a, name or "transformation")
        self.sections["transformations"].append({
            "name": name, "source": src, "target": tgt,
            "components": {ident(x): ident(m) for x, m in a.components.items()},
        })
        return name

    def monad(self, m, name=None):
        known = self._known(m)
        if known:
            return known
        base = name or m.name or "monad"
        c = self.category(m.ob)
        endo = self.functor(m.endo, f"{base}.endo")
        unit = self.nat(m.unit, f"{base}.unit")
        mult = self.nat(m.mult, f"{base}.mult")
        name = self._fresh(m, base)
        self.sections["monads"].append({"name": name, "category": c, "endo": endo,
                                        "unit": unit, "mult": mult})
        return name

    def adjunction(self, a, name=None):
        base = name or a.name or "adjunction"
        l, r = self.functor(a.l, f"{base}.left"), self.functor(a.r, f"{base}.right")
        unit, counit = self.nat(a.unit, f"{base}.unit"), self.nat(a.counit, f"{base}.counit")
        name = self._fresh(a, base)
        self.sections["adjunctions"].append({"name": name, "left": l, "right": r,
                                             "unit": unit, "counit": counit})
        return name

    def cone(self, cone, kind, name):
        m = self.monad(cone.monad)
        ob = self.category(cone.ob)
        mor = self.functor(cone.mor, f"{name}.mor")
        cell = self.nat(cone.cell, f"{name}.cell")
        name = self._fresh(cone, name)
        self.sections["cones"].append({"name": name, "kind": kind, "monad": m, "object": ob,
                                       "mor": mor, "cell": cell})
        return name

    def document(self):
        doc = {"schema_version": SCHEMA_VERSION}
        for s in SECTIONS:
            if self.sections[s]:
                doc[s] = self.sections[s]
        return doc


def serialize_category(c, name=None):
    s = Serializer()
    s.category(c, name)
    return s.document()


def dumps(doc):
    return json.dumps(doc, indent=2, ensure_ascii=False)
