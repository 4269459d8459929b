"""Command line front end: ``bicatmnd <command> <names...>``.

Every command builds one structured report; ``--json`` prints it as JSON and
the default rendering is derived from the same dictionary.  Exit status: 0
success, 1 negative verdict, 2 input error, 3 enumeration bound exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
import time

from . import corpus
from .adjmonadic import (adj_duals, adjunction_to_monad, check_adjunction, comparison,
                         is_monadic, is_representably_monadic, monad_to_adjunction)
from .bicat import CAT_FIN, check_bicat_laws, op1, op2
from .dispbicat import terminal_total
from .emkleisli import (check_em_universal, check_kleisli_universal, em_category,
                        em_cone_report, kleisli_category,
                        kleisli_cocone_report, kleisli_cocones, univ_kleisli)
from .errors import BoundExceeded, InputError, LawError, MissingWitness
from .fincat import (check_functor, check_nat_trans, enumeration_bound, functor_props,
                     validate_category)
from .monad import (DistributiveLaw, check_monad, compose_monads, distributive_law_report,
                    make_distributive_law, mnd_adjequiv_check, mnd_bicat)
from .workspace import SCHEMA_VERSION, Serializer, Workspace, load_workspace

COMMANDS = ("validate", "laws", "em", "kleisli", "compose-dl", "adj2mnd", "mnd2adj",
            "comparison", "monadic", "duals")

OK, NEGATIVE, INPUT_ERROR, BOUND = 0, 1, 2, 3


class _Report:
    def __init__(self, command, names, samples=None):
        self.data = {"schema_version": SCHEMA_VERSION, "command": command,
                     "inputs": list(names), "verdicts": {}, "violations": []}
        if samples is not None:
            self.data["samples"] = [s.name for s in samples]

    def verdict(self, key, value):
        self.data["verdicts"][key] = value
        return value

    def violations(self, where, rep):
        for v in rep.violations:
            d = v.to_dict()
            d["in"] = where
            self.data["violations"].append(d)
        return rep.ok

    def payload(self, doc):
        self.data["payload"] = doc

    def extra(self, key, value):
        self.data[key] = value

    def status(self):
        v = self.data["verdicts"]
        bad = self.data["violations"] or not all(_truthy(x) for x in v.values())
        return NEGATIVE if bad else OK


def _truthy(x):
    if isinstance(x, dict):
        return all(_truthy(y) for y in x.values())
    return bool(x)


# ------------------------------------------------------------- commands


def _validate(ws, names, rep, args):
    names = names or ws.names()
    for n in names:
        kind = ws.kind(n)
        v = ws.get(n)
        if kind == "category":
            r = validate_category(v)
        elif kind == "functor":
            r = check_functor(v)
        elif kind == "transformation":
            r = check_nat_trans(v)
        elif kind == "monad":
            r = check_monad(CAT_FIN, v)
        elif kind == "distributive_law":
            r = (v.classical_report() if isinstance(v, DistributiveLaw)
                 else distributive_law_report(CAT_FIN, v.outer, v.inner, v.tau))
        elif kind == "adjunction":
            r = check_adjunction(v)
        elif kind == "cone":
            r = em_cone_report(v)
        else:
            r = kleisli_cocone_report(v)
        rep.verdict(n, rep.violations(n, r))


def _law_targets(ws, args):
    if args.corpus == "default":
        cats = corpus.corpus()
        monads = corpus.fixture_monads()
    else:
        cats = ws.sample_categories(args.samples)
        monads = [ws.get(n) for n in ws.names("monad")] or corpus.fixture_monads()
    return cats, monads


_LAW_ALIASES = {
    "catfin": "CatFin", "op1": "op1(CatFin)", "op1(catfin)": "op1(CatFin)",
    "op2": "op2(CatFin)", "op2(catfin)": "op2(CatFin)", "terminal": "total(Terminal)",
    "total(terminal)": "total(Terminal)", "catfin_terminal": "total(Terminal)",
    "mnd": "Mnd(CatFin)", "mnd(catfin)": "Mnd(CatFin)",
}


def _laws(ws, names, rep, args):
    cats, monads = _law_targets(ws, args)
    rep.extra("sample_objects", [c.name for c in cats])
    for n in names or ["CatFin"]:
        key = _LAW_ALIASES.get(n.lower())
        if key is None:
            raise InputError(f"unknown bicategory {n!r}; expected one of "
                             "CatFin, op1, op2, terminal, Mnd")
        if key == "CatFin":
            r = check_bicat_laws(CAT_FIN, cats)
        elif key == "op1(CatFin)":
            r = check_bicat_laws(op1(CAT_FIN), cats)
        elif key == "op2(CatFin)":
            r = check_bicat_laws(op2(CAT_FIN), cats)
        elif key == "total(Terminal)":
            t = terminal_total()
            r = check_bicat_laws(t, t.objects(cats))
        else:
            r = check_bicat_laws(mnd_bicat(CAT_FIN), monads)
        rep.verdict(key, rep.violations(key, r))
        rep.extra(f"checked[{key}]", r.checked)


def _monad(ws, name):
    return ws.get(name, "monad")


def _em(ws, names, rep, args):
    samples = ws.sample_categories(args.samples)
    out = Serializer()
    for n in names:
        m = _monad(ws, n)
        em, cone = em_category(m)
        rep.verdict(f"{n}.cone", rep.violations(n, em_cone_report(cone)))
        u = check_em_universal(cone, samples)
        rep.verdict(f"{n}.universal", u.universal)
        rep.extra(f"{n}.ump", u.to_dict())
        rep.extra(f"{n}.size", {"objects": len(em.objects), "morphisms": len(em.morphisms)})
        out.monad(m, n)
        out.cone(cone, "em", f"{n}.em_cone")
    rep.payload(out.document())


def _kleisli(ws, names, rep, args):
    samples = ws.sample_categories(args.samples)
    out = Serializer()
    for n in names:
        m = _monad(ws, n)
        kl, k = kleisli_category(m)
        rep.verdict(f"{n}.cocone", rep.violations(n, kleisli_cocone_report(k)))
        cocones = [q for x in samples for q in kleisli_cocones(CAT_FIN, m, x)]
        u = check_kleisli_universal(k, cocones, samples)
        rep.verdict(f"{n}.universal", u.universal)
        rep.extra(f"{n}.ump", u.to_dict())
        uk, kk = univ_kleisli(m)
        props = functor_props(kk)
        rep.verdict(f"{n}.comparison_ff", props.fully_faithful)
        rep.verdict(f"{n}.comparison_eso", props.essentially_surjective)
        rep.extra(f"{n}.size", {"objects": len(kl.objects), "morphisms": len(kl.morphisms)})
        out.monad(m, n)
        out.cone(k, "kleisli", f"{n}.kleisli_cocone")
        out.functor(kk, f"{n}.K")
    rep.payload(out.document())


def _compose_dl(ws, names, rep, args):
    out = Serializer()
    for n in names:
        d = ws.get(n, "distributive_law")
        if not isinstance(d, DistributiveLaw):
            try:
                d = make_distributive_law(CAT_FIN, d.outer, d.inner, d.tau)
            except LawError as exc:
                rep.verdict(n, False)
                if exc.report is not None:
                    rep.violations(n, exc.report)
                continue
        m = compose_monads(d)
        rep.verdict(n, rep.violations(n, check_monad(CAT_FIN, m)))
        out.monad(m, f"{n}.composite")
    rep.payload(out.document())


def _checked_adjunction(ws, n, rep):
    a = ws.get(n, "adjunction")
    ok = rep.violations(n, check_adjunction(a))
    rep.verdict(f"{n}.adjunction", ok)
    return a if ok else None


def _adj2mnd(ws, names, rep, args):
    out = Serializer()
    for n in names:
        a = _checked_adjunction(ws, n, rep)
        if a is None:
            continue
        m = adjunction_to_monad(a)
        rep.verdict(f"{n}.monad", rep.violations(n, check_monad(CAT_FIN, m)))
        out.monad(m, f"{n}.monad")
    rep.payload(out.document())


def _mnd2adj(ws, names, rep, args):
    out = Serializer()
    for n in names:
        m = _monad(ws, n)
        ma = monad_to_adjunction(CAT_FIN, m)
        rep.verdict(f"{n}.adjunction", rep.violations(n, check_adjunction(ma.adjunction)))
        rt = mnd_adjequiv_check(CAT_FIN, ma.equivalence)
        rep.verdict(f"{n}.round_trip", rt.to_dict())
        out.adjunction(ma.adjunction, f"{n}.adjunction")
    rep.payload(out.document())


def _comparison(ws, names, rep, args):
    out = Serializer()
    for n in names:
        a = _checked_adjunction(ws, n, rep)
        if a is None:
            continue
        w = comparison(a)
        rep.extra(f"{n}.comparison_props", functor_props(w.mediator).to_dict())
        out.functor(w.mediator, f"{n}.comparison")
    rep.payload(out.document())


def _monadic(ws, names, rep, args):
    samples = ws.sample_categories(args.samples)
    for n in names:
        a = _checked_adjunction(ws, n, rep)
        if a is None:
            continue
        direct = is_monadic(a)
        repr_ = is_representably_monadic(a, samples)
        rep.verdict(f"{n}.monadic", direct.monadic)
        rep.extra(f"{n}.witness", direct.to_dict())
        rep.extra(f"{n}.representably_monadic", repr_.to_dict())
        rep.verdict(f"{n}.agreement", direct.monadic == repr_.monadic)


def _duals(ws, names, rep, args):
    for n in names:
        a = _checked_adjunction(ws, n, rep)
        if a is None:
            continue
        d1, d2 = adj_duals(a)
        rep.verdict(f"{n}.op1", rep.violations(f"op1({n})", check_adjunction(d1)))
        rep.verdict(f"{n}.op2", rep.violations(f"op2({n})", check_adjunction(d2)))


_DISPATCH = {
    "validate": _validate, "laws": _laws, "em": _em, "kleisli": _kleisli,
    "compose-dl": _compose_dl, "adj2mnd": _adj2mnd, "mnd2adj": _mnd2adj,
    "comparison": _comparison, "monadic": _monadic, "duals": _duals,
}


def run_command(ws, command, names, samples=None, corpus_name=None, bound=None):
    """Run one command; returns ``(status, report)``."""
    args = argparse.Namespace(samples=samples, corpus=corpus_name)
    if command not in _DISPATCH:
        return INPUT_ERROR, {"command": command, "error": f"unknown command {command!r}"}
    start = time.perf_counter()
    sample_cats = None
    try:
        if command in ("em", "kleisli", "monadic"):
            sample_cats = ws.sample_categories(samples)
        rep = _Report(command, names, sample_cats)
        if command not in ("validate", "laws") and not names:
            raise InputError(f"command {command!r} needs at least one name")
        with enumeration_bound(bound or ws.bound):
            _DISPATCH[command](ws, names, rep, args)
        status = rep.status()
        data = rep.data
    except InputError as exc:
        status, data = INPUT_ERROR, {"command": command, "inputs": list(names), "error": str(exc)}
    except BoundExceeded as exc:
        status, data = BOUND, {"command": command, "inputs": list(names), "error": str(exc)}
    except (MissingWitness, LawError) as exc:
        status, data = NEGATIVE, {"command": command, "inputs": list(names), "error": str(exc)}
    data["schema_version"] = SCHEMA_VERSION
    data["status"] = status
    data["timing"] = {"seconds": round(time.perf_counter() - start, 6)}
    return status, data


def render(data):
    """Plain-text rendering of a report dictionary."""
    lines = [f"{data['command']} {' '.join(data.get('inputs', []))}".rstrip(),
             f"status: {data['status']}"]
    if "error" in data:
        lines.append(f"error: {data['error']}")
    if data.get("samples"):
        lines.append(f"samples: {', '.join(data['samples'])}")
    for k, v in data.get("verdicts", {}).items():
        lines.append(f"  {k}: {json.dumps(v, sort_keys=True)}")
    for v in data.get("violations", []):
        lines.append(f"  violation in {v['in']}: {v['law']} {v['witness']}")
    if "payload" in data:
        n = sum(len(x) for k, x in data["payload"].items() if isinstance(x, list))
        lines.append(f"payload: {n} declarations (use --json to see them)")
    return "\n".join(lines)


def dumps_report(data):
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False)


def build_parser():
    p = argparse.ArgumentParser(prog="bicatmnd",
                                description="Monads, Eilenberg-Moore and Kleisli objects, "
                                            "and adjunctions in bicategories of finite categories.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("names", nargs="*")
    p.add_argument("--workspace", metavar="FILE")
    p.add_argument("--samples", metavar="NAMES",
                   help="comma separated sample categories for universality checks")
    p.add_argument("--corpus", metavar="NAME", help="'default' uses the built-in corpus for laws")
    p.add_argument("--json", action="store_true", help="print the report as JSON")
    p.add_argument("--bound", type=int, metavar="N", help="enumeration bound")
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        ws = load_workspace(args.workspace) if args.workspace else Workspace()
    except OSError as exc:
        status, data = INPUT_ERROR, {"command": args.command, "error": str(exc)}
    except InputError as exc:
        status, data = INPUT_ERROR, {"command": args.command, "error": str(exc)}
    except BoundExceeded as exc:
        status, data = BOUND, {"command": args.command, "error": str(exc)}
    else:
        samples = args.samples.split(",") if args.samples else None
        status, data = run_command(ws, args.command, args.names, samples, args.corpus, args.bound)
    data.setdefault("status", status)
    data.setdefault("inputs", list(args.names))
    print(dumps_report(data) if args.json else render(data))
    return status


if __name__ == "__main__":
    sys.exit(main())
