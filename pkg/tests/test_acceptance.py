"""Acceptance criteria, one test each.

Every test prints ``criterion N: PASS`` or ``criterion N: FAIL`` followed by
the failing checks; the lines are also repeated in the pytest summary.
Run directly (``python tests/test_acceptance.py``) for the lines alone.
"""
import time

from bicatmnd import corpus
from bicatmnd.adjmonadic import (adj_duals, adjunction_to_monad, identity_adjunction,
                                 is_monadic, is_representably_monadic, monad_to_adjunction,
                                 repr_adjequiv_check)
from bicatmnd.bicat import (CAT_FIN, CatFin, Pseudofunctor, check_bicat_laws,
                            check_pseudofunctor, identity_psfunctor, op1, op2,
                            triangle_report)
from bicatmnd.cli import dumps_report, run_command
from bicatmnd.dispbicat import terminal_total
from bicatmnd.emkleisli import (check_em_universal, check_kleisli_universal, em_category,
                                kleisli_category, kleisli_cocones, op1_transfer_report,
                                precomposition_report, em_criteria_bridge, univ_kleisli)
from bicatmnd.fincat import (FinCat, NatTrans, find_isomorphism, functor_props,
                             identity_functor, make_functor, validate_category)
from bicatmnd.monad import (check_monad, comonad_law_report, comonad_via_op2, compose_monads,
                            hom_monad, id_monad, id_monad_psfunctor, mnd_adjequiv_check,
                            mnd_bicat, psfunctor_on_mnd)
from bicatmnd.workspace import (Serializer, Workspace, dumps, ident, parse_workspace,
                                serialize_category)

RESULTS = {}
STARTED = time.perf_counter()
SAMPLES = [corpus.one(), corpus.arrow()]


class _Checks:
    def __init__(self, n, title):
        self.n, self.title = n, title
        self.failed = []
        self.count = 0

    def __call__(self, ok, what):
        self.count += 1
        if not ok:
            self.failed.append(what)

    def finish(self):
        verdict = "PASS" if not self.failed else "FAIL"
        line = f"criterion {self.n}: {verdict}  {self.title} ({self.count} checks)"
        if self.failed:
            line += "; failing: " + ", ".join(self.failed)
        RESULTS[self.n] = line
        print(line)
        assert not self.failed, line


# ------------------------------------------------------------- faults


class _TwistedUnitor(CatFin):
    name = "TwistedUnitor"

    def __init__(self):
        i = identity_functor(corpus.z2())
        self.target, self.twist = i, NatTrans(i, i, {"*": "t"})

    def lunitor(self, f):
        return self.twist if f is self.target else super().lunitor(f)

    def linvunitor(self, f):
        return self.twist if f is self.target else super().linvunitor(f)


class _TwistedAssociator(CatFin):
    name = "TwistedAssociator"

    def __init__(self):
        i = identity_functor(corpus.z2())
        self.target, self.twist = i, NatTrans(i, i, {"*": "t"})

    def lassociator(self, f, g, h):
        return self.twist if f is g is h is self.target else super().lassociator(f, g, h)

    def rassociator(self, f, g, h):
        return self.twist if f is g is h is self.target else super().rassociator(f, g, h)


def _bad_identitor():
    z = corpus.z2()
    i = identity_functor(z)
    twist = NatTrans(i, i, {"*": "t"})
    p = identity_psfunctor(CAT_FIN)
    return Pseudofunctor(CAT_FIN, CAT_FIN, p.ob, p.mor, p.cell,
                         lambda x: twist if x is z else p.identitor(x),
                         lambda x: twist if x is z else p.identitor_inv(x),
                         p.compositor, p.compositor_inv, name="bad_identitor")


def _broken_arrow():
    a = corpus.arrow()
    table = dict(a.compose)
    table["a", "id1"] = "id0"
    return FinCat(a.objects, a.morphisms, a.identity, table, name="BrokenArrow")


# ---------------------------------------------------------- criteria


def test_criterion_1_bicategory_laws():
    check = _Checks(1, "bicategory law suite")
    start = time.perf_counter()
    cats = corpus.corpus()
    term = terminal_total()
    for label, b, obs in [("CatFin", CAT_FIN, cats), ("op1", op1(CAT_FIN), cats),
                          ("op2", op2(CAT_FIN), cats),
                          ("total(Terminal)", term, term.objects(cats)),
                          ("Mnd(CatFin)", mnd_bicat(CAT_FIN), corpus.fixture_monads())]:
        rep = check_bicat_laws(b, obs)
        check(rep.ok and rep.checked > 0, f"{label} laws {rep.laws()}")
    z = [corpus.z2()]
    faults = [
        ("twisted unitor", check_bicat_laws(_TwistedUnitor(), z), {"triangle"}),
        ("twisted associator", check_bicat_laws(_TwistedAssociator(), z), {"pentagon"}),
        ("bad identitor", check_pseudofunctor(_bad_identitor(), z),
         {"left_unit_coherence", "right_unit_coherence"}),
        ("broken composition", validate_category(_broken_arrow()), {"compose_boundary"}),
    ]
    a = identity_adjunction(CAT_FIN, corpus.mono())
    wrong = [u for u in CAT_FIN.twos(a.unit.source, a.unit.target) if u is not a.unit][0]
    faults.append(("wrong unit", triangle_report(CAT_FIN, a.l, a.r, wrong, a.counit),
                   {"left_triangle", "right_triangle"}))
    for label, rep, names in faults:
        check(not rep.ok and bool(names & set(rep.laws())), f"fault {label}: {rep.laws()}")
    check(time.perf_counter() - start < 60, "runtime under 60 s")
    check.finish()


def test_criterion_2_monad_constructions():
    check = _Checks(2, "monad constructions")
    cats = corpus.corpus()
    for c in cats:
        check(check_monad(CAT_FIN, id_monad(CAT_FIN, c)).ok, f"id_monad({c.name})")
    check(check_monad(CAT_FIN, corpus.ceil_monad()).ok, "CeilM")
    for x in cats:
        for m in corpus.fixture_monads():
            check(check_monad(CAT_FIN, hom_monad(CAT_FIN, x, m)).ok, f"hom_monad({x.name},{m})")
    t = mnd_bicat(CAT_FIN)
    for m in corpus.fixture_monads():
        image = psfunctor_on_mnd(id_monad_psfunctor(CAT_FIN), m)
        check(check_monad(t, image).ok, f"id_monad_psfunctor image of {m}")
        check(psfunctor_on_mnd(identity_psfunctor(CAT_FIN), m) is m, f"identity image of {m}")
    for d in corpus.fixture_distributive_laws():
        check(d.classical_report().ok, f"law {d}")
        check(check_monad(CAT_FIN, compose_monads(d)).ok, f"composite of {d}")
    check.finish()


def test_criterion_3_eilenberg_moore():
    check = _Checks(3, "Eilenberg-Moore suite")
    for c in corpus.corpus():
        em, _ = em_category(id_monad(CAT_FIN, c))
        check(find_isomorphism(em, c) is not None, f"EM(id_monad({c.name})) iso")
    em, _ = em_category(corpus.ceil_monad())
    check(len(em.objects) == 1 and len(em.morphisms) == 1, "EM(CeilM) size")
    for m in corpus.fixture_monads():
        _, cone = em_category(m)
        check(check_em_universal(cone, SAMPLES).universal, f"EM cone of {m} universal")
        for x in SAMPLES:
            check(em_criteria_bridge(cone, x)["agree"], f"bridge {m} at {x.name}")
    check.finish()


def test_criterion_4_kleisli():
    check = _Checks(4, "Kleisli suite")
    kl, _ = kleisli_category(corpus.ceil_monad())
    check(len(kl.objects) == 2 and all(len(kl.hom(x, y)) == 1
                                       for x in kl.objects for y in kl.objects),
          "Kl(CeilM) indiscrete on two objects")
    for m in corpus.fixture_monads():
        _, kk = univ_kleisli(m)
        p = functor_props(kk)
        check(p.fully_faithful and p.essentially_surjective, f"K of {m} ff+eso")
        rep = precomposition_report(m, corpus.corpus())
        check(all(v.is_equivalence for v in rep.values()), f"precomposition for {m}")
        _, k = kleisli_category(m)
        cocones = [q for x in SAMPLES for q in kleisli_cocones(CAT_FIN, m, x)]
        check(check_kleisli_universal(k, cocones, SAMPLES).universal, f"cocone of {m} universal")
        tr = op1_transfer_report(k, SAMPLES)
        check(tr.bijective and tr.mediators_match and tr.universal, f"op1 transfer for {m}")
    check.finish()


def test_criterion_5_adjunctions_and_monads():
    check = _Checks(5, "adjunction and monad round trip")
    check(adjunction_to_monad(corpus.free_ceil()) is corpus.ceil_monad(), "FreeCeil gives CeilM")
    check(adjunction_to_monad(corpus.pick_zero()) is id_monad(CAT_FIN, corpus.one()),
          "PickZero gives id_monad(One)")
    for c in corpus.corpus():
        check(adjunction_to_monad(identity_adjunction(CAT_FIN, c)) is id_monad(CAT_FIN, c),
              f"id_adj({c.name}) gives id_monad")
    for m in corpus.fixture_monads():
        g = monad_to_adjunction(CAT_FIN, m).equivalence
        check(mnd_adjequiv_check(CAT_FIN, g).all_true, f"round trip of {m}")
    for a in corpus.fixture_adjunctions():
        _, d2 = adj_duals(a)
        w = comonad_via_op2(CAT_FIN, adjunction_to_monad(d2))
        check(comonad_law_report(CAT_FIN, w).ok, f"comonad of {a}")
    check(comonad_law_report(CAT_FIN, comonad_via_op2(CAT_FIN, corpus.floor_comonad())).ok,
          "floor comonad")
    check.finish()


def _fixture_one_cells():
    cells = []
    for a in corpus.fixture_adjunctions():
        cells += [a.l, a.r]
    for m in corpus.fixture_monads():
        cells.append(m.endo)
    cells.append(make_functor(corpus.iso2(), corpus.one(), {"0": "*", "1": "*"},
                              {"i": "id*", "j": "id*"}))
    return list(dict.fromkeys(cells))


def test_criterion_6_monadicity():
    check = _Checks(6, "monadicity")
    check(is_monadic(corpus.free_ceil()).monadic, "FreeCeil monadic")
    check(not is_monadic(corpus.pick_zero()).monadic, "PickZero not monadic")
    for c in corpus.corpus():
        check(is_monadic(identity_adjunction(CAT_FIN, c)).monadic, f"id_adj({c.name}) monadic")
    for a in corpus.fixture_adjunctions():
        direct = is_monadic(a).monadic
        hom_wise = is_representably_monadic(a, SAMPLES).monadic
        check(direct == hom_wise, f"monadic agreement for {a}")
    for f in _fixture_one_cells():
        check(repr_adjequiv_check(CAT_FIN, f, SAMPLES).agree, f"hom-wise equivalence {f}")
    check.finish()


def test_criterion_7_cli():
    check = _Checks(7, "CLI round trip, determinism and re-ingest")
    cats = list(corpus.categories().values())
    for m in corpus.fixture_monads():
        cats += [em_category(m)[0], kleisli_category(m)[0]]
    for c in cats:
        back = parse_workspace(dumps(serialize_category(c, "C")), use_builtins=False)
        check(back.get("C", "category") == c.relabel(ident), f"round trip of {c.label}")
    for m in corpus.fixture_monads():
        s = Serializer()
        s.monad(m, "M")
        back = parse_workspace(dumps(s.document()), use_builtins=False).get("M", "monad")
        check(back is m, f"round trip of {m}")
    for a in corpus.fixture_adjunctions():
        s = Serializer()
        s.adjunction(a, "A")
        back = parse_workspace(dumps(s.document()), use_builtins=False).get("A", "adjunction")
        check(back.data() == a.data(), f"round trip of {a}")
    monads = [m.name for m in corpus.fixture_monads()]
    adjs = [a.name for a in corpus.fixture_adjunctions()]
    runs = [("em", monads), ("kleisli", monads), ("mnd2adj", monads), ("adj2mnd", adjs),
            ("comparison", adjs), ("monadic", adjs), ("duals", adjs),
            ("compose-dl", ["CeilM/CeilM"]), ("validate", []), ("laws", ["CatFin", "Mnd"])]
    for command, names in runs:
        outs = []
        for _ in range(2):
            _, data = run_command(Workspace(), command, names)
            data = dict(data)
            data.pop("timing")
            outs.append(dumps_report(data))
        check(outs[0] == outs[1], f"determinism of {command}")
    for command in ("em", "kleisli"):
        status, data = run_command(Workspace(), command, monads)
        check(status == 0, f"{command} status")
        ws = parse_workspace(dumps(data["payload"]), use_builtins=False)
        status, rep = run_command(ws, "validate", [])
        check(status == 0 and bool(rep["verdicts"]), f"{command} output re-validates")
    check(time.perf_counter() - _suite_start() < 300, "suite under 5 minutes")
    check.finish()


def _suite_start():
    try:
        import conftest
        return getattr(conftest, "SUITE_START", None) or STARTED
    except ImportError:
        return STARTED


if __name__ == "__main__":
    import sys
    status = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                status = 1
    sys.exit(status)
