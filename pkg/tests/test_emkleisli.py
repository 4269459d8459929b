import pytest

from bicatmnd import corpus
from bicatmnd.bicat import CAT_FIN, op1
from bicatmnd.dispbicat import UNIT, terminal_total
from bicatmnd.emkleisli import (EMCone, KleisliCocone, check_em_universal,
                                check_kleisli_universal, em_category, em_cone_report, em_cones,
                                em_functor, em_functor_alt, em_with_terminal,
                                explicit_kleisli_mediator, free_alg_functor,
                                kleisli_category, kleisli_cocone_report, kleisli_cocones,
                                kleisli_compatible, kleisli_factorizations, kleisli_mediator,
                                op1_em_from_kleisli, op1_transfer_report, precomposition_report,
                                em_criteria_bridge, univ_kleisli, univ_kleisli_cocone)
from bicatmnd.fincat import (compose_functors, constant_functor, find_isomorphism,
                             functor_props, make_functor, validate_category)
from bicatmnd.monad import DispMonad, id_monad, monads_on, total_monad

ONE, ARROW = corpus.one(), corpus.arrow()
SAMPLES = [ONE, ARROW]


def ceil():
    return corpus.ceil_monad()


def test_em_of_identity_monads_is_isomorphic(cats):
    for c in corpus.corpus():
        em, cone = em_category(id_monad(CAT_FIN, c))
        assert all(a == c.identity[x] for x, a in em.objects)
        assert find_isomorphism(em, c) is not None
        assert em_cone_report(cone).ok


def test_em_of_ceil():
    em, cone = em_category(ceil())
    assert em.objects == (("1", "id1"),)
    assert len(em.morphisms) == 1
    assert em_cone_report(cone).ok
    assert validate_category(em).ok


def _algebra_maps(m, xa, yb):
    c, e = m.ob, m.endo
    return {f for f in c.hom(xa[0], yb[0]) if c.then(e.mmap[f], yb[1]) == c.then(xa[1], f)}


@pytest.mark.parametrize("name", ["Arrow", "Iso2", "Z2", "Mono"])
def test_algebra_conditions(cats, name):
    c = cats[name]
    for m in monads_on(CAT_FIN, c):
        em, _ = em_category(m)
        e, eta, mu = m.endo, m.unit, m.mult
        expected = {(x, a) for x in c.objects for a in c.hom(e.omap[x], x)
                    if c.then(eta[x], a) == c.identity[x]
                    and c.then(e.mmap[a], a) == c.then(mu[x], a)}
        assert set(em.objects) == expected
        for xa in em.objects:
            for yb in em.objects:
                assert {g[2] for g in em.hom(xa, yb)} == _algebra_maps(m, xa, yb)


def test_z2_identity_monad_rejects_twisted_structure():
    em, _ = em_category(id_monad(CAT_FIN, corpus.z2()))
    assert em.objects == (("*", "e"),)


def test_em_functor_at_identity_is_the_cone():
    em, cone = em_category(ceil())
    f = em_functor(cone, em)
    image = f.omap[CAT_FIN.id1(em)]
    assert image.mor is cone.mor and image.cell is cone.cell


def test_em_functors_ceil_one():
    _, cone = em_category(ceil())
    for fn in (em_functor, em_functor_alt):
        p = functor_props(fn(cone, ONE))
        assert p.fully_faithful and p.essentially_surjective and p.is_equivalence


def test_em_functor_respects_vertical_composition():
    _, cone = em_category(id_monad(CAT_FIN, ARROW))
    f = em_functor(cone, ARROW)
    src, tgt = f.source, f.target
    for (a, b), ab in src.compose.items():
        assert tgt.then(f.mmap[a], f.mmap[b]) == f.mmap[ab]


def test_em_functor_alt_identity_monad():
    _, cone = em_category(id_monad(CAT_FIN, ARROW))
    alt = em_functor_alt(cone, ONE)
    assert functor_props(alt).is_equivalence
    assert find_isomorphism(alt.target, CAT_FIN.hom(ONE, ARROW)) is not None


def test_em_universality_examples():
    _, cone = em_category(ceil())
    rep = check_em_universal(cone, SAMPLES)
    assert rep.universal and rep.existence
    _, cone = em_category(id_monad(CAT_FIN, ARROW))
    rep = check_em_universal(cone, SAMPLES + [corpus.disc2()])
    assert rep.universal
    assert rep.to_dict()["samples"] == ["One", "Arrow", "Disc2"]


def test_non_universal_cone_names_sample():
    m = id_monad(CAT_FIN, ARROW)
    pick0 = make_functor(ONE, ARROW, {"*": "0"})
    q = EMCone(CAT_FIN, m, ONE, pick0, CAT_FIN.id2(pick0))
    assert em_cone_report(q).ok
    rep = check_em_universal(q, SAMPLES)
    assert not rep.universal
    assert {s for s, _ in rep.failures} == {"One", "Arrow"}


def test_cone_laws_detect_bad_cell():
    m = ceil()
    for x in SAMPLES:
        good = {(q.mor, q.cell) for q in em_cones(CAT_FIN, m, x)}
        for f in CAT_FIN.ones(x, m.ob):
            for c in CAT_FIN.twos(CAT_FIN.comp1(f, m.endo), f):
                assert em_cone_report(EMCone(CAT_FIN, m, x, f, c)).ok == ((f, c) in good)


@pytest.mark.parametrize("m", corpus.fixture_monads(), ids=repr)
def test_bridge(m):
    _, cone = em_category(m)
    for x in SAMPLES:
        out = em_criteria_bridge(cone, x)
        assert out["agree"] and out["composite_matches"]


def test_em_with_terminal():
    t = terminal_total()
    for m in (ceil(), id_monad(CAT_FIN, ARROW)):
        tm = total_monad(t, m, DispMonad("1", UNIT, UNIT, UNIT))
        _, alg = em_with_terminal(tm)
        assert alg == ("1", "id1")


def test_kleisli_of_identity_monads():
    for c in corpus.corpus():
        kl, k = kleisli_category(id_monad(CAT_FIN, c))
        assert find_isomorphism(kl, c) is not None
        assert kleisli_cocone_report(k).ok


def test_kleisli_of_ceil_is_indiscrete():
    kl, k = kleisli_category(ceil())
    assert validate_category(kl).ok
    assert len(kl.objects) == 2 and len(kl.morphisms) == 4
    assert all(len(kl.hom(x, y)) == 1 for x in kl.objects for y in kl.objects)
    for g in kl.mor_ids:
        x, y = g[0], g[1]
        assert kl.then(kl.identity[x], g) == g == kl.then(g, kl.identity[y])


def test_free_algebras_and_comparison():
    for m in corpus.fixture_monads():
        fa = free_alg_functor(m)
        assert all(fa.omap[x][1] == m.mult[x] for x in m.ob.objects)
        uk, kk = univ_kleisli(m)
        p = functor_props(kk)
        assert p.fully_faithful and p.essentially_surjective
        kl, _ = kleisli_category(m)
        for (g, h), gh in kl.compose.items():
            assert uk.then(kk.mmap[g], kk.mmap[h]) == kk.mmap[gh]
    uk, _ = univ_kleisli(ceil())
    assert find_isomorphism(uk, ONE) is not None
    uk, kk = univ_kleisli(id_monad(CAT_FIN, ARROW))
    assert len(set(kk.omap.values())) == 2 and len(set(kk.mmap.values())) == 3


def test_precomposition_equivalence():
    rep = precomposition_report(ceil(), [ONE, ARROW, corpus.disc2()])
    assert all(p.is_equivalence for p in rep.values())


def test_kleisli_mediator_ceil_to_one():
    m = ceil()
    _, k = kleisli_category(m)
    const = constant_functor(ARROW, ONE, "*")
    q = KleisliCocone(CAT_FIN, m, ONE, const, CAT_FIN.id2(const))
    assert kleisli_cocone_report(q).ok
    w = kleisli_mediator(k, q)
    assert w is not None
    assert w.mediator is explicit_kleisli_mediator(m, q)
    rep = check_kleisli_universal(k, [q], SAMPLES)
    assert rep.universal and rep.uniqueness_checked > 0


def test_kleisli_uniqueness_counts():
    m = ceil()
    _, k = kleisli_category(m)
    for x in SAMPLES:
        for g1 in CAT_FIN.ones(k.ob, x):
            for g2 in CAT_FIN.ones(k.ob, x):
                for tau in CAT_FIN.twos(CAT_FIN.comp1(k.mor, g1), CAT_FIN.comp1(k.mor, g2)):
                    if kleisli_compatible(k, g1, g2, tau):
                        assert len(kleisli_factorizations(k, g1, g2, tau)) == 1


def test_kleisli_universal_for_canonical_cocones():
    for m in corpus.fixture_monads():
        _, k = kleisli_category(m)
        cocones = [q for x in SAMPLES for q in kleisli_cocones(CAT_FIN, m, x)]
        assert check_kleisli_universal(k, cocones, SAMPLES).universal
        for q in cocones:
            assert kleisli_mediator(k, q).mediator is explicit_kleisli_mediator(m, q)


def test_univ_kleisli_cocone_is_universal():
    m = ceil()
    u = univ_kleisli_cocone(m)
    assert kleisli_cocone_report(u).ok
    cocones = [q for x in SAMPLES for q in kleisli_cocones(CAT_FIN, m, x)]
    assert check_kleisli_universal(u, cocones, SAMPLES).universal


def test_non_universal_cocone():
    m = id_monad(CAT_FIN, ARROW)
    bang = make_functor(ARROW, ONE, {"0": "*", "1": "*"}, {"a": "id*"})
    k = KleisliCocone(CAT_FIN, m, ONE, bang, CAT_FIN.id2(bang))
    assert kleisli_cocone_report(k).ok
    cocones = [q for x in SAMPLES for q in kleisli_cocones(CAT_FIN, m, x)]
    rep = check_kleisli_universal(k, cocones, SAMPLES)
    assert not rep.universal
    assert any(s == "Arrow" for s, _ in rep.failures)


def test_op1_transfer():
    for m in (ceil(), id_monad(CAT_FIN, ONE)):
        _, k = kleisli_category(m)
        cone = op1_em_from_kleisli(k)
        assert cone.bicat is op1(CAT_FIN)
        assert em_cone_report(cone).ok
        rep = op1_transfer_report(k, SAMPLES)
        assert rep.ok and rep.cocones == rep.cones > 0


def test_free_functor_composite():
    m = ceil()
    _, k = kleisli_category(m)
    uk, kk = univ_kleisli(m)
    u = univ_kleisli_cocone(m)
    assert u.mor is compose_functors(k.mor, kk)
