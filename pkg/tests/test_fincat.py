import itertools

import pytest
from hypothesis import given

from bicatmnd import corpus
from bicatmnd.errors import BoundExceeded, StructuralError
from bicatmnd.fincat import (FinCat, compose_functors, enumeration_bound, find_isomorphism,
                             functor_category, functor_props, functors, hcomp,
                             identity_functor, identity_nat, lwhisker, make_category,
                             make_functor, nat_transs, rwhisker, terminal_objects,
                             validate_category, vcomp)

from conftest import preorders

# Functor counts between corpus categories (and Z2), from a brute-force
# count over all object and morphism assignments.
FUNCTOR_COUNTS = {
    "One": {"One": 1, "Arrow": 2, "Disc2": 2, "Mono": 1, "Iso2": 2, "Z2": 1},
    "Arrow": {"One": 1, "Arrow": 3, "Disc2": 2, "Mono": 2, "Iso2": 4, "Z2": 2},
    "Disc2": {"One": 1, "Arrow": 4, "Disc2": 4, "Mono": 1, "Iso2": 4, "Z2": 1},
    "Mono": {"One": 1, "Arrow": 2, "Disc2": 2, "Mono": 2, "Iso2": 2, "Z2": 1},
    "Iso2": {"One": 1, "Arrow": 2, "Disc2": 2, "Mono": 1, "Iso2": 4, "Z2": 2},
    "Z2": {"One": 1, "Arrow": 2, "Disc2": 2, "Mono": 1, "Iso2": 2, "Z2": 2},
}


def test_corpus_categories_valid(cats):
    for c in cats.values():
        assert validate_category(c).ok, c.name


@pytest.mark.parametrize("src", sorted(FUNCTOR_COUNTS))
def test_functor_counts(cats, src):
    for tgt, n in FUNCTOR_COUNTS[src].items():
        fs = functors(cats[src], cats[tgt])
        assert len(fs) == n, (src, tgt)
        assert len(set(fs)) == n


def test_broken_compose_table_reports_boundary():
    a = corpus.arrow()
    table = dict(a.compose)
    table["a", "id1"] = "id0"
    broken = FinCat(a.objects, a.morphisms, a.identity, table, name="Broken")
    rep = validate_category(broken)
    assert "compose_boundary" in rep.laws()


def test_structural_errors():
    with pytest.raises(StructuralError):
        FinCat(["0"], [("id0", "0", "0"), ("f", "0", "9")], {"0": "id0"}, {})
    with pytest.raises(StructuralError, match="missing composite"):
        FinCat(["0"], [("id0", "0", "0")], {"0": "id0"}, {})


def test_mono_eight_triples():
    m = corpus.mono()
    for f, g, h in itertools.product("es", repeat=3):
        left = m.then(m.then(f, g), h)
        right = m.then(f, m.then(g, h))
        assert left == right
    assert validate_category(m).ok


def test_functor_category_examples(cats):
    one, arrow, disc2 = cats["One"], cats["Arrow"], cats["Disc2"]
    assert find_isomorphism(functor_category(one, arrow), arrow) is not None
    aa = functor_category(arrow, arrow)
    assert len(aa.objects) == 3
    assert validate_category(aa).ok
    # a 3-chain: six morphisms, each hom at most a singleton
    assert len(aa.morphisms) == 6
    assert all(len(aa.hom(x, y)) <= 1 for x in aa.objects for y in aa.objects)
    d1 = functor_category(disc2, one)
    assert len(d1.objects) == 1 and len(d1.morphisms) == 1


def test_functor_props_examples(cats):
    one, arrow = cats["One"], cats["Arrow"]
    p = functor_props(identity_functor(arrow))
    assert (p.fully_faithful, p.essentially_surjective, p.is_equivalence) == (True, True, True)
    bang = make_functor(arrow, one, {"0": "*", "1": "*"}, {"a": "id*"})
    p = functor_props(bang)
    assert (p.fully_faithful, p.essentially_surjective, p.is_equivalence) == (False, True, False)
    pick1 = make_functor(one, arrow, {"*": "1"})
    p = functor_props(pick1)
    assert (p.fully_faithful, p.essentially_surjective, p.is_equivalence) == (True, False, False)
    iso_bang = make_functor(cats["Iso2"], one, {"0": "*", "1": "*"}, {"i": "id*", "j": "id*"})
    assert functor_props(iso_bang).is_equivalence


def test_terminal_objects(cats):
    assert [x for x, _ in terminal_objects(cats["Arrow"])] == ["1"]
    assert terminal_objects(cats["Disc2"]) == []
    assert terminal_objects(cats["Mono"]) == []
    assert [x for x, _ in terminal_objects(cats["Iso2"])] == ["0", "1"]


def test_transformation_algebra(cats):
    arrow = cats["Arrow"]
    fs = functors(arrow, arrow)
    for f in fs:
        for g in fs:
            for a in nat_transs(f, g):
                assert vcomp(identity_nat(f), a) is a
                assert vcomp(a, identity_nat(g)) is a
    i = identity_functor(arrow)
    nonid = [a for f in fs for g in fs if f is not g for a in nat_transs(f, g)]
    assert len(nonid) == 3
    for a in nonid:
        assert lwhisker(i, a) is a and rwhisker(a, i) is a


def test_middle_interchange(cats):
    arrow = cats["Arrow"]
    fs = functors(arrow, arrow)
    for f, f2, g, g2 in itertools.product(fs, repeat=4):
        for a in nat_transs(f, f2):
            for b in nat_transs(g, g2):
                h = hcomp(a, b)
                other = vcomp(lwhisker(f, b), rwhisker(a, g2))
                assert h is other
                for x in arrow.objects:
                    assert h[x] == arrow.then(g.mmap[a[x]], b[f2.omap[x]])


def test_bound_exceeded(cats):
    with enumeration_bound(3):
        with pytest.raises(BoundExceeded):
            functors(cats["Disc2"], cats["Arrow"])
    assert len(functors(cats["Disc2"], cats["Arrow"])) == 4


def test_relabel_and_opposite(cats):
    for c in cats.values():
        assert c.opposite().opposite() == c
        r = c.relabel(lambda x: ("r", x))
        assert validate_category(r).ok
        assert find_isomorphism(c, r) is not None


def _monotone_maps(p, q):
    """Independent count of monotone maps between preorders."""
    leq_p = {(p.src[m], p.tgt[m]) for m in p.mor_ids}
    leq_q = {(q.src[m], q.tgt[m]) for m in q.mor_ids}
    n = 0
    for image in itertools.product(q.objects, repeat=len(p.objects)):
        f = dict(zip(p.objects, image))
        n += all((f[a], f[b]) in leq_q for a, b in leq_p)
    return n


@given(preorders(), preorders())
def test_functors_between_preorders_are_monotone_maps(p, q):
    assert len(functors(p, q)) == _monotone_maps(p, q)


@given(preorders())
def test_preorder_categories_valid(p):
    assert validate_category(p).ok
    assert functor_props(identity_functor(p)).is_equivalence
    for f in functors(p, p):
        assert compose_functors(identity_functor(p), f) is f
        assert compose_functors(f, identity_functor(p)) is f


def test_make_category_identities():
    c = make_category(["x"], [], {}, name="Pt")
    assert c.identity == {"x": "idx"} and c.compose == {("idx", "idx"): "idx"}
