from bicatmnd import corpus
from bicatmnd.bicat import CAT_FIN, check_bicat_laws, check_pseudofunctor, identity_psfunctor
from bicatmnd.dispbicat import (UNIT, CellUnit, TotalBicat, cell_unit_disp, check_section,
                                fullsub_disp, local_props, prod_disp, projection,
                                section_to_psfunctor, terminal_disp_layer, terminal_total,
                                total_bicat, unit_section)
from bicatmnd.fincat import functors, identity_functor, make_functor, terminal_objects

SMALL = [corpus.one(), corpus.arrow(), corpus.disc2()]


def has_terminal(c):
    return bool(terminal_objects(c))


def test_terminal_layer_objects():
    t = terminal_total()
    over = t.objects(corpus.corpus())
    assert t.Obj(corpus.arrow(), "1") in over
    assert not any(xx.base is corpus.disc2() for xx in over)
    d = terminal_disp_layer()
    assert d.ob(corpus.arrow()) == ["1"]


def test_terminal_layer_one_cells():
    t = terminal_total()
    a = corpus.arrow()
    xx = t.Obj(a, "1")
    assert terminal_disp_layer().mors(xx, xx, identity_functor(a)) == [UNIT]
    const0 = make_functor(a, a, {"0": "0", "1": "0"}, {"a": "id0"})
    assert terminal_disp_layer().mors(xx, xx, const0) == []


def test_fullsub_terminal_predicate():
    d = fullsub_disp(CAT_FIN, has_terminal)
    assert d.ob(corpus.arrow()) == [UNIT]
    assert d.ob(corpus.disc2()) == []


def test_cell_unit_totals_satisfy_laws():
    t, p = total_bicat(fullsub_disp(CAT_FIN, has_terminal))
    obs = t.objects(corpus.corpus())
    assert check_bicat_laws(t, obs).ok
    assert check_pseudofunctor(p, obs).ok
    assert check_bicat_laws(terminal_total(), terminal_total().objects(corpus.corpus())).ok


def test_local_props_of_cell_unit_layers():
    for d in (terminal_disp_layer(), fullsub_disp(CAT_FIN, has_terminal)):
        props = local_props(d, SMALL)
        assert props.locally_propositional and props.locally_groupoidal


class TwoTokens(CellUnit):
    """Two displayed 2-cells over every base 2-cell."""

    def twos(self, ff, gg, t):
        return [0, 1]


def test_synthetic_layer_not_propositional():
    d = TwoTokens(CAT_FIN, lambda x: [UNIT], lambda xx, yy, f: [UNIT])
    assert not local_props(d, [corpus.one()]).locally_propositional


def test_product_layer():
    d1 = fullsub_disp(CAT_FIN, has_terminal, name="T")
    d2 = terminal_disp_layer()
    pd = prod_disp(d1, d2)
    assert pd.ob(corpus.arrow()) == [(UNIT, "1")]
    t = TotalBicat(pd)
    obs = t.objects(SMALL)
    assert check_bicat_laws(t, obs).ok
    t1, t2 = TotalBicat(d1), TotalBicat(d2)
    for xx in obs:
        for yy in obs:
            pairs = {(ff.base, ff.disp) for ff in t.ones(xx, yy)}
            left = {(f.base, f.disp) for f in t1.ones(t1.Obj(xx.base, xx.disp[0]),
                                                        t1.Obj(yy.base, yy.disp[0]))}
            right = {(f.base, f.disp) for f in t2.ones(t2.Obj(xx.base, xx.disp[1]),
                                                        t2.Obj(yy.base, yy.disp[1]))}
            matched = {(f, (a, b)) for f, a in left for g, b in right if f is g}
            assert pairs == matched


def test_projection_of_total_cells_is_base():
    t, p = total_bicat(terminal_disp_layer())
    for xx in t.objects(corpus.corpus()):
        for ff in t.ones(xx, xx):
            assert p.mor(ff) is ff.base
            for aa in t.twos(ff, ff):
                assert p.cell(aa) is aa.base


def test_unit_section_psfunctor():
    d = cell_unit_disp(CAT_FIN, lambda x: [UNIT], lambda xx, yy, f: [UNIT], name="triv")
    s = unit_section(d)
    assert check_section(s, SMALL).ok
    ps = section_to_psfunctor(s)
    proj = projection(TotalBicat(d))
    ident = identity_psfunctor(CAT_FIN)
    for x in SMALL:
        assert proj.ob(ps.ob(x)) is ident.ob(x)
        for y in SMALL:
            for f in functors(x, y):
                assert proj.mor(ps.mor(f)) is f
                for a in CAT_FIN.twos(f, f):
                    assert proj.cell(ps.cell(a)) is a
