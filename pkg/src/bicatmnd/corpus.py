"""The fixed corpus of small categories and the fixture monads, distributive
laws and adjunctions built on it."""
from __future__ import annotations

from functools import lru_cache

from .bicat import CAT_FIN
from .fincat import (FinCat, compose_functors, identity_functor, make_category,
                     make_functor, make_nat_trans)


@lru_cache(maxsize=None)
def one():
    return make_category(["*"], [], {}, name="One")


@lru_cache(maxsize=None)
def arrow():
    return make_category(["0", "1"], [("a", "0", "1")], {}, name="Arrow")


@lru_cache(maxsize=None)
def disc2():
    return make_category(["0", "1"], [], {}, name="Disc2")


@lru_cache(maxsize=None)
def mono():
    """The idempotent monoid {e, s} with s;s = s."""
    return FinCat(["*"], [("e", "*", "*"), ("s", "*", "*")], {"*": "e"},
                  {("e", "e"): "e", ("e", "s"): "s", ("s", "e"): "s", ("s", "s"): "s"},
                  name="Mono")


@lru_cache(maxsize=None)
def iso2():
    return make_category(["0", "1"], [("i", "0", "1"), ("j", "1", "0")],
                         {("i", "j"): "id0", ("j", "i"): "id1"}, name="Iso2")


@lru_cache(maxsize=None)
def z2():
    """The group of order two as a one-object category (used for fault injection)."""
    return FinCat(["*"], [("e", "*", "*"), ("t", "*", "*")], {"*": "e"},
                  {("e", "e"): "e", ("e", "t"): "t", ("t", "e"): "t", ("t", "t"): "e"},
                  name="Z2")


CORPUS_NAMES = ("One", "Arrow", "Disc2", "Mono", "Iso2")


def corpus():
    return [one(), arrow(), disc2(), mono(), iso2()]


def categories():
    return {c.name: c for c in corpus() + [z2()]}


# ---------------------------------------------------------------- fixtures


@lru_cache(maxsize=None)
def ceil_endo():
    """The endofunctor of Arrow sending both objects to 1."""
    a = arrow()
    return make_functor(a, a, {"0": "1", "1": "1"}, {"a": "id1"}, name="ceil")


@lru_cache(maxsize=None)
def ceil_monad():
    from .monad import make_monad
    a = arrow()
    e = ceil_endo()
    ident = identity_functor(a)
    unit = make_nat_trans(ident, e, {"0": "a", "1": "id1"}, name="ceil_unit")
    mult = make_nat_trans(compose_functors(e, e), e, {"0": "id1", "1": "id1"}, name="ceil_mult")
    return make_monad(CAT_FIN, a, e, unit, mult, name="CeilM")


@lru_cache(maxsize=None)
def floor_comonad():
    """The comonad on Arrow sending both objects to 0, as a monad of op2(CatFin)."""
    from .monad import make_op2_monad
    a = arrow()
    e = make_functor(a, a, {"0": "0", "1": "0"}, {"a": "id0"}, name="floor")
    counit = make_nat_trans(e, identity_functor(a), {"0": "id0", "1": "a"}, name="floor_counit")
    comult = make_nat_trans(e, compose_functors(e, e), {"0": "id0", "1": "id0"}, name="floor_comult")
    m = make_op2_monad(CAT_FIN, a, e, counit, comult)
    m.name = "FloorW"
    return m


@lru_cache(maxsize=None)
def free_ceil():
    """Left adjoint Arrow -> One, right adjoint One -> Arrow picking 1."""
    from .adjmonadic import make_adjunction
    a, o = arrow(), one()
    l = make_functor(a, o, {"0": "*", "1": "*"}, {"a": "id*"}, name="bang")
    r = make_functor(o, a, {"*": "1"}, {}, name="pick1")
    unit = make_nat_trans(identity_functor(a), compose_functors(l, r),
                          {"0": "a", "1": "id1"}, name="free_ceil_unit")
    counit = make_nat_trans(compose_functors(r, l), identity_functor(o),
                            {"*": "id*"}, name="free_ceil_counit")
    return make_adjunction(CAT_FIN, l, r, unit, counit, name="FreeCeil")


@lru_cache(maxsize=None)
def pick_zero():
    """Left adjoint One -> Arrow picking 0, right adjoint Arrow -> One."""
    from .adjmonadic import make_adjunction
    a, o = arrow(), one()
    l = make_functor(o, a, {"*": "0"}, {}, name="pick0")
    r = make_functor(a, o, {"0": "*", "1": "*"}, {"a": "id*"}, name="bang")
    unit = make_nat_trans(identity_functor(o), compose_functors(l, r),
                          {"*": "id*"}, name="pick_zero_unit")
    counit = make_nat_trans(compose_functors(r, l), identity_functor(a),
                            {"0": "id0", "1": "a"}, name="pick_zero_counit")
    return make_adjunction(CAT_FIN, l, r, unit, counit, name="PickZero")


def identity_adjunction(c):
    from .adjmonadic import identity_adjunction as ia
    return ia(CAT_FIN, c)


def fixture_monads():
    from .monad import id_monad
    return [id_monad(CAT_FIN, c) for c in corpus()] + [ceil_monad()]


def fixture_adjunctions():
    return [free_ceil(), pick_zero()] + [identity_adjunction(c) for c in corpus()]


def fixture_distributive_laws():
    """The trivial laws of every fixture monad with the identity monad, and
    CeilM distributing over itself via the identity 2-cell."""
    from .monad import make_distributive_law, trivial_distributive_law
    laws = [trivial_distributive_law(CAT_FIN, m) for m in fixture_monads()]
    m = ceil_monad()
    tau = CAT_FIN.id2(CAT_FIN.comp1(m.endo, m.endo))
    laws.append(make_distributive_law(CAT_FIN, m, m, tau))
    return laws
