"""Category core: structure-constant axioms, functors, walks,
presentations.  Oracle values are hand-derived dimension and composition
facts recorded next to each assertion."""
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lincat.exactlinalg import FieldSpec, Matrix
from lincat.fixtures import (F2, Q, cover_f0, cover_f2, cyclic_cover,
                             disconnected_double_kronecker, identity_cover,
                             kronecker, kronecker_double, loop_square_zero,
                             square_base, square_cover, swap_functor)
from lincat.kcat import (Arrow, LinCat, QuiverPresentation, TruncationError,
                         Walk, comb_eq, compose, functor_compose,
                         functor_equal, functor_from_arrows,
                         functor_is_isomorphism, identity_functor,
                         inverse_functor, is_connected, make_step, present,
                         validate_category, validate_functor)


# -- validate_category -------------------------------------------------------

def test_kronecker_is_valid():
    k = kronecker().category
    assert validate_category(k) == []
    # one-dimensional endomorphism spaces, two-dimensional hom(s, t)
    assert k.dim("s", "s") == 1 and k.dim("t", "t") == 1
    assert k.dim("s", "t") == 2 and k.dim("t", "s") == 0


def test_unit_axiom_violation_detected():
    f = Q
    c = LinCat.make(f, ["x"], {("x", "x"): ["e"]},
                    {}, {"x": {"e": 1}})  # e∘e = 0 yet e is the identity
    kinds = {v.kind for v in validate_category(c)}
    assert "unit-left" in kinds or "unit-right" in kinds


def test_double_cover_is_valid():
    c = kronecker_double().category
    assert validate_category(c) == []
    assert c.dim("s0", "t0") == 1 and c.dim("s0", "t1") == 1
    assert c.dim("t0", "s0") == 0


def test_comp_range_violation_detected():
    f = Q
    c = LinCat.make(
        f, ["x", "y"],
        {("x", "x"): ["ex"], ("y", "y"): ["ey"], ("x", "y"): ["u", "v"]},
        {("ex", "ex"): {"ex": 1}, ("ey", "ey"): {"ey": 1},
         ("u", "ex"): {"u": 1}, ("v", "ex"): {"v": 1},
         ("ey", "u"): {"u": 1}, ("ey", "v"): {"v": 1},
         ("u", "u") if False else ("v", "ex"): {"v": 1}},
        {"x": {"ex": 1}, "y": {"ey": 1}})
    # sabotage: redeclare u∘ex landing in the wrong hom space
    c.comp[("u", "ex")] = {"ex": f.one()}
    assert any(v.kind == "comp-range" for v in validate_category(c))


# -- compose -----------------------------------------------------------------

def test_compose_unit_law():
    k = kronecker().category
    one = k.field.one()
    assert compose(k, k.identity("t"), {"a": one}) == {"a": one}
    assert compose(k, {"a": one}, k.identity("s")) == {"a": one}


def test_compose_square_base_relation():
    # in the relation quotient, g∘(a+b) = g∘a + g∘b with g∘b rewritten
    b = square_base().category
    one = b.field.one()
    got = compose(b, {"g": one}, {"a": one, "b": one})
    assert got == {"g*a": one, "d*a": one}


def test_compose_bilinearity():
    k = kronecker().category
    f = k.field
    lhs = compose(k, {"1_t": f.scalar(2)}, {"a": f.scalar(3)})
    assert lhs == {"a": f.scalar(6)}


def test_compose_rejects_noncomposable():
    k = kronecker().category
    one = k.field.one()
    with pytest.raises(ValueError):
        compose(k, {"a": one}, {"a": one})


def test_compose_zero_is_zero():
    k = kronecker().category
    assert compose(k, {}, {"a": k.field.one()}) == {}
    assert compose(k, {"a": k.field.one()}, {}) == {}


# -- functors ----------------------------------------------------------------

def test_double_cover_functors_are_valid():
    assert validate_functor(cover_f0().functor) == []
    assert validate_functor(cover_f2().functor) == []
    assert validate_functor(identity_functor(kronecker().category)) == []


def test_functor_violation_detected():
    fix = cover_f0()
    # break unit preservation: send 1_s0 to 2·1_s
    bad = functor_from_arrows(
        fix.total, fix.base.category, fix.functor.object_map,
        {"a0": {"a": 1}, "a1": {"a": 1}, "b0": {"b": 1}, "b1": {"b": 1}})
    bad.matrices[("s0", "s0")] = Matrix.from_rows(Q, [[2]])
    assert any(v.kind == "functor-unit" for v in validate_functor(bad))


def test_functor_composition_matches_pointwise():
    fix = cover_f0()
    sw = swap_functor(fix.total)
    comp = functor_compose(fix.functor, sw)
    # the index swap is a deck transformation of this covering
    assert functor_equal(comp, fix.functor)


def test_swap_is_not_deck_for_asymmetric_cover():
    fix = cover_f2()
    sw = swap_functor(fix.total)
    assert not functor_equal(functor_compose(fix.functor, sw), fix.functor)


def test_inverse_functor():
    fix = cover_f0()
    sw = swap_functor(fix.total)
    assert functor_is_isomorphism(sw)
    assert functor_equal(functor_compose(sw, inverse_functor(sw)),
                         identity_functor(fix.total.category))
    assert not functor_is_isomorphism(fix.functor)


# -- connectivity and walks --------------------------------------------------

def test_kronecker_connected():
    rep = is_connected(kronecker().category)
    assert rep.connected and len(rep.components) == 1


def test_disjoint_union_disconnected():
    rep = is_connected(disconnected_double_kronecker().category)
    assert not rep.connected
    assert sorted(len(c) for c in rep.components) == [2, 2]


def test_double_cover_connected_with_walk_witnesses():
    c = kronecker_double().category
    rep = is_connected(c)
    assert rep.connected
    w = rep.walk_between("t0", "t1")
    assert w is not None and w.start == "t0" and w.end() == "t1"
    assert w.validate(c) == []


def test_walk_chaining_and_reverse():
    c = kronecker_double().category
    one = c.field.one()
    up = make_step(c, {"a0": one}, 1)      # s0 -> t0
    down = make_step(c, {"b1": one}, -1)   # t0 -> s1 against b1: s1 -> t0
    w = Walk("s0", (up, down))
    assert w.objects() == ["s0", "t0", "s1"]
    assert w.validate(c) == []
    r = w.reversed()
    assert r.start == "s1" and r.end() == "s0"
    assert w.concat(r).end() == "s0"


def test_walk_bad_chaining_reported():
    c = kronecker_double().category
    one = c.field.one()
    up = make_step(c, {"a0": one}, 1)
    w = Walk("s1", (up,))
    assert w.validate(c) != []


# -- presentations -----------------------------------------------------------

def test_present_kronecker():
    res = kronecker()
    assert res.hom_dims[("s", "t")] == 2
    assert res.hom_dims[("t", "s")] == 0
    assert res.category.hom[("s", "t")] == ("a", "b")


def test_present_square_base_dimensions():
    # 4 length-2 paths minus 2 independent relations
    res = square_base()
    assert res.hom_dims[("x", "z")] == 2
    assert validate_category(res.category) == []
    # both rewrites: g∘b = d∘a and d∘b = g∘a hold in the quotient
    b = res.category
    one = b.field.one()
    assert compose(b, {"g": one}, {"b": one}) == {"d*a": one}
    assert compose(b, {"d": one}, {"b": one}) == {"g*a": one}


def test_present_truncated_polynomial_loop():
    res = loop_square_zero()
    c = res.category
    assert c.hom[("x", "x")] == ("1_x", "u")
    one = c.field.one()
    assert compose(c, {"u": one}, {"u": one}) == {}
    assert validate_category(c) == []


def test_present_rejects_unsound_truncation():
    # a free loop is infinite-dimensional: no bound can be exact
    q = QuiverPresentation(("x",), (Arrow("u", "x", "x"),), (), 1)
    with pytest.raises(TruncationError) as exc:
        present(q, Q)
    assert exc.value.witness == ("u", "u")


def test_present_cube_zero_loop():
    q = QuiverPresentation(("x",), (Arrow("u", "x", "x"),),
                           (((Fraction(1), ("u", "u", "u")),),), 2)
    res = present(q, Q)
    c = res.category
    assert c.hom[("x", "x")] == ("1_x", "u", "u*u")
    one = c.field.one()
    assert compose(c, {"u": one}, {"u*u": one}) == {}
    assert validate_category(c) == []


def test_presented_categories_always_validate():
    for res in (kronecker(), kronecker_double(), square_base(),
                square_cover().total, cyclic_cover(3).total,
                loop_square_zero()):
        assert validate_category(res.category) == []


def test_relation_endpoint_mismatch_rejected():
    with pytest.raises(ValueError):
        QuiverPresentation(
            ("x", "y"), (Arrow("u", "x", "y"), Arrow("v", "y", "x")),
            (((Fraction(1), ("u",)), (Fraction(1), ("v",))),), 1)


# -- associativity on random linear combinations ----------------------------

scalar_q = st.integers(-4, 4).map(lambda n: Q.scalar(n))


@st.composite
def end_comb(draw):
    c = loop_square_zero().category
    return {"1_x": draw(scalar_q), "u": draw(scalar_q)}


@given(end_comb(), end_comb(), end_comb())
@settings(max_examples=40, deadline=None)
def test_compose_associative_on_random_combs(f, g, h):
    c = loop_square_zero().category
    lhs = compose(c, h, compose(c, g, f))
    rhs = compose(c, compose(c, h, g), f)
    assert comb_eq(lhs, rhs)


@given(st.lists(scalar_q, min_size=2, max_size=2),
       st.lists(scalar_q, min_size=2, max_size=2))
@settings(max_examples=40, deadline=None)
def test_compose_associative_in_quotient(fs, gs):
    b = square_base().category
    fld = b.field
    f = {"a": fld.scalar(fs[0].value), "b": fld.scalar(fs[1].value)}
    g = {"g": fld.scalar(gs[0].value), "d": fld.scalar(gs[1].value)}
    h = b.identity("z")
    lhs = compose(b, h, compose(b, g, f))
    rhs = compose(b, compose(b, h, g), f)
    assert comb_eq(lhs, rhs)
