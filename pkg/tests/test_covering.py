"""Coverings: star counts, the covering criterion, unique extension of
morphisms, deck groups, and the induced map between deck groups."""
import pytest

from lincat.covering import (CoveringMorphism, aut1, check_covering,
                             check_morphism, extend_morphism, fibre,
                             galois_obstruction, lambda_map, star)
from lincat.fixtures import (Q, corrupted_collapse, cover_f0, cover_f1,
                             cover_f2, cyclic_cover, cyclic_reduction,
                             disconnected_double_kronecker, identity_cover,
                             kronecker, swap_functor)
from lincat.kcat import (Arrow, LinFunctor, QuiverPresentation, functor_equal,
                         functor_is_isomorphism, identity_functor,
                         is_connected, present)


# -- stars -------------------------------------------------------------------

def test_star_dimensions_kronecker():
    k = kronecker().category
    # End twice (2) plus the two arrows: 4 on both sides
    assert star(k, "s").total_dim == 4
    assert star(k, "t").total_dim == 4
    assert star(k, "s").outgoing["t"] == ("a", "b")
    assert star(k, "t").incoming["s"] == ("a", "b")


def test_star_single_object():
    c = present(QuiverPresentation(("x",), (), (), 1), Q).category
    assert star(c, "x").total_dim == 2


def test_star_unknown_object():
    with pytest.raises(ValueError):
        star(kronecker().category, "nope")


# -- the covering criterion --------------------------------------------------

def test_double_cover_functors_are_coverings():
    for fix in (cover_f0(), cover_f1(), cover_f2()):
        assert check_covering(fix.functor).ok, fix.name


def test_collapse_is_not_a_covering():
    rep = check_covering(corrupted_collapse().functor)
    assert not rep.ok
    assert rep.surjective
    assert rep.failures[0] == ("s0", "t", "out")


def test_identity_is_a_covering():
    assert check_covering(identity_cover().functor).ok


def test_nonsurjective_functor_rejected():
    k = kronecker()
    single = present(QuiverPresentation(("x",), (), (), 1), Q)
    f = LinFunctor.on_basis(single.category, k.category, {"x": "s"},
                            {"1_x": {"1_s": 1}})
    rep = check_covering(f)
    assert not rep.ok and not rep.surjective


# -- fibres ------------------------------------------------------------------

def test_fibres():
    assert fibre(cover_f0().functor, "s") == ["s0", "s1"]
    assert fibre(identity_cover().functor, "s") == ["s"]
    assert len(fibre(cyclic_cover(4).functor, "s")) == 4
    with pytest.raises(ValueError):
        fibre(cover_f0().functor, "nope")


# -- extension of morphisms ---------------------------------------------------

def test_extend_finds_the_swap_for_the_symmetric_cover():
    fix = cover_f0()
    j = identity_functor(fix.base.category)
    h = extend_morphism(fix.functor, fix.functor, j, "s0", "s1")
    assert h is not None
    assert functor_equal(h, swap_functor(fix.total))


def test_extend_fails_for_the_asymmetric_cover():
    fix = cover_f2()
    j = identity_functor(fix.base.category)
    assert extend_morphism(fix.functor, fix.functor, j, "s0", "s1") is None


def test_extend_identity_seed_gives_identity():
    for fix in (cover_f0(), cover_f2(), cyclic_cover(3)):
        j = identity_functor(fix.base.category)
        h = extend_morphism(fix.functor, fix.functor, j, fix.total.category.objects[0],
                            fix.total.category.objects[0])
        assert h is not None
        assert functor_equal(h, identity_functor(fix.total.category))


def test_extend_rejects_bad_seed():
    fix = cover_f0()
    j = identity_functor(fix.base.category)
    with pytest.raises(ValueError):
        extend_morphism(fix.functor, fix.functor, j, "s0", "t1")


def test_extend_requires_connected_source():
    dis = disconnected_double_kronecker()
    k = kronecker()
    omap = {"s": "s", "t": "t", "s'": "s", "t'": "t"}
    f = LinFunctor.on_basis(
        dis.category, k.category, omap,
        {"a": {"a": 1}, "b": {"b": 1}, "a'": {"a": 1}, "b'": {"b": 1},
         "1_s": {"1_s": 1}, "1_t": {"1_t": 1},
         "1_s'": {"1_s": 1}, "1_t'": {"1_t": 1}})
    with pytest.raises(ValueError):
        extend_morphism(f, f, identity_functor(k.category), "s", "s")


def test_extend_is_deterministic(covering_matrix):
    for fix in covering_matrix:
        j = identity_functor(fix.base.category)
        x0 = fix.total.category.objects[0]
        for d0 in fibre(fix.functor, fix.functor.object_map[x0]):
            h1 = extend_morphism(fix.functor, fix.functor, j, x0, d0)
            h2 = extend_morphism(fix.functor, fix.functor, j, x0, d0)
            assert (h1 is None) == (h2 is None)
            if h1 is not None:
                assert functor_equal(h1, h2)


# -- deck groups --------------------------------------------------------------

def test_aut1_asymmetric_cover_is_trivial_with_fibre_two():
    g = aut1(cover_f2().functor)
    assert g.order() == 1
    assert len(g.seed_fibre) == 2
    assert galois_obstruction(cover_f2().functor, g) is not None


def test_aut1_symmetric_covers_are_order_two():
    for fix in (cover_f0(), cover_f1()):
        g = aut1(fix.functor)
        assert g.order() == 2
        assert g.group.label() == "C2"
        assert galois_obstruction(fix.functor, g) is None


def test_aut1_identity_cover_trivial():
    g = aut1(identity_cover().functor)
    assert g.order() == 1


def test_aut1_cyclic_covers(galois_matrix):
    for n in (2, 3, 4):
        g = aut1(cyclic_cover(n).functor)
        assert g.order() == n
        assert g.group.label() == f"C{n}"


def test_aut1_elements_fix_no_object():
    g = aut1(cover_f0().functor)
    for name, h in g.functors.items():
        if name != "e":
            assert all(h.object_map[x] != x for x in h.source.objects)


def test_aut1_requires_connected_source():
    dis = disconnected_double_kronecker()
    k = kronecker()
    omap = {"s": "s", "t": "t", "s'": "s", "t'": "t"}
    f = LinFunctor.on_basis(
        dis.category, k.category, omap,
        {"a": {"a": 1}, "b": {"b": 1}, "a'": {"a": 1}, "b'": {"b": 1},
         "1_s": {"1_s": 1}, "1_t": {"1_t": 1},
         "1_s'": {"1_s": 1}, "1_t'": {"1_t": 1}})
    with pytest.raises(ValueError):
        aut1(f)


# -- morphisms of coverings ---------------------------------------------------

def test_swap_is_a_self_morphism_of_the_symmetric_cover():
    fix = cover_f0()
    m = CoveringMorphism(swap_functor(fix.total),
                         identity_functor(fix.base.category))
    assert check_morphism(m, fix.functor, fix.functor)


def test_base_change_morphism_between_the_two_galois_covers():
    f0, f1 = cover_f0(), cover_f1()
    k = f0.base.category
    j = LinFunctor.on_basis(k, k, {"s": "s", "t": "t"},
                            {"a": {"a": 1, "b": 1}, "b": {"b": 1},
                             "1_s": {"1_s": 1}, "1_t": {"1_t": 1}})
    assert functor_is_isomorphism(j)
    m = CoveringMorphism(identity_functor(f0.total.category), j)
    assert check_morphism(m, f0.functor, f1.functor)
    # without the base change the two coverings differ
    m_bad = CoveringMorphism(identity_functor(f0.total.category),
                             identity_functor(k))
    assert not check_morphism(m_bad, f0.functor, f1.functor)


# -- the induced map between deck groups --------------------------------------

def test_lambda_on_the_cyclic_tower():
    top, bottom, h = cyclic_reduction(4, 2)
    m = CoveringMorphism(h, identity_functor(top.base.category))
    assert check_morphism(m, top.functor, bottom.functor)
    res = lambda_map(m, top.functor, bottom.functor)
    assert res.source_group.label() == "C4"
    assert res.target_group.label() == "C2"
    assert res.surjective
    assert len(res.kernel) == 2
    assert res.kernel_matches_h_group
    assert res.h_is_covering and res.h_is_galois
    # exact table match: the map is reduction mod 2 on the shift index
    assert res.mapping == {"e": "e", "g1": "g1", "g2": "e", "g3": "g1"}


def test_lambda_identity_morphism():
    fix = cover_f0()
    m = CoveringMorphism(identity_functor(fix.total.category),
                         identity_functor(fix.base.category))
    res = lambda_map(m, fix.functor, fix.functor)
    assert res.mapping == {n: n for n in res.source_group.group.elements}
    assert res.kernel == ("e",)


def test_lambda_down_to_the_trivial_cover():
    fix = cover_f0()
    idk = identity_cover()
    m = CoveringMorphism(fix.functor, identity_functor(fix.base.category))
    res = lambda_map(m, fix.functor, idk.functor)
    assert res.target_group.order() == 1
    assert set(res.kernel) == set(res.source_group.group.elements)
    assert res.kernel_matches_h_group  # H is the covering itself
    assert res.h_group.order() == 2
    assert res.ok()


def test_lambda_rejects_non_galois_input():
    fix = cover_f2()
    m = CoveringMorphism(identity_functor(fix.total.category),
                         identity_functor(fix.base.category))
    with pytest.raises(ValueError):
        lambda_map(m, fix.functor, fix.functor)


# -- fixture-matrix invariants -------------------------------------------------

def test_star_dimension_preserved_by_coverings(covering_matrix):
    for fix in covering_matrix:
        c, b = fix.total.category, fix.base.category
        for x in c.objects:
            assert star(c, x).total_dim == \
                star(b, fix.functor.object_map[x]).total_dim, fix.name


def test_fibre_size_equals_group_order_for_galois(galois_matrix):
    for fix in galois_matrix:
        g = aut1(fix.functor)
        for b in fix.base.category.objects:
            assert len(fibre(fix.functor, b)) == g.order(), fix.name


def test_singleton_fibre_implies_isomorphism(covering_matrix):
    for fix in covering_matrix:
        if not check_covering(fix.functor).ok:
            continue
        if not is_connected(fix.total.category).connected:
            continue
        fibres = [fibre(fix.functor, b) for b in fix.base.category.objects]
        if any(len(f) == 1 for f in fibres):
            assert functor_is_isomorphism(fix.functor), fix.name


def test_connected_source_implies_connected_target(covering_matrix):
    for fix in covering_matrix:
        if check_covering(fix.functor).ok and \
                is_connected(fix.total.category).connected:
            assert is_connected(fix.base.category).connected, fix.name
