"""Free group actions, categorical quotients, and the Galois analysis.

The quotient C/G is built on the representative model: objects are
orbits, hom(α, β) is the direct sum of the homs from the chosen
representative of α to every member of β, and composition translates the
middle object back into representative position by the unique group
element that freeness provides.  Basis names are inherited from the
source, so quotient structure constants can be compared literally.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .covering import (CoveringGroup, CoveringReport, aut1, check_covering,
                       extend_morphism, fibre, galois_obstruction)
from .exactlinalg import Matrix
from .groups import Group, find_isomorphism
from .kcat import (LinCat, LinComb, LinFunctor, functor_compose,
                   functor_equal, functor_is_isomorphism, identity_functor,
                   is_connected, validate_category, validate_functor)


@dataclass
class GroupAction:
    """A finite group acting by automorphisms, freely on objects."""
    group: Group
    functors: dict[str, LinFunctor]
    category: LinCat

    def apply_object(self, s: str, x: str) -> str:
        return self.functors[s].object_map[x]


def check_action(a: GroupAction) -> list[str]:
    problems = []
    for s in a.group.elements:
        if s not in a.functors:
            problems.append(f"no functor for group element {s}")
            return problems
        f = a.functors[s]
        if f.source != a.category or f.target != a.category:
            problems.append(f"functor of {s} is not an endofunctor of the category")
            return problems
        if validate_functor(f):
            problems.append(f"functor of {s} is not functorial")
        if not functor_is_isomorphism(f):
            problems.append(f"functor of {s} is not an automorphism")
    ident = a.functors[a.group.identity]
    if not functor_equal(ident, identity_functor(a.category)):
        problems.append("identity element does not act as the identity functor")
    for s in a.group.elements:
        for t in a.group.elements:
            st = a.group.mul(s, t)
            if not functor_equal(functor_compose(a.functors[s], a.functors[t]),
                                 a.functors[st]):
                problems.append(f"action is not compatible: {s}·{t} ≠ {st} on functors")
    for s in a.group.elements:
        if s == a.group.identity:
            continue
        for x in a.category.objects:
            if a.apply_object(s, x) == x:
                problems.append(f"action is not free: {s}·{x} = {x}")
    return problems


@dataclass
class QuotientResult:
    quotient: LinCat
    projection: LinFunctor
    orbit_representatives: dict[str, str]
    deck_group: CoveringGroup


def quotient(a: GroupAction, verify: bool = True) -> QuotientResult:
    """The categorical quotient with its projection covering.

    Objects are orbits, named by their lexicographically least member,
    which also serves as the representative.  hom(α, β) is spanned by the
    source bases of hom(rep(α), y) over all y in β, inheriting names.
    With verify=True the projection is checked to be a Galois covering
    whose deck group is isomorphic to the acting group.
    """
    problems = check_action(a)
    if problems:
        raise ValueError("invalid group action: " + "; ".join(problems))
    c = a.category
    if not is_connected(c).connected:
        raise ValueError("quotient requires a connected category")

    orbit_of: dict[str, str] = {}
    reps: dict[str, str] = {}
    orbit_names: list[str] = []
    for x in c.objects:
        if x in orbit_of:
            continue
        orbit = {a.apply_object(s, x) for s in a.group.elements}
        rep = min(orbit)
        for y in orbit:
            orbit_of[y] = rep
        reps[rep] = rep
        orbit_names.append(rep)
    members: dict[str, list[str]] = {rep: [] for rep in orbit_names}
    for x in c.objects:
        members[orbit_of[x]].append(x)  # declaration order within each orbit

    # unique translator: translate[(rep, y)] = s with s·rep = y
    translate: dict[tuple[str, str], str] = {}
    for rep in orbit_names:
        for s in a.group.elements:
            translate[(rep, a.apply_object(s, rep))] = s

    hom: dict[tuple[str, str], tuple[str, ...]] = {}
    for alpha in orbit_names:
        x0 = reps[alpha]
        for beta in orbit_names:
            names: list[str] = []
            for y in members[beta]:
                names.extend(c.hom[(x0, y)])
            hom[(alpha, beta)] = tuple(names)

    identities = {alpha: c.identity(reps[alpha]) for alpha in orbit_names}

    comp: dict[tuple[str, str], LinComb] = {}
    from .kcat import compose
    for alpha in orbit_names:
        x0 = reps[alpha]
        for beta in orbit_names:
            for y in members[beta]:
                for fn in c.hom[(x0, y)]:
                    for gamma in orbit_names:
                        for gn in hom[(beta, gamma)]:
                            u = translate[(beta, y)]
                            gu = a.functors[u].apply_name(gn)
                            result = compose(c, gu, {fn: c.field.one()})
                            if result:
                                comp[(gn, fn)] = result

    q = LinCat(c.field, tuple(orbit_names), hom, comp, identities)

    omap = {x: orbit_of[x] for x in c.objects}
    mats = {}
    for (x, y), names in c.hom.items():
        alpha, beta = orbit_of[x], orbit_of[y]
        u_inv = a.group.inv(translate[(alpha, x)])
        cols = []
        for n in names:
            back = a.functors[u_inv].apply_name(n)
            cols.append(q.vector(back, alpha, beta))
        mats[(x, y)] = Matrix.from_cols(c.field, cols, nrows=q.dim(alpha, beta))
    projection = LinFunctor(c, q, omap, mats)

    if verify:
        bad = validate_category(q)
        if bad:
            raise ValueError(f"quotient category violates axioms: {bad[0]}")
        bad = validate_functor(projection)
        if bad:
            raise ValueError(f"projection is not functorial: {bad[0]}")
        report = check_covering(projection)
        if not report.ok:
            raise ValueError(f"projection is not a covering: {report.message()}")
        deck = aut1(projection)
        if galois_obstruction(projection, deck) is not None:
            raise ValueError("projection is not Galois")
        if find_isomorphism(a.group, deck.group) is None:
            raise ValueError("deck group of the projection is not isomorphic "
                             "to the acting group")
    else:
        deck = aut1(projection)
    return QuotientResult(q, projection, reps, deck)


def action_from_deck(grp: CoveringGroup) -> GroupAction:
    return GroupAction(grp.group, dict(grp.functors), grp.covering.source)


@dataclass
class GaloisResult:
    galois: bool
    group: Optional[CoveringGroup]
    reason: Optional[str]


def is_galois(f: LinFunctor) -> GaloisResult:
    """Connected source and deck group transitive on the seed fibre; the
    free action makes transitivity equivalent to |group| = |fibre|."""
    report = check_covering(f)
    if not report.ok:
        raise ValueError(f"not a covering: {report.message()}")
    if not is_connected(f.source).connected:
        return GaloisResult(False, None, "source category is not connected")
    grp = aut1(f)
    reason = galois_obstruction(f, grp)
    return GaloisResult(reason is None, grp, reason)


@dataclass
class StructureIsoResult:
    quotient_result: QuotientResult
    iso: LinFunctor  # quotient -> base
    problems: list[str]

    def ok(self) -> bool:
        return not self.problems


def structure_iso(f: LinFunctor) -> StructureIsoResult:
    """Factor a Galois covering through the quotient by its deck group:
    an isomorphism F' with F'∘P = F, built on orbit representatives."""
    gal = is_galois(f)
    if not gal.galois:
        raise ValueError(f"covering is not Galois: {gal.reason}")
    assert gal.group is not None
    qres = quotient(action_from_deck(gal.group))
    q = qres.quotient
    omap = {alpha: f.object_map[rep] for alpha, rep in
            qres.orbit_representatives.items()}
    base = f.target
    mats = {}
    for (alpha, beta), names in q.hom.items():
        cols = [base.vector(f.apply_name(n), omap[alpha], omap[beta])
                for n in names]
        mats[(alpha, beta)] = Matrix.from_cols(
            q.field, cols, nrows=base.dim(omap[alpha], omap[beta]))
    iso = LinFunctor(q, base, omap, mats)
    problems = []
    if validate_functor(iso):
        problems.append("factorization is not functorial")
    if not functor_is_isomorphism(iso):
        problems.append("factorization is not an isomorphism")
    if not functor_equal(functor_compose(iso, qres.projection), f):
        problems.append("factorization does not recover the covering")
    return StructureIsoResult(qres, iso, problems)


def hom_coverings(u: LinFunctor, f: LinFunctor) -> list[LinFunctor]:
    """All morphisms (H, 1) from one Galois covering to another over the
    same base, enumerated by seeding the first object across the fibre."""
    if u.target != f.target:
        raise ValueError("coverings do not share a base")
    for cover in (u, f):
        gal = is_galois(cover)
        if not gal.galois:
            raise ValueError(f"covering is not Galois: {gal.reason}")
    u0 = u.source.objects[0]
    j = identity_functor(u.target)
    out = []
    for c0 in fibre(f, u.object_map[u0]):
        h = extend_morphism(u, f, j, u0, c0)
        if h is not None:
            out.append(h)
    return out


@dataclass
class GSetReport:
    homs: list[LinFunctor]
    transitive: bool
    isotropy: tuple[str, ...]
    isotropy_normal: bool
    orbit_stabilizer_ok: bool  # |homs| · |isotropy| = |deck group|


def gset_analysis(u: LinFunctor, f: LinFunctor) -> GSetReport:
    """The right action of the deck group of U on the morphisms U -> F by
    precomposition; transitivity and normality of the isotropy subgroup
    are decided from the action table."""
    homs = hom_coverings(u, f)
    if not homs:
        raise ValueError("no morphisms between the coverings; "
                         "the action is empty")
    gu = aut1(u)
    u0 = u.source.objects[0]
    by_seed = {h.object_map[u0]: i for i, h in enumerate(homs)}
    action: dict[tuple[int, str], int] = {}
    for i, h in enumerate(homs):
        for name, deck in gu.functors.items():
            composite = functor_compose(h, deck)
            target = by_seed.get(composite.object_map[u0])
            if target is None or not functor_equal(composite, homs[target]):
                raise ValueError("the action does not close on the hom set")
            action[(i, name)] = target
    orbit = {0}
    frontier = [0]
    while frontier:
        i = frontier.pop()
        for name in gu.group.elements:
            j = action[(i, name)]
            if j not in orbit:
                orbit.add(j)
                frontier.append(j)
    transitive = len(orbit) == len(homs)
    isotropy = tuple(name for name in gu.group.elements
                     if action[(0, name)] == 0)
    normal = gu.group.is_normal(isotropy)
    os_ok = len(homs) * len(isotropy) == gu.order()
    return GSetReport(homs, transitive, isotropy, normal, os_ok)


@dataclass
class UniversalReport:
    ok: bool
    pairs_checked: int
    violations: list[tuple[int, str, str]]  # (family index, u0, c0)


def check_universal(u: LinFunctor, family: list[LinFunctor]) -> UniversalReport:
    """Relative universality: for every covering in the family and every
    compatible seed pair, a morphism (H, 1) out of u exists (uniqueness
    per seed is forced by rigidity).  No claim is made beyond the family.
    """
    gal = is_galois(u)
    if not gal.galois:
        raise ValueError(f"covering is not Galois: {gal.reason}")
    j = identity_functor(u.target)
    violations = []
    checked = 0
    for idx, f in enumerate(family):
        if f.target != u.target:
            raise ValueError(f"family member {idx} has a different base")
        for u0 in u.source.objects:
            for c0 in fibre(f, u.object_map[u0]):
                checked += 1
                if extend_morphism(u, f, j, u0, c0) is None:
                    violations.append((idx, u0, c0))
    return UniversalReport(not violations, checked, violations)
