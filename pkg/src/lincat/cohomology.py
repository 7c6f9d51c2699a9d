"""Derivations, first Hochschild cohomology, and the Euler embedding of
additive characters.

A derivation is a family of endomorphisms of the hom spaces satisfying
the Leibniz rule against composition.  The space of derivations is the
kernel of one exact linear system; the inner ones are spanned by
commutator families attached to endomorphism choices at each object.
Additive characters of a finite group land in k⁺, so the character
space is zero in characteristic 0 and computed by linear algebra over
F_p otherwise.  delta turns a character into the derivation scaling a
degree-s homogeneous morphism by χ(s).
"""
from dataclasses import dataclass
from typing import Optional

from .exactlinalg import (FieldSpec, Matrix, Scalar, column_space_basis,
                          inverse, kernel_basis, quotient_basis, rank, solve)
from .groups import Group
from .kcat import LinCat, LinComb, comb_add, comb_eq, comb_sub, compose
from .grading import Grading, is_connected_grading, validate_grading


@dataclass
class Derivation:
    """matrices[(x,y)] acts on coordinates in the declared basis of
    hom(x,y); pairs of dimension zero are omitted."""
    category: LinCat
    matrices: dict[tuple[str, str], Matrix]

    def apply(self, comb: LinComb) -> LinComb:
        pair = self.category.comb_pair(comb)
        if pair is None:
            return {}
        vec = self.category.vector(comb, *pair)
        return self.category.comb_of_vector(self.matrices[pair].apply(vec),
                                            *pair)

    def apply_name(self, n: str) -> LinComb:
        return self.apply({n: self.category.field.one()})

    def __add__(self, other: "Derivation") -> "Derivation":
        return Derivation(self.category,
                          {p: m + other.matrices[p]
                           for p, m in self.matrices.items()})

    def __sub__(self, other: "Derivation") -> "Derivation":
        return Derivation(self.category,
                          {p: m - other.matrices[p]
                           for p, m in self.matrices.items()})


def _pair_order(c: LinCat) -> list[tuple[str, str]]:
    return [(x, y) for x in c.objects for y in c.objects if c.dim(x, y)]


def _flatten(c: LinCat, mats: dict[tuple[str, str], Matrix]) -> list[Scalar]:
    out: list[Scalar] = []
    for pair in _pair_order(c):
        out.extend(mats[pair].entries)
    return out


def _unflatten(c: LinCat, vec: list[Scalar]) -> dict[tuple[str, str], Matrix]:
    mats = {}
    at = 0
    for pair in _pair_order(c):
        n = c.dim(*pair)
        mats[pair] = Matrix(c.field, n, n, tuple(vec[at:at + n * n]))
        at += n * n
    return mats


def validate_derivation(d: Derivation) -> list[str]:
    """Leibniz on every composable basis pair; shapes and key set."""
    c = d.category
    problems = []
    if set(d.matrices) != set(_pair_order(c)):
        return ["matrix keys do not match the nonzero hom pairs"]
    for pair in _pair_order(c):
        n = c.dim(*pair)
        m = d.matrices[pair]
        if (m.rows, m.cols) != (n, n):
            problems.append(f"matrix for hom{pair} is {m.rows}x{m.cols}")
    if problems:
        return problems
    one = c.field.one()
    for f in c.basis_names():
        x, y = c.pair_of(f)
        for g in c.basis_names():
            y2, w = c.pair_of(g)
            if y2 != y:
                continue
            lhs = d.apply(compose(c, {g: one}, {f: one})) or {}
            rhs_comb = comb_add(compose(c, {g: one}, d.apply_name(f)),
                                compose(c, d.apply_name(g), {f: one}))
            if not comb_eq(lhs, rhs_comb):
                problems.append(f"Leibniz fails on ({g}, {f})")
    return problems


def derivation_space(c: LinCat) -> list[Derivation]:
    """Kernel basis of the Leibniz system over all composable basis
    pairs.  Unknowns are the entries of one square matrix per nonzero
    hom pair."""
    pairs = _pair_order(c)
    offset = {}
    total = 0
    for pair in pairs:
        offset[pair] = total
        total += c.dim(*pair) ** 2

    def entry_index(pair, i, j):
        return offset[pair] + i * c.dim(*pair) + j

    zero, one = c.field.zero(), c.field.one()
    rows: list[list[Scalar]] = []
    for f in c.basis_names():
        x, y = c.pair_of(f)
        jf = c.hom[(x, y)].index(f)
        for g in c.basis_names():
            y2, w = c.pair_of(g)
            if y2 != y:
                continue
            jg = c.hom[(y, w)].index(g)
            nxw = c.dim(x, w)
            if nxw == 0:
                # zero target space: both sides vanish identically
                continue
            gf = c.vector(c.comp_of(g, f), x, w)
            # one equation per output coordinate of hom(x, w)
            for r in range(nxw):
                row = [zero] * total
                for m in range(nxw):
                    if not gf[m].is_zero():
                        row[entry_index((x, w), r, m)] += gf[m]
                for i, fi in enumerate(c.hom[(x, y)]):
                    coef = c.vector(c.comp_of(g, fi), x, w)[r]
                    if not coef.is_zero():
                        row[entry_index((x, y), i, jf)] -= coef
                for i, gi in enumerate(c.hom[(y, w)]):
                    coef = c.vector(c.comp_of(gi, f), x, w)[r]
                    if not coef.is_zero():
                        row[entry_index((y, w), i, jg)] -= coef
                if any(not a.is_zero() for a in row):
                    rows.append(row)
    if rows:
        vecs = kernel_basis(Matrix.from_rows(c.field, rows))
    else:
        vecs = [[one if i == j else zero for i in range(total)]
                for j in range(total)]
    out = []
    for v in vecs:
        d = Derivation(c, _unflatten(c, v))
        for x in c.objects:
            if not all(a.is_zero() for a in
                       (d.apply(c.identity(x)) or {}).values()):
                raise RuntimeError(f"derivation does not kill identity of {x}")
        out.append(d)
    return out


def inner_derivations(c: LinCat) -> list[Derivation]:
    """Basis of the span of f ↦ α_y∘f − f∘α_x with α ranging over a
    basis of the direct sum of all endomorphism spaces."""
    one = c.field.one()
    gens: list[list[Scalar]] = []
    for o in c.objects:
        for u in c.hom[(o, o)]:
            mats = {}
            for pair in _pair_order(c):
                x, y = pair
                cols = []
                for f in c.hom[pair]:
                    left = compose(c, {u: one}, {f: one}) if y == o else {}
                    right = compose(c, {f: one}, {u: one}) if x == o else {}
                    cols.append(c.vector(comb_sub(left, right), x, y))
                mats[pair] = Matrix.from_cols(c.field, cols,
                                              nrows=c.dim(x, y))
            gens.append(_flatten(c, mats))
    total = len(gens[0]) if gens else 0
    basis_vecs = column_space_basis(c.field, gens, total)
    return [Derivation(c, _unflatten(c, v)) for v in basis_vecs]


@dataclass
class H1Result:
    dimension: int
    derivation_dim: int
    inner_dim: int
    representatives: list[Derivation]


def h1(c: LinCat) -> H1Result:
    """dim(derivations) − dim(inner), with coset representatives taken
    from the derivation basis itself."""
    ders = derivation_space(c)
    inner = inner_derivations(c)
    if not ders:
        return H1Result(0, 0, len(inner), [])
    ambient = Matrix.from_cols(c.field,
                               [_flatten(c, d.matrices) for d in ders])
    coords = []
    for d in inner:
        sol = solve(ambient, _flatten(c, d.matrices))
        if sol is None:
            raise RuntimeError("inner derivation outside the derivation space")
        coords.append(sol)
    reps_idx, _ = quotient_basis(c.field, len(ders), coords)
    reps = []
    for v in reps_idx:
        hit = [i for i, a in enumerate(v) if not a.is_zero()]
        reps.append(ders[hit[0]])
    return H1Result(len(ders) - len(inner), len(ders), len(inner), reps)


def is_inner(d: Derivation) -> bool:
    c = d.category
    inner = [_flatten(c, e.matrices) for e in inner_derivations(c)]
    v = _flatten(c, d.matrices)
    n = len(v)
    base = rank(Matrix.from_cols(c.field, inner, nrows=n)) if inner else 0
    return rank(Matrix.from_cols(c.field, inner + [v], nrows=n)) == base


def in_derivation_space(d: Derivation) -> bool:
    c = d.category
    space = [_flatten(c, e.matrices) for e in derivation_space(c)]
    v = _flatten(c, d.matrices)
    n = len(v)
    base = rank(Matrix.from_cols(c.field, space, nrows=n)) if space else 0
    return rank(Matrix.from_cols(c.field, space + [v], nrows=n)) == base


# -- characters ------------------------------------------------------------


@dataclass
class Character:
    group: Group
    field: FieldSpec
    values: dict[str, Scalar]

    def __call__(self, s: str) -> Scalar:
        return self.values[s]

    def is_zero(self) -> bool:
        return all(a.is_zero() for a in self.values.values())


def validate_character(chi: Character) -> list[str]:
    problems = []
    grp = chi.group
    if set(chi.values) != set(grp.elements):
        return ["value keys do not match the group elements"]
    if not chi.values[grp.identity].is_zero():
        problems.append("nonzero value at the identity")
    for s in grp.elements:
        for t in grp.elements:
            if chi.values[grp.mul(s, t)] != chi.values[s] + chi.values[t]:
                problems.append(f"not additive on ({s}, {t})")
    return problems


def zero_character(grp: Group, field: FieldSpec) -> Character:
    return Character(grp, field, {s: field.zero() for s in grp.elements})


def characters(grp: Group, field: FieldSpec) -> list[Character]:
    """Basis of the additive characters group → k⁺.  A finite group has
    no nonzero map into a torsion-free k⁺, so the basis is empty in
    characteristic 0."""
    if field.characteristic == 0:
        return []
    elems = list(grp.elements)
    idx = {s: i for i, s in enumerate(elems)}
    zero, one = field.zero(), field.one()
    rows = []
    row = [zero] * len(elems)
    row[idx[grp.identity]] = one
    rows.append(row)
    for s in elems:
        for t in elems:
            row = [zero] * len(elems)
            row[idx[s]] += one
            row[idx[t]] += one
            row[idx[grp.mul(s, t)]] -= one
            if any(not a.is_zero() for a in row):
                rows.append(row)
    out = []
    for v in kernel_basis(Matrix.from_rows(field, rows)):
        out.append(Character(grp, field,
                             {s: v[idx[s]] for s in elems}))
    return out


# -- the Euler derivation of a character ------------------------------------


def _require_scalar_endos(c: LinCat) -> None:
    for x in c.objects:
        if c.dim(x, x) != 1:
            raise ValueError(f"End({x}) has dimension {c.dim(x, x)}, "
                             "expected 1")


def delta(c: LinCat, z: Grading, chi: Character) -> Derivation:
    """Derivation scaling each homogeneous element of degree s by χ(s);
    defined when every endomorphism ring is spanned by the identity."""
    _require_scalar_endos(c)
    problems = validate_grading(z)
    if problems:
        raise ValueError(problems[0])
    if z.category != c:
        raise ValueError("grading does not belong to the category")
    if chi.group != z.group:
        raise ValueError("character group does not match the grading group")
    if chi.field != c.field:
        raise ValueError("character field does not match the category field")
    bad = validate_character(chi)
    if bad:
        raise ValueError(bad[0])
    mats = {}
    for pair, labels in z.degrees.items():
        cb = z.basis[pair]
        n = cb.rows
        diag = Matrix(c.field, n, n,
                      tuple(chi.values[labels[i]] if i == j else c.field.zero()
                            for i in range(n) for j in range(n)))
        mats[pair] = (cb @ diag) @ inverse(cb)
    d = Derivation(c, mats)
    left = validate_derivation(d)
    if left:
        raise RuntimeError(f"Euler derivation fails Leibniz: {left[0]}")
    return d


def delta_injectivity_check(c: LinCat, z: Grading) -> bool:
    """True iff no nonzero character maps to an inner derivation.  Only
    defined for connected gradings; the embedding argument breaks
    without connectivity, so disconnected input is refused."""
    _require_scalar_endos(c)
    rep = is_connected_grading(z)
    if not rep.connected:
        raise ValueError("grading is not connected; refusing the check")
    for chi in characters(z.group, c.field):
        if chi.is_zero():
            continue
        if is_inner(delta(c, z, chi)):
            return False
    return True
