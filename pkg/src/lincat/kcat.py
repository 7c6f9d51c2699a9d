"""Finite k-linear categories given by structure constants.

A category here is a finite object list, a chosen basis for every hom
space, and explicit composition constants on basis pairs.  Morphisms are
finitely supported linear combinations of basis names; basis names are
globally unique so a combination knows which hom space it lives in.  Zero
hom spaces are stored as empty basis tuples, never as missing keys, so
dimension counts are unambiguous.

Also here: k-linear functors, walks and connectivity, and compilation of
quiver-with-relations presentations into categories with a certified
path-monomial basis.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Optional, Sequence, Union

from .exactlinalg import (FieldSpec, Matrix, Scalar, column_space_basis,
                          inverse, quotient_basis, solve)

# morphism = finitely supported combination of basis names, zero coeffs dropped
LinComb = dict[str, Scalar]


def comb_normalize(comb: LinComb) -> LinComb:
    return {n: s for n, s in comb.items() if not s.is_zero()}

def comb_add(a: LinComb, b: LinComb) -> LinComb:
    out = dict(a)
    for n, s in b.items():
        out[n] = out[n] + s if n in out else s
    return comb_normalize(out)

def comb_scale(s: Scalar, a: LinComb) -> LinComb:
    return comb_normalize({n: s * v for n, v in a.items()})

def comb_sub(a: LinComb, b: LinComb) -> LinComb:
    out = dict(a)
    for n, s in b.items():
        out[n] = out[n] - s if n in out else -s
    return comb_normalize(out)

def comb_eq(a: LinComb, b: LinComb) -> bool:
    return comb_normalize(a) == comb_normalize(b)

def comb_str(comb: LinComb) -> str:
    if not comb:
        return "0"
    parts = []
    for n in sorted(comb):
        s = comb[n]
        parts.append(n if s.is_one() else f"({s})*{n}")
    return " + ".join(parts)


@dataclass(frozen=True)
class Violation:
    """One failed axiom instance; `where` names the offending data."""
    kind: str
    where: tuple
    detail: str

    def __str__(self):
        return f"{self.kind} at {self.where}: {self.detail}"


@dataclass
class LinCat:
    field: FieldSpec
    objects: tuple[str, ...]
    hom: dict[tuple[str, str], tuple[str, ...]]
    comp: dict[tuple[str, str], LinComb]  # (g, f) -> g∘f; missing key = zero
    identities: dict[str, LinComb]

    def __post_init__(self):
        self.objects = tuple(self.objects)
        if len(set(self.objects)) != len(self.objects):
            raise ValueError("duplicate object names")
        objset = set(self.objects)
        for (x, y) in self.hom:
            if x not in objset or y not in objset:
                raise ValueError(f"hom pair ({x},{y}) references unknown objects")
        self.hom = {(x, y): tuple(self.hom.get((x, y), ()))
                    for x in self.objects for y in self.objects}
        self._pair: dict[str, tuple[str, str]] = {}
        self._index: dict[str, int] = {}
        for pair, names in self.hom.items():
            for i, n in enumerate(names):
                if n in self._pair:
                    raise ValueError(f"basis name {n!r} declared twice")
                self._pair[n] = pair
                self._index[n] = i
        for (g, f), comb in list(self.comp.items()):
            if g not in self._pair or f not in self._pair:
                raise ValueError(f"comp key ({g},{f}) references unknown basis names")
            if self._pair[f][1] != self._pair[g][0]:
                raise ValueError(f"comp key ({g},{f}) is not a composable pair")
            for n in comb:
                if n not in self._pair:
                    raise ValueError(f"comp value for ({g},{f}) uses unknown name {n!r}")
        self.comp = {k: comb_normalize(v) for k, v in self.comp.items()}
        self.comp = {k: v for k, v in self.comp.items() if v}
        for x in self.objects:
            if x not in self.identities:
                raise ValueError(f"no identity declared for object {x}")
            for n in self.identities[x]:
                if self._pair.get(n) != (x, x):
                    raise ValueError(f"identity of {x} uses {n!r} outside End({x})")
        self.identities = {x: comb_normalize(c) for x, c in self.identities.items()}

    @staticmethod
    def make(field: FieldSpec, objects: Sequence[str],
             hom: dict[tuple[str, str], Sequence[str]],
             comp: dict[tuple[str, str], dict],
             identities: dict[str, dict]) -> "LinCat":
        """Builder coercing plain ints/Fractions/strings to Scalars."""
        def coerce(c: dict) -> LinComb:
            out = {}
            for n, v in c.items():
                out[n] = field.parse(v) if isinstance(v, str) else field.scalar(v)
            return out
        return LinCat(field, tuple(objects),
                      {k: tuple(v) for k, v in hom.items()},
                      {k: coerce(v) for k, v in comp.items()},
                      {x: coerce(c) for x, c in identities.items()})

    # -- basis bookkeeping ------------------------------------------------
    def pair_of(self, name: str) -> tuple[str, str]:
        return self._pair[name]

    def source_of(self, name: str) -> str:
        return self._pair[name][0]

    def target_of(self, name: str) -> str:
        return self._pair[name][1]

    def dim(self, x: str, y: str) -> int:
        return len(self.hom[(x, y)])

    def basis_names(self) -> list[str]:
        return [n for pair in sorted(self.hom) for n in self.hom[pair]]

    def comb_pair(self, comb: LinComb) -> Optional[tuple[str, str]]:
        """The single hom pair supporting comb; None if comb = 0."""
        pairs = {self._pair[n] for n in comb if not comb[n].is_zero()}
        if not pairs:
            return None
        if len(pairs) > 1:
            raise ValueError(f"combination spread over several hom spaces: {sorted(pairs)}")
        return pairs.pop()

    def vector(self, comb: LinComb, x: str, y: str) -> list[Scalar]:
        """Coordinates of comb in the declared basis of hom(x,y)."""
        vec = [self.field.zero()] * self.dim(x, y)
        for n, s in comb.items():
            if s.is_zero():
                continue
            if self._pair[n] != (x, y):
                raise ValueError(f"{n} is not in hom({x},{y})")
            vec[self._index[n]] = s
        return vec

    def comb_of_vector(self, vec: Sequence[Scalar], x: str, y: str) -> LinComb:
        names = self.hom[(x, y)]
        if len(vec) != len(names):
            raise ValueError("coordinate length mismatch")
        return comb_normalize({n: s for n, s in zip(names, vec)})

    def comp_of(self, g: str, f: str) -> LinComb:
        return dict(self.comp.get((g, f), {}))

    def identity(self, x: str) -> LinComb:
        return dict(self.identities[x])


def compose(c: LinCat, g: LinComb, f: LinComb) -> LinComb:
    """Bilinear extension of the structure constants; raises on a
    non-composable pair of nonzero morphisms."""
    pf, pg = c.comb_pair(f), c.comb_pair(g)
    if pf is None or pg is None:
        return {}
    if pf[1] != pg[0]:
        raise ValueError(f"cannot compose hom{pg} after hom{pf}")
    out: LinComb = {}
    for gn, gs in g.items():
        if gs.is_zero():
            continue
        for fn, fs in f.items():
            if fs.is_zero():
                continue
            coeff = gs * fs
            for n, s in c.comp.get((gn, fn), {}).items():
                add = coeff * s
                out[n] = out[n] + add if n in out else add
    return comb_normalize(out)


def validate_category(c: LinCat) -> list[Violation]:
    """Axiom check: composition lands in the right hom space, identities
    are two-sided units, composition is associative on all basis triples."""
    out: list[Violation] = []
    for (g, f), comb in c.comp.items():
        want = (c.source_of(f), c.target_of(g))
        for n in comb:
            if c.pair_of(n) != want:
                out.append(Violation("comp-range", (g, f),
                                     f"{g}∘{f} has a term {n} outside hom{want}"))
                break
    for x in c.objects:
        if not c.identities[x]:
            out.append(Violation("identity-zero", (x,), f"identity of {x} is zero"))
    for n in c.basis_names():
        x, y = c.pair_of(n)
        f = {n: c.field.one()}
        left = compose(c, c.identity(y), f)
        if not comb_eq(left, f):
            out.append(Violation("unit-left", (y, n),
                                 f"id_{y} ∘ {n} = {comb_str(left)}"))
        right = compose(c, f, c.identity(x))
        if not comb_eq(right, f):
            out.append(Violation("unit-right", (n, x),
                                 f"{n} ∘ id_{x} = {comb_str(right)}"))
    def in_range(comb: LinComb, pair: tuple[str, str]) -> bool:
        return all(c.pair_of(n) == pair for n in comb)

    one = c.field.one()
    for f in c.basis_names():
        x, y = c.pair_of(f)
        for g in c.basis_names():
            if c.source_of(g) != y:
                continue
            z = c.target_of(g)
            gf = c.comp_of(g, f)
            if not in_range(gf, (x, z)):
                continue  # already reported as comp-range
            for h in c.basis_names():
                if c.source_of(h) != z:
                    continue
                w = c.target_of(h)
                hg = c.comp_of(h, g)
                if not in_range(hg, (y, w)):
                    continue
                lhs = compose(c, {h: one}, gf)
                rhs = compose(c, hg, {f: one})
                if not comb_eq(lhs, rhs):
                    out.append(Violation("assoc", (h, g, f),
                                         f"({h}∘{g})∘{f} = {comb_str(rhs)} but "
                                         f"{h}∘({g}∘{f}) = {comb_str(lhs)}"))
    return out


@dataclass
class LinFunctor:
    """k-linear functor.  matrices[(x,y)] sends coordinates in the source
    basis of hom(x,y) to coordinates in the target basis of
    hom(object_map[x], object_map[y]): columns indexed by source basis."""
    source: LinCat
    target: LinCat
    object_map: dict[str, str]
    matrices: dict[tuple[str, str], Matrix]

    def __post_init__(self):
        for x in self.source.objects:
            if x not in self.object_map:
                raise ValueError(f"object_map misses {x}")
            if self.object_map[x] not in self.target.objects:
                raise ValueError(f"object_map sends {x} to undeclared {self.object_map[x]}")
        mats = {}
        for x in self.source.objects:
            for y in self.source.objects:
                pair = (x, y)
                want_rows = self.target.dim(self.object_map[x], self.object_map[y])
                want_cols = self.source.dim(x, y)
                m = self.matrices.get(pair)
                if m is None:
                    if want_cols == 0:
                        m = Matrix.zeros(self.source.field, want_rows, 0)
                    else:
                        raise ValueError(f"no matrix for hom{pair}")
                if (m.rows, m.cols) != (want_rows, want_cols):
                    raise ValueError(
                        f"matrix for hom{pair} is {m.rows}x{m.cols}, "
                        f"expected {want_rows}x{want_cols}")
                mats[pair] = m
        self.matrices = mats

    @staticmethod
    def on_basis(source: LinCat, target: LinCat, object_map: dict[str, str],
                 assignment: dict[str, dict]) -> "LinFunctor":
        """Builder from images of basis morphisms (plain coeffs allowed)."""
        fld = target.field
        mats = {}
        for (x, y), names in source.hom.items():
            fx, fy = object_map[x], object_map[y]
            cols = []
            for n in names:
                img = assignment.get(n, {})
                comb = {m: (fld.parse(v) if isinstance(v, str) else fld.scalar(v))
                        for m, v in img.items()}
                cols.append(target.vector(comb, fx, fy))
            mats[(x, y)] = Matrix.from_cols(fld, cols, nrows=target.dim(fx, fy))
        return LinFunctor(source, target, dict(object_map), mats)

    def apply_object(self, x: str) -> str:
        return self.object_map[x]

    def apply(self, comb: LinComb) -> LinComb:
        """Image of a single-hom-pair combination."""
        pair = self.source.comb_pair(comb)
        if pair is None:
            return {}
        vec = self.source.vector(comb, *pair)
        out = self.matrices[pair].apply(vec)
        return self.target.comb_of_vector(
            out, self.object_map[pair[0]], self.object_map[pair[1]])

    def apply_name(self, n: str) -> LinComb:
        return self.apply({n: self.source.field.one()})


def identity_functor(c: LinCat) -> LinFunctor:
    return LinFunctor(c, c, {x: x for x in c.objects},
                      {pair: Matrix.identity(c.field, len(names))
                       for pair, names in c.hom.items()})


def functor_compose(g: LinFunctor, f: LinFunctor) -> LinFunctor:
    """g ∘ f."""
    if f.target != g.source:
        raise ValueError("functors not composable: middle categories differ")
    omap = {x: g.object_map[f.object_map[x]] for x in f.source.objects}
    mats = {}
    for pair in f.matrices:
        mid = (f.object_map[pair[0]], f.object_map[pair[1]])
        mats[pair] = g.matrices[mid] @ f.matrices[pair]
    return LinFunctor(f.source, g.target, omap, mats)


def functor_equal(f: LinFunctor, g: LinFunctor) -> bool:
    return (f.source == g.source and f.target == g.target
            and f.object_map == g.object_map and f.matrices == g.matrices)


def functor_is_isomorphism(f: LinFunctor) -> bool:
    omap = f.object_map
    if len(set(omap.values())) != len(f.target.objects):
        return False
    return all(m.rows == m.cols and inverse(m) is not None
               for m in f.matrices.values())


def inverse_functor(f: LinFunctor) -> LinFunctor:
    if not functor_is_isomorphism(f):
        raise ValueError("functor is not an isomorphism")
    omap_inv = {v: k for k, v in f.object_map.items()}
    mats = {}
    for (x, y), m in f.matrices.items():
        inv = inverse(m)
        assert inv is not None
        mats[(f.object_map[x], f.object_map[y])] = inv
    return LinFunctor(f.target, f.source, omap_inv, mats)


def validate_functor(f: LinFunctor) -> list[Violation]:
    """Unit preservation and functoriality on all composable basis pairs."""
    out: list[Violation] = []
    src, tgt = f.source, f.target
    for x in src.objects:
        img = f.apply(src.identity(x))
        want = tgt.identity(f.object_map[x])
        if not comb_eq(img, want):
            out.append(Violation("functor-unit", (x,),
                                 f"F(id_{x}) = {comb_str(img)} ≠ id_{f.object_map[x]}"))
    one = src.field.one()
    for fn in src.basis_names():
        y = src.target_of(fn)
        for gn in src.basis_names():
            if src.source_of(gn) != y:
                continue
            lhs = f.apply(src.comp_of(gn, fn))
            rhs = compose(tgt, f.apply_name(gn), f.apply_name(fn))
            if not comb_eq(lhs, rhs):
                out.append(Violation("functor-comp", (gn, fn),
                                     f"F({gn}∘{fn}) = {comb_str(lhs)} but "
                                     f"F({gn})∘F({fn}) = {comb_str(rhs)}"))
    return out


# -- walks and connectivity -----------------------------------------------

@dataclass(frozen=True)
class WalkStep:
    """One step along a morphism supported in hom(source, target); sign +1
    traverses with the arrow, -1 against it."""
    source: str
    target: str
    comb: tuple[tuple[str, Scalar], ...]  # frozen form of a LinComb
    sign: int

    def comb_dict(self) -> LinComb:
        return dict(self.comb)

    def start(self) -> str:
        return self.source if self.sign == 1 else self.target

    def end(self) -> str:
        return self.target if self.sign == 1 else self.source

    def reversed(self) -> "WalkStep":
        return WalkStep(self.source, self.target, self.comb, -self.sign)


def make_step(c: LinCat, comb: LinComb, sign: int) -> WalkStep:
    pair = c.comb_pair(comb)
    if pair is None:
        raise ValueError("walk step morphism is zero")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    frozen = tuple(sorted(comb_normalize(comb).items()))
    return WalkStep(pair[0], pair[1], frozen, sign)


@dataclass(frozen=True)
class Walk:
    start: str
    steps: tuple[WalkStep, ...]

    def end(self) -> str:
        cur = self.start
        for st in self.steps:
            if st.start() != cur:
                raise ValueError(f"step from {st.start()} does not chain at {cur}")
            cur = st.end()
        return cur

    def objects(self) -> list[str]:
        out = [self.start]
        for st in self.steps:
            out.append(st.end())
        return out

    def reversed(self) -> "Walk":
        return Walk(self.end(), tuple(st.reversed() for st in reversed(self.steps)))

    def concat(self, other: "Walk") -> "Walk":
        if self.end() != other.start:
            raise ValueError("walks do not chain")
        return Walk(self.start, self.steps + other.steps)

    def validate(self, c: LinCat) -> list[str]:
        problems = []
        if self.start not in c.objects:
            problems.append(f"unknown start {self.start}")
            return problems
        cur = self.start
        for i, st in enumerate(self.steps):
            comb = st.comb_dict()
            if not comb_normalize(comb):
                problems.append(f"step {i} is zero")
                continue
            try:
                pair = c.comb_pair(comb)
            except ValueError as e:
                problems.append(f"step {i}: {e}")
                continue
            if pair != (st.source, st.target):
                problems.append(f"step {i} declares hom({st.source},{st.target}) "
                                f"but is supported in hom{pair}")
            if st.start() != cur:
                problems.append(f"step {i} starts at {st.start()}, walk is at {cur}")
            cur = st.end()
        return problems


@dataclass
class ConnectivityReport:
    connected: bool
    components: list[list[str]]
    walks_from_root: dict[str, Walk]  # root of each component -> per-object walk

    def walk_between(self, x: str, y: str) -> Optional[Walk]:
        wx = self.walks_from_root.get(x)
        wy = self.walks_from_root.get(y)
        if wx is None or wy is None or wx.start != wy.start:
            return None
        return wx.reversed().concat(wy)


def is_connected(c: LinCat) -> ConnectivityReport:
    """Walk-connectivity of the object graph whose edges are nonzero hom
    spaces; BFS yields a witness walk forest."""
    edges: dict[str, list[WalkStep]] = {x: [] for x in c.objects}
    one = c.field.one()
    for (x, y), names in c.hom.items():
        for n in names:
            step = make_step(c, {n: one}, 1)
            edges[x].append(step)            # traverse x -> y
            edges[y].append(step.reversed()) # traverse y -> x
            if x == y:
                break  # one loop edge is enough for connectivity
    seen: dict[str, Walk] = {}
    components: list[list[str]] = []
    for root in c.objects:
        if root in seen:
            continue
        comp = [root]
        seen[root] = Walk(root, ())
        queue = [root]
        while queue:
            cur = queue.pop(0)
            for st in edges[cur]:
                nxt = st.end()
                if st.start() == cur and nxt not in seen:
                    seen[nxt] = seen[cur].concat(Walk(cur, (st,)))
                    comp.append(nxt)
                    queue.append(nxt)
        components.append(comp)
    return ConnectivityReport(len(components) <= 1, components, seen)


# -- quiver presentations ---------------------------------------------------

@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


# one relation = sum of coefficiented parallel paths; paths are arrow-name
# tuples in composition order, rightmost arrow applied first
RelationTerm = tuple[Fraction, tuple[str, ...]]
Relation = tuple[RelationTerm, ...]


class TruncationError(ValueError):
    """Raised when the declared length bound does not truncate exactly."""

    def __init__(self, witness: tuple[str, ...], bound: int):
        self.witness = witness
        self.bound = bound
        super().__init__(
            f"path {'*'.join(witness)} of length {len(witness)} is not in the "
            f"relation ideal, so truncation at length {bound} is unsound")


@dataclass
class QuiverPresentation:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]
    relations: tuple[Relation, ...]
    length_bound: int

    def __post_init__(self):
        self.vertices = tuple(self.vertices)
        self.arrows = tuple(self.arrows)
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex names")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise ValueError("duplicate arrow names")
        vset = set(self.vertices)
        for a in self.arrows:
            if a.source not in vset or a.target not in vset:
                raise ValueError(f"arrow {a.name} references an undeclared vertex")
            if "*" in a.name or any(ch.isspace() for ch in a.name):
                raise ValueError(f"arrow name {a.name!r} may not contain '*' or spaces")
            if a.name[0].isdigit() or a.name[0] in "+-":
                raise ValueError(f"arrow name {a.name!r} may not start like a number")
        self._arrow = {a.name: a for a in self.arrows}
        norm_rels = []
        for rel in self.relations:
            terms = tuple((Fraction(coeff), tuple(path)) for coeff, path in rel)
            if not terms:
                raise ValueError("empty relation")
            ends = set()
            for coeff, path in terms:
                if not path:
                    raise ValueError("relation paths must have length >= 1")
                ends.add((self.path_source(path), self.path_target(path)))
            if len(ends) > 1:
                raise ValueError(f"relation mixes non-parallel paths: {sorted(ends)}")
            norm_rels.append(terms)
        self.relations = tuple(norm_rels)
        if self.length_bound < 1:
            raise ValueError("length bound must be >= 1")

    def arrow(self, name: str) -> Arrow:
        return self._arrow[name]

    def path_source(self, path: tuple[str, ...]) -> str:
        # composition order: the rightmost arrow is applied first
        for left, right in zip(path, path[1:]):
            if self._arrow[left].source != self._arrow[right].target:
                raise ValueError(f"path {'*'.join(path)} is not composable")
        return self._arrow[path[-1]].source

    def path_target(self, path: tuple[str, ...]) -> str:
        self.path_source(path)
        return self._arrow[path[0]].target


def path_name(path: tuple[str, ...], vertex: Optional[str] = None) -> str:
    if not path:
        return f"1_{vertex}"
    return "*".join(path)


@dataclass
class PresentResult:
    category: LinCat
    basis_paths: dict[tuple[str, str], list[tuple[str, ...]]]
    hom_dims: dict[tuple[str, str], int]


def _enumerate_paths(p: QuiverPresentation, maxlen: int
                     ) -> dict[tuple[str, str], list[tuple[str, ...]]]:
    out: dict[tuple[str, str], list[tuple[str, ...]]] = {
        (x, y): [] for x in p.vertices for y in p.vertices}
    cur = [((), x, x) for x in p.vertices]
    for t, x, y in cur:
        out[(x, y)].append(t)
    for _ in range(maxlen):
        nxt = []
        for t, x, y in cur:
            for a in p.arrows:
                if a.source == y:
                    nxt.append(((a.name,) + t, x, a.target))
        for t, x, y in nxt:
            out[(x, y)].append(t)
        cur = nxt
    return out


def present(p: QuiverPresentation, field: FieldSpec) -> PresentResult:
    """Compile a quiver with relations into a category.

    Hom spaces are spanned by paths of length <= N modulo the span of
    {u·r·v : r a relation, all terms of length <= 2N}.  Soundness of the
    cut at N requires every path of length in (N, 2N] to lie in that span;
    this is checked and TruncationError reports the first witness.  The
    surviving basis is greedy path-monomial: shortest paths first, then
    declaration order.
    """
    n = p.length_bound
    paths = _enumerate_paths(p, 2 * n)
    basis_paths: dict[tuple[str, str], list[tuple[str, ...]]] = {}
    projections: dict[tuple[str, str], Matrix] = {}
    index: dict[tuple[str, str], dict[tuple[str, ...], int]] = {}

    for pair, plist in paths.items():
        index[pair] = {t: i for i, t in enumerate(plist)}

    for pair, plist in paths.items():
        dim = len(plist)
        idx = index[pair]
        gens: list[list[Scalar]] = []
        for rel in p.relations:
            u = p.path_source(rel[0][1])
            v = p.path_target(rel[0][1])
            rel_max = max(len(path) for _, path in rel)
            for l_pair, l_list in paths.items():
                if l_pair[0] != v or l_pair[1] != pair[1]:
                    continue
                for left in l_list:
                    for m_pair, m_list in paths.items():
                        if m_pair[1] != u or m_pair[0] != pair[0]:
                            continue
                        for mid in m_list:
                            if len(left) + rel_max + len(mid) > 2 * n:
                                continue
                            vec = [field.zero()] * dim
                            for coeff, path in rel:
                                j = idx[left + path + mid]
                                vec[j] = vec[j] + field.scalar(coeff)
                            gens.append(vec)
        span = column_space_basis(field, gens, dim)
        span_matrix = Matrix.from_cols(field, span, nrows=dim)
        for t in plist:
            if n < len(t) <= 2 * n:
                unit = [field.zero()] * dim
                unit[idx[t]] = field.one()
                if solve(span_matrix, unit) is None:
                    raise TruncationError(t, n)
        reps, project = quotient_basis(field, dim, span, preferred=range(dim))
        rep_paths = []
        for r in reps:
            j = next(i for i, s in enumerate(r) if s.is_one())
            rep_paths.append(plist[j])
        basis_paths[pair] = rep_paths
        projections[pair] = project

    hom = {pair: tuple(path_name(t, pair[0]) for t in rep_list)
           for pair, rep_list in basis_paths.items()}
    identities = {}
    comp: dict[tuple[str, str], LinComb] = {}
    for x in p.vertices:
        pair = (x, x)
        vec = [field.zero()] * len(paths[pair])
        vec[index[pair][()]] = field.one()
        coords = projections[pair].apply(vec)
        identities[x] = {hom[pair][i]: s for i, s in enumerate(coords)
                         if not s.is_zero()}

    for (x, y), f_list in basis_paths.items():
        for (y2, z), g_list in basis_paths.items():
            if y2 != y:
                continue
            for ft in f_list:
                for gt in g_list:
                    whole = gt + ft
                    pair = (x, z)
                    vec = [field.zero()] * len(paths[pair])
                    vec[index[pair][whole]] = field.one()
                    coords = projections[pair].apply(vec)
                    comb = {hom[pair][i]: s for i, s in enumerate(coords)
                            if not s.is_zero()}
                    if comb:
                        comp[(path_name(gt, y), path_name(ft, x))] = comb

    cat = LinCat(field, p.vertices, hom, comp, identities)
    dims = {pair: len(v) for pair, v in basis_paths.items()}
    return PresentResult(cat, basis_paths, dims)


def functor_from_arrows(src: PresentResult, target: LinCat,
                        object_map: dict[str, str],
                        arrow_images: dict[str, dict]) -> LinFunctor:
    """Functor out of a presented category, determined by images of the
    arrows.  Images of basis paths are computed by composing the arrow
    images in the target; the empty path goes to the identity."""
    fld = target.field
    images: dict[str, LinComb] = {}
    for a, img in arrow_images.items():
        images[a] = {m: (fld.parse(v) if isinstance(v, str) else fld.scalar(v))
                     for m, v in img.items()}
    cat = src.category
    mats = {}
    for (x, y), rep_paths in src.basis_paths.items():
        fx, fy = object_map[x], object_map[y]
        cols = []
        for t in rep_paths:
            if not t:
                comb = target.identity(fx)
            else:
                comb = images[t[-1]]
                for a in reversed(t[:-1]):
                    comb = compose(target, images[a], comb)
            cols.append(target.vector(comb, fx, fy))
        mats[(x, y)] = Matrix.from_cols(fld, cols, nrows=target.dim(fx, fy))
    return LinFunctor(cat, target, dict(object_map), mats)
