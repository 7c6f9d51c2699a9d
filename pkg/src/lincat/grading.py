"""Group gradings of linear categories.

A grading assigns to every hom space a decomposition into degree
components indexed by a finite group.  Components are carried by a
change-of-basis matrix per hom pair (columns are the homogeneous
elements in declared coordinates) plus one degree label per column, so
the declared basis itself need not be homogeneous.  The module covers
validation, the grading induced by a Galois covering, relabeling under
a change of fibre objects, homogeneous walks and their degrees, the
connectivity of a grading, and the smash-product covering that inverts
the induced-grading construction.
"""
from collections import deque
from dataclasses import dataclass
from typing import Optional

from .exactlinalg import Matrix, inverse, rref
from .groups import Group, trivial_group
from .kcat import LinCat, LinComb, LinFunctor, compose, identity_functor
from .covering import fibre
from .galois import is_galois


@dataclass
class Grading:
    """degrees[(x,y)][j] labels column j of basis[(x,y)].  Keys are the
    hom pairs of positive dimension; every matrix must be square and
    invertible so the columns really form a basis."""
    group: Group
    category: LinCat
    basis: dict[tuple[str, str], Matrix]
    degrees: dict[tuple[str, str], tuple[str, ...]]

    def __post_init__(self):
        self.degrees = {k: tuple(v) for k, v in self.degrees.items()}

    def pairs(self) -> list[tuple[str, str]]:
        return sorted(self.basis)

    def homogeneous_comb(self, x: str, y: str, j: int) -> LinComb:
        col = self.basis[(x, y)].col(j)
        return self.category.comb_of_vector(list(col), x, y)

    def express(self, comb: LinComb, x: str, y: str) -> list:
        """Coordinates of a declared-basis combination in the homogeneous
        basis of hom(x,y)."""
        inv = inverse(self.basis[(x, y)])
        if inv is None:
            raise ValueError(f"change of basis for hom({x},{y}) is singular")
        return inv.apply(self.category.vector(comb, x, y))

    def component_columns(self, x: str, y: str, s: str) -> list[int]:
        return [j for j, d in enumerate(self.degrees[(x, y)]) if d == s]


def trivial_grading(c: LinCat, group: Optional[Group] = None) -> Grading:
    """Everything in the identity component."""
    grp = group if group is not None else trivial_group()
    basis = {}
    degrees = {}
    for pair, names in c.hom.items():
        if not names:
            continue
        basis[pair] = Matrix.identity(c.field, len(names))
        degrees[pair] = tuple(grp.identity for _ in names)
    return Grading(grp, c, basis, degrees)


def grading_on_basis(c: LinCat, group: Group,
                     degree_of: dict[str, str]) -> Grading:
    """Grading whose homogeneous basis is the declared one, with the
    given degree per basis name; identities default to degree e."""
    basis = {}
    degrees = {}
    for pair, names in c.hom.items():
        if not names:
            continue
        basis[pair] = Matrix.identity(c.field, len(names))
        degrees[pair] = tuple(degree_of.get(n, group.identity) for n in names)
    return Grading(group, c, basis, degrees)


def validate_grading(z: Grading) -> list[str]:
    """Empty iff z is a grading: invertible change of basis everywhere,
    degree labels in the group, identities of degree e, and composites of
    homogeneous elements homogeneous of the product degree."""
    problems: list[str] = []
    c = z.category
    grp = z.group
    want = {pair for pair, names in c.hom.items() if names}
    if set(z.basis) != want:
        problems.append(f"basis keys {sorted(set(z.basis) ^ want)} do not "
                        "match the nonzero hom pairs")
        return problems
    if set(z.degrees) != want:
        problems.append("degree keys do not match the nonzero hom pairs")
        return problems
    invs: dict[tuple[str, str], Matrix] = {}
    for pair in sorted(want):
        n = len(c.hom[pair])
        m = z.basis[pair]
        if (m.rows, m.cols) != (n, n):
            problems.append(f"hom{pair}: change of basis is {m.rows}x{m.cols},"
                            f" expected {n}x{n}")
            continue
        if len(z.degrees[pair]) != n:
            problems.append(f"hom{pair}: {len(z.degrees[pair])} degree labels"
                            f" for {n} columns")
            continue
        bad = [d for d in z.degrees[pair] if d not in grp.elements]
        if bad:
            problems.append(f"hom{pair}: unknown degree labels {bad}")
            continue
        inv = inverse(m)
        if inv is None:
            problems.append(f"hom{pair}: change of basis is singular")
            continue
        invs[pair] = inv
    if problems:
        return problems

    def support_degrees(coords, pair) -> set:
        return {z.degrees[pair][j] for j, a in enumerate(coords)
                if not a.is_zero()}

    for x in c.objects:
        pair = (x, x)
        if pair not in invs:
            continue
        coords = invs[pair].apply(c.vector(c.identity(x), x, x))
        degs = support_degrees(coords, pair)
        if degs - {grp.identity}:
            problems.append(f"identity of {x} meets degrees "
                            f"{sorted(degs - {grp.identity})}")
    for (x, y) in sorted(want):
        for (y2, w) in sorted(want):
            if y2 != y or (x, w) not in invs:
                continue
            for jf, s in enumerate(z.degrees[(x, y)]):
                f_comb = z.homogeneous_comb(x, y, jf)
                for jg, t in enumerate(z.degrees[(y, w)]):
                    g_comb = z.homogeneous_comb(y, w, jg)
                    prod = compose(c, g_comb, f_comb)
                    if not prod:
                        continue
                    coords = invs[(x, w)].apply(c.vector(prod, x, w))
                    degs = support_degrees(coords, (x, w))
                    ts = grp.mul(t, s)
                    if degs - {ts}:
                        problems.append(
                            f"hom({x},{y}) column {jf} (degree {s}) composed "
                            f"with hom({y},{w}) column {jg} (degree {t}) "
                            f"meets degrees {sorted(degs)}, expected {ts}")
    return problems


def induced_grading(f: LinFunctor, fibre_choice: dict[str, str]) -> Grading:
    """Grading of the base of a Galois covering by its deck group: the
    degree-s component of hom(b,c) is the image of hom(x_b, s·x_c) for
    the chosen fibre objects x."""
    res = is_galois(f)
    if not res.galois:
        raise ValueError(f"not a Galois covering: {res.reason}")
    grp = res.group
    base = f.target
    for b in base.objects:
        if fibre_choice.get(b) not in fibre(f, b):
            raise ValueError(f"fibre choice {fibre_choice.get(b)!r} for {b} "
                             "is not in the fibre")
    basis = {}
    degrees = {}
    for (b, c), names in base.hom.items():
        if not names:
            continue
        xb = fibre_choice[b]
        block = None
        labels: list[str] = []
        for s in grp.group.elements:
            sxc = grp.functor(s).object_map[fibre_choice[c]]
            m = f.matrices[(xb, sxc)]
            block = m if block is None else block.hstack(m)
            labels.extend([s] * m.cols)
        if block.cols != len(names) or inverse(block) is None:
            raise ValueError(f"fibre images do not span hom({b},{c})")
        basis[(b, c)] = block
        degrees[(b, c)] = tuple(labels)
    return Grading(grp.group, base, basis, degrees)


def regrade(z: Grading, t: dict[str, str]) -> Grading:
    """Same homogeneous basis; the label s of a (b -> c)-element becomes
    t_c·s·t_b⁻¹."""
    grp = z.group
    for x in z.category.objects:
        if t.get(x) not in grp.elements:
            raise ValueError(f"no group element assigned to object {x}")
    degrees = {}
    for (b, c), labels in z.degrees.items():
        tb_inv = grp.inv(t[b])
        degrees[(b, c)] = tuple(grp.mul(t[c], grp.mul(s, tb_inv))
                                for s in labels)
    return Grading(grp, z.category, dict(z.basis), degrees)


# -- homogeneous walks ---------------------------------------------------


@dataclass(frozen=True)
class HWalkStep:
    """One homogeneous basis element, traversed forward (+1) or backward
    (-1).  src and tgt are the element's own endpoints regardless of
    direction."""
    src: str
    tgt: str
    index: int
    sign: int

    @property
    def start(self) -> str:
        return self.src if self.sign == 1 else self.tgt

    @property
    def end(self) -> str:
        return self.tgt if self.sign == 1 else self.src


@dataclass(frozen=True)
class HomogeneousWalk:
    start: str
    steps: tuple[HWalkStep, ...] = ()

    @property
    def end(self) -> str:
        return self.steps[-1].end if self.steps else self.start

    def concat(self, other: "HomogeneousWalk") -> "HomogeneousWalk":
        """self followed by other."""
        if other.start != self.end:
            raise ValueError("walks do not chain")
        return HomogeneousWalk(self.start, self.steps + other.steps)


def make_hstep(z: Grading, x: str, y: str, index: int, sign: int) -> HWalkStep:
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if (x, y) not in z.degrees or not 0 <= index < len(z.degrees[(x, y)]):
        raise ValueError(f"hom({x},{y}) has no homogeneous element {index}")
    return HWalkStep(x, y, index, sign)


def validate_hwalk(z: Grading, w: HomogeneousWalk) -> list[str]:
    problems = []
    if w.start not in z.category.objects:
        return [f"unknown start object {w.start!r}"]
    at = w.start
    for i, st in enumerate(w.steps):
        if (st.src, st.tgt) not in z.degrees or \
                not 0 <= st.index < len(z.degrees[(st.src, st.tgt)]):
            problems.append(f"step {i}: no homogeneous element "
                            f"{st.index} in hom({st.src},{st.tgt})")
            break
        if st.sign not in (1, -1):
            problems.append(f"step {i}: bad sign {st.sign}")
            break
        if st.start != at:
            problems.append(f"step {i}: starts at {st.start}, walk is at {at}")
            break
        at = st.end
    return problems


def walk_degree(z: Grading, w: HomogeneousWalk) -> str:
    """Ordered product of signed step degrees, rightmost factor from the
    first step."""
    problems = validate_hwalk(z, w)
    if problems:
        raise ValueError(problems[0])
    grp = z.group
    d = grp.identity
    for st in w.steps:
        s = z.degrees[(st.src, st.tgt)][st.index]
        if st.sign == -1:
            s = grp.inv(s)
        d = grp.mul(s, d)
    return d


@dataclass
class GradingConnectivity:
    connected: bool
    missing: tuple[tuple[str, str], ...]
    walks: dict[tuple[str, str], HomogeneousWalk]


def is_connected_grading(z: Grading) -> GradingConnectivity:
    """Breadth-first search on states (object, group element) with a
    transition per homogeneous basis element and direction; connected
    iff every (c, s) is reachable from (b, e).  The transition relation
    is symmetric, so one search from the first object decides the
    condition for every start object."""
    problems = validate_grading(z)
    if problems:
        raise ValueError(problems[0])
    c = z.category
    grp = z.group
    states = [(o, g) for o in c.objects for g in grp.elements]
    if not states:
        return GradingConnectivity(True, (), {})
    start = (c.objects[0], grp.identity)
    walks = {start: HomogeneousWalk(c.objects[0])}
    queue = deque([start])
    while queue:
        o, g = queue.popleft()
        here = walks[(o, g)]
        moves = []
        for (x, y), labels in z.degrees.items():
            for j, d in enumerate(labels):
                if x == o:
                    moves.append(((y, grp.mul(d, g)), HWalkStep(x, y, j, 1)))
                if y == o:
                    moves.append(((x, grp.mul(grp.inv(d), g)),
                                  HWalkStep(x, y, j, -1)))
        for nxt, step in moves:
            if nxt not in walks:
                walks[nxt] = HomogeneousWalk(here.start, here.steps + (step,))
                queue.append(nxt)
    missing = tuple(s for s in states if s not in walks)
    return GradingConnectivity(not missing, missing, walks)


# -- the smash covering --------------------------------------------------


@dataclass
class SmashResult:
    category: LinCat
    projection: LinFunctor
    object_pairs: dict[str, tuple[str, str]]


def _unit_row(col) -> Optional[int]:
    hits = [i for i, a in enumerate(col) if not a.is_zero()]
    if len(hits) == 1 and col[hits[0]].is_one():
        return hits[0]
    return None


def smash(b: LinCat, z: Grading) -> SmashResult:
    """Covering with one object copy per group element whose hom from
    (x,g) to (y,h) is the degree-(h·g⁻¹) component of hom(x,y).  With a
    trivial group this is b itself under the identity projection."""
    problems = validate_grading(z)
    if problems:
        raise ValueError(problems[0])
    if z.category is not b and z.category != b:
        raise ValueError("grading does not belong to the category")
    grp = z.group
    if grp.order() == 1:
        return SmashResult(b, identity_functor(b),
                           {o: (o, grp.identity) for o in b.objects})

    def oname(x: str, g: str) -> str:
        return f"{x}@{g}"

    objects = [oname(x, g) for x in b.objects for g in grp.elements]
    object_pairs = {oname(x, g): (x, g) for x in b.objects
                    for g in grp.elements}
    # name each homogeneous column once per source copy; unit columns
    # keep the declared name as their stem
    stems: dict[tuple[str, str], list[str]] = {}
    for (x, y), names in b.hom.items():
        if not names:
            continue
        row = []
        for j in range(len(names)):
            u = _unit_row(z.basis[(x, y)].col(j))
            row.append(names[u] if u is not None else f"{x}>{y}#{j}")
        stems[(x, y)] = row

    hom: dict[tuple[str, str], tuple[str, ...]] = {}
    meta: dict[str, tuple[str, str, int]] = {}  # name -> (x, y, column)
    copy_of: dict[str, str] = {}                # name -> source copy g
    for (x, y), row in stems.items():
        for g in grp.elements:
            for j, d in enumerate(z.degrees[(x, y)]):
                h = grp.mul(d, g)
                key = (oname(x, g), oname(y, h))
                nm = f"{row[j]}@{g}"
                hom.setdefault(key, ())
                hom[key] = hom[key] + (nm,)
                meta[nm] = (x, y, j)
                copy_of[nm] = g

    invs = {pair: inverse(m) for pair, m in z.basis.items()}

    def lift(x: str, w: str, comb: LinComb, g: str, expect: str) -> LinComb:
        """Express a base comb in hom(x,w) through the homogeneous basis
        and rename into the copy starting at g; support outside the
        expected degree would contradict a validated grading."""
        if not comb:
            return {}
        coords = invs[(x, w)].apply(b.vector(comb, x, w))
        out = {}
        for j, a in enumerate(coords):
            if a.is_zero():
                continue
            if z.degrees[(x, w)][j] != expect:
                raise RuntimeError("composite escaped its degree component")
            out[f"{stems[(x, w)][j]}@{g}"] = a
        return out

    comp: dict[tuple[str, str], LinComb] = {}
    for fn, (x, y, jf) in meta.items():
        g = copy_of[fn]
        s = z.degrees[(x, y)][jf]
        h = grp.mul(s, g)
        for gn, (y2, w, jg) in meta.items():
            if y2 != y or copy_of[gn] != h:
                continue
            t = z.degrees[(y, w)][jg]
            prod = compose(b, z.homogeneous_comb(y, w, jg),
                           z.homogeneous_comb(x, y, jf))
            if not prod:
                continue
            comp[(gn, fn)] = lift(x, w, prod, g, grp.mul(t, s))

    identities = {}
    for x in b.objects:
        for g in grp.elements:
            identities[oname(x, g)] = lift(x, x, b.identity(x), g,
                                           grp.identity)

    cat = LinCat(b.field, tuple(objects), hom, comp, identities)
    mats = {}
    for (xg, yh), names in cat.hom.items():
        if not names:
            continue
        x, y, _ = meta[names[0]]
        cols = [list(z.basis[(x, y)].col(meta[n][2])) for n in names]
        mats[(xg, yh)] = Matrix.from_cols(b.field, cols, nrows=b.dim(x, y))
    proj = LinFunctor(cat, b, {o: p[0] for o, p in object_pairs.items()},
                      mats)
    return SmashResult(cat, proj, object_pairs)


# -- comparing gradings --------------------------------------------------


def component_span(z: Grading, x: str, y: str, s: str) -> tuple:
    """Canonical row-reduced basis of the degree-s component of
    hom(x,y), as a tuple of coordinate rows."""
    cols = [list(z.basis[(x, y)].col(j))
            for j in z.component_columns(x, y, s)]
    if not cols:
        return ()
    r, _, rank = rref(Matrix.from_rows(z.category.field, cols))
    return tuple(r.row(i) for i in range(rank))


def same_components(z1: Grading, z2: Grading,
                    relabel: Optional[dict[str, str]] = None) -> bool:
    """Degreewise equality of the component subspaces, after renaming
    z1's group elements through `relabel` (default: identical names)."""
    if z1.category != z2.category:
        return False
    rl = relabel if relabel is not None else \
        {s: s for s in z1.group.elements}
    if sorted(rl) != sorted(z1.group.elements) or \
            sorted(rl.values()) != sorted(z2.group.elements):
        return False
    if set(z1.basis) != set(z2.basis):
        return False
    for pair in z1.basis:
        for s in z1.group.elements:
            if component_span(z1, *pair, s) != \
                    component_span(z2, *pair, rl[s]):
                return False
    return True
