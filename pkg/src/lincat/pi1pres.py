"""Fundamental group of a quiver presentation.

Generators are the arrows; a spanning tree from the base point is
killed, and every relation with at least two summand paths identifies
those paths pairwise.  Words are tuples of signed 1-based generator
indices read left to right.  Identification of the resulting finitely
presented group goes through the integer abelianization and a bounded
coset enumeration; neither claims infiniteness, only "exceeded".
"""
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .exactlinalg import FieldSpec, Matrix, rank, smith_normal_form
from .kcat import QuiverPresentation

_Q = FieldSpec(0)

Word = tuple[int, ...]


@dataclass(frozen=True)
class FPGroup:
    generators: tuple[str, ...]
    relators: tuple[Word, ...]

    def __post_init__(self):
        n = len(self.generators)
        for w in self.relators:
            for x in w:
                if x == 0 or abs(x) > n:
                    raise ValueError(f"relator letter {x} out of range")

    def word_str(self, w: Word) -> str:
        if not w:
            return "1"
        return " ".join(self.generators[abs(x) - 1] +
                        ("" if x > 0 else "^-1") for x in w)


def inverse_word(w: Word) -> Word:
    return tuple(-x for x in reversed(w))


def free_reduce(w: Word) -> Word:
    out: list[int] = []
    for x in w:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


@dataclass
class Pi1Result:
    group: FPGroup
    base: str
    tree: tuple[str, ...]
    warnings: tuple[str, ...]


def pi1_presentation(p: QuiverPresentation, b0: str) -> Pi1Result:
    """Free group on the arrows modulo the spanning-tree arrows and, for
    each relation w₁ + ... + w_m with m ≥ 2, the words w₁wⱼ⁻¹.  Monomial
    relations contribute nothing.  The tree is grown breadth-first from
    b0 in arrow declaration order."""
    if b0 not in p.vertices:
        raise ValueError(f"unknown base vertex {b0!r}")
    index = {a.name: i + 1 for i, a in enumerate(p.arrows)}
    neighbours: dict[str, list[tuple[str, str]]] = {v: [] for v in p.vertices}
    for a in p.arrows:
        neighbours[a.source].append((a.target, a.name))
        neighbours[a.target].append((a.source, a.name))
    seen = {b0}
    tree: list[str] = []
    queue = deque([b0])
    while queue:
        v = queue.popleft()
        for w, name in neighbours[v]:
            if w not in seen:
                seen.add(w)
                tree.append(name)
                queue.append(w)
    if seen != set(p.vertices):
        raise ValueError("underlying graph is not connected")

    def word_of_path(path: tuple[str, ...]) -> Word:
        # paths compose right to left, so the walk traverses them reversed
        return tuple(index[a] for a in reversed(path))

    relators: list[Word] = [(index[a],) for a in tree]
    for rel in p.relations:
        terms = list(rel)
        if len(terms) < 2:
            continue
        first = word_of_path(terms[0][1])
        for _, path in terms[1:]:
            relators.append(free_reduce(first + inverse_word(
                word_of_path(path))))

    warnings: list[str] = []
    if p.relations:
        paths = sorted({path for rel in p.relations for _, path in rel})
        col = {path: j for j, path in enumerate(paths)}
        rows = []
        for rel in p.relations:
            row = [_Q.scalar(Fraction(0))] * len(paths)
            for coeff, path in rel:
                row[col[path]] += _Q.scalar(coeff)
            rows.append(row)
        if rank(Matrix.from_rows(_Q, rows)) < len(p.relations):
            warnings.append("supplied relations are k-linearly dependent")

    grp = FPGroup(tuple(a.name for a in p.arrows), tuple(relators))
    return Pi1Result(grp, b0, tuple(tree), tuple(warnings))


def abelianization(g: FPGroup) -> list[int]:
    """Invariant factors of the relator exponent matrix, with trivial
    factors dropped; [1] marks the trivial group, zeros record free
    rank."""
    n = len(g.generators)
    rows = []
    for w in g.relators:
        row = [0] * n
        for x in w:
            row[abs(x) - 1] += 1 if x > 0 else -1
        rows.append(row)
    factors = smith_normal_form(rows, cols=n)
    out = [d for d in factors if d != 1]
    return out if out else [1]


class _Exceeded(Exception):
    pass


def bounded_order(g: FPGroup, max_cosets: int) -> Union[int, str]:
    """Coset enumeration over the trivial subgroup, HLT style: scan and
    fill every relator at every live coset, then complete the row.
    Returns the group order if the table closes within max_cosets live
    rows, else "exceeded"."""
    if max_cosets < 1:
        raise ValueError("max_cosets must be at least 1")
    relators = [w for w in (free_reduce(r) for r in g.relators) if w]
    n = len(g.generators)
    letters = list(range(1, n + 1)) + [-i for i in range(1, n + 1)]
    parent = [0, 1]
    table: list[dict[int, int]] = [{}, {}]

    def rep(c: int) -> int:
        root = c
        while parent[root] != root:
            root = parent[root]
        while parent[c] != root:
            parent[c], c = root, parent[c]
        return root

    def define(c: int, x: int) -> int:
        if len(table) - 1 >= max_cosets:
            raise _Exceeded
        d = len(table)
        parent.append(d)
        table.append({})
        table[c][x] = d
        table[d][-x] = c
        return d

    def coincidence(a: int, b: int) -> None:
        queue: deque[int] = deque()

        def merge(u: int, v: int) -> None:
            u, v = rep(u), rep(v)
            if u == v:
                return
            if u > v:
                u, v = v, u
            parent[v] = u
            queue.append(v)

        merge(a, b)
        while queue:
            dead = queue.popleft()
            entries = table[dead]
            table[dead] = {}
            for x, d in entries.items():
                u, v = rep(dead), rep(d)
                if x in table[u]:
                    merge(table[u][x], v)
                else:
                    table[u][x] = v
                u, v = rep(d), rep(dead)
                if -x in table[u]:
                    merge(table[u][-x], v)
                else:
                    table[u][-x] = v

    def scan_and_fill(start: int, w: Word) -> None:
        f = b = rep(start)
        i, j = 0, len(w) - 1
        while True:
            while i <= j and w[i] in table[f]:
                f = rep(table[f][w[i]])
                i += 1
            if i > j:
                if f != b:
                    coincidence(f, b)
                return
            while j >= i and -w[j] in table[b]:
                b = rep(table[b][-w[j]])
                j -= 1
            if j < i:
                coincidence(f, b)
                return
            if j == i:
                table[f][w[i]] = b
                table[b][-w[i]] = f
                return
            define(f, w[i])

    try:
        idx = 1
        while idx < len(table):
            if rep(idx) != idx:
                idx += 1
                continue
            for w in relators:
                scan_and_fill(idx, w)
                if rep(idx) != idx:
                    break
            if rep(idx) == idx:
                for x in letters:
                    if x not in table[idx]:
                        define(idx, x)
            idx += 1
    except _Exceeded:
        return "exceeded"
    return sum(1 for c in range(1, len(table)) if rep(c) == c)
