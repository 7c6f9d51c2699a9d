"""Finite groups given by explicit multiplication tables.

Covering automorphism groups, quotient actions, grading groups, and
character domains all share this representation.  Isomorphism testing is
exhaustive backtracking over generator images, which is fine at the
intended scale (orders well under a hundred).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence


@dataclass
class Group:
    elements: tuple[str, ...]
    identity: str
    table: dict[tuple[str, str], str]  # (s, t) -> s * t

    def __post_init__(self):
        self._index = {e: i for i, e in enumerate(self.elements)}
        problems = self.check()
        if problems:
            raise ValueError("not a group table: " + "; ".join(problems))

    def check(self) -> list[str]:
        problems = []
        if len(set(self.elements)) != len(self.elements):
            problems.append("duplicate element names")
        if self.identity not in self._index:
            problems.append("identity not among elements")
            return problems
        for s in self.elements:
            for t in self.elements:
                if self.table.get((s, t)) not in self._index:
                    problems.append(f"missing or foreign product {s}*{t}")
                    return problems
        for s in self.elements:
            if self.table[(self.identity, s)] != s or self.table[(s, self.identity)] != s:
                problems.append(f"{self.identity} is not a two-sided identity on {s}")
        for s in self.elements:
            row = {self.table[(s, t)] for t in self.elements}
            col = {self.table[(t, s)] for t in self.elements}
            if len(row) != len(self.elements) or len(col) != len(self.elements):
                problems.append(f"{s} is not invertible")
        for a in self.elements:
            for b in self.elements:
                for c in self.elements:
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                        problems.append(f"associativity fails on ({a},{b},{c})")
                        return problems
        return problems

    def mul(self, s: str, t: str) -> str:
        return self.table[(s, t)]

    def inv(self, s: str) -> str:
        for t in self.elements:
            if self.mul(s, t) == self.identity:
                return t
        raise ValueError(f"no inverse for {s}")

    def order(self) -> int:
        return len(self.elements)

    def element_order(self, s: str) -> int:
        n, cur = 1, s
        while cur != self.identity:
            cur = self.mul(cur, s)
            n += 1
        return n

    def is_abelian(self) -> bool:
        return all(self.mul(s, t) == self.mul(t, s)
                   for s in self.elements for t in self.elements)

    def generated_subgroup(self, gens: Sequence[str]) -> set[str]:
        closure = {self.identity, *gens}
        frontier = list(closure)
        while frontier:
            s = frontier.pop()
            for t in list(closure):
                for prod in (self.mul(s, t), self.mul(t, s)):
                    if prod not in closure:
                        closure.add(prod)
                        frontier.append(prod)
        return closure

    def generators(self) -> list[str]:
        """Greedy small generating set in element order."""
        gens: list[str] = []
        span = {self.identity}
        for s in self.elements:
            if s not in span:
                gens.append(s)
                span = self.generated_subgroup(gens)
        return gens

    def is_subgroup(self, subset: Sequence[str]) -> bool:
        sset = set(subset)
        if self.identity not in sset:
            return False
        return all(self.mul(a, b) in sset for a in sset for b in sset)

    def is_normal(self, subset: Sequence[str]) -> bool:
        sset = set(subset)
        return all(self.mul(self.mul(g, h), self.inv(g)) in sset
                   for g in self.elements for h in sset)

    def label(self) -> str:
        """Cosmetic isomorphism-type guess from order statistics.  The
        table is the authoritative description."""
        n = self.order()
        if n == 1:
            return "trivial"
        orders = sorted(self.element_order(s) for s in self.elements)
        if n in orders:
            return f"C{n}"
        if self.is_abelian():
            return f"abelian of order {n}, exponent {max(orders)}"
        if n % 2 == 0:
            half = n // 2
            involutions = sum(1 for o in orders if o == 2)
            if involutions == half + (1 if half % 2 == 0 else 0) and half in orders:
                return f"D{half}"
        return f"nonabelian of order {n}"


def cyclic_group(n: int, prefix: str = "g") -> Group:
    """C_n with elements e, g, g2, ..., g{n-1}."""
    if n < 1:
        raise ValueError("order must be positive")
    names = ["e"] + [prefix if i == 1 else f"{prefix}{i}" for i in range(1, n)]
    table = {(names[i], names[j]): names[(i + j) % n]
             for i in range(n) for j in range(n)}
    return Group(tuple(names), "e", table)


def trivial_group() -> Group:
    return cyclic_group(1)


def _extend_iso(g1: Group, g2: Group, gens: list[str],
                images: list[str]) -> Optional[dict[str, str]]:
    """Grow the partial map gens -> images to a full homomorphism by
    closing under products; None on any clash."""
    mapping = {g1.identity: g2.identity}
    for a, b in zip(gens, images):
        mapping[a] = b
    changed = True
    while changed:
        changed = False
        for a in list(mapping):
            for b in list(mapping):
                prod = g1.mul(a, b)
                img = g2.mul(mapping[a], mapping[b])
                if prod in mapping:
                    if mapping[prod] != img:
                        return None
                else:
                    mapping[prod] = img
                    changed = True
    if len(mapping) != g1.order() or len(set(mapping.values())) != g1.order():
        return None
    return mapping


def find_isomorphism(g1: Group, g2: Group) -> Optional[dict[str, str]]:
    """Explicit isomorphism g1 -> g2, or None.  Backtracks over images of
    a greedy generating set, pruned by element orders."""
    if g1.order() != g2.order():
        return None
    orders2: dict[int, list[str]] = {}
    for s in g2.elements:
        orders2.setdefault(g2.element_order(s), []).append(s)
    gens = g1.generators()

    def backtrack(i: int, images: list[str]) -> Optional[dict[str, str]]:
        if i == len(gens):
            return _extend_iso(g1, g2, gens, images)
        for cand in orders2.get(g1.element_order(gens[i]), []):
            result = backtrack(i + 1, images + [cand])
            if result is not None:
                return result
        return None

    if not gens:
        return {g1.identity: g2.identity}
    return backtrack(0, [])


def is_isomorphic(g1: Group, g2: Group) -> bool:
    return find_isomorphism(g1, g2) is not None
