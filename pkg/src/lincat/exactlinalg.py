"""Exact linear algebra over Q and F_p.

Everything downstream (star isomorphism tests, quotient bases, Leibniz
kernels) reduces to solving linear systems here.  All arithmetic is exact:
rationals via :class:`fractions.Fraction`, prime fields via residues.
No floating point anywhere.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Ground field: Q (characteristic 0) or F_p (characteristic p prime)."""

    characteristic: int = 0

    def __post_init__(self):
        if self.characteristic != 0 and not _is_prime(self.characteristic):
            raise ValueError(
                f"characteristic must be 0 or a prime, got {self.characteristic}")

    def zero(self) -> "Scalar":
        return Scalar(self, Fraction(0) if self.characteristic == 0 else 0)

    def one(self) -> "Scalar":
        return Scalar(self, Fraction(1) if self.characteristic == 0 else 1)

    def scalar(self, value) -> "Scalar":
        """Coerce an int, Fraction, or decimal string into this field."""
        p = self.characteristic
        if isinstance(value, Scalar):
            if value.field != self:
                raise ValueError(f"scalar of {value.field} used in {self}")
            return value
        fr = Fraction(value)
        if p == 0:
            return Scalar(self, fr)
        if fr.denominator % p == 0:
            raise ZeroDivisionError(f"denominator of {fr} not invertible mod {p}")
        return Scalar(self, fr.numerator * pow(fr.denominator, -1, p) % p)

    def parse(self, text: str) -> "Scalar":
        """Parse the string form: "3/4" or "-1" over Q, "2 mod 5" over F_5."""
        text = text.strip()
        if self.characteristic == 0:
            if "mod" in text:
                raise ValueError(f"modular scalar {text!r} in a characteristic-0 field")
            return Scalar(self, Fraction(text))
        parts = text.split("mod")
        if len(parts) == 2:
            p = int(parts[1])
            if p != self.characteristic:
                raise ValueError(
                    f"scalar {text!r} has modulus {p}, field has {self.characteristic}")
            return self.scalar(int(parts[0]))
        return self.scalar(Fraction(text))

    def __str__(self):
        return "Q" if self.characteristic == 0 else f"F_{self.characteristic}"


@dataclass(frozen=True)
class Scalar:
    """Exact field element.  Rationals kept in lowest terms (Fraction does
    this), residues kept in [0, p)."""

    field: FieldSpec
    value: object  # Fraction (char 0) or int (char p)

    def _check(self, other: "Scalar"):
        if self.field != other.field:
            raise ValueError(f"mixed fields: {self.field} and {other.field}")

    def __add__(self, other):
        self._check(other)
        p = self.field.characteristic
        v = self.value + other.value
        return Scalar(self.field, v if p == 0 else v % p)

    def __sub__(self, other):
        self._check(other)
        p = self.field.characteristic
        v = self.value - other.value
        return Scalar(self.field, v if p == 0 else v % p)

    def __mul__(self, other):
        self._check(other)
        p = self.field.characteristic
        v = self.value * other.value
        return Scalar(self.field, v if p == 0 else v % p)

    def __truediv__(self, other):
        return self * other.inverse()

    def __neg__(self):
        p = self.field.characteristic
        return Scalar(self.field, -self.value if p == 0 else (-self.value) % p)

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        p = self.field.characteristic
        if p == 0:
            return Scalar(self.field, 1 / self.value)
        return Scalar(self.field, pow(self.value, -1, p))

    def is_zero(self) -> bool:
        return self.value == 0

    def is_one(self) -> bool:
        return self.value == 1

    def __bool__(self):
        return not self.is_zero()

    def __str__(self):
        if self.field.characteristic == 0:
            return str(self.value)
        return f"{self.value} mod {self.field.characteristic}"


@dataclass(frozen=True)
class Matrix:
    """Dense row-major matrix over one field.  Immutable."""

    field: FieldSpec
    rows: int
    cols: int
    entries: tuple  # length rows * cols, row-major Scalars

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entries length does not match rows * cols")
        for e in self.entries:
            if e.field != self.field:
                raise ValueError("mixed-field matrix entries")

    @staticmethod
    def from_rows(field: FieldSpec, rows: Sequence[Sequence]) -> "Matrix":
        r = len(rows)
        c = len(rows[0]) if r else 0
        ent = []
        for row in rows:
            if len(row) != c:
                raise ValueError("ragged rows")
            ent.extend(field.scalar(v) for v in row)
        return Matrix(field, r, c, tuple(ent))

    @staticmethod
    def from_cols(field: FieldSpec, cols: Sequence[Sequence], nrows: Optional[int] = None) -> "Matrix":
        c = len(cols)
        r = len(cols[0]) if c else (nrows or 0)
        ent = [field.zero()] * (r * c)
        for j, col in enumerate(cols):
            if len(col) != r:
                raise ValueError("ragged columns")
            for i, v in enumerate(col):
                ent[i * c + j] = field.scalar(v)
        return Matrix(field, r, c, tuple(ent))

    @staticmethod
    def identity(field: FieldSpec, n: int) -> "Matrix":
        ent = [field.zero()] * (n * n)
        for i in range(n):
            ent[i * n + i] = field.one()
        return Matrix(field, n, n, tuple(ent))

    @staticmethod
    def zeros(field: FieldSpec, rows: int, cols: int) -> "Matrix":
        return Matrix(field, rows, cols, tuple([field.zero()] * (rows * cols)))

    def entry(self, i: int, j: int) -> Scalar:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> tuple:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def row_lists(self) -> list:
        return [list(self.row(i)) for i in range(self.rows)]

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Matrix(self.field, self.rows, self.cols,
                      tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "Matrix":
        return Matrix(self.field, self.rows, self.cols,
                      tuple(-a for a in self.entries))

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        zero = self.field.zero()
        ent = []
        for i in range(self.rows):
            for j in range(other.cols):
                acc = zero
                for k in range(self.cols):
                    a = self.entries[i * self.cols + k]
                    if a:
                        acc = acc + a * other.entries[k * other.cols + j]
                ent.append(acc)
        return Matrix(self.field, self.rows, other.cols, tuple(ent))

    def scale(self, s: Scalar) -> "Matrix":
        return Matrix(self.field, self.rows, self.cols,
                      tuple(s * a for a in self.entries))

    def transpose(self) -> "Matrix":
        ent = tuple(self.entry(i, j) for j in range(self.cols) for i in range(self.rows))
        return Matrix(self.field, self.cols, self.rows, ent)

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise ValueError("row mismatch")
        ent = []
        for i in range(self.rows):
            ent.extend(self.row(i))
            ent.extend(other.row(i))
        return Matrix(self.field, self.rows, self.cols + other.cols, tuple(ent))

    def apply(self, vec: Sequence[Scalar]) -> list:
        """Matrix times column vector."""
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        out = []
        for i in range(self.rows):
            acc = self.field.zero()
            for j, v in enumerate(vec):
                if v:
                    acc = acc + self.entry(i, j) * v
            out.append(acc)
        return out


def rref(m: Matrix) -> tuple[Matrix, list[int], int]:
    """Reduced row echelon form.

    Deterministic pivoting: leftmost unfinished column, first row with a
    nonzero entry.  Returns (rref matrix, pivot column indices, rank).
    """
    rows = m.row_lists()
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        pivot_row = None
        for i in range(r, m.rows):
            if not rows[i][c].is_zero():
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [inv * v for v in rows[r]]
        for i in range(m.rows):
            if i != r and not rows[i][c].is_zero():
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == m.rows:
            break
    flat = tuple(v for row in rows for v in row)
    return Matrix(m.field, m.rows, m.cols, flat), pivots, len(pivots)


def rank(m: Matrix) -> int:
    return rref(m)[2]


def kernel_basis(m: Matrix) -> list[list[Scalar]]:
    """Basis of the null space, one column vector per free column of rref."""
    red, pivots, _ = rref(m)
    pivot_set = set(pivots)
    free = [j for j in range(m.cols) if j not in pivot_set]
    basis = []
    one = m.field.one()
    zero = m.field.zero()
    for f in free:
        vec = [zero] * m.cols
        vec[f] = one
        for r_i, p in enumerate(pivots):
            vec[p] = -red.entry(r_i, f)
        basis.append(vec)
    return basis


def solve(m: Matrix, rhs: Sequence[Scalar]) -> Optional[list[Scalar]]:
    """One solution of m x = rhs, or None if inconsistent."""
    if len(rhs) != m.rows:
        raise ValueError("rhs length mismatch")
    aug = m.hstack(Matrix.from_cols(m.field, [list(rhs)], nrows=m.rows))
    red, pivots, rk = rref(aug)
    if m.cols in pivots:
        return None
    x = [m.field.zero()] * m.cols
    for r_i, p in enumerate(pivots):
        x[p] = red.entry(r_i, m.cols)
    return x


def inverse(m: Matrix) -> Optional[Matrix]:
    """Inverse of a square matrix, or None if singular."""
    if m.rows != m.cols:
        return None
    aug = m.hstack(Matrix.identity(m.field, m.rows))
    red, pivots, rk = rref(aug)
    if rk != m.rows or any(p >= m.rows for p in pivots):
        return None
    ent = tuple(red.entry(i, m.rows + j) for i in range(m.rows) for j in range(m.rows))
    return Matrix(m.field, m.rows, m.rows, ent)


def column_space_basis(field: FieldSpec, vectors: Iterable[Sequence[Scalar]],
                       dim: int) -> list[list[Scalar]]:
    """Greedy independent subset of `vectors` (ambient dimension `dim`),
    keeping the earliest vectors that raise the rank."""
    kept: list[list[Scalar]] = []
    for v in vectors:
        if len(v) != dim:
            raise ValueError("vector dimension mismatch")
        cand = Matrix.from_cols(field, kept + [list(v)], nrows=dim)
        if rank(cand) == len(kept) + 1:
            kept.append(list(v))
    return kept


def quotient_basis(field: FieldSpec, ambient_dim: int,
                   subspace: Sequence[Sequence[Scalar]],
                   preferred: Optional[Sequence[int]] = None
                   ) -> tuple[list[list[Scalar]], Matrix]:
    """Complement representatives and projection for ambient / span(subspace).

    Representatives are standard basis vectors, chosen greedily in
    `preferred` order (default 0, 1, ...).  The returned projection maps an
    ambient column to its coordinates over the representatives and kills
    the subspace: project @ [representatives] = identity, project @ s = 0
    for s in the subspace.
    """
    one, zero = field.one(), field.zero()
    indep = column_space_basis(field, subspace, ambient_dim)
    order = list(preferred) if preferred is not None else list(range(ambient_dim))
    chosen: list[int] = []
    cols = [list(v) for v in indep]
    current_rank = len(indep)
    for j in order:
        if current_rank == ambient_dim:
            break
        unit = [zero] * ambient_dim
        unit[j] = one
        cand = Matrix.from_cols(field, cols + [unit], nrows=ambient_dim)
        if rank(cand) == current_rank + 1:
            cols.append(unit)
            chosen.append(j)
            current_rank += 1
    if current_rank != ambient_dim:
        raise ValueError("preferred order does not complete a basis")
    # coordinates over (subspace part | representatives): invert and keep
    # the representative rows
    a = Matrix.from_cols(field, cols, nrows=ambient_dim)
    a_inv = inverse(a)
    assert a_inv is not None
    k = len(chosen)
    start = len(indep)
    ent = tuple(a_inv.entry(start + i, j)
                for i in range(k) for j in range(ambient_dim))
    project = Matrix(field, k, ambient_dim, ent)
    reps = []
    for j in chosen:
        unit = [zero] * ambient_dim
        unit[j] = one
        reps.append(unit)
    return reps, project


def smith_normal_form(rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> list[int]:
    """Invariant factors of an integer matrix, padded with zeros to the
    column count (zeros record free rank when rows are relators over the
    columns' generators).

    `cols` is only needed when `rows` is empty.
    """
    m = [list(map(int, r)) for r in rows]
    nr = len(m)
    nc = len(m[0]) if nr else (0 if cols is None else cols)
    if cols is not None and nr and cols != nc:
        raise ValueError("cols disagrees with row length")
    for r in m:
        if len(r) != nc:
            raise ValueError("ragged rows")

    def min_entry(t):
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                if m[i][j] != 0 and (best is None or abs(m[i][j]) < abs(m[best[0]][best[1]])):
                    best = (i, j)
        return best

    diag = []
    t = 0
    while t < min(nr, nc):
        pos = min_entry(t)
        if pos is None:
            break
        while True:
            i, j = pos
            m[t], m[i] = m[i], m[t]
            for r in m:
                r[t], r[j] = r[j], r[t]
            # clear column t by row operations
            dirty = False
            for i2 in range(nr):
                if i2 != t and m[i2][t] != 0:
                    q = m[i2][t] // m[t][t]
                    for j2 in range(nc):
                        m[i2][j2] -= q * m[t][j2]
                    if m[i2][t] != 0:
                        dirty = True
            # clear row t by column operations
            for j2 in range(nc):
                if j2 != t and m[t][j2] != 0:
                    q = m[t][j2] // m[t][t]
                    for i2 in range(nr):
                        m[i2][j2] -= q * m[i2][t]
                    if m[t][j2] != 0:
                        dirty = True
            if dirty:
                pos = min_entry(t)
                continue
            # pivot must divide every remaining entry for the chain d1 | d2 | ...
            culprit = None
            for i2 in range(t + 1, nr):
                for j2 in range(t + 1, nc):
                    if m[i2][j2] % m[t][t] != 0:
                        culprit = (i2, j2)
                        break
                if culprit:
                    break
            if culprit is None:
                break
            # fold the offending column into column t and restart the pivot
            i2, j2 = culprit
            for i3 in range(nr):
                m[i3][t] += m[i3][j2]
            pos = min_entry(t)
        diag.append(abs(m[t][t]))
        t += 1
    return diag + [0] * (nc - len(diag))
