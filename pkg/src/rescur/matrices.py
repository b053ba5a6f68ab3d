"""Matrices of polynomials: shapes, products, minors, generic rank."""

from __future__ import annotations

from itertools import combinations

from rescur.poly import Polynomial, Ring, RingMismatchError


class BudgetExceededError(RuntimeError):
    """Raised when a combinatorial enumeration would exceed its budget."""


class PolyMatrix:
    """Immutable rows-of-polynomials matrix over a single ring."""

    __slots__ = ("ring", "rows", "cols", "entries")

    def __init__(self, ring: Ring, entries):
        entries = tuple(tuple(row) for row in entries)
        if not entries or not entries[0]:
            raise ValueError("matrix needs at least one row and one column")
        cols = len(entries[0])
        for row in entries:
            if len(row) != cols:
                raise ValueError("ragged matrix rows")
            for p in row:
                if p.ring != ring:
                    raise RingMismatchError(f"{p.ring!r} vs {ring!r}")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "rows", len(entries))
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, *a):
        raise AttributeError("PolyMatrix is immutable")

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return isinstance(other, PolyMatrix) and self.entries == other.entries and self.ring == other.ring

    def __hash__(self):
        return hash((self.ring, self.entries))

    def __repr__(self):
        body = "; ".join(", ".join(str(p) for p in row) for row in self.entries)
        return f"[{body}]"

    def column(self, j):
        return tuple(self.entries[i][j] for i in range(self.rows))

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def is_zero(self) -> bool:
        return all(p.is_zero() for row in self.entries for p in row)

    def __mul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} * {other.rows}x{other.cols}")
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = self.ring.zero
                for k in range(self.cols):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            out.append(row)
        return PolyMatrix(self.ring, out)

    def map(self, fn, ring=None) -> "PolyMatrix":
        return PolyMatrix(ring or self.ring, [[fn(p) for p in row] for row in self.entries])

    def max_entry_degree(self) -> int:
        return max(p.total_degree() for row in self.entries for p in row)


def from_columns(ring: Ring, columns) -> PolyMatrix:
    cols = [tuple(c) for c in columns]
    rows = len(cols[0])
    return PolyMatrix(ring, [[cols[j][i] for j in range(len(cols))] for i in range(rows)])


def identity(ring: Ring, n: int) -> PolyMatrix:
    return PolyMatrix(ring, [[ring.one if i == j else ring.zero for j in range(n)] for i in range(n)])


def determinant(ring: Ring, rows) -> Polynomial:
    """Cofactor expansion; exact, meant for small minors."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    acc = ring.zero
    for j in range(n):
        if rows[0][j].is_zero():
            continue
        minor = [[row[k] for k in range(n) if k != j] for row in rows[1:]]
        term = rows[0][j] * determinant(ring, minor)
        acc = acc + term if j % 2 == 0 else acc - term
    return acc


def comb(n: int, k: int) -> int:
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)
    return out


def minors(mat: PolyMatrix, size: int, budget: int = 100_000):
    """All size x size minors of mat, row-subset-major order."""
    if size > min(mat.rows, mat.cols):
        raise ValueError(f"minor size {size} exceeds matrix shape")
    count = comb(mat.rows, size) * comb(mat.cols, size)
    if count > budget:
        raise BudgetExceededError(
            f"{count} minors of size {size} exceed the budget of {budget}"
        )
    out = []
    for rs in combinations(range(mat.rows), size):
        for cs in combinations(range(mat.cols), size):
            sub = [[mat.entries[i][j] for j in cs] for i in rs]
            out.append(determinant(mat.ring, sub))
    return out


def generic_rank(mat: PolyMatrix) -> int:
    """Rank over the fraction field, by fraction-free elimination."""
    work = [list(row) for row in mat.entries]
    rank = 0
    row = 0
    for col in range(mat.cols):
        pivot = next((i for i in range(row, mat.rows) if not work[i][col].is_zero()), None)
        if pivot is None:
            continue
        work[row], work[pivot] = work[pivot], work[row]
        pv = work[row][col]
        for i in range(row + 1, mat.rows):
            if work[i][col].is_zero():
                continue
            f = work[i][col]
            work[i] = [pv * a - f * b for a, b in zip(work[i], work[row])]
        rank += 1
        row += 1
        if row == mat.rows:
            break
    return rank
