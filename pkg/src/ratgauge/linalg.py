"""Exact linear algebra over the rationals.

Matrices hold :class:`fractions.Fraction` entries and are immutable.  All
elimination runs fraction-free on integer rows stored sparsely (column ->
value), with each row divided by the gcd of its entries after every update.
Coboundary matrices are mostly ``0/±1`` so the sparse rows stay short, and
the content reduction keeps coefficients small when transition maps are
composed.  Pivoting is deterministic: the first row (in current order) with a
nonzero entry in the leftmost unfinished column.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import InputError

__all__ = [
    "Matrix",
    "rref",
    "rank",
    "kernel_basis",
    "image_membership",
    "as_fraction",
]


def as_fraction(x) -> Fraction:
    """Coerce ints, Fractions and ``"a/b"`` strings to a Fraction.

    Floats are refused, they would smuggle rounding into exact code.
    """
    if isinstance(x, bool):
        raise InputError(f"not a rational: {x!r}")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"not a rational: {x!r}") from exc
    raise InputError(f"not a rational: {x!r}")


class Matrix:
    """Dense immutable matrix of Fractions, stored row-major.

    Zero rows or zero columns are allowed; a ``0 x n`` matrix is the zero map
    from ``Q^n`` to the zero space.
    """

    __slots__ = ("rows", "cols", "_entries")

    def __init__(self, rows: int, cols: int, entries: Iterable = ()):
        if rows < 0 or cols < 0:
            raise InputError("matrix dimensions must be nonnegative")
        data = tuple(as_fraction(e) for e in entries)
        if not data:
            data = (Fraction(0),) * (rows * cols)
        if len(data) != rows * cols:
            raise InputError(
                f"expected {rows * cols} entries for a {rows}x{cols} matrix, got {len(data)}"
            )
        self.rows = rows
        self.cols = cols
        self._entries = data

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "Matrix":
        rows = [list(r) for r in rows]
        if not rows:
            return cls(0, cols or 0)
        width = len(rows[0])
        if cols is not None and cols != width:
            raise InputError(f"rows have width {width}, expected {cols}")
        if any(len(r) != width for r in rows):
            raise InputError("ragged rows")
        return cls(len(rows), width, [e for r in rows for e in r])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "Matrix":
        columns = [list(c) for c in columns]
        if any(len(c) != rows for c in columns):
            raise InputError("column length mismatch")
        return cls(rows, len(columns), [c[i] for i in range(rows) for c in columns])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, [int(i == j) for i in range(n) for j in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self._entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(self._entries[i * self.cols + j] for i in range(self.rows))

    def tolist(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def columns(self) -> list[tuple[Fraction, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows,
                      [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    T = property(transpose)

    def is_zero(self) -> bool:
        return not any(self._entries)

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise InputError(f"cannot hstack {self.shape} and {other.shape}")
        out = []
        for i in range(self.rows):
            out.extend(self.row(i))
            out.extend(other.row(i))
        return Matrix(self.rows, self.cols + other.cols, out)

    def select_columns(self, idx: Sequence[int]) -> "Matrix":
        return Matrix(self.rows, len(idx),
                      [self[i, j] for i in range(self.rows) for j in idx])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise InputError(f"shape mismatch {self.shape} @ {other.shape}")
        out = [Fraction(0)] * (self.rows * other.cols)
        for i in range(self.rows):
            base = i * other.cols
            for k, a in enumerate(self.row(i)):
                if not a:
                    continue
                for j, b in enumerate(other.row(k)):
                    if b:
                        out[base + j] += a * b
        return Matrix(self.rows, other.cols, out)

    def apply(self, v: Sequence) -> tuple[Fraction, ...]:
        """Matrix-vector product."""
        if len(v) != self.cols:
            raise InputError(f"vector of length {len(v)} for {self.shape} matrix")
        v = [as_fraction(x) for x in v]
        return tuple(sum((a * b for a, b in zip(self.row(i), v) if a and b), Fraction(0))
                     for i in range(self.rows))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._entries == other._entries

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._entries))

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(e) for e in self.row(i)) + "]"
                         for i in range(self.rows))
        return f"Matrix({self.rows}x{self.cols}: [{body}])"


# -- fraction-free elimination on sparse integer rows -------------------------

def _integer_rows(m: Matrix) -> list[dict[int, int]]:
    rows = []
    for i in range(m.rows):
        r = m.row(i)
        scale = 1
        for e in r:
            if e:
                scale = lcm(scale, e.denominator)
        rows.append({j: int(e * scale) for j, e in enumerate(r) if e})
    return rows


def _primitive(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {j: v // g for j, v in row.items()}
    return row


def _eliminate(target: dict[int, int], pivot_row: dict[int, int], col: int) -> dict[int, int]:
    """Return ``a*target - b*pivot_row`` with the ``col`` entry cancelled."""
    a = pivot_row[col]
    b = target[col]
    g = gcd(a, b)
    a //= g
    b //= g
    out = {j: a * v for j, v in target.items()}
    for j, v in pivot_row.items():
        w = out.get(j, 0) - b * v
        if w:
            out[j] = w
        else:
            out.pop(j, None)
    return _primitive(out)


def _echelon(rows: list[dict[int, int]], ncols: int, reduced: bool) -> tuple[list[dict[int, int]], list[int]]:
    rows = [dict(r) for r in rows if r]
    pivots: list[int] = []
    done = 0
    for col in range(ncols):
        if done == len(rows):
            break
        hit = next((i for i in range(done, len(rows)) if col in rows[i]), None)
        if hit is None:
            continue
        rows[done], rows[hit] = rows[hit], rows[done]
        p = rows[done]
        scope = range(len(rows)) if reduced else range(done + 1, len(rows))
        for i in scope:
            if i != done and col in rows[i]:
                rows[i] = _eliminate(rows[i], p, col)
        pivots.append(col)
        done += 1
        rows = rows[:done] + [r for r in rows[done:] if r]
    return rows[:done], pivots


def rref(m: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form and its pivot columns (strictly increasing)."""
    rows, pivots = _echelon(_integer_rows(m), m.cols, reduced=True)
    out = [Fraction(0)] * (m.rows * m.cols)
    for i, (row, col) in enumerate(zip(rows, pivots)):
        lead = row[col]
        for j, v in row.items():
            out[i * m.cols + j] = Fraction(v, lead)
    return Matrix(m.rows, m.cols, out), tuple(pivots)


def rank(m: Matrix) -> int:
    return len(_echelon(_integer_rows(m), m.cols, reduced=False)[1])


def kernel_basis(m: Matrix) -> Matrix:
    """Null space basis as the columns of a ``cols x nullity`` matrix.

    One column per free variable, with a 1 in that variable's slot.
    """
    r, pivots = rref(m)
    pivot_set = set(pivots)
    free = [j for j in range(m.cols) if j not in pivot_set]
    columns = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -r[i, f]
        columns.append(v)
    return Matrix.from_columns(columns, m.cols)


def image_membership(m: Matrix, v: Sequence) -> tuple[bool, tuple[Fraction, ...] | None]:
    """Decide whether ``v`` lies in the column span of ``m``.

    Returns ``(True, c)`` with ``m @ c == v`` exactly, or ``(False, None)``.
    """
    if len(v) != m.rows:
        raise InputError(f"vector of length {len(v)} against {m.rows}-row matrix")
    aug = m.hstack(Matrix.from_columns([list(v)], m.rows))
    r, pivots = rref(aug)
    if pivots and pivots[-1] == m.cols:
        return False, None
    c = [Fraction(0)] * m.cols
    for i, p in enumerate(pivots):
        c[p] = r[i, m.cols]
    return True, tuple(c)
