"""Exact linear algebra over the rationals.

Everything here works on :class:`fractions.Fraction` entries.  Matrices are
small and dense; subspaces are stored by a reduced row echelon basis so that
two equal subspaces always have identical representations.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

Vector = tuple  # tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)

_SCALAR_RE = re.compile(r"^[+-]?\d+(/[+-]?\d+)?$")


def parse_scalar(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` (decimal integers, optional sign)."""
    text = text.strip()
    if not _SCALAR_RE.match(text):
        raise ValueError(f"not a rational scalar: {text!r}")
    value = Fraction(text)
    return value


def format_scalar(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def vec(values: Iterable) -> Vector:
    return tuple(Fraction(v) for v in values)


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def unit_vector(n: int, i: int) -> Vector:
    return tuple(ONE if k == i else ZERO for k in range(n))


def is_zero_vector(v: Sequence) -> bool:
    return not any(v)


def add_vectors(a: Sequence, b: Sequence) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


def scale_vector(c, v: Sequence) -> Vector:
    c = Fraction(c)
    return tuple(c * x for x in v)


def linear_combination(coeffs: Sequence, vectors: Sequence[Sequence], n: int) -> Vector:
    out = [ZERO] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for k, x in enumerate(v):
                if x:
                    out[k] += c * x
    return tuple(out)


@dataclass(frozen=True)
class Matrix:
    """Dense ``rows x cols`` matrix with rational entries (row major)."""

    rows: int
    cols: int
    data: tuple

    def __post_init__(self):
        if len(self.data) != self.rows or any(len(r) != self.cols for r in self.data):
            raise ValueError("entry count does not match the declared shape")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: Optional[int] = None) -> "Matrix":
        data = tuple(tuple(Fraction(x) for x in r) for r in rows)
        if cols is None:
            cols = len(data[0]) if data else 0
        return cls(len(data), cols, data)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "Matrix":
        cols = len(columns)
        data = tuple(tuple(Fraction(columns[j][i]) for j in range(cols)) for i in range(rows))
        return cls(rows, cols, data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, tuple((ZERO,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, tuple(unit_vector(n, i) for i in range(n)))

    @classmethod
    def from_flat(cls, flat: Sequence, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, tuple(tuple(Fraction(flat[r * cols + c]) for c in range(cols)) for r in range(rows)))

    def flat(self) -> Vector:
        return tuple(x for r in self.data for x in r)

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.data)

    def columns(self) -> list:
        return [self.column(j) for j in range(self.cols)]

    @property
    def T(self) -> "Matrix":
        return Matrix(self.cols, self.rows, tuple(zip(*self.data)) if self.rows else tuple(() for _ in range(self.cols)))

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.data)

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.cols:
            raise ValueError("dimension mismatch in matrix-vector product")
        return tuple(sum((a * b for a, b in zip(r, v) if a and b), ZERO) for r in self.data)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
            ocols = other.columns()
            return Matrix(
                self.rows,
                other.cols,
                tuple(tuple(sum((a * b for a, b in zip(r, c) if a and b), ZERO) for c in ocols) for r in self.data),
            )
        return self.apply(other)

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in matrix sum")
        return Matrix(self.rows, self.cols, tuple(add_vectors(a, b) for a, b in zip(self.data, other.data)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + other.scale(-1)

    def scale(self, c) -> "Matrix":
        return Matrix(self.rows, self.cols, tuple(scale_vector(c, r) for r in self.data))

    @staticmethod
    def hstack(blocks: Sequence["Matrix"], rows: int) -> "Matrix":
        data = tuple(tuple(x for b in blocks for x in b.data[i]) for i in range(rows))
        return Matrix(rows, sum(b.cols for b in blocks), data)

    @staticmethod
    def vstack(blocks: Sequence["Matrix"], cols: int) -> "Matrix":
        data = tuple(r for b in blocks for r in b.data)
        return Matrix(len(data), cols, data)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(format_scalar(x) for x in r) for r in self.data)
        return f"Matrix({self.rows}x{self.cols}: [{body}])"


def _rref_in_place(rows: list, ncols: int) -> list:
    """Row reduce ``rows`` (a list of mutable lists) in place; return pivots."""
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        pr = next((i for i in range(r, nrows) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        prow = rows[r]
        inv = 1 / prow[c]
        if inv != 1:
            for k in range(c, ncols):
                if prow[k]:
                    prow[k] *= inv
        nz = [k for k in range(c, ncols) if prow[k]]
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    row = rows[i]
                    for k in nz:
                        row[k] -= f * prow[k]
        pivots.append(c)
        r += 1
    return pivots


def rref(m: Matrix) -> tuple:
    """Return ``(R, rank, pivots)`` with ``R`` the reduced row echelon form of ``m``."""
    rows = [list(r) for r in m.data]
    pivots = _rref_in_place(rows, m.cols)
    return Matrix(m.rows, m.cols, tuple(tuple(r) for r in rows)), len(pivots), pivots


def rank(m: Matrix) -> int:
    return rref(m)[1]


def rank_of_vectors(vectors: Sequence[Sequence], n: int) -> int:
    rows = [list(v) for v in vectors if any(v)]
    return len(_rref_in_place(rows, n))


def kernel_basis(m: Matrix) -> "Subspace":
    """Null space of ``m`` as a subspace of ``Q^cols``."""
    rows = [list(r) for r in m.data]
    pivots = _rref_in_place(rows, m.cols)
    pivot_set = set(pivots)
    basis = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        v = [ZERO] * m.cols
        v[f] = ONE
        for r, p in enumerate(pivots):
            if rows[r][f]:
                v[p] = -rows[r][f]
        basis.append(v)
    return Subspace.span(basis, m.cols)


def solve(m: Matrix, b: Sequence) -> Optional[Vector]:
    """Some ``x`` with ``m x = b`` (free variables set to zero), or ``None``."""
    if len(b) != m.rows:
        raise ValueError("right-hand side length does not match the row count")
    rows = [list(r) + [Fraction(x)] for r, x in zip(m.data, b)]
    pivots = _rref_in_place(rows, m.cols + 1)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [ZERO] * m.cols
    for r, p in enumerate(pivots):
        x[p] = rows[r][m.cols]
    return tuple(x)


def solve_combination(vectors: Sequence[Sequence], target: Sequence, n: int) -> Optional[Vector]:
    """Coefficients ``c`` with ``sum c_i vectors_i = target``, or ``None``."""
    if not vectors:
        return () if not any(target) else None
    return solve(Matrix.from_columns(vectors, n), target)


@dataclass(frozen=True)
class Subspace:
    """A subspace of ``Q^ambient_dim`` with its canonical (RREF) basis."""

    ambient_dim: int
    basis: tuple
    pivots: tuple

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int) -> "Subspace":
        rows = []
        for v in vectors:
            if len(v) != ambient_dim:
                raise ValueError("vector length does not match the ambient dimension")
            if any(v):
                rows.append([Fraction(x) for x in v])
        pivots = _rref_in_place(rows, ambient_dim)
        return cls(ambient_dim, tuple(tuple(r) for r in rows[: len(pivots)]), tuple(pivots))

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, (), ())

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, tuple(unit_vector(ambient_dim, i) for i in range(ambient_dim)), tuple(range(ambient_dim)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def _check(self, other: "Subspace") -> None:
        if other.ambient_dim != self.ambient_dim:
            raise ValueError(f"ambient mismatch: {self.ambient_dim} vs {other.ambient_dim}")

    def reduce(self, v: Sequence) -> Vector:
        """Residual of ``v`` after eliminating the pivot coordinates."""
        out = [Fraction(x) for x in v]
        for row, p in zip(self.basis, self.pivots):
            f = out[p]
            if f:
                for k, x in enumerate(row):
                    if x:
                        out[k] -= f * x
        return tuple(out)

    def __contains__(self, v: Sequence) -> bool:
        if len(v) != self.ambient_dim:
            raise ValueError("vector length does not match the ambient dimension")
        return not any(self.reduce(v))

    def coordinates(self, v: Sequence) -> Vector:
        """Coordinates of a member ``v`` in the canonical basis."""
        if v not in self:
            raise ValueError("vector is not in the subspace")
        return tuple(Fraction(v[p]) for p in self.pivots)

    def complement_positions(self) -> tuple:
        ps = set(self.pivots)
        return tuple(i for i in range(self.ambient_dim) if i not in ps)

    def quotient_coordinates(self, v: Sequence) -> Vector:
        """Coordinates of the class of ``v`` in ``ambient / self``.

        The quotient basis is the classes of the unit vectors at the
        non-pivot positions.
        """
        r = self.reduce(v)
        return tuple(r[i] for i in self.complement_positions())

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace.span(self.basis + other.basis, self.ambient_dim)

    def annihilator(self) -> "Subspace":
        if not self.basis:
            return Subspace.full(self.ambient_dim)
        return kernel_basis(Matrix(self.dim, self.ambient_dim, self.basis))

    def intersection(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return (self.annihilator() + other.annihilator()).annihilator()

    def __and__(self, other: "Subspace") -> "Subspace":
        return self.intersection(other)

    def __le__(self, other: "Subspace") -> bool:
        self._check(other)
        return all(v in other for v in self.basis)

    def image(self, m: Matrix) -> "Subspace":
        return Subspace.span([m.apply(v) for v in self.basis], m.rows)


def commutant(pairs: Sequence[tuple], rows: int, cols: int, mask: Optional[Sequence[Sequence[bool]]] = None) -> Subspace:
    """All ``X`` (``rows x cols``) with ``X A = B X`` for every ``(A, B)`` in ``pairs``.

    ``A`` is ``cols x cols`` and ``B`` is ``rows x rows``.  Entries outside
    ``mask`` are forced to zero.  The result lives in ``Q^(rows*cols)`` with
    ``X`` flattened row major.
    """
    n = rows * cols
    free = [(r, c) for r in range(rows) for c in range(cols) if mask is None or mask[r][c]]
    index = {rc: k for k, rc in enumerate(free)}
    eqs = []
    for a, b in pairs:
        # (XA)[r][c] = sum_k X[r][k] A[k][c];  (BX)[r][c] = sum_k B[r][k] X[k][c]
        for r in range(rows):
            for c in range(cols):
                row = [ZERO] * len(free)
                nz = False
                for k in range(cols):
                    x = a.data[k][c]
                    if x:
                        j = index.get((r, k))
                        if j is not None:
                            row[j] += x
                            nz = True
                for k in range(rows):
                    x = b.data[r][k]
                    if x:
                        j = index.get((k, c))
                        if j is not None:
                            row[j] -= x
                            nz = True
                if nz and any(row):
                    eqs.append(row)
    ker = kernel_basis(Matrix(len(eqs), len(free), tuple(tuple(e) for e in eqs))) if eqs else Subspace.full(len(free))
    vectors = []
    for v in ker.basis:
        full = [ZERO] * n
        for (r, c), x in zip(free, v):
            full[r * cols + c] = x
        vectors.append(full)
    return Subspace.span(vectors, n)


def trace_form_radical(mult: Sequence[Sequence[Sequence]], dim: int) -> Subspace:
    """Radical of a finite-dimensional algebra from its structure constants.

    ``mult[i][j]`` holds the coordinates of ``b_i b_j``.  In characteristic
    zero the Jacobson radical is the radical of ``(x, y) -> tr(L_x L_y)``.
    """
    left = [left_multiplication(mult, dim, unit_vector(dim, i)) for i in range(dim)]
    gram = [[_trace(left[i] @ left[j]) for j in range(dim)] for i in range(dim)]
    return kernel_basis(Matrix.from_rows(gram, dim))


def left_multiplication(mult: Sequence[Sequence[Sequence]], dim: int, x: Sequence) -> Matrix:
    cols = []
    for j in range(dim):
        col = [ZERO] * dim
        for i, xi in enumerate(x):
            if xi:
                for k, c in enumerate(mult[i][j]):
                    if c:
                        col[k] += xi * c
        cols.append(col)
    return Matrix.from_columns(cols, dim)


def _trace(m: Matrix) -> Fraction:
    return sum((m.data[i][i] for i in range(m.rows)), ZERO)
