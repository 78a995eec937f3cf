"""Exact linear algebra over the rationals.

Matrices are tuples of row tuples of :class:`fractions.Fraction`.  Every
routine here is a pure function of its arguments; nothing is ever rounded.

Elimination works on sparse rows (``dict`` column -> value) because the
linear systems built elsewhere in the package (cocycle constraints,
invariance of bilinear forms) are tall and very sparse.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionError

Scalar = Fraction
Vector = tuple  # tuple[Fraction, ...]
Matrix = tuple  # tuple[Vector, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def scalar(x) -> Fraction:
    """Coerce ``int``, ``Fraction`` or a ``"p/q"`` string to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not exact; pass a Fraction or a 'p/q' string")
    return Fraction(x)


def vector(xs: Iterable) -> Vector:
    return tuple(scalar(x) for x in xs)


def matrix(rows: Iterable[Iterable]) -> Matrix:
    m = tuple(vector(r) for r in rows)
    if m and len({len(r) for r in m}) != 1:
        raise DimensionError("ragged matrix")
    return m


def zeros(rows: int, cols: int) -> Matrix:
    return tuple((ZERO,) * cols for _ in range(rows))


def identity(n: int) -> Matrix:
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


def shape(m: Matrix, cols: int | None = None) -> tuple[int, int]:
    if not m:
        return 0, cols or 0
    return len(m), len(m[0])


def transpose(m: Matrix, cols: int | None = None) -> Matrix:
    r, c = shape(m, cols)
    return tuple(tuple(m[i][j] for i in range(r)) for j in range(c))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if a and b and len(a[0]) != len(b):
        raise DimensionError(f"cannot multiply {shape(a)} by {shape(b)}")
    bt = transpose(b)
    return tuple(tuple(sum((x * y for x, y in zip(row, col)), ZERO) for col in bt) for row in a)


def matvec(m: Matrix, v: Sequence) -> Vector:
    if m and len(m[0]) != len(v):
        raise DimensionError("matrix/vector size mismatch")
    return tuple(sum((x * y for x, y in zip(row, v)), ZERO) for row in m)


def is_zero_vector(v: Sequence) -> bool:
    return all(x == 0 for x in v)


def _to_sparse(row: Sequence) -> dict[int, Fraction]:
    return {j: scalar(x) for j, x in enumerate(row) if x != 0}


class _Echelon:
    """Incrementally maintained reduced row echelon basis of a row space."""

    def __init__(self) -> None:
        self.rows: dict[int, dict[int, Fraction]] = {}  # pivot column -> row

    def reduce(self, row: dict[int, Fraction]) -> dict[int, Fraction]:
        row = dict(row)
        for col in sorted(c for c in row if c in self.rows):
            f = row.get(col)
            if not f:
                continue
            for j, v in self.rows[col].items():
                nv = row.get(j, ZERO) - f * v
                if nv:
                    row[j] = nv
                else:
                    row.pop(j, None)
        return row

    def add(self, row: dict[int, Fraction]) -> bool:
        row = self.reduce(row)
        if not row:
            return False
        p = min(row)
        inv = 1 / row[p]
        row = {j: v * inv for j, v in row.items()}
        for q, other in self.rows.items():
            f = other.get(p)
            if f:
                for j, v in row.items():
                    nv = other.get(j, ZERO) - f * v
                    if nv:
                        other[j] = nv
                    else:
                        other.pop(j, None)
        self.rows[p] = row
        return True

    def pivots(self) -> list[int]:
        return sorted(self.rows)


def _echelon_of(rows: Iterable[Sequence | dict]) -> _Echelon:
    e = _Echelon()
    for r in rows:
        e.add(r if isinstance(r, dict) else _to_sparse(r))
    return e


def rref(m: Matrix, cols: int | None = None) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and ascending pivot columns.

    The returned matrix keeps the row count of ``m``; zero rows go last.
    """
    nrows, ncols = shape(m, cols)
    e = _echelon_of(m)
    piv = e.pivots()
    out = [tuple(e.rows[p].get(j, ZERO) for j in range(ncols)) for p in piv]
    out += [(ZERO,) * ncols] * (nrows - len(out))
    return tuple(out), piv


def rank(m: Matrix) -> int:
    return len(_echelon_of(m).rows)


def row_basis(vectors: Iterable[Sequence], dim: int) -> Matrix:
    """RREF basis (nonzero rows only) of the span of ``vectors``."""
    e = _echelon_of(vectors)
    return tuple(tuple(e.rows[p].get(j, ZERO) for j in range(dim)) for p in e.pivots())


def kernel_sparse(rows: Iterable[dict[int, Fraction]], ncols: int) -> list[Vector]:
    """Null space basis of a matrix given as sparse rows."""
    e = _echelon_of(rows)
    piv = set(e.rows)
    basis = []
    for free in range(ncols):
        if free in piv:
            continue
        v = [ZERO] * ncols
        v[free] = ONE
        for p, row in e.rows.items():
            f = row.get(free)
            if f:
                v[p] = -f
        basis.append(tuple(v))
    return basis


def kernel(m: Matrix, cols: int | None = None) -> list[Vector]:
    """Basis of ``{v : m v = 0}``, one vector per free column (ascending)."""
    _, ncols = shape(m, cols)
    return kernel_sparse((_to_sparse(r) for r in m), ncols)


def solve(m: Matrix, b: Sequence, cols: int | None = None) -> Vector | None:
    """One solution of ``m x = b`` with all free variables zero, or None."""
    nrows, ncols = shape(m, cols)
    if len(b) != nrows:
        raise DimensionError(f"right-hand side has length {len(b)}, expected {nrows}")
    e = _Echelon()
    for row, rhs in zip(m, b):
        sp = _to_sparse(row)
        if rhs != 0:
            sp[ncols] = scalar(rhs)
        e.add(sp)
    if ncols in e.rows:
        return None
    x = [ZERO] * ncols
    for p, row in e.rows.items():
        x[p] = row.get(ncols, ZERO)
    return tuple(x)


def inverse(m: Matrix) -> Matrix:
    n = len(m)
    if any(len(r) != n for r in m):
        raise DimensionError("inverse of a non-square matrix")
    aug = [tuple(m[i]) + tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)]
    red, piv = rref(tuple(aug))
    if piv[:n] != list(range(n)) or len(piv) > n:
        raise ZeroDivisionError("matrix is singular")
    return tuple(tuple(red[i][n:]) for i in range(n))


def det(m: Matrix) -> Fraction:
    """Determinant by fraction-exact elimination."""
    n = len(m)
    a = [list(map(scalar, r)) for r in m]
    d = ONE
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c] != 0), None)
        if p is None:
            return ZERO
        if p != c:
            a[c], a[p] = a[p], a[c]
            d = -d
        d *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            if f:
                for j in range(c, n):
                    a[r][j] -= f * a[c][j]
    return d


class Subspace:
    """A subspace of ``Q^dim`` held as its RREF basis."""

    __slots__ = ("dim_ambient", "basis", "_pivots")

    def __init__(self, vectors: Iterable[Sequence], dim: int):
        vectors = list(vectors)
        for v in vectors:
            if len(v) != dim:
                raise DimensionError(f"vector of length {len(v)} in ambient dimension {dim}")
        e = _echelon_of(vectors)
        self.dim_ambient = dim
        self._pivots = tuple(e.pivots())
        self.basis: Matrix = tuple(tuple(e.rows[p].get(j, ZERO) for j in range(dim)) for p in self._pivots)

    @classmethod
    def whole(cls, dim: int) -> "Subspace":
        return cls(identity(dim), dim)

    @classmethod
    def zero(cls, dim: int) -> "Subspace":
        return cls((), dim)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple[int, ...]:
        return self._pivots

    def _check(self, other: "Subspace") -> None:
        if other.dim_ambient != self.dim_ambient:
            raise DimensionError("subspaces live in different ambient spaces")

    def __contains__(self, v: Sequence) -> bool:
        if len(v) != self.dim_ambient:
            raise DimensionError("membership test with wrong vector length")
        e = _Echelon()
        e.rows = {p: _to_sparse(r) for p, r in zip(self._pivots, self.basis)}
        return not e.reduce(_to_sparse(v))

    def contains_space(self, other: "Subspace") -> bool:
        self._check(other)
        return all(v in self for v in other.basis)

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace(self.basis + other.basis, self.dim_ambient)

    def intersect(self, other: "Subspace") -> "Subspace":
        """Zassenhaus-free intersection: solve ``sum a_i u_i = sum b_j w_j``."""
        self._check(other)
        if not self.basis or not other.basis:
            return Subspace.zero(self.dim_ambient)
        k = self.dim
        # columns: coefficients on self.basis then on other.basis
        cols = transpose(self.basis + tuple(tuple(-x for x in w) for w in other.basis))
        vecs = []
        for sol in kernel(cols, k + other.dim):
            vecs.append(tuple(sum((sol[i] * self.basis[i][j] for i in range(k)), ZERO)
                              for j in range(self.dim_ambient)))
        return Subspace(vecs, self.dim_ambient)

    def __eq__(self, other) -> bool:
        return isinstance(other, Subspace) and self.dim_ambient == other.dim_ambient and self.basis == other.basis

    def __hash__(self) -> int:
        return hash((self.dim_ambient, self.basis))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.dim_ambient})"

    def coordinates(self, v: Sequence) -> Vector | None:
        """Coefficients of ``v`` on :attr:`basis`, or None if ``v`` is outside."""
        if not self.basis:
            return () if is_zero_vector(v) else None
        return solve(transpose(self.basis), v, self.dim)
