"""Exact rational scalars and dense linear algebra.

Scalars are :class:`fractions.Fraction`; vectors are plain tuples of
fractions; matrices are immutable :class:`Matrix` objects.  Nothing in this
module ever rounds.

Tensor index convention (used everywhere in the package): basis vector
``(i, j)`` of ``V (x) W`` sits at flat index ``i * dim(W) + j``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple, Union

Scalar = Fraction
Vector = Tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


class DimensionMismatch(ValueError):
    """Operand shapes are incompatible."""


def scalar(value: Union[int, str, Fraction]) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact scalar {value!r}")
    return Fraction(value)


def format_scalar(x: Fraction) -> str:
    """``"p/q"``, or ``"p"`` when the denominator is 1."""
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_scalar(text: Union[str, int]) -> Fraction:
    if isinstance(text, bool) or not isinstance(text, (str, int)):
        raise ValueError(f"scalar must be an exact fraction string, got {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    s = text.strip()
    if not s or any(c in s for c in ".eE"):
        raise ValueError(f"not an exact fraction string: {text!r}")
    return Fraction(s)


def vector(values: Iterable) -> Vector:
    return tuple(scalar(v) for v in values)


def zeros(n: int) -> Vector:
    return (ZERO,) * n


def unit_vector(n: int, i: int) -> Vector:
    return tuple(ONE if k == i else ZERO for k in range(n))


def vadd(x: Sequence[Fraction], y: Sequence[Fraction]) -> Vector:
    if len(x) != len(y):
        raise DimensionMismatch(f"vector lengths {len(x)} and {len(y)}")
    return tuple(a + b for a, b in zip(x, y))


def vsub(x: Sequence[Fraction], y: Sequence[Fraction]) -> Vector:
    if len(x) != len(y):
        raise DimensionMismatch(f"vector lengths {len(x)} and {len(y)}")
    return tuple(a - b for a, b in zip(x, y))


def vscale(c: Fraction, x: Sequence[Fraction]) -> Vector:
    return tuple(c * a for a in x)


def dot(x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
    if len(x) != len(y):
        raise DimensionMismatch(f"vector lengths {len(x)} and {len(y)}")
    total = ZERO
    for a, b in zip(x, y):
        if a and b:
            total += a * b
    return total


def is_zero(x: Sequence[Fraction]) -> bool:
    return not any(x)


def first_nonzero(x: Sequence[Fraction]) -> Optional[int]:
    for i, a in enumerate(x):
        if a:
            return i
    return None


def kron_vectors(x: Sequence[Fraction], y: Sequence[Fraction]) -> Vector:
    return tuple(a * b for a in x for b in y)


class Matrix:
    """Immutable dense matrix of fractions.

    Column-sparse views are cached lazily, which keeps products with the
    (mostly sparse) coproduct matrices cheap.
    """

    __slots__ = ("rows", "cols", "_data", "_colnz", "_hash")

    def __init__(self, rows: int, cols: int, data: Sequence[Sequence[Fraction]]):
        if len(data) != rows or any(len(r) != cols for r in data):
            raise DimensionMismatch(f"entry grid does not have shape {rows}x{cols}")
        self.rows = rows
        self.cols = cols
        self._data = tuple(tuple(r) for r in data)
        self._colnz = None
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: Optional[int] = None) -> "Matrix":
        data = [tuple(scalar(v) for v in r) for r in rows]
        if cols is None:
            if not data:
                raise DimensionMismatch("cannot infer column count of an empty matrix")
            cols = len(data[0])
        return cls(len(data), cols, data)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "Matrix":
        columns = [tuple(scalar(v) for v in c) for c in columns]
        for c in columns:
            if len(c) != rows:
                raise DimensionMismatch(f"column of length {len(c)}, expected {rows}")
        data = [tuple(c[i] for c in columns) for i in range(rows)]
        return cls(rows, len(columns), data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        row = (ZERO,) * cols
        return cls(rows, cols, [row] * rows)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, [unit_vector(n, i) for i in range(n)])

    @classmethod
    def row_vector(cls, x: Sequence) -> "Matrix":
        return cls.from_rows([x], len(x))

    # -- access -------------------------------------------------------
    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij: Tuple[int, int]) -> Fraction:
        i, j = ij
        return self._data[i][j]

    def row(self, i: int) -> Vector:
        return self._data[i]

    def col(self, j: int) -> Vector:
        return tuple(r[j] for r in self._data)

    def row_list(self) -> list:
        return [list(r) for r in self._data]

    def column_nonzeros(self):
        if self._colnz is None:
            nz = [[] for _ in range(self.cols)]
            for i, r in enumerate(self._data):
                for j, v in enumerate(r):
                    if v:
                        nz[j].append((i, v))
            self._colnz = nz
        return self._colnz

    # -- arithmetic ---------------------------------------------------
    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
            acols = self.column_nonzeros()
            bcols = other.column_nonzeros()
            out = [[ZERO] * other.cols for _ in range(self.rows)]
            for j, bnz in enumerate(bcols):
                for k, b in bnz:
                    for i, a in acols[k]:
                        out[i][j] += a * b
            return Matrix(self.rows, other.cols, out)
        return self.apply(other)

    def apply(self, x: Sequence[Fraction]) -> Vector:
        if len(x) != self.cols:
            raise DimensionMismatch(f"cannot apply {self.shape} matrix to length-{len(x)} vector")
        acols = self.column_nonzeros()
        out = [ZERO] * self.rows
        for k, b in enumerate(x):
            if b:
                for i, a in acols[k]:
                    out[i] += a * b
        return tuple(out)

    def rapply(self, f: Sequence[Fraction]) -> Vector:
        """Row vector times matrix, ``f @ self``."""
        if len(f) != self.rows:
            raise DimensionMismatch(f"cannot apply length-{len(f)} row to {self.shape} matrix")
        acols = self.column_nonzeros()
        return tuple(sum((f[i] * a for i, a in nz if f[i]), ZERO) for nz in acols)

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot add {self.shape} and {other.shape}")
        return Matrix(self.rows, self.cols,
                      [vadd(a, b) for a, b in zip(self._data, other._data)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot subtract {self.shape} and {other.shape}")
        return Matrix(self.rows, self.cols,
                      [vsub(a, b) for a, b in zip(self._data, other._data)])

    def __neg__(self) -> "Matrix":
        return self.scale(-ONE)

    def scale(self, c) -> "Matrix":
        c = scalar(c)
        return Matrix(self.rows, self.cols, [vscale(c, r) for r in self._data])

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows, [self.col(j) for j in range(self.cols)])

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def __pow__(self, n: int) -> "Matrix":
        if self.rows != self.cols or n < 0:
            raise DimensionMismatch("matrix powers need a square matrix and n >= 0")
        result = Matrix.identity(self.rows)
        for _ in range(n):
            result = result @ self
        return result

    def is_zero(self) -> bool:
        return not any(any(r) for r in self._data)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self._data))
        return self._hash

    def __repr__(self) -> str:
        body = "; ".join(" ".join(format_scalar(v) for v in r) for r in self._data)
        return f"Matrix({self.rows}x{self.cols}: [{body}])"

    # -- linear algebra shortcuts --------------------------------------
    def rank(self) -> int:
        return rank(self)

    def inverse(self) -> Optional["Matrix"]:
        return inverse(self)


def stack(blocks: Sequence[Matrix]) -> Matrix:
    """Vertical concatenation."""
    if not blocks:
        raise DimensionMismatch("nothing to stack")
    cols = blocks[0].cols
    data = []
    for b in blocks:
        if b.cols != cols:
            raise DimensionMismatch(f"cannot stack {b.shape} under {cols} columns")
        data.extend(b._data)
    return Matrix(len(data), cols, data)


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product; row/column ``(i, j)`` sits at ``i * dim2 + j``."""
    zb = (ZERO,) * b.cols
    data = []
    for ra in a._data:
        for rb in b._data:
            row = []
            for x in ra:
                if not x:
                    row.extend(zb)
                elif x == ONE:
                    row.extend(rb)
                else:
                    row.extend(x * y if y else ZERO for y in rb)
            data.append(row)
    return Matrix(a.rows * b.rows, a.cols * b.cols, data)


def kron_apply_sparse(a: Matrix, b: Matrix, x: Sequence[Fraction]) -> dict:
    """``kron(a, b) @ x`` as ``{index: value}`` with zero entries dropped."""
    if len(x) != a.cols * b.cols:
        raise DimensionMismatch(f"cannot apply kron of {a.shape} and {b.shape} to length {len(x)}")
    acols = a.column_nonzeros()
    bcols = b.column_nonzeros()
    n = b.rows
    out = {}
    for idx, v in enumerate(x):
        if not v:
            continue
        k, l = divmod(idx, b.cols)
        bnz = bcols[l]
        for i, av in acols[k]:
            base = i * n
            av = av * v
            for j, bv in bnz:
                out[base + j] = out.get(base + j, ZERO) + av * bv
    return {k: v for k, v in out.items() if v}


def kron_apply(a: Matrix, b: Matrix, x: Sequence[Fraction]) -> Vector:
    """``kron(a, b) @ x`` without forming the Kronecker product."""
    out = [ZERO] * (a.rows * b.rows)
    for k, v in kron_apply_sparse(a, b, x).items():
        out[k] = v
    return tuple(out)


def kron_matmul(a: Matrix, b: Matrix, m: Matrix) -> Matrix:
    """``kron(a, b) @ m`` column by column."""
    return Matrix.from_columns([kron_apply(a, b, m.col(j)) for j in range(m.cols)],
                               a.rows * b.rows)


def _rref(rows: list, ncols: int):
    """In-place reduced row echelon form of ``rows`` (lists of Fractions).

    Only the first ``ncols`` columns are used for pivoting; any extra
    columns are carried along.  Returns the pivot column list.
    """
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        pr = None
        for i in range(r, nrows):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        prow = rows[r]
        inv = ONE / prow[c]
        if inv != ONE:
            prow = [v * inv if v else v for v in prow]
            rows[r] = prow
        support = [k for k in range(c, len(prow)) if prow[k]]
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    row = rows[i]
                    for k in support:
                        row[k] -= f * prow[k]
        pivots.append(c)
        r += 1
    return pivots


def _prepared_rows(a: Matrix, extra: Optional[Sequence[Fraction]] = None) -> list:
    seen = set()
    rows = []
    for i, r in enumerate(a._data):
        full = r + (extra[i],) if extra is not None else r
        if not any(full) or full in seen:
            continue
        seen.add(full)
        rows.append(list(full))
    return rows


def rref(a: Matrix) -> Tuple[Matrix, Tuple[int, ...]]:
    rows = [list(r) for r in a._data]
    pivots = _rref(rows, a.cols)
    return Matrix(a.rows, a.cols, rows), tuple(pivots)


def rank(a: Matrix) -> int:
    rows = _prepared_rows(a)
    return len(_rref(rows, a.cols))


def solve(a: Matrix, b: Sequence[Fraction]) -> Optional[Vector]:
    """Some ``x`` with ``a @ x == b``, or ``None`` if inconsistent.

    Free variables (non-pivot columns) are set to zero.
    """
    if a.rows != len(b):
        raise DimensionMismatch(f"matrix has {a.rows} rows but right-hand side has {len(b)}")
    b = vector(b)
    rows = _prepared_rows(a, b)
    pivots = _rref(rows, a.cols)
    for row in rows[len(pivots):]:
        if row[a.cols]:
            return None
    x = [ZERO] * a.cols
    for r, c in enumerate(pivots):
        x[c] = rows[r][a.cols]
    return tuple(x)


def kernel_basis(a: Matrix) -> list:
    """Basis of ``{x : a @ x == 0}`` read off the reduced echelon form.

    One vector per free column ``f``: ``x[f] = 1``, other free entries 0.
    """
    rows = _prepared_rows(a)
    pivots = _rref(rows, a.cols)
    pivot_set = set(pivots)
    basis = []
    for f in range(a.cols):
        if f in pivot_set:
            continue
        x = [ZERO] * a.cols
        x[f] = ONE
        for r, c in enumerate(pivots):
            x[c] = -rows[r][f]
        basis.append(tuple(x))
    return basis


def inverse(a: Matrix) -> Optional[Matrix]:
    """Inverse of a square matrix, ``None`` when singular."""
    if a.rows != a.cols:
        raise DimensionMismatch(f"cannot invert a {a.shape} matrix")
    n = a.rows
    rows = [list(r) + list(unit_vector(n, i)) for i, r in enumerate(a._data)]
    pivots = _rref(rows, n)
    if len(pivots) != n:
        return None
    return Matrix(n, n, [r[n:] for r in rows])


def solve_matrix(a: Matrix, b: Matrix) -> Optional[Matrix]:
    """Some ``x`` with ``a @ x == b`` (column by column), or ``None``."""
    cols = []
    for j in range(b.cols):
        x = solve(a, b.col(j))
        if x is None:
            return None
        cols.append(x)
    return Matrix.from_columns(cols, a.cols)
