"""Exact dense linear algebra over the rationals or a prime field.

Matrices are lists of rows.  Rational entries are ints or Fractions; prime
field entries are ints reduced into range.  Elimination skips zero entries,
which keeps the typical very sparse incidence matrices cheap.
"""
from __future__ import annotations

from fractions import Fraction


class Field:
    """Coefficient field: ``p is None`` means the rationals."""

    def __init__(self, p: int | None = None):
        if p is not None:
            if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
                raise ValueError(f"{p} is not prime")
        self.p = p

    def __repr__(self):
        return "QQ" if self.p is None else f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(self.p)

    def convert(self, x):
        if self.p is None:
            if isinstance(x, (int, Fraction)):
                return x
            return Fraction(x)
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def inv(self, x):
        if self.p is None:
            return Fraction(1) / x
        return pow(x, -1, self.p)

    def reduce(self, x):
        return x if self.p is None else x % self.p


QQ = Field()


def parse_field(text: str) -> Field:
    """``q`` for the rationals, ``fp:<p>`` for a prime field."""
    if text in ("q", "Q", "QQ"):
        return QQ
    if text.startswith("fp:"):
        return Field(int(text[3:]))
    raise ValueError(f"unknown field {text!r}")


def rref(rows, ncols: int, field: Field = QQ):
    """Reduced row echelon form.  Returns (nonzero rows, pivot columns)."""
    p = field.p
    rows = [list(r) for r in rows]
    nrows = len(rows)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        lead = prow[c]
        if lead != 1:
            inv = field.inv(lead)
            if p is None:
                for j in range(c, ncols):
                    if prow[j]:
                        prow[j] = prow[j] * inv
            else:
                for j in range(c, ncols):
                    if prow[j]:
                        prow[j] = prow[j] * inv % p
        nz = [j for j in range(c, ncols) if prow[j]]
        for i in range(nrows):
            if i == r:
                continue
            row = rows[i]
            f = row[c]
            if not f:
                continue
            if p is None:
                for j in nz:
                    row[j] -= f * prow[j]
            else:
                for j in nz:
                    row[j] = (row[j] - f * prow[j]) % p
        pivots.append(c)
        r += 1
    return rows[:r], pivots


class Matrix:
    """Immutable-by-convention exact matrix."""

    __slots__ = ("rows", "nrows", "ncols", "field")

    def __init__(self, rows, ncols: int | None = None, field: Field = QQ):
        self.rows = [list(r) for r in rows]
        self.nrows = len(self.rows)
        if ncols is None:
            ncols = len(self.rows[0]) if self.rows else 0
        self.ncols = ncols
        self.field = field
        for r in self.rows:
            if len(r) != ncols:
                raise ValueError("ragged matrix")
        if field.p is not None:
            self.rows = [[field.convert(x) for x in r] for r in self.rows]

    @classmethod
    def zeros(cls, nrows, ncols, field=QQ):
        return cls([[0] * ncols for _ in range(nrows)], ncols, field)

    @classmethod
    def identity(cls, n, field=QQ):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], n, field)

    @classmethod
    def from_columns(cls, cols, nrows: int, field=QQ):
        cols = [list(c) for c in cols]
        return cls([[c[i] for c in cols] for i in range(nrows)], len(cols), field)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __repr__(self):
        return f"Matrix({self.rows!r}, {self.ncols})"

    def __eq__(self, other):
        if not isinstance(other, Matrix) or self.shape != other.shape:
            return NotImplemented if not isinstance(other, Matrix) else False
        return all(a == b for ra, rb in zip(self.rows, other.rows) for a, b in zip(ra, rb))

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j):
        return [r[j] for r in self.rows]

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    def is_zero(self):
        return not any(x for r in self.rows for x in r)

    def transpose(self):
        return Matrix([[r[j] for r in self.rows] for j in range(self.ncols)], self.nrows, self.field)

    T = property(transpose)

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        p = self.field.p
        out = []
        orows = other.rows
        n = other.ncols
        for r in self.rows:
            acc = [0] * n
            for k, a in enumerate(r):
                if a:
                    for j, b in enumerate(orows[k]):
                        if b:
                            acc[j] += a * b
            if p is not None:
                acc = [x % p for x in acc]
            out.append(acc)
        return Matrix(out, n, self.field)

    def apply(self, vec):
        p = self.field.p
        out = []
        for r in self.rows:
            s = 0
            for a, b in zip(r, vec):
                if a and b:
                    s += a * b
            out.append(s % p if p is not None else s)
        return out

    def __add__(self, other):
        f = self.field.reduce
        return Matrix([[f(a + b) for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)],
                      self.ncols, self.field)

    def __sub__(self, other):
        f = self.field.reduce
        return Matrix([[f(a - b) for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)],
                      self.ncols, self.field)

    def __neg__(self):
        f = self.field.reduce
        return Matrix([[f(-a) for a in r] for r in self.rows], self.ncols, self.field)

    def scale(self, c):
        f = self.field.reduce
        c = self.field.convert(c)
        return Matrix([[f(c * a) for a in r] for r in self.rows], self.ncols, self.field)

    def hstack(self, *others):
        mats = (self,) + others
        rows = [sum((m.rows[i] for m in mats), []) for i in range(self.nrows)]
        return Matrix(rows, sum(m.ncols for m in mats), self.field)

    def vstack(self, *others):
        rows = []
        for m in (self,) + others:
            rows.extend(m.rows)
        return Matrix(rows, self.ncols, self.field)

    def submatrix(self, row_idx, col_idx):
        return Matrix([[self.rows[i][j] for j in col_idx] for i in row_idx], len(col_idx), self.field)

    def rref(self):
        return rref(self.rows, self.ncols, self.field)

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel(self) -> Matrix:
        """Basis of the null space, as the columns of the result."""
        return _kernel(self)

    def image(self) -> Matrix:
        """Independent columns spanning the column space."""
        _, piv = self.rref()
        return Matrix.from_columns([self.column(j) for j in piv], self.nrows, self.field)


def _kernel(m: Matrix) -> Matrix:
    rows, piv = m.rref()
    free = [j for j in range(m.ncols) if j not in set(piv)]
    cols = []
    f = m.field.reduce
    for fc in free:
        v = [0] * m.ncols
        v[fc] = 1
        for r, pc in zip(rows, piv):
            if r[fc]:
                v[pc] = f(-r[fc])
        cols.append(v)
    return Matrix.from_columns(cols, m.ncols, m.field)


def rank_kernel_image(m: Matrix):
    """Rank, kernel basis and image basis (both as matrix columns)."""
    rows, piv = m.rref()
    return len(piv), _kernel(m), Matrix.from_columns([m.column(j) for j in piv], m.nrows, m.field)


def solve(m: Matrix, rhs: Matrix):
    """A particular solution X of m X = rhs, or None when inconsistent."""
    if rhs.nrows != m.nrows:
        raise ValueError("rhs has wrong number of rows")
    aug = m.hstack(rhs)
    rows, piv = aug.rref()
    if any(c >= m.ncols for c in piv):
        return None
    x = [[0] * rhs.ncols for _ in range(m.ncols)]
    for r, pc in zip(rows, piv):
        for j in range(rhs.ncols):
            x[pc][j] = r[m.ncols + j]
    return Matrix(x, rhs.ncols, m.field)


def intersect_subspaces(bases, dim: int | None = None, field: Field = QQ) -> Matrix:
    """Intersection of column spans.  Every basis must share the ambient dimension."""
    bases = list(bases)
    if not bases:
        raise ValueError("need at least one subspace")
    amb = bases[0].nrows if dim is None else dim
    for b in bases:
        if b.nrows != amb:
            raise ValueError("ambient dimension mismatch")
    cur = bases[0].image() if bases[0].ncols else Matrix.zeros(amb, 0, field)
    for b in bases[1:]:
        if cur.ncols == 0 or b.ncols == 0:
            return Matrix.zeros(amb, 0, cur.field)
        k = cur.hstack(-b).kernel()
        if k.ncols == 0:
            return Matrix.zeros(amb, 0, cur.field)
        coeffs = k.submatrix(range(cur.ncols), range(k.ncols))
        cur = (cur @ coeffs).image()
    return cur


def extend_to_basis(sub: Matrix, vectors: Matrix):
    """Indices of columns of ``vectors`` that extend span(sub) to span(sub + vectors)."""
    aug = sub.hstack(vectors) if sub.ncols else vectors
    _, piv = aug.rref()
    return [c - sub.ncols for c in piv if c >= sub.ncols]


def in_span(basis: Matrix, vec) -> bool:
    col = Matrix.from_columns([vec], len(vec), basis.field)
    if basis.ncols == 0:
        return not any(vec)
    return solve(basis, col) is not None
