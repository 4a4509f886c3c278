"""Dense exact rational/integer linear algebra.

Provides an immutable :class:`Matrix` of arbitrary-precision rationals
(``fractions.Fraction`` entries) together with the normal forms used by
the rest of the package:

* ``rref`` / ``kernel_basis`` / ``rank`` / ``det`` over Q,
* row-style Hermite normal form ``hnf`` with unimodular transform,
* Smith normal form ``snf`` with both unimodular transforms.

Conventions (fixed once, used everywhere):

* HNF is row-style: ``h = u*m``, pivots positive, entries above pivots
  reduced into ``[0, pivot)``.
* SNF: ``d = u*m*v`` diagonal, nonnegative, each entry dividing the next.
* ``kernel_basis`` returns the echelon basis derived from the RREF free
  columns, so identical inputs yield bit-identical outputs.

No floating point appears anywhere in this module.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .errors import DimensionError, SingularMatrixError


def frac_to_str(x: Fraction) -> str:
    """Render a rational as ``"p/q"`` (``"p"`` when the denominator is 1)."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def str_to_frac(s) -> Fraction:
    """Parse a ``"p/q"`` (or integer) string into a Fraction."""
    if isinstance(s, int):
        return Fraction(s)
    return Fraction(str(s))


class Matrix:
    """Immutable dense matrix with exact rational entries."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data):
        data = tuple(tuple(Fraction(x) for x in row) for row in data)
        if data:
            width = len(data[0])
            if any(len(row) != width for row in data):
                raise DimensionError("ragged rows")
        else:
            width = 0
        object.__setattr__(self, "data", data)
        object.__setattr__(self, "rows", len(data))
        object.__setattr__(self, "cols", width if data else 0)

    def __setattr__(self, *_):
        raise AttributeError("Matrix is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zeros(cls, rows, cols):
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, entries):
        entries = list(entries)
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, columns):
        columns = [list(c) for c in columns]
        return cls(columns).transpose()

    # -- basic access -------------------------------------------------

    def entry(self, i, j) -> Fraction:
        return self.data[i][j]

    def row(self, i):
        return self.data[i]

    def column(self, j):
        return tuple(self.data[i][j] for i in range(self.rows))

    def row_list(self):
        return [list(r) for r in self.data]

    def submatrix(self, row_idx, col_idx):
        return Matrix([[self.data[i][j] for j in col_idx] for i in row_idx])

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.data == other.data

    def __hash__(self):
        return hash(self.data)

    def __repr__(self):
        body = "; ".join(" ".join(frac_to_str(x) for x in row) for row in self.data)
        return f"Matrix[{body}]"

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        self._same_shape(other)
        return Matrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.data, other.data)
            ]
        )

    def __sub__(self, other):
        self._same_shape(other)
        return Matrix(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.data, other.data)
            ]
        )

    def __neg__(self):
        return Matrix([[-a for a in row] for row in self.data])

    def scale(self, c):
        c = Fraction(c)
        return Matrix([[c * a for a in row] for row in self.data])

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        bt = other.transpose().data
        return Matrix(
            [
                [sum(a * b for a, b in zip(row, col)) for col in bt]
                for row in self.data
            ]
        )

    def transpose(self):
        return Matrix(
            [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)]
        )

    def hstack(self, other):
        if self.rows != other.rows:
            raise DimensionError("hstack: row mismatch")
        return Matrix([list(a) + list(b) for a, b in zip(self.data, other.data)])

    def vstack(self, other):
        if self.cols != other.cols:
            raise DimensionError("vstack: column mismatch")
        return Matrix(list(self.data) + list(other.data))

    # -- predicates ---------------------------------------------------

    def is_square(self):
        return self.rows == self.cols

    def is_integral(self):
        return all(x.denominator == 1 for row in self.data for x in row)

    def is_symmetric(self):
        return self.is_square() and all(
            self.data[i][j] == self.data[j][i]
            for i in range(self.rows)
            for j in range(i)
        )

    def is_zero(self):
        return all(x == 0 for row in self.data for x in row)

    def _same_shape(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionError("shape mismatch")

    # -- normal forms over Q ------------------------------------------

    def rref(self):
        """Reduced row echelon form over Q.

        Returns:
            (R, pivots): R the RREF as a Matrix, pivots the list of
            pivot column indices (leftmost-pivot convention).
        """
        m = [list(row) for row in self.data]
        nrows, ncols = self.rows, self.cols
        pivots = []
        prow = 0
        for col in range(ncols):
            sel = next((r for r in range(prow, nrows) if m[r][col] != 0), None)
            if sel is None:
                continue
            m[prow], m[sel] = m[sel], m[prow]
            inv = 1 / m[prow][col]
            m[prow] = [inv * x for x in m[prow]]
            for r in range(nrows):
                if r != prow and m[r][col] != 0:
                    f = m[r][col]
                    m[r] = [a - f * b for a, b in zip(m[r], m[prow])]
            pivots.append(col)
            prow += 1
            if prow == nrows:
                break
        return Matrix(m), pivots

    def rank(self) -> int:
        """Rank over Q via fraction-free (Bareiss) elimination."""
        return _int_rank(_integer_rows(self.data))

    def kernel_basis(self):
        """Echelon basis of the right null space, rows spanning it.

        Each free column contributes one basis row with 1 in that
        column; deterministic by construction.  Row count equals
        ``cols - rank``.
        """
        red, pivots = self.rref()
        free = [c for c in range(self.cols) if c not in pivots]
        basis = []
        for f in free:
            vec = [Fraction(0)] * self.cols
            vec[f] = Fraction(1)
            for r, p in enumerate(pivots):
                vec[p] = -red.data[r][f]
            basis.append(vec)
        out = Matrix(basis)
        return out if basis else Matrix.zeros(0, self.cols)

    def det(self) -> Fraction:
        if not self.is_square():
            raise DimensionError("det requires a square matrix")
        n = self.rows
        m = [list(row) for row in self.data]
        result = Fraction(1)
        for col in range(n):
            sel = next((r for r in range(col, n) if m[r][col] != 0), None)
            if sel is None:
                return Fraction(0)
            if sel != col:
                m[col], m[sel] = m[sel], m[col]
                result = -result
            pivot = m[col][col]
            result *= pivot
            inv = 1 / pivot
            for r in range(col + 1, n):
                if m[r][col] != 0:
                    f = m[r][col] * inv
                    m[r] = [a - f * b for a, b in zip(m[r], m[col])]
        return result

    def inverse(self):
        if not self.is_square():
            raise DimensionError("inverse requires a square matrix")
        aug = self.hstack(Matrix.identity(self.rows))
        red, pivots = aug.rref()
        if pivots != list(range(self.rows)):
            raise SingularMatrixError("matrix is singular")
        return red.submatrix(range(self.rows), range(self.rows, 2 * self.rows))

    # -- serialization ------------------------------------------------

    def to_json(self):
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[frac_to_str(x) for x in row] for row in self.data],
        }

    @classmethod
    def from_json(cls, obj):
        m = cls([[str_to_frac(x) for x in row] for row in obj["entries"]])
        if m.rows != obj["rows"] or m.cols != obj["cols"]:
            raise DimensionError("JSON matrix shape mismatch")
        return m


def _integer_rows(data):
    """Scale each row by its denominator lcm, returning integer row lists."""
    out = []
    for row in data:
        mult = lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * mult) for x in row])
    return out


def _int_rank(rows) -> int:
    """Rank of integer rows by fraction-free Bareiss elimination."""
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    prev = 1
    prow = 0
    for col in range(ncols):
        sel = next((r for r in range(prow, nrows) if m[r][col] != 0), None)
        if sel is None:
            continue
        m[prow], m[sel] = m[sel], m[prow]
        pivot = m[prow][col]
        for r in range(prow + 1, nrows):
            mr, mp = m[r], m[prow]
            f = mr[col]
            m[r] = [(pivot * a - f * b) // prev for a, b in zip(mr, mp)]
        prev = pivot
        prow += 1
        if prow == nrows:
            break
    return prow


# ---------------------------------------------------------------------------
# Hermite and Smith normal forms (integer matrices, with transforms)
# ---------------------------------------------------------------------------


def _require_integral(m: Matrix, what: str):
    if not m.is_integral():
        raise DimensionError(f"{what} requires an integer matrix")


def hnf(m: Matrix):
    """Row-style Hermite normal form.

    Returns:
        (h, u) with ``h = u*m``, ``u`` unimodular, ``h`` in echelon form
        with positive pivots and entries above each pivot reduced into
        ``[0, pivot)``.
    """
    _require_integral(m, "hnf")
    a = [[int(x) for x in row] for row in m.data]
    nrows, ncols = m.rows, m.cols
    u = [[1 if i == j else 0 for j in range(nrows)] for i in range(nrows)]
    prow = 0
    for col in range(ncols):
        # gcd-reduce the column below prow
        while True:
            nz = [r for r in range(prow, nrows) if a[r][col] != 0]
            if not nz:
                break
            sel = min(nz, key=lambda r: abs(a[r][col]))
            if sel != prow:
                a[prow], a[sel] = a[sel], a[prow]
                u[prow], u[sel] = u[sel], u[prow]
            pivot = a[prow][col]
            done = True
            for r in range(prow + 1, nrows):
                if a[r][col] != 0:
                    q = a[r][col] // pivot
                    a[r] = [x - q * y for x, y in zip(a[r], a[prow])]
                    u[r] = [x - q * y for x, y in zip(u[r], u[prow])]
                    if a[r][col] != 0:
                        done = False
            if done:
                break
        if prow < nrows and a[prow][col] != 0:
            if a[prow][col] < 0:
                a[prow] = [-x for x in a[prow]]
                u[prow] = [-x for x in u[prow]]
            pivot = a[prow][col]
            for r in range(prow):
                q = a[r][col] // pivot
                if q:
                    a[r] = [x - q * y for x, y in zip(a[r], a[prow])]
                    u[r] = [x - q * y for x, y in zip(u[r], u[prow])]
            prow += 1
            if prow == nrows:
                break
    return Matrix(a), Matrix(u)


def snf(m: Matrix):
    """Smith normal form.

    Returns:
        (d, u, v) with ``d = u*m*v``; ``u``, ``v`` unimodular; ``d``
        diagonal with nonnegative entries, each dividing the next.
    """
    _require_integral(m, "snf")
    a = [[int(x) for x in row] for row in m.data]
    nrows, ncols = m.rows, m.cols
    u = [[1 if i == j else 0 for j in range(nrows)] for i in range(nrows)]
    v = [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def addmul_row(dst, src, q):
        a[dst] = [x - q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x - q * y for x, y in zip(u[dst], u[src])]

    def addmul_col(dst, src, q):
        for row in a:
            row[dst] -= q * row[src]
        for row in v:
            row[dst] -= q * row[src]

    t = 0
    while t < min(nrows, ncols):
        # locate a nonzero pivot in the trailing block
        pos = None
        best = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < best):
                    best = abs(a[i][j])
                    pos = (i, j)
        if pos is None:
            break
        swap_rows(t, pos[0])
        swap_cols(t, pos[1])
        while True:
            # clear column t
            dirty = False
            for i in range(t + 1, nrows):
                if a[i][t] != 0:
                    q = a[i][t] // a[t][t]
                    addmul_row(i, t, q)
                    if a[i][t] != 0:
                        swap_rows(t, i)
                        dirty = True
            # clear row t
            for j in range(t + 1, ncols):
                if a[t][j] != 0:
                    q = a[t][j] // a[t][t]
                    addmul_col(j, t, q)
                    if a[t][j] != 0:
                        swap_cols(t, j)
                        dirty = True
            if not dirty and all(
                a[i][t] == 0 for i in range(t + 1, nrows)
            ) and all(a[t][j] == 0 for j in range(t + 1, ncols)):
                break
        # enforce divisibility of the remaining block by a[t][t]
        offender = None
        for i in range(t + 1, nrows):
            for j in range(t + 1, ncols):
                if a[i][j] % a[t][t] != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            addmul_row(t, offender, -1)  # a[t] += a[offender]
            continue
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return Matrix(a), Matrix(u), Matrix(v)


def gcd_of(values) -> int:
    """gcd of an iterable of integers (0 for an empty/zero iterable)."""
    g = 0
    for x in values:
        g = gcd(g, int(x))
    return g
