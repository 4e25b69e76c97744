"""Dense exact linear algebra over cyclotomic scalars.

Plain Gauss-Jordan elimination with exact field arithmetic.  Pivot rows are
chosen among candidates by structural sparsity (fewest nonzero entries) to
limit coefficient blowup; all results are exact, there is no tolerance
anywhere.  Matrices up to a few hundred rows invert in seconds to minutes
depending on the coefficient field.
"""

from __future__ import annotations

from .scalars import CycField, CycScalar, ScalarError


class LinAlgError(ValueError):
    pass


class Matrix:
    __slots__ = ("rows", "cols", "data", "field")

    def __init__(self, field: CycField, data: list[list[CycScalar]]):
        self.field = field
        self.data = data
        self.rows = len(data)
        self.cols = len(data[0]) if data else 0
        for row in data:
            if len(row) != self.cols:
                raise LinAlgError("ragged matrix data")

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_rows(cls, field: CycField, rows) -> "Matrix":
        conv = []
        for row in rows:
            out = []
            for x in row:
                if not isinstance(x, CycScalar):
                    x = field.from_rational(x)
                elif x.field is not field:
                    if x.field.order == 1:
                        x = field.from_rational(x.coeffs[0])
                    elif field.order != x.field.order:
                        raise ScalarError("matrix entries of incompatible order")
                out.append(x)
            conv.append(out)
        return cls(field, conv)

    @classmethod
    def identity(cls, field: CycField, n: int) -> "Matrix":
        z, o = field.zero, field.one
        return cls(field, [[o if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, field: CycField, rows: int, cols: int) -> "Matrix":
        z = field.zero
        return cls(field, [[z] * cols for _ in range(rows)])

    # -- basic access -------------------------------------------------------

    @property
    def entries(self) -> list[CycScalar]:
        """Row-major flat entry list."""
        return [x for row in self.data for x in row]

    def at(self, i: int, j: int) -> CycScalar:
        return self.data[i][j]

    def copy(self) -> "Matrix":
        return Matrix(self.field, [list(row) for row in self.data])

    def transpose(self) -> "Matrix":
        return Matrix(self.field, [list(col) for col in zip(*self.data)])

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and all(a == b for ra, rb in zip(self.data, other.data) for a, b in zip(ra, rb))
        )

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise LinAlgError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        zero = self.field.zero
        bt = other.transpose().data
        out = []
        for row in self.data:
            nz = [(k, x) for k, x in enumerate(row) if x]
            orow = []
            for col in bt:
                acc = zero
                for k, x in nz:
                    y = col[k]
                    if y:
                        acc = acc + x * y
                orow.append(acc)
            out.append(orow)
        return Matrix(self.field, out)

    def is_symmetric(self) -> bool:
        if self.rows != self.cols:
            return False
        for i in range(self.rows):
            for j in range(i + 1, self.cols):
                if self.data[i][j] != self.data[j][i]:
                    return False
        return True

    def is_identity(self) -> bool:
        if self.rows != self.cols:
            return False
        one = self.field.one
        for i, row in enumerate(self.data):
            for j, x in enumerate(row):
                if i == j:
                    if x != one:
                        return False
                elif x:
                    return False
        return True

    # -- elimination --------------------------------------------------------

    def _eliminate(self, aug: int = 0):
        """In-place Gauss-Jordan on self.data; last `aug` columns ride along.

        Returns (rank, pivot column list).  Pivot search covers only the
        first cols - aug columns.
        """
        data = self.data
        nrows = self.rows
        ncols = self.cols - aug
        pivots: list[int] = []
        r = 0
        for c in range(ncols):
            best = -1
            best_nnz = None
            for i in range(r, nrows):
                if data[i][c]:
                    nnz = sum(1 for x in data[i] if x)
                    if best_nnz is None or nnz < best_nnz:
                        best, best_nnz = i, nnz
            if best < 0:
                continue
            if best != r:
                data[r], data[best] = data[best], data[r]
            prow = data[r]
            pv = prow[c]
            if pv != 1:
                inv = pv.inverse()
                data[r] = prow = [x * inv if x else x for x in prow]
            pnz = [(j, x) for j, x in enumerate(prow) if x and j >= c]
            for i in range(nrows):
                if i == r:
                    continue
                row = data[i]
                f = row[c]
                if f:
                    for j, x in pnz:
                        row[j] = row[j] - f * x
            pivots.append(c)
            r += 1
            if r == nrows:
                break
        return r, pivots

    def rref(self) -> tuple["Matrix", int, list[int]]:
        """Reduced row echelon form, rank and pivot columns (exact)."""
        work = self.copy()
        rank, pivots = work._eliminate()
        return work, rank, pivots

    def rank(self) -> int:
        return self.copy()._eliminate()[0]

    def solve(self, rhs: "Matrix"):
        """An exact solution of self @ x = rhs, or None if inconsistent.

        The returned solution (free variables set to zero) is re-verified by
        multiplication before being handed back.
        """
        if rhs.rows != self.rows:
            raise LinAlgError("rhs row count mismatch")
        zero = self.field.zero
        aug = Matrix(self.field, [list(a) + list(b) for a, b in zip(self.data, rhs.data)])
        rank, pivots = aug._eliminate(aug=rhs.cols)
        n = self.cols
        for i in range(rank, self.rows):
            if any(aug.data[i][n:]):
                return None
        x = [[zero] * rhs.cols for _ in range(n)]
        for r, c in enumerate(pivots):
            x[c] = aug.data[r][n:]
        sol = Matrix(self.field, x)
        if self @ sol != rhs:
            raise LinAlgError("internal error: solution failed residual check")
        return sol

    def inverse(self) -> "Matrix":
        if self.rows != self.cols:
            raise LinAlgError("inverse of non-square matrix")
        n = self.rows
        ident = Matrix.identity(self.field, n)
        aug = Matrix(self.field, [list(a) + list(b) for a, b in zip(self.data, ident.data)])
        rank, _ = aug._eliminate(aug=n)
        if rank < n:
            raise LinAlgError(f"singular matrix (rank {rank} < {n})")
        return Matrix(self.field, [row[n:] for row in aug.data])

    def nullspace(self) -> list[list[CycScalar]]:
        """Basis of the right nullspace, one vector per free column."""
        red, rank, pivots = self.rref()
        zero, one = self.field.zero, self.field.one
        pivot_set = set(pivots)
        free = [c for c in range(self.cols) if c not in pivot_set]
        basis = []
        for fc in free:
            v = [zero] * self.cols
            v[fc] = one
            for r, c in enumerate(pivots):
                x = red.data[r][fc]
                if x:
                    v[c] = -x
            basis.append(v)
        return basis

    # -- rendering ----------------------------------------------------------

    def to_csv(self) -> str:
        return "\n".join(",".join(str(x) for x in row) for row in self.data) + "\n"

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols} over Q(zeta_{self.field.order}))"


class PreparedSolver:
    """Factor a coefficient matrix once, solve many right-hand sides.

    Stores the row-reduction transform T with T @ A in RREF; each solve is a
    matrix-vector product plus a consistency scan.
    """

    def __init__(self, a: Matrix):
        self.field = a.field
        self.ncols = a.cols
        self.nrows = a.rows
        ident = Matrix.identity(a.field, a.rows)
        aug = Matrix(a.field, [list(r) + list(i) for r, i in zip(a.data, ident.data)])
        self.rank, self.pivots = aug._eliminate(aug=a.rows)
        n = a.cols
        self.transform = [row[n:] for row in aug.data]
        self.unique = self.rank == a.cols

    def solve(self, vec: list[CycScalar]):
        """Solution coordinates (free vars zero) or None if inconsistent."""
        if len(vec) != self.nrows:
            raise LinAlgError("vector length mismatch")
        zero = self.field.zero
        nz = [(k, x) for k, x in enumerate(vec) if x]
        y = []
        for row in self.transform:
            acc = zero
            for k, x in nz:
                t = row[k]
                if t:
                    acc = acc + t * x
            y.append(acc)
        for i in range(self.rank, self.nrows):
            if y[i]:
                return None
        out = [zero] * self.ncols
        for r, c in enumerate(self.pivots):
            out[c] = y[r]
        return out
