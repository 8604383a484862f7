"""Dense matrices over any exact ring descriptor, with exact determinants.

The default determinant is fraction-free Bareiss elimination: intermediate
divisions are exact over an integral domain.  Laurent entries are first
scaled row-by-row by monomials to clear negative exponents; the product of
the clearing monomials is divided back out of the result.  A cofactor
expansion is kept as an independent oracle path for small sizes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import MatrixError, RingError
from .rings import LaurentRing, RingElement, embed


@dataclass(frozen=True)
class RingMatrix:
    descriptor: object
    rows: int
    cols: int
    entries: tuple  # row-major tuple of tuples of RingElement

    def __post_init__(self):
        if len(self.entries) != self.rows or any(
            len(row) != self.cols for row in self.entries
        ):
            raise MatrixError("entry grid does not match declared shape")

    @staticmethod
    def from_rows(descriptor, rows):
        rows = tuple(tuple(r) for r in rows)
        for row in rows:
            for e in row:
                if e.descriptor != descriptor:
                    raise MatrixError("entry descriptor mismatch")
        return RingMatrix(descriptor, len(rows), len(rows[0]) if rows else 0, rows)

    @staticmethod
    def identity(descriptor, size):
        one = RingElement.one(descriptor)
        zero = RingElement.zero(descriptor)
        return RingMatrix(
            descriptor,
            size,
            size,
            tuple(
                tuple(one if i == j else zero for j in range(size))
                for i in range(size)
            ),
        )

    @staticmethod
    def zero(descriptor, rows, cols):
        z = RingElement.zero(descriptor)
        return RingMatrix(
            descriptor, rows, cols, tuple(tuple(z for _ in range(cols)) for _ in range(rows))
        )

    def __getitem__(self, key):
        i, j = key
        return self.entries[i][j]

    def _check(self, other, same_shape):
        if self.descriptor != other.descriptor:
            raise MatrixError("descriptor mismatch")
        if same_shape and (self.rows, self.cols) != (other.rows, other.cols):
            raise MatrixError("shape mismatch")

    def __add__(self, other):
        self._check(other, same_shape=True)
        return RingMatrix(
            self.descriptor,
            self.rows,
            self.cols,
            tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            ),
        )

    def __sub__(self, other):
        self._check(other, same_shape=True)
        return RingMatrix(
            self.descriptor,
            self.rows,
            self.cols,
            tuple(
                tuple(a - b for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            ),
        )

    def __mul__(self, other):
        if isinstance(other, RingElement):
            return self.scale(other)
        self._check(other, same_shape=False)
        if self.cols != other.rows:
            raise MatrixError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        zero = RingElement.zero(self.descriptor)
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = zero
                for k in range(self.cols):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            out.append(tuple(row))
        return RingMatrix(self.descriptor, self.rows, other.cols, tuple(out))

    def scale(self, scalar):
        return RingMatrix(
            self.descriptor,
            self.rows,
            self.cols,
            tuple(tuple(scalar * e for e in row) for row in self.entries),
        )

    def __neg__(self):
        return RingMatrix(
            self.descriptor,
            self.rows,
            self.cols,
            tuple(tuple(-e for e in row) for row in self.entries),
        )

    def __pow__(self, n):
        if self.rows != self.cols:
            raise MatrixError("power of a non-square matrix")
        if n < 0:
            return self.inverse() ** (-n)
        out = RingMatrix.identity(self.descriptor, self.rows)
        for _ in range(n):
            out = out * self
        return out

    def transpose(self):
        return RingMatrix(
            self.descriptor,
            self.cols,
            self.rows,
            tuple(
                tuple(self.entries[i][j] for i in range(self.rows))
                for j in range(self.cols)
            ),
        )

    def submatrix(self, row_indices, col_indices):
        return RingMatrix(
            self.descriptor,
            len(row_indices),
            len(col_indices),
            tuple(
                tuple(self.entries[i][j] for j in col_indices) for i in row_indices
            ),
        )

    def map_entries(self, fn, descriptor=None):
        descriptor = descriptor if descriptor is not None else self.descriptor
        return RingMatrix(
            descriptor,
            self.rows,
            self.cols,
            tuple(tuple(fn(e) for e in row) for row in self.entries),
        )

    def embed_into(self, target):
        return self.map_entries(lambda e: embed(e, target), target)

    def determinant(self):
        return determinant(self)

    def inverse(self):
        """Adjugate inverse; requires the determinant to be a unit."""
        if self.rows != self.cols:
            raise MatrixError("inverse of a non-square matrix")
        det = determinant(self)
        if not det.is_unit:
            raise MatrixError("matrix is not invertible over its ring")
        inv_det = det.invert_unit()
        n = self.rows
        if n == 0:
            return self
        cof = []
        for i in range(n):
            row = []
            for j in range(n):
                minor = self.submatrix(
                    [r for r in range(n) if r != j], [c for c in range(n) if c != i]
                )
                m = determinant_cofactor(minor)
                row.append(m if (i + j) % 2 == 0 else -m)
            cof.append(row)
        return RingMatrix.from_rows(
            self.descriptor, [[inv_det * e for e in row] for row in cof]
        )

    @property
    def is_invertible(self):
        return self.rows == self.cols and determinant(self).is_unit

    def __str__(self):
        return "\n".join(
            "[" + ", ".join(str(e) for e in row) + "]" for row in self.entries
        )


def block_diag(blocks):
    """Block-diagonal assembly of square matrices over one descriptor."""
    if not blocks:
        raise MatrixError("block_diag of an empty list has no descriptor")
    descriptor = blocks[0].descriptor
    for b in blocks:
        if b.rows != b.cols:
            raise MatrixError("block_diag blocks must be square")
        if b.descriptor != descriptor:
            raise MatrixError("block descriptor mismatch")
    size = sum(b.rows for b in blocks)
    zero = RingElement.zero(descriptor)
    grid = [[zero] * size for _ in range(size)]
    offset = 0
    for b in blocks:
        for i in range(b.rows):
            for j in range(b.cols):
                grid[offset + i][offset + j] = b.entries[i][j]
        offset += b.rows
    return RingMatrix.from_rows(descriptor, grid)


def assemble_blocks(block_grid):
    """Assemble a matrix from a 2-D grid of equally-shaped blocks."""
    rows = []
    for block_row in block_grid:
        height = block_row[0].rows
        for i in range(height):
            rows.append(
                [e for block in block_row for e in block.entries[i]]
            )
    return RingMatrix.from_rows(block_grid[0][0].descriptor, rows)


def _clear_denominators(matrix):
    # Scale each row by a monomial so all exponents are nonnegative; return
    # the scaled matrix and the product of clearing monomials (a unit).
    desc = matrix.descriptor
    if not isinstance(desc, LaurentRing):
        return matrix, RingElement.one(desc)
    nvars = len(desc.variables)
    scale_total = RingElement.one(desc)
    rows = []
    for row in matrix.entries:
        mins = [0] * nvars
        for e in row:
            for exp in e.payload:
                for i, v in enumerate(exp):
                    mins[i] = min(mins[i], v)
        monomial = RingElement.monomial(desc, tuple(-m for m in mins))
        scale_total = scale_total * monomial
        rows.append([monomial * e for e in row])
    return RingMatrix.from_rows(desc, rows), scale_total


def determinant(matrix):
    """Exact determinant by fraction-free Bareiss elimination."""
    if matrix.rows != matrix.cols:
        raise MatrixError("determinant of a non-square matrix")
    n = matrix.rows
    desc = matrix.descriptor
    if n == 0:
        return RingElement.one(desc)
    scaled, clearing = _clear_denominators(matrix)
    a = [list(row) for row in scaled.entries]
    sign = 1
    prev_pivot = RingElement.one(desc)
    for k in range(n - 1):
        if a[k][k].is_zero:
            for r in range(k + 1, n):
                if not a[r][k].is_zero:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return RingElement.zero(desc)
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                value = a[i][j] * pivot - a[i][k] * a[k][j]
                a[i][j] = value.exact_divide(prev_pivot)
            a[i][k] = RingElement.zero(desc)
        prev_pivot = pivot
    det = a[n - 1][n - 1]
    if sign < 0:
        det = -det
    return det.exact_divide(clearing)


def determinant_cofactor(matrix):
    """Cofactor (Laplace) expansion; oracle path for small matrices."""
    if matrix.rows != matrix.cols:
        raise MatrixError("determinant of a non-square matrix")
    n = matrix.rows
    desc = matrix.descriptor
    if n == 0:
        return RingElement.one(desc)
    if n == 1:
        return matrix.entries[0][0]
    total = RingElement.zero(desc)
    cols = list(range(1, n))
    for i in range(n):
        entry = matrix.entries[i][0]
        if entry.is_zero:
            continue
        minor = matrix.submatrix([r for r in range(n) if r != i], cols)
        term = entry * determinant_cofactor(minor)
        total = total + term if i % 2 == 0 else total - term
    return total
