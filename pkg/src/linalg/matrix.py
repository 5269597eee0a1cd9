"""
Immutable exact matrices over the rationals.

Column-action convention: a linear map sends basis vector j to the
combination of basis vectors given by column j.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from src.exceptions import AmbientMismatch
from src.linalg.scalar import ScalarLike, Vector, as_scalar


def _to_array(rows, nrows: int, ncols: int) -> np.ndarray:
    array = np.empty((nrows, ncols), dtype=object)
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            array[i, j] = x
    return array


def rref(rows: Sequence[Sequence[Fraction]], ncols: int) -> Tuple[List[List[Fraction]], List[int]]:
    """
    Reduced row echelon form by Gauss-Jordan elimination.

    Returns the nonzero rows (leading coefficient 1) and their pivot columns.
    """
    m = [list(r) for r in rows]
    pivots: List[int] = []
    piv_r = 0
    n_rows = len(m)
    for piv_c in range(ncols):
        if piv_r >= n_rows:
            break
        for i_row in range(piv_r, n_rows):
            if m[i_row][piv_c] != 0:
                break
        else:
            continue
        if i_row != piv_r:
            m[piv_r], m[i_row] = m[i_row], m[piv_r]
        fp = m[piv_r][piv_c]
        if fp != 1:
            m[piv_r] = [x / fp for x in m[piv_r]]
        for r in range(n_rows):
            if r == piv_r:
                continue
            fr = m[r][piv_c]
            if fr == 0:
                continue
            prow = m[piv_r]
            m[r] = [a - fr * b for a, b in zip(m[r], prow)]
        pivots.append(piv_c)
        piv_r += 1
    return m[:piv_r], pivots


def nullspace(rows: Sequence[Sequence[Fraction]], ncols: int) -> List[Vector]:
    """Basis of {x : rows . x = 0}, one vector per free column."""
    reduced, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, pc in zip(reduced, pivots):
            x[pc] = -row[f]
        basis.append(tuple(x))
    return basis


def solve_particular(columns: Sequence[Vector], target: Vector) -> Optional[Vector]:
    """
    One solution c of sum c_k columns[k] = target (free variables set to 0),
    or None when the system is inconsistent.
    """
    n = len(target)
    k = len(columns)
    augmented = [[columns[j][i] for j in range(k)] + [target[i]] for i in range(n)]
    reduced, pivots = rref(augmented, k + 1)
    if k in pivots:
        return None
    solution = [Fraction(0)] * k
    for row, pc in zip(reduced, pivots):
        solution[pc] = row[k]
    return tuple(solution)


@dataclass(frozen=True)
class Matrix:
    """Rectangular exact matrix stored as a tuple of rows."""

    rows: Tuple[Tuple[Fraction, ...], ...]
    ncols: int

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[ScalarLike]], ncols: Optional[int] = None) -> 'Matrix':
        data = tuple(tuple(as_scalar(x) for x in row) for row in rows)
        if ncols is None:
            ncols = len(data[0]) if data else 0
        if any(len(r) != ncols for r in data):
            raise AmbientMismatch('rows of inconsistent width')
        return cls(data, ncols)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[ScalarLike]], nrows: Optional[int] = None) -> 'Matrix':
        if nrows is None:
            nrows = len(columns[0]) if columns else 0
        return cls.from_rows(([columns[j][i] for j in range(len(columns))] for i in range(nrows)),
                             ncols=len(columns))

    @classmethod
    def identity(cls, n: int) -> 'Matrix':
        return cls.from_rows(([1 if i == j else 0 for j in range(n)] for i in range(n)), ncols=n)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> 'Matrix':
        return cls.from_rows(([0] * ncols for _ in range(nrows)), ncols=ncols)

    @classmethod
    def diagonal(cls, entries: Sequence[ScalarLike]) -> 'Matrix':
        n = len(entries)
        return cls.from_rows(([entries[i] if i == j else 0 for j in range(n)] for i in range(n)), ncols=n)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, index):
        i, j = index
        return self.rows[i][j]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.rows)

    def columns(self) -> List[Vector]:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> 'Matrix':
        return Matrix.from_columns(self.rows, nrows=self.ncols)

    def _array(self) -> np.ndarray:
        return _to_array(self.rows, self.nrows, self.ncols)

    @classmethod
    def _from_array(cls, array: np.ndarray) -> 'Matrix':
        nrows, ncols = array.shape
        return cls(tuple(tuple(as_scalar(array[i, j]) for j in range(ncols)) for i in range(nrows)), ncols)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise AmbientMismatch('cannot multiply %s by %s' % (self.shape, other.shape))
            if self.ncols == 0:
                return Matrix.zeros(self.nrows, other.ncols)
            return Matrix._from_array(np.dot(self._array(), other._array()))
        return self.apply(other)

    def apply(self, vector: Sequence[ScalarLike]) -> Vector:
        """Image of a coordinate vector."""
        if len(vector) != self.ncols:
            raise AmbientMismatch('vector of length %d for %s matrix' % (len(vector), self.shape))
        v = [as_scalar(x) for x in vector]
        return tuple(sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in self.rows)

    def __add__(self, other: 'Matrix') -> 'Matrix':
        if self.shape != other.shape:
            raise AmbientMismatch('shape mismatch %s vs %s' % (self.shape, other.shape))
        return Matrix(tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)), self.ncols)

    def __neg__(self) -> 'Matrix':
        return Matrix(tuple(tuple(-a for a in r) for r in self.rows), self.ncols)

    def __sub__(self, other: 'Matrix') -> 'Matrix':
        return self + (-other)

    def scale(self, c: ScalarLike) -> 'Matrix':
        c = as_scalar(c)
        return Matrix(tuple(tuple(c * a for a in r) for r in self.rows), self.ncols)

    def kron(self, other: 'Matrix') -> 'Matrix':
        """Kronecker product; basis e_i (x) f_j sits at index i*dim(f) + j."""
        if 0 in self.shape or 0 in other.shape:
            return Matrix.zeros(self.nrows * other.nrows, self.ncols * other.ncols)
        return Matrix._from_array(np.kron(self._array(), other._array()))

    def power(self, k: int) -> 'Matrix':
        result = Matrix.identity(self.nrows)
        for _ in range(k):
            result = result @ self
        return result

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.rows for x in row)

    def rank(self) -> int:
        return len(rref(self.rows, self.ncols)[1])

    def kernel(self) -> List[Vector]:
        return nullspace(self.rows, self.ncols)

    def determinant(self) -> Fraction:
        if not self.is_square:
            raise AmbientMismatch('determinant of a non-square matrix')
        m = [list(r) for r in self.rows]
        n = self.nrows
        det = Fraction(1)
        for c in range(n):
            pivot = next((r for r in range(c, n) if m[r][c] != 0), None)
            if pivot is None:
                return Fraction(0)
            if pivot != c:
                m[c], m[pivot] = m[pivot], m[c]
                det = -det
            det *= m[c][c]
            for r in range(c + 1, n):
                f = m[r][c] / m[c][c]
                if f != 0:
                    m[r] = [a - f * b for a, b in zip(m[r], m[c])]
        return det

    def inverse(self) -> 'Matrix':
        if not self.is_square:
            raise AmbientMismatch('inverse of a non-square matrix')
        n = self.nrows
        augmented = [list(r) + [Fraction(1) if i == j else Fraction(0) for j in range(n)]
                     for i, r in enumerate(self.rows)]
        reduced, pivots = rref(augmented, 2 * n)
        if pivots[:n] != list(range(n)) or len(reduced) < n:
            raise ZeroDivisionError('matrix is singular')
        return Matrix(tuple(tuple(row[n:]) for row in reduced), n)

    def solve(self, target: Sequence[ScalarLike]) -> Optional[Vector]:
        """A particular solution x of self @ x = target, or None."""
        return solve_particular(self.columns(), tuple(as_scalar(x) for x in target))

    def submatrix(self, row_indices: Sequence[int], col_indices: Sequence[int]) -> 'Matrix':
        return Matrix(tuple(tuple(self.rows[i][j] for j in col_indices) for i in row_indices), len(col_indices))

    def conjugate_by(self, basis: 'Matrix') -> 'Matrix':
        """Matrix of the same map in the basis given by the columns of ``basis``."""
        return basis.inverse() @ self @ basis
