"""
Row-space subspaces in canonical reduced echelon form, and full flags.

Two subspaces are equal iff their stored bases are identical, so the
dataclass equality is set equality.
"""
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from src.exceptions import AmbientMismatch
from src.linalg.matrix import Matrix, nullspace, rref, solve_particular
from src.linalg.scalar import ScalarLike, Vector, as_vector, combine, unit_vector


@dataclass(frozen=True)
class Subspace:
    """Subspace of Q^ambient_dim with its unique reduced echelon basis."""

    ambient_dim: int
    basis: Tuple[Vector, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> Tuple[int, ...]:
        return tuple(next(j for j, x in enumerate(row) if x != 0) for row in self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def basis_matrix(self) -> Matrix:
        """Basis vectors as rows."""
        return Matrix(self.basis, self.ambient_dim)

    def _check(self, other: 'Subspace'):
        if self.ambient_dim != other.ambient_dim:
            raise AmbientMismatch('ambient dimensions %d and %d differ' % (self.ambient_dim, other.ambient_dim))

    def solve_in_span(self, v: Sequence[ScalarLike]) -> Optional[Vector]:
        """Coefficients of v on the canonical basis, or None if v is not a member."""
        v = as_vector(v)
        if len(v) != self.ambient_dim:
            raise AmbientMismatch('vector of length %d in ambient %d' % (len(v), self.ambient_dim))
        coefficients = tuple(v[pc] for pc in self.pivots)
        if combine(coefficients, self.basis, self.ambient_dim) != v:
            return None
        return coefficients

    def contains(self, v: Sequence[ScalarLike]) -> bool:
        return self.solve_in_span(v) is not None

    def __contains__(self, v) -> bool:
        return self.contains(v)

    def is_subspace_of(self, other: 'Subspace') -> bool:
        self._check(other)
        return all(other.contains(b) for b in self.basis)

    def __le__(self, other: 'Subspace') -> bool:
        return self.is_subspace_of(other)

    def __lt__(self, other: 'Subspace') -> bool:
        return self.is_subspace_of(other) and self.dim < other.dim

    def sum(self, other: 'Subspace') -> 'Subspace':
        self._check(other)
        return canonicalize(self.basis + other.basis, self.ambient_dim)

    def __add__(self, other: 'Subspace') -> 'Subspace':
        return self.sum(other)

    def annihilator(self) -> 'Subspace':
        """Functionals vanishing on self, in dual coordinates."""
        return canonicalize(nullspace(self.basis, self.ambient_dim), self.ambient_dim)

    def intersect(self, other: 'Subspace') -> 'Subspace':
        """A ∩ B = ann(ann(A) + ann(B))."""
        self._check(other)
        return self.annihilator().sum(other.annihilator()).annihilator()

    def __and__(self, other: 'Subspace') -> 'Subspace':
        return self.intersect(other)

    def image(self, matrix: Matrix) -> 'Subspace':
        """Image of self under a square matrix acting on columns."""
        return canonicalize([matrix.apply(b) for b in self.basis], matrix.nrows)

    def preimage(self, matrix: Matrix) -> 'Subspace':
        """{x : matrix x in self}."""
        functionals = [matrix.transpose().apply(y) for y in self.annihilator().basis]
        return canonicalize(nullspace(functionals, matrix.ncols), matrix.ncols)

    def is_stable(self, matrix: Matrix) -> bool:
        return all(self.contains(matrix.apply(b)) for b in self.basis)

    def complement_basis(self) -> List[Vector]:
        """Standard basis vectors at the non-pivot columns (a complement)."""
        pivots = set(self.pivots)
        return [unit_vector(self.ambient_dim, j) for j in range(self.ambient_dim) if j not in pivots]

    def sort_key(self):
        return self.dim, self.basis


def canonicalize(rows: Iterable[Sequence[ScalarLike]], ambient_dim: int) -> Subspace:
    """Row space of ``rows`` in unique reduced echelon form (idempotent)."""
    data = [as_vector(r) for r in rows]
    if any(len(r) != ambient_dim for r in data):
        raise AmbientMismatch('rows of inconsistent width for ambient %d' % ambient_dim)
    reduced, _ = rref(data, ambient_dim)
    return Subspace(ambient_dim, tuple(tuple(row) for row in reduced))


def zero_subspace(n: int) -> Subspace:
    return Subspace(n, ())


def full_space(n: int) -> Subspace:
    return canonicalize([unit_vector(n, i) for i in range(n)], n)


def span(vectors: Iterable[Sequence[ScalarLike]], ambient_dim: int) -> Subspace:
    return canonicalize(vectors, ambient_dim)


def coordinate_subspace(n: int, indices: Iterable[int]) -> Subspace:
    return canonicalize([unit_vector(n, i) for i in indices], n)


def sum_all(spaces: Sequence[Subspace], ambient_dim: int) -> Subspace:
    rows: List[Vector] = []
    for space in spaces:
        rows.extend(space.basis)
    return canonicalize(rows, ambient_dim)


def express(vectors: Sequence[Vector], v: Sequence[ScalarLike]) -> Optional[Vector]:
    """Coefficients of v on an arbitrary (independent) list of vectors, or None."""
    return solve_particular(list(vectors), as_vector(v))


@dataclass(frozen=True)
class Flag:
    """Full flag: step i is the span of the first i vectors."""

    vectors: Tuple[Vector, ...]

    @classmethod
    def from_vectors(cls, vectors: Iterable[Sequence[ScalarLike]]) -> 'Flag':
        data = tuple(as_vector(v) for v in vectors)
        n = len(data)
        if any(len(v) != n for v in data):
            raise AmbientMismatch('a full flag in dimension %d needs %d vectors of length %d' % (n, n, n))
        if canonicalize(data, n).dim != n:
            raise ValueError('flag vectors are linearly dependent')
        return cls(data)

    @property
    def ambient_dim(self) -> int:
        return len(self.vectors)

    def step(self, i: int) -> Subspace:
        """F_i, with F_0 = 0 and F_n the whole space."""
        return canonicalize(self.vectors[:i], self.ambient_dim)

    def steps(self) -> List[Subspace]:
        return [self.step(i) for i in range(self.ambient_dim + 1)]

    def basis_matrix(self) -> Matrix:
        """Flag vectors as columns."""
        return Matrix.from_columns(self.vectors, nrows=self.ambient_dim)


def intersect(a: Subspace, b: Subspace) -> Subspace:
    return a.intersect(b)


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    return a.sum(b)


def annihilator(a: Subspace) -> Subspace:
    return a.annihilator()


def solve_in_span(a: Subspace, v: Sequence[ScalarLike]) -> Optional[Vector]:
    return a.solve_in_span(v)
