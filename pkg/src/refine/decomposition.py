"""
Perfect bases and s-decompositions.

Coordinates on F_t/F_{s-1} are always taken on the classes of the flag
vectors v_s..v_t, so position 0 is the first step of the induced flag and
position t-s its last vector.
"""
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from src.exceptions import InvalidDecomposition
from src.linalg.matrix import Matrix
from src.linalg.scalar import (ScalarLike, Vector, add_vectors, as_vector, combine, is_zero_vector,
                               normalize_leading, scale_vector, sub_vectors)
from src.linalg.subspace import Subspace, canonicalize, coordinate_subspace, span
from src.logger import logging
from src.modules.filtration import Filtration
from src.modules.phin_module import FilteredPhiNModule
from src.refine.monodromy import critical_partner, solve_graded
from src.refine.refinement import Refinement


def perfect_basis(refinement: Refinement) -> List[Vector]:
    """
    e_1..e_n with span(e_1..e_r) = F_r and phi(e_i) = alpha_i e_i.

    e_i is the alpha_i-eigencomponent of v_i, scaled to leading coefficient 1.
    """
    projector = refinement.projector
    return [normalize_leading(projector.component(refinement.vector(i), refinement.alphas[i - 1]))
            for i in range(1, refinement.n + 1)]


def critical_perfect_basis(refinement: Refinement, s: int) -> List[Vector]:
    """A perfect basis with N(e_t) = e_s for t = t_F(s)."""
    t = critical_partner(refinement, s)
    solution = solve_graded(refinement, t)
    x = sub_vectors(refinement.vector(t),
                    combine(solution.a, [refinement.vector(k) for k in range(1, t)], refinement.n))
    e_t = refinement.projector.component(x, refinement.alphas[t - 1])
    basis = perfect_basis(refinement)
    basis[t - 1] = e_t
    basis[s - 1] = refinement.base.monodromy.apply(e_t)
    return basis


def quotient_coordinates(refinement: Refinement, s: int, t: int, v: Sequence[ScalarLike]) -> Vector:
    """Class of v in F_t/F_{s-1}."""
    return refinement.coordinates(v)[s - 1:t]


def lift(refinement: Refinement, s: int, coordinates: Sequence[ScalarLike]) -> Vector:
    """The lift sum_k c_k v_{s+k} with no component along F_{s-1}."""
    padded = [Fraction(0)] * (s - 1) + list(as_vector(coordinates))
    padded += [Fraction(0)] * (refinement.n - len(padded))
    return refinement.basis.apply(padded)


@dataclass(frozen=True)
class PieceShape:
    """Shape of a 2-dimensional filtration on span(e_s, e_t)."""

    case: int
    lo: int
    hi: int
    coefficient: Optional[Fraction]


def classify_piece(filtration: Filtration) -> PieceShape:
    lo, hi = filtration.weights()
    if lo == hi:
        return PieceShape(3, lo, hi, None)
    a, b = filtration.at(hi).basis[0]
    if b == 0:
        return PieceShape(2, lo, hi, None)
    return PieceShape(1, lo, hi, a / b)


@dataclass(frozen=True)
class SDecomposition:
    """
    F_t/F_{s-1} = E e_s ⊕ L ⊕ E e_t with the shapes of the filtration on
    the sub-object span(e_s, e_t) (``case_sub``) and on the quotient by L
    (``case_quot``, printed with a prime).
    """

    s: int
    t: int
    e_bar_s: Vector
    e_bar_t: Vector
    middle: Subspace
    case_sub: int
    case_quot: int
    k_prime_s: Optional[int]
    k_prime_t: Optional[int]
    l_dec: Optional[Fraction]
    l_dec_prime: Optional[Fraction]

    @property
    def perfect(self) -> bool:
        return (self.case_sub == 1 and self.case_quot == 1
                and self.k_prime_s is not None and self.k_prime_t is not None
                and self.k_prime_s < self.k_prime_t)


def _decomposition_problems(piece: FilteredPhiNModule, alpha_t: Fraction, e_bar_s: Vector,
                            e_bar_t: Vector, middle: Subspace) -> List[str]:
    d = piece.n
    problems = []
    if piece.phi.apply(e_bar_t) != scale_vector(alpha_t, e_bar_t):
        problems.append('e_t is not an eigenvector for alpha_t = %s' % alpha_t)
    if is_zero_vector(e_bar_s) or not coordinate_subspace(d, [0]).contains(e_bar_s):
        problems.append('N(e_t) does not span the first step of the induced flag')
    if e_bar_t[-1] == 0:
        problems.append('e_t lies in the penultimate step of the induced flag')
    penultimate = coordinate_subspace(d, range(d - 1))
    if middle.dim != d - 2 or not middle <= penultimate or middle.contains(e_bar_s) \
            or middle + span([e_bar_s], d) != penultimate:
        problems.append('E e_s ⊕ L is not the penultimate step of the induced flag')
    ends = span([e_bar_s, e_bar_t], d)
    for name, space in (('L', middle), ('span(e_s, e_t)', ends)):
        if not (space.is_stable(piece.phi) and space.is_stable(piece.monodromy)):
            problems.append('%s is not stable by phi and N' % name)
    return problems


def classify_decomposition(refinement: Refinement, s: int, e_bar_t: Sequence[ScalarLike],
                           middle: Subspace) -> SDecomposition:
    """
    Classify the filtration shapes of an s-decomposition given by e_t and L
    (both in F_t/F_{s-1} coordinates).

    Raises
    ------
    NotCritical
        If s is not critical.
    InvalidDecomposition
        If the data violate a defining condition of an s-decomposition.
    """
    t = critical_partner(refinement, s)
    d = t - s + 1
    piece = refinement.graded_piece(s - 1, t)
    e_bar_t = as_vector(e_bar_t)
    if len(e_bar_t) != d or middle.ambient_dim != d:
        raise InvalidDecomposition('decomposition data must live in dimension %d' % d)
    e_bar_s = piece.monodromy.apply(e_bar_t)
    problems = _decomposition_problems(piece, refinement.alphas[t - 1], e_bar_s, e_bar_t, middle)
    if problems:
        logging.error('Invalid %d-decomposition: %s', s, problems)
        raise InvalidDecomposition('; '.join(problems))

    adapted = piece.in_basis(Matrix.from_columns([e_bar_s] + list(middle.basis) + [e_bar_t], nrows=d))
    ends = coordinate_subspace(d, [0, d - 1])
    sub_steps = [(j, canonicalize([(b[0], b[-1]) for b in space.intersect(ends).basis], 2))
                 for j, space in adapted.filtration.steps]
    quot_steps = [(j, canonicalize([(b[0], b[-1]) for b in space.basis], 2))
                  for j, space in adapted.filtration.steps]
    sub = classify_piece(Filtration.normalized(2, sub_steps))
    quot = classify_piece(Filtration.normalized(2, quot_steps))
    k_prime_t = {1: sub.hi, 2: sub.lo}.get(sub.case)
    k_prime_s = {1: quot.lo, 2: quot.hi}.get(quot.case)
    decomposition = SDecomposition(s, t, e_bar_s, e_bar_t, middle, sub.case, quot.case,
                                   k_prime_s, k_prime_t, sub.coefficient, quot.coefficient)
    logging.debug('%d-decomposition: case %d / %d\', perfect=%s', s, sub.case, quot.case, decomposition.perfect)
    return decomposition


def _captures(space_rows: List[Vector], candidate: Vector, target: Vector, d: int) -> bool:
    return canonicalize(space_rows + [candidate], d).contains(target)


def _hyperplane(seed_rows: List[Vector], pool: List[Vector], target: Vector, size: int, d: int) -> List[Vector]:
    """Extend ``seed_rows`` by members of ``pool`` to dimension ``size`` without capturing ``target``."""
    rows = list(seed_rows)
    for candidate in pool:
        current = canonicalize(rows, d)
        if current.dim >= size:
            break
        if current.contains(candidate) or _captures(rows, candidate, target, d):
            continue
        rows.append(candidate)
    return rows


def _random_combinations(rng: random.Random, vectors: Sequence[Vector], d: int, count: int) -> List[Vector]:
    return [combine([rng.randint(-3, 3) for _ in vectors], vectors, d) for _ in range(count)]


def canonical_middle(refinement: Refinement, s: int, t: int, e_bars: Sequence[Vector], piece: FilteredPhiNModule,
                     rng: Optional[random.Random] = None) -> Tuple[Subspace, Vector]:
    """
    L = (⊕_{alpha != alpha_s} L~^alpha) ⊕ L^{alpha_s} where L^{alpha_s} is a
    hyperplane of L~^{alpha_s} containing N(L~^{alpha_t}) and not e_s.

    ``e_bars`` are the classes of e_s..e_t of a perfect basis with
    N(e_t) = e_s. Without ``rng`` the hyperplane completes N(L~^{alpha_t})
    by the classes e_i in order; with ``rng`` it uses random combinations
    and e_t is shifted by a random element of ker(N) ∩ L~^{alpha_t}.
    Returns (L, e_t).
    """
    d = t - s + 1
    alphas = refinement.alphas[s - 1:t]
    alpha_s, alpha_t = alphas[0], alphas[-1]
    eigen = {}
    for k in range(d - 1):
        eigen.setdefault(alphas[k], []).append(e_bars[k])
    e_bar_s, e_bar_t = e_bars[0], e_bars[-1]
    s_space = eigen.get(alpha_s, [])
    t_space = eigen.get(alpha_t, [])
    seed = list(canonicalize([piece.monodromy.apply(v) for v in t_space], d).basis)
    pool = list(s_space)
    if rng is not None:
        pool = _random_combinations(rng, s_space, d, 4 * len(s_space) + 4) + pool
    hyperplane = _hyperplane(seed, pool, e_bar_s, len(s_space) - 1, d)
    others = [v for alpha, vectors in eigen.items() if alpha != alpha_s for v in vectors]
    middle = canonicalize(others + hyperplane, d)
    if rng is not None and t_space:
        kernel = canonicalize(t_space, d).intersect(canonicalize(piece.monodromy.kernel(), d))
        if kernel.dim:
            shift = _random_combinations(rng, list(kernel.basis), d, 1)[0]
            e_bar_t = add_vectors(e_bar_t, shift)
    return middle, e_bar_t


def s_decomposition(refinement: Refinement, s: int, rng: Optional[random.Random] = None) -> SDecomposition:
    """
    Build and classify an s-decomposition from a perfect basis with N(e_t) = e_s.

    Raises
    ------
    NotCritical
        If s is not critical.
    """
    t = critical_partner(refinement, s)
    basis = critical_perfect_basis(refinement, s)
    piece = refinement.graded_piece(s - 1, t)
    e_bars = [quotient_coordinates(refinement, s, t, basis[i - 1]) for i in range(s, t + 1)]
    middle, e_bar_t = canonical_middle(refinement, s, t, e_bars, piece, rng)
    return classify_decomposition(refinement, s, e_bar_t, middle)
