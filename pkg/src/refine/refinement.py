"""
Refinements: full flags of phi,N-stable subspaces and their orderings.

A refinement F fixes the ordering alpha_1..alpha_n of the eigenvalues of
phi (phi acts on F_i/F_{i-1} by alpha_i) and the ordering k_1..k_n of
the Hodge weights (the induced filtration on F_i/F_{i-1} jumps at k_i).
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import List, Sequence, Tuple

from src.exceptions import AmbientMismatch, NotStable
from src.linalg.matrix import Matrix
from src.linalg.scalar import ScalarLike, Vector
from src.linalg.subspace import Flag, Subspace
from src.logger import logging
from src.modules.admissibility import eigenlines, successor_map
from src.modules.eigen import Eigenprojector, eigenbasis
from src.modules.phin_module import FilteredPhiNModule, require_valid


@dataclass(frozen=True)
class Refinement:
    base: FilteredPhiNModule
    flag: Flag
    alphas: Tuple[Fraction, ...]
    ks: Tuple[int, ...]

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def p(self) -> int:
        return self.base.p

    @cached_property
    def basis(self) -> Matrix:
        """Flag vectors as columns."""
        return self.flag.basis_matrix()

    @cached_property
    def to_flag_coordinates(self) -> Matrix:
        return self.basis.inverse()

    @cached_property
    def projector(self) -> Eigenprojector:
        return Eigenprojector(self.base.phi)

    def vector(self, i: int) -> Vector:
        """v_i, 1-based."""
        return self.flag.vectors[i - 1]

    def step(self, i: int) -> Subspace:
        """F_i, 0 <= i <= n."""
        return self.flag.step(i)

    def coordinates(self, v: Sequence[ScalarLike]) -> Vector:
        """Coordinates of v on the flag vectors."""
        return self.to_flag_coordinates.apply(v)

    def in_flag_basis(self) -> FilteredPhiNModule:
        return self.base.in_basis(self.basis)

    def graded_piece(self, lo: int, hi: int) -> FilteredPhiNModule:
        """F_hi / F_lo written on the classes of v_{lo+1}..v_hi."""
        return self.in_flag_basis().block(lo, hi)


def _first_unstable_step(module: FilteredPhiNModule, flag: Flag) -> int:
    for i in range(1, flag.ambient_dim + 1):
        step = flag.step(i)
        if not (step.is_stable(module.phi) and step.is_stable(module.monodromy)):
            return i
    return 0


def induced_jump(module: FilteredPhiNModule, flag: Flag, i: int) -> int:
    """The unique jump of the induced filtration on F_i/F_{i-1}."""
    upper, lower = flag.step(i), flag.step(i - 1)
    jump = None
    for j, space in module.filtration.steps:
        if space.intersect(upper).dim - space.intersect(lower).dim == 1:
            jump = j
    if jump is None:
        raise AssertionError('graded piece %d carries no filtration jump' % i)
    return jump


def make_refinement(module: FilteredPhiNModule, flag: Flag) -> Refinement:
    """
    Validate a flag and compute its eigenvalue and Hodge weight orderings.

    Raises
    ------
    InvalidModule
        If the module itself is invalid.
    NotStable
        Naming the first step that is not stable by phi and N.
    NotSemisimple, IrrationalEigenvalues
        If phi is not diagonalizable over Q.
    """
    require_valid(module)
    if flag.ambient_dim != module.n:
        raise AmbientMismatch('flag of dimension %d for a module of dimension %d' % (flag.ambient_dim, module.n))
    eigenbasis(module.phi)
    unstable = _first_unstable_step(module, flag)
    if unstable:
        logging.error('Flag step F_%d is not stable by phi and N', unstable)
        raise NotStable(unstable)
    in_flag = module.in_basis(flag.basis_matrix())
    alphas = tuple(in_flag.phi[i, i] for i in range(module.n))
    ks = tuple(induced_jump(module, flag, i) for i in range(1, module.n + 1))
    logging.debug('refinement with alphas %s and ks %s', [str(a) for a in alphas], ks)
    return Refinement(module, flag, alphas, ks)


def refinement_from_vectors(module: FilteredPhiNModule, vectors: Sequence[Sequence[ScalarLike]]) -> Refinement:
    return make_refinement(module, Flag.from_vectors(vectors))


def enumerate_refinements(module: FilteredPhiNModule) -> List[Flag]:
    """
    Every refinement, as orderings of the eigenlines whose prefixes are
    N-closed; depth-first in ascending eigenvalue order.

    Raises
    ------
    RepeatedEigenvalues
        If phi does not have pairwise-distinct eigenvalues.
    """
    lines = eigenlines(module)
    successors = successor_map(module, lines)
    flags: List[Flag] = []

    def extend(order: List[int]):
        if len(order) == len(lines):
            flags.append(Flag.from_vectors([lines[i] for i in order]))
            return
        for i in range(len(lines)):
            if i in order:
                continue
            if successors[i] is None or successors[i] in order:
                extend(order + [i])

    extend([])
    logging.info('found %d refinement(s)', len(flags))
    return flags
