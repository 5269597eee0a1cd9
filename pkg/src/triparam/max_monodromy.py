"""
Modules with maximal monodromy (rank N = n - 1).

The refinement is forced: F_i = span(e_1, ..., e_i) with e_i = N^{n-i} e_n
for an eigenvector e_n outside N(D). With strictly increasing weights the
Hodge filtration has a compatible basis f_i = e_i + sum_{j<i} l_{j,i} e_j,
and l_{s,s+1} is the L-invariant L_{F,s}.
"""
from dataclasses import dataclass
from typing import List, Tuple

from src.exceptions import (ConsistencyError, IrrationalEigenvalues, NoCompatibleTransform,
                            NoRationalEigenvector, NotSemisimple, WeightsNotStrict, WrongMonodromyRank)
from src.linalg.matrix import Matrix
from src.linalg.scalar import Vector
from src.linalg.subspace import Flag, canonicalize
from src.logger import logging
from src.modules.eigen import eigenbasis
from src.modules.phin_module import FilteredPhiNModule, require_valid
from src.refine.l_invariant import l_invariant_report
from src.refine.refinement import Refinement, make_refinement


@dataclass(frozen=True)
class HodgeTransform:
    """Unit upper-triangular (l_{j,i}); column i holds f_i on e_1..e_n."""

    ell: Matrix
    weights: Tuple[int, ...]

    def entry(self, j: int, i: int):
        """l_{j,i}, 1-based."""
        return self.ell[j - 1, i - 1]

    def superdiagonal(self) -> List:
        return [self.entry(s, s + 1) for s in range(1, self.ell.nrows)]


@dataclass(frozen=True)
class MaxMonodromyResult:
    refinement: Refinement
    transform: HodgeTransform
    l_values: Tuple

    @property
    def flag(self) -> Flag:
        return self.refinement.flag


def monodromy_chain(module: FilteredPhiNModule) -> List[Vector]:
    """
    e_1, ..., e_n with e_i = N^{n-i} e_n.

    Raises
    ------
    WrongMonodromyRank, NoRationalEigenvector
    """
    n = module.n
    rank = module.monodromy.rank()
    if rank != n - 1:
        logging.error('rank N = %d, expected %d', rank, n - 1)
        raise WrongMonodromyRank('rank of N is %d, maximal monodromy needs %d' % (rank, n - 1))
    try:
        eigenvectors = [v for _, v in eigenbasis(module.phi)]
    except (IrrationalEigenvalues, NotSemisimple) as e:
        logging.error('No rational eigenbasis for phi: %s', e)
        raise NoRationalEigenvector(str(e))
    image = canonicalize(module.monodromy.columns(), n)
    top = next((v for v in eigenvectors if not image.contains(v)), None)
    if top is None:
        raise NoRationalEigenvector('every eigenvector of phi lies in N(D)')
    chain = [top]
    for _ in range(n - 1):
        chain.append(module.monodromy.apply(chain[-1]))
    return list(reversed(chain))


def hodge_transform(refinement: Refinement) -> HodgeTransform:
    """
    Solve for l from weight k_n down: f_i spans Fil^{k_i} ∩ F_i and is
    normalized to e_i-coefficient 1.

    Raises
    ------
    WeightsNotStrict
        If k_1 < ... < k_n fails.
    NoCompatibleTransform
        If the resulting f_i do not reproduce the filtration.
    """
    n, ks = refinement.n, refinement.ks
    if any(a >= b for a, b in zip(ks, ks[1:])):
        logging.error('Weights %s are not strictly increasing along the flag', ks)
        raise WeightsNotStrict('weights along the flag are %s' % (ks,))
    columns: List[Vector] = [()] * n
    for i in range(n, 0, -1):
        line = refinement.base.fil(ks[i - 1]).intersect(refinement.step(i))
        if line.dim != 1:
            raise NoCompatibleTransform('Fil^%d ∩ F_%d has dimension %d' % (ks[i - 1], i, line.dim))
        coordinates = refinement.coordinates(line.basis[0])
        if coordinates[i - 1] == 0:
            raise NoCompatibleTransform('Fil^%d ∩ F_%d lies in F_%d' % (ks[i - 1], i, i - 1))
        columns[i - 1] = tuple(c / coordinates[i - 1] for c in coordinates)
    for jump, space in refinement.base.filtration.steps:
        members = [refinement.basis.apply(columns[i]) for i in range(n) if ks[i] >= jump]
        if canonicalize(members, n) != space:
            raise NoCompatibleTransform('the f_i with k_i >= %d do not span Fil^%d' % (jump, jump))
    return HodgeTransform(Matrix.from_columns(columns, nrows=n), tuple(ks))


def max_monodromy_refinement(module: FilteredPhiNModule) -> MaxMonodromyResult:
    """
    The canonical refinement of a maximal-monodromy module, its Hodge
    transform and (l_{1,2}, ..., l_{n-1,n}), cross-checked against the
    L-invariants computed from s-decompositions.

    Raises
    ------
    WrongMonodromyRank, WeightsNotStrict, NoRationalEigenvector
    ConsistencyError
        If some l_{s,s+1} differs from L_{F,s}.
    """
    require_valid(module)
    refinement = make_refinement(module, Flag.from_vectors(monodromy_chain(module)))
    transform = hodge_transform(refinement)
    l_values = tuple(transform.superdiagonal())
    report = l_invariant_report(refinement)
    for s, value in enumerate(l_values, start=1):
        entry = report.entry(s)
        if entry is None or entry.l_value != value:
            logging.error('l_{%d,%d} = %s but L_{F,%d} = %s', s, s + 1, value, s,
                          None if entry is None else entry.l_value)
            raise ConsistencyError('l_{%d,%d} differs from L_{F,%d}' % (s, s + 1, s))
    logging.info('maximal monodromy l-values %s', [str(v) for v in l_values])
    return MaxMonodromyResult(refinement, transform, l_values)
