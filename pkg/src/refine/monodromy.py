"""
The graded monodromy N_F and critical indices.

For each i, N_F sends the class of v_i either to zero (when
N(F_i) = N(F_{i-1})) or to a nonzero multiple of the class of v_j, where
j is minimal with N(F_i) inside N(F_{i-1}) + F_j.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from src.exceptions import NotCritical
from src.linalg.matrix import Matrix, solve_particular
from src.logger import logging
from src.refine.refinement import Refinement


@dataclass(frozen=True)
class GradedTarget:
    """N_F(class of v_i) = coefficient * class of v_j."""

    j: int
    coefficient: Fraction


@dataclass(frozen=True)
class MonodromySolution:
    """N(v_i) = sum_k a_k N(v_k) + z with z in F_j; ``a`` runs over k < i."""

    target: GradedTarget
    a: Tuple[Fraction, ...]
    z: Tuple[Fraction, ...]


@dataclass(frozen=True)
class GradedMonodromy:
    targets: Tuple[Optional[GradedTarget], ...]

    @property
    def n(self) -> int:
        return len(self.targets)

    def target(self, i: int) -> Optional[GradedTarget]:
        """Target of index i (1-based), None for Zero."""
        return self.targets[i - 1]

    def critical_pairs(self) -> List[Tuple[int, int]]:
        pairs = [(tg.j, i) for i, tg in enumerate(self.targets, start=1) if tg is not None]
        return sorted(pairs)

    def is_injective(self) -> bool:
        hit = [tg.j for tg in self.targets if tg is not None]
        return len(hit) == len(set(hit))

    def matrix(self) -> Matrix:
        """Matrix of N_F on the graded basis; column i holds the image of class i."""
        rows = [[Fraction(0)] * self.n for _ in range(self.n)]
        for i, tg in enumerate(self.targets):
            if tg is not None:
                rows[tg.j - 1][i] = tg.coefficient
        return Matrix.from_rows(rows, ncols=self.n)

    def chains(self) -> List[Tuple[int, ...]]:
        """
        Maximal chains i -> j -> ... of the oriented graph of N_F, listed from
        their sources; isolated vertices are chains of length one.
        """
        hit = {tg.j for tg in self.targets if tg is not None}
        out: List[Tuple[int, ...]] = []
        for start in range(1, self.n + 1):
            if start in hit:
                continue
            chain = [start]
            while self.target(chain[-1]) is not None:
                chain.append(self.target(chain[-1]).j)
            out.append(tuple(chain))
        return out

    def as_dict(self) -> Dict[int, Optional[GradedTarget]]:
        return {i: tg for i, tg in enumerate(self.targets, start=1)}


def solve_graded(refinement: Refinement, i: int) -> Optional[MonodromySolution]:
    """Decompose N(v_i) along N(F_{i-1}) + F_j for the minimal j."""
    module = refinement.base
    n_vector = module.monodromy.apply(refinement.vector(i))
    images = [module.monodromy.apply(refinement.vector(k)) for k in range(1, i)]
    if solve_particular(images, n_vector) is not None:
        return None
    for j in range(1, i):
        columns = images + [refinement.vector(k) for k in range(1, j + 1)]
        solution = solve_particular(columns, n_vector)
        if solution is None:
            continue
        a = solution[:i - 1]
        z = solution[i - 1:]
        return MonodromySolution(GradedTarget(j, z[-1]), tuple(a), tuple(z))
    raise AssertionError('N(v_%d) does not lie in F_%d' % (i, i - 1))


def graded_monodromy(refinement: Refinement) -> GradedMonodromy:
    targets = []
    for i in range(1, refinement.n + 1):
        solution = solve_graded(refinement, i)
        targets.append(solution.target if solution is not None else None)
    graded = GradedMonodromy(tuple(targets))
    logging.debug('graded monodromy targets %s', graded.critical_pairs())
    return graded


def critical_indices(refinement: Refinement) -> List[Tuple[int, int]]:
    """Pairs (s, t_F(s)) sorted by s."""
    pairs = graded_monodromy(refinement).critical_pairs()
    logging.info('critical pairs %s', pairs)
    return pairs


def critical_partner(refinement: Refinement, s: int) -> int:
    """
    t_F(s).

    Raises
    ------
    NotCritical
        If no class is sent onto the class of v_s.
    """
    for j, t in graded_monodromy(refinement).critical_pairs():
        if j == s:
            return t
    logging.error('Index %d is not critical', s)
    raise NotCritical(s)
