"""
Random instances for the sweeps and the property tests.

Every instance is planted in a perfect basis and then moved to random
coordinates, so the flag, the eigenvalue orderings and (for maximal
monodromy) the Hodge transform are known in advance.
"""
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from src.config import section
from src.linalg.matrix import Matrix
from src.linalg.subspace import Flag
from src.logger import logging
from src.modules.phin_module import FilteredPhiNModule
from src.refine.refinement import Refinement, make_refinement


@dataclass(frozen=True)
class RandomInstanceConfig:
    seed: int = 20141
    min_dimension: int = 2
    max_dimension: int = 5
    primes: Tuple[int, ...] = (2, 3)
    coefficient_bound: int = 4
    weight_range: Tuple[int, int] = (-2, 3)

    @classmethod
    def from_params(cls, params: dict) -> 'RandomInstanceConfig':
        values = section(params, 'random_instances')
        return cls(int(values['seed']), int(values['min_dimension']), int(values['max_dimension']),
                   tuple(int(p) for p in values['primes']), int(values['coefficient_bound']),
                   tuple(int(w) for w in values['weight_range']))

    def dimension(self, rng: random.Random) -> int:
        return rng.randint(self.min_dimension, self.max_dimension)

    def prime(self, rng: random.Random) -> int:
        return rng.choice(self.primes)


@dataclass(frozen=True)
class PlantedMaxMonodromy:
    module: FilteredPhiNModule
    ell: Matrix
    ks: Tuple[int, ...]

    def superdiagonal(self) -> List[Fraction]:
        return [self.ell[s - 1, s] for s in range(1, self.module.n)]


@dataclass(frozen=True)
class PlantedJumpLine:
    """A refinement whose index s is strongly critical with t >= s + 2 and L_{F,s} = ``l_value``."""

    refinement: Refinement
    s: int
    t: int
    l_value: Fraction


def random_invertible(rng: random.Random, n: int, bound: int) -> Matrix:
    while True:
        candidate = Matrix.from_rows([[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)], ncols=n)
        if candidate.determinant() != 0:
            return candidate


def _unit(rng: random.Random, p: int) -> int:
    return rng.choice([1, 1, -1, p + 1])


def _planted_monodromy(rng: random.Random, p: int, alphas: Sequence[Fraction], bound: int) -> Matrix:
    """Strictly upper triangular with entry (j, i) allowed only when alpha_i = p alpha_j."""
    n = len(alphas)
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i):
            if alphas[i] == p * alphas[j]:
                rows[j][i] = rng.randint(-bound, bound)
    return Matrix.from_rows(rows, ncols=n)


def _graded_filtration(weights: Sequence[int], generators: Sequence[Sequence[Fraction]]):
    return [(m, [g for g, w in zip(generators, weights) if w >= m]) for m in sorted(set(weights))]


def _move(p: int, phi: Matrix, monodromy: Matrix, filtration, change: Matrix) -> FilteredPhiNModule:
    """Write the module given in the planted basis in the coordinates where that basis is ``change``."""
    inverse = change.inverse()
    moved = [(m, [change.apply(g) for g in gens]) for m, gens in filtration]
    return FilteredPhiNModule.build(p, (change @ phi @ inverse).rows, (change @ monodromy @ inverse).rows, moved)


def _planted_module(rng: random.Random, p: int, alphas: Sequence[Fraction],
                    config: RandomInstanceConfig) -> Tuple[FilteredPhiNModule, Matrix]:
    n = len(alphas)
    bound = config.coefficient_bound
    phi = Matrix.diagonal(alphas)
    monodromy = _planted_monodromy(rng, p, alphas, bound)
    lo, hi = config.weight_range
    weights = [rng.randint(lo, hi) for _ in range(n)]
    generators = random_invertible(rng, n, bound).columns()
    change = random_invertible(rng, n, bound)
    return _move(p, phi, monodromy, _graded_filtration(weights, generators), change), change


def random_alphas(rng: random.Random, p: int, n: int, distinct: bool = False) -> List[Fraction]:
    """Eigenvalues u p^c with small c, biased towards p-power chains."""
    while True:
        alphas = [Fraction(_unit(rng, p)) * Fraction(p) ** rng.randint(-1, n - 1) for _ in range(n)]
        if not distinct or len(set(alphas)) == n:
            return alphas


def random_refinement(rng: random.Random, config: RandomInstanceConfig) -> Refinement:
    """A random module with the refinement given by its planted perfect basis."""
    n, p = config.dimension(rng), config.prime(rng)
    module, change = _planted_module(rng, p, random_alphas(rng, p, n), config)
    refinement = make_refinement(module, Flag.from_vectors(change.columns()))
    logging.debug('random refinement: p=%d, alphas %s, ks %s', p, [str(a) for a in refinement.alphas],
                  refinement.ks)
    return refinement


def random_distinct_module(rng: random.Random, config: RandomInstanceConfig) -> FilteredPhiNModule:
    """A random module whose phi has pairwise-distinct rational eigenvalues."""
    n, p = config.dimension(rng), config.prime(rng)
    alphas = random_alphas(rng, p, n, distinct=True)
    rng.shuffle(alphas)
    module, _ = _planted_module(rng, p, alphas, config)
    return module


def planted_max_monodromy(rng: random.Random, config: RandomInstanceConfig,
                          n: int = None) -> PlantedMaxMonodromy:
    """
    phi = diag(alpha_n p^{i-n}), N e_i = e_{i-1}, strictly increasing weights
    k_i and Fil^m spanned by f_i = e_i + sum_{j<i} l_{j,i} e_j for k_i >= m.
    """
    n = max(n or config.dimension(rng), 2)
    p = config.prime(rng)
    bound = config.coefficient_bound
    top = Fraction(_unit(rng, p)) * Fraction(p) ** rng.randint(-1, 2)
    alphas = [top * Fraction(p) ** (i - n) for i in range(1, n + 1)]
    shift = Matrix.from_rows([[1 if j == i + 1 else 0 for j in range(n)] for i in range(n)], ncols=n)
    lo, hi = config.weight_range
    ks = tuple(sorted(rng.sample(range(lo, max(hi, lo + n - 1) + 1), n)))
    ell = Matrix.from_rows([[1 if i == j else (rng.randint(-bound, bound) if i < j else 0) for j in range(n)]
                            for i in range(n)], ncols=n)
    change = random_invertible(rng, n, bound)
    module = _move(p, Matrix.diagonal(alphas), shift, _graded_filtration(ks, ell.columns()), change)
    return PlantedMaxMonodromy(module, ell, ks)


def _middle_kinds(rng: random.Random, count: int) -> List[str]:
    """'s' and 't' for alpha_s- and alpha_t-eigenvectors killed by N, 'other' for a third eigenvalue."""
    kinds = ['s', 't'] if count >= 2 else [rng.choice(['s', 't'])]
    kinds += [rng.choice(['s', 't', 'other']) for _ in range(count - len(kinds))]
    rng.shuffle(kinds)
    return kinds


def planted_jump_line(rng: random.Random, config: RandomInstanceConfig, n: int = None) -> PlantedJumpLine:
    """
    Plant F_t/F_{s-1} = E e_s + M + E e_t with N(e_t) = e_s, phi(e_t) = p alpha_s e_t
    and a middle block M of eigenvectors killed by N, optionally between a
    leading line and a trailing alpha_t-line with N(e) = mu e_s.

    On the piece Fil^b is everything and Fil^{b+g} is spanned by e_t + L e_s
    and the alpha_t-part of M, so every choice of hyperplane in the
    alpha_s-part of M and every lift of e_t along the alpha_t-part gives a
    perfect s-decomposition with the same L.
    """
    n = max(n or config.dimension(rng), 3)
    p = config.prime(rng)
    bound = config.coefficient_bound
    lo, hi = config.weight_range
    leading = n > 3 and rng.random() < 0.5
    trailing = n - 3 - int(leading) > 0 and rng.random() < 0.5
    kinds = _middle_kinds(rng, n - 2 - int(leading) - int(trailing))

    alpha_s = Fraction(_unit(rng, p)) * Fraction(p) ** rng.randint(-1, 1)
    eigenvalue = {'s': alpha_s, 't': p * alpha_s, 'other': p * p * alpha_s}
    base, gap = rng.randint(lo, hi), rng.randint(1, 2)
    l_value = Fraction(rng.randint(-bound, bound), rng.randint(1, 3))

    layout = (['lead'] if leading else []) + ['s'] + kinds + ['t'] + (['trail'] if trailing else [])
    s, t = layout.index('s') + 1, len(kinds) + layout.index('s') + 2
    alphas = [eigenvalue.get(kind, p * alpha_s) for kind in layout]
    weights = [base + gap if kind == 't' else base for kind in layout]
    monodromy = [[0] * n for _ in range(n)]
    monodromy[s - 1][t - 1] = 1
    if leading:
        alphas[0] = Fraction(_unit(rng, p)) * Fraction(p) ** rng.randint(-1, 2)
        weights[0] = rng.randint(lo, hi)
    if trailing:
        monodromy[s - 1][n - 1] = rng.randint(-bound, bound)
        weights[-1] = rng.randint(lo, hi)

    generators = [[Fraction(int(r == c)) for r in range(n)] for c in range(n)]
    generators[t - 1][s - 1] = l_value
    change = random_invertible(rng, n, bound)
    module = _move(p, Matrix.diagonal(alphas), Matrix.from_rows(monodromy, ncols=n),
                   _graded_filtration(weights, generators), change)
    refinement = make_refinement(module, Flag.from_vectors(change.columns()))
    logging.debug('planted jump line: p=%d, layout %s, (s, t) = (%d, %d), L = %s', p, layout, s, t, l_value)
    return PlantedJumpLine(refinement, s, t, l_value)
