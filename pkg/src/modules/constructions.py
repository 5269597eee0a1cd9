"""Duals, tensor products and induced sub/quotient structures."""
from typing import List, Tuple

from src.exceptions import NotStable, PrimeMismatch
from src.linalg.matrix import Matrix
from src.linalg.subspace import Subspace, canonicalize
from src.logger import logging
from src.modules.filtration import Filtration
from src.modules.phin_module import FilteredPhiNModule


def dual_filtration(filtration: Filtration) -> Filtration:
    """Fil^i(D*) = annihilator(Fil^{1-i}(D)); jumps -j_k carry ann(Fil^{j_k + 1})."""
    n = filtration.ambient_dim
    steps = filtration.steps
    candidates = []
    for k, (jump, _) in enumerate(steps):
        following = steps[k + 1][1] if k + 1 < len(steps) else canonicalize([], n)
        candidates.append((-jump, following.annihilator()))
    return Filtration.normalized(n, candidates)


def dual_module(module: FilteredPhiNModule) -> FilteredPhiNModule:
    """
    The dual D* in the dual basis.

    Frobenius acts by the transpose-inverse, monodromy by minus the
    transpose, so that <N*x, y> = -<x, N y>.
    """
    if module.n == 0:
        return module
    phi = module.phi.inverse().transpose()
    monodromy = -module.monodromy.transpose()
    dual = FilteredPhiNModule(module.p, phi, monodromy, dual_filtration(module.filtration))
    logging.debug('dual module weights %s', dual.filtration.weights())
    return dual


def tensor_subspace(a: Subspace, b: Subspace) -> Subspace:
    n = a.ambient_dim * b.ambient_dim
    rows = [Matrix.from_columns([u]).kron(Matrix.from_columns([v])).column(0)
            for u in a.basis for v in b.basis]
    return canonicalize(rows, n)


def tensor(first: FilteredPhiNModule, second: FilteredPhiNModule) -> FilteredPhiNModule:
    """
    Tensor product; e_i (x) f_j sits at index ``i * second.n + j``.

    Fil^i is the sum over jumps a of ``first`` of Fil^a (x) Fil^{i-a}, so
    the jumps of the product lie among the sums of jumps.

    Raises
    ------
    PrimeMismatch
        If the two modules are defined for different primes.
    """
    if first.p != second.p:
        logging.error('Cannot tensor modules for p=%d and p=%d', first.p, second.p)
        raise PrimeMismatch('tensor factors have different primes %d and %d' % (first.p, second.p))
    n1, n2 = first.n, second.n
    n = n1 * n2
    phi = first.phi.kron(second.phi)
    monodromy = first.monodromy.kron(Matrix.identity(n2)) + Matrix.identity(n1).kron(second.monodromy)
    candidates: List[Tuple[int, Subspace]] = []
    totals = sorted({a + b for a in first.filtration.jumps for b in second.filtration.jumps})
    for i in totals:
        rows = []
        for a, space in first.filtration.steps:
            rows.extend(tensor_subspace(space, second.fil(i - a)).basis)
        candidates.append((i, canonicalize(rows, n)))
    product = FilteredPhiNModule(first.p, phi, monodromy, Filtration.normalized(n, candidates))
    logging.debug('tensor product of dimension %d with weights %s', n, product.filtration.weights())
    return product


def adapted_basis(space: Subspace) -> Matrix:
    """Columns: the canonical basis of ``space`` followed by a coordinate complement."""
    return Matrix.from_columns(list(space.basis) + space.complement_basis(), nrows=space.ambient_dim)


def induced_sub_quotient(module: FilteredPhiNModule,
                         space: Subspace) -> Tuple[FilteredPhiNModule, FilteredPhiNModule]:
    """
    Sub-object W with Fil^i ∩ W and quotient D/W with the image filtration.

    The sub is written in the canonical basis of W, the quotient in the
    classes of the standard complement of W.

    Raises
    ------
    NotStable
        If W is not stable by phi and N.
    """
    if not (space.is_stable(module.phi) and space.is_stable(module.monodromy)):
        logging.error('Subspace %s is not stable by phi and N', space.basis)
        raise NotStable(message='subspace %s is not stable by phi and N' % (space.basis,))
    d = space.dim
    adapted = module.in_basis(adapted_basis(space))
    return adapted.block(0, d), adapted.block(d, module.n)


def restrict_to(module: FilteredPhiNModule, space: Subspace) -> FilteredPhiNModule:
    return induced_sub_quotient(module, space)[0]
