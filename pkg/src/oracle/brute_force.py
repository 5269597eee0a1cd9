"""
Brute-force re-derivations used to cross-check the primary computations.

Only the exact linear algebra primitives are shared with the rest of the
package: criticality is read off intersection dimensions, L off a jump
line, and admissibility off every subset of eigenlines.
"""
from fractions import Fraction
from itertools import product
from typing import List, Sequence, Tuple

import sympy

from src.exceptions import IrrationalEigenvalues, NoJumpLine, RepeatedEigenvalues
from src.linalg.scalar import Vector, as_scalar, valuation
from src.linalg.subspace import Subspace, canonicalize, express
from src.logger import logging
from src.modules.admissibility import AdmissibilityVerdict
from src.modules.phin_module import FilteredPhiNModule
from src.refine.decomposition import SDecomposition
from src.refine.refinement import Refinement


def _image(space: Subspace, module: FilteredPhiNModule) -> Subspace:
    return canonicalize([module.monodromy.apply(b) for b in space.basis], module.n)


def oracle_critical_indices(refinement: Refinement) -> List[Tuple[int, int]]:
    """(s, t) with N F_{t-1} ∩ F_s = N F_{t-1} ∩ F_{s-1} and N F_t ∩ F_s ⊋ N F_t ∩ F_{s-1}."""
    module = refinement.base
    steps = refinement.flag.steps()
    images = [_image(step, module) for step in steps]
    pairs = []
    for t in range(2, refinement.n + 1):
        for s in range(1, t):
            before = images[t - 1]
            after = images[t]
            if (before.intersect(steps[s]).dim == before.intersect(steps[s - 1]).dim
                    and after.intersect(steps[s]).dim > after.intersect(steps[s - 1]).dim):
                pairs.append((s, t))
    return sorted(pairs)


def _lift(refinement: Refinement, s: int, coordinates: Sequence[Fraction]) -> Vector:
    n = refinement.n
    out = [Fraction(0)] * n
    for k, c in enumerate(coordinates):
        v = refinement.flag.vectors[s - 1 + k]
        for r in range(n):
            out[r] += c * v[r]
    return tuple(out)


def oracle_l_invariant(refinement: Refinement, s: int, decomposition: SDecomposition) -> Fraction:
    """
    The e_s-coefficient of the filtration jump line inside span(e_s, e_t),
    read modulo F_{s-1} with unit e_t-coefficient.

    Raises
    ------
    NoJumpLine
        If the filtration on span(e_s, e_t) has no jump line other than E e_s.
    """
    module = refinement.base
    t = decomposition.t
    lower = refinement.flag.step(s - 1)
    upper = refinement.flag.step(t)
    e_s = _lift(refinement, s, decomposition.e_bar_s)
    e_t = _lift(refinement, s, decomposition.e_bar_t)
    plane = canonicalize([e_s, e_t], module.n) + lower
    for jump, space in reversed(module.filtration.steps):
        level = (space.intersect(upper) + lower).intersect(plane)
        if level.dim - lower.dim != 1:
            continue
        x = next(b for b in level.basis if not lower.contains(b))
        coefficients = express([e_s, e_t] + list(refinement.flag.vectors[:s - 1]), x)
        a, b = coefficients[0], coefficients[1]
        if b == 0:
            raise NoJumpLine('the filtration jump line at %d is E e_s' % jump)
        return a / b
    raise NoJumpLine('the filtration on span(e_s, e_t) has no jump line')


def _eigenlines(module: FilteredPhiNModule) -> List[Tuple[Fraction, Vector]]:
    rows = [[sympy.Rational(x.numerator, x.denominator) for x in row] for row in module.phi.rows]
    lines = []
    for value, multiplicity, vectors in sympy.Matrix(rows).eigenvects():
        if not value.is_rational:
            raise IrrationalEigenvalues('eigenvalue %s of phi is not rational' % value)
        if multiplicity != 1:
            raise RepeatedEigenvalues('eigenvalue %s has multiplicity %d' % (value, multiplicity))
        lines.append((as_scalar(value), tuple(as_scalar(x) for x in vectors[0])))
    if len(lines) != module.n:
        raise RepeatedEigenvalues('phi does not have %d rational eigenvalues' % module.n)
    return lines


def _hodge_number(module: FilteredPhiNModule, space: Subspace) -> int:
    steps = module.filtration.steps
    total = 0
    for k, (jump, step) in enumerate(steps):
        following = steps[k + 1][1].intersect(space).dim if k + 1 < len(steps) else 0
        total += jump * (step.intersect(space).dim - following)
    return total


def oracle_admissible(module: FilteredPhiNModule) -> AdmissibilityVerdict:
    """
    Exhaustive check over all 2^n sums of eigenlines.

    Raises
    ------
    RepeatedEigenvalues
        Unless phi has n distinct rational eigenvalues.
    """
    lines = _eigenlines(module)
    n = module.n
    for mask in product((False, True), repeat=n):
        chosen = [line for line, keep in zip(lines, mask) if keep]
        space = canonicalize([v for _, v in chosen], n)
        if not (space.is_stable(module.phi) and space.is_stable(module.monodromy)):
            continue
        t_h = _hodge_number(module, space)
        t_n = sum(valuation(value, module.p) for value, _ in chosen)
        if t_h > t_n or (all(mask) and t_h != t_n):
            logging.debug('oracle: subspace %s has t_H=%d, t_N=%d', space.basis, t_h, t_n)
            return AdmissibilityVerdict.NOT_ADMISSIBLE
    return AdmissibilityVerdict.ADMISSIBLE
