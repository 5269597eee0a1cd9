"""Strong criticality, Fontaine-Mazur L-invariants and s-perfect bases."""
import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from src.exceptions import ConsistencyError, InvalidDecomposition, NotStronglyCritical
from src.linalg.scalar import ScalarLike, Vector, as_vector, scale_vector, sub_vectors
from src.linalg.subspace import canonicalize, coordinate_subspace, express
from src.logger import logging
from src.modules.eigen import Eigenprojector
from src.refine.decomposition import (SDecomposition, classify_decomposition, lift, perfect_basis,
                                      quotient_coordinates, s_decomposition)
from src.refine.monodromy import critical_indices, critical_partner
from src.refine.refinement import Refinement


class Verdict(str, enum.Enum):
    STRONGLY_CRITICAL = 'StronglyCritical'
    NOT_DETECTED = 'NotDetected'
    NOT_STRONGLY_CRITICAL = 'NotStronglyCritical'


@dataclass(frozen=True)
class LInvariantEntry:
    s: int
    t: int
    verdict: Verdict
    l_value: Optional[Fraction]
    decomposition: SDecomposition
    reason: str = ''


@dataclass
class LInvariantReport:
    entries: List[LInvariantEntry] = field(default_factory=list)

    def entry(self, s: int) -> Optional[LInvariantEntry]:
        return next((e for e in self.entries if e.s == s), None)

    def strongly_critical(self) -> List[LInvariantEntry]:
        return [e for e in self.entries if e.verdict is Verdict.STRONGLY_CRITICAL]

    def l_values(self) -> Dict[int, Fraction]:
        return {e.s: e.l_value for e in self.strongly_critical()}


def strong_criticality(refinement: Refinement, s: int,
                       decomposition: Optional[SDecomposition] = None) -> LInvariantEntry:
    """
    Decide whether s is strongly critical and read off L_{F,s}.

    For t = s + 1 the verdict is exact (k_s < k_t). For t > s + 1 the
    canonical decomposition, or the supplied one, is examined: perfect
    gives StronglyCritical, otherwise NotDetected.

    Raises
    ------
    NotCritical
        If s is not critical.
    InvalidDecomposition
        If a supplied decomposition belongs to another index.
    ConsistencyError
        If the two readings of L on a perfect decomposition disagree.
    """
    t = critical_partner(refinement, s)
    dec = decomposition if decomposition is not None else s_decomposition(refinement, s)
    if (dec.s, dec.t) != (s, t):
        raise InvalidDecomposition('decomposition for (%d, %d) used for (%d, %d)' % (dec.s, dec.t, s, t))
    if dec.perfect and dec.l_dec != dec.l_dec_prime:
        logging.error('L_dec = %s but L\'_dec = %s for s=%d', dec.l_dec, dec.l_dec_prime, s)
        raise ConsistencyError('perfect %d-decomposition with L_dec != L\'_dec' % s)
    k_s, k_t = refinement.ks[s - 1], refinement.ks[t - 1]
    reason = ''
    if t == s + 1:
        strongly = k_s < k_t
        if strongly != dec.perfect:
            raise ConsistencyError('k_s < k_t is %s but the decomposition perfect is %s' % (strongly, dec.perfect))
        verdict = Verdict.STRONGLY_CRITICAL if strongly else Verdict.NOT_STRONGLY_CRITICAL
        if not strongly:
            reason = 'k_s = %d >= k_t = %d' % (k_s, k_t)
    elif dec.perfect:
        verdict = Verdict.STRONGLY_CRITICAL
    else:
        verdict = Verdict.NOT_DETECTED
        reason = 'decomposition is of case %d/%d\' and not perfect' % (dec.case_sub, dec.case_quot)
        if k_s >= k_t:
            reason += '; k_s = %d >= k_t = %d' % (k_s, k_t)
    l_value = dec.l_dec if verdict is Verdict.STRONGLY_CRITICAL else None
    logging.info('s=%d t=%d: %s%s', s, t, verdict.value, '' if l_value is None else ' with L = %s' % l_value)
    return LInvariantEntry(s, t, verdict, l_value, dec, reason)


def l_invariant_report(refinement: Refinement) -> LInvariantReport:
    return LInvariantReport([strong_criticality(refinement, s) for s, _ in critical_indices(refinement)])


def _lambda(basis: Sequence[Vector], refinement: Refinement, i: int, s: int) -> Fraction:
    """Coefficient on e_s of N(e_i) written on e_1..e_{i-1}."""
    coefficients = express(basis[:i - 1], refinement.base.monodromy.apply(basis[i - 1]))
    if coefficients is None:
        raise ConsistencyError('N(e_%d) is not in span(e_1..e_%d)' % (i, i - 1))
    return coefficients[s - 1]


def check_s_perfect(refinement: Refinement, s: int, basis: Sequence[Sequence[ScalarLike]]) -> List[str]:
    """
    Conditions of an s-perfect basis that ``basis`` violates (empty when
    it is s-perfect): perfect for F, the induced decomposition of
    F_t/F_{s-1} is a perfect s-decomposition, N(e_t) = e_s, and
    lambda_{i,s} = 0 for every i > s other than t.
    """
    n = refinement.n
    vectors = [as_vector(b) for b in basis]
    if len(vectors) != n or any(len(v) != n for v in vectors):
        return ['expected %d vectors of length %d' % (n, n)]
    problems = []
    for r in range(1, n + 1):
        if canonicalize(vectors[:r], n) != refinement.step(r):
            problems.append('span(e_1..e_%d) differs from F_%d' % (r, r))
    for i, v in enumerate(vectors, start=1):
        if refinement.base.phi.apply(v) != scale_vector(refinement.alphas[i - 1], v):
            problems.append('e_%d is not an eigenvector for alpha_%d' % (i, i))
    if problems:
        return problems
    t = critical_partner(refinement, s)
    if refinement.base.monodromy.apply(vectors[t - 1]) != vectors[s - 1]:
        problems.append('N(e_%d) != e_%d' % (t, s))
    d = t - s + 1
    middle = canonicalize([quotient_coordinates(refinement, s, t, vectors[i - 1]) for i in range(s + 1, t)], d)
    try:
        dec = classify_decomposition(refinement, s, quotient_coordinates(refinement, s, t, vectors[t - 1]), middle)
        if not dec.perfect:
            problems.append('the induced %d-decomposition is not perfect' % s)
    except InvalidDecomposition as e:
        problems.append('the induced %d-decomposition is invalid: %s' % (s, e))
    for i in range(s + 1, n + 1):
        if i != t and _lambda(vectors, refinement, i, s) != 0:
            problems.append('lambda_{%d,%d} != 0' % (i, s))
    return problems


def s_perfect_basis(refinement: Refinement, s: int) -> List[Vector]:
    """
    An s-perfect basis: e_1..e_{s-1} perfect for F_{s-1}, lifts of the
    perfect decomposition with e_s = N(e_t), and e_i = e'_i - mu_{i,s} e_t
    for i > t.

    Raises
    ------
    NotStronglyCritical
        Unless s is detected as strongly critical.
    """
    entry = strong_criticality(refinement, s)
    if entry.verdict is not Verdict.STRONGLY_CRITICAL:
        logging.error('Index %d is not strongly critical: %s', s, entry.reason)
        raise NotStronglyCritical(s, entry.verdict.value)
    dec, t = entry.decomposition, entry.t
    d = t - s + 1
    projector = refinement.projector
    piece_projector = Eigenprojector(refinement.graded_piece(s - 1, t).phi)
    starting = perfect_basis(refinement)

    basis: List[Vector] = list(starting[:s - 1])
    middle_lifts = []
    for k in range(2, d):
        alpha = refinement.alphas[s + k - 2]
        upper = dec.middle.intersect(coordinate_subspace(d, range(k)))
        lower = dec.middle.intersect(coordinate_subspace(d, range(k - 1)))
        w = next(b for b in upper.basis if not lower.contains(b))
        w = piece_projector.component(w, alpha)
        middle_lifts.append(projector.component(lift(refinement, s, w), alpha))
    e_t = projector.component(lift(refinement, s, dec.e_bar_t), refinement.alphas[t - 1])
    basis.append(refinement.base.monodromy.apply(e_t))
    basis.extend(middle_lifts)
    basis.append(e_t)
    for i in range(t + 1, refinement.n + 1):
        candidate = starting[i - 1]
        mu = _lambda(basis + [candidate], refinement, i, s)
        if mu != 0:
            candidate = sub_vectors(candidate, scale_vector(mu, e_t))
        basis.append(candidate)
    problems = check_s_perfect(refinement, s, basis)
    if problems:
        logging.error('Constructed %d-perfect basis fails: %s', s, problems)
        raise ConsistencyError('; '.join(problems))
    return basis
