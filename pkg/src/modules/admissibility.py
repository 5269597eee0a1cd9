"""
Stable subspaces and the weak admissibility test t_H(D') <= t_N(D').

With pairwise-distinct rational eigenvalues every phi-stable subspace is a
sum of eigenlines, so the phi,N-stable ones are the N-closed subsets of
eigenlines and the test is a certificate. Otherwise only the supplied
candidates are examined.
"""
import enum
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Optional, Sequence

from src.exceptions import IrrationalEigenvalues, RepeatedEigenvalues
from src.linalg.scalar import Vector
from src.linalg.subspace import Flag, Subspace, canonicalize, span
from src.logger import logging
from src.modules.constructions import induced_sub_quotient
from src.modules.eigen import eigenbasis, has_distinct_eigenvalues
from src.modules.phin_module import FilteredPhiNModule, frobenius_valuation, hodge_data


class AdmissibilityVerdict(str, enum.Enum):
    ADMISSIBLE = 'Admissible'
    NOT_ADMISSIBLE = 'NotAdmissible'
    CHECKED_ON_CANDIDATES = 'CheckedOnCandidates'


@dataclass(frozen=True)
class SubspaceCheck:
    space: Subspace
    t_h: int
    t_n: int

    @property
    def holds(self) -> bool:
        return self.t_h <= self.t_n


@dataclass
class AdmissibilityReport:
    verdict: AdmissibilityVerdict
    certifying: bool
    t_h: int
    t_n: int
    checks: List[SubspaceCheck] = field(default_factory=list)
    skipped: List[Subspace] = field(default_factory=list)
    reason: str = ''

    @property
    def failures(self) -> List[SubspaceCheck]:
        return [c for c in self.checks if not c.holds]


def eigenlines(module: FilteredPhiNModule) -> List[Vector]:
    """
    Eigenvectors of phi, eigenvalues ascending.

    Raises
    ------
    RepeatedEigenvalues
        If two eigenvalues coincide.
    """
    if not has_distinct_eigenvalues(module.phi):
        raise RepeatedEigenvalues('phi has repeated eigenvalues; stable subspaces form a continuous family')
    return [vector for _, vector in eigenbasis(module.phi)]


def successor_map(module: FilteredPhiNModule, lines: Sequence[Vector]) -> Dict[int, Optional[int]]:
    """N maps eigenline i into eigenline j (or kills it); with distinct eigenvalues j is unique."""
    successors: Dict[int, Optional[int]] = {}
    for i, v in enumerate(lines):
        image = module.monodromy.apply(v)
        successors[i] = None
        if all(x == 0 for x in image):
            continue
        for j, w in enumerate(lines):
            if span([w], module.n).contains(image):
                successors[i] = j
                break
    return successors


def stable_subspaces(module: FilteredPhiNModule) -> List[Subspace]:
    """
    Every phi,N-stable subspace, sorted by (dimension, echelon basis).

    Raises
    ------
    RepeatedEigenvalues
        If phi does not have pairwise-distinct eigenvalues.
    """
    lines = eigenlines(module)
    successors = successor_map(module, lines)
    spaces = []
    for size in range(len(lines) + 1):
        for subset in combinations(range(len(lines)), size):
            chosen = set(subset)
            if all(successors[i] is None or successors[i] in chosen for i in chosen):
                spaces.append(canonicalize([lines[i] for i in subset], module.n))
    spaces.sort(key=lambda s: s.sort_key())
    logging.debug('found %d stable subspaces', len(spaces))
    return spaces


def check_subspace(module: FilteredPhiNModule, space: Subspace) -> SubspaceCheck:
    sub, _ = induced_sub_quotient(module, space)
    return SubspaceCheck(space, hodge_data(sub).t_h, frobenius_valuation(sub))


def _is_stable(module: FilteredPhiNModule, space: Subspace) -> bool:
    return space.is_stable(module.phi) and space.is_stable(module.monodromy)


def is_admissible(module: FilteredPhiNModule, extra_candidates: Optional[Sequence[Subspace]] = None,
                  flags: Optional[Sequence[Flag]] = None) -> AdmissibilityReport:
    """
    Weakly admissible iff t_H(D) = t_N(D) and t_H(D') <= t_N(D') on every
    phi,N-stable D'.

    With distinct eigenvalues the verdict is a certificate. Otherwise the
    proper steps of ``flags`` and ``extra_candidates`` are checked and a
    passing result is reported as ``CHECKED_ON_CANDIDATES``; a failure is
    still a certified ``NOT_ADMISSIBLE``.
    """
    t_h = hodge_data(module).t_h
    t_n = frobenius_valuation(module)
    try:
        candidates = stable_subspaces(module)
        certifying = True
    except (RepeatedEigenvalues, IrrationalEigenvalues) as e:
        logging.info('Admissibility is checked on candidates only: %s', e)
        certifying = False
        candidates = list(extra_candidates or [])
        for flag in flags or []:
            candidates.extend(flag.step(i) for i in range(1, flag.ambient_dim))
    report = AdmissibilityReport(AdmissibilityVerdict.ADMISSIBLE, certifying, t_h, t_n)
    seen = set()
    for space in candidates:
        if space in seen or space.is_zero() or space.is_full():
            continue
        seen.add(space)
        if not _is_stable(module, space):
            report.skipped.append(space)
            continue
        report.checks.append(check_subspace(module, space))
    report.checks.sort(key=lambda c: c.space.sort_key())
    if t_h != t_n:
        report.verdict = AdmissibilityVerdict.NOT_ADMISSIBLE
        report.certifying = True
        report.reason = 't_H(D) = %d differs from t_N(D) = %d' % (t_h, t_n)
    elif report.failures:
        worst = report.failures[0]
        report.verdict = AdmissibilityVerdict.NOT_ADMISSIBLE
        report.certifying = True
        report.reason = 't_H = %d > t_N = %d on the stable subspace %s' % (worst.t_h, worst.t_n, worst.space.basis)
    elif not certifying:
        report.verdict = AdmissibilityVerdict.CHECKED_ON_CANDIDATES
        report.reason = 'repeated or irrational eigenvalues: only %d candidate subspace(s) were checked' \
            % len(report.checks)
    logging.info('admissibility verdict %s (t_H=%d, t_N=%d)', report.verdict.value, t_h, t_n)
    return report
