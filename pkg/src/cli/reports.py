"""
Report payloads for the command line tool.

Every command builds a JSON-ready payload (rationals as ``"n"`` or
``"n/d"`` strings) and a plain-text rendering of the same data.
"""
import json
from typing import Dict, Iterable, List, Optional, Sequence

from tabulate import tabulate

from src.deform.constraints import DeformationReport
from src.linalg.scalar import format_rational
from src.modules.admissibility import AdmissibilityReport
from src.modules.phin_module import HodgeData, NewtonData, ValidationReport
from src.refine.l_invariant import LInvariantReport
from src.refine.monodromy import GradedMonodromy
from src.refine.refinement import Refinement
from src.triparam.max_monodromy import MaxMonodromyResult
from src.triparam.parameters import Character

TABLE_FORMAT = 'simple'


def rational(value) -> Optional[str]:
    return None if value is None else format_rational(value)


def vector(values: Iterable) -> List[str]:
    return [format_rational(v) for v in values]


def matrix(rows: Iterable[Iterable]) -> List[List[str]]:
    return [vector(row) for row in rows]


def to_json(payload: dict) -> str:
    """Stable serialization: sorted keys, two-space indent, LF newlines."""
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False)


def _table(rows: Sequence[Sequence], headers: Sequence[str]) -> str:
    return tabulate(rows, headers=headers, tablefmt=TABLE_FORMAT, disable_numparse=True)


# -------------------------------------------------------------------------------------
# check
# -------------------------------------------------------------------------------------

def check_payload(validation: ValidationReport, hodge: Optional[HodgeData] = None,
                  newton: Optional[NewtonData] = None,
                  admissibility: Optional[AdmissibilityReport] = None) -> dict:
    payload = {'valid': validation.valid, 'violations': list(validation.violations)}
    if hodge is not None:
        payload['hodge'] = {'weights': list(hodge.weights), 't_h': hodge.t_h}
    if newton is not None:
        payload['newton'] = {'slopes': list(newton.slopes), 't_n': newton.t_n}
    if admissibility is not None:
        payload['admissibility'] = {
            'verdict': admissibility.verdict.value,
            'certifying': admissibility.certifying,
            't_h': admissibility.t_h,
            't_n': admissibility.t_n,
            'reason': admissibility.reason,
            'subspaces': [{'basis': matrix(c.space.basis), 't_h': c.t_h, 't_n': c.t_n, 'holds': c.holds}
                          for c in admissibility.checks],
        }
    return payload


def check_text(payload: dict) -> str:
    if not payload['valid']:
        return 'invalid module:\n' + '\n'.join('  - %s' % v for v in payload['violations'])
    lines = ['valid module']
    if 'hodge' in payload:
        lines.append('Hodge weights %s, t_H = %d' % (payload['hodge']['weights'], payload['hodge']['t_h']))
    if 'newton' in payload:
        lines.append('Newton slopes %s, t_N = %d' % (payload['newton']['slopes'], payload['newton']['t_n']))
    adm = payload.get('admissibility')
    if adm:
        lines.append('admissibility: %s%s' % (adm['verdict'], '' if adm['certifying'] else ' (not certifying)'))
        if adm['reason']:
            lines.append('  %s' % adm['reason'])
        rows = [[' '.join('(%s)' % ', '.join(b) for b in s['basis']), s['t_h'], s['t_n'], 'yes' if s['holds'] else 'NO']
                for s in adm['subspaces']]
        if rows:
            lines.append(_table(rows, ['subspace', 't_H', 't_N', 't_H <= t_N']))
    return '\n'.join(lines)


# -------------------------------------------------------------------------------------
# analyze
# -------------------------------------------------------------------------------------

def _target(target) -> object:
    if target is None:
        return 'Zero'
    return {'j': target.j, 'coefficient': format_rational(target.coefficient)}


def analyze_payload(refinement: Refinement, graded: GradedMonodromy, report: LInvariantReport) -> dict:
    return {
        'p': refinement.p,
        'alphas': vector(refinement.alphas),
        'ks': list(refinement.ks),
        'graded_monodromy': {str(i): _target(tg) for i, tg in graded.as_dict().items()},
        'chains': [list(c) for c in graded.chains()],
        'critical': [[s, t] for s, t in graded.critical_pairs()],
        'l_invariants': [l_entry(e) for e in report.entries],
    }


def l_entry(entry) -> dict:
    dec = entry.decomposition
    return {
        's': entry.s,
        't': entry.t,
        'verdict': entry.verdict.value,
        'L': rational(entry.l_value),
        'reason': entry.reason,
        'case': '%d/%d\'' % (dec.case_sub, dec.case_quot),
        'k_prime': [dec.k_prime_s, dec.k_prime_t],
    }


def analyze_text(payload: dict) -> str:
    n = len(payload['alphas'])
    rows = []
    for i in range(1, n + 1):
        target = payload['graded_monodromy'][str(i)]
        shown = target if target == 'Zero' else '%s * gr_%d' % (target['coefficient'], target['j'])
        rows.append([i, payload['alphas'][i - 1], payload['ks'][i - 1], shown])
    lines = [_table(rows, ['i', 'alpha_i', 'k_i', 'N_F(gr_i)'])]
    lines.append('critical pairs: %s' % (', '.join('(%d, %d)' % tuple(c) for c in payload['critical']) or 'none'))
    if payload['l_invariants']:
        rows = [[e['s'], e['t'], e['verdict'], e['L'] or '-', e['case'], e['reason']]
                for e in payload['l_invariants']]
        lines.append(_table(rows, ['s', 't', 'verdict', 'L', 'case', 'reason']))
    return '\n'.join(lines)


# -------------------------------------------------------------------------------------
# params / max-monodromy
# -------------------------------------------------------------------------------------

def parameters_payload(chars: Sequence[Character]) -> dict:
    return {'characters': [{'delta_p': format_rational(c.value_at_p), 'weight': format_rational(c.weight)}
                           for c in chars]}


def parameters_text(payload: dict) -> str:
    rows = [[i, c['delta_p'], c['weight']] for i, c in enumerate(payload['characters'], start=1)]
    return _table(rows, ['i', 'delta_i(p)', 'w_i'])


def max_monodromy_payload(result: MaxMonodromyResult) -> dict:
    return {
        'flag': matrix(result.flag.vectors),
        'weights': list(result.transform.weights),
        'ell': matrix(result.transform.ell.rows),
        'l_values': vector(result.l_values),
    }


def max_monodromy_text(payload: dict) -> str:
    lines = ['flag:']
    lines += ['  e_%d = (%s)' % (i, ', '.join(v)) for i, v in enumerate(payload['flag'], start=1)]
    lines.append('weights %s' % payload['weights'])
    lines.append(_table(payload['ell'], []))
    lines.append('l_{s,s+1}: %s' % ', '.join(payload['l_values']))
    return '\n'.join(lines)


# -------------------------------------------------------------------------------------
# deform-check
# -------------------------------------------------------------------------------------

def deformation_payload(report: DeformationReport) -> dict:
    return {
        'passed': report.passed,
        'constraints': [{'s': c.s, 't': c.t, 'L': rational(c.l_value), 'residual': rational(c.residual),
                         'status': c.status.value} for c in report.checks],
    }


def deformation_text(payload: dict) -> str:
    rows = [[c['s'], c['t'], c['L'] or '-', c['residual'] or '-', c['status']] for c in payload['constraints']]
    if not rows:
        return 'no strongly critical index: no constraint'
    return _table(rows, ['s', 't', 'L', 'residual', 'status'])


# -------------------------------------------------------------------------------------
# refinements
# -------------------------------------------------------------------------------------

def refinements_payload(entries: List[Dict]) -> dict:
    return {'refinements': entries}


def refinement_entry(refinement: Refinement, critical, names: Sequence[str]) -> dict:
    return {
        'flag': matrix(refinement.flag.vectors),
        'alphas': vector(refinement.alphas),
        'ks': list(refinement.ks),
        'critical': [[s, t] for s, t in critical],
        'names': list(names),
    }


def refinements_text(payload: dict) -> str:
    rows = []
    for k, r in enumerate(payload['refinements'], start=1):
        rows.append([k, ' '.join('(%s)' % ', '.join(v) for v in r['flag']), ' '.join(r['alphas']),
                     ' '.join(str(x) for x in r['ks']), ' '.join('(%d,%d)' % tuple(c) for c in r['critical']),
                     ', '.join(r['names'])])
    return _table(rows, ['#', 'flag', 'alphas', 'ks', 'critical', 'workspace name'])


# -------------------------------------------------------------------------------------
# sweep
# -------------------------------------------------------------------------------------

def sweep_text(payload: dict) -> str:
    rows = [[name, row['instances'], row['comparisons'], row['mismatches']]
            for name, row in sorted(payload['checks'].items())]
    return 'seed %d\n%s' % (payload['seed'], _table(rows, ['check', 'instances', 'comparisons', 'mismatches']))
