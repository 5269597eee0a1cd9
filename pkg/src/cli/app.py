"""
``phin``: command line front end.

Exit codes: 0 success, 1 domain failure, 2 usage or workspace parse
error, 3 oracle mismatch or failed internal cross-check.
"""
import functools
import os
import random
import sys
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence

import click
from tqdm import tqdm

from src.cli import reports
from src.cli.fixtures import fixture_workspaces
from src.cli.workspace import Workspace, load_workspace, write_workspace
from src.config import load_params_or_defaults, section
from src.deform.constraints import check_deformation
from src.exceptions import ConsistencyError, OracleMismatch, PhinError, WorkspaceError
from src.logger import logging
from src.modules.admissibility import AdmissibilityVerdict, is_admissible
from src.modules.constructions import dual_module
from src.modules.phin_module import hodge_data, newton_data, validate_module
from src.oracle.brute_force import oracle_admissible, oracle_critical_indices, oracle_l_invariant
from src.oracle.random_instances import (RandomInstanceConfig, planted_jump_line, planted_max_monodromy,
                                         random_distinct_module, random_refinement)
from src.refine.decomposition import s_decomposition
from src.refine.duality import dual_refinement
from src.refine.l_invariant import LInvariantReport, Verdict, l_invariant_report
from src.refine.monodromy import graded_monodromy
from src.refine.refinement import Refinement, enumerate_refinements, make_refinement
from src.triparam.max_monodromy import max_monodromy_refinement
from src.triparam.parameters import refinement_to_parameters

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_ORACLE = 0, 1, 2, 3


@dataclass
class AppContext:
    as_json: bool = False
    verify: bool = False
    params_path: str = 'params.yaml'

    @property
    def params(self) -> dict:
        return load_params_or_defaults(self.params_path)

    def emit(self, payload: dict, render: Callable[[dict], str]):
        click.echo(reports.to_json(payload) if self.as_json else render(payload))


def exit_codes(command):
    """Run the command body and turn domain exceptions into the exit-code contract."""
    @functools.wraps(command)
    @click.pass_context
    def wrapper(ctx, *args, **kwargs):
        try:
            code = command(ctx.obj, *args, **kwargs) or EXIT_OK
        except (OracleMismatch, ConsistencyError) as e:
            logging.error('Cross-check failed: %s', e)
            click.echo('error: %s' % e, err=True)
            code = EXIT_ORACLE
        except WorkspaceError as e:
            click.echo('error: %s' % e, err=True)
            code = EXIT_USAGE
        except PhinError as e:
            logging.error('%s: %s', type(e).__name__, e)
            click.echo('error: %s: %s' % (type(e).__name__, e), err=True)
            code = EXIT_DOMAIN
        ctx.exit(code)
    return wrapper


def _refinement(workspace: Workspace, name: str) -> Refinement:
    return make_refinement(workspace.module, workspace.refinement(name))


def _verify_l_values(refinement: Refinement, report: LInvariantReport):
    for entry in report.strongly_critical():
        expected = oracle_l_invariant(refinement, entry.s, entry.decomposition)
        if expected != entry.l_value:
            raise OracleMismatch('L_{F,%d}: computed %s, jump line gives %s' % (entry.s, entry.l_value, expected))


def _verify_critical(refinement: Refinement, pairs):
    expected = oracle_critical_indices(refinement)
    if expected != list(pairs):
        raise OracleMismatch('critical pairs: computed %s, intersection test gives %s' % (list(pairs), expected))


# -------------------------------------------------------------------------------------
# group
# -------------------------------------------------------------------------------------

@click.group()
@click.option('--json', 'as_json', is_flag=True, help='Machine-readable output with a stable key order.')
@click.option('--verify', is_flag=True, help='Run the brute-force oracles and fail with exit 3 on a mismatch.')
@click.option('--params', 'params_path', default='params.yaml', show_default=True,
              help='YAML parameter file.')
@click.pass_context
def cli(ctx, as_json, verify, params_path):
    """Exact invariants of filtered (phi, N)-modules and their refinements."""
    ctx.obj = AppContext(as_json, verify, params_path)


@cli.command()
@click.argument('path')
@click.option('--require-admissible', is_flag=True, help='Exit 1 unless the module is certified admissible.')
@exit_codes
def check(app: AppContext, path: str, require_admissible: bool):
    """Validate a module and test weak admissibility."""
    workspace = load_workspace(path)
    module = workspace.module
    validation = validate_module(module)
    if not validation.valid:
        app.emit(reports.check_payload(validation), reports.check_text)
        return EXIT_DOMAIN
    try:
        newton = newton_data(module)
    except PhinError as e:
        logging.info('No Newton slopes: %s', e)
        newton = None
    admissibility = is_admissible(module, workspace.candidates, list(workspace.refinements.values()))
    if app.verify and admissibility.certifying:
        expected = oracle_admissible(module)
        if expected is not admissibility.verdict:
            raise OracleMismatch('admissibility: computed %s, exhaustive check gives %s'
                                 % (admissibility.verdict.value, expected.value))
    app.emit(reports.check_payload(validation, hodge_data(module), newton, admissibility), reports.check_text)
    if require_admissible and admissibility.verdict is not AdmissibilityVerdict.ADMISSIBLE:
        return EXIT_DOMAIN
    return EXIT_OK


@cli.command()
@click.argument('path')
@click.option('--refinement', 'name', required=True, help='Name of a refinement in the workspace.')
@exit_codes
def analyze(app: AppContext, path: str, name: str):
    """Orderings, graded monodromy, critical pairs and L-invariants of a refinement."""
    refinement = _refinement(load_workspace(path), name)
    graded = graded_monodromy(refinement)
    report = l_invariant_report(refinement)
    if app.verify:
        _verify_critical(refinement, graded.critical_pairs())
        _verify_l_values(refinement, report)
    app.emit(reports.analyze_payload(refinement, graded, report), reports.analyze_text)


@cli.command()
@click.argument('path')
@click.option('--refinement', 'name', required=True, help='Name of a refinement in the workspace.')
@click.option('-o', '--output', required=True, help='Where to write the dual workspace.')
@exit_codes
def dual(app: AppContext, path: str, name: str, output: str):
    """Write the dual module with the dual refinement under the same name."""
    workspace = load_workspace(path)
    refinement = _refinement(workspace, name)
    dual_ref = dual_refinement(refinement)
    write_workspace(Workspace(dual_module(workspace.module), {name: dual_ref.flag}), output)
    if app.verify:
        _verify_critical(dual_ref, graded_monodromy(dual_ref).critical_pairs())
    payload = {'output': output, 'alphas': reports.vector(dual_ref.alphas), 'ks': list(dual_ref.ks)}
    app.emit(payload, lambda p: 'dual workspace written to %s' % p['output'])


@cli.command()
@click.argument('path')
@click.option('--refinement', 'name', required=True, help='Name of a refinement in the workspace.')
@exit_codes
def params(app: AppContext, path: str, name: str):
    """Parameters delta_i(p), w_i of the triangulation attached to a refinement."""
    refinement = _refinement(load_workspace(path), name)
    app.emit(reports.parameters_payload(refinement_to_parameters(refinement)), reports.parameters_text)


@cli.command('max-monodromy')
@click.argument('path')
@exit_codes
def max_monodromy(app: AppContext, path: str):
    """Canonical refinement and Hodge transform of a maximal-monodromy module."""
    result = max_monodromy_refinement(load_workspace(path).module)
    if app.verify:
        report = l_invariant_report(result.refinement)
        for s, value in enumerate(result.l_values, start=1):
            entry = report.entry(s)
            expected = oracle_l_invariant(result.refinement, s, entry.decomposition)
            if expected != value:
                raise OracleMismatch('l_{%d,%d} = %s, jump line gives %s' % (s, s + 1, value, expected))
    app.emit(reports.max_monodromy_payload(result), reports.max_monodromy_text)


@cli.command('deform-check')
@click.argument('path')
@click.option('--refinement', 'name', required=True, help='Name of a refinement in the workspace.')
@click.option('--family', 'family_name', required=True, help='Name of a family in the workspace.')
@click.option('--allow-unchecked', is_flag=True, help='Only warn about indices whose verdict is NotDetected.')
@exit_codes
def deform_check(app: AppContext, path: str, name: str, family_name: str, allow_unchecked: bool):
    """Evaluate the first-order constraints on a family through a refinement."""
    workspace = load_workspace(path)
    refinement = _refinement(workspace, name)
    family = workspace.family(family_name)
    report = l_invariant_report(refinement)
    if app.verify:
        _verify_l_values(refinement, report)
    result = check_deformation(refinement, family, report)
    app.emit(reports.deformation_payload(result), reports.deformation_text)
    if result.unchecked:
        indices = ', '.join(str(c.s) for c in result.unchecked)
        logging.warning('Constraints not checked at s = %s', indices)
        click.echo('warning: strong criticality not detected at s = %s' % indices, err=True)
    if result.failures or (result.unchecked and not allow_unchecked):
        return EXIT_DOMAIN
    return EXIT_OK


@cli.command()
@click.argument('path')
@exit_codes
def refinements(app: AppContext, path: str):
    """List every refinement of a module with distinct eigenvalues."""
    workspace = load_workspace(path)
    entries = []
    for flag in enumerate_refinements(workspace.module):
        refinement = make_refinement(workspace.module, flag)
        critical = graded_monodromy(refinement).critical_pairs()
        if app.verify:
            _verify_critical(refinement, critical)
        names = sorted(name for name, named in workspace.refinements.items() if named.steps() == flag.steps())
        entries.append(reports.refinement_entry(refinement, critical, names))
    app.emit(reports.refinements_payload(entries), reports.refinements_text)


# -------------------------------------------------------------------------------------
# sweep / fixtures
# -------------------------------------------------------------------------------------

def _sweep_counts(app: AppContext, seed: Optional[int]):
    params_ = app.params
    config = RandomInstanceConfig.from_params(params_)
    counts = section(params_, 'sweep')
    return config, counts, config.seed if seed is None else seed


@cli.command()
@click.option('--seed', type=int, default=None, help='Override the seed from the parameter file.')
@exit_codes
def sweep(app: AppContext, seed: Optional[int]):
    """Cross-check the primary computations against the oracles on random instances."""
    config, counts, seed = _sweep_counts(app, seed)
    rng = random.Random(seed)
    checks = {name: {'instances': 0, 'comparisons': 0, 'mismatches': 0}
              for name in ('critical', 'l_invariant', 'jump_line', 'admissibility', 'max_monodromy')}

    def record(name: str, agree: bool, what: str):
        checks[name]['comparisons'] += 1
        if not agree:
            checks[name]['mismatches'] += 1
            logging.error('Sweep mismatch (%s): %s', name, what)

    for _ in tqdm(range(int(counts['refinements'])), desc='refinements', disable=app.as_json, file=sys.stderr):
        refinement = random_refinement(rng, config)
        checks['critical']['instances'] += 1
        critical = graded_monodromy(refinement).critical_pairs()
        record('critical', oracle_critical_indices(refinement) == critical, str(critical))
        checks['l_invariant']['instances'] += 1
        for entry in l_invariant_report(refinement).strongly_critical():
            expected = oracle_l_invariant(refinement, entry.s, entry.decomposition)
            record('l_invariant', expected == entry.l_value, 's=%d' % entry.s)

    for _ in tqdm(range(int(counts['jump_lines'])), desc='jump lines', disable=app.as_json, file=sys.stderr):
        planted = planted_jump_line(rng, config)
        checks['jump_line']['instances'] += 1
        entry = l_invariant_report(planted.refinement).entry(planted.s)
        record('jump_line', entry.verdict is Verdict.STRONGLY_CRITICAL and entry.l_value == planted.l_value,
               's=%d t=%d' % (planted.s, planted.t))
        decomposition = s_decomposition(planted.refinement, planted.s, rng)
        record('jump_line', decomposition.perfect
               and oracle_l_invariant(planted.refinement, planted.s, decomposition) == planted.l_value,
               'random decomposition for s=%d' % planted.s)

    small = RandomInstanceConfig(config.seed, config.min_dimension, min(config.max_dimension, 4), config.primes,
                                 config.coefficient_bound, config.weight_range)
    for _ in tqdm(range(int(counts['admissibility'])), desc='admissibility', disable=app.as_json, file=sys.stderr):
        module = random_distinct_module(rng, small)
        checks['admissibility']['instances'] += 1
        record('admissibility', oracle_admissible(module) is is_admissible(module).verdict, 'module')

    for _ in tqdm(range(int(counts['planted'])), desc='max monodromy', disable=app.as_json, file=sys.stderr):
        planted = planted_max_monodromy(rng, config)
        checks['max_monodromy']['instances'] += 1
        result = max_monodromy_refinement(planted.module)
        record('max_monodromy', result.transform.ell == planted.ell, 'ks %s' % (planted.ks,))

    payload = {'seed': seed, 'checks': checks}
    app.emit(payload, reports.sweep_text)
    mismatches = sum(row['mismatches'] for row in checks.values())
    if mismatches:
        raise OracleMismatch('%d mismatch(es) in the sweep' % mismatches)
    return EXIT_OK


@cli.command()
@click.argument('directory')
@exit_codes
def fixtures(app: AppContext, directory: str):
    """Write the reference modules as workspace files."""
    os.makedirs(directory, exist_ok=True)
    written = []
    for stem, workspace in fixture_workspaces().items():
        target = os.path.join(directory, '%s.json' % stem)
        write_workspace(workspace, target)
        written.append(target)
    app.emit({'written': written}, lambda p: '\n'.join(p['written']))


# -------------------------------------------------------------------------------------
# entry points
# -------------------------------------------------------------------------------------

def run_command(argv: Sequence[str]) -> int:
    """Run ``phin`` on ``argv`` without exiting the interpreter; returns the exit code."""
    try:
        result = cli.main(args=list(argv), prog_name='phin', standalone_mode=False)
    except click.UsageError as e:
        e.show()
        return EXIT_USAGE
    except click.ClickException as e:
        e.show()
        return EXIT_DOMAIN
    except click.Abort:
        return EXIT_DOMAIN
    return EXIT_OK if result is None else int(result)


def main(argv: Optional[List[str]] = None):
    sys.exit(run_command(sys.argv[1:] if argv is None else argv))


if __name__ == '__main__':
    main()
