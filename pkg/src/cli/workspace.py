"""
Workspace files: one module, optional named refinements and optional
first-order families, with every rational written as a string.

Parse failures are reported as :class:`WorkspaceError` naming the JSON
path of the offending field, e.g. ``phi[0][1]``.
"""
import json
from dataclasses import dataclass, field
from typing import Annotated, Dict, List, Optional

from pydantic import AfterValidator, BaseModel, ConfigDict, Field, StrictInt, StrictStr, ValidationError

from src.deform.family import FirstOrderCharacter, FirstOrderFamily
from src.exceptions import WorkspaceError
from src.linalg.scalar import format_rational, parse_rational
from src.linalg.subspace import Flag, Subspace, canonicalize
from src.logger import logging
from src.modules.phin_module import FilteredPhiNModule


def _rational(text: str) -> str:
    parse_rational(text)
    return text


Rational = Annotated[StrictStr, AfterValidator(_rational)]
RationalRows = List[List[Rational]]


class _Schema(BaseModel):
    model_config = ConfigDict(extra='forbid')


class FiltrationStepSchema(_Schema):
    jump: StrictInt
    generators: RationalRows


class RefinementSchema(_Schema):
    name: StrictStr
    flag: RationalRows


class CharacterSchema(_Schema):
    eps_p: Rational
    eps_w: Rational
    base_delta_p: Optional[Rational] = None
    base_weight: Optional[Rational] = None


class FamilySchema(_Schema):
    characters: List[CharacterSchema]


class WorkspaceSchema(_Schema):
    p: StrictInt
    dimension: StrictInt = Field(ge=0)
    phi: RationalRows
    monodromy: RationalRows
    filtration: List[FiltrationStepSchema]
    candidates: Optional[List[RationalRows]] = None
    refinements: List[RefinementSchema] = Field(default_factory=list)
    families: Dict[str, FamilySchema] = Field(default_factory=dict)


@dataclass
class Workspace:
    module: FilteredPhiNModule
    refinements: Dict[str, Flag] = field(default_factory=dict)
    families: Dict[str, FirstOrderFamily] = field(default_factory=dict)
    candidates: List[Subspace] = field(default_factory=list)
    source: str = ''

    def refinement(self, name: str) -> Flag:
        if name not in self.refinements:
            raise WorkspaceError('refinements', 'no refinement named %r (have %s)'
                                 % (name, sorted(self.refinements) or 'none'))
        return self.refinements[name]

    def family(self, name: str) -> FirstOrderFamily:
        if name not in self.families:
            raise WorkspaceError('families', 'no family named %r (have %s)' % (name, sorted(self.families) or 'none'))
        return self.families[name]


def json_path(loc) -> str:
    """('phi', 0, 1) -> 'phi[0][1]'; ('families', 'ok', 'characters') -> 'families.ok.characters'."""
    path = ''
    for part in loc:
        if isinstance(part, int):
            path += '[%d]' % part
        else:
            path += ('.' if path else '') + str(part)
    return path


def _check_rows(path: str, rows: RationalRows, width: int, height: Optional[int] = None):
    if height is not None and len(rows) != height:
        raise WorkspaceError(path, 'expected %d rows, got %d' % (height, len(rows)))
    for i, row in enumerate(rows):
        if len(row) != width:
            raise WorkspaceError('%s[%d]' % (path, i), 'expected %d entries, got %d' % (width, len(row)))


def _check_shapes(schema: WorkspaceSchema):
    n = schema.dimension
    _check_rows('phi', schema.phi, n, n)
    _check_rows('monodromy', schema.monodromy, n, n)
    for k, step in enumerate(schema.filtration):
        _check_rows('filtration[%d].generators' % k, step.generators, n)
    for k, rows in enumerate(schema.candidates or []):
        _check_rows('candidates[%d]' % k, rows, n)
    names = set()
    for k, ref in enumerate(schema.refinements):
        if ref.name in names:
            raise WorkspaceError('refinements[%d].name' % k, 'duplicate refinement name %r' % ref.name)
        names.add(ref.name)
        _check_rows('refinements[%d].flag' % k, ref.flag, n, n)
        if canonicalize(ref.flag, n).dim != n:
            raise WorkspaceError('refinements[%d].flag' % k, 'flag vectors are linearly dependent')
    for name, family in schema.families.items():
        if len(family.characters) != n:
            raise WorkspaceError('families.%s.characters' % name,
                                 'expected %d characters, got %d' % (n, len(family.characters)))


def _to_workspace(schema: WorkspaceSchema, source: str) -> Workspace:
    n = schema.dimension
    module = FilteredPhiNModule.build(schema.p, schema.phi, schema.monodromy,
                                      [(step.jump, step.generators) for step in schema.filtration])
    refinements = {ref.name: Flag.from_vectors(ref.flag) for ref in schema.refinements}
    families = {
        name: FirstOrderFamily(tuple(FirstOrderCharacter.of(c.eps_p, c.eps_w, c.base_delta_p, c.base_weight)
                                     for c in family.characters))
        for name, family in schema.families.items()
    }
    candidates = [canonicalize(rows, n) for rows in schema.candidates or []]
    return Workspace(module, refinements, families, candidates, source)


def parse_workspace(data: dict, source: str = '<memory>') -> Workspace:
    """
    Validate decoded JSON and build the domain values.

    Raises
    ------
    WorkspaceError
        Naming the JSON path of the first offending field.
    """
    try:
        schema = WorkspaceSchema.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]
        path = json_path(first['loc'])
        logging.error('Workspace %s: %s at %s', source, first['msg'], path)
        raise WorkspaceError(path, first['msg'])
    _check_shapes(schema)
    workspace = _to_workspace(schema, source)
    logging.debug('Workspace %s: dimension %d, %d refinement(s), %d famil(ies)', source, schema.dimension,
                  len(workspace.refinements), len(workspace.families))
    return workspace


def load_workspace(path: str) -> Workspace:
    """Load and validate a workspace JSON file."""
    try:
        with open(path, 'r', encoding='utf-8') as file:
            data = json.load(file)
        logging.info('Workspace loaded from %s', path)
    except FileNotFoundError:
        logging.error('File not found: %s', path)
        raise WorkspaceError(None, 'file not found: %s' % path)
    except json.JSONDecodeError as e:
        logging.error('JSON error in %s: %s', path, e)
        raise WorkspaceError(None, 'invalid JSON at line %d column %d: %s' % (e.lineno, e.colno, e.msg))
    except Exception as e:
        logging.error('Unexpected error while loading %s: %s', path, e)
        raise
    return parse_workspace(data, path)


def _rows(rows) -> List[List[str]]:
    return [[format_rational(x) for x in row] for row in rows]


def module_to_json(module: FilteredPhiNModule) -> dict:
    """The module fields of a workspace, filtration steps as echelon bases."""
    return {
        'p': module.p,
        'dimension': module.n,
        'phi': _rows(module.phi.rows),
        'monodromy': _rows(module.monodromy.rows),
        'filtration': [{'jump': j, 'generators': _rows(space.basis)} for j, space in module.filtration.steps],
    }


def family_to_json(family: FirstOrderFamily) -> dict:
    characters = []
    for c in family.characters:
        entry = {'eps_p': format_rational(c.eps_p), 'eps_w': format_rational(c.eps_w)}
        if c.base_delta_p is not None:
            entry['base_delta_p'] = format_rational(c.base_delta_p)
        if c.base_weight is not None:
            entry['base_weight'] = format_rational(c.base_weight)
        characters.append(entry)
    return {'characters': characters}


def workspace_to_json(workspace: Workspace) -> dict:
    data = module_to_json(workspace.module)
    if workspace.candidates:
        data['candidates'] = [_rows(space.basis) for space in workspace.candidates]
    if workspace.refinements:
        data['refinements'] = [{'name': name, 'flag': _rows(flag.vectors)}
                               for name, flag in workspace.refinements.items()]
    if workspace.families:
        data['families'] = {name: family_to_json(f) for name, f in workspace.families.items()}
    return data


def write_workspace(workspace: Workspace, path: str) -> None:
    try:
        with open(path, 'w', encoding='utf-8', newline='\n') as file:
            json.dump(workspace_to_json(workspace), file, sort_keys=True, indent=2)
            file.write('\n')
        logging.info('Workspace written to %s', path)
    except OSError as e:
        logging.error('Cannot write %s: %s', path, e)
        raise
