"""Shared fixtures: the reference workspaces and seeded random instances."""
import os
import random

from hypothesis import strategies as st

from src.cli.fixtures import d_ell, fixture_a, fixture_a_modified, fixture_c
from src.oracle.random_instances import RandomInstanceConfig
from src.refine.refinement import make_refinement

ROOT_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
FIXTURE_DIR = os.path.join(ROOT_DIR, 'data', 'fixtures')

seeds = st.integers(min_value=0, max_value=2 ** 32 - 1)

CONFIG = RandomInstanceConfig()
SMALL_CONFIG = RandomInstanceConfig(max_dimension=4)


def fixture_path(stem: str) -> str:
    return os.path.join(FIXTURE_DIR, '%s.json' % stem)


def refinement_of(workspace, name: str = 'F'):
    return make_refinement(workspace.module, workspace.refinement(name))


def rng_for(seed: int) -> random.Random:
    return random.Random(seed)


__all__ = [
    'CONFIG', 'FIXTURE_DIR', 'SMALL_CONFIG', 'd_ell', 'fixture_a', 'fixture_a_modified', 'fixture_c',
    'fixture_path', 'refinement_of', 'rng_for', 'seeds',
]
