"""Parameter loading for the command line tool and the randomized sweeps."""
import os
from typing import Any, Dict, Optional

import yaml

from src.logger import logging

DEFAULT_PARAMS: Dict[str, Dict[str, Any]] = {
    'random_instances': {
        'seed': 20141,
        'min_dimension': 2,
        'max_dimension': 5,
        'primes': [2, 3],
        'coefficient_bound': 4,
        'weight_range': [-2, 3],
    },
    'sweep': {
        'refinements': 500,
        'admissibility': 200,
        'planted': 200,
        'jump_lines': 200,
    },
}


def load_params(params_path: str) -> dict:
    """Load parameters from a YAML file."""
    try:
        with open(params_path, 'r') as file:
            params = yaml.safe_load(file) or {}
        logging.debug('Parameters retrieved from %s', params_path)
        return params
    except FileNotFoundError:
        logging.error('File not found: %s', params_path)
        raise
    except yaml.YAMLError as e:
        logging.error('YAML error: %s', e)
        raise
    except Exception as e:
        logging.error('Unexpected error: %s', e)
        raise


def load_params_or_defaults(params_path: Optional[str]) -> dict:
    """Like :func:`load_params` but falls back to the built-in defaults."""
    if params_path is None or not os.path.exists(params_path):
        logging.info('No parameter file at %s, using defaults', params_path)
        return {}
    return load_params(params_path)


def section(params: dict, name: str) -> dict:
    """Return section ``name`` of ``params`` merged over its defaults."""
    merged = dict(DEFAULT_PARAMS.get(name, {}))
    merged.update(params.get(name) or {})
    return merged
