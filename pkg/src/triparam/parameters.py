"""
Parameters of the triangulation attached to a refinement.

The rank-one parameter delta_i has delta_i(p) = alpha_i * p^(-k_i) and
weight w_i = -k_i.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from src.exceptions import NonIntegerWeight
from src.linalg.scalar import ScalarLike, as_scalar
from src.logger import logging
from src.refine.refinement import Refinement


@dataclass(frozen=True)
class Character:
    value_at_p: Fraction
    weight: Fraction

    @classmethod
    def of(cls, value_at_p: ScalarLike, weight: ScalarLike) -> 'Character':
        return cls(as_scalar(value_at_p), as_scalar(weight))


def character(alpha: ScalarLike, k: int, p: int) -> Character:
    return Character(as_scalar(alpha) * Fraction(p) ** (-k), Fraction(-k))


def refinement_to_parameters(refinement: Refinement) -> List[Character]:
    chars = [character(alpha, k, refinement.p) for alpha, k in zip(refinement.alphas, refinement.ks)]
    logging.debug('parameters %s', [(str(c.value_at_p), str(c.weight)) for c in chars])
    return chars


def parameters_to_invariants(chars: Sequence[Character], p: int) -> Tuple[List[Fraction], List[int]]:
    """
    Invert the parameter map: k_i = -w_i and alpha_i = delta_i(p) * p^(k_i).

    Raises
    ------
    NonIntegerWeight
        If some weight is not an integer.
    """
    alphas, ks = [], []
    for i, c in enumerate(chars, start=1):
        if c.weight.denominator != 1:
            logging.error('Weight %s of character %d is not an integer', c.weight, i)
            raise NonIntegerWeight('weight of character %d is %s, not an integer' % (i, c.weight))
        k = -c.weight.numerator
        ks.append(k)
        alphas.append(c.value_at_p * Fraction(p) ** k)
    return alphas, ks
