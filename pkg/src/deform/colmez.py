"""
Two-dimensional case: translate Colmez's first-order data (d alpha / alpha,
d kappa, d delta) into a family and compare his expression with the
residual of the general constraint.
"""
from dataclasses import dataclass
from fractions import Fraction

from src.deform.family import FirstOrderFamily, residual
from src.exceptions import ConsistencyError
from src.linalg.scalar import ScalarLike, as_scalar
from src.logger import logging


@dataclass(frozen=True)
class ColmezTranslation:
    family: FirstOrderFamily
    expression: Fraction
    residual: Fraction


def colmez_translate(d_alpha_over_alpha: ScalarLike, d_kappa: ScalarLike, d_delta: ScalarLike,
                     l_value: ScalarLike) -> ColmezTranslation:
    """
    eps_1(p) = d alpha / alpha, eps_2(p) = -d delta - d alpha / alpha,
    eps_{1,2} = 0 and eps_{2,2} = d kappa. The expression
    d alpha / alpha - L d kappa / 2 + d delta / 2 equals -residual / 2.
    """
    d_alpha, d_kappa, d_delta, l_value = (as_scalar(x) for x in (d_alpha_over_alpha, d_kappa, d_delta, l_value))
    family = FirstOrderFamily.from_eps([d_alpha, -d_delta - d_alpha], [0, d_kappa])
    expression = d_alpha - l_value * d_kappa / 2 + d_delta / 2
    value = residual(l_value, 1, 2, family)
    if expression != -value / 2:
        logging.error('Colmez expression %s but residual %s', expression, value)
        raise ConsistencyError('Colmez expression %s is not -1/2 times the residual %s' % (expression, value))
    return ColmezTranslation(family, expression, value)
