"""First-order families of triangulation parameters over the dual numbers."""
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from src.exceptions import DeformationError
from src.linalg.dual import DualNumber
from src.linalg.scalar import ScalarLike, Vector, as_scalar
from src.logger import logging


@dataclass(frozen=True)
class FirstOrderCharacter:
    """
    delta_i(p) = delta_{i,z}(p) (1 + Z eps_p) and w_i = w_{i,z} + Z eps_w.

    The base values delta_{i,z}(p) and w_{i,z} are optional.
    """

    eps_p: Fraction
    eps_w: Fraction
    base_delta_p: Optional[Fraction] = None
    base_weight: Optional[Fraction] = None

    @classmethod
    def of(cls, eps_p: ScalarLike, eps_w: ScalarLike, base_delta_p: Optional[ScalarLike] = None,
           base_weight: Optional[ScalarLike] = None) -> 'FirstOrderCharacter':
        return cls(as_scalar(eps_p), as_scalar(eps_w),
                   None if base_delta_p is None else as_scalar(base_delta_p),
                   None if base_weight is None else as_scalar(base_weight))

    @classmethod
    def from_dual_numbers(cls, delta_p: DualNumber, weight: DualNumber) -> 'FirstOrderCharacter':
        """Read eps_p = d(delta(p))/delta(p) and eps_w = dw off the family values."""
        return cls(delta_p.log_derivative(), weight.eps, delta_p.unit, weight.unit)

    def delta_p(self) -> DualNumber:
        if self.base_delta_p is None:
            raise DeformationError('no base value delta_z(p) recorded')
        return DualNumber.from_base(self.base_delta_p, self.eps_p)

    def weight(self) -> DualNumber:
        if self.base_weight is None:
            raise DeformationError('no base weight w_z recorded')
        return DualNumber(self.base_weight, self.eps_w)

    @property
    def has_base(self) -> bool:
        return self.base_delta_p is not None or self.base_weight is not None


@dataclass(frozen=True)
class FirstOrderFamily:
    characters: Tuple[FirstOrderCharacter, ...]

    @classmethod
    def from_eps(cls, eps_p: Sequence[ScalarLike], eps_w: Sequence[ScalarLike]) -> 'FirstOrderFamily':
        if len(eps_p) != len(eps_w):
            raise DeformationError('%d values of eps_p but %d of eps_w' % (len(eps_p), len(eps_w)))
        return cls(tuple(FirstOrderCharacter.of(a, b) for a, b in zip(eps_p, eps_w)))

    @classmethod
    def from_vector(cls, values: Sequence[ScalarLike]) -> 'FirstOrderFamily':
        """Inverse of :meth:`as_vector`."""
        n = len(values) // 2
        return cls.from_eps(values[:n], values[n:])

    @property
    def n(self) -> int:
        return len(self.characters)

    def eps_p(self, i: int) -> Fraction:
        return self.characters[i - 1].eps_p

    def eps_w(self, i: int) -> Fraction:
        return self.characters[i - 1].eps_w

    def as_vector(self) -> Vector:
        """(eps_1(p), ..., eps_n(p), eps_{1,2}, ..., eps_{n,2})."""
        return tuple(c.eps_p for c in self.characters) + tuple(c.eps_w for c in self.characters)

    def combine(self, a: ScalarLike, other: 'FirstOrderFamily', b: ScalarLike) -> 'FirstOrderFamily':
        """a * self + b * other on the eps-coordinates."""
        a, b = as_scalar(a), as_scalar(b)
        if other.n != self.n:
            raise DeformationError('families of lengths %d and %d' % (self.n, other.n))
        return FirstOrderFamily.from_vector([a * x + b * y for x, y in zip(self.as_vector(), other.as_vector())])

    def with_eps_p(self, i: int, value: ScalarLike) -> 'FirstOrderFamily':
        chars = list(self.characters)
        old = chars[i - 1]
        chars[i - 1] = FirstOrderCharacter(as_scalar(value), old.eps_w, old.base_delta_p, old.base_weight)
        return FirstOrderFamily(tuple(chars))


def residual(l_value: ScalarLike, s: int, t: int, family: FirstOrderFamily) -> Fraction:
    """
    eps_t(p) - eps_s(p) + L (eps_{t,2} - eps_{s,2}).

    Raises
    ------
    DeformationError
        Unless 1 <= s < t <= n.
    """
    if not 1 <= s < t <= family.n:
        logging.error('Indices s=%d, t=%d out of range for a family of length %d', s, t, family.n)
        raise DeformationError('need 1 <= s < t <= %d, got s=%d, t=%d' % (family.n, s, t))
    l_value = as_scalar(l_value)
    return family.eps_p(t) - family.eps_p(s) + l_value * (family.eps_w(t) - family.eps_w(s))
