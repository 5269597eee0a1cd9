"""Dual numbers a + bZ with Z^2 = 0 over the rationals."""
from dataclasses import dataclass
from fractions import Fraction

from src.linalg.scalar import ScalarLike, as_scalar, format_rational


@dataclass(frozen=True)
class DualNumber:
    """First-order infinitesimal ``unit + eps*Z``."""

    unit: Fraction
    eps: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, 'unit', as_scalar(self.unit))
        object.__setattr__(self, 'eps', as_scalar(self.eps))

    @classmethod
    def coerce(cls, other) -> 'DualNumber':
        if isinstance(other, DualNumber):
            return other
        return cls(as_scalar(other), Fraction(0))

    def __add__(self, other) -> 'DualNumber':
        other = self.coerce(other)
        return DualNumber(self.unit + other.unit, self.eps + other.eps)

    __radd__ = __add__

    def __neg__(self) -> 'DualNumber':
        return DualNumber(-self.unit, -self.eps)

    def __sub__(self, other) -> 'DualNumber':
        return self + (-self.coerce(other))

    def __rsub__(self, other) -> 'DualNumber':
        return self.coerce(other) - self

    def __mul__(self, other) -> 'DualNumber':
        other = self.coerce(other)
        return DualNumber(self.unit * other.unit,
                          self.unit * other.eps + self.eps * other.unit)

    __rmul__ = __mul__

    def inverse(self) -> 'DualNumber':
        if self.unit == 0:
            raise ZeroDivisionError('dual number with zero unit part is not invertible')
        return DualNumber(1 / self.unit, -self.eps / (self.unit * self.unit))

    def __truediv__(self, other) -> 'DualNumber':
        return self * self.coerce(other).inverse()

    def __rtruediv__(self, other) -> 'DualNumber':
        return self.coerce(other) * self.inverse()

    def log_derivative(self) -> Fraction:
        """d(self)/self as the coefficient of dZ, i.e. eps/unit."""
        if self.unit == 0:
            raise ZeroDivisionError('logarithmic derivative at a zero value')
        return self.eps / self.unit

    @classmethod
    def from_base(cls, base: ScalarLike, relative_eps: ScalarLike) -> 'DualNumber':
        """``base * (1 + relative_eps*Z)``."""
        base = as_scalar(base)
        return cls(base, base * as_scalar(relative_eps))

    def __str__(self) -> str:
        return '%s + %s*Z' % (format_rational(self.unit), format_rational(self.eps))
