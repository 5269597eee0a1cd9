"""Exact rational scalars: parsing, formatting and p-adic valuations."""
import re
from fractions import Fraction
from typing import Iterable, Tuple, Union

Scalar = Fraction
Vector = Tuple[Fraction, ...]
ScalarLike = Union[Fraction, int, str]

RATIONAL_PATTERN = re.compile(r'^[+-]?\d+(/[0-9]*[1-9][0-9]*)?$')


def parse_rational(text: str) -> Fraction:
    """
    Parse a rational literal: optional sign, decimal integer, optional
    ``/`` and a positive decimal integer, no whitespace.

    Raises
    ------
    ValueError
        If ``text`` does not match the grammar.
    """
    if not isinstance(text, str) or not RATIONAL_PATTERN.match(text):
        raise ValueError('not a rational literal: %r' % (text,))
    return Fraction(text)


def as_scalar(value: ScalarLike) -> Fraction:
    """Coerce ints, Fractions and rational literals to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError('booleans are not scalars')
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    # sympy Rationals carry p/q; numpy integers carry numerator/denominator
    if hasattr(value, 'p') and hasattr(value, 'q'):
        return Fraction(int(value.p), int(value.q))
    if hasattr(value, 'numerator') and hasattr(value, 'denominator'):
        return Fraction(int(value.numerator), int(value.denominator))
    raise TypeError('cannot interpret %r as an exact rational' % (value,))


def as_vector(values: Iterable[ScalarLike]) -> Vector:
    return tuple(as_scalar(v) for v in values)


def format_rational(value: Fraction) -> str:
    """Serialize as ``"num"`` or ``"num/den"`` (reduced)."""
    value = as_scalar(value)
    if value.denominator == 1:
        return str(value.numerator)
    return '%d/%d' % (value.numerator, value.denominator)


def _int_valuation(n: int, p: int) -> int:
    n = abs(n)
    count = 0
    while n % p == 0:
        n //= p
        count += 1
    return count


def valuation(value: ScalarLike, p: int) -> int:
    """p-adic valuation v_p(a/b) = v_p(a) - v_p(b); undefined on zero."""
    value = as_scalar(value)
    if value == 0:
        raise ValueError('the p-adic valuation of zero is undefined')
    return _int_valuation(value.numerator, p) - _int_valuation(value.denominator, p)


def zero_vector(n: int) -> Vector:
    return (Fraction(0),) * n


def unit_vector(n: int, i: int) -> Vector:
    return tuple(Fraction(1) if j == i else Fraction(0) for j in range(n))


def is_zero_vector(v: Vector) -> bool:
    return all(x == 0 for x in v)


def add_vectors(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def sub_vectors(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def scale_vector(c: ScalarLike, v: Vector) -> Vector:
    c = as_scalar(c)
    return tuple(c * x for x in v)


def combine(coefficients: Iterable[ScalarLike], vectors, n: int) -> Vector:
    """Linear combination sum c_i v_i of vectors in dimension n."""
    out = [Fraction(0)] * n
    for c, v in zip(coefficients, vectors):
        c = as_scalar(c)
        if c == 0:
            continue
        for k in range(n):
            out[k] += c * v[k]
    return tuple(out)


def dot(u: Vector, v: Vector) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def normalize_leading(v: Vector) -> Vector:
    """Scale v so that its first nonzero entry is 1."""
    for x in v:
        if x != 0:
            return tuple(y / x for y in v)
    return v
