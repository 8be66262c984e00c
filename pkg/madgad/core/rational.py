"""Exact rationals and certified square-root enclosures.

Every value-carrying quantity in madgad is a :class:`fractions.Fraction`.
Square roots only appear in bounds; they are handled either by exact
comparison (squaring both sides) or as a :class:`SqrtInterval` whose end
points are rationals.
"""
import math
from fractions import Fraction

from ..consts import SQRT_INTERVAL_WIDTH
from ..errors import DomainError, FormatError

ExactRational = Fraction


def as_rational(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse(x)
    raise DomainError('not an exact rational: {0!r}'.format(x))


def to_str(x):
    """Serialize as ``"num/den"``; the denominator is always written."""
    x = as_rational(x)
    return '{0}/{1}'.format(x.numerator, x.denominator)


def parse(s):
    text = str(s).strip()
    try:
        if '/' in text:
            num, den = text.split('/', 1)
            if int(den) == 0:
                raise FormatError('zero denominator in {0!r}'.format(s))
            return Fraction(int(num), int(den))
        return Fraction(int(text))
    except ValueError:
        raise FormatError('not a rational "num/den": {0!r}'.format(s))


def lt_sqrt(value, radicand):
    """Exactly decide ``value < sqrt(radicand)``."""
    value, radicand = as_rational(value), as_rational(radicand)
    if radicand < 0:
        raise DomainError('negative radicand {0}'.format(radicand))
    if value < 0:
        return True
    return value * value < radicand


def le_sqrt(value, radicand):
    """Exactly decide ``value <= sqrt(radicand)``."""
    value, radicand = as_rational(value), as_rational(radicand)
    if radicand < 0:
        raise DomainError('negative radicand {0}'.format(radicand))
    if value < 0:
        return True
    return value * value <= radicand


class Interval(object):
    """Closed rational interval [lo, hi]."""

    __slots__ = ('lo', 'hi')

    def __init__(self, lo, hi):
        lo, hi = as_rational(lo), as_rational(hi)
        if lo > hi:
            raise DomainError('empty interval [{0}, {1}]'.format(lo, hi))
        self.lo = lo
        self.hi = hi

    @property
    def width(self):
        return self.hi - self.lo

    @property
    def exact(self):
        return self.lo == self.hi

    def __contains__(self, x):
        return self.lo <= as_rational(x) <= self.hi

    def __add__(self, other):
        if isinstance(other, Interval):
            return Interval(self.lo + other.lo, self.hi + other.hi)
        other = as_rational(other)
        return Interval(self.lo + other, self.hi + other)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Interval):
            return Interval(self.lo - other.hi, self.hi - other.lo)
        other = as_rational(other)
        return Interval(self.lo - other, self.hi - other)

    def __mul__(self, other):
        other = as_rational(other)
        if other < 0:
            return Interval(self.hi * other, self.lo * other)
        return Interval(self.lo * other, self.hi * other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = as_rational(other)
        if other == 0:
            raise DomainError('division of an interval by zero')
        return self * (1 / other)

    def certainly_below(self, x):
        return self.hi < as_rational(x)

    def certainly_above(self, x):
        return self.lo > as_rational(x)

    def to_json(self):
        return {'lo': to_str(self.lo), 'hi': to_str(self.hi)}

    def __eq__(self, other):
        return isinstance(other, Interval) and (self.lo, self.hi) == (other.lo, other.hi)

    def __hash__(self):
        return hash((self.lo, self.hi))

    def __repr__(self):
        return 'Interval({0}, {1})'.format(self.lo, self.hi)


class SqrtInterval(Interval):
    """Enclosure of ``sqrt(radicand)`` of width at most ``width``."""

    __slots__ = ('radicand',)

    def __init__(self, radicand, width=SQRT_INTERVAL_WIDTH):
        radicand = as_rational(radicand)
        width = as_rational(width)
        if radicand < 0:
            raise DomainError('negative radicand {0}'.format(radicand))
        if width <= 0:
            raise DomainError('interval width must be positive')
        a, b = radicand.numerator, radicand.denominator
        # sqrt(a/b) = sqrt(a*b)/b; scale so one unit in the last place is <= width
        scale = -(-width.denominator // (width.numerator * b))
        target = a * b * scale * scale
        root = math.isqrt(target)
        lo = Fraction(root, b * scale)
        hi = lo if root * root == target else Fraction(root + 1, b * scale)
        super(SqrtInterval, self).__init__(lo, hi)
        self.radicand = radicand

    def __repr__(self):
        return 'SqrtInterval(sqrt({0}) in [{1}, {2}])'.format(self.radicand, self.lo, self.hi)
