"""Exact extended-rational scalars.

Finite values are :class:`fractions.Fraction` instances.  The two
infinities are plain floats so that ordinary comparisons and ``max``/``min``
work across the whole carrier:

* ``BOTTOM`` (-inf) is the max-plus zero: neutral for max, absorbing for +.
* ``TOP`` (+inf) only marks divergent longest-walk values and the
  Cuninghame-Green inverse of ``BOTTOM``.  It is legal in min-plus (dual)
  arithmetic, where it is the zero, and an error in max-plus arithmetic.

Equality is exact.  Decimal strings are parsed exactly, so ``"0.1"`` is
``Fraction(1, 10)``.
"""

import math
from decimal import Decimal
from fractions import Fraction
from numbers import Rational

from .errors import DivergentValue, DomainError

BOTTOM = -math.inf
TOP = math.inf

ZERO = Fraction(0)
ONE = Fraction(1)

_BOTTOM_WORDS = {"-inf", "-infinity", "bottom", "-oo"}
_TOP_WORDS = {"inf", "+inf", "infinity", "+infinity", "top", "+oo", "oo"}


def to_scalar(value):
    """Convert ``value`` to a canonical tropical scalar.

    Accepts Fractions, ints, Decimals, decimal or ``p/q`` strings, the
    strings ``"-inf"``/``"+inf"``, and floats.  A finite float is read through
    its shortest ``repr``, so ``0.7`` becomes ``7/10`` rather than the binary
    expansion.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not tropical scalars")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if math.isnan(value):
            raise DomainError("NaN is not a tropical scalar")
        if math.isinf(value):
            return BOTTOM if value < 0 else TOP
        return Fraction(repr(value))
    if isinstance(value, Decimal):
        if not value.is_finite():
            raise DomainError(f"non-finite decimal {value!r}")
        return Fraction(value)
    if isinstance(value, Rational):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        text = value.strip()
        low = text.lower()
        if low in _BOTTOM_WORDS:
            return BOTTOM
        if low in _TOP_WORDS:
            return TOP
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError):
            raise DomainError(f"cannot parse {value!r} as an exact rational") from None
    raise TypeError(f"cannot convert {type(value).__name__} to a tropical scalar")


def to_unit(value):
    """Convert ``value`` and check it lies in the unit interval."""
    x = to_scalar(value)
    if not is_finite(x) or x < 0 or x > 1:
        raise DomainError(f"{format_scalar(x)} is outside [0, 1]")
    return x


def is_finite(a):
    return isinstance(a, Fraction)


def is_bottom(a):
    return a == BOTTOM


def is_top(a):
    return a == TOP


def oplus(a, b):
    if a == TOP or b == TOP:
        raise DivergentValue("TOP cannot enter a max-plus sum")
    return a if a >= b else b


def otimes(a, b):
    if a == TOP or b == TOP:
        raise DivergentValue("TOP cannot enter a max-plus product")
    if a == BOTTOM or b == BOTTOM:
        return BOTTOM
    return a + b


def otimes_dual(a, b):
    """Min-plus product; TOP is the absorbing zero of this semiring."""
    if a == TOP or b == TOP:
        return TOP
    if a == BOTTOM or b == BOTTOM:
        return BOTTOM
    return a + b


def oplus_dual(a, b):
    return a if a <= b else b


def neg(a):
    if a == BOTTOM:
        return TOP
    if a == TOP:
        return BOTTOM
    return -a


def luk_otimes(a, b):
    """Lukasiewicz t-norm max(0, a + b - 1) on the unit interval."""
    a = to_unit(a)
    b = to_unit(b)
    s = a + b - 1
    return s if s > 0 else ZERO


def _terminates(q):
    d = q.denominator
    for p in (2, 5):
        while d % p == 0:
            d //= p
    return d == 1


def format_scalar(a):
    """Render a scalar exactly.

    Terminating decimals when the denominator is of the form 2^a 5^b,
    otherwise ``"p/q"``; the infinities render as ``"-inf"`` and ``"+inf"``.
    """
    if a == BOTTOM:
        return "-inf"
    if a == TOP:
        return "+inf"
    q = to_scalar(a)
    if q.denominator == 1:
        return str(q.numerator)
    if not _terminates(q):
        return f"{q.numerator}/{q.denominator}"
    sign = "-" if q < 0 else ""
    q = abs(q)
    places = 0
    while (q * 10**places).denominator != 1:
        places += 1
    digits = str((q * 10**places).numerator).rjust(places + 1, "0")
    return f"{sign}{digits[:-places]}.{digits[-places:]}"
