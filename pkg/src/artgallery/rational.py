"""Exact rational arithmetic helpers shared by the geometry core.

Everything in the geometry core computes over arbitrary-precision rationals so
that predicates (orientation, containment, emptiness) are decided exactly.
gmpy2.mpq is the backend when available (about an order of magnitude faster
than fractions.Fraction); the code only relies on Fraction-compatible
semantics, so Fraction works as a drop-in fallback.
"""

from __future__ import annotations

from fractions import Fraction

try:
    from gmpy2 import mpq as _Q

    _BACKEND = "gmpy2"
except ImportError:  # pragma: no cover - exercised only without gmpy2
    _Q = Fraction
    _BACKEND = "fractions"

#: Exact rational constructor. Accepts ints, rationals, "p/q" strings,
#: decimal strings and (exactly converted) floats.
Q = _Q

ZERO = Q(0)
ONE = Q(1)


def rat(value, denom=None):
    """Build an exact rational.

    Floats convert exactly (their full binary expansion, no snapping); use
    :func:`rationalize` when a nearby small-denominator value is wanted.
    Strings accept "p/q", integer and decimal forms.
    """
    if denom is not None:
        return Q(value) / Q(denom)
    if isinstance(value, float):
        f = Fraction(value)
        return Q(f.numerator) / Q(f.denominator)
    if isinstance(value, str):
        return _parse(value.strip())
    return Q(value)


def _parse(text):
    if "/" in text:
        num, _, den = text.partition("/")
        return Q(Fraction(num.strip())) / Q(Fraction(den.strip()))
    return Q(Fraction(text))


def rationalize(value, max_denominator=10**9):
    """Nearest rational with denominator bounded by ``max_denominator``.

    This is the single sanctioned float->rational entry point for numeric
    results that feed back into exact constructions.
    """
    if isinstance(value, float):
        f = Fraction(value).limit_denominator(max_denominator)
    else:
        f = Fraction(rat(value)).limit_denominator(max_denominator)
    return Q(f.numerator) / Q(f.denominator)


def fmt(value) -> str:
    """Serialize exactly: "p" for integers, "p/q" otherwise."""
    q = rat(value)
    return str(q)


def numden(value):
    q = rat(value)
    return int(q.numerator), int(q.denominator)


def isqrt_floor(n: int) -> int:
    """Floor of the integer square root (exact)."""
    if n < 0:
        raise ValueError("negative")
    import math

    return math.isqrt(n)


def sqrt_rat_down(q, max_denominator=10**9):
    """A rational lower bound for sqrt(q), within 1/max_denominator."""
    q = rat(q)
    if q < 0:
        raise ValueError("negative")
    import math

    approx = rationalize(math.sqrt(float(q)), max_denominator)
    while approx * approx > q:
        approx -= rat(1, max_denominator)
    return approx
