"""Exact rational scalars.

Every payoff, probability and game value in the package is a
:class:`fractions.Fraction`, which already keeps lowest terms and a positive
denominator. This module adds the textual syntax shared by the file formats
and the command line.
"""

import re
from fractions import Fraction

from .errors import ParseError

Rational = Fraction

_INT = r"[+-]?[0-9]+"
_RATIONAL_RE = re.compile(rf"({_INT})(?:/({_INT}))?\Z")


def parse_rational(text, *, line=None, column=1):
    """Parse ``"a"`` or ``"a/b"`` (each part optionally signed).

    ``line`` and ``column`` locate ``text`` inside a larger document so that
    errors point at the offending character.
    """
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ParseError(f"malformed rational {text!r}", line, column + _bad_offset(text))
    num = int(m.group(1))
    if m.group(2) is None:
        return Fraction(num)
    den = int(m.group(2))
    if den == 0:
        raise ParseError(f"zero denominator in {text!r}", line, column + m.start(2))
    return Fraction(num, den)


def _bad_offset(text):
    # index of the first character that cannot continue a valid rational
    if not text:
        return 0
    i = 0
    for part in range(2):
        if i < len(text) and text[i] in "+-":
            i += 1
        start = i
        while i < len(text) and text[i].isdigit():
            i += 1
        if i == start or i == len(text):
            return i
        if part == 0 and text[i] == "/":
            i += 1
            continue
        return i
    return i


def as_rational(value):
    """Coerce ints, Fractions and rational strings; floats are refused."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not payoffs")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value.strip())
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def render(r):
    """Canonical text: ``"a"`` for integers, else ``"a/b"`` in lowest terms."""
    return str(Fraction(r))


def render_vector(vec, sep=" "):
    return sep.join(render(v) for v in vec)


def approx(r, digits=6):
    """Decimal approximation for display only; never compare these."""
    return f"~{float(r):.{digits}f}"
