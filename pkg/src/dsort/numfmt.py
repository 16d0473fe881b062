"""Deterministic text rendering of exact rationals.

Exact values travel as Fractions until the moment they are printed; these
helpers produce the two textual forms used in CSV/JSON output.
"""

from __future__ import annotations

from fractions import Fraction


def rational_str(q: Fraction) -> str:
    """Render as num/den with the denominator always present.

    >>> rational_str(Fraction(3, 2))
    '3/2'
    >>> rational_str(Fraction(2))
    '2/1'
    """
    return f"{q.numerator}/{q.denominator}"


def decimal_str(q: Fraction, places: int = 12) -> str:
    """Fixed-point decimal with ``places`` digits, rounded half-to-even.

    Integer arithmetic throughout, so the result is exact for the given
    precision and identical on every platform.

    >>> decimal_str(Fraction(3, 2))
    '1.500000000000'
    >>> decimal_str(Fraction(1, 3), 4)
    '0.3333'
    >>> decimal_str(Fraction(5, 2), 0)
    '2'
    """
    if places < 0:
        raise ValueError("places must be >= 0")
    sign = "-" if q < 0 else ""
    q = abs(q)
    scaled = q * 10**places
    whole, rem = divmod(scaled.numerator, scaled.denominator)
    twice = 2 * rem
    if twice > scaled.denominator or (twice == scaled.denominator and whole % 2 == 1):
        whole += 1
    digits = str(whole)
    if places == 0:
        return sign + digits
    digits = digits.rjust(places + 1, "0")
    return f"{sign}{digits[:-places]}.{digits[-places:]}"
