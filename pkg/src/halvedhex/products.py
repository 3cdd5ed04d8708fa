"""Exact special products: hyperfactorials, Pochhammer symbols, T, V, double factorials.

Everything returns ``int`` or ``fractions.Fraction``; nothing ever touches a float.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial, prod


class DomainError(ValueError):
    """Argument outside the domain of a function (e.g. negative n)."""


class PoleError(ZeroDivisionError):
    """A denominator factor vanished."""


def _as_fraction(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def normalize(q: Fraction):
    """Return an ``int`` when ``q`` is integral, else ``q`` itself."""
    q = _as_fraction(q)
    return q.numerator if q.denominator == 1 else q


@lru_cache(maxsize=None)
def hyperfactorial(n: int) -> int:
    """H(n) = 0! 1! ... (n-1)!."""
    if n < 0:
        raise DomainError(f"hyperfactorial of negative n={n}")
    return prod(factorial(k) for k in range(n))


@lru_cache(maxsize=None)
def hyperfactorial_skip(n: int) -> int:
    """H2(n) = (n-2)! (n-4)! ... down to 0! or 1!."""
    if n < 0:
        raise DomainError(f"skipping hyperfactorial of negative n={n}")
    return prod(factorial(n - 2 * i) for i in range(1, n // 2 + 1))


def _rising(x: Fraction, n: int, step: int) -> Fraction:
    if n > 0:
        return prod((x + step * k for k in range(n)), start=Fraction(1))
    if n == 0:
        return Fraction(1)
    den = prod((x - step * k for k in range(1, -n + 1)), start=Fraction(1))
    if den == 0:
        raise PoleError(f"pole in rising product at x={x}, n={n}, step={step}")
    return 1 / den


def pochhammer(x, n: int) -> Fraction:
    """(x)_n, extended to negative n by 1/((x-1)(x-2)...(x+n))."""
    return _rising(_as_fraction(x), n, 1)


def pochhammer_skip(x, n: int) -> Fraction:
    """[x]_n = x(x+2)...(x+2n-2); negative n gives 1/((x-2)(x-4)...(x+2n))."""
    return _rising(_as_fraction(x), n, 2)


def product_T(x, n: int, m: int) -> Fraction:
    """T(x,n,m) = prod_{i<m} (x+i)_{n-2i}."""
    if m < 0:
        raise DomainError(f"product_T needs m >= 0, got {m}")
    x = _as_fraction(x)
    return prod((pochhammer(x + i, n - 2 * i) for i in range(m)), start=Fraction(1))


def product_V(x, n: int, m: int) -> Fraction:
    """V(x,n,m) = prod_{i<m} [x+2i]_{n-2i}."""
    if m < 0:
        raise DomainError(f"product_V needs m >= 0, got {m}")
    x = _as_fraction(x)
    return prod((pochhammer_skip(x + 2 * i, n - 2 * i) for i in range(m)), start=Fraction(1))


def double_factorial(n: int) -> int:
    """n!! with 0!! = (-1)!! = 1."""
    if n < -1:
        raise DomainError(f"double factorial undefined for n={n}")
    return prod(range(n, 0, -2))


def factorial_ratio(n: int, k: int) -> Fraction:
    """n!/k! for nonnegative n, k."""
    if n < 0 or k < 0:
        raise DomainError(f"factorial of negative argument ({n}, {k})")
    return Fraction(factorial(n), factorial(k))
