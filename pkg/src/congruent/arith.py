"""Exact integer and rational helpers: factorization, square-free parts, squares.

Rationals are plain :class:`fractions.Fraction` values, which are always kept
in lowest terms with a positive denominator.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import isqrt
from typing import NamedTuple

import flint

from .errors import DomainError, NotRepresentable

Rational = Fraction


@dataclass(frozen=True)
class Factorization:
    """Prime factorization ``n = prod(p**e)`` with primes strictly increasing."""

    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"factorization of non-positive {self.n}")
        primes = [p for p, _ in self.factors]
        if primes != sorted(set(primes)) or any(e < 1 for _, e in self.factors):
            raise DomainError("factors must have increasing primes and positive exponents")
        if self.value() != self.n:
            raise DomainError("factors do not multiply back to n")

    def value(self) -> int:
        return reduce(lambda acc, pe: acc * pe[0] ** pe[1], self.factors, 1)

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)

    @property
    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]

    def __str__(self):
        if not self.factors:
            return "1"
        return " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)


def is_prime(n: int) -> bool:
    return n >= 2 and bool(flint.fmpz(n).is_prime())


_CACHE_LIMIT = 1 << 16
_factor_cache: dict[int, Factorization] = {}


def _remember(f: Factorization) -> Factorization:
    if len(_factor_cache) >= _CACHE_LIMIT:
        _factor_cache.clear()
    _factor_cache[f.n] = f
    return f


def clear_factor_cache():
    _factor_cache.clear()


def factorize(n: int) -> Factorization:
    """Factor ``n >= 1`` completely.

    FLINT does the work (trial division, Pollard-Brent, ECM); its output is
    deterministic, so repeated calls give identical results. Results are
    memoized, and so are the square-free parts derived from them, so checking
    a freshly reduced ``n`` never factors it twice.
    """
    if not isinstance(n, int) or isinstance(n, bool):
        raise DomainError(f"expected an integer, got {type(n).__name__}")
    if n < 1:
        raise DomainError(f"cannot factorize {n}: need n >= 1")
    hit = _factor_cache.get(n)
    if hit is not None:
        return hit
    pairs = sorted((int(p), int(e)) for p, e in flint.fmpz(n).factor())
    return _remember(Factorization(n, tuple(pairs)))


class SquarefreeDecomposition(NamedTuple):
    squarefree: int
    cofactor: int  # n == squarefree * cofactor**2


def squarefree_decomposition(n: int) -> SquarefreeDecomposition:
    """Split ``n`` as ``m * k**2`` with ``m`` square-free."""
    if n < 1:
        raise DomainError(f"square-free part undefined for {n}")
    m = k = 1
    odd = []
    for p, e in factorize(n).factors:
        if e & 1:
            m *= p
            odd.append((p, 1))
        k *= p ** (e >> 1)
    if m not in _factor_cache:
        _remember(Factorization(m, tuple(odd)))
    return SquarefreeDecomposition(m, k)


def squarefree_part(n: int) -> int:
    return squarefree_decomposition(n).squarefree


def is_squarefree(n: int) -> bool:
    return n >= 1 and all(e == 1 for _, e in factorize(n).factors)


def exact_sqrt(n: int) -> int | None:
    """Integer square root of ``n`` if ``n`` is a perfect square, else None."""
    if n < 0:
        return None
    r = isqrt(n)
    return r if r * r == n else None


def is_perfect_square(n: int) -> bool:
    return exact_sqrt(n) is not None


def rational_sqrt(q: Fraction) -> Fraction | None:
    """Square root of a rational when it is the square of a rational."""
    q = Fraction(q)
    num, den = exact_sqrt(q.numerator), exact_sqrt(q.denominator)
    if num is None or den is None:
        return None
    return Fraction(num, den)


def is_sum_of_two_squares(n: int) -> bool:
    """True iff every prime = 3 (mod 4) divides ``n`` to an even power."""
    if n < 1:
        raise DomainError(f"expected n >= 1, got {n}")
    return all(e % 2 == 0 for p, e in factorize(n).factors if p % 4 == 3)


class DifferenceOfSquares(NamedTuple):
    a: int
    b: int

    @property
    def degenerate(self) -> bool:
        # only n = 1 and n = 4 land here; b = 0 yields no right triangle
        return self.b == 0


def difference_of_squares(n: int) -> DifferenceOfSquares:
    """Canonical ``(a, b)`` with ``n == a*a - b*b``.

    Odd ``n``: ``((n+1)/2, (n-1)/2)``, consecutive roots.
    ``n = 4k``: ``(k+1, k-1)``.
    """
    if n < 1:
        raise DomainError(f"expected n >= 1, got {n}")
    if n % 4 == 2:
        raise NotRepresentable(f"{n} = 2 (mod 4) is not a difference of two squares")
    if n % 2:
        return DifferenceOfSquares((n + 1) // 2, (n - 1) // 2)
    k = n // 4
    return DifferenceOfSquares(k + 1, k - 1)


_RATIONAL_RE = re.compile(r"(-?[0-9]+)(?:/([0-9]+))?")
_INT_RE = re.compile(r"-?[0-9]+")


def parse_int(text: str) -> int:
    """Parse a decimal-string integer, rejecting JSON numbers and other forms."""
    if not isinstance(text, str) or _INT_RE.fullmatch(text) is None:
        raise ValueError(f"not a decimal integer string: {text!r}")
    return int(text)


def format_rational(q: Fraction) -> str:
    """Serialize as ``"p/q"`` in lowest terms (``q`` is always written)."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``. Raises ValueError on anything else."""
    if not isinstance(text, str):
        raise ValueError(f"expected a string, got {type(text).__name__}")
    m = _RATIONAL_RE.fullmatch(text.strip())
    if m is None:
        raise ValueError(f"not a rational: {text!r}")
    num, den = m.group(1), m.group(2)
    return Fraction(int(num), int(den) if den is not None else 1)
