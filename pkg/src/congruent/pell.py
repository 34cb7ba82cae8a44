"""Continued fractions of sqrt(d) and the equations x^2 - d*y^2 = +1 / -1.

All state is integral: the surd recurrence runs on ``(m, q, a)`` and
solutions are composed exactly, so nothing here touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import islice
from math import isqrt
from typing import Iterator, NamedTuple

from .arith import Factorization, factorize
from .errors import DomainError, NotQuadraticIrrational, Unsolvable


@dataclass(frozen=True)
class CFExpansion:
    """``sqrt(d) = [a0; period, period, ...]`` with a minimal period."""

    d: int
    a0: int
    period: tuple[int, ...]

    @property
    def period_length(self) -> int:
        return len(self.period)

    @property
    def odd_period(self) -> bool:
        return len(self.period) % 2 == 1

    def terms(self) -> Iterator[int]:
        """Partial quotients ``a1, a2, ...`` (after ``a0``), forever."""
        while True:
            yield from self.period

    def convergents(self) -> Iterator[tuple[int, int]]:
        """``(p_k, q_k)`` for k = 0, 1, 2, ..."""
        p0, p1 = 1, self.a0
        q0, q1 = 0, 1
        yield p1, q1
        for a in self.terms():
            p0, p1 = p1, a * p1 + p0
            q0, q1 = q1, a * q1 + q0
            yield p1, q1

    def convergent(self, k: int) -> tuple[int, int]:
        return next(islice(self.convergents(), k, None))

    def __str__(self):
        return f"[{self.a0}; ({', '.join(map(str, self.period))})]"


@lru_cache(maxsize=4096)
def cf_expand(d: int) -> CFExpansion:
    if d < 1:
        raise DomainError(f"need d >= 2, got {d}")
    a0 = isqrt(d)
    if a0 * a0 == d:
        raise NotQuadraticIrrational(f"{d} is a perfect square")

    # first step lands in the purely periodic part; stop when its (m, q) recurs
    m = a0
    q = d - a0 * a0
    a = (a0 + m) // q
    start = (m, q)
    period = [a]
    while True:
        m = a * q - m
        q = (d - m * m) // q
        if (m, q) == start:
            break
        a = (a0 + m) // q
        period.append(a)

    if period[-1] != 2 * a0:
        raise ArithmeticError(f"period of sqrt({d}) does not end in 2*a0: {period}")
    return CFExpansion(d, a0, tuple(period))


@dataclass(frozen=True)
class PellSolution:
    d: int
    x: int
    y: int
    sign: int

    def __post_init__(self):
        if self.x * self.x - self.d * self.y * self.y != self.sign:
            raise ArithmeticError(f"{self.x}^2 - {self.d}*{self.y}^2 != {self.sign}")

    def compose(self, unit: PellSolution) -> PellSolution:
        """Multiply ``x + y*sqrt(d)`` by a norm +1 unit."""
        if unit.d != self.d or unit.sign != 1:
            raise DomainError("can only compose with a +1 solution for the same d")
        p, q = unit.x, unit.y
        return PellSolution(
            self.d, self.x * p + self.d * self.y * q, self.x * q + self.y * p, self.sign
        )


def _check_sign(sign: int):
    if sign not in (1, -1):
        raise DomainError(f"sign must be +1 or -1, got {sign}")


@lru_cache(maxsize=4096)
def fundamental(d: int, sign: int = 1) -> PellSolution:
    """Least positive solution of ``x^2 - d*y^2 = sign``.

    For ``sign = -1`` this exists iff the period of sqrt(d) is odd; otherwise
    :class:`Unsolvable` is raised.
    """
    _check_sign(sign)
    cf = cf_expand(d)
    L = cf.period_length
    p, q = cf.convergent(L - 1)
    if sign == -1:
        if not cf.odd_period:
            raise Unsolvable(f"x^2 - {d}y^2 = -1 has no solution (period length {L} is even)")
        return PellSolution(d, p, q, -1)
    if not cf.odd_period:
        return PellSolution(d, p, q, 1)
    x, y = cf.convergent(2 * L - 1)
    sq = (p * p + d * q * q, 2 * p * q)
    if (x, y) != sq:
        raise ArithmeticError(f"double-period convergent {x, y} != square of -1 solution {sq}")
    return PellSolution(d, x, y, 1)


def iter_solutions(d: int, sign: int = 1) -> Iterator[PellSolution]:
    """All positive solutions in increasing order of ``x``."""
    sol = fundamental(d, sign)
    unit = fundamental(d, 1)
    while True:
        yield sol
        sol = sol.compose(unit)


def solutions(d: int, sign: int, count: int) -> list[PellSolution]:
    if count < 0:
        raise DomainError(f"count must be >= 0, got {count}")
    return list(islice(iter_solutions(d, sign), count))


class Diagnosis(NamedTuple):
    """Outcome of a divisibility test on ``d``.

    ``violations`` lists the factors at fault (4 stands for "divisible by 4").
    """

    holds: bool
    violations: tuple[int, ...]
    factorization: Factorization


def negative_pell_necessary(d: int) -> Diagnosis:
    """Necessary (not sufficient) condition for ``x^2 - d*y^2 = -1``.

    ``d`` not divisible by 4 and every odd prime factor = 1 (mod 4).
    d = 34 passes, yet the equation has no solution.
    """
    if d < 1:
        raise DomainError(f"need d >= 2, got {d}")
    f = factorize(d)
    bad = [p for p in f.primes if p % 4 == 3]
    if d % 4 == 0:
        bad.insert(0, 4)
    return Diagnosis(not bad, tuple(bad), f)


def theorem8_admissible(d: int) -> Diagnosis:
    """``d = 2 * q1 * ... * qr`` with distinct primes ``qi = 1 (mod 4)``, r >= 0."""
    if d < 1:
        raise DomainError(f"need d >= 2, got {d}")
    f = factorize(d)
    bad = [p for p, e in f.factors if e > 1 or (p != 2 and p % 4 != 1)]
    if d % 2:
        bad.insert(0, 2)
    return Diagnosis(not bad, tuple(bad), f)
