"""Congruent numbers from Pell solutions.

Both routes start from the triangle ``(x^2 - 1, 2x, x^2 + 1)``:

* with ``x^2 - d*y^2 = -1`` the leg ``2x`` times the hypotenuse is
  ``2x(x^2 + 1) = 2xd * y^2`` (:func:`theorem8`);
* with ``x^2 - d*y^2 = 1`` the half-area is ``x(x^2 - 1) = xd * y^2``
  (:func:`theorem10`).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import islice
from math import prod
from typing import Callable, Iterable, TypeVar

from .arith import exact_sqrt, factorize, is_prime, squarefree_part
from .certificate import CongruentCertificate, certify
from .errors import (
    CongruentError,
    InvalidParameter,
    InvalidParameters,
    NotAdmissible,
    WrongResidue,
)
from .pell import PellSolution, cf_expand, iter_solutions, theorem8_admissible
from .triples import PythTriple, leg_hyp_transform


@dataclass(frozen=True)
class PellCongruentResult:
    method: str
    d: int
    solution: PellSolution
    raw: int
    n: int
    certificate: CongruentCertificate
    bonus_raw: int | None = None
    bonus: int | None = None
    outside_hypotheses: bool = False

    @property
    def bonus_certificate(self) -> CongruentCertificate | None:
        # x square => sf(raw) == sf(bonus_raw), so the same triangle proves both
        return self.certificate if self.bonus is not None else None


def pell_triple(x: int) -> PythTriple:
    return PythTriple(x * x - 1, 2 * x, x * x + 1)


def _nth_solution(d: int, sign: int, index: int) -> PellSolution:
    if index < 0:
        raise InvalidParameters(f"solution index must be >= 0, got {index}")
    # x = 1 (d = 2, sign -1) makes the triangle degenerate, so it is skipped
    usable = (s for s in iter_solutions(d, sign) if s.x > 1)
    return next(islice(usable, index, None))


def theorem8(d: int, *, relaxed: bool = False, index: int = 0,
             method: str = "theorem8") -> PellCongruentResult:
    """``2xd`` from a solution of ``x^2 - d*y^2 = -1``, reduced to square-free.

    ``d`` must be 2 times distinct primes = 1 (mod 4) unless ``relaxed``, in
    which case any ``d`` with a solvable negative equation is accepted and
    the result is marked ``outside_hypotheses``. Raises :class:`Unsolvable` when
    the negative equation has no solution (d = 34, for one).
    """
    admissible = theorem8_admissible(d).holds
    if not admissible and not relaxed:
        raise NotAdmissible(f"{d} is not 2 times distinct primes = 1 (mod 4)")
    sol = _nth_solution(d, -1, index)
    x, y = sol.x, sol.y
    source = pell_triple(x)
    witness = leg_hyp_transform(source, 2 * x)
    label = "lemma1.2" if 2 * x > x * x - 1 else "lemma1.1"
    raw = 2 * x * d
    cert = certify(raw, witness, label, method=method, d=d, x=x, y=y)
    bonus_raw = bonus = None
    if exact_sqrt(x) is not None:
        bonus_raw = 2 * d
        bonus = squarefree_part(bonus_raw)
    return PellCongruentResult(method, d, sol, raw, cert.n, cert, bonus_raw, bonus,
                               outside_hypotheses=not admissible)


def theorem10(d: int, *, relaxed: bool = False, index: int = 0,
              method: str = "theorem10") -> PellCongruentResult:
    """``xd`` from a solution of ``x^2 - d*y^2 = 1``, reduced to square-free.

    ``d = 2 (mod 4)`` raises :class:`WrongResidue` unless ``relaxed``.
    """
    cf_expand(d)  # rejects perfect squares
    outside = d % 4 == 2
    if outside and not relaxed:
        raise WrongResidue(f"{d} = 2 (mod 4) is excluded")
    sol = _nth_solution(d, 1, index)
    x, y = sol.x, sol.y
    raw = x * d
    cert = certify(raw, pell_triple(x), "pell-triple", method=method, d=d, x=x, y=y)
    bonus_raw = bonus = None
    if exact_sqrt(x) is not None:
        bonus_raw = d
        bonus = squarefree_part(d)
    return PellCongruentResult(method, d, sol, raw, cert.n, cert, bonus_raw, bonus,
                               outside_hypotheses=outside)


def corollary9_build(primes: Iterable[int], *, index: int = 0) -> PellCongruentResult:
    """Run :func:`theorem8` on ``d = 2 * prod(primes)``.

    Every listed prime divides the resulting ``n``.
    """
    primes = list(primes)
    if not primes:
        raise InvalidParameters("need at least one prime")
    if len(set(primes)) != len(primes):
        raise InvalidParameters(f"primes must be distinct: {primes}")
    for p in primes:
        if not is_prime(p) or p % 4 != 1:
            raise InvalidParameters(f"{p} is not a prime = 1 (mod 4)")
    d = 2 * prod(primes)
    result = theorem8(d, index=index, method="corollary9")
    missing = [p for p in primes if result.n % p]
    if missing:
        raise ArithmeticError(f"primes {missing} do not divide n = {result.n}")
    return result


def closing_example(y: int) -> PellCongruentResult:
    """``d = y^2 + 1`` where ``x^2 - 2y^2 = 1``.

    ``(u, v) = (2y^2 + 1, 2y)`` solves ``u^2 - d*v^2 = 1`` and ``u = x^2``
    is a square, so ``d`` itself is congruent.
    """
    if y < 1:
        raise InvalidParameter(f"y must be a positive integer, got {y}")
    x = exact_sqrt(2 * y * y + 1)
    if x is None:
        raise InvalidParameter(f"no integer x with x^2 - 2*{y}^2 = 1")
    d = y * y + 1
    u, v = 2 * y * y + 1, 2 * y
    sol = PellSolution(d, u, v, 1)
    raw = u * d
    cert = certify(raw, pell_triple(u), "pell-triple", method="closing-example", d=d, x=u, y=v)
    return PellCongruentResult("closing-example", d, sol, raw, cert.n, cert,
                               bonus_raw=d, bonus=squarefree_part(d))


# Sweeps ------------------------------------------------------------------

T = TypeVar("T")
R = TypeVar("R")


def ordered_map(fn: Callable[[T], R], items: Iterable[T], workers: int = 1) -> list[R]:
    """``[fn(i) for i in items]``, optionally across processes, in input order."""
    items = list(items)
    if workers <= 1 or len(items) < 2:
        return [fn(i) for i in items]
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * workers))))


@dataclass(frozen=True)
class SweepOutcome:
    d: int
    result: PellCongruentResult | None
    error: str | None = None
    reason: str | None = None


def _attempt(fn, d: int) -> SweepOutcome:
    try:
        return SweepOutcome(d, fn(d))
    except CongruentError as exc:
        return SweepOutcome(d, None, type(exc).__name__, str(exc))


def _theorem8_one(d: int) -> SweepOutcome:
    return _attempt(theorem8, d)


def _theorem10_one(d: int) -> SweepOutcome:
    return _attempt(theorem10, d)


def theorem8_candidates(bound: int) -> list[int]:
    return [d for d in range(2, bound + 1, 4) if theorem8_admissible(d).holds]


def theorem10_candidates(bound: int) -> list[int]:
    return [d for d in range(2, bound + 1)
            if d % 4 != 2 and exact_sqrt(d) is None]


def theorem8_sweep(bound: int, workers: int = 1) -> list[SweepOutcome]:
    """Every admissible ``d <= bound``; unsolvable ones are kept as outcomes."""
    return ordered_map(_theorem8_one, theorem8_candidates(bound), workers)


def theorem10_sweep(bound: int, workers: int = 1) -> list[SweepOutcome]:
    return ordered_map(_theorem10_one, theorem10_candidates(bound), workers)


def odd_prime_divisors(d: int) -> list[int]:
    return [p for p in factorize(d).primes if p != 2]
