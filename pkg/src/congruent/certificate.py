"""Rational right-triangle certificates of congruence.

A certificate for ``n`` is a right triangle with rational sides whose area is
exactly ``n``. Checking one needs nothing but exact rational arithmetic, so
every number this package reports as congruent carries one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, NamedTuple

from .arith import (
    format_rational,
    is_squarefree,
    parse_int,
    parse_rational,
    rational_sqrt,
    squarefree_part,
)
from .errors import ScaleNotSquare
from .triples import PythTriple


@dataclass(frozen=True)
class Construction:
    """How a certificate was obtained.

    ``raw`` is the congruent number before reduction to its square-free part;
    ``scale`` multiplies the integer ``source_triple`` onto the certificate
    triangle.
    """

    method: str
    raw: int | None = None
    source_triple: tuple[int, int, int] | None = None
    transform: str | None = None
    scale: Fraction | None = None
    d: int | None = None
    x: int | None = None
    y: int | None = None


@dataclass(frozen=True)
class CongruentCertificate:
    n: int
    leg1: Fraction
    leg2: Fraction
    hyp: Fraction
    construction: Construction = field(default_factory=lambda: Construction("external"))

    @property
    def sides(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.leg1, self.leg2, self.hyp)

    def same_triangle(self, other: CongruentCertificate) -> bool:
        return (
            self.n == other.n
            and self.hyp == other.hyp
            and {self.leg1, self.leg2} == {other.leg1, other.leg2}
        )

    def __str__(self):
        legs = ", ".join(map(str, self.sides))
        return f"n={self.n}: ({legs})"


def certify(raw: int, source: PythTriple, label: str, *, method: str | None = None,
            d: int | None = None, x: int | None = None, y: int | None = None) -> CongruentCertificate:
    """Rescale ``source`` to a rational triangle of area ``squarefree_part(raw)``.

    ``source`` must have half-area ``raw`` times a rational square; the
    scale factor is ``1/sqrt(area/n)``. Raises :class:`ScaleNotSquare` if the
    area of ``source`` is not a square multiple of ``n``.
    """
    if raw < 1:
        raise ScaleNotSquare(f"congruent numbers are positive, got {raw}")
    n = squarefree_part(raw)
    area = Fraction(source.a * source.b, 2)
    root = rational_sqrt(area / n)
    if root is None:
        raise ScaleNotSquare(f"area {area} of {source} is not {n} times a rational square")
    scale = 1 / root
    cert = CongruentCertificate(
        n,
        source.a * scale,
        source.b * scale,
        source.c * scale,
        Construction(method or label, raw, source.as_tuple(), label, scale, d, x, y),
    )
    verdict = verify_certificate(cert)
    if not verdict:
        raise ArithmeticError(f"constructed certificate failed checks {verdict.reasons}: {cert}")
    return cert


class Verdict(NamedTuple):
    ok: bool
    reasons: tuple[str, ...]

    def __bool__(self):
        return self.ok


def verify_certificate(cert: CongruentCertificate) -> Verdict:
    """Check a certificate from scratch; never raises.

    Reason codes for failures: ``malformed``, ``positive``, ``squarefree``,
    ``pythagoras``, ``area``, ``progression``. The last is the three-squares
    form: ``(hyp/2)^2 - n``, ``(hyp/2)^2`` and ``(hyp/2)^2 + n`` must all be
    rational squares.
    """
    try:
        n = cert.n
        legs = (Fraction(cert.leg1), Fraction(cert.leg2))
        hyp = Fraction(cert.hyp)
        if isinstance(n, bool) or not isinstance(n, int):
            return Verdict(False, ("malformed",))
    except (AttributeError, TypeError, ValueError, ZeroDivisionError):
        return Verdict(False, ("malformed",))

    reasons = []
    if n < 1 or min(legs) <= 0 or hyp <= 0:
        reasons.append("positive")
    if n >= 1 and not is_squarefree(n):
        reasons.append("squarefree")
    if legs[0] ** 2 + legs[1] ** 2 != hyp ** 2:
        reasons.append("pythagoras")
    if legs[0] * legs[1] != 2 * n:
        reasons.append("area")
    mid = (hyp / 2) ** 2
    if rational_sqrt(mid + n) is None or rational_sqrt(mid - n) is None:
        reasons.append("progression")
    return Verdict(not reasons, tuple(reasons))


# JSON form: integers as decimal strings, rationals as "p/q".

def _int_or_none(v: Any) -> int | None:
    return None if v is None else parse_int(v)


def _str_or_none(v: int | None) -> str | None:
    return None if v is None else str(v)


def construction_to_json(c: Construction) -> dict:
    return {
        "method": c.method,
        "raw": _str_or_none(c.raw),
        "d": _str_or_none(c.d),
        "x": _str_or_none(c.x),
        "y": _str_or_none(c.y),
        "source_triple": None if c.source_triple is None else [str(v) for v in c.source_triple],
        "transform": c.transform,
        "scale": None if c.scale is None else format_rational(c.scale),
    }


def construction_from_json(obj: dict) -> Construction:
    src = obj.get("source_triple")
    scale = obj.get("scale")
    return Construction(
        method=str(obj.get("method", "external")),
        raw=_int_or_none(obj.get("raw")),
        source_triple=None if src is None else tuple(parse_int(v) for v in src),
        transform=obj.get("transform"),
        scale=None if scale is None else parse_rational(scale),
        d=_int_or_none(obj.get("d")),
        x=_int_or_none(obj.get("x")),
        y=_int_or_none(obj.get("y")),
    )


def certificate_to_json(cert: CongruentCertificate) -> dict:
    return {
        "n": str(cert.n),
        "triangle": {
            "leg1": format_rational(cert.leg1),
            "leg2": format_rational(cert.leg2),
            "hyp": format_rational(cert.hyp),
        },
        "construction": construction_to_json(cert.construction),
    }


def certificate_from_json(obj: dict) -> CongruentCertificate:
    """Inverse of :func:`certificate_to_json`.

    Raises KeyError/TypeError/ValueError/ZeroDivisionError on malformed input.
    """
    tri = obj["triangle"]
    construction = obj.get("construction")
    return CongruentCertificate(
        parse_int(obj["n"]),
        parse_rational(tri["leg1"]),
        parse_rational(tri["leg2"]),
        parse_rational(tri["hyp"]),
        construction_from_json(construction) if construction else Construction("external"),
    )
