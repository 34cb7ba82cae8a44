"""Polynomial families of congruent numbers.

Each family is evaluated twice: once from the polynomial as printed, once
from the triangle it is supposed to come from. The triangle-derived value is
the one that gets certified; the printed one is compared against it and
flagged when they disagree by more than a square factor.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from math import gcd
from typing import Callable

from .arith import difference_of_squares, squarefree_part
from .certificate import CongruentCertificate, certify
from .errors import DomainError, InvalidParameters
from .pipeline import ordered_map
from .triples import (
    PythTriple,
    TriplePair,
    generated_triple,
    leg_hyp_transform,
    lemma1_transforms,
)


class Status(str, Enum):
    MATCH = "match"
    SQUARE_EQUIVALENT = "square-equivalent"
    DISCREPANCY = "discrepancy"
    DEGENERATE = "degenerate"

    def __str__(self):
        return self.value


def compare(printed: int, derived: int) -> Status:
    if printed == derived:
        return Status.MATCH
    if printed > 0 and derived > 0 and squarefree_part(printed) == squarefree_part(derived):
        return Status.SQUARE_EQUIVALENT
    return Status.DISCREPANCY


@dataclass(frozen=True)
class Corollary4Values:
    s: int
    t: int
    A: int
    B: int
    C: int
    D: int
    E: int
    F_printed: int
    F_derived: int

    @property
    def F_status(self) -> Status:
        return compare(self.F_printed, self.F_derived)

    def derived(self) -> dict[str, int]:
        return {"A": self.A, "B": self.B, "C": self.C, "D": self.D, "E": self.E, "F": self.F_derived}


def _corollary4(s: int, t: int) -> Corollary4Values:
    s2, t2 = s * s, t * t
    return Corollary4Values(
        s, t,
        A=s * t * (s2 - t2),
        B=s * t * (s2 + t2) // 2,
        C=s2 * s2 - t2 * t2,
        D=2 * (s2 * s2 + t2 * t2),
        E=s2 * s2 + t2 * t2 + 6 * s2 * t2,
        F_printed=4 * s2 * t2 - s2 * s2 - t2 * t2,
        F_derived=6 * s2 * t2 - s2 * s2 - t2 * t2,
    )


def corollary4(p: TriplePair | tuple[int, int]) -> Corollary4Values:
    """The six two-parameter expressions for a valid generator pair.

    ``F`` is reported twice: as printed (``4s^2t^2 - s^4 - t^4``) and as
    forced by the triangle (``b^2 - a^2 = 6s^2t^2 - s^4 - t^4``).
    """
    if not isinstance(p, TriplePair):
        p = TriplePair(*p)
    return _corollary4(p.s, p.t)


def _witness(tr: PythTriple, which: str) -> PythTriple:
    """Integer triangle whose half-area is the named quantity times a square."""
    a, b = tr.a, tr.b
    if which == "A":
        return tr
    if which == "B":  # bc = 4B
        return leg_hyp_transform(tr, b)
    if which == "C":  # ac
        return leg_hyp_transform(tr, a)
    if which == "D":  # a^2 + c^2, hypotenuse of the ac-triangle
        return leg_hyp_transform(leg_hyp_transform(tr, a), b * b)
    if which == "E":  # b^2 + c^2
        return leg_hyp_transform(leg_hyp_transform(tr, b), a * a)
    if which == "F":  # |b^2 - a^2|, a leg of (2ab, |b^2 - a^2|, c^2)
        t3 = lemma1_transforms(tr)[2].triple
        return leg_hyp_transform(t3, abs(b * b - a * a))
    raise DomainError(f"unknown quantity {which!r}; expected one of ABCDEF")


_WITNESS_LABEL = {
    "A": "area",
    "B": "leg-hyp(b)",
    "C": "leg-hyp(a)",
    "D": "leg-hyp(a)+leg-hyp",
    "E": "leg-hyp(b)+leg-hyp",
    "F": "lemma1.3+leg-hyp",
}


def certify_quantity(s: int, t: int, which: str, method: str = "corollary4") -> CongruentCertificate:
    """Certificate for one of A..F (F meaning ``|F_derived|``) at ``(s, t)``.

    Any ``s > t >= 1`` is accepted; families use non-primitive pairs.
    """
    tr = generated_triple(s, t)
    value = abs(_corollary4(s, t).derived()[which])
    return certify(value, _witness(tr, which), _WITNESS_LABEL[which], method=method)


def corollary4_certificates(p: TriplePair | tuple[int, int]) -> dict[str, CongruentCertificate]:
    v = corollary4(p)
    return {q: certify_quantity(v.s, v.t, q) for q in "ABCDEF"}


@dataclass(frozen=True)
class VariantValue:
    x: int
    y: int
    derived: int  # x^4 + 4y^4
    printed: int  # x^4 + 4y^2
    squarefree: int
    status: Status
    certificate: CongruentCertificate


def remark5_variant(x: int, y: int) -> VariantValue:
    """Substitute ``s = x^2, t = 2y^2`` into ``B``; drop square factors.

    ``B = x^2 y^2 (x^4 + 4y^4)``, so the congruent part is ``x^4 + 4y^4``.
    """
    if x < 1 or y < 1:
        raise InvalidParameters("x and y must be positive")
    if x % 2 == 0:
        raise InvalidParameters(f"x must be odd, got {x}")
    if gcd(x, 2 * y) != 1:
        raise InvalidParameters(f"gcd(x, 2y) = {gcd(x, 2 * y)}, need 1")
    if x * x <= 2 * y * y:
        raise InvalidParameters(f"need x^2 > 2y^2, got x={x}, y={y}")
    s, t = x * x, 2 * y * y
    TriplePair(s, t)
    derived = x ** 4 + 4 * y ** 4
    printed = x ** 4 + 4 * y ** 2
    cert = certify(derived, _witness(generated_triple(s, t), "B"), "leg-hyp(b)", method="remark5")
    return VariantValue(x, y, derived, printed, cert.n, compare(printed, derived), cert)


# Class families ------------------------------------------------------------

Poly = Callable[[int], int]


@dataclass(frozen=True)
class _Family:
    n_class: Poly
    n_label: str
    printed: tuple[Poly, Poly, Poly]
    # which of A..F each sub-entry reproduces
    sources: tuple[str, str, str]


FAMILIES: dict[str, _Family] = {
    "A": _Family(
        lambda k: 4 * k, "4k",
        (lambda k: k * (k * k - 1),
         lambda k: 2 * k * (k * k + 1),
         lambda k: k ** 4 - 1),
        ("A", "C", "B"),
    ),
    "B": _Family(
        lambda k: 4 * k + 1, "4k+1",
        (lambda k: k * (2 * k + 1) * (4 * k + 1),
         lambda k: 2 * k * (2 * k + 1) * (8 * k * k + 4 * k + 1),
         lambda k: (4 * k + 1) * (8 * k * k + 4 * k + 1)),
        ("A", "B", "C"),
    ),
    "C": _Family(
        lambda k: 2 * k + 1, "2k+1",
        (lambda k: k * (k + 1) * (2 * k + 1),
         lambda k: 2 * k * (k + 1) * (2 * k * k + 2 * k + 1),
         lambda k: (2 * k + 1) * (2 * k * k + 2 * k + 1)),
        ("A", "B", "C"),
    ),
    "D": _Family(
        lambda k: 4 * k + 3, "4k+3",
        (lambda k: 2 * (k + 1) * (2 * k + 1) * (4 * k + 3),
         lambda k: (k + 1) * (2 * k + 1) * (8 * k * k + 12 * k + 5),
         lambda k: (4 * k + 3) * (8 * k * k + 12 * k + 5)),
        ("A", "B", "C"),
    ),
    "E": _Family(
        lambda k: 8 * k, "8k",
        (lambda k: 2 * k * (2 * k + 1) * (2 * k - 1),
         lambda k: k * (4 * k * k + 1),
         lambda k: (2 * k + 1) * (4 * k * k + 1)),
        ("A", "C", "B"),
    ),
    "F": _Family(
        lambda k: 8 * k + 1, "8k+1",
        (lambda k: k * (4 * k + 1) * (8 * k + 1),
         lambda k: 2 * k * (4 * k + 1) * (32 * k * k + 8 * k + 1),
         lambda k: (8 * k + 1) * (32 * k * k + 8 * k + 1)),
        ("A", "B", "C"),
    ),
    "G": _Family(
        lambda k: 8 * k + 3, "8k+3",
        (lambda k: 2 * (2 * k + 1) * (4 * k + 1) * (8 * k + 3),
         lambda k: (8 * k + 3) * (32 * k * k + 24 * k + 5),
         lambda k: (2 * k + 1) * (4 * k + 1) * (32 * k * k + 24 * k + 5)),
        ("A", "C", "B"),
    ),
}


@dataclass(frozen=True)
class FamilyEntry:
    class_id: str
    sub_id: int
    k: int
    n_class: int
    s: int
    t: int
    source: str  # which of A..F the derived value is
    printed_value: int
    derived_value: int
    status: Status
    certificate: CongruentCertificate | None = field(default=None, compare=False)

    @property
    def name(self) -> str:
        return f"{self.class_id}{self.sub_id}"


def theorem6(class_id: str, k: int, *, certify_derived: bool = True) -> tuple[FamilyEntry, ...]:
    """The three entries of one family at ``k``.

    ``(s, t)`` is the canonical difference-of-squares split of the class
    integer; ``k = 1`` in family A gives ``t = 0`` and is reported as
    degenerate.
    """
    fam = FAMILIES.get(class_id)
    if fam is None:
        raise DomainError(f"unknown family {class_id!r}; expected one of {''.join(FAMILIES)}")
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    n = fam.n_class(k)
    s, t = difference_of_squares(n)
    entries = []
    derived_all = _corollary4(s, t).derived() if t >= 1 else None
    for sub, (poly, source) in enumerate(zip(fam.printed, fam.sources), start=1):
        printed = poly(k)
        if derived_all is None:
            entries.append(FamilyEntry(class_id, sub, k, n, s, t, source, printed, 0, Status.DEGENERATE))
            continue
        derived = derived_all[source]
        cert = certify_quantity(s, t, source, method="theorem6") if certify_derived else None
        entries.append(FamilyEntry(class_id, sub, k, n, s, t, source, printed, derived,
                                   compare(printed, derived), cert))
    return tuple(entries)


@dataclass
class FamilyReport:
    entries: list[FamilyEntry]

    @property
    def tallies(self) -> Counter:
        return Counter(e.status for e in self.entries)

    @property
    def discrepancies(self) -> list[FamilyEntry]:
        return [e for e in self.entries if e.status is Status.DISCREPANCY]

    def discrepancy_names(self) -> set[str]:
        return {e.name for e in self.discrepancies}


def _family_row(item: tuple[str, int]) -> tuple[FamilyEntry, ...]:
    return theorem6(*item)


def sweep_families(k_max: int, workers: int = 1) -> FamilyReport:
    """All 21 entries for ``k = 1..k_max``, ordered by (class, sub, k)."""
    if k_max < 1:
        return FamilyReport([])
    items = [(c, k) for c in FAMILIES for k in range(1, k_max + 1)]
    rows = ordered_map(_family_row, items, workers)
    entries = [e for row in rows for e in row]
    entries.sort(key=lambda e: (e.class_id, e.sub_id, e.k))
    return FamilyReport(entries)
