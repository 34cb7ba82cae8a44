"""JSON-lines catalog records.

One record per line::

    {"n": "15", "method": "theorem8", "params": {"d": "10"},
     "status": "certified", "certificate": {...}, "details": {...}}

Integers are decimal strings, rationals ``"p/q"``. ``n`` and ``certificate``
are null for records that carry no congruent number (unsolvable Pell
equations, inadmissible ``d``, degenerate family members).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import IO, Iterable

from .certificate import CongruentCertificate, certificate_from_json, certificate_to_json
from .families import FamilyEntry, Status
from .pipeline import PellCongruentResult, SweepOutcome

METHODS = (
    "corollary2", "corollary4", "theorem6", "remark5",
    "theorem8", "theorem10", "corollary9", "closing-example",
)

CERTIFIED = "certified"
DISCREPANCY_FLAGGED = "discrepancy-flagged"


@dataclass
class CatalogRecord:
    method: str
    params: dict[str, str]
    status: str
    n: int | None = None
    certificate: CongruentCertificate | None = None
    details: dict[str, str] = field(default_factory=dict)

    def key(self) -> tuple:
        return (self.n, self.method, tuple(sorted(self.params.items())))

    def to_json(self) -> dict:
        obj = {
            "n": None if self.n is None else str(self.n),
            "method": self.method,
            "params": dict(self.params),
            "status": self.status,
            "certificate": None if self.certificate is None else certificate_to_json(self.certificate),
        }
        if self.details:
            obj["details"] = dict(self.details)
        return obj

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(", ", ": "))

    @classmethod
    def from_json(cls, obj: dict) -> CatalogRecord:
        cert = obj.get("certificate")
        n = obj.get("n")
        return cls(
            method=obj["method"],
            params=dict(obj.get("params") or {}),
            status=obj["status"],
            n=None if n is None else int(n),
            certificate=None if cert is None else certificate_from_json(cert),
            details=dict(obj.get("details") or {}),
        )


def _s(v) -> str:
    return str(v)


def pell_record(result: PellCongruentResult, params: dict[str, str]) -> CatalogRecord:
    sol = result.solution
    details = {"raw": _s(result.raw), "x": _s(sol.x), "y": _s(sol.y), "d": _s(result.d)}
    if result.bonus is not None:
        details["bonus_raw"] = _s(result.bonus_raw)
        details["bonus"] = _s(result.bonus)
    if result.outside_hypotheses:
        details["outside_hypotheses"] = "true"
    return CatalogRecord(result.method, params, CERTIFIED, result.n, result.certificate, details)


def failure_record(method: str, params: dict[str, str], error: str, reason: str) -> CatalogRecord:
    status = {"Unsolvable": "unsolvable", "NotAdmissible": "not-admissible"}.get(error, "error")
    return CatalogRecord(method, params, status, details={"error": error, "reason": reason})


def sweep_record(method: str, outcome: SweepOutcome) -> CatalogRecord:
    params = {"d": _s(outcome.d)}
    if outcome.result is not None:
        return pell_record(outcome.result, params)
    return failure_record(method, params, outcome.error, outcome.reason)


def family_record(entry: FamilyEntry) -> CatalogRecord:
    params = {"class": entry.class_id, "sub": _s(entry.sub_id), "k": _s(entry.k)}
    details = {
        "n_class": _s(entry.n_class),
        "s": _s(entry.s),
        "t": _s(entry.t),
        "source": entry.source,
        "printed": _s(entry.printed_value),
        "derived": _s(entry.derived_value),
        "comparison": entry.status.value,
    }
    if entry.status is Status.DEGENERATE:
        return CatalogRecord("theorem6", params, "degenerate", details=details)
    status = DISCREPANCY_FLAGGED if entry.status is Status.DISCREPANCY else CERTIFIED
    return CatalogRecord("theorem6", params, status, entry.certificate.n, entry.certificate, details)


def write_records(records: Iterable[CatalogRecord], stream: IO[str]) -> int:
    count = 0
    for rec in records:
        stream.write(rec.dumps() + "\n")
        count += 1
    return count
