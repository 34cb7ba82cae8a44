"""Pythagorean triples, the three leg/hypotenuse transforms, and the
congruent numbers read off from them.

Every congruent number produced here comes with a *witness*: an integer right
triangle whose half-area equals the number times a perfect square.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .arith import squarefree_decomposition
from .errors import InvalidParameters


@dataclass(frozen=True)
class PythTriple:
    a: int
    b: int
    c: int

    def __post_init__(self):
        if min(self.a, self.b, self.c) < 1:
            raise InvalidParameters(f"triple sides must be positive: {self.as_tuple()}")
        if self.a * self.a + self.b * self.b != self.c * self.c:
            raise InvalidParameters(f"{self.as_tuple()} is not a Pythagorean triple")

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    @property
    def half_area(self) -> int:
        # one leg of an integer right triangle is always even
        return self.a * self.b // 2

    @property
    def is_primitive(self) -> bool:
        return gcd(self.a, self.b, self.c) == 1

    def ordered(self) -> PythTriple:
        """Same triangle with legs swapped if needed so that ``b > a``."""
        if self.a > self.b:
            return PythTriple(self.b, self.a, self.c)
        return self

    def scaled(self, k: int) -> PythTriple:
        return PythTriple(k * self.a, k * self.b, k * self.c)

    def __str__(self):
        return f"({self.a}, {self.b}, {self.c})"


@dataclass(frozen=True)
class TriplePair:
    """Generator parameters ``s > t >= 1``, coprime, of opposite parity."""

    s: int
    t: int

    def __post_init__(self):
        s, t = self.s, self.t
        if not (isinstance(s, int) and isinstance(t, int)):
            raise InvalidParameters("s and t must be integers")
        if t < 1:
            raise InvalidParameters(f"need t >= 1, got t={t}")
        if s <= t:
            raise InvalidParameters(f"need s > t, got s={s}, t={t}")
        if gcd(s, t) != 1:
            raise InvalidParameters(f"gcd(s, t) = {gcd(s, t)}, need 1")
        if (s - t) % 2 == 0:
            raise InvalidParameters(f"s={s} and t={t} have the same parity")


def from_parameters(p: TriplePair | tuple[int, int]) -> PythTriple:
    """Primitive triple ``(s^2 - t^2, 2st, s^2 + t^2)``."""
    if not isinstance(p, TriplePair):
        p = TriplePair(*p)
    s, t = p.s, p.t
    return PythTriple(s * s - t * t, 2 * s * t, s * s + t * t)


def generated_triple(s: int, t: int) -> PythTriple:
    """``(s^2 - t^2, 2st, s^2 + t^2)`` for any ``s > t >= 1``.

    Unlike :func:`from_parameters` no coprimality or parity is required, so
    the result may be non-primitive.
    """
    if not s > t >= 1:
        raise InvalidParameters(f"need s > t >= 1, got s={s}, t={t}")
    return PythTriple(s * s - t * t, 2 * s * t, s * s + t * t)


def leg_hyp_transform(tr: PythTriple, leg: int) -> PythTriple:
    """``(2xz, y^2, x^2 + z^2)`` where ``x`` is the chosen leg, ``y`` the other.

    The half-area is ``xz * y^2``, so ``x*z`` is a congruent number up to a
    square. ``leg`` is the value of the leg, not its position.
    """
    if leg == tr.a:
        x, y = tr.a, tr.b
    elif leg == tr.b:
        x, y = tr.b, tr.a
    else:
        raise InvalidParameters(f"{leg} is not a leg of {tr}")
    return PythTriple(2 * x * tr.c, y * y, x * x + tr.c * tr.c)


@dataclass(frozen=True)
class LabeledTriple:
    label: str
    triple: PythTriple


def lemma1_transforms(tr: PythTriple) -> tuple[LabeledTriple, LabeledTriple, LabeledTriple]:
    """The three derived triples, computed after ordering legs so ``b > a``.

    - ``lemma1.1``: ``(2ac, b^2, a^2 + c^2)``
    - ``lemma1.2``: ``(2bc, a^2, b^2 + c^2)``
    - ``lemma1.3``: ``(2ab, b^2 - a^2, c^2)``
    """
    tr = tr.ordered()
    a, b, c = tr.as_tuple()
    return (
        LabeledTriple("lemma1.1", PythTriple(2 * a * c, b * b, a * a + c * c)),
        LabeledTriple("lemma1.2", PythTriple(2 * b * c, a * a, b * b + c * c)),
        LabeledTriple("lemma1.3", PythTriple(2 * a * b, b * b - a * a, c * c)),
    )


@dataclass(frozen=True)
class CongruentValue:
    """An integer shown congruent by ``witness``.

    ``witness.half_area == value * w**2`` for some integer ``w``; ``chain``
    names the transforms applied to the source triple to reach the witness.
    """

    label: str
    value: int
    squarefree: int
    cofactor: int
    witness: PythTriple
    chain: tuple[str, ...]

    @property
    def has_square_factor(self) -> bool:
        return self.cofactor > 1


def _value(label: str, value: int, witness: PythTriple, chain: tuple[str, ...]) -> CongruentValue:
    m, k = squarefree_decomposition(value)
    return CongruentValue(label, value, m, k, witness, chain)


def corollary2_numbers(tr: PythTriple) -> tuple[CongruentValue, ...]:
    """Five congruent numbers ``ac, bc, b^2-a^2, a^2+c^2, b^2+c^2`` (``b > a``).

    ``ac`` and ``bc`` come straight from the first two transforms. The other
    three apply the leg/hypotenuse transform once more: to the ``b^2-a^2``
    leg of ``lemma1.3``, the ``b^2`` leg of ``lemma1.1`` and the ``a^2`` leg
    of ``lemma1.2``.
    """
    tr = tr.ordered()
    a, b, c = tr.as_tuple()
    t1, t2, t3 = (lt.triple for lt in lemma1_transforms(tr))
    return (
        _value("ac", a * c, t1, ("lemma1.1",)),
        _value("bc", b * c, t2, ("lemma1.2",)),
        _value("b2-a2", b * b - a * a, leg_hyp_transform(t3, b * b - a * a), ("lemma1.3", "leg-hyp")),
        _value("a2+c2", a * a + c * c, leg_hyp_transform(t1, b * b), ("lemma1.1", "leg-hyp")),
        _value("b2+c2", b * b + c * c, leg_hyp_transform(t2, a * a), ("lemma1.2", "leg-hyp")),
    )


def area_congruent(tr: PythTriple) -> CongruentValue:
    """Half-area ``ab/2`` of the triangle itself."""
    return _value("area", tr.half_area, tr, ())
