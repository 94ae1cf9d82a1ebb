"""Relatively minimal elliptic surfaces over P^1, given by marked fiber data.

A surface is a finite configuration of marked points on P^1(Q), each labelled
with a Kodaira fiber type, plus a flag recording whether the fibration has a
section.  All numerical invariants (Euler number, chi of the structure sheaf,
canonical degree, Kodaira dimension, rationality) are derived from that data
by the standard formulas for elliptic fibrations, in exact arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable

from .errors import (
    DegenerateSurfaceError,
    DuplicatePointError,
    InvalidConfigError,
    InvalidDocumentError,
    MultiplicityError,
    NotEllipticError,
    UnknownLambdaError,
)
from .fibers import FiberKind, KodairaFiber, euler_contribution
from .projective import BasePoint

Entry = tuple[BasePoint, KodairaFiber]


@dataclass(frozen=True)
class MarkedConfig:
    """Distinct marked points on P^1, each carrying a fiber type.

    Unmarked points are implicitly smooth non-multiple fibers, so an entry of
    kind smooth with multiplicity 1 is redundant and rejected.  Entries are
    stored sorted by base point, which makes equality and serialization
    canonical.
    """

    entries: tuple[Entry, ...] = ()

    def __init__(self, entries: Iterable[Entry] = ()) -> None:
        normalized = tuple(sorted(entries, key=lambda e: e[0].sort_key()))
        seen = set()
        for point, fiber in normalized:
            if not isinstance(point, BasePoint) or not isinstance(fiber, KodairaFiber):
                raise TypeError("config entries must be (BasePoint, KodairaFiber) pairs")
            if point in seen:
                raise DuplicatePointError(f"base point {point} marked twice")
            seen.add(point)
            if fiber.kind is FiberKind.SMOOTH and fiber.multiplicity == 1:
                raise InvalidConfigError(
                    "a smooth non-multiple fiber is the unmarked default; do not mark it"
                )
        object.__setattr__(self, "entries", normalized)

    @property
    def points(self) -> tuple[BasePoint, ...]:
        return tuple(point for point, _ in self.entries)

    @property
    def euler_number(self) -> int:
        return sum(euler_contribution(fiber) for _, fiber in self.entries)

    @property
    def multiplicities(self) -> tuple[int, ...]:
        """Multiplicities of the multiple fibers, in point order."""
        return tuple(f.multiplicity for _, f in self.entries if f.multiplicity > 1)

    def fiber_at(self, point: BasePoint) -> KodairaFiber | None:
        for marked, fiber in self.entries:
            if marked == point:
                return fiber
        return None

    def with_entries(self, extra: Iterable[Entry]) -> "MarkedConfig":
        return MarkedConfig(self.entries + tuple(extra))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


@dataclass(frozen=True)
class EllipticSurface:
    """A relatively minimal elliptic surface over P^1.

    Construction enforces the necessary shape of such a fibration: the Euler
    number is a positive multiple of 12, and a surface with a section carries
    no multiple fibers.  The ``name`` is a label only and never participates
    in equality.
    """

    config: MarkedConfig
    has_section: bool = False
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        if self.has_section:
            for point, fiber in self.config:
                if fiber.multiplicity > 1:
                    raise MultiplicityError(
                        f"surface with a section cannot carry the multiple fiber at {point}"
                    )
        e = self.config.euler_number
        if e == 0:
            raise DegenerateSurfaceError(
                "Euler number 0 means a fiber bundle, not an elliptic surface with singular fibers"
            )
        if e % 12 != 0:
            raise NotEllipticError(
                f"Euler number {e} is not a multiple of 12; no relatively minimal "
                "elliptic fibration over P^1 has this configuration"
            )


class KodairaDimension(Enum):
    MINUS_INFINITY = "-inf"
    ZERO = "0"
    ONE = "1"


def _config_of(obj) -> MarkedConfig:
    if isinstance(obj, MarkedConfig):
        return obj
    config = getattr(obj, "config", None)
    if isinstance(config, MarkedConfig):
        return config
    raise TypeError(f"expected a surface or marked configuration, got {type(obj).__name__}")


def euler_number(obj) -> int:
    """Topological Euler number: the sum of the marked fibers' contributions."""
    return _config_of(obj).euler_number


def chi(obj) -> int:
    """chi(O) = e / 12 for a relatively minimal elliptic surface over P^1."""
    e = euler_number(obj)
    if e % 12 != 0:
        raise NotEllipticError(f"Euler number {e} is not a multiple of 12")
    return e // 12


def canonical_degree(obj) -> Fraction:
    """Degree of the canonical bundle along the base, as an exact rational.

    The canonical bundle formula over P^1 gives
    deg K = -2 + chi + sum over multiple fibers of (1 - 1/m).
    """
    config = _config_of(obj)
    degree = Fraction(chi(config) - 2)
    for m in config.multiplicities:
        degree += 1 - Fraction(1, m)
    return degree


def kodaira_dimension(obj) -> KodairaDimension:
    """Sign of the canonical degree: negative, zero, or positive."""
    degree = canonical_degree(obj)
    if degree < 0:
        return KodairaDimension.MINUS_INFINITY
    if degree == 0:
        return KodairaDimension.ZERO
    return KodairaDimension.ONE


def is_rational(obj) -> bool:
    """Rational iff chi(O) = 1 and the Kodaira dimension is negative."""
    return chi(obj) == 1 and kodaira_dimension(obj) is KodairaDimension.MINUS_INFINITY


def multisection_index_of_surface(surface: EllipticSurface) -> int:
    """The smallest d admitting a holomorphic d-section, when determinable.

    A section-bearing surface has index 1.  For anything else the index is
    extra data the raw fiber configuration cannot supply; twisted surfaces
    carry it through their twist class instead (see :mod:`ellfm.twists`).
    """
    if surface.has_section:
        return 1
    raise UnknownLambdaError(
        "multisection index of a raw surface without a section is not determined "
        "by its fiber configuration"
    )


def surface_doc(surface: EllipticSurface) -> dict:
    """Canonical JSON-ready document for a surface."""
    return {
        "name": surface.name,
        "has_section": surface.has_section,
        "fibers": [
            {
                "point": str(point),
                "kind": fiber.token(),
                "multiplicity": fiber.multiplicity,
            }
            for point, fiber in surface.config
        ],
    }


def surface_from_doc(doc: dict) -> EllipticSurface:
    """Rebuild a surface from its document, re-validating every invariant.

    Extra keys are ignored so documents enriched with invariants round-trip.
    """
    try:
        name = str(doc.get("name", ""))
        has_section = doc["has_section"]
        raw_fibers = doc["fibers"]
        if not isinstance(has_section, bool) or not isinstance(raw_fibers, list):
            raise TypeError("has_section must be a boolean and fibers a list")
        entries = []
        for item in raw_fibers:
            point = BasePoint.parse(item["point"])
            multiplicity = item.get("multiplicity", 1)
            if not isinstance(multiplicity, int) or isinstance(multiplicity, bool):
                raise TypeError("multiplicity must be an integer")
            entries.append((point, KodairaFiber.from_token(item["kind"], multiplicity)))
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise InvalidDocumentError(f"malformed surface document: {exc}") from exc
    return EllipticSurface(MarkedConfig(entries), has_section=has_section, name=name)
