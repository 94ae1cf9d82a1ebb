"""Twist classes of a rational elliptic surface with section, and the
surfaces they produce.

For a rational base B the Tate-Shafarevich subgroup of the Weil-Chatelet
group vanishes, so the group of twists is the direct sum over base points of
H_1(B_t, Q/Z): a finitely supported assignment of torsion data, (Q/Z)^2 over
smooth fibers and Q/Z over I(n) fibers.  A class supported at smooth points
is realized geometrically by logarithmic transformations: each supported
point acquires a multiple smooth fiber whose multiplicity is the local order.
The Euler number is unchanged and the multisection index of the result is the
order of the class.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Union

from .errors import (
    AdditiveFiberError,
    BaseMismatchError,
    DuplicatePointError,
    InvalidBaseError,
    InvalidDocumentError,
    NotCoprimeError,
    ShapeError,
    UnknownLambdaError,
    UnsupportedTwistError,
)
from .fibers import FiberKind, KodairaFiber
from .projective import BasePoint
from .qz import QZ, QZPair
from .surface import EllipticSurface, MarkedConfig, is_rational

Datum = Union[QZ, QZPair]
SupportEntry = tuple[BasePoint, Datum]


def _check_datum_shape(base: EllipticSurface, point: BasePoint, datum: Datum) -> None:
    fiber = base.config.fiber_at(point)
    if fiber is None:
        # Unmarked point: the fiber of B there is smooth, H_1 = (Q/Z)^2.
        if not isinstance(datum, QZPair):
            raise ShapeError(
                f"fiber of {base.name or 'base'} at {point} is smooth; "
                "the twist datum must be a (Q/Z)^2 pair"
            )
    elif fiber.kind is FiberKind.I:
        if not isinstance(datum, QZ):
            raise ShapeError(
                f"fiber at {point} has type {fiber.token()}; "
                "the twist datum must be a single Q/Z element"
            )
    else:
        raise AdditiveFiberError(
            f"fiber at {point} has additive type {fiber.token()}; "
            "its local twist group is trivial"
        )


@dataclass(frozen=True)
class TwistClass:
    """A finitely supported twist datum over a fixed base surface.

    The base must be rational with a section (the regime where the direct-sum
    description of the twist group is exact).  Zero local data are dropped,
    so the support always consists of points with nonzero datum.
    """

    base: EllipticSurface
    support: tuple[SupportEntry, ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.base, EllipticSurface):
            raise TypeError("TwistClass base must be an EllipticSurface")
        if not self.base.has_section:
            raise InvalidBaseError("twist classes are defined over a base with a section")
        if not is_rational(self.base):
            raise InvalidBaseError(
                "the direct-sum twist model requires a rational base "
                "(nontrivial Tate-Shafarevich classes are not represented)"
            )
        kept = []
        seen = set()
        for point, datum in self.support:
            if not isinstance(point, BasePoint):
                raise TypeError("support points must be BasePoint values")
            if isinstance(datum, tuple):
                datum = QZPair(*datum)
            if not isinstance(datum, (QZ, QZPair)):
                raise TypeError("twist data must be QZ or QZPair values")
            if point in seen:
                raise DuplicatePointError(f"twist datum assigned twice at {point}")
            seen.add(point)
            if not datum:
                continue
            _check_datum_shape(self.base, point, datum)
            kept.append((point, datum))
        kept.sort(key=lambda item: item[0].sort_key())
        object.__setattr__(self, "support", tuple(kept))

    @property
    def order(self) -> int:
        return math.lcm(*(datum.order for _, datum in self.support)) if self.support else 1

    @property
    def is_zero(self) -> bool:
        return not self.support

    def __bool__(self) -> bool:
        return bool(self.support)

    def _require_same_base(self, other: "TwistClass") -> None:
        if self.base != other.base:
            raise BaseMismatchError("twist classes live over different base surfaces")

    def __add__(self, other: "TwistClass") -> "TwistClass":
        if not isinstance(other, TwistClass):
            return NotImplemented
        self._require_same_base(other)
        merged: dict[BasePoint, Datum] = dict(self.support)
        for point, datum in other.support:
            merged[point] = merged[point] + datum if point in merged else datum
        return TwistClass(self.base, tuple(merged.items()))

    def __neg__(self) -> "TwistClass":
        return TwistClass(self.base, tuple((p, -d) for p, d in self.support))

    def __sub__(self, other: "TwistClass") -> "TwistClass":
        if not isinstance(other, TwistClass):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar: int) -> "TwistClass":
        if not isinstance(scalar, int):
            return NotImplemented
        return TwistClass(self.base, tuple((p, scalar * d) for p, d in self.support))

    __rmul__ = __mul__

    def to_doc(self) -> dict:
        support = []
        for point, datum in self.support:
            if isinstance(datum, QZPair):
                encoded: object = [str(datum.first), str(datum.second)]
            else:
                encoded = str(datum)
            support.append({"point": str(point), "datum": encoded})
        return {"base": self.base.name, "support": support}

    @classmethod
    def from_doc(cls, doc: dict, base: EllipticSurface) -> "TwistClass":
        try:
            assignments = []
            for item in doc["support"]:
                point = BasePoint.parse(item["point"])
                raw = item["datum"]
                if isinstance(raw, str):
                    datum: Datum = QZ.parse(raw)
                else:
                    first, second = raw
                    datum = QZPair(QZ.parse(first), QZ.parse(second))
                assignments.append((point, datum))
        except (KeyError, TypeError, ValueError, AttributeError) as exc:
            raise InvalidDocumentError(f"malformed twist-class document: {exc}") from exc
        return cls(base, tuple(assignments))


def trivial_class(base: EllipticSurface) -> TwistClass:
    return TwistClass(base)


def twist_class(base: EllipticSurface, assignments: Iterable[SupportEntry]) -> TwistClass:
    """Validated twist class from (point, datum) assignments; zeros dropped."""
    return TwistClass(base, tuple(assignments))


@dataclass(frozen=True)
class TwistedSurface:
    """An elliptic surface together with the twist class that produced it.

    The pair (surface, identification of its relative Jacobian with the base)
    is remembered through ``twist_class``; two twisted surfaces are equal
    exactly when their classes agree, which is the model's notion of
    isomorphism of pairs.
    """

    surface: EllipticSurface
    twist_class: TwistClass

    def __post_init__(self) -> None:
        expected = _twisted_config(self.twist_class)
        if self.surface.config != expected:
            raise ValueError("surface does not match the configuration its twist class dictates")

    @property
    def base(self) -> EllipticSurface:
        return self.twist_class.base

    @property
    def config(self) -> MarkedConfig:
        return self.surface.config

    @property
    def name(self) -> str:
        return self.surface.name

    @property
    def multisection_index(self) -> int:
        return self.twist_class.order


def _twisted_config(cls: TwistClass) -> MarkedConfig:
    extra = [
        (point, KodairaFiber(FiberKind.SMOOTH, 0, datum.order))
        for point, datum in cls.support
    ]
    return cls.base.config.with_entries(extra)


def _default_name(cls: TwistClass) -> str:
    if cls.is_zero:
        return cls.base.name
    tags = "+".join(f"{datum.order}I0" for _, datum in cls.support)
    return f"{cls.base.name}+{tags}"


def twist(base: EllipticSurface, cls: TwistClass, name: str | None = None) -> TwistedSurface:
    """Apply the logarithmic transformations encoded by a twist class.

    Only classes supported over smooth fibers of the base are realized: the
    result of a logarithmic transformation at an I(n) fiber is outside this
    model and rejected.
    """
    if base != cls.base:
        raise BaseMismatchError("twist class does not belong to this base surface")
    for point, _ in cls.support:
        if base.config.fiber_at(point) is not None:
            raise UnsupportedTwistError(
                f"twisting at the marked {base.config.fiber_at(point).token()} fiber at "
                f"{point} is not modelled; only smooth points are supported"
            )
    surface = EllipticSurface(
        _twisted_config(cls),
        has_section=cls.is_zero,
        name=name if name is not None else _default_name(cls),
    )
    return TwistedSurface(surface, cls)


def jacobian(twisted: TwistedSurface) -> EllipticSurface:
    """The relative Jacobian: the base surface, all multiplicities stripped."""
    return twisted.twist_class.base


def relative_jacobian_power(twisted: TwistedSurface, i: int) -> TwistedSurface:
    """The surface of the i-th multiple of the twist class.

    Index 1 returns the surface itself, index 0 the trivial twist of the
    Jacobian.  Any other index must be coprime to the multisection index for
    the corresponding moduli space to be a smooth elliptic surface.
    """
    base = twisted.twist_class.base
    if i == 0:
        return twist(base, trivial_class(base))
    lam = twisted.multisection_index
    if math.gcd(i, lam) != 1:
        raise NotCoprimeError(
            f"index {i} shares a factor with the multisection index {lam}"
        )
    return twist(base, i * twisted.twist_class, name=f"{twisted.name}[{i}]")


def multisection_index(obj) -> int:
    """Multisection index of a section-bearing or twist-constructed surface."""
    if isinstance(obj, TwistedSurface):
        return obj.multisection_index
    if isinstance(obj, EllipticSurface):
        if obj.has_section:
            return 1
        raise UnknownLambdaError(
            "multisection index of a raw surface without a section is not determined "
            "by its fiber configuration"
        )
    raise TypeError(f"expected a surface, got {type(obj).__name__}")


def default_twist_point(base: EllipticSurface) -> BasePoint:
    """Smallest non-negative integer point where the base fiber is smooth."""
    k = 0
    while True:
        point = BasePoint(k)
        if base.config.fiber_at(point) is None:
            return point
        k += 1
