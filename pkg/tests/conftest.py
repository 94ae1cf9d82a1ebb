import random
from fractions import Fraction

from ellfm import (
    DEFAULT_ENTRY,
    BasePoint,
    KodairaFiber,
    MarkedConfig,
    QZ,
    QZPair,
    catalog_get,
    twist,
    twist_class,
)


def make_order_p_twist(p, base=None, point="2"):
    """The order-p twist of the default base at a fixed unmarked point."""
    if base is None:
        base = catalog_get(DEFAULT_ENTRY).surface
    cls = twist_class(base, [(BasePoint.parse(point), QZPair(QZ(1, p), QZ()))])
    return twist(base, cls)


# Label pool for randomized rigidity configurations: distinct as
# (kind, index, multiplicity) triples, multiplicities included.
LABEL_POOL = [
    KodairaFiber.from_token("I(1)"),
    KodairaFiber.from_token("I(2)"),
    KodairaFiber.from_token("I(3)"),
    KodairaFiber.from_token("II"),
    KodairaFiber.from_token("III"),
    KodairaFiber.from_token("IV*"),
    KodairaFiber.from_token("III*"),
    KodairaFiber.from_token("I*(0)"),
    KodairaFiber.from_token("I(1)", 2),
    KodairaFiber.from_token("smooth", 3),
]

_COORDINATE_POOL = [Fraction(n) for n in range(-6, 7)] + [
    Fraction(1, 2),
    Fraction(-1, 2),
    Fraction(3, 2),
    Fraction(1, 3),
    Fraction(-2, 3),
    Fraction(5, 2),
]


def random_marked_config(rng: random.Random) -> MarkedConfig:
    """3 to 8 distinct marked points on P^1(Q) carrying 1 to 4 fiber labels."""
    n_points = rng.randint(3, 8)
    n_types = rng.randint(1, 4)
    types = rng.sample(LABEL_POOL, n_types)
    coords = rng.sample(_COORDINATE_POOL, n_points)
    points = [BasePoint.from_rational(c) for c in coords]
    if rng.random() < 0.3:
        points[0] = BasePoint.infinity()
    return MarkedConfig((pt, rng.choice(types)) for pt in points)
