"""Moebius rigidity of marked fiber configurations.

Partner counting is only certified when no nontrivial Moebius transformation
of P^1 preserves the base's typed marked points: otherwise an isomorphism
could move the base around.  Three marked points of pairwise different types
are always rigid; repeated types can leave symmetries.
"""

from ellfm import BasePoint, KodairaFiber, MarkedConfig, rigidity_check


def config(entries):
    return MarkedConfig(
        (BasePoint.parse(pt), KodairaFiber.from_token(token)) for pt, token in entries
    )


def inspect(tag, entries):
    report = rigidity_check(config(entries))
    print(f"--- {tag}")
    print(f"    rigid: {report.rigid}   finite group: {report.finite}   order: {report.order}")
    if report.symmetries is not None:
        for m in report.symmetries:
            a, b, c, d = m.entries()
            print(f"    z -> ({a}z + {b}) / ({c}z + {d})")
    else:
        print("    (fewer than three marked points: a continuum of maps remains)")
    print()


# Three pairwise distinct types: every symmetry must fix each point, and a
# Moebius map with three fixed points is the identity.
inspect("III* at 0, I(2) at 1, I(1) at inf", [("0", "III*"), ("1", "I(2)"), ("inf", "I(1)")])

# Two marked points are never rigid, whatever the types: the stabilizer of
# two points is one-dimensional (z -> cz for the pair {0, inf}).
inspect("I(1) at 0 and inf", [("0", "I(1)"), ("inf", "I(1)")])

# Three points of one type realize the full symmetric group S3 on {0, 1, inf}.
inspect("I(1) at 0, 1, inf", [("0", "I(1)"), ("1", "I(1)"), ("inf", "I(1)")])

# Twelve equal labels in arithmetic progression keep one reflection.
inspect("I(1) at 0..11", [(str(k), "I(1)") for k in range(12)])

# Breaking the pattern restores rigidity.
inspect(
    "I(1) at 0..10 and at 100",
    [(str(k), "I(1)") for k in range(11)] + [("100", "I(1)")],
)
