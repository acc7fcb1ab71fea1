"""Circular order on periodic boundary points, and the linking test.

Boundary points of the disk are coded by infinite reduced words; purely
periodic ones are represented by their (cyclically reduced) period.  The
four boundary arcs occur anticlockwise in the cycle (a, B, b, A) starting
from the order origin I between the A-arc and the a-arc, and comparisons
follow the two-rule letterwise scheme implemented in the kernel: first
letters are ranked in the cycle starting at a; after a common prefix
ending in letter e, the next letters are ranked in the cycle starting at
the inverse of e.

Two axes are linked exactly when their endpoint pairs alternate around
the circle; a linked pair of lifts crosses transversally.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from selfint import _kernel
from selfint.errors import WordError
from selfint.words import encode, inverse, is_cyclically_reduced, letter_inverse

logger = logging.getLogger(__name__)

#: Anticlockwise arc cycle starting at the a-arc.
CYCLE = ("a", "B", "b", "A")


@dataclass(frozen=True)
class CyclicAlphabet:
    """The four letters read anticlockwise starting from ``base``."""

    base: str
    ordering: tuple[str, str, str, str]


def alphabet_order(base: str) -> CyclicAlphabet:
    """Rotation of the arc cycle (a, B, b, A) starting at ``base``."""
    if base not in CYCLE:
        raise WordError(f"unknown letter {base!r}")
    k = CYCLE.index(base)
    return CyclicAlphabet(base=base, ordering=CYCLE[k:] + CYCLE[:k])


@dataclass(frozen=True)
class PeriodicEndpoint:
    """The boundary point period^inf for a cyclically reduced period."""

    period: str

    def __post_init__(self):
        if not is_cyclically_reduced(self.period):
            raise WordError(f"period {self.period!r} is not cyclically reduced")

    def raw(self) -> bytes:
        return encode(self.period)


def compare(x: PeriodicEndpoint, y: PeriodicEndpoint) -> int:
    """-1, 0 or +1: position of x relative to y anticlockwise from I.

    Equality means the two infinite words coincide, which is decided by
    comparing the first |x.period| + |y.period| letters.
    """
    return _kernel.cmp_endpoints(x.raw(), y.raw())


@dataclass(frozen=True)
class GeodesicLift:
    """A lift crossing the fundamental domain, named by its endpoints.

    ``plus`` is where the lift points, ``minus`` where it comes from;
    their first letters always differ (this is what crossing the domain
    means), and the minus period is the inverse word of the plus period.
    ``kind``/``block``/``offset`` carry the lift family labels: kind
    "alpha" starts inside an a-type run, "beta" inside a b-type run,
    ``block`` is the 1-based block index and ``offset`` the shift into
    the run.
    """

    plus: PeriodicEndpoint
    minus: PeriodicEndpoint
    kind: str
    block: int
    offset: int

    def __post_init__(self):
        if self.plus.period[0] == letter_inverse(self.minus.period[0]):
            raise WordError(
                f"lift endpoints {self.plus.period!r}/{self.minus.period!r} "
                f"do not cross the fundamental domain"
            )

    @classmethod
    def from_period(cls, period: str, kind: str = "alpha",
                    block: int = 1, offset: int = 0) -> "GeodesicLift":
        return cls(
            plus=PeriodicEndpoint(period),
            minus=PeriodicEndpoint(inverse(period)),
            kind=kind,
            block=block,
            offset=offset,
        )


def linked(g1: GeodesicLift, g2: GeodesicLift) -> bool:
    """True iff the endpoint pairs of g1 and g2 alternate around the circle.

    Coincident axes are not linked.  A pair sharing exactly one endpoint
    cannot occur for axes of hyperbolic isometries; it is treated as not
    linked and logged as an anomaly.
    """
    code = _kernel.linked_code(
        g1.plus.raw(), g1.minus.raw(), g2.plus.raw(), g2.minus.raw()
    )
    if code == 2:
        logger.warning(
            "axes %s/%s and %s/%s share exactly one endpoint",
            g1.plus.period, g1.minus.period, g2.plus.period, g2.minus.period,
        )
        return False
    return code == 1
