"""Floating-point verification oracle on the Poincaré disk.

The group is realized concretely: four half-disks orthogonal to the unit
circle, paired by two hyperbolic Möbius maps, with the region outside
all four as fundamental domain.  Lift axes are computed from matrix
fixed points, intersected as straight chords (the boundary endpoints are
shared with the Klein model, where geodesics are chords), and crossing
points are counted inside the fundamental domain.  Everything here is
float arithmetic and independent of the symbolic order machinery, which
is the point: the two pipelines check each other.

Conventions.  The generator for letter e maps the exterior of the
inverse letter's half-disk onto the interior of its own, so the
attracting fixed point of any reduced word's matrix lands in the arc of
the word's first letter; that containment is asserted on every fixed
point computation because it is exactly what makes the boundary coding
meaningful.
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from selfint.errors import (
    BoundaryAmbiguityError,
    InvalidConfigurationError,
    NumericalDegeneracyError,
)
from selfint.words import cyclically_reduce, inverse, letter_inverse, parse_word

#: Letters in anticlockwise arc order starting after the base point I.
ARC_ORDER = ("a", "B", "b", "A")

DEFAULT_ANGLES_DEG = (45.0, 135.0, 225.0, 315.0)
# Unequal radii on purpose: with equal radii the reflection across the
# x-axis is an exact symmetry of the configuration, and for classes
# invariant under mirror-plus-reversal (a^k B and friends) it pins
# equivalent crossing points exactly onto the paired half-disk circles,
# where no uniform radius rescale can recover them.
DEFAULT_RADII = (0.55, 0.52, 0.58, 0.49)

_TWO_PI = 2.0 * math.pi

Mat = tuple[complex, complex, complex, complex]


def _mat_mul(m: Mat, n: Mat) -> Mat:
    a, b, c, d = m
    e, f, g, h = n
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


def _mat_normalize(m: Mat) -> Mat:
    """Project onto the unit-determinant disk-map form.

    Orientation-preserving Möbius maps of the unit disk are exactly the
    matrices ((u, v), (conj(v), conj(u))) with |u|^2 - |v|^2 = 1; the
    projection symmetrizes rounding noise away, keeping traces exactly
    real under repeated products.
    """
    a, b, c, d = m
    u = (a + d.conjugate()) / 2.0
    v = (b + c.conjugate()) / 2.0
    det = abs(u) ** 2 - abs(v) ** 2
    if det <= 0.0:
        raise NumericalDegeneracyError("matrix does not preserve the disk")
    s = math.sqrt(det)
    u /= s
    v /= s
    return (u, v, v.conjugate(), u.conjugate())


def _mat_inv(m: Mat) -> Mat:
    a, b, c, d = m
    return (d, -b, -c, a)


def _mat_apply(m: Mat, z: complex) -> complex:
    a, b, c, d = m
    return (a * z + b) / (c * z + d)


@dataclass(frozen=True)
class HalfDisk:
    """Euclidean half-disk orthogonal to the unit circle.

    The euclidean center sits at sqrt(1 + r^2) along the ``angle`` ray,
    which is exactly the orthogonality condition; the boundary arc on
    the unit circle then has angular half-width atan(r).
    """

    letter: str
    angle: float
    radius: float
    center: complex
    arc_halfwidth: float

    def contains(self, z: complex) -> bool:
        return abs(z - self.center) < self.radius

    def boundary_distance(self, z: complex) -> float:
        return abs(abs(z - self.center) - self.radius)

    def arc_contains_angle(self, theta: float) -> bool:
        d = (theta - self.angle) % _TWO_PI
        if d > math.pi:
            d -= _TWO_PI
        return abs(d) < self.arc_halfwidth


@dataclass(frozen=True)
class SchottkyConfig:
    """Validated half-disk configuration with its two generators.

    ``disks`` follows the arc order (a, B, b, A); ``generators`` maps
    every letter to its matrix.  ``boundary_tol`` is the distance at
    which a point is declared ambiguously close to a half-disk boundary,
    ``dedup_tol`` the distance under which two reduced intersection
    points count as one.
    """

    disks: tuple[HalfDisk, HalfDisk, HalfDisk, HalfDisk]
    generators: dict[str, Mat]
    boundary_tol: float
    dedup_tol: float

    def disk(self, letter: str) -> HalfDisk:
        return self.disks[ARC_ORDER.index(letter)]

    def in_domain(self, z: complex) -> bool:
        """True iff z lies outside every open half-disk."""
        return not any(d.contains(z) for d in self.disks)

    def nearest_boundary(self, z: complex) -> float:
        return min(d.boundary_distance(z) for d in self.disks)

    def angles_deg(self) -> tuple[float, ...]:
        return tuple(math.degrees(d.angle) for d in self.disks)

    def radii(self) -> tuple[float, ...]:
        return tuple(d.radius for d in self.disks)


def _fixed_points_of(m: Mat) -> tuple[complex, complex]:
    """(attracting, repelling) boundary fixed points of a hyperbolic matrix."""
    m = _mat_normalize(m)
    a, b, c, d = m
    tr = a + d
    # entries grow exponentially with word length; judge the imaginary
    # part relative to the trace magnitude
    if abs(tr.imag) > 1e-9 * max(2.0, abs(tr.real)):
        raise NumericalDegeneracyError(f"trace {tr} is not real")
    if abs(tr.real) <= 2.0 + 1e-9:
        raise NumericalDegeneracyError(f"|trace| = {abs(tr.real):.12f} <= 2: not hyperbolic")
    if abs(c) < 1e-14:
        raise NumericalDegeneracyError("fixed point at infinity")
    disc = cmath.sqrt((a - d) * (a - d) + 4 * b * c)
    z1 = ((a - d) + disc) / (2 * c)
    z2 = ((a - d) - disc) / (2 * c)
    z1 /= abs(z1)
    z2 /= abs(z2)
    # attracting fixed point: |derivative| = 1/|cz+d|^2 < 1
    if abs(c * z1 + d) > 1.0:
        return z1, z2
    return z2, z1


def _translation_matrix(p: complex, q: complex, length: float) -> Mat:
    """Hyperbolic translation with attracting p, repelling q, given length."""
    lam = math.exp(length / 2.0)
    c_map: Mat = (p, q, 1.0 + 0j, 1.0 + 0j)
    c_inv: Mat = (1.0 + 0j, -q, -1.0 - 0j, p)
    diag: Mat = (lam, 0j, 0j, 1.0 / lam)
    return _mat_normalize(_mat_mul(_mat_mul(c_map, diag), c_inv))


def _pairing_generator(source: HalfDisk, target: HalfDisk) -> Mat:
    """Möbius map carrying the source boundary circle onto the target one,
    exterior to interior.

    Composing the inversions in the two circles gives the translation
    along their common perpendicular by twice the gap; the generator is
    the half-step translation along the same axis, which lines the two
    circles up exactly.
    """
    inv_source: Mat = (source.center, -1.0 + 0j, 1.0 + 0j, -source.center.conjugate())
    inv_target: Mat = (target.center, -1.0 + 0j, 1.0 + 0j, -target.center.conjugate())
    # entrywise conjugate of inv_source: composition of the two inversions
    a, b, c, d = inv_source
    double = _mat_normalize(_mat_mul(inv_target, (a.conjugate(), b.conjugate(), c.conjugate(), d.conjugate())))
    att, rep = _fixed_points_of(double)
    tr = abs((double[0] + double[3]).real)
    full_length = 2.0 * math.acosh(tr / 2.0)
    return _translation_matrix(att, rep, full_length / 2.0)


def _circle_points(disk: HalfDisk, count: int) -> list[complex]:
    return [disk.center + disk.radius * cmath.exp(2j * math.pi * k / count)
            for k in range(count)]


def build_config(angles_deg: Iterable[float] = DEFAULT_ANGLES_DEG,
                 radii: Iterable[float] = DEFAULT_RADII,
                 *, boundary_tol: float = 1e-9,
                 dedup_tol: float = 1e-6) -> SchottkyConfig:
    """Build and validate a configuration.

    ``angles_deg`` and ``radii`` list the four half-disks in the arc
    order (a, B, b, A).  Raises InvalidConfigurationError naming the
    violated condition: overlapping half-disks, the base point I inside
    a half-disk, wrong anticlockwise arc order, a failed circle pairing,
    or a generator fixed point outside its own arc.
    """
    angles = [math.radians(x) % _TWO_PI for x in angles_deg]
    rads = list(radii)
    if len(angles) != 4 or len(rads) != 4:
        raise InvalidConfigurationError("need exactly four angles and four radii")
    if any(r <= 0 for r in rads):
        raise InvalidConfigurationError("radii must be positive")
    disks = tuple(
        HalfDisk(
            letter=ARC_ORDER[k],
            angle=angles[k],
            radius=rads[k],
            center=math.sqrt(1.0 + rads[k] ** 2) * cmath.exp(1j * angles[k]),
            arc_halfwidth=math.atan(rads[k]),
        )
        for k in range(4)
    )

    for d in disks:
        lo = d.angle - d.arc_halfwidth
        hi = d.angle + d.arc_halfwidth
        if lo <= 0.0 or hi >= _TWO_PI:
            raise InvalidConfigurationError(
                f"base point I lies in the closed half-disk of {d.letter}")
    by_angle = sorted(disks, key=lambda d: d.angle)
    for cur, nxt in zip(by_angle, by_angle[1:]):
        if nxt.angle - nxt.arc_halfwidth <= cur.angle + cur.arc_halfwidth:
            raise InvalidConfigurationError(
                f"half-disks of {cur.letter} and {nxt.letter} overlap")
    order = tuple(d.letter for d in by_angle)
    if order != ARC_ORDER:
        raise InvalidConfigurationError(
            f"anticlockwise arc order is {order}, expected {ARC_ORDER}")

    gen_a = _pairing_generator(source=disks[3], target=disks[0])  # A-disk -> a-disk
    gen_b = _pairing_generator(source=disks[1], target=disks[2])  # B-disk -> b-disk
    generators = {
        "a": gen_a, "A": _mat_inv(gen_a),
        "b": gen_b, "B": _mat_inv(gen_b),
    }

    for letter, src_idx, dst_idx in (("a", 3, 0), ("b", 1, 2)):
        g = generators[letter]
        src, dst = disks[src_idx], disks[dst_idx]
        for z in _circle_points(src, 16):
            err = abs(abs(_mat_apply(g, z) - dst.center) - dst.radius)
            if err > 1e-9:
                raise InvalidConfigurationError(
                    f"generator {letter} fails to pair its circles (error {err:.3e})")

    cfg = SchottkyConfig(disks=disks, generators=generators,
                         boundary_tol=boundary_tol, dedup_tol=dedup_tol)
    for letter in ARC_ORDER:
        att, _ = fixed_points(letter, cfg)
        if not cfg.disk(letter).arc_contains_angle(cmath.phase(att) % _TWO_PI):
            raise InvalidConfigurationError(
                f"attracting fixed point of {letter} outside its arc")
    return cfg


@lru_cache(maxsize=None)
def default_config() -> SchottkyConfig:
    return build_config()


def load_config(path: str) -> SchottkyConfig:
    """Configuration from a JSON file {"angles_deg": [...], "radii": [...]}."""
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    return build_config(data["angles_deg"], data["radii"])


def word_matrix(word: str, cfg: SchottkyConfig) -> Mat:
    m: Mat = (1.0 + 0j, 0j, 0j, 1.0 + 0j)
    for ch in word:
        m = _mat_normalize(_mat_mul(m, cfg.generators[ch]))
    return m


def fixed_points(word: str, cfg: SchottkyConfig | None = None) -> tuple[complex, complex]:
    """(attracting, repelling) boundary points of the word's isometry.

    The attracting point must land inside the arc of the word's first
    letter; a miss means the configuration is corrupt and raises
    NumericalDegeneracyError.
    """
    cfg = cfg or default_config()
    w = word.letters if hasattr(word, "letters") else word
    att, rep = _fixed_points_of(word_matrix(w, cfg))
    first = cfg.disk(w[0])
    if not first.arc_contains_angle(cmath.phase(att) % _TWO_PI):
        raise NumericalDegeneracyError(
            f"attracting point of {w!r} escaped the {w[0]!r} arc")
    return att, rep


def _chord_crossing(p1: complex, q1: complex,
                    p2: complex, q2: complex) -> complex | None:
    """Crossing point of the open chords p1-q1 and p2-q2, or None.

    Chords between boundary points are the geodesics of the Klein model;
    the crossing is mapped back to the Poincaré disk at the end.
    """
    d1 = q1 - p1
    d2 = q2 - p2
    det = d1.real * (-d2.imag) - (-d2.real) * d1.imag
    if abs(det) < 1e-14:
        return None
    r = p2 - p1
    t = (r.real * (-d2.imag) - (-d2.real) * r.imag) / det
    s = (d1.real * r.imag - d1.imag * r.real) / det
    if not (0.0 < t < 1.0 and 0.0 < s < 1.0):
        return None
    zk = p1 + t * d1
    norm2 = zk.real * zk.real + zk.imag * zk.imag
    return zk / (1.0 + math.sqrt(max(0.0, 1.0 - norm2)))


@dataclass(frozen=True)
class Crossing:
    """Transversal crossing of lift axes ``i`` and ``j`` (rotation indices)."""

    i: int
    j: int
    point: complex
    in_domain: bool


def axis_crossings(word: str, cfg: SchottkyConfig | None = None) -> list[Crossing]:
    """All transversal crossings between the L cyclic-shift lift axes.

    Coincident axes (identical shifts of a proper power, or a shift
    equal to a shift of the inverse word) are skipped.  Raises
    BoundaryAmbiguityError if a crossing point cannot be safely
    classified against the half-disk boundaries.
    """
    cfg = cfg or default_config()
    w = cyclically_reduce(parse_word(word)) if isinstance(word, str) else str(word)
    L = len(w)
    double = w + w
    rots = [double[k:k + L] for k in range(L)]
    ends = [fixed_points(r, cfg) for r in rots]
    out: list[Crossing] = []
    for i in range(L):
        pi, qi = ends[i]
        for j in range(i + 1, L):
            if rots[j] == rots[i] or rots[j] == inverse(rots[i]):
                continue
            pj, qj = ends[j]
            z = _chord_crossing(pi, qi, pj, qj)
            if z is None:
                continue
            if cfg.nearest_boundary(z) < cfg.boundary_tol:
                raise BoundaryAmbiguityError(
                    f"crossing of shifts {i},{j} of {w!r} sits on a half-disk boundary")
            out.append(Crossing(i=i, j=j, point=z, in_domain=cfg.in_domain(z)))
    return out


def reduce_to_domain(z: complex, cfg: SchottkyConfig | None = None,
                     max_steps: int = 500) -> tuple[complex, str]:
    """Move z into the fundamental domain by group elements.

    While z lies in the open half-disk of letter e, apply the inverse
    letter's generator.  Returns the reduced point and the word of the
    composite map (leftmost letter applied last), so applying that word
    to the original point reproduces the result.
    """
    cfg = cfg or default_config()
    applied: list[str] = []
    for _ in range(max_steps):
        if cfg.nearest_boundary(z) < cfg.boundary_tol:
            raise BoundaryAmbiguityError("point sits on a half-disk boundary")
        hit = next((d for d in cfg.disks if d.contains(z)), None)
        if hit is None:
            return z, "".join(reversed(applied))
        step = letter_inverse(hit.letter)
        z = _mat_apply(cfg.generators[step], z)
        applied.append(step)
    raise NumericalDegeneracyError("domain reduction did not terminate")


def oracle_self_intersection(word: str, cfg: SchottkyConfig | None = None) -> int:
    """Self-intersection count by plain geometry: the number of axis
    pairs whose crossing point lies in the fundamental domain.

    On boundary ambiguity the configuration is retried with all radii
    scaled by 1.01, up to three times, then the ambiguity is raised.
    """
    base = cfg or default_config()
    scale = 1.0
    for attempt in range(4):
        trial = base if attempt == 0 else build_config(
            base.angles_deg(), [r * scale for r in base.radii()],
            boundary_tol=base.boundary_tol, dedup_tol=base.dedup_tol)
        try:
            return sum(1 for c in axis_crossings(word, trial) if c.in_domain)
        except BoundaryAmbiguityError:
            scale *= 1.01
    raise BoundaryAmbiguityError(
        f"crossings of {word!r} remained boundary-ambiguous after 3 retries")
