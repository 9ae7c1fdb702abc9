"""Exact geometric primitives over the rationals.

Every predicate in this module is decided by the sign of an integer or
rational determinant; nothing is ever rounded.  A single misclassified sign
would silently flip a crossing parity downstream, so there is no floating
point anywhere on these paths.

Rational values are `fractions.Fraction`: arbitrary-precision, always in
lowest terms with a positive denominator, and exact under +-*/.  Degenerate
predicate outcomes (tangency, shared endpoints, collinear overlap) are
returned as the first-class sentinel NON_GENERIC rather than raised, because
for samplers a degenerate outcome is an ordinary value meaning "resample".

Orientation conventions:
  orient2d(a, b, c)    > 0 iff c lies to the left of the directed line a->b.
  orient3d(a, b, c, d) > 0 iff d lies on the positive side of the plane
                       through a, b, c oriented by the right-hand rule; the
                       standard basis ((0,0,0),(1,0,0),(0,1,0),(0,0,1))
                       gives +1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence, Union

from .errors import ParseError

Rational = Fraction

RationalLike = Union[int, Fraction]


def parse_rational(value) -> Fraction:
    """Parse an exact rational from an int or a 'p/q' / 'p' string.

    The denominator must be positive; 'p/0' and 'p/-q' are rejected.
    """
    if isinstance(value, bool):
        raise ParseError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        text = value.strip()
        if "/" in text:
            num_s, _, den_s = text.partition("/")
            try:
                num, den = int(num_s), int(den_s)
            except ValueError as exc:
                raise ParseError(f"malformed rational {value!r}") from exc
            if den <= 0:
                raise ParseError(f"denominator must be positive in {value!r}")
            return Fraction(num, den)
        try:
            return Fraction(int(text))
        except ValueError as exc:
            raise ParseError(f"malformed rational {value!r}") from exc
    raise ParseError(f"not a rational: {value!r}")


def rational_str(value: Fraction) -> str:
    """Canonical serialization: 'p' for integers, 'p/q' otherwise."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class _NonGeneric:
    """Sentinel for predicate outcomes that are not stable under perturbation."""

    __slots__ = ()

    def __repr__(self) -> str:  # pragma: no cover - cosmetic
        return "NON_GENERIC"


NON_GENERIC = _NonGeneric()


class _Overlap:
    """Sentinel for two collinear segments sharing more than one point."""

    __slots__ = ()

    def __repr__(self) -> str:  # pragma: no cover - cosmetic
        return "OVERLAP"


OVERLAP = _Overlap()


def _coerce(value: RationalLike) -> RationalLike:
    """Normal form for exact coordinates: whole values as int, rest as Fraction.

    Keeping whole values as machine ints makes the bulk arithmetic fast;
    mixed int/Fraction expressions stay exact because Fraction coerces ints.
    Equal values in either representation compare and hash identically.
    """
    if isinstance(value, int):
        return int(value)
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else value
    raise TypeError(f"coordinate must be an int or Fraction, got {type(value).__name__}")


@dataclass(frozen=True)
class Point2:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", _coerce(self.x))
        object.__setattr__(self, "y", _coerce(self.y))

    def __sub__(self, other: "Point2") -> "Point2":
        return Point2(self.x - other.x, self.y - other.y)

    def __add__(self, other: "Point2") -> "Point2":
        return Point2(self.x + other.x, self.y + other.y)

    def scale(self, k: RationalLike) -> "Point2":
        k = _coerce(k)
        return Point2(self.x * k, self.y * k)

    def coords(self) -> tuple[Fraction, Fraction]:
        return (self.x, self.y)


@dataclass(frozen=True)
class Point3:
    x: Fraction
    y: Fraction
    z: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", _coerce(self.x))
        object.__setattr__(self, "y", _coerce(self.y))
        object.__setattr__(self, "z", _coerce(self.z))

    def __sub__(self, other: "Point3") -> "Point3":
        return Point3(self.x - other.x, self.y - other.y, self.z - other.z)

    def __add__(self, other: "Point3") -> "Point3":
        return Point3(self.x + other.x, self.y + other.y, self.z + other.z)

    def scale(self, k: RationalLike) -> "Point3":
        k = _coerce(k)
        return Point3(self.x * k, self.y * k, self.z * k)

    def coords(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.x, self.y, self.z)


def cross2(u: Point2, v: Point2) -> Fraction:
    return u.x * v.y - u.y * v.x


def dot2(u: Point2, v: Point2) -> Fraction:
    return u.x * v.x + u.y * v.y


def cross3(u: Point3, v: Point3) -> Point3:
    return Point3(
        u.y * v.z - u.z * v.y,
        u.z * v.x - u.x * v.z,
        u.x * v.y - u.y * v.x,
    )


def dot3(u: Point3, v: Point3) -> Fraction:
    return u.x * v.x + u.y * v.y + u.z * v.z


def is_zero3(u: Point3) -> bool:
    return u.x == 0 and u.y == 0 and u.z == 0


@dataclass(frozen=True)
class Segment2:
    p: Point2
    q: Point2

    def __post_init__(self):
        if self.p == self.q:
            raise ValueError("degenerate segment: endpoints coincide")

    def direction(self) -> Point2:
        return self.q - self.p


@dataclass(frozen=True)
class Segment3:
    p: Point3
    q: Point3

    def __post_init__(self):
        if self.p == self.q:
            raise ValueError("degenerate segment: endpoints coincide")

    def direction(self) -> Point3:
        return self.q - self.p


@dataclass(frozen=True)
class Triangle3:
    a: Point3
    b: Point3
    c: Point3

    def __post_init__(self):
        if self.a == self.b or self.b == self.c or self.a == self.c:
            raise ValueError("degenerate triangle: repeated vertex")
        if is_zero3(cross3(self.b - self.a, self.c - self.a)):
            raise ValueError("degenerate triangle: collinear vertices")

    def vertices(self) -> tuple[Point3, Point3, Point3]:
        return (self.a, self.b, self.c)

    def sides(self) -> tuple[Segment3, Segment3, Segment3]:
        return (
            Segment3(self.a, self.b),
            Segment3(self.b, self.c),
            Segment3(self.c, self.a),
        )


def _sign(value) -> int:
    return (value > 0) - (value < 0)


def orient2d(a: Point2, b: Point2, c: Point2) -> int:
    """Sign of the doubled signed area of triangle a, b, c."""
    ax, ay, bx, by, cx, cy = a.x, a.y, b.x, b.y, c.x, c.y
    if (
        ax.denominator == 1 and ay.denominator == 1
        and bx.denominator == 1 and by.denominator == 1
        and cx.denominator == 1 and cy.denominator == 1
    ):
        # pure machine-int path; Fraction arithmetic is ~50x slower
        det = (bx.numerator - ax.numerator) * (cy.numerator - ay.numerator) - (
            by.numerator - ay.numerator
        ) * (cx.numerator - ax.numerator)
    else:
        det = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
    return _sign(det)


def orient3d(a: Point3, b: Point3, c: Point3, d: Point3) -> int:
    """Sign of det[b-a; c-a; d-a], i.e. the side of plane abc that d is on."""
    if (
        a.x.denominator == 1 and a.y.denominator == 1 and a.z.denominator == 1
        and b.x.denominator == 1 and b.y.denominator == 1 and b.z.denominator == 1
        and c.x.denominator == 1 and c.y.denominator == 1 and c.z.denominator == 1
        and d.x.denominator == 1 and d.y.denominator == 1 and d.z.denominator == 1
    ):
        ax, ay, az = a.x.numerator, a.y.numerator, a.z.numerator
        b1, b2, b3 = b.x.numerator - ax, b.y.numerator - ay, b.z.numerator - az
        c1, c2, c3 = c.x.numerator - ax, c.y.numerator - ay, c.z.numerator - az
        d1, d2, d3 = d.x.numerator - ax, d.y.numerator - ay, d.z.numerator - az
    else:
        b1, b2, b3 = b.x - a.x, b.y - a.y, b.z - a.z
        c1, c2, c3 = c.x - a.x, c.y - a.y, c.z - a.z
        d1, d2, d3 = d.x - a.x, d.y - a.y, d.z - a.z
    det = (
        b1 * (c2 * d3 - c3 * d2)
        - b2 * (c1 * d3 - c3 * d1)
        + b3 * (c1 * d2 - c2 * d1)
    )
    return _sign(det)


def gp_points2(points: Sequence[Point2]) -> bool:
    """No three of the points are collinear (vacuously true below 3)."""
    return all(orient2d(a, b, c) != 0 for a, b, c in combinations(points, 3))


def gp_points3(points: Sequence[Point3]) -> bool:
    """No four of the points are coplanar (vacuously true below 4)."""
    return all(orient3d(a, b, c, d) != 0 for a, b, c, d in combinations(points, 4))


def point_on_segment2(p: Point2, s: Segment2) -> bool:
    """Closed membership: p lies on segment s, endpoints included."""
    if orient2d(s.p, s.q, p) != 0:
        return False
    return (
        min(s.p.x, s.q.x) <= p.x <= max(s.p.x, s.q.x)
        and min(s.p.y, s.q.y) <= p.y <= max(s.p.y, s.q.y)
    )


def point_on_segment3(p: Point3, s: Segment3) -> bool:
    """Closed membership: p lies on segment s, endpoints included."""
    if not is_zero3(cross3(s.q - s.p, p - s.p)):
        return False
    d = s.q - s.p
    t = dot3(p - s.p, d)
    return 0 <= t <= dot3(d, d)


def seg_intersect2(s: Segment2, t: Segment2):
    """Intersect two closed planar segments.

    Returns a Point2 when they cross transversally at a point interior to
    both, None when they are disjoint, and NON_GENERIC for every degenerate
    contact: a shared endpoint, an endpoint of one inside the other, or a
    collinear overlap.
    """
    a, b = s.p, s.q
    c, d = t.p, t.q
    d1 = orient2d(a, b, c)
    d2 = orient2d(a, b, d)
    d3 = orient2d(c, d, a)
    d4 = orient2d(c, d, b)
    if d1 != 0 and d2 != 0 and d3 != 0 and d4 != 0:
        if d1 != d2 and d3 != d4:
            e = d - c
            num = cross2(c - a, e)
            den = cross2(b - a, e)
            # den != 0: opposite orientations rule out parallel lines
            u = Fraction(num, den)
            return Point2(a.x + u * (b.x - a.x), a.y + u * (b.y - a.y))
        return None
    if d1 == 0 and point_on_segment2(c, s):
        return NON_GENERIC
    if d2 == 0 and point_on_segment2(d, s):
        return NON_GENERIC
    if d3 == 0 and point_on_segment2(a, t):
        return NON_GENERIC
    if d4 == 0 and point_on_segment2(b, t):
        return NON_GENERIC
    return None


def seg_hits_solid_triangle(s: Segment3, t: Triangle3):
    """Count |s .. conv(t)| for a segment vs a solid (filled, flat) triangle.

    Returns 0 or 1 when the intersection is empty or a single transversal
    point interior to both the segment and the triangle.  Returns
    NON_GENERIC when s meets the triangle's plane non-transversally (an
    endpoint on the plane, or s inside the plane) or the piercing point
    falls on the triangle's boundary.  When the five points involved are in
    general position the result is always 0 or 1.
    """
    a, b, c = t.a, t.b, t.c
    sp = orient3d(a, b, c, s.p)
    sq = orient3d(a, b, c, s.q)
    if sp == 0 or sq == 0:
        return NON_GENERIC
    if sp == sq:
        return 0
    o1 = orient3d(s.p, s.q, a, b)
    o2 = orient3d(s.p, s.q, b, c)
    if o1 != 0 and o2 != 0 and o1 != o2:
        return 0
    o3 = orient3d(s.p, s.q, c, a)
    if o1 == 0 or o2 == 0 or o3 == 0:
        return NON_GENERIC
    return 1 if o1 == o2 == o3 else 0


def segment_piercing_point(s: Segment3, t: Triangle3) -> Point3:
    """The point where s crosses the plane of t.  Requires a transversal
    crossing (endpoints strictly on opposite sides)."""
    n = cross3(t.b - t.a, t.c - t.a)
    d = s.q - s.p
    denom = dot3(n, d)
    if denom == 0:
        raise ValueError("segment is parallel to the triangle's plane")
    u = Fraction(dot3(n, t.a - s.p), denom)
    if not (0 < u < 1):
        raise ValueError("segment does not cross the plane between its endpoints")
    return s.p + d.scale(u)


def point_in_triangle3(p: Point3, t: Triangle3) -> bool:
    """Closed membership of p in the flat solid triangle t (boundary counts)."""
    if orient3d(t.a, t.b, t.c, p) != 0:
        return False
    n = cross3(t.b - t.a, t.c - t.a)
    # drop the coordinate with the largest |normal| component; the projection
    # restricted to the triangle's plane is then injective
    candidates = [(abs(n.x), 0), (abs(n.y), 1), (abs(n.z), 2)]
    _, drop = max(candidates)
    keep = [i for i in range(3) if i != drop]

    def flat(q: Point3) -> Point2:
        coords = q.coords()
        return Point2(coords[keep[0]], coords[keep[1]])

    a2, b2, c2, p2 = flat(t.a), flat(t.b), flat(t.c), flat(p)
    s1 = orient2d(a2, b2, p2)
    s2 = orient2d(b2, c2, p2)
    s3 = orient2d(c2, a2, p2)
    return (s1 >= 0 and s2 >= 0 and s3 >= 0) or (s1 <= 0 and s2 <= 0 and s3 <= 0)


def meet_segments3(s: Segment3, t: Segment3):
    """Intersect two closed segments in space.

    Returns None when disjoint, the single common Point3 when they meet in
    exactly one point (any kind of contact: crossing, endpoint touch, T
    shape), and OVERLAP when they are collinear with a common sub-segment.
    """
    p1, q1 = s.p, s.q
    p2, q2 = t.p, t.q
    if orient3d(p1, q1, p2, q2) != 0:
        return None  # skew lines share no point
    d1 = q1 - p1
    d2 = q2 - p2
    r = p2 - p1
    w = cross3(d1, d2)
    if not is_zero3(w):
        ww = dot3(w, w)
        u = Fraction(dot3(cross3(r, d2), w), ww)
        v = Fraction(dot3(cross3(r, d1), w), ww)
        if 0 <= u <= 1 and 0 <= v <= 1:
            return p1 + d1.scale(u)
        return None
    # parallel lines
    if not is_zero3(cross3(r, d1)):
        return None
    # collinear: compare parameter intervals along d1
    length = dot3(d1, d1)
    b0 = dot3(r, d1)
    b1 = dot3(q2 - p1, d1)
    lo = max(0, min(b0, b1))
    hi = min(length, max(b0, b1))
    if lo > hi:
        return None
    if lo == hi:
        return p1 + d1.scale(Fraction(lo, length))
    return OVERLAP


def bounding_box_disjoint3(s: Segment3, t: Segment3) -> bool:
    """Cheap reject: True when the closed axis-aligned boxes do not meet."""
    return (
        max(s.p.x, s.q.x) < min(t.p.x, t.q.x)
        or max(t.p.x, t.q.x) < min(s.p.x, s.q.x)
        or max(s.p.y, s.q.y) < min(t.p.y, t.q.y)
        or max(t.p.y, t.q.y) < min(s.p.y, s.q.y)
        or max(s.p.z, s.q.z) < min(t.p.z, t.q.z)
        or max(t.p.z, t.q.z) < min(s.p.z, s.q.z)
    )


def collinear3(a: Point3, b: Point3, c: Point3) -> bool:
    return is_zero3(cross3(b - a, c - a))


def point2_from(values: Iterable[RationalLike]) -> Point2:
    x, y = values
    return Point2(_coerce(x), _coerce(y))


def point3_from(values: Iterable[RationalLike]) -> Point3:
    x, y, z = values
    return Point3(_coerce(x), _coerce(y), _coerce(z))
