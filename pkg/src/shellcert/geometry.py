"""Exact rational plane geometry.

All predicates take points with integer or Fraction coordinates and decide
exactly; floating point never enters any decision. Intersection points of
integer segments are returned as Fractions.
"""

from __future__ import annotations

from fractions import Fraction

Point = tuple  # (x, y), entries int or Fraction


def sub(a: Point, b: Point) -> Point:
    return (a[0] - b[0], a[1] - b[1])


def cross(o: Point, a: Point, b: Point):
    """Twice the signed area of triangle o-a-b; positive iff o->a->b turns left."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def ccw_sign(o: Point, a: Point, b: Point) -> int:
    c = cross(o, a, b)
    return (c > 0) - (c < 0)


def collinear(a: Point, b: Point, c: Point) -> bool:
    return cross(a, b, c) == 0


def on_segment(p: Point, a: Point, b: Point) -> bool:
    """True iff p lies on the closed segment ab."""
    if cross(a, b, p) != 0:
        return False
    return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def segment_intersection(p: Point, q: Point, r: Point, s: Point):
    """Intersect the closed segments pq and rs.

    Returns None (disjoint), ("point", X, t, u) for a single common point
    X = p + t*(q-p) = r + u*(s-r), or ("overlap", A, B) for a collinear
    overlap of positive length with endpoints A, B.
    """
    d1 = sub(q, p)
    d2 = sub(s, r)
    denom = d1[0] * d2[1] - d1[1] * d2[0]
    rp = sub(r, p)
    if denom != 0:
        t = Fraction(rp[0] * d2[1] - rp[1] * d2[0], denom)
        u = Fraction(rp[0] * d1[1] - rp[1] * d1[0], denom)
        if 0 <= t <= 1 and 0 <= u <= 1:
            x = p[0] + t * d1[0]
            y = p[1] + t * d1[1]
            return ("point", (x, y), t, u)
        return None
    # Parallel segments.
    if cross(p, q, r) != 0:
        return None
    # Collinear: parametrize both by position along d1.
    dd = d1[0] * d1[0] + d1[1] * d1[1]
    tr = Fraction(rp[0] * d1[0] + rp[1] * d1[1], dd)
    sp = sub(s, p)
    ts = Fraction(sp[0] * d1[0] + sp[1] * d1[1], dd)
    lo, hi = min(tr, ts), max(tr, ts)
    lo = max(lo, Fraction(0))
    hi = min(hi, Fraction(1))
    if lo > hi:
        return None
    if lo == hi:
        x = p[0] + lo * d1[0]
        y = p[1] + lo * d1[1]
        u = Fraction(0) if (x, y) == tuple(r) else Fraction(1)
        return ("point", (x, y), lo, u)
    a = (p[0] + lo * d1[0], p[1] + lo * d1[1])
    b = (p[0] + hi * d1[0], p[1] + hi * d1[1])
    return ("overlap", a, b)


def direction_half(v: Point) -> int:
    """0 for directions with angle in [0, pi), 1 for [pi, 2*pi)."""
    x, y = v
    if y > 0 or (y == 0 and x > 0):
        return 0
    return 1


def angle_less(a: Point, b: Point) -> bool:
    """Strict counterclockwise order of nonzero directions from the +x axis."""
    ha, hb = direction_half(a), direction_half(b)
    if ha != hb:
        return ha < hb
    return a[0] * b[1] - a[1] * b[0] > 0


def sort_by_angle(items, key):
    """Sort items by the counterclockwise angle of key(item).

    Raises ValueError if two items share a direction (degenerate input).
    """
    def cmp_key(item):
        v = key(item)
        return (direction_half(v), _slope_key(v))

    out = sorted(items, key=cmp_key)
    for first, second in zip(out, out[1:]):
        va, vb = key(first), key(second)
        if direction_half(va) == direction_half(vb) and va[0] * vb[1] - va[1] * vb[0] == 0:
            raise ValueError("two directions coincide")
    return out


class _slope_key:
    """Orders directions within one half-plane by exact cross product."""

    __slots__ = ("v",)

    def __init__(self, v):
        self.v = v

    def __lt__(self, other):
        a, b = self.v, other.v
        return a[0] * b[1] - a[1] * b[0] > 0

    def __eq__(self, other):
        a, b = self.v, other.v
        return a[0] * b[1] - a[1] * b[0] == 0


def polygon_area2(points) -> Fraction:
    """Twice the signed area of a closed polygonal curve (cyclic points)."""
    total = 0
    n = len(points)
    for i in range(n):
        a = points[i]
        b = points[(i + 1) % n]
        total += a[0] * b[1] - a[1] * b[0]
    return total


def winding_number(pt: Point, points) -> int:
    """Winding number of the closed polygonal curve around pt.

    ``points`` is cyclic (last joins back to first). pt must not lie on
    the curve.
    """
    wn = 0
    y = pt[1]
    n = len(points)
    for i in range(n):
        a = points[i]
        b = points[(i + 1) % n]
        if a == b:
            continue
        if a[1] <= y:
            if b[1] > y and cross(a, b, pt) > 0:
                wn += 1
        elif b[1] <= y and cross(a, b, pt) < 0:
            wn -= 1
    return wn
