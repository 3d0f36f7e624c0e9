"""Exact plane arithmetic over Z and Q.

Lattice vectors are plain ``(x, y)`` tuples of ints; rational points are
tuples of ``Fraction``.  Covectors use the same representation and are
paired with points through :func:`pair`.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from math import gcd

from .errors import InputError, ZeroVector

ORIGIN = (Fraction(0), Fraction(0))


def rat(x) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction (never a float)."""
    if isinstance(x, float):
        raise InputError(f"floating point value {x!r} is not accepted")
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"bad rational {x!r}") from exc
    return Fraction(x)


def fmt_rat(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def point(x, y) -> tuple:
    return (rat(x), rat(y))


def lattice_vec(v) -> tuple:
    x, y = (rat(c) for c in v)
    if x.denominator != 1 or y.denominator != 1:
        raise InputError(f"{v!r} is not a lattice vector")
    return (int(x), int(y))


def primitive(v):
    """Split a nonzero lattice vector into (primitive direction, content)."""
    x, y = v
    g = gcd(x, y)
    if g == 0:
        raise ZeroVector("the zero vector has no direction")
    return (x // g, y // g), g


def content(v) -> int:
    return gcd(v[0], v[1])


def direction_of(v):
    """Primitive lattice direction of a nonzero rational vector."""
    x, y = Fraction(v[0]), Fraction(v[1])
    if x == 0 and y == 0:
        raise ZeroVector("the zero vector has no direction")
    d = x.denominator * y.denominator
    return primitive((int(x * d), int(y * d)))[0]


def tropical_length(v) -> Fraction:
    """The t >= 0 with v = t * prim(v)."""
    x, y = Fraction(v[0]), Fraction(v[1])
    if x == 0 and y == 0:
        return Fraction(0)
    d = direction_of((x, y))
    return x / d[0] if d[0] else y / d[1]


def signed_length(v, d) -> Fraction:
    """Coefficient s with v = s * d, for v parallel to the primitive d."""
    return Fraction(v[0]) / d[0] if d[0] else Fraction(v[1]) / d[1]


def wedge(u, v):
    return u[0] * v[1] - u[1] * v[0]


def pair(lam, p):
    return lam[0] * p[0] + lam[1] * p[1]


def parallel_line_distance(lam, c1, c2) -> Fraction:
    return abs(Fraction(c1) - Fraction(c2))


def add(u, v):
    return (u[0] + v[0], u[1] + v[1])


def sub(u, v):
    return (u[0] - v[0], u[1] - v[1])


def scale(k, v):
    return (k * v[0], k * v[1])


def neg(v):
    return (-v[0], -v[1])


def ccw(v):
    """Quarter turn counterclockwise."""
    return (-v[1], v[0])


def cw(v):
    return (v[1], -v[0])


def solve2(l1, c1, l2, c2):
    """Point p with l1(p) = c1 and l2(p) = c2."""
    det = wedge(l1, l2)
    if det == 0:
        raise ValueError("parallel lines")
    c1, c2 = Fraction(c1), Fraction(c2)
    return ((c1 * l2[1] - c2 * l1[1]) / det, (l1[0] * c2 - l2[0] * c1) / det)


def _half(v):
    return 0 if v[1] > 0 or (v[1] == 0 and v[0] > 0) else 1


def angle_cmp(u, v):
    """Order nonzero vectors by polar angle in [0, 2pi)."""
    hu, hv = _half(u), _half(v)
    if hu != hv:
        return hu - hv
    w = wedge(u, v)
    return -1 if w > 0 else (1 if w < 0 else 0)


angle_key = cmp_to_key(angle_cmp)


def is_primitive_int(v) -> bool:
    return all(Fraction(c).denominator == 1 for c in v) and gcd(int(v[0]), int(v[1])) == 1


def ext_gcd(a, b):
    """Return (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def complete_basis(e1):
    """Some e2 with wedge(e1, e2) = 1; e1 must be primitive."""
    g, x, y = ext_gcd(e1[0], e1[1])
    assert g == 1, e1
    # e1.x * e2.y - e1.y * e2.x = 1 with e2 = (-y, x)
    return (-y, x)


@dataclass(frozen=True)
class UnimodularAffineMap:
    matrix: tuple  # ((a, b), (c, d))
    translation: tuple = ORIGIN

    def __post_init__(self):
        (a, b), (c, d) = self.matrix
        if abs(a * d - b * c) != 1:
            raise InputError("matrix is not unimodular")

    @property
    def det(self):
        (a, b), (c, d) = self.matrix
        return a * d - b * c

    def linear(self, v):
        (a, b), (c, d) = self.matrix
        return (a * v[0] + b * v[1], c * v[0] + d * v[1])

    def __call__(self, p):
        q = self.linear(p)
        return (q[0] + self.translation[0], q[1] + self.translation[1])

    def inverse_linear(self):
        (a, b), (c, d) = self.matrix
        k = self.det
        return UnimodularAffineMap(((d * k, -b * k), (-c * k, a * k)))


def apply_map(m: UnimodularAffineMap, p, vector=False):
    """Apply m to a point (with translation) or, if ``vector``, to a vector."""
    return m.linear(p) if vector else m(p)


def map_to_vertical(r):
    """An orientation-preserving unimodular map sending the primitive r to (0, 1)."""
    e2 = complete_basis(r)  # wedge(r, e2) = 1
    # columns of the inverse are (-e2, r): sends (1,0) -> -e2 and (0,1) -> r
    # M = inverse of [[-e2x, rx], [-e2y, ry]]; det = -e2x*ry + rx*e2y = 1
    a, b, c, d = -e2[0], r[0], -e2[1], r[1]
    return UnimodularAffineMap(((d, -b), (-c, a)))


def sail(a, b):
    """Vertices of the Klein sail of the cone spanned by primitive a, b.

    The cone must satisfy wedge(a, b) > 0.  Returns the vertices of the
    boundary of conv((cone ∩ Z²) minus 0) from a to b.  The walk jumps
    straight along each side, so the cost grows with the number of
    vertices rather than with the determinant.
    """
    n = wedge(a, b)
    assert n > 0
    prev = neg(complete_basis(a))  # wedge(prev, a) = 1
    cur = a
    verts = [a]
    while True:
        db = wedge(cur, b)
        if db == 0:
            break
        c = -(-wedge(prev, b) // db)  # ceiling
        nxt = sub(scale(c, cur), prev)
        step = sub(nxt, cur)
        drop = -wedge(step, b)  # > 0
        j = db // drop
        cur = add(cur, scale(j, step))
        prev = sub(cur, step)
        verts.append(cur)
    assert verts[-1] == b
    return verts


def convex_hull(points):
    """Counterclockwise hull vertices, collinear points dropped (monotone chain)."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def half(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and wedge(sub(out[-1], out[-2]), sub(p, out[-1])) <= 0:
                out.pop()
            out.append(p)
        return out

    lower, upper = half(pts), half(reversed(pts))
    return lower[:-1] + upper[:-1]
