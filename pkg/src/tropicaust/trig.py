"""Tropical angles: invariants, duality, cotangents and cone caustics."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from . import lattice as L
from .errors import DegenerateInput, NotRightAnglePair, OrientationError


@dataclass(frozen=True)
class Angle:
    """A strictly convex cone apex + cone(leg1, leg2) with wedge(leg1, leg2) > 0.

    ``swapped`` records that the legs were given in the opposite order.
    """
    leg1: tuple
    leg2: tuple
    apex: tuple = L.ORIGIN
    swapped: bool = False

    @property
    def given_legs(self):
        return (self.leg2, self.leg1) if self.swapped else (self.leg1, self.leg2)

    @property
    def det(self):
        return L.wedge(self.leg1, self.leg2)

    def contains(self, v, strict=False):
        a, b = L.wedge(self.leg1, v), L.wedge(v, self.leg2)
        return (a > 0 and b > 0) if strict else (a >= 0 and b >= 0)


def cone(u, v, apex=L.ORIGIN) -> Angle:
    u, v = L.primitive(tuple(u))[0], L.primitive(tuple(v))[0]
    w = L.wedge(u, v)
    if w == 0:
        raise DegenerateInput(f"legs {u} and {v} are collinear")
    if w > 0:
        return Angle(u, v, apex)
    return Angle(v, u, apex, swapped=True)


@dataclass(frozen=True)
class AngleClass:
    kind: str  # "right", "A", "canonical" or "general"
    determinant: int
    width: int
    height: int
    n: int | None = None  # A(n) index or canonical determinant

    def __str__(self):
        if self.kind == "right":
            return "Right"
        if self.kind == "A":
            return f"A({self.n})"
        if self.kind == "canonical":
            return f"Canonical({self.n})"
        return "General"


def classify(a: Angle) -> AngleClass:
    det = a.det
    width = L.content(L.sub(a.leg1, a.leg2))
    height = det // width
    assert width * height == det
    if det == 1:
        return AngleClass("right", 1, 1, 1)
    if height == 1:
        return AngleClass("A", det, width, height, det - 1)
    if len(cone_caustic(a)) == 1:
        return AngleClass("canonical", det, width, height, det)
    return AngleClass("general", det, width, height)


angle_invariants = classify


def is_canonical(a: Angle) -> bool:
    return len(cone_caustic(a)) == 1


def dual_angle(a: Angle) -> Angle:
    # cw(leg2) vanishes on leg2 and is positive on leg1; ccw(leg1) likewise
    return Angle(L.cw(a.leg2), L.ccw(a.leg1))


def complementary_angle(a: Angle) -> Angle:
    r1, r2 = a.given_legs
    return cone(r1, L.neg(r2), a.apex)


def klein_polygon(a: Angle):
    """Vertices of the Klein polygon of the dual cone, from cw(leg2) to ccw(leg1)."""
    d = dual_angle(a)
    return L.sail(d.leg1, d.leg2)


def cone_caustic(a: Angle):
    """Caustic rays of the cone as (direction, weight), leg1 side first."""
    verts = klein_polygon(a)
    rays = []
    for mu_a, mu_b in zip(verts, verts[1:]):
        delta, w = L.primitive(L.sub(mu_b, mu_a))
        p = L.cw(delta)
        assert L.pair(mu_a, p) == 1 and L.pair(mu_b, p) == 1
        assert a.contains(p, strict=True), (a, p)
        rays.append((p, w))
    rays.reverse()
    return rays


def bissectrice(a: Angle):
    """The single caustic ray of a canonical angle."""
    rays = cone_caustic(a)
    if len(rays) != 1:
        return None
    return rays[0][0]


def cotangent(a: Angle) -> Fraction:
    """ta of the oriented angle (first given leg, second given leg), in [0, 1)."""
    r1, r2 = a.given_legs
    sign = 1 if L.wedge(r1, r2) > 0 else -1
    e2 = L.complete_basis(r1)
    if sign < 0:
        e2 = L.neg(e2)
    beta = sign * L.wedge(r1, r2)  # r2 = alpha*r1 + beta*e2
    alpha = sign * L.wedge(r2, e2)
    return (-Fraction(alpha, beta)) % 1


def reversed_cotangent(c: Fraction) -> Fraction:
    c = Fraction(c)
    m, n = c.numerator, c.denominator
    if n == 1:
        return Fraction(0)
    return Fraction(pow(m, -1, n), n)


def is_symmetric(c: Fraction) -> bool:
    c = Fraction(c)
    return (c.numerator ** 2 - 1) % c.denominator == 0


def double_angle(r_minus, r0, r_plus) -> Fraction:
    m = L.map_to_vertical(L.primitive(tuple(r0))[0])
    p, q = m.linear(r_plus), m.linear(r_minus)
    if p[0] <= 0 or q[0] >= 0:
        raise OrientationError("flanking rays are not on opposite sides of r0")
    s_plus = Fraction(p[1], p[0])
    s_minus = Fraction(-q[1], q[0])
    return -(s_plus + s_minus)


def k_lift(r_minus, r0, r_plus) -> int:
    if abs(L.wedge(r_minus, r0)) != 1 or abs(L.wedge(r0, r_plus)) != 1:
        raise NotRightAnglePair("flanking cones must be tropical right angles")
    tr = double_angle(r_minus, r0, r_plus)
    assert tr.denominator == 1
    return 3 + int(tr)


def _sign_normal(v):
    return v if (v[0] > 0 or (v[0] == 0 and v[1] > 0)) else L.neg(v)


def common_perpendiculars(a: Angle):
    """Directions lambda with |wedge(lambda, leg)| = 1 for both legs, up to sign."""
    u, v = a.leg1, a.leg2
    found = set()
    for e1, e2 in product((1, -1), repeat=2):
        # lx*uy - ly*ux = e1 and lx*vy - ly*vx = e2
        p = L.solve2((u[1], -u[0]), e1, (v[1], -v[0]), e2)
        if all(c.denominator == 1 for c in p):
            found.add(_sign_normal((int(p[0]), int(p[1]))))
    return sorted(found, reverse=True)


def validate_convex_subdivision(outer: Angle, rays) -> bool:
    gens = [outer.leg1] + [L.primitive(tuple(r))[0] for r in rays] + [outer.leg2]
    for p, q in zip(gens, gens[1:]):
        if L.wedge(p, q) <= 0:
            return False
        if classify(Angle(p, q)).height != 1:
            return False
    for p, q, r in zip(gens, gens[1:], gens[2:]):
        if L.wedge(L.sub(q, p), L.sub(r, q)) <= 0:
            return False
    return True
