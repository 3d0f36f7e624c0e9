"""Seeded random domains for property runs."""
from __future__ import annotations

import random
from fractions import Fraction

from . import lattice as L
from .domain import ConvexDomain, from_vertices, half_plane, intersect, minkowski_domain, strip
from .errors import InputError


def rng_for(seed) -> random.Random:
    return random.Random(seed)


def lattice_polygon(rng, lo=0, hi=30, max_points=12):
    while True:
        pts = [(rng.randint(lo, hi), rng.randint(lo, hi)) for _ in range(rng.randint(3, max_points))]
        hull = L.convex_hull([L.point(*p) for p in pts])
        if len(hull) >= 3:
            return from_vertices(hull)


def _small_primitive(rng, r=3):
    while True:
        v = (rng.randint(-r, r), rng.randint(-r, r))
        if v != (0, 0) and L.is_primitive_int(v):
            return v


def rational_polygon(rng, sides=6, denom=4):
    """Intersection of random rational half-planes around the origin."""
    while True:
        cons = [(_small_primitive(rng), Fraction(-rng.randint(denom, 6 * denom), rng.randint(1, denom)))
                for _ in range(rng.randint(3, sides))]
        d = intersect(cons)
        if isinstance(d, ConvexDomain) and d.kind == "bounded":
            return d


def two_ray_domain(rng, hi=8):
    while True:
        pts = [(rng.randint(0, hi), rng.randint(0, hi)) for _ in range(rng.randint(1, 5))]
        rays = (_small_primitive(rng), _small_primitive(rng))
        if rng.random() < 0.15:
            rays = (rays[0], rays[0])
        try:
            return minkowski_domain(pts, rays)
        except InputError:
            continue


def half_plane_domain(rng):
    return half_plane(_small_primitive(rng), Fraction(rng.randint(-9, 9), rng.randint(1, 4)))


def strip_domain(rng):
    lo = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
    return strip(_small_primitive(rng), lo, lo + Fraction(rng.randint(1, 12), rng.randint(1, 3)))


def any_domain(rng):
    u = rng.random()
    if u < 0.4:
        return lattice_polygon(rng, 0, 12, 8)
    if u < 0.6:
        return rational_polygon(rng)
    if u < 0.9:
        return two_ray_domain(rng)
    if u < 0.95:
        return half_plane_domain(rng)
    return strip_domain(rng)
