"""Convex domains with rational support, degenerate loci and exact half-plane intersection.

A support constraint ``(lam, c)`` stands for the closed half-plane
{p : lam(p) >= c} with ``lam`` a primitive covector.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor

from . import lattice as L
from .errors import (DegenerateInput, EmptyInput, NonConvexInput, NotLatticePolygon,
                     Unbounded, InputError)

INF = float("inf")  # only ever used as a sentinel, never in arithmetic with rationals


@dataclass(frozen=True)
class ConvexDomain:
    kind: str  # "bounded", "tworays", "halfplane" or "strip"
    vertices: tuple
    rays: tuple | None  # (rayFirst, rayLast) for "tworays"
    support: tuple

    @property
    def bounded(self):
        return self.kind == "bounded"

    def edges(self):
        """Bounded edges as (start, end, lam, c)."""
        v, s = self.vertices, self.support
        if self.kind == "bounded":
            return [(v[i], v[(i + 1) % len(v)], *s[i]) for i in range(len(v))]
        if self.kind == "tworays":
            return [(v[i - 1], v[i], *s[i]) for i in range(1, len(v))]
        return []

    def contains(self, p):
        return all(L.pair(lam, p) >= c for lam, c in self.support)


@dataclass(frozen=True)
class Locus:
    """A domain with empty interior: point, segment, ray or line."""
    kind: str
    points: tuple
    direction: tuple | None = None

    @property
    def bounded(self):
        return self.kind in ("point", "segment")

    def length(self):
        if self.kind == "point":
            return Fraction(0)
        if self.kind == "segment":
            return L.tropical_length(L.sub(self.points[1], self.points[0]))
        return INF

    def contains(self, p):
        if self.kind == "point":
            return p == self.points[0]
        d = self.direction if self.direction else L.direction_of(L.sub(self.points[1], self.points[0]))
        v = L.sub(p, self.points[0])
        if L.wedge(d, v) != 0:
            return False
        s = L.signed_length(v, d) if v != (0, 0) else Fraction(0)
        if self.kind == "line":
            return True
        if self.kind == "ray":
            return s >= 0
        return 0 <= s <= self.length()


@dataclass(frozen=True)
class Empty:
    kind: str = "empty"
    bounded = True

    def contains(self, p):
        return False


EMPTY = Empty()


def point_locus(p):
    return Locus("point", (p,))


def segment_locus(a, b):
    if a == b:
        return point_locus(a)
    return Locus("segment", tuple(sorted((a, b))))


def ray_locus(p, d):
    return Locus("ray", (p,), L.primitive(d)[0])


def _line_base(lam, c):
    c = Fraction(c)
    return (c / lam[0], Fraction(0)) if lam[0] else (Fraction(0), c / lam[1])


def _sign_norm(v):
    return v if (v[0] > 0 or (v[0] == 0 and v[1] > 0)) else L.neg(v)


def line_locus(lam, c):
    if _sign_norm(lam) != lam:
        lam, c = L.neg(lam), -Fraction(c)
    return Locus("line", (_line_base(lam, c),), L.cw(lam))


def _normalize(constraints):
    best = {}
    for lam, c in constraints:
        lam0 = (int(lam[0]), int(lam[1]))
        prim, k = L.primitive(lam0)
        c = Fraction(c) / k
        if prim not in best or c > best[prim]:
            best[prim] = c
    return best


def _interval(lam, c, others):
    """Feasible parameter interval (lo, hi) on the line lam = c; None bounds are infinite."""
    p0 = _line_base(lam, c)
    d = L.cw(lam)
    lo = hi = None
    for mu, e in others:
        rate = L.pair(mu, d)
        base = L.pair(mu, p0)
        if rate == 0:
            if base < e:
                return p0, d, Fraction(1), Fraction(0)  # infeasible
            continue
        bound = (e - base) / rate
        if rate > 0:
            lo = bound if lo is None or bound > lo else lo
        else:
            hi = bound if hi is None or bound < hi else hi
    return p0, d, lo, hi


def _at(p0, d, s):
    return (p0[0] + s * d[0], p0[1] + s * d[1])


def intersect(constraints):
    """Intersect finitely many rational half-planes exactly."""
    best = _normalize(constraints)
    if not best:
        raise InputError("no constraints: the whole plane is not an admissible domain")
    items = sorted(best.items(), key=lambda kv: L.angle_key(kv[0]))
    for lam, c in items:
        opp = L.neg(lam)
        if opp in best:
            gap = c + best[opp]
            if gap > 0:
                return EMPTY
            if gap == 0:
                return _degenerate(lam, c, [(m, e) for m, e in items if m not in (lam, opp)])
    edges = []
    touch = None
    for i, (lam, c) in enumerate(items):
        p0, d, lo, hi = _interval(lam, c, items[:i] + items[i + 1:])
        if lo is not None and hi is not None:
            if lo > hi:
                continue
            if lo == hi:
                touch = _at(p0, d, lo)
                continue
        edges.append((lam, c, p0, d, lo, hi))
    if not edges:
        return point_locus(touch) if touch is not None else EMPTY
    return _assemble(edges)


def _degenerate(lam, c, others):
    p0, d, lo, hi = _interval(lam, c, others)
    if lo is not None and hi is not None:
        if lo > hi:
            return EMPTY
        if lo == hi:
            return point_locus(_at(p0, d, lo))
        return segment_locus(_at(p0, d, lo), _at(p0, d, hi))
    if lo is None and hi is None:
        return line_locus(lam, c)
    if lo is not None:
        return ray_locus(_at(p0, d, lo), d)
    return ray_locus(_at(p0, d, hi), L.neg(d))


def _assemble(edges):
    n = len(edges)
    support = tuple((lam, c) for lam, c, *_ in edges)
    unbounded = [e for e in edges if e[4] is None or e[5] is None]
    if not unbounded:
        verts = [_at(p0, d, lo) for _, _, p0, d, lo, _ in edges]
        for i, (_, _, p0, d, _, hi) in enumerate(edges):
            assert _at(p0, d, hi) == verts[(i + 1) % n]
        k = verts.index(min(verts))
        return ConvexDomain("bounded", tuple(verts[k:] + verts[:k]), None,
                            support[k:] + support[:k])
    if n == 1:
        return ConvexDomain("halfplane", (), None, support)
    if all(e[4] is None and e[5] is None for e in edges):
        assert n == 2
        return ConvexDomain("strip", (), None, support)
    first = next(i for i, e in enumerate(edges) if e[4] is None)
    edges = edges[first:] + edges[:first]
    support = support[first:] + support[:first]
    assert edges[-1][5] is None and all(e[4] is not None for e in edges[1:])
    assert all(e[5] is not None for e in edges[:-1])
    verts = [_at(p0, d, hi) for _, _, p0, d, _, hi in edges[:-1]]
    for i in range(1, n):
        _, _, p0, d, lo, _ = edges[i]
        assert _at(p0, d, lo) == verts[i - 1]
    r_first = L.neg(edges[0][3])
    r_last = edges[-1][3]
    return ConvexDomain("tworays", tuple(verts), (r_first, r_last), support)


def from_support(constraints):
    return intersect(constraints)


def half_plane(lam, c):
    return intersect([(tuple(lam), c)])


def strip(lam, c_low, c_high):
    """The strip c_low <= lam(p) <= c_high."""
    if Fraction(c_low) >= Fraction(c_high):
        raise DegenerateInput("strip must have positive width")
    lam = tuple(lam)
    return intersect([(lam, c_low), (L.neg(lam), -Fraction(c_high))])


def _hull_edges(hull):
    out = []
    for a, b in zip(hull, hull[1:] + hull[:1]):
        lam = L.ccw(L.direction_of(L.sub(b, a)))
        out.append((lam, L.pair(lam, a)))
    return out


def _polygon(hull):
    """Canonical bounded domain from a counterclockwise hull without collinear points."""
    k = hull.index(min(hull))
    hull = hull[k:] + hull[:k]
    return ConvexDomain("bounded", tuple(hull), None, tuple(_hull_edges(hull)))


def _check_boundary(points, dom):
    for p in points:
        if min(L.pair(lam, p) - c for lam, c in dom.support) > 0:
            raise NonConvexInput(f"{p} lies in the interior, input is not in convex position")


def from_vertices(points, rays=None):
    """Bounded polygon (no rays) or the domain conv(points) + cone(rays)."""
    pts = [L.point(*p) for p in points]
    if not pts:
        raise EmptyInput("no points")
    if rays is None:
        hull = L.convex_hull(pts)
        if len(hull) < 3:
            raise DegenerateInput("points are collinear")
        dom = _polygon(hull)
        on_hull = set(hull)
        _check_boundary([p for p in pts if p not in on_hull], dom)
        return dom
    dom = minkowski_domain(pts, rays)
    _check_boundary(pts, dom)
    return dom


def minkowski_domain(points, rays):
    """conv(points) + cone(rays) as a two-ray domain; points need not be in convex position."""
    pts = [L.point(*p) for p in points]
    if not pts:
        raise EmptyInput("no points")
    ra, rb = (L.primitive(L.lattice_vec(r))[0] for r in rays)
    w = L.wedge(ra, rb)
    if w == 0 and ra != rb:
        raise DegenerateInput("opposite rays: use half_plane or strip")
    r_last, r_first = (ra, rb) if w >= 0 else (rb, ra)
    lam_last, lam_first = L.ccw(r_last), L.cw(r_first)
    cons = [(lam_last, min(L.pair(lam_last, p) for p in pts)),
            (lam_first, min(L.pair(lam_first, p) for p in pts))]
    hull = L.convex_hull(pts)
    if len(hull) == 2:
        a, b = hull
        lam = L.ccw(L.direction_of(L.sub(b, a)))
        cand = [(lam, L.pair(lam, a)), (L.neg(lam), -L.pair(lam, a))]
    elif len(hull) >= 3:
        cand = _hull_edges(hull)
    else:
        cand = []
    for lam, c in cand:
        if L.pair(lam, r_last) > 0 and L.pair(lam, r_first) > 0:
            cons.append((lam, c))
    dom = intersect(cons)
    if not isinstance(dom, ConvexDomain) or dom.kind != "tworays":
        raise DegenerateInput("rays and points do not span a two-ray domain")
    return dom


def min_value(d, nu):
    """inf of the covector nu over the domain (may be -inf)."""
    nu = tuple(nu)
    if isinstance(d, Empty):
        return INF
    if isinstance(d, Locus):
        if d.kind in ("point", "segment"):
            return min(L.pair(nu, p) for p in d.points)
        rate = L.pair(nu, d.direction)
        if d.kind == "ray":
            return L.pair(nu, d.points[0]) if rate >= 0 else -INF
        return L.pair(nu, d.points[0]) if rate == 0 else -INF
    if d.kind in ("bounded", "tworays"):
        if d.kind == "tworays" and any(L.pair(nu, r) < 0 for r in d.rays):
            return -INF
        return min(L.pair(nu, p) for p in d.vertices)
    if nu == (0, 0):
        return Fraction(0)
    for lam, c in d.support:
        if L.wedge(lam, nu) == 0 and L.pair(lam, nu) > 0:
            k = Fraction(L.pair(lam, nu), L.pair(lam, lam))
            return k * c
    return -INF


def support_value(d, lam):
    """sup of lam over the domain, or +inf."""
    m = min_value(d, L.neg(tuple(lam)))
    return -m


@dataclass(frozen=True)
class ResidualCone:
    kind: str  # "empty", "ray", "cone", "line" or "halfplane"
    generators: tuple = ()


def residual_cone(d):
    if isinstance(d, Empty) or d.bounded:
        return ResidualCone("empty")
    if isinstance(d, Locus):
        return ResidualCone(d.kind if d.kind == "line" else "ray", (d.direction,))
    if d.kind == "tworays":
        r_first, r_last = d.rays
        if r_first == r_last:
            return ResidualCone("ray", (r_first,))
        return ResidualCone("cone", (r_last, r_first))
    if d.kind == "strip":
        return ResidualCone("line", (L.cw(d.support[0][0]),))
    lam = d.support[0][0]
    return ResidualCone("halfplane", (lam,))


def shifted(constraints, t):
    return [(lam, c + t) for lam, c in constraints]


def interior_lattice_points(d, extremes_only=False):
    """Lattice points strictly inside a bounded polygon, scanned column by column.

    With ``extremes_only`` just the lowest and highest point of each column
    are returned, which is all a convex hull needs.
    """
    if not isinstance(d, ConvexDomain) or d.kind != "bounded":
        raise Unbounded("interior lattice points need a bounded polygon")
    xs = [p[0] for p in d.vertices]
    ys = [p[1] for p in d.vertices]
    y_lo, y_hi = floor(min(ys)), ceil(max(ys))
    pts = []
    for x in range(floor(min(xs)), ceil(max(xs)) + 1):
        lo, hi = y_lo, y_hi
        for (a, b), c in d.support:
            # a*x + b*y > c
            rest = c - a * x
            if b > 0:
                lo = max(lo, floor(rest / b) + 1)
            elif b < 0:
                hi = min(hi, ceil(rest / b) - 1)
            elif not 0 > rest:
                lo, hi = 1, 0
        if lo > hi:
            continue
        ys_x = (lo, hi) if extremes_only else range(lo, hi + 1)
        pts.extend((x, y) for y in sorted(set(ys_x)))
    return pts


def hull_domain(points):
    """Smallest closed convex set spanned by points: polygon, segment, point or Empty."""
    hull = L.convex_hull(points)
    if not hull:
        return EMPTY
    if len(hull) == 1:
        return point_locus(hull[0])
    if len(hull) == 2:
        return segment_locus(*hull)
    return from_vertices(hull)


def interior_hull(d):
    """Convex hull of the lattice points in the interior of a lattice polygon."""
    if isinstance(d, Locus) or isinstance(d, Empty):
        return EMPTY
    if d.kind != "bounded":
        raise Unbounded("interior hull needs a bounded polygon")
    if any(c.denominator != 1 for p in d.vertices for c in p):
        raise NotLatticePolygon("vertices must be lattice points")
    hull = L.convex_hull(interior_lattice_points(d, extremes_only=True))
    hull = [(Fraction(x), Fraction(y)) for x, y in hull]
    if len(hull) < 3:
        return hull_domain(hull)
    return _polygon(hull)
