"""The caustic of a domain as a weighted balanced curve, and its audits."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from . import lattice as L
from .domain import INF, ConvexDomain, Locus, from_vertices
from .errors import (InputError, NonCanonicalVertex, PointOutsideDomain, Unbounded,
                     UnexpectedFinalStar)
from .trig import cone, cone_caustic
from .wavefront import Trace, bissectrices, full_support, simulate


class NotPointFinal(InputError):
    pass


@dataclass(frozen=True)
class CurveEdge:
    start: tuple
    end: tuple | None  # None for rays and lines
    direction: tuple
    weight: int
    kind: str  # "trajectory" or "final"


@dataclass(frozen=True)
class TropicalCurve:
    edges: tuple
    leaves: frozenset  # endpoints on the boundary of the domain

    def vertices(self):
        pts = set()
        for e in self.edges:
            if e.kind == "final" and e.end is None and e.direction is not None and e.start is None:
                continue
            if e.start is not None:
                pts.add(e.start)
            if e.end is not None:
                pts.add(e.end)
        return sorted(pts)


def _on_boundary(d, p):
    return min(L.pair(lam, p) - c for lam, c in d.support) == 0


def caustic_of(trace: Trace) -> TropicalCurve:
    edges = []
    for p in trace.particles:
        if p.death_point is None:
            edges.append(CurveEdge(p.birth_point, None, p.velocity, p.weight, "trajectory"))
        else:
            edges.append(CurveEdge(p.birth_point, p.death_point, p.velocity, p.weight, "trajectory"))
    loc = trace.final_locus
    if isinstance(loc, Locus) and loc.kind != "point":
        if loc.kind == "segment":
            a, b = loc.points
            edges.append(CurveEdge(a, b, L.direction_of(L.sub(b, a)), 2, "final"))
        elif loc.kind == "ray":
            edges.append(CurveEdge(loc.points[0], None, loc.direction, 2, "final"))
        else:
            edges.append(CurveEdge(None, None, loc.direction, 2, "final"))
    leaves = frozenset(e.start for e in edges
                       if e.start is not None and _on_boundary(trace.domain, e.start))
    return TropicalCurve(tuple(edges), leaves)


def validate_balancing(curve: TropicalCurve):
    """(ok, violations) where violations maps a vertex to its nonzero momentum sum."""
    sums = {}
    for e in curve.edges:
        if e.start is not None:
            sums[e.start] = L.add(sums.get(e.start, (0, 0)), L.scale(e.weight, e.direction))
        if e.end is not None:
            sums[e.end] = L.add(sums.get(e.end, (0, 0)), L.scale(-e.weight, e.direction))
    bad = {p: s for p, s in sums.items() if p not in curve.leaves and s != (0, 0)}
    return not bad, bad


def eval_series(d, p):
    """Arrival time of the front at p: min over supports of lam(p) - c."""
    p = (Fraction(p[0]), Fraction(p[1]))
    if not d.contains(p):
        raise PointOutsideDomain(f"{p} is not in the domain")
    return min(L.pair(lam, p) - c for lam, c in full_support(d))


@dataclass(frozen=True)
class NoetherAudit:
    l_caustic: Fraction
    l_boundary: Fraction
    t_final: Fraction
    l_final: Fraction

    @property
    def residual(self):
        return self.l_caustic + self.l_boundary - 12 * self.t_final - 4 * self.l_final


def perimeter(d: ConvexDomain):
    return sum((L.tropical_length(L.sub(b, a)) for a, b, _, _ in d.edges()), Fraction(0))


def noether_audit(trace: Trace) -> NoetherAudit:
    d = trace.domain
    if d.kind != "bounded":
        raise Unbounded("the Noether identity needs a bounded domain")
    lc = Fraction(0)
    for p in trace.particles:
        lc += p.weight * (p.death_time - p.birth_time)  # velocities are primitive
    lf = trace.final_locus.length()
    lc += 2 * lf
    return NoetherAudit(lc, perimeter(d), trace.final_time, lf)


@dataclass(frozen=True)
class TwelveAudit:
    per_vertex: tuple
    per_edge: tuple

    @property
    def total(self):
        return sum(dv for _, dv in self.per_vertex) + sum(de for _, de in self.per_edge)


def _line_meet(p, u, q, v):
    nu, nv = L.ccw(u), L.ccw(v)
    return L.solve2(nu, L.pair(nu, p), nv, L.pair(nv, q))


def _edge_term(a, ba, b, bb, left_of):
    """d_E for an edge a->b with bissectrix directions ba, bb; left_of(q) tests H."""
    n = abs(L.wedge(ba, bb))
    if n == 0:
        return 0
    q = _line_meet(a, ba, b, bb)
    return n if left_of(q) else -n


def twelve_sum(d: ConvexDomain) -> TwelveAudit:
    if d.kind != "bounded":
        raise Unbounded("twelve_sum needs a bounded polygon")
    from .wavefront import vertex_angles
    try:
        bis = bissectrices(d)
    except NonCanonicalVertex:
        raise
    per_v = tuple((a.apex, a.det) for a in vertex_angles(d))
    per_e = []
    n = len(d.vertices)
    for i, (a, b, lam, c) in enumerate(d.edges()):
        de = _edge_term(a, bis[i], b, bis[(i + 1) % n], lambda q: L.pair(lam, q) > c)
        per_e.append(((a, b), de))
    return TwelveAudit(per_v, tuple(per_e))


def _turn_count(a, b):
    """Number of full turns picked up turning from a to b the short way."""
    w = L.wedge(a, b)
    before = L.angle_cmp(b, a) < 0  # b has smaller polar angle than a
    if w > 0 and before:
        return 1
    if w < 0 and not before and L.angle_cmp(b, a) != 0:
        return -1
    return 0


def rotation_twelve(points, side="left"):
    """(sum of d_v + d_E, rot) for a closed canonical broken line.

    ``side`` says on which side of the given traversal the distinguished
    (coorienting) region lies; the line is re-oriented to keep it on the left.
    """
    pts = [L.point(*p) for p in points]
    if side == "right":
        pts.reverse()
    elif side != "left":
        raise InputError("side must be 'left' or 'right'")
    # drop straight-through vertices
    changed = True
    while changed:
        changed = False
        m = len(pts)
        for i in range(m):
            a = L.direction_of(L.sub(pts[i], pts[i - 1]))
            b = L.direction_of(L.sub(pts[(i + 1) % m], pts[i]))
            if a == b:
                del pts[i]
                changed = True
                break
    m = len(pts)
    dirs = [L.direction_of(L.sub(pts[(i + 1) % m], pts[i])) for i in range(m)]
    total, rot = 0, 0
    lines = []
    for i in range(m):
        a, b = dirs[i - 1], dirs[i]
        w = L.wedge(a, b)
        if w == 0:
            raise InputError("broken line turns back on itself")
        ang = cone(b, L.neg(a)) if w > 0 else cone(L.neg(a), b)
        rays = cone_caustic(ang)
        if len(rays) != 1:
            raise NonCanonicalVertex(f"vertex {pts[i]} is not canonical")
        total += ang.det if w > 0 else -ang.det
        lines.append(rays[0][0])
        rot += _turn_count(a, b)
    for i in range(m):
        a, b, e = pts[i], pts[(i + 1) % m], dirs[i]
        total += _edge_term(a, lines[i], b, lines[(i + 1) % m],
                            lambda q: L.wedge(e, L.sub(q, a)) > 0)
    assert total == 12 * rot, (total, rot)
    return total, rot


def lattice_points_in(poly):
    """All lattice points of a lattice polygon given by ccw vertices (boundary included)."""
    xs = [p[0] for p in poly]
    ys = [p[1] for p in poly]
    out = []
    m = len(poly)
    for x in range(int(min(xs)), int(max(xs)) + 1):
        for y in range(int(min(ys)), int(max(ys)) + 1):
            if all(L.wedge(L.sub(poly[(i + 1) % m], poly[i]), L.sub((x, y), poly[i])) >= 0
                   for i in range(m)):
                out.append((x, y))
    return out


def interior_count(poly):
    m = len(poly)
    return sum(1 for p in lattice_points_in(poly)
               if all(L.wedge(L.sub(poly[(i + 1) % m], poly[i]), L.sub(p, poly[i])) > 0
                      for i in range(m)))


def normal_form(poly):
    """GL2(Z) normal form of a lattice polygon with the origin fixed."""
    best = None
    m = len(poly)
    for seq in (list(poly), list(reversed(poly))):
        for i in range(m):
            v, w = seq[i], seq[(i + 1) % m]
            if L.content(v) != 1:
                continue
            # send v to (1,0); then fix the shear so w = (a, b) with b > 0, 0 <= a < b
            e2 = L.complete_basis(v)
            # coordinates in basis (v, e2): x = wedge(p, e2), y = wedge(v, p)
            def coords(p, k=0, s=1):
                x, y = L.wedge(p, e2), L.wedge(v, p)
                y *= s
                return (x + k * y, y)
            s = 1 if L.wedge(v, w) > 0 else -1
            _, b = coords(w, 0, s)
            a0, _ = coords(w, 0, s)
            k = (-(a0 // b))
            cand = tuple(coords(seq[(i + j) % m], k, s) for j in range(m))
            if best is None or cand < best:
                best = cand
    return best


def is_reflexive(poly):
    return interior_count(poly) == 1 and (0, 0) in lattice_points_in(poly) and \
        (0, 0) not in _boundary_points(poly)


def _boundary_points(poly):
    m = len(poly)
    return [p for p in lattice_points_in(poly)
            if any(L.wedge(L.sub(poly[(i + 1) % m], poly[i]), L.sub(p, poly[i])) == 0
                   for i in range(m))]


def reflexive_polygons():
    """The reflexive polygons up to GL2(Z), as normal forms, by vertex removal."""
    seeds = [[(-1, -1), (2, -1), (-1, 2)], [(-1, -1), (1, -1), (1, 1), (-1, 1)],
             [(-1, -1), (3, -1), (-1, 1)]]
    seen = {}
    queue = deque(seeds)
    while queue:
        poly = queue.popleft()
        key = normal_form(poly)
        if key in seen:
            continue
        seen[key] = poly
        pts = lattice_points_in(poly)
        for v in poly:
            hull = L.convex_hull([p for p in pts if p != v])
            if len(hull) >= 3 and is_reflexive(hull):
                queue.append(hull)
    return sorted(seen)


@dataclass(frozen=True)
class StarReport:
    location: tuple
    directions: tuple  # outward primitive directions with weights
    hull: tuple
    dual: tuple
    normal_form: tuple


def final_star_type(trace: Trace) -> StarReport:
    loc = trace.final_locus
    if not isinstance(loc, Locus) or loc.kind != "point":
        raise NotPointFinal("final locus is not a point")
    phase = trace.phases[-1]
    dirs = []
    mom = (0, 0)
    cons = phase.constraints
    n = len(cons)
    for k, pid in enumerate(phase.slots):
        p = trace.particle(pid)
        out = L.neg(p.velocity)
        dirs.append((out, p.weight))
        mom = L.add(mom, L.scale(p.weight, out))
        side = L.sub(cons[(k + 1) % n][0], cons[k][0])
        if L.content(side) != p.weight:
            raise UnexpectedFinalStar("weight does not match the dual side length")
    if mom != (0, 0):
        raise UnexpectedFinalStar("momenta do not cancel at the final point")
    hull = tuple(L.convex_hull([v for v, _ in dirs]))
    dual = tuple(L.convex_hull([lam for lam, _ in cons]))
    if not is_reflexive(list(hull)) or not is_reflexive(list(dual)):
        raise UnexpectedFinalStar("final star is not reflexive")
    return StarReport(loc.points[0], tuple(dirs), hull, dual, normal_form(list(hull)))


def final_edge_endpoint_type(trace: Trace):
    """[(endpoint, tag)] with tag 'two-unit', 'two-double' or 'unit-n-unit:<n>'."""
    loc = trace.final_locus
    if not isinstance(loc, Locus) or loc.kind not in ("segment", "ray", "line"):
        raise UnexpectedFinalStar("final locus is not one-dimensional")
    if loc.kind == "line":
        return []
    report = []
    for ev in trace.events:
        if not ev.final:
            continue
        if ev.location not in loc.points:
            raise UnexpectedFinalStar(f"particles end inside the final locus at {ev.location}")
        ws = sorted(trace.particle(i).weight for i in ev.incoming)
        if ws == [1, 1]:
            tag = "two-unit"
        elif ws == [2, 2]:
            tag = "two-double"
        elif len(ws) == 3 and ws[0] == ws[1] == 1:
            tag = f"unit-n-unit:{ws[2]}"
        else:
            raise UnexpectedFinalStar(f"unexpected weights {ws} at {ev.location}")
        report.append((ev.location, tag))
    return report
