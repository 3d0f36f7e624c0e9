"""Tropical wave-front propagation by event-driven particle simulation.

The front at time t is cut out by the shifted constraints lam(p) >= c + t.
At t = 0 every polygon vertex contributes the vertices of the Klein polygon
of its dual cone as extra (momentarily tangent) constraints; afterwards
constraints only ever disappear, when the edge they carry shrinks to zero.
Vertices of the front are the particles.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import lru_cache

from . import lattice as L
from .domain import (EMPTY, INF, ConvexDomain, Empty, Locus, intersect, line_locus,
                     shifted)
from .errors import AgeExceeded, NegativeTime, NonCanonicalVertex, OrientationError
from .trig import Angle, cone, cone_caustic, double_angle, validate_convex_subdivision


@dataclass(frozen=True)
class Particle:
    id: int
    birth_time: Fraction
    birth_point: tuple
    velocity: tuple
    weight: int
    death_time: Fraction | None = None
    death_point: tuple | None = None

    def position(self, t):
        dt = t - self.birth_time
        return (self.birth_point[0] + dt * self.velocity[0],
                self.birth_point[1] + dt * self.velocity[1])

    def alive(self, t):
        return self.birth_time <= t and (self.death_time is None or t < self.death_time)


@dataclass(frozen=True)
class Event:
    time: Fraction
    location: tuple
    incoming: tuple
    outcome: int | None  # id of the new particle, None for the final locus

    @property
    def final(self):
        return self.outcome is None


@dataclass(frozen=True)
class Phase:
    start: Fraction
    end: object  # Fraction or INF
    constraints: tuple
    slots: tuple  # particle id at the vertex between constraints k and k+1


@dataclass(frozen=True)
class Trace:
    domain: object
    support: tuple  # every constraint that is ever active
    particles: tuple
    events: tuple
    final_time: object
    final_locus: object
    phases: tuple = field(repr=False, default=())

    @property
    def cyclic(self):
        return getattr(self.domain, "kind", None) == "bounded"

    def particle(self, pid):
        return self.particles[pid]


def vertex_constraint_pairs(d: ConvexDomain):
    """(vertex, lam_in, lam_out) for each vertex, in boundary order."""
    v, s = d.vertices, d.support
    if d.kind == "bounded":
        return [(v[i], s[i - 1][0], s[i][0]) for i in range(len(v))]
    return [(v[i], s[i][0], s[i + 1][0]) for i in range(len(v))]


def vertex_angles(d: ConvexDomain):
    """Tangent cones at the vertices, legs = (outgoing edge, reversed incoming edge)."""
    out = []
    for p, lam_in, lam_out in vertex_constraint_pairs(d):
        out.append(cone(L.cw(lam_out), L.ccw(lam_in), apex=p))
    return out


def is_canonical(d) -> bool:
    if not isinstance(d, ConvexDomain):
        return False
    return all(len(cone_caustic(a)) == 1 for a in vertex_angles(d))


def full_support(d: ConvexDomain):
    """Edge constraints plus Klein-polygon constraints at each vertex, angularly ordered."""
    if d.kind in ("halfplane", "strip"):
        return tuple(d.support)
    out = []
    s = d.support
    pairs = vertex_constraint_pairs(d)
    if d.kind == "tworays":
        out.append(s[0])
    for i, (p, lam_in, lam_out) in enumerate(pairs):
        for mu in L.sail(lam_in, lam_out)[1:-1]:
            out.append((mu, L.pair(mu, p)))
        out.append(s[i + 1] if d.kind == "tworays" else s[i])
    if d.kind == "bounded":
        out = out[-1:] + out[:-1]  # start with the constraint before vertex 0
    return tuple(out)


def _pair_state(l1, c1, l2, c2, t):
    pos = L.solve2(l1, c1 + t, l2, c2 + t)
    vel = L.solve2(l1, 1, l2, 1)
    assert all(x.denominator == 1 for x in vel), "vertex angle is not canonical"
    vel = (int(vel[0]), int(vel[1]))
    assert L.is_primitive_int(vel)
    return pos, vel, L.wedge(l1, l2)


@lru_cache(maxsize=8192)
def simulate(d) -> Trace:
    if d.kind == "halfplane":
        return Trace(d, d.support, (), (), INF, None, (Phase(Fraction(0), INF, d.support, ()),))
    if d.kind == "strip":
        (lam, c1), (_, c2) = d.support
        tf = -(c1 + c2) / 2
        return Trace(d, d.support, (), (), tf, line_locus(lam, c1 + tf),
                     (Phase(Fraction(0), tf, d.support, ()),))
    return _simulate_polygonal(d)


def _simulate_polygonal(d):
    cyclic = d.kind == "bounded"
    support = full_support(d)
    active = list(support)
    particles = {}

    def spawn(k1, k2, t):
        (l1, c1), (l2, c2) = k1, k2
        pos, vel, w = _pair_state(l1, c1, l2, c2, t)
        pid = len(particles)
        particles[pid] = Particle(pid, t, pos, vel, w)
        return pid

    def nslots(n):
        return n if cyclic else n - 1

    t = Fraction(0)
    slots = [spawn(active[k], active[(k + 1) % len(active)], t) for k in range(nslots(len(active)))]
    events, phases = [], []
    while True:
        n = len(active)
        edge_ids = range(n) if cyclic else range(1, n - 1)
        best, collapsed = None, []
        for k in edge_ids:
            a, b = particles[slots[k - 1]], particles[slots[k]]
            dvec = L.cw(active[k][0])
            s0 = _signed(L.sub(b.position(t), a.position(t)), dvec)
            g = _signed(L.sub(b.velocity, a.velocity), dvec)
            if g < 0:
                tau = t - s0 / g
                if best is None or tau < best:
                    best, collapsed = tau, [k]
                elif tau == best:
                    collapsed.append(k)
        if best is None:
            phases.append(Phase(t, INF, tuple(active), tuple(slots)))
            final_time, final_locus = INF, None
            break
        phases.append(Phase(t, best, tuple(active), tuple(slots)))
        t = best
        region = intersect(shifted(active, t))
        if not isinstance(region, ConvexDomain):
            final_time, final_locus = t, region
            groups = {}
            for pid in slots:
                groups.setdefault(particles[pid].position(t), []).append(pid)
            for loc, pids in sorted(groups.items()):
                for pid in pids:
                    particles[pid] = replace(particles[pid], death_time=t, death_point=loc)
                events.append(Event(t, loc, tuple(pids), None))
            break
        gone = set(collapsed)
        keep = [k for k in range(n) if k not in gone]
        new_active = [active[k] for k in keep]
        new_slots = []
        m = len(keep)
        for j in range(nslots(m)):
            i1, i2 = keep[j], keep[(j + 1) % m]
            if (i2 - i1) % n == 1:
                new_slots.append(slots[i1])
                continue
            dying = [slots[(i1 + r) % n] for r in range((i2 - i1) % n)]
            loc = particles[dying[0]].position(t)
            pid = spawn(active[i1], active[i2], t)
            new = particles[pid]
            assert new.birth_point == loc
            for q in dying:
                assert particles[q].position(t) == loc
                particles[q] = replace(particles[q], death_time=t, death_point=loc)
            mom = (0, 0)
            for q in dying:
                mom = L.add(mom, L.scale(particles[q].weight, particles[q].velocity))
            assert mom == L.scale(new.weight, new.velocity), "momentum not conserved"
            removed = [active[(i1 + r) % n][0] for r in range(1, (i2 - i1) % n)]
            assert validate_convex_subdivision(Angle(active[i1][0], active[i2][0]), removed)
            events.append(Event(t, loc, tuple(dying), pid))
            new_slots.append(pid)
        active, slots = new_active, new_slots
    events.sort(key=lambda e: (e.time, e.location))
    return Trace(d, support, tuple(particles[i] for i in range(len(particles))), tuple(events),
                 final_time, final_locus, tuple(phases))


def _signed(v, d):
    if v == (0, 0):
        return Fraction(0)
    s = L.signed_length(v, d)
    assert v == (s * d[0], s * d[1])
    return s


def propagate_half_plane(lam, c, t):
    return (lam, Fraction(c) + t)


def _phase_at(trace, t):
    for ph in trace.phases:
        if ph.start <= t and (ph.end == INF or t < ph.end):
            return ph
    raise AssertionError("no phase covers t")


def front(trace: Trace, t):
    """The front Phi(t) for 0 < t < t_final, assembled from surviving particles."""
    ph = _phase_at(trace, t)
    cons = tuple(shifted(ph.constraints, t))
    d = trace.domain
    if d.kind in ("halfplane", "strip"):
        return intersect(cons)
    verts = [trace.particle(pid).position(t) for pid in ph.slots]
    if d.kind == "bounded":
        sup = cons[1:] + cons[:1]
        k = verts.index(min(verts))
        return ConvexDomain("bounded", tuple(verts[k:] + verts[:k]), None, sup[k:] + sup[:k])
    return ConvexDomain("tworays", tuple(verts), d.rays, cons)


def propagate(d, t):
    t = Fraction(t)
    if t < 0:
        raise NegativeTime("propagation time must be nonnegative")
    if t == 0:
        return d
    if isinstance(d, (Locus, Empty)):
        return EMPTY
    trace = simulate(d)
    if trace.final_time != INF:
        if t > trace.final_time:
            return EMPTY
        if t == trace.final_time:
            return trace.final_locus
    return front(trace, t)


def propagate_direct(d, t):
    """Independent oracle: intersect the shifted full support set."""
    t = Fraction(t)
    if t == 0:
        return d
    if isinstance(d, (Locus, Empty)):
        return EMPTY
    return intersect(shifted(full_support(d), t))


def final_data(trace: Trace):
    loc = trace.final_locus
    kind = None if loc is None else loc.kind.capitalize()
    return trace.final_time, loc, kind


def cone_domain(a: Angle):
    from .domain import from_vertices
    return from_vertices([a.apex], [a.leg1, a.leg2])


def _edge_rates(front_dom: ConvexDomain, velocities):
    """(length, gradient) per bounded edge given the velocity at each vertex."""
    out = []
    idx = {p: i for i, p in enumerate(front_dom.vertices)}
    for a, b, lam, c in front_dom.edges():
        dvec = L.cw(lam)
        length = _signed(L.sub(b, a), dvec)
        g = _signed(L.sub(velocities[idx[b]], velocities[idx[a]]), dvec)
        out.append((length, g))
    return out


def bissectrices(d: ConvexDomain):
    out = []
    for a in vertex_angles(d):
        rays = cone_caustic(a)
        if len(rays) != 1:
            raise NonCanonicalVertex(f"vertex {a.apex} is not canonical")
        out.append(rays[0][0])
    return out


def front_gradients(d, t):
    """Length gradients of the bounded edges of Phi(t), in boundary order."""
    f = propagate(d, t)
    return [g for _, g in _edge_rates(f, bissectrices(f))]


def gradient_by_double_angle(f: ConvexDomain, k: int):
    """-tr of the conormals of the bissectrices flanking bounded edge k."""
    a, b, lam, _ = f.edges()[k]
    bis = dict(zip(f.vertices, bissectrices(f)))
    nu = L.neg(lam)
    ab = L.sub(b, a)
    flank = []
    for p, toward in ((a, ab), (b, L.neg(ab))):
        conorm = L.ccw(bis[p])
        if L.pair(conorm, toward) > 0:
            conorm = L.neg(conorm)
        flank.append(conorm)
    for rm, rp in (flank, flank[::-1]):
        try:
            return -double_angle(rm, nu, rp)
        except OrientationError:
            continue
    raise AssertionError("conormals do not straddle the edge normal")


def age(d):
    if isinstance(d, ConvexDomain) and d.kind in ("halfplane", "strip"):
        return INF
    if not is_canonical(d):
        return Fraction(0)
    best = INF
    for length, g in _edge_rates(d, bissectrices(d)):
        if g > 0:
            r = length / g
            best = r if best == INF or r < best else best
    return best


def negative_propagate(d, a):
    a = Fraction(a)
    if a < 0:
        raise NegativeTime("use propagate for positive times")
    if a == 0:
        return d
    lim = age(d)
    if lim != INF and a >= lim:
        raise AgeExceeded(f"{a} is not below the age {lim}")
    out = intersect(shifted(d.support, -a))
    assert isinstance(out, ConvexDomain)
    return out
