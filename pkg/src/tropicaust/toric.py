"""Fan and divisor-class bookkeeping for the toric surfaces of the fronts.

Areas are reported in units of 2*pi.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import lattice as L
from .domain import INF, ConvexDomain
from .errors import (ClassNotClosed, InputError, MissingRay, NotUnimodularFan,
                     WindowContainsCriticalTime)
from .trig import double_angle
from .wavefront import gradient_by_double_angle, is_canonical, propagate, simulate


class BoundaryRay(InputError):
    pass


class UnboundedEdge(InputError):
    pass


@dataclass(frozen=True)
class Fan:
    rays: tuple
    complete: bool


def make_fan(rays) -> Fan:
    rs = sorted({L.primitive(tuple(r))[0] for r in rays}, key=L.angle_key)
    n = len(rs)
    complete = n >= 3 and all(L.wedge(rs[i], rs[(i + 1) % n]) > 0 for i in range(n))
    return Fan(tuple(rs), complete)


def dual_fan(front: ConvexDomain) -> Fan:
    return make_fan([lam for lam, _ in front.support])


def self_intersection(f: Fan, k: int) -> Fraction:
    n = len(f.rays)
    if not f.complete and (k == 0 or k == n - 1):
        raise BoundaryRay("end rays of an incomplete fan have one neighbour")
    return double_angle(f.rays[(k + 1) % n], f.rays[k], f.rays[k - 1])


def complete_fan_twelve(f: Fan) -> int:
    n = len(f.rays)
    if not f.complete or any(L.wedge(f.rays[i], f.rays[(i + 1) % n]) != 1 for i in range(n)):
        raise NotUnimodularFan("fan is not complete and unimodular")
    total = 3 * n + sum(self_intersection(f, k) for k in range(n))
    assert total.denominator == 1
    return int(total)


def _closed(c: dict):
    s = (0, 0)
    for lam, a in c.items():
        s = L.add(s, L.scale(a, lam))
    if s != (0, 0):
        raise ClassNotClosed(f"sum of a*lambda is {s}, not zero")


def canonical_pairing(c: dict) -> int:
    _closed(c)
    return -sum(c.values())


def symplectic_area(c: dict, d: ConvexDomain) -> Fraction:
    _closed(c)
    sup = dict(d.support)
    total = Fraction(0)
    for lam, a in c.items():
        if a == 0:
            continue
        if lam not in sup:
            raise MissingRay(f"{lam} is not a support direction of the domain")
        total -= a * sup[lam]
    return total


def critical_times(d):
    tr = simulate(d)
    times = sorted({e.time for e in tr.events if not e.final})
    if not is_canonical(d):
        times.insert(0, Fraction(0))
    return times


def canonical_evolution_check(d, c: dict, t0, t1) -> bool:
    t0, t1 = Fraction(t0), Fraction(t1)
    if not 0 <= t0 < t1:
        raise InputError("need 0 <= t0 < t1")
    tf = simulate(d).final_time
    if tf != INF and t1 >= tf:
        raise WindowContainsCriticalTime("window reaches the final time")
    if any(t0 <= t <= t1 for t in critical_times(d)):
        raise WindowContainsCriticalTime("window contains a critical time")
    a0 = symplectic_area(c, propagate(d, t0))
    a1 = symplectic_area(c, propagate(d, t1))
    return (a1 - a0) / (t1 - t0) == canonical_pairing(c)


def divisor_canonical_degree(front: ConvexDomain, k: int):
    """l'(E) for bounded edge k of a canonical front, computed two ways."""
    edges = front.edges()
    if not 0 <= k < len(edges):
        raise UnboundedEdge("no such bounded edge")
    via_bissectrices = gradient_by_double_angle(front, k)
    from .wavefront import vertex_angles
    dets = {a.apex: a.det for a in vertex_angles(front)}
    a, b, lam, _ = edges[k]
    idx = [s[0] for s in front.support].index(lam)
    n = len(front.support)
    prev_lam = front.support[idx - 1][0]
    next_lam = front.support[(idx + 1) % n][0]
    tr = None
    for rm, rp in ((prev_lam, next_lam), (next_lam, prev_lam)):
        try:
            tr = double_angle(rm, lam, rp)
            break
        except InputError:
            continue
    via_fan = -(tr + Fraction(1, dets[a]) + Fraction(1, dets[b]))
    assert via_fan == via_bissectrices, (via_fan, via_bissectrices)
    return via_bissectrices, via_fan
