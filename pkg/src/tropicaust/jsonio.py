"""JSON encoding of domains, loci, traces and caustics.

Rationals travel as reduced strings ("p/q" or "p"); lattice vectors as
plain integers.  Infinite times use the string "inf".
"""
from __future__ import annotations

import json
from fractions import Fraction

from . import lattice as L
from .caustic import TropicalCurve
from .domain import (EMPTY, INF, ConvexDomain, Empty, Locus, from_vertices, half_plane,
                     line_locus, point_locus, ray_locus, segment_locus, strip)
from .errors import InputError
from .wavefront import Event, Particle, Trace


class MalformedInput(InputError):
    pass


def enc_rat(x):
    return "inf" if x == INF else L.fmt_rat(x)


def dec_rat(s):
    if s == "inf":
        return INF
    if not isinstance(s, (str, int)) or isinstance(s, bool):
        raise MalformedInput(f"rational expected as string or int, got {s!r}")
    return L.rat(s)


def enc_point(p):
    return [L.fmt_rat(p[0]), L.fmt_rat(p[1])]


def dec_point(v):
    if not isinstance(v, (list, tuple)) or len(v) != 2:
        raise MalformedInput(f"point expected as a pair, got {v!r}")
    return (dec_rat(v[0]), dec_rat(v[1]))


def enc_vec(v):
    return [int(v[0]), int(v[1])]


def dec_vec(v):
    if not isinstance(v, (list, tuple)) or len(v) != 2:
        raise MalformedInput(f"vector expected as a pair, got {v!r}")
    return L.lattice_vec([dec_rat(c) for c in v])


def _field(obj, key):
    try:
        return obj[key]
    except (KeyError, TypeError):
        raise MalformedInput(f"missing field {key!r}") from None


def domain_to_obj(d):
    if isinstance(d, (Locus, Empty)):
        return locus_to_obj(d)
    if d.kind == "bounded":
        return {"kind": "bounded", "vertices": [enc_point(p) for p in d.vertices]}
    if d.kind == "tworays":
        return {"kind": "tworays", "vertices": [enc_point(p) for p in d.vertices],
                "rayFirst": enc_vec(d.rays[0]), "rayLast": enc_vec(d.rays[1])}
    if d.kind == "halfplane":
        (lam, c), = d.support
        return {"kind": "halfplane", "lambda": enc_vec(lam), "c": enc_rat(c)}
    (lam, c_low), (_, c_neg) = d.support
    return {"kind": "strip", "lambda": enc_vec(lam), "cLow": enc_rat(c_low),
            "cHigh": enc_rat(-c_neg)}


def domain_from_obj(obj):
    kind = _field(obj, "kind")
    if kind == "bounded":
        return from_vertices([dec_point(p) for p in _field(obj, "vertices")])
    if kind == "tworays":
        rays = (dec_vec(_field(obj, "rayFirst")), dec_vec(_field(obj, "rayLast")))
        return from_vertices([dec_point(p) for p in _field(obj, "vertices")], rays=rays)
    if kind == "halfplane":
        return half_plane(dec_vec(_field(obj, "lambda")), dec_rat(_field(obj, "c")))
    if kind == "strip":
        return strip(dec_vec(_field(obj, "lambda")), dec_rat(_field(obj, "cLow")),
                     dec_rat(_field(obj, "cHigh")))
    if kind in ("empty", "point", "segment", "ray", "line"):
        return locus_from_obj(obj)
    raise MalformedInput(f"unknown domain kind {kind!r}")


def locus_to_obj(loc):
    if isinstance(loc, Empty):
        return {"kind": "empty"}
    out = {"kind": loc.kind, "points": [enc_point(p) for p in loc.points]}
    if loc.direction is not None:
        out["direction"] = enc_vec(loc.direction)
    return out


def locus_from_obj(obj):
    kind = _field(obj, "kind")
    if kind == "empty":
        return EMPTY
    pts = [dec_point(p) for p in _field(obj, "points")]
    if kind == "point":
        return point_locus(pts[0])
    if kind == "segment":
        return segment_locus(*pts)
    d = dec_vec(_field(obj, "direction"))
    if kind == "ray":
        return ray_locus(pts[0], d)
    if kind == "line":
        lam = L.ccw(d)
        return line_locus(lam, L.pair(lam, pts[0]))
    raise MalformedInput(f"unknown locus kind {kind!r}")


def _opt_point(p):
    return None if p is None else enc_point(p)


def trace_to_obj(tr: Trace):
    return {
        "domain": domain_to_obj(tr.domain),
        "particles": [{"id": p.id, "birthTime": enc_rat(p.birth_time),
                       "birthPoint": enc_point(p.birth_point), "velocity": enc_vec(p.velocity),
                       "weight": p.weight,
                       "deathTime": None if p.death_time is None else enc_rat(p.death_time),
                       "deathPoint": _opt_point(p.death_point)}
                      for p in tr.particles],
        "events": [{"time": enc_rat(e.time), "location": enc_point(e.location),
                    "incoming": list(e.incoming), "outcome": e.outcome} for e in tr.events],
        "finalTime": enc_rat(tr.final_time),
        "finalLocus": None if tr.final_locus is None else locus_to_obj(tr.final_locus),
    }


def trace_from_obj(obj) -> Trace:
    """Rebuild the recorded history; phase data is not serialized."""
    parts = []
    for p in _field(obj, "particles"):
        dt = p.get("deathTime")
        parts.append(Particle(p["id"], dec_rat(p["birthTime"]), dec_point(p["birthPoint"]),
                              dec_vec(p["velocity"]), int(p["weight"]),
                              None if dt is None else dec_rat(dt),
                              None if p.get("deathPoint") is None else dec_point(p["deathPoint"])))
    events = [Event(dec_rat(e["time"]), dec_point(e["location"]), tuple(e["incoming"]),
                    e["outcome"]) for e in _field(obj, "events")]
    loc = obj.get("finalLocus")
    return Trace(domain_from_obj(_field(obj, "domain")), (), tuple(parts), tuple(events),
                 dec_rat(_field(obj, "finalTime")),
                 None if loc is None else locus_from_obj(loc))


def curve_to_obj(curve: TropicalCurve):
    return {"edges": [{"start": _opt_point(e.start), "end": _opt_point(e.end),
                       "direction": enc_vec(e.direction), "weight": e.weight, "kind": e.kind}
                      for e in curve.edges],
            "leaves": [enc_point(p) for p in sorted(curve.leaves)]}


def loads(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"invalid JSON: {exc}") from None


def load_domain(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise MalformedInput(str(exc)) from None
    return domain_from_obj(loads(text))


def dumps(obj):
    return json.dumps(obj, indent=2, sort_keys=False)
