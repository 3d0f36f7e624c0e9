"""Command-line front end.

Exit status: 0 on success, 2 on invalid input, 1 when an internal check or
a verification suite fails.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import contfrac as CF
from . import lattice as L
from . import trig as T
from .caustic import caustic_of, eval_series, reflexive_polygons
from .domain import ConvexDomain
from .errors import InputError
from .jsonio import (curve_to_obj, domain_to_obj, dumps, enc_point, enc_rat, enc_vec,
                     load_domain, trace_to_obj)
from .svg import RenderSpec, render, render_star
from .verify import random_suite, verify_domain
from .wavefront import age, propagate, simulate


def _vec(s):
    parts = s.split(",")
    if len(parts) != 2:
        raise InputError(f"expected 'x,y', got {s!r}")
    return tuple(L.rat(p) for p in parts)


def _legs(s):
    parts = s.split(";")
    if len(parts) != 2:
        raise InputError(f"expected 'a,b;c,d', got {s!r}")
    return [L.lattice_vec(_vec(p)) for p in parts]


def _class(s):
    out = {}
    for item in s.split(";"):
        try:
            v, a = item.split(":")
        except ValueError:
            raise InputError(f"class entries look like 'a,b:k', got {item!r}") from None
        lam = L.lattice_vec(_vec(v))
        if not L.is_primitive_int(lam):
            raise InputError(f"{lam} is not primitive")
        k = L.rat(a)
        if k.denominator != 1:
            raise InputError("class coefficients must be integers")
        out[lam] = out.get(lam, 0) + int(k)
    return out


def _rays_text(rays):
    return ", ".join(f"({v[0]},{v[1]})w{w}" for v, w in rays)


def _pt(p):
    return "(" + ", ".join(L.fmt_rat(c) for c in p) + ")"


def _emit(args, obj, lines):
    if args.json:
        print(dumps(obj))
    else:
        for line in lines:
            print(line)


def cmd_angle(args):
    r1, r2 = _legs(args.legs)
    apex = _vec(args.apex) if args.apex else L.ORIGIN
    a = T.cone(r1, r2, apex)
    cls = T.classify(a)
    ta = T.cotangent(a)
    rays = T.cone_caustic(a)
    perps = T.common_perpendiculars(a)
    dual = T.classify(T.dual_angle(a))
    comp = T.classify(T.complementary_angle(a))
    obj = {"determinant": cls.determinant, "width": cls.width, "height": cls.height,
           "class": str(cls), "cotangent": enc_rat(ta),
           "reversedCotangent": enc_rat(T.reversed_cotangent(ta)),
           "dualClass": str(dual), "complementClass": str(comp),
           "caustic": [{"direction": enc_vec(v), "weight": w} for v, w in rays],
           "perpendiculars": [enc_vec(v) for v in perps]}
    _emit(args, obj, [
        f"determinant  {cls.determinant}",
        f"width        {cls.width}",
        f"height       {cls.height}",
        f"class        {cls}",
        f"cotangent    {L.fmt_rat(ta)}",
        f"reversed     {L.fmt_rat(T.reversed_cotangent(ta))}",
        f"dual         {dual}",
        f"complement   {comp}",
        f"caustic      {_rays_text(rays)}",
        "perpendiculars " + (", ".join(f"({v[0]},{v[1]})" for v in perps) or "none"),
    ])
    return 0


def cmd_contfrac(args):
    q = L.rat(args.value)
    reg = CF.regular_cf(q)
    obj = {"value": enc_rat(q), "regular": reg}
    lines = [f"regular      {reg}"]
    if args.hj or args.angle:
        hj = CF.hj_cf(1 - q)
        obj["hj"] = hj
        lines.append(f"HJ           {hj}")
    if args.angle:
        a = CF.angle_with_cotangent(q)
        _, weights, grads = CF.cf_from_angle(a)
        grads = [int(g) for g in grads]
        res = CF.minimal_resolution(a)
        obj.update({"legs": [enc_vec(a.given_legs[0]), enc_vec(a.given_legs[1])],
                    "weights": weights, "gradients": grads, "resolution": res,
                    "reversedCotangent": enc_rat(T.reversed_cotangent(q))})
        lines += [f"angle        cone({a.given_legs[0]}, {a.given_legs[1]})",
                  f"weights      {weights}",
                  f"gradients    {grads}",
                  "resolution   " + " - ".join(f"({s})" for s in res),
                  f"reversed     {L.fmt_rat(T.reversed_cotangent(q))}"]
    _emit(args, obj, lines)
    return 0


def _domain_lines(d):
    if isinstance(d, ConvexDomain):
        lines = [f"kind         {d.kind}"]
        if d.vertices:
            lines.append("vertices     " + " ".join(_pt(p) for p in d.vertices))
        if d.rays:
            lines.append(f"rays         first {d.rays[0]}  last {d.rays[1]}")
        lines += [f"support      {lam}>={L.fmt_rat(c)}" for lam, c in d.support]
        return lines
    if getattr(d, "kind", "empty") == "empty":
        return ["kind         empty"]
    out = [f"kind         {d.kind}", "points       " + " ".join(_pt(p) for p in d.points)]
    if d.direction is not None:
        out.append(f"direction    {d.direction}")
    return out


def cmd_evolve(args):
    d = load_domain(args.domain)
    t = L.rat(args.time)
    f = propagate(d, t)
    _emit(args, domain_to_obj(f), _domain_lines(f))
    if args.svg and isinstance(d, ConvexDomain):
        _write(args.svg, render(d, RenderSpec(front_times=(t,))))
    return 0


def cmd_trace(args):
    d = load_domain(args.domain)
    tr = simulate(d)
    lines = ["particles"]
    for p in tr.particles:
        death = "alive" if p.death_time is None else f"dies {L.fmt_rat(p.death_time)} at {_pt(p.death_point)}"
        lines.append(f"  #{p.id}  born {L.fmt_rat(p.birth_time)} at {_pt(p.birth_point)}"
                     f"  v={p.velocity}  w={p.weight}  {death}")
    lines.append("events")
    for e in tr.events:
        what = "final" if e.final else f"-> #{e.outcome}"
        lines.append(f"  t={L.fmt_rat(e.time)} at {_pt(e.location)}  {list(e.incoming)} {what}")
    lines.append(f"final time   {enc_rat(tr.final_time)}")
    if tr.final_locus is not None:
        loc = tr.final_locus
        where = " ".join(_pt(p) for p in getattr(loc, "points", ()))
        lines.append(f"final locus  {loc.kind} {where}".rstrip())
    _emit(args, trace_to_obj(tr), lines)
    return 0


def cmd_caustic(args):
    d = load_domain(args.domain)
    tr = simulate(d)
    curve = caustic_of(tr)
    lines = []
    for e in curve.edges:
        end = _pt(e.end) if e.end is not None else "inf"
        start = _pt(e.start) if e.start is not None else "inf"
        lines.append(f"{e.kind:10s} {start} -> {end}  dir {e.direction}  w {e.weight}")
    _emit(args, curve_to_obj(curve), lines)
    if args.svg:
        _write(args.svg, render(d))
    return 0


def cmd_series(args):
    d = load_domain(args.domain)
    p = _vec(args.point)
    v = eval_series(d, p)
    _emit(args, {"point": enc_point(p), "value": enc_rat(v)}, [f"F{_pt(p)} = {L.fmt_rat(v)}"])
    return 0


def cmd_age(args):
    d = load_domain(args.domain)
    a = age(d)
    _emit(args, {"age": enc_rat(a)}, [f"age          {enc_rat(a)}"])
    return 0


def cmd_toric(args):
    from .toric import canonical_evolution_check, canonical_pairing, dual_fan, symplectic_area
    d = load_domain(args.domain)
    c = _class(args.cls)
    window = args.window.split(",")
    if len(window) != 2:
        raise InputError(f"window looks like 't0,t1', got {args.window!r}")
    t0, t1 = (L.rat(x) for x in window)
    ok = canonical_evolution_check(d, c, t0, t1)
    a0 = symplectic_area(c, propagate(d, t0))
    a1 = symplectic_area(c, propagate(d, t1))
    k = canonical_pairing(c)
    slope = (a1 - a0) / (t1 - t0)
    fan = dual_fan(propagate(d, t0))
    obj = {"fan": [enc_vec(r) for r in fan.rays], "area0": enc_rat(a0), "area1": enc_rat(a1),
           "slope": enc_rat(slope), "canonicalPairing": k, "agrees": ok}
    _emit(args, obj, [
        "fan          " + " ".join(str(r) for r in fan.rays),
        f"area({L.fmt_rat(t0)})    {L.fmt_rat(a0)}",
        f"area({L.fmt_rat(t1)})    {L.fmt_rat(a1)}",
        f"slope        {L.fmt_rat(slope)}",
        f"K.c          {k}",
        f"agrees       {ok}",
    ])
    return 0 if ok else 1


def cmd_verify(args):
    if args.domain:
        reports = [verify_domain(load_domain(args.domain), seed=args.seed, label=args.domain)]
    elif args.suite == "random":
        reports = random_suite(args.count, args.seed)
    else:
        raise InputError("give a domain file or --suite random")
    passed = sum(r.ok for r in reports)
    obj = {"passed": passed, "total": len(reports),
           "reports": [{"label": r.label, "ok": r.ok, "finalTime": enc_rat(r.final_time),
                        "checks": [{"name": c.name, "ok": c.ok, "detail": c.detail}
                                   for c in r.checks]} for r in reports]}
    lines = []
    for r in reports:
        if len(reports) == 1 or not r.ok:
            lines.append(f"{r.label}: final time {enc_rat(r.final_time)}")
            for c in r.checks:
                lines.append(f"  {'ok  ' if c.ok else 'FAIL'} {c.name:16s} {c.detail}")
    lines.append(f"{passed}/{len(reports)} pass")
    _emit(args, obj, lines)
    return 0 if passed == len(reports) else 1


def _write(path, text):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def cmd_render(args):
    if args.stars:
        os.makedirs(args.stars, exist_ok=True)
        names = []
        for i, poly in enumerate(reflexive_polygons(), 1):
            name = os.path.join(args.stars, f"star_{i:02d}.svg")
            _write(name, render_star(poly))
            names.append(name)
        _emit(args, {"files": names}, names)
        return 0
    if not args.domain:
        raise InputError("give a domain file or --stars DIR")
    d = load_domain(args.domain)
    times = tuple(L.rat(t) for t in args.fronts.split(",")) if args.fronts else ()
    text = render(d, RenderSpec(front_times=times))
    if args.svg:
        _write(args.svg, text)
    else:
        sys.stdout.write(text)
    return 0


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--svg", metavar="PATH", help="also write an SVG drawing")

    p = argparse.ArgumentParser(prog="tropicaust", parents=[common],
                                description="Exact tropical wave fronts, caustics and angles.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("angle", parents=[common], help="invariants of a tropical angle")
    s.add_argument("--legs", required=True, help='"a,b;c,d"')
    s.add_argument("--apex")
    s.set_defaults(fn=cmd_angle)

    s = sub.add_parser("contfrac", parents=[common], help="continued fractions of a cotangent")
    s.add_argument("value")
    s.add_argument("--hj", action="store_true")
    s.add_argument("--angle", action="store_true")
    s.set_defaults(fn=cmd_contfrac)

    s = sub.add_parser("evolve", parents=[common], help="front at a given time")
    s.add_argument("domain")
    s.add_argument("--time", required=True)
    s.set_defaults(fn=cmd_evolve)

    for name, fn, text in (("trace", cmd_trace, "full event history"),
                           ("caustic", cmd_caustic, "weighted caustic curve"),
                           ("age", cmd_age, "backward evolution bound")):
        s = sub.add_parser(name, parents=[common], help=text)
        s.add_argument("domain")
        s.set_defaults(fn=fn)

    s = sub.add_parser("series", parents=[common], help="arrival time at a point")
    s.add_argument("domain")
    s.add_argument("--point", required=True)
    s.set_defaults(fn=cmd_series)

    s = sub.add_parser("toric", parents=[common], help="area of a class along the evolution")
    s.add_argument("domain")
    s.add_argument("--class", dest="cls", required=True, help='"a,b:k;c,d:m"')
    s.add_argument("--window", required=True, help="t0,t1")
    s.set_defaults(fn=cmd_toric)

    s = sub.add_parser("verify", parents=[common], help="run the invariant suites")
    s.add_argument("domain", nargs="?")
    s.add_argument("--suite", choices=["random"])
    s.add_argument("--count", type=int, default=100)
    s.set_defaults(fn=cmd_verify)

    s = sub.add_parser("render", parents=[common], help="draw a domain or the reflexive stars")
    s.add_argument("domain", nargs="?")
    s.add_argument("--fronts", help="comma-separated times")
    s.add_argument("--stars", metavar="DIR")
    s.set_defaults(fn=cmd_render)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except InputError as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return 2
    except (AssertionError, ZeroDivisionError) as exc:
        print(json.dumps({"error": "InternalCheckFailed", "message": str(exc)}), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
