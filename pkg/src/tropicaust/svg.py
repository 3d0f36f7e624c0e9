"""Deterministic SVG drawings of domains, fronts and caustics.

Coordinates are converted from exact rationals to decimals only here,
rounded half-even to TROPICAUST_PRECISION digits (default 6).  The y axis
is flipped so that pictures come out the usual way up.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction

from . import lattice as L
from .caustic import TropicalCurve, caustic_of, lattice_points_in
from .domain import ConvexDomain, Empty, Locus
from .errors import InputError
from .wavefront import propagate, simulate


class EmptyScene(InputError):
    pass


def precision():
    raw = os.environ.get("TROPICAUST_PRECISION", "6")
    try:
        digits = int(raw)
    except ValueError:
        raise InputError(f"TROPICAUST_PRECISION must be an integer, got {raw!r}") from None
    if not 0 <= digits <= 30:
        raise InputError("TROPICAUST_PRECISION must lie in 0..30")
    return digits


def num(x, digits):
    x = Fraction(x)
    with localcontext() as ctx:
        ctx.prec = 80
        d = (Decimal(x.numerator) / Decimal(x.denominator)).quantize(
            Decimal(1).scaleb(-digits), rounding=ROUND_HALF_EVEN)
    s = format(d, "f")
    if "." in s:
        s = s.rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def stroke_width(weight):
    return 1 + Fraction(3, 5) * (weight - 1)


@dataclass(frozen=True)
class RenderSpec:
    margin: Fraction = Fraction(1)
    scale: int = 40  # pixels per lattice unit
    ray_length: Fraction = Fraction(4)  # truncation, in lattice units along the primitive direction
    front_times: tuple = ()
    show_domain: bool = True
    show_caustic: bool = True
    show_labels: bool = True
    digits: int | None = None


@dataclass
class _Canvas:
    spec: RenderSpec
    items: list = field(default_factory=list)
    pts: list = field(default_factory=list)

    def seen(self, *pts):
        self.pts.extend(pts)

    def path(self, pts, closed=False, **attrs):
        self.seen(*pts)
        self.items.append(("path", list(pts), closed, attrs))

    def dot(self, p, r, **attrs):
        self.seen(p)
        self.items.append(("circle", p, r, attrs))

    def text(self, p, s, **attrs):
        self.seen(p)
        self.items.append(("text", p, s, attrs))


def _far(p, d, length):
    return (p[0] + length * d[0], p[1] + length * d[1])


def _outline(cv, d, dashed=False):
    style = {"stroke": "#1f3a93" if dashed else "#000000", "fill": "none", "stroke-width": 1}
    if dashed:
        style["stroke-dasharray"] = "4 3"
    rl = cv.spec.ray_length
    if isinstance(d, Empty):
        return
    if isinstance(d, Locus):
        _locus(cv, d, outline=style)
        return
    if d.kind == "bounded":
        if not dashed:
            cv.path(d.vertices, closed=True, stroke="none", fill="#eef2fb")
        cv.path(d.vertices, closed=True, **style)
    elif d.kind == "tworays":
        r_first, r_last = d.rays
        chain = [_far(d.vertices[0], r_first, rl), *d.vertices, _far(d.vertices[-1], r_last, rl)]
        cv.path(chain, **style)
    else:
        for lam, c in d.support:
            p0 = L.solve2(lam, c, L.ccw(lam), 0)
            u = L.cw(lam)
            cv.path([_far(p0, u, -rl), _far(p0, u, rl)], **style)


def _locus(cv, loc, outline=None):
    rl = cv.spec.ray_length
    if loc.kind == "point":
        cv.dot(loc.points[0], Fraction(4), fill="#000000")
        return
    if loc.kind == "segment":
        pts = list(loc.points)
    elif loc.kind == "ray":
        pts = [loc.points[0], _far(loc.points[0], loc.direction, rl)]
    else:
        pts = [_far(loc.points[0], loc.direction, -rl), _far(loc.points[0], loc.direction, rl)]
    if outline is not None:
        cv.path(pts, **outline)
        return
    # weight-2 final locus: a dark band with a light core
    cv.path(pts, stroke="#000000", fill="none", **{"stroke-width": stroke_width(2) + 2})
    cv.path(pts, stroke="#ffffff", fill="none", **{"stroke-width": stroke_width(2) - 1})


def _curve(cv, curve: TropicalCurve):
    rl = cv.spec.ray_length
    for e in curve.edges:
        if e.kind == "final":
            continue
        end = e.end if e.end is not None else _far(e.start, e.direction, rl)
        cv.path([e.start, end], stroke="#c0392b", fill="none",
                **{"stroke-width": stroke_width(e.weight), "stroke-linecap": "round"})
        if cv.spec.show_labels and e.weight > 1:
            mid = ((e.start[0] + end[0]) / 2, (e.start[1] + end[1]) / 2)
            cv.text(mid, str(e.weight), fill="#c0392b")


def _emit(cv):
    if not cv.pts:
        raise EmptyScene("nothing to draw")
    digits = cv.spec.digits if cv.spec.digits is not None else precision()
    s, m = cv.spec.scale, cv.spec.margin
    xs = [p[0] for p in cv.pts]
    ys = [p[1] for p in cv.pts]
    x0, x1 = min(xs) - m, max(xs) + m
    y0, y1 = min(ys) - m, max(ys) + m

    def X(x):
        return num(x * s, digits)

    def Y(y):
        return num(-y * s, digits)

    def attrs(a):
        return "".join(f' {k}="{num(v, digits) if isinstance(v, (int, Fraction)) else v}"'
                       for k, v in a.items())

    w, h = (x1 - x0) * s, (y1 - y0) * s
    out = ['<?xml version="1.0" encoding="UTF-8"?>',
           f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
           f'width="{num(w, digits)}" height="{num(h, digits)}" '
           f'viewBox="{X(x0)} {Y(y1)} {num(w, digits)} {num(h, digits)}">']
    for item in cv.items:
        kind = item[0]
        if kind == "path":
            _, pts, closed, a = item
            d = "M " + " L ".join(f"{X(p[0])} {Y(p[1])}" for p in pts) + (" Z" if closed else "")
            out.append(f'<path d="{d}"{attrs(a)}/>')
        elif kind == "circle":
            _, p, r, a = item
            out.append(f'<circle cx="{X(p[0])}" cy="{Y(p[1])}" r="{num(r, digits)}"{attrs(a)}/>')
        else:
            _, p, label, a = item
            out.append(f'<text x="{X(p[0])}" y="{Y(p[1])}" font-size="12"{attrs(a)}>{label}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render(d, spec: RenderSpec = RenderSpec()):
    """Domain, requested fronts and the caustic with its final locus."""
    cv = _Canvas(spec)
    if isinstance(d, Empty):
        raise EmptyScene("the empty domain has nothing to draw")
    if spec.show_domain:
        _outline(cv, d)
    for t in spec.front_times:
        _outline(cv, propagate(d, Fraction(t)), dashed=True)
    if spec.show_caustic and isinstance(d, ConvexDomain):
        tr = simulate(d)
        _curve(cv, caustic_of(tr))
        if isinstance(tr.final_locus, Locus):
            _locus(cv, tr.final_locus)
    return _emit(cv)


def render_star(poly, spec: RenderSpec = RenderSpec(margin=Fraction(1, 2), show_caustic=False)):
    """A reflexive polygon with its lattice points and the star of rays from the origin."""
    cv = _Canvas(spec)
    verts = [L.point(*p) for p in poly]
    if not verts:
        raise EmptyScene("no vertices")
    cv.path(verts, closed=True, stroke="#000000", fill="#eef2fb", **{"stroke-width": 1})
    origin = (Fraction(0), Fraction(0))
    for v in verts:
        cv.path([origin, v], stroke="#c0392b", fill="none", **{"stroke-width": 1})
    for p in lattice_points_in(poly):
        cv.dot(L.point(*p), Fraction(3), fill="#000000")
    return _emit(cv)
