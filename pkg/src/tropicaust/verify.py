"""Invariant suites run by ``tropicaust verify`` and the property tests."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import lattice as L
from .caustic import (NotPointFinal, caustic_of, eval_series, final_edge_endpoint_type,
                      final_star_type, noether_audit, twelve_sum, validate_balancing)
from .domain import INF, ConvexDomain, Empty, Locus, interior_hull
from .errors import InputError
from .randomgen import any_domain, lattice_polygon, rng_for
from .wavefront import propagate, propagate_direct, simulate


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class Report:
    label: str
    checks: list = field(default_factory=list)
    final_time: object = None

    @property
    def ok(self):
        return all(c.ok for c in self.checks)

    def add(self, name, ok, detail=""):
        self.checks.append(Check(name, bool(ok), detail))


def _is_lattice(d):
    return d.kind == "bounded" and all(c.denominator == 1 for p in d.vertices for c in p)


def sample_times(rng, tf, n, cap=8):
    hi = cap if tf == INF else tf
    out = []
    for _ in range(n):
        q = rng.randint(1, 7)
        out.append(Fraction(rng.randint(0, int(hi * q) + 1), q))
    return out


def check_noether(rep, tr):
    a = noether_audit(tr)
    rep.add("noether", a.residual == 0,
            f"{a.l_caustic}+{a.l_boundary} vs 12*{a.t_final}+4*{a.l_final}")


def check_huygens(rep, d, rng, n=3):
    tf = simulate(d).final_time
    for t in sample_times(rng, tf, n):
        s = Fraction(rng.randint(0, 12), rng.randint(1, 4))
        lhs = propagate(propagate(d, t), s)
        ok = lhs == propagate(d, t + s)
        rep.add("huygens", ok, f"t={t} s={s}")


def check_lattice_oracle(rep, d):
    cur, k = d, 1
    while True:
        cur = interior_hull(cur)
        p = propagate(d, k)
        if p != cur:
            rep.add("lattice-oracle", False, f"t={k}")
            return
        if isinstance(cur, Empty):
            break
        k += 1
    rep.add("lattice-oracle", True, f"{k} steps")


def check_balancing(rep, tr):
    ok, bad = validate_balancing(caustic_of(tr))
    rep.add("balancing", ok, "" if ok else f"unbalanced at {sorted(bad)}")


def check_collisions(rep, tr):
    for e in tr.events:
        incoming = [tr.particle(i) for i in e.incoming]
        if e.final:
            continue
        ws = sorted(p.weight for p in incoming)
        out = tr.particle(e.outcome)
        mom = (0, 0)
        for p in incoming:
            mom = L.add(mom, L.scale(p.weight, p.velocity))
        ok = (len(ws) == 2 and ws[0] == 1 and out.weight == 1
              and mom == L.scale(out.weight, out.velocity))
        if not ok:
            rep.add("collision", False, f"t={e.time} weights={ws}")
            return
    rep.add("collision", True, f"{sum(not e.final for e in tr.events)} interim events")


def check_final(rep, tr):
    loc = tr.final_locus
    if not isinstance(loc, Locus):
        return
    try:
        if loc.kind == "point":
            rep.add("final-star", True, str(final_star_type(tr).normal_form))
        else:
            tags = [tag for _, tag in final_edge_endpoint_type(tr)]
            rep.add("final-endpoints", True, ",".join(tags) or loc.kind)
    except (InputError, NotPointFinal) as exc:
        rep.add("final-star", False, str(exc))


def check_twelve(rep, d, rng, n=2):
    tr = simulate(d)
    if d.kind != "bounded":
        return
    for _ in range(n):
        t = tr.final_time * Fraction(rng.randint(1, 99), 100)
        f = propagate(d, t)
        total = twelve_sum(f).total
        rep.add("twelve", total == 12, f"t={t} sum={total}")


def check_series(rep, d, rng, n=3):
    tr = simulate(d)
    for p in tr.particles:
        end = p.death_time if p.death_time is not None else p.birth_time + 5
        if end == p.birth_time:
            continue
        t = p.birth_time + (end - p.birth_time) * Fraction(rng.randint(0, 15), 16)
        if eval_series(d, p.position(t)) != t:
            rep.add("series", False, f"particle {p.id} at t={t}")
            return
    for t in sample_times(rng, tr.final_time, n):
        f = propagate(d, t)
        if isinstance(f, ConvexDomain):
            if any(eval_series(d, v) != t for v in f.vertices):
                rep.add("series", False, f"front vertices at t={t}")
                return
    rep.add("series", True)


def check_direct(rep, d, rng, n=3):
    tf = simulate(d).final_time
    for t in sample_times(rng, tf, n):
        if propagate(d, t) != propagate_direct(d, t):
            rep.add("direct-oracle", False, f"t={t}")
            return
    rep.add("direct-oracle", True)


def verify_domain(d, seed=0, label="domain") -> Report:
    rng = rng_for(seed)
    tr = simulate(d)
    rep = Report(label, final_time=tr.final_time)
    steps = [("balancing", check_balancing, (tr,)),
             ("collision", check_collisions, (tr,)),
             ("final-star", check_final, (tr,)),
             ("huygens", check_huygens, (d, rng)),
             ("twelve", check_twelve, (d, rng)),
             ("series", check_series, (d, rng)),
             ("direct-oracle", check_direct, (d, rng))]
    if _is_lattice(d):
        steps.insert(0, ("lattice-oracle", check_lattice_oracle, (d,)))
    if d.kind == "bounded":
        steps.insert(0, ("noether", check_noether, (tr,)))
    for name, fn, args in steps:
        try:
            fn(rep, *args)
        except (InputError, AssertionError) as exc:
            rep.add(name, False, f"{type(exc).__name__}: {exc}")
    return rep


def random_suite(count, seed, lattice_only=False):
    rng = rng_for(seed)
    reports = []
    for i in range(count):
        d = lattice_polygon(rng) if lattice_only else any_domain(rng)
        reports.append(verify_domain(d, seed=seed * 100003 + i, label=f"case {i}"))
    return reports
