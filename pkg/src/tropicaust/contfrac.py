"""Regular and Hirzebruch-Jung continued fractions of tropical angles."""
from __future__ import annotations

from fractions import Fraction
from math import ceil, floor

from . import lattice as L
from .errors import InputError, RightAngleExcluded
from .trig import Angle, cone_caustic, cotangent


class OutOfRange(InputError):
    pass


def _check_unit(q) -> Fraction:
    q = Fraction(q)
    if not 0 < q < 1:
        raise OutOfRange(f"{q} is not in (0, 1)")
    return q


def regular_cf(q):
    """Floor expansion of q in (0,1), normalized to odd length."""
    x = _check_unit(q)
    out = []
    while x:
        y = 1 / x
        a = floor(y)
        out.append(a)
        x = y - a
    if len(out) % 2 == 0:
        out[-1:] = [out[-1] - 1, 1]
    return out


def hj_cf(q):
    """Ceiling expansion q = 1/(i1 - 1/(i2 - ...))."""
    x = _check_unit(q)
    out = []
    while x:
        y = 1 / x
        a = ceil(y)
        out.append(a)
        x = a - y
    return out


def eval_regular(seq) -> Fraction:
    x = Fraction(0)
    for a in reversed(seq):
        x = 1 / (a + x)
    return x


def eval_hj(seq) -> Fraction:
    x = Fraction(0)
    for a in reversed(seq):
        x = 1 / (a - x)
    return x


def regular_to_hj(seq):
    out = []
    for k, a in enumerate(seq):
        if k % 2 == 0:
            out.extend([2] * (a - 1))
        else:
            out.append(a + 2)
    return out


def _mul(a, b):
    return ((a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]),
            (a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]))


def matrix_recursion(alpha):
    """Stages (U_n, q_n, p_n) plus the final hull vertex of slope alpha.

    q_n and p_n are the columns of U_n.  The last hull vertex is
    w_k * q_{k-1} + p_{k-1}; it is returned separately because the final
    denominator has no partner s_k.
    """
    seq = regular_cf(alpha)
    u = ((1, 0), (0, 1))
    stages = [(u, (1, 0), (0, 1))]
    for w, s in zip(seq[0::2], seq[1::2]):
        u = _mul(_mul(u, ((w, 1), (1, 0))), ((s, 1), (1, 0)))
        stages.append((u, (u[0][0], u[1][0]), (u[0][1], u[1][1])))
    _, q, p = stages[-1]
    last = L.add(L.scale(seq[-1], q), p)
    return stages, last


def angle_with_cotangent(c) -> Angle:
    """The angle spanned by (0,-1) then (n, m), whose cotangent is m/n."""
    from .trig import cone
    c = Fraction(c) % 1
    return cone((0, -1), (c.denominator, c.numerator))


def cf_from_angle(a: Angle):
    """Interleave caustic weights and front gradients; returns (cf, weights, gradients)."""
    from .wavefront import cone_domain, front_gradients

    c = cotangent(a)
    if c == 0:
        raise RightAngleExcluded("the right angle has no continued fraction")
    weights = [w for _, w in cone_caustic(a)]
    # front edges are listed from the leg2 side; flip to read from leg1
    gradients = front_gradients(cone_domain(a), 1)[::-1]
    if a.swapped:
        weights.reverse()
        gradients.reverse()
    seq = []
    for i, w in enumerate(weights):
        seq.append(w)
        if i < len(gradients):
            seq.append(gradients[i])
    assert len(gradients) == len(weights) - 1
    assert seq == regular_cf(c), (seq, c)
    return seq, weights, gradients


def minimal_resolution(a: Angle):
    """Self-intersections [-i_1, ...] of the resolution chain, read from R1."""
    if cotangent(a) == 0:
        raise RightAngleExcluded("the right angle needs no resolution")
    r1, r2 = a.given_legs
    start, stop = L.neg(r1), r2
    flip = L.wedge(start, stop) < 0
    if flip:
        start, stop = stop, start
    # z-recursion z_{k+1} = i_k z_k - z_{k-1} along the boundary of the hull
    prev, cur = L.neg(L.complete_basis(start)), start
    chain = []
    while L.wedge(cur, stop) != 0:
        i = -(-L.wedge(prev, stop) // L.wedge(cur, stop))
        prev, cur = cur, L.sub(L.scale(i, cur), prev)
        assert L.wedge(prev, cur) == 1
        chain.append(i)
    assert cur == stop
    chain = chain[1:]  # the first step leaves the fake predecessor
    if flip:
        chain.reverse()
    assert all(i >= 2 for i in chain)
    return [-i for i in chain]
