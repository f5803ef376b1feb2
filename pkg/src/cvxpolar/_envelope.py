"""Upper envelopes of finite line families, restricted to [0, cap].

Works on plain (slope, intercept) pairs and breakpoint tuples so that both
the piecewise-linear lattice and the transforms can share it without
import cycles.  All arithmetic stays in the caller's scalar type (Fraction
or float), so envelopes of rational lines are exact.
"""

from __future__ import annotations

from .scalars import INF, Num, is_inf


def dominant_lines(lines):
    """Lines forming the upper envelope over all of R, left to right.

    Input: iterable of (slope, intercept).  Output: the subsequence that is
    maximal somewhere, sorted by slope, without duplicates.
    """
    cand = sorted(set(lines))
    # equal slopes: keep the largest intercept only
    dedup = []
    for s, b in cand:
        if dedup and dedup[-1][0] == s:
            dedup[-1] = (s, b)
        else:
            dedup.append((s, b))
    hull = []
    for ln in dedup:
        while len(hull) >= 2 and _useless(hull[-2], hull[-1], ln):
            hull.pop()
        hull.append(ln)
    # a middle line kept by the loop above may still be dominated at -inf
    # only when slopes tie, which dedup already removed
    return hull

def _useless(a, b, c):
    # b never strictly above both a and c:  cross(a,b) >= cross(b,c)
    # (b.s - a.s)(c.b - b.b) >= (c.s - b.s)(b.b - a.b)
    return (b[0] - a[0]) * (c[1] - b[1]) >= (c[0] - b[0]) * (b[1] - a[1])


def envelope_on_ray(lines, cap: Num):
    """Upper envelope of ``lines`` on [0, cap] as canonical breakpoints.

    Every caller guarantees max intercept == 0, so the envelope starts at
    (0, 0).  Returns (breakpoints, tail) where tail is the final slope when
    cap is infinite and INF (value jumps to +inf beyond the last breakpoint)
    when cap is finite.
    """
    hull = dominant_lines(lines)
    if not hull:
        raise ValueError("empty line family")

    # crossing abscissae between consecutive hull lines
    crossings = []
    for (s0, b0), (s1, b1) in zip(hull, hull[1:]):
        crossings.append((b0 - b1) / (s1 - s0))

    # active line at x = 0+ : last crossing at or below 0
    start = 0
    for i, x in enumerate(crossings):
        if x <= 0:
            start = i + 1

    zero = hull[start][1] * 0  # zero in the caller's scalar type
    assert hull[start][1] == zero, "envelope must vanish at the origin"

    bps = [(zero, zero)]
    for i in range(start, len(hull) - 1):
        x = crossings[i]
        if not is_inf(cap) and x >= cap:
            break
        if x > 0:
            s, b = hull[i + 1]
            bps.append((x, s * x + b))

    if is_inf(cap):
        return tuple(bps), hull[-1][0]

    # finite cap: close the domain with the envelope value at cap
    idx = start
    for i in range(start, len(hull) - 1):
        if crossings[i] < cap:
            idx = i + 1
    sc, bc = hull[idx]
    vcap = sc * cap + bc
    if not bps or bps[-1][0] != cap:
        bps.append((cap, vcap))
    return tuple(bps), INF
