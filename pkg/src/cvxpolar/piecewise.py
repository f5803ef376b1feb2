"""Canonical piecewise-linear convex functions on the ray.

The class represented here: convex, lower-semicontinuous, nonnegative
functions on [0, inf) vanishing at 0.  A function is stored as its ordered
breakpoints plus a tail: a finite tail slope means the last segment extends
linearly forever; an infinite tail means the value jumps to +inf strictly
beyond the last breakpoint (the breakpoint keeps its finite value, which is
the lower-semicontinuous closure).

Canonical form is unique: no collinear interior breakpoints, strictly
increasing segment slopes, so two functions are pointwise equal exactly when
their records compare equal.
"""

from __future__ import annotations

import math
import warnings
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import _envelope
from .scalars import FLOAT, INF, RATIONAL, Num, as_mode, infer_mode, is_inf, join_modes


class ConvexityError(ValueError):
    """Raised when breakpoints describe a non-convex function."""


class DegenerateTailWarning(UserWarning):
    """A constant (slope-0) tail: the polar collapses to the indicator of {0}."""


# float-mode slack when deciding whether two slopes are "the same line"
_SLOPE_RTOL = 1e-12


@dataclass(frozen=True)
class PLFunction:
    breakpoints: tuple
    tail: Num  # slope beyond the last breakpoint; INF means the value jumps to +inf
    mode: str

    def __post_init__(self):
        bps = self.breakpoints
        if not bps or bps[0][0] != 0 or bps[0][1] != 0:
            raise ValueError("first breakpoint must be (0, 0)")
        for (x0, v0), (x1, v1) in zip(bps, bps[1:]):
            if not x1 > x0:
                raise ValueError("breakpoint abscissae must increase strictly")
        for x, v in bps:
            if v < 0 or is_inf(v):
                raise ValueError("breakpoint values must be finite and >= 0")
        if not is_inf(self.tail) and self.tail < 0:
            raise ValueError("tail slope must be >= 0")

    # -- evaluation ------------------------------------------------------

    def __call__(self, x: Num) -> Num:
        if x < 0:
            raise ValueError("argument must be >= 0")
        bps = self.breakpoints
        xm, vm = bps[-1]
        if x > xm:
            if is_inf(self.tail):
                return INF
            return vm + self.tail * (x - xm)
        i = bisect_right([b[0] for b in bps], x) - 1
        x0, v0 = bps[i]
        if x == x0:
            return v0
        x1, v1 = bps[i + 1]
        return v0 + (v1 - v0) * (x - x0) / (x1 - x0)

    def sample(self, xs: np.ndarray) -> np.ndarray:
        """Vectorized float evaluation; +inf beyond a bounded domain."""
        bx = np.array([float(x) for x, _ in self.breakpoints])
        bv = np.array([float(v) for _, v in self.breakpoints])
        xs = np.asarray(xs, dtype=float)
        out = np.interp(xs, bx, bv)
        beyond = xs > bx[-1]
        if is_inf(self.tail):
            out[beyond] = np.inf
        else:
            out[beyond] = bv[-1] + float(self.tail) * (xs[beyond] - bx[-1])
        return out

    # -- derived attributes ---------------------------------------------

    @property
    def zero_radius(self) -> Num:
        """Largest x with value 0 (INF for the zero function)."""
        if self.is_zero_function:
            return INF
        z = _zero(self.mode)
        for x, v in self.breakpoints:
            if v == 0:
                z = x
        return z

    @property
    def domain_end(self) -> Num:
        """Supremum of the effective domain."""
        return self.breakpoints[-1][0] if is_inf(self.tail) else INF

    @property
    def is_zero_function(self) -> bool:
        return self.tail == 0 and all(v == 0 for _, v in self.breakpoints)

    def segments(self):
        """Yield (x0, x1, value_at_x0, slope) for every finite linear piece.

        The tail appears with x1 = INF when its slope is finite.
        """
        bps = self.breakpoints
        for (x0, v0), (x1, v1) in zip(bps, bps[1:]):
            yield x0, x1, v0, (v1 - v0) / (x1 - x0)
        if not is_inf(self.tail):
            xm, vm = bps[-1]
            yield xm, INF, vm, self.tail

    def as_mode(self, mode: str) -> "PLFunction":
        if mode == self.mode:
            return self
        bps = tuple((as_mode(x, mode), as_mode(v, mode)) for x, v in self.breakpoints)
        return canonicalize_raw(bps, as_mode(self.tail, mode), mode)


def _zero(mode: str) -> Num:
    return Fraction(0) if mode == RATIONAL else 0.0


# -- constructors ---------------------------------------------------------


def line(beta: Num, mode: str | None = None) -> PLFunction:
    """The linear function x -> beta * x, beta > 0."""
    if beta <= 0:
        raise ValueError("slope must be positive")
    mode = mode or infer_mode(beta)
    z = _zero(mode)
    return PLFunction(((z, z),), as_mode(beta, mode), mode)


def indicator(a: Num, mode: str | None = None) -> PLFunction:
    """0 on [0, a], +inf beyond (the convex indicator of the interval)."""
    if a < 0:
        raise ValueError("interval endpoint must be >= 0")
    mode = mode or infer_mode(a)
    z = _zero(mode)
    if a == 0:
        return PLFunction(((z, z),), INF, mode)
    return PLFunction(((z, z), (as_mode(a, mode), z)), INF, mode)


# -- canonicalization ------------------------------------------------------


def canonicalize_raw(breakpoints, tail: Num, mode: str) -> PLFunction:
    """Canonical function from raw breakpoints (weak convexity allowed).

    Merges collinear interior breakpoints, absorbs a final breakpoint that
    continues a finite tail, and rejects strictly decreasing slope pairs.
    """
    bps = [(as_mode(x, mode), as_mode(v, mode)) for x, v in breakpoints]
    if not bps or bps[0][0] != 0:
        raise ValueError("first breakpoint must be at x = 0")

    slopes = []
    for (x0, v0), (x1, v1) in zip(bps, bps[1:]):
        if x1 <= x0:
            raise ValueError("breakpoint abscissae must increase strictly")
        slopes.append((v1 - v0) / (x1 - x0))
    slopes.append(tail)

    kept = [bps[0]]
    for i in range(1, len(bps)):
        s_in, s_out = slopes[i - 1], slopes[i]
        if _slope_lt(s_out, s_in, mode):
            raise ConvexityError(
                f"slope decreases across breakpoint x={bps[i][0]}: {s_in} -> {s_out}"
            )
        if _slope_eq(s_in, s_out, mode) and not is_inf(s_in):
            continue  # collinear: interior point, or a last point absorbed by the tail
        kept.append(bps[i])

    if tail == 0:
        warnings.warn(
            "constant tail: the polar degenerates to the indicator of {0}",
            DegenerateTailWarning,
            stacklevel=2,
        )
    out = PLFunction(tuple(kept), as_mode(tail, mode), mode)
    if any(v < 0 for _, v in out.breakpoints):
        raise ConvexityError("negative values")
    return out


def canonicalize(f: PLFunction) -> PLFunction:
    return canonicalize_raw(f.breakpoints, f.tail, f.mode)


def _slope_eq(a: Num, b: Num, mode: str) -> bool:
    if is_inf(a) or is_inf(b):
        return is_inf(a) and is_inf(b)
    if mode == RATIONAL:
        return a == b
    scale = max(abs(a), abs(b), 1.0)
    return abs(a - b) <= _SLOPE_RTOL * scale

def _slope_lt(a: Num, b: Num, mode: str) -> bool:
    if _slope_eq(a, b, mode):
        return False
    if is_inf(b):
        return not is_inf(a)
    if is_inf(a):
        return False
    return a < b


# -- lattice operations ----------------------------------------------------


def join(f: PLFunction, g: PLFunction) -> PLFunction:
    """Pointwise maximum (the lattice supremum; it is already convex)."""
    mode = join_modes(f.mode, g.mode)
    f, g = f.as_mode(mode), g.as_mode(mode)

    end = min(f.domain_end, g.domain_end)
    xs = sorted({x for x, _ in f.breakpoints} | {x for x, _ in g.breakpoints})
    xs = [x for x in xs if x <= end]
    if not is_inf(end) and xs[-1] != end:
        xs.append(end)

    pts = []
    for x0, x1 in zip(xs, xs[1:]):
        pts.append((x0, max(f(x0), g(x0))))
        _append_crossing(pts, f, g, x0, x1)
    pts.append((xs[-1], max(f(xs[-1]), g(xs[-1]))))

    if is_inf(end):
        xm = xs[-1]
        sf, sg = f.tail, g.tail
        vf, vg = f(xm), g(xm)
        # the two tails may cross once beyond the last shared breakpoint
        if sf != sg:
            lo, hi = ((vf, sf), (vg, sg)) if sf < sg else ((vg, sg), (vf, sf))
            if lo[0] > hi[0]:
                xc = xm + (lo[0] - hi[0]) / (hi[1] - lo[1])
                pts.append((xc, lo[0] + lo[1] * (xc - xm)))
        tail = max(sf, sg)
    else:
        tail = INF
    return canonicalize_raw(pts, tail, mode)


def _append_crossing(pts, f, g, x0, x1):
    d0 = f(x0) - g(x0)
    d1 = f(x1) - g(x1)
    if (d0 > 0 > d1) or (d0 < 0 < d1):
        sf = (f(x1) - f(x0)) / (x1 - x0)
        sg = (g(x1) - g(x0)) / (x1 - x0)
        xc = x0 - d0 / (sf - sg)
        if x0 < xc < x1:
            pts.append((xc, f(xc)))


def conjugate(f: PLFunction) -> PLFunction:
    """Exact convex conjugate sup_y (x*y - f(y)) restricted to the ray.

    Each breakpoint (y, v) contributes the line x -> x*y - v; the effective
    domain of the conjugate is [0, tail slope].
    """
    lines = [(x, -v) for x, v in f.breakpoints]
    bps, tail = _envelope.envelope_on_ray(lines, f.tail)
    return canonicalize_raw(bps, tail, f.mode)


def meet(f: PLFunction, g: PLFunction) -> PLFunction:
    """Lattice infimum: the greatest convex lsc minorant of min(f, g).

    Computed through conjugacy: the minorant's conjugate is the pointwise
    maximum of the two conjugates, and biconjugation closes the hull.
    """
    mode = join_modes(f.mode, g.mode)
    return conjugate(join(conjugate(f.as_mode(mode)), conjugate(g.as_mode(mode))))


# -- exact comparison -------------------------------------------------------

EQUAL = "equal"
LESS_OR_EQUAL = "le"
GREATER_OR_EQUAL = "ge"
INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class Comparison:
    relation: str
    sup_gap: Num          # sup |f - g|; INF when domains or tail slopes differ
    witness: Num | None   # abscissa attaining (or certifying) the gap
    above: Num | None     # some x with f(x) > g(x), if any
    below: Num | None     # some x with f(x) < g(x), if any


def compare(f: PLFunction, g: PLFunction, tol: Num | None = None) -> Comparison:
    """Exact order relation between two canonical functions.

    Both functions are linear between consecutive merged breakpoints, so
    endpoint evaluation decides each piece.  In float mode, ``tol`` (default
    1e-12, absolute) treats near-ties as equal.
    """
    mode = join_modes(f.mode, g.mode)
    f, g = f.as_mode(mode), g.as_mode(mode)
    if tol is None:
        tol = 0 if mode == RATIONAL else 1e-12

    if f == g:
        return Comparison(EQUAL, _zero(mode), None, None, None)

    end = min(f.domain_end, g.domain_end)
    xs = sorted({x for x, _ in f.breakpoints} | {x for x, _ in g.breakpoints})
    xs = [x for x in xs if x <= end]
    if not is_inf(end) and end not in xs:
        xs.append(end)

    above = below = None
    gap, witness = _zero(mode), None
    for x in xs:
        d = f(x) - g(x)
        if d > tol and above is None:
            above = x
        if d < -tol and below is None:
            below = x
        if abs(d) > gap:
            gap, witness = abs(d), x

    # domains of different extent: the shorter one is +inf on the difference
    if f.domain_end != g.domain_end:
        e0 = min(f.domain_end, g.domain_end)
        probe = e0 + 1 if is_inf(max(f.domain_end, g.domain_end)) else (e0 + max(f.domain_end, g.domain_end)) / 2
        gap, witness = INF, probe
        if f.domain_end < g.domain_end and above is None:
            above = probe
        if g.domain_end < f.domain_end and below is None:
            below = probe
    elif is_inf(end):
        # both unbounded: beyond the last merged breakpoint the difference is affine
        xm = xs[-1]
        d0, ds = f(xm) - g(xm), f.tail - g.tail
        if ds != 0:
            gap, witness = INF, None
            probe = xm + (abs(d0) / abs(ds) if ds != 0 else 0) + 1
            d = f(probe) - g(probe)
            if d > tol:
                above = above if above is not None else probe
                witness = probe
            elif d < -tol:
                below = below if below is not None else probe
                witness = probe

    if above is None and below is None:
        return Comparison(EQUAL, gap, witness, None, None)
    if below is None:
        return Comparison(GREATER_OR_EQUAL, gap, witness, above, None)
    if above is None:
        return Comparison(LESS_OR_EQUAL, gap, witness, None, below)
    return Comparison(INCOMPARABLE, gap, witness, above, below)
