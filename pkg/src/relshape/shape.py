"""Shape analysis of node-reliability polynomials on (0,1).

All structural decisions (how many inflection points, whether an interval is
one of decrease, whether a fixed point is a crossing) are made with exact
rational arithmetic: roots are isolated by Sturm sign-variation counts on the
square-free part and then narrowed by bisection, and interval signs come from
exact evaluation at interior rational points.  Floating point appears only in
the sparse-threshold optimizer, which is a plain one-dimensional search.

Classification vocabulary (assigned from the exact report, never from
samples):

* ``identity``: the polynomial is p itself (single-vertex graph).
* ``S``: increasing on (0,1) with exactly one crossing fixed point, below the
  identity before it and above after it.
* ``N``: value 1 at p=1 and exactly one maximal decrease interval, with
  increase on both sides.
* ``M``: exactly two maximal decrease intervals.
* ``monotone-no-interior-fixed-point``: increasing, no interior fixed point.
* ``other``: anything else.

Tangential (even-multiplicity) fixed points and stationary points are
reported but never counted as crossings or decrease boundaries.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .connsets import ConnSetProfile, count_connected_sets
from .graphs import Graph, is_two_connected
from .poly import (
    ReliabilityPoly,
    d_coefficients,
    derivative,
    eval_exact,
    from_profile,
    second_derivative,
)
from .sturm import (
    ZeroPolynomialError,
    count_roots_open,
    deflate_root,
    degree,
    sign_at,
    square_free_part,
    sturm_chain,
    to_primitive_int,
)

DEFAULT_TOL = Fraction(1, 10**9)

SPARSE_THRESHOLD_NUM = 851  # applicability cutoff m <= 0.0851 n^2, exact
SPARSE_THRESHOLD_DEN = 10**4
R_HAT = Fraction(1729474372, 10**9)  # rational stand-in for the optimizer's argmax


@dataclass(frozen=True)
class RootRecord:
    """One isolated real root: an exact bracketing interval of width < tol,
    a refined approximation, and whether the polynomial changes sign there
    (odd multiplicity)."""

    lo: Fraction
    hi: Fraction
    approx: Fraction
    sign_change: bool


@dataclass(frozen=True)
class Interval:
    """A maximal open interval of strict decrease.

    Boundary roots are carried when the boundary is a stationary point; a
    None root means the interval runs to the domain endpoint (only possible
    at 1, and only for disconnected graphs)."""

    lo: Fraction
    hi: Fraction
    lo_root: RootRecord | None
    hi_root: RootRecord | None


def isolate_roots(coeffs, lo=Fraction(0), hi=Fraction(1),
                  tol: Fraction = DEFAULT_TOL) -> list[RootRecord]:
    """Isolate the distinct real roots in the open interval (lo, hi).

    The square-free part is Sturm-counted and bisected until each interval
    holds one root, then narrowed below ``tol``.  Roots at the interval
    endpoints are excluded.  Raises ZeroPolynomialError for the identically
    zero polynomial.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    tol = Fraction(tol)
    p_int = to_primitive_int(list(coeffs))
    if not p_int:
        raise ZeroPolynomialError("cannot isolate roots of the zero polynomial")
    if degree(p_int) == 0:
        return []
    q = square_free_part(p_int)
    while q and sign_at(q, lo) == 0:
        q = deflate_root(q, lo)
    while q and sign_at(q, hi) == 0:
        q = deflate_root(q, hi)
    if degree(q) < 1:
        return []
    chain = sturm_chain(q)
    # when the original polynomial vanishes at a domain endpoint (those roots
    # were deflated from q) pull the endpoint inward across a root-free gap,
    # so no bracket can touch a zero of the original
    if sign_at(p_int, lo) == 0:
        lo = _pull_inward(chain, q, lo, hi, from_left=True)
    if sign_at(p_int, hi) == 0:
        hi = _pull_inward(chain, q, lo, hi, from_left=False)
    total = count_roots_open(chain, lo, hi)
    records: list[RootRecord] = []
    stack = [(lo, hi, total)]
    while stack:
        a, b, count = stack.pop()
        if count == 0:
            continue
        if count == 1:
            records.append(_refine(q, p_int, a, b, tol))
            continue
        mid = _interior_nonroot(q, a, b)
        left = count_roots_open(chain, a, mid)
        stack.append((a, mid, left))
        stack.append((mid, b, count - left))
    records.sort(key=lambda r: r.lo)
    return records


def _pull_inward(chain, q, lo: Fraction, hi: Fraction, from_left: bool) -> Fraction:
    """A replacement endpoint strictly inside (lo, hi) with no root of q
    between it and the endpoint it replaces (roots are isolated away from a
    non-vanishing endpoint, so halving the step always terminates)."""
    step = (hi - lo) / 4
    while True:
        cand = lo + step if from_left else hi - step
        if sign_at(q, cand) != 0:
            skipped = (count_roots_open(chain, lo, cand) if from_left
                       else count_roots_open(chain, cand, hi))
            if skipped == 0:
                return cand
        step /= 2


def _interior_nonroot(q, a: Fraction, b: Fraction) -> Fraction:
    """An interior point that is not a root of q (at most deg(q) interior
    points can be roots, so some candidate always survives)."""
    mid = (a + b) / 2
    if sign_at(q, mid) != 0:
        return mid
    parts = degree(q) + 2
    for i in range(1, parts):
        cand = a + (b - a) * Fraction(i, parts)
        if sign_at(q, cand) != 0:
            return cand
    raise AssertionError("no interior non-root found")


def _refine(q, p_int, a: Fraction, b: Fraction, tol: Fraction) -> RootRecord:
    # exactly one (simple) root of q lies in (a, b), so the signs bracket
    sa = sign_at(q, a)
    while b - a >= tol:
        mid = (a + b) / 2
        sm = sign_at(q, mid)
        if sm == 0:
            # landed exactly on the root; shrink a symmetric bracket
            delta = min(mid - a, b - mid, tol) / 2
            a, b = mid - delta, mid + delta
            return RootRecord(a, b, mid, _changes_sign(p_int, a, b))
        if sm == sa:
            a = mid
        else:
            b = mid
    return RootRecord(a, b, (a + b) / 2, _changes_sign(p_int, a, b))


def _changes_sign(p_int, a: Fraction, b: Fraction) -> bool:
    return sign_at(p_int, a) * sign_at(p_int, b) < 0


@dataclass(frozen=True)
class ShapeReport:
    n: int
    connected: bool
    deriv_at_0: int
    deriv_at_1: int
    decrease_intervals: tuple[Interval, ...]
    critical_points: tuple[RootRecord, ...]
    inflections: tuple[RootRecord, ...]
    fixed_points: tuple[RootRecord, ...]
    concave_down_near_0: bool
    concavity_near_1: int
    shape_class: str

    @property
    def crossing_fixed_points(self) -> tuple[RootRecord, ...]:
        return tuple(r for r in self.fixed_points if r.sign_change)

    @property
    def tangential_fixed_points(self) -> tuple[RootRecord, ...]:
        return tuple(r for r in self.fixed_points if not r.sign_change)


def analyze(g: Graph, tol: Fraction = DEFAULT_TOL) -> ShapeReport:
    return analyze_profile(count_connected_sets(g), tol)


def analyze_profile(profile: ConnSetProfile, tol: Fraction = DEFAULT_TOL) -> ShapeReport:
    """Full exact shape report for the reliability polynomial of a profile."""
    tol = Fraction(tol)
    n, c = profile.n, profile.c
    poly = from_profile(profile)
    deriv_at_0 = c[1]
    deriv_at_1 = n * c[n] - c[n - 1] if n >= 1 else 0

    d = d_coefficients(profile)
    concave_down_near_0 = n >= 2 and d.at(1) < 0
    last = d.last_nonzero()
    concavity_near_1 = 0 if last is None else (1 if last[1] > 0 else -1)

    f1 = derivative(poly)
    f2 = second_derivative(poly)
    shifted = list(poly.coeffs)
    shifted[1] -= 1  # f(p) - p

    if not any(shifted):
        # single-vertex graph: the polynomial is the identity
        return ShapeReport(
            n=n, connected=profile.connected,
            deriv_at_0=deriv_at_0, deriv_at_1=deriv_at_1,
            decrease_intervals=(), critical_points=(), inflections=(),
            fixed_points=(), concave_down_near_0=concave_down_near_0,
            concavity_near_1=concavity_near_1, shape_class="identity")

    critical = tuple(isolate_roots(f1, tol=tol)) if any(f1) else ()
    decrease = _decrease_intervals(f1, critical)
    inflections = tuple(
        r for r in (isolate_roots(f2, tol=tol) if any(f2) else ()) if r.sign_change)
    fixed = tuple(isolate_roots(shifted, tol=tol))

    shape_class = _classify(poly, decrease, fixed, shifted)
    return ShapeReport(
        n=n, connected=profile.connected,
        deriv_at_0=deriv_at_0, deriv_at_1=deriv_at_1,
        decrease_intervals=decrease, critical_points=critical,
        inflections=inflections, fixed_points=fixed,
        concave_down_near_0=concave_down_near_0,
        concavity_near_1=concavity_near_1, shape_class=shape_class)


def _decrease_intervals(f1, critical) -> tuple[Interval, ...]:
    """Maximal open intervals where the polynomial strictly decreases.

    The sign of f' is constant between consecutive critical points and flips
    exactly at the odd-multiplicity ones, so negative stretches merge across
    tangential stationary points.
    """
    f1_int = to_primitive_int(list(f1))
    bounds: list[tuple[Fraction, RootRecord | None]] = [(Fraction(0), None)]
    bounds += [(r.approx, r) for r in critical]
    bounds.append((Fraction(1), None))
    segment_signs = []
    for i in range(len(bounds) - 1):
        left = bounds[i][1].hi if bounds[i][1] else bounds[i][0]
        right = bounds[i + 1][1].lo if bounds[i + 1][1] else bounds[i + 1][0]
        segment_signs.append(sign_at(f1_int, (left + right) / 2))
    intervals = []
    i = 0
    while i < len(segment_signs):
        if segment_signs[i] < 0:
            j = i
            while j + 1 < len(segment_signs) and segment_signs[j + 1] < 0:
                j += 1
            lo_val, lo_root = bounds[i]
            hi_val, hi_root = bounds[j + 1]
            intervals.append(Interval(lo_val, hi_val, lo_root, hi_root))
            i = j + 1
        else:
            i += 1
    return tuple(intervals)


def _classify(poly: ReliabilityPoly, decrease, fixed, shifted) -> str:
    crossings = [r for r in fixed if r.sign_change]
    if len(decrease) == 2:
        return "M"
    if len(decrease) == 1:
        lo_inside = decrease[0].lo_root is not None
        hi_inside = decrease[0].hi_root is not None
        if poly.value_at_one == 1 and lo_inside and hi_inside:
            return "N"
        return "other"
    if len(decrease) == 0:
        if not crossings:
            return "monotone-no-interior-fixed-point"
        if len(crossings) == 1:
            shifted_int = to_primitive_int(shifted)
            lo_edge = min(r.lo for r in fixed)
            hi_edge = max(r.hi for r in fixed)
            below_before = sign_at(shifted_int, lo_edge / 2) < 0
            above_after = sign_at(shifted_int, (hi_edge + 1) / 2) > 0
            if below_before and above_after:
                return "S"
        return "other"
    return "other"


# ---------------------------------------------------------------------------
# sparse-decrease threshold and witnesses

@dataclass(frozen=True)
class SparseDecreaseCheck:
    applicable: bool
    m: int
    n: int
    point: Fraction | None
    deriv_value: Fraction | None

    @property
    def decreasing_at_point(self) -> bool | None:
        if self.deriv_value is None:
            return None
        return self.deriv_value < 0


def check_sparse_decrease(g: Graph, profile: ConnSetProfile | None = None) -> SparseDecreaseCheck:
    """For graphs with m <= 0.0851 n^2 (and n >= 2), evaluate f' exactly at
    p = 1.729474372/n; sparseness guarantees a negative value there, hence an
    interval of decrease."""
    n, m = g.n, g.m
    applicable = n >= 2 and m * SPARSE_THRESHOLD_DEN <= SPARSE_THRESHOLD_NUM * n * n
    if not applicable:
        return SparseDecreaseCheck(False, m, n, None, None)
    if profile is None:
        profile = count_connected_sets(g)
    point = R_HAT / n
    value = eval_exact(derivative(from_profile(profile)), point)
    return SparseDecreaseCheck(True, m, n, point, value)


def maximize_threshold_constant() -> tuple[float, float]:
    """Maximize f(r) = (r-1) / (2r + 1 + (r-1) e^r) on (1, 3).

    The maximizer is found by bisecting the sign of f' (as the numerator of
    the quotient-rule derivative), which keeps the argument accurate to
    machine precision rather than the square-root-of-epsilon a direct search
    would give.
    """

    def f(r: float) -> float:
        return (r - 1.0) / (2.0 * r + 1.0 + (r - 1.0) * math.exp(r))

    def dsign(r: float) -> float:
        # sign of f'(r): D - (r-1) D' with D the denominator
        den = 2.0 * r + 1.0 + (r - 1.0) * math.exp(r)
        return den - (r - 1.0) * (2.0 + r * math.exp(r))

    lo, hi = 1.0, 3.0
    for _ in range(200):
        mid = (lo + hi) / 2.0
        if mid in (lo, hi):
            break
        if dsign(mid) > 0:
            lo = mid
        else:
            hi = mid
    r_hat = (lo + hi) / 2.0
    return r_hat, f(r_hat)


@dataclass(frozen=True)
class FixedPointWitness:
    applicable: bool  # requires a 2-connected graph
    max_degree: int
    point: Fraction | None
    value: Fraction | None

    @property
    def below(self) -> bool:
        return self.value is not None and self.value < self.point


def check_fixed_point_witness(g: Graph, max_degree: int | None = None,
                              profile: ConnSetProfile | None = None) -> FixedPointWitness:
    """Compare f(1/D^2) with 1/D^2 for maximum degree D.

    For a 2-connected graph, f' is n at 0 and 0 at 1, so f starts and ends
    above the identity on (0,1); a value below 1/D^2 at p = 1/D^2 therefore
    certifies at least two interior fixed points.  The comparison is recorded
    either way (small graphs may fail it); edgeless graphs have no evaluation
    point.
    """
    if max_degree is None:
        max_degree = max(g.degrees())
    if max_degree == 0:
        return FixedPointWitness(False, 0, None, None)
    if profile is None:
        profile = count_connected_sets(g)
    point = Fraction(1, max_degree * max_degree)
    value = eval_exact(from_profile(profile), point)
    return FixedPointWitness(is_two_connected(g), max_degree, point, value)
