"""Exact node-reliability polynomials.

The node reliability of a graph on n vertices, each operating independently
with probability p, is the probability that the operating vertices are
nonempty and induce a connected subgraph:

    nRel(p) = sum_k c_k p^k (1-p)^(n-k)

with c_k the number of connected k-sets.  This module expands that c-form
into the ordinary power basis exactly (integer coefficients, kept as
rationals), provides the closed forms for the standard families, exact
differentiation and evaluation, the second-derivative coefficients d_k, and a
seeded Monte Carlo estimator used as an end-to-end cross-check.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb, sqrt

from .connsets import ConnSetProfile, profile_closed_form
from .graphs import FamilySpec, Graph, mask_is_connected


class InternalCheckError(AssertionError):
    """A can't-happen algebraic identity failed; indicates a library bug."""


# -- plain coefficient-sequence helpers (lowest degree first) ---------------

def poly_add(a, b):
    out = list(a) + [0] * (len(b) - len(a)) if len(a) < len(b) else list(a)
    for i, x in enumerate(b):
        out[i] += x
    return out


def poly_scale(a, s):
    return [s * x for x in a]


def poly_shift(a, k):
    """Multiply by p^k."""
    return [0] * k + list(a)


def one_minus_p_power(k):
    """(1-p)^k as power-basis coefficients."""
    return [comb(k, j) * (-1) ** j for j in range(k + 1)]


def poly_eval(coeffs, p):
    acc = 0
    for c in reversed(coeffs):
        acc = acc * p + c
    return acc


def poly_diff(coeffs):
    return [i * c for i, c in enumerate(coeffs)][1:]


def poly_trim(coeffs):
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return out


def expand_c_form(c, n):
    """Power-basis coefficients of sum_k c[k] p^k (1-p)^(n-k)."""
    out = [0] * (n + 1)
    for k, ck in enumerate(c):
        if ck == 0:
            continue
        for j, b in enumerate(one_minus_p_power(n - k)):
            out[k + j] += ck * b
    return out


def expand_mixed_form(coeffs_by_k, n, power_offset=0):
    """Power-basis coefficients of sum_k e_k p^(k-1) (1-p)^(n-k-power_offset)
    for ``coeffs_by_k`` mapping k -> e_k (k >= 1)."""
    out = [0] * (n + 1)
    for k, ek in coeffs_by_k.items():
        if ek == 0:
            continue
        for j, b in enumerate(one_minus_p_power(n - k - power_offset)):
            out[k - 1 + j] += ek * b
    return poly_trim(out)


@dataclass(frozen=True)
class ReliabilityPoly:
    """Node-reliability polynomial in the power basis.

    ``coeffs[i]`` is the exact coefficient of p^i, ``n`` the order of the
    source graph.  The originating profile is retained when known so that the
    coefficient forms of the derivatives can be cross-checked on demand.
    """

    n: int
    coeffs: tuple[Fraction, ...]
    c_source: ConnSetProfile | None = None

    def __post_init__(self):
        if len(self.coeffs) != self.n + 1:
            raise ValueError("need n+1 power coefficients")
        if self.coeffs[0] != 0:
            raise ValueError("node reliability vanishes at p=0")
        total = sum(self.coeffs)
        if total not in (0, 1):
            raise ValueError(f"value at p=1 must be 0 or 1, got {total}")

    @property
    def value_at_one(self) -> int:
        return int(sum(self.coeffs))


def from_profile(profile: ConnSetProfile) -> ReliabilityPoly:
    coeffs = expand_c_form(profile.c, profile.n)
    return ReliabilityPoly(profile.n, tuple(Fraction(x) for x in coeffs), profile)


def closed_form(spec: FamilySpec) -> ReliabilityPoly:
    """Directly expanded closed forms.

    complete(n):             1 - (1-p)^n
    empty(n):                n p (1-p)^(n-1)
    star(n):                 p + (n-1) p (1-p)^(n-1)
    complete-bipartite(n,n): 1 - 2(1-p)^n + 2n p (1-p)^(2n-1) + (1-p)^(2n)
    bonded-complete-leaf(n): 1 - p(1-p) + p(1-p)^(n-1) - (1-p)^n
    """
    kind = spec.kind
    if kind == "complete":
        n = spec.params[0]
        coeffs = poly_add([1], poly_scale(one_minus_p_power(n), -1))
    elif kind == "empty":
        n = spec.params[0]
        coeffs = poly_shift(poly_scale(one_minus_p_power(n - 1), n), 1)
    elif kind == "star":
        n = spec.params[0]
        coeffs = poly_add([0, 1], poly_shift(poly_scale(one_minus_p_power(n - 1), n - 1), 1))
    elif kind == "complete-bipartite":
        a, b = spec.params
        if a != b:
            raise ValueError("closed form available for balanced complete bipartite only")
        n = 2 * a
        coeffs = poly_add([1], poly_scale(one_minus_p_power(a), -2))
        coeffs = poly_add(coeffs, poly_shift(poly_scale(one_minus_p_power(n - 1), n), 1))
        coeffs = poly_add(coeffs, one_minus_p_power(n))
    elif kind == "bonded-complete-leaf":
        n = spec.params[0]
        coeffs = poly_add([1, -1, 1], poly_shift(one_minus_p_power(n - 1), 1))
        coeffs = poly_add(coeffs, poly_scale(one_minus_p_power(n), -1))
    else:
        raise ValueError(f"no closed form for family kind {kind!r}")
    n = spec.order
    coeffs = coeffs + [0] * (n + 1 - len(coeffs))
    return ReliabilityPoly(n, tuple(Fraction(x) for x in coeffs))


def derivative(poly: ReliabilityPoly) -> tuple[Fraction, ...]:
    """Formal first derivative; cross-checked against the coefficient form
    sum_k [k c_k - (n-k+1) c_{k-1}] p^(k-1) (1-p)^(n-k) when the source
    profile is available."""
    formal = tuple(poly_diff(list(poly.coeffs)))
    if poly.c_source is not None:
        n, c = poly.c_source.n, poly.c_source.c
        ek = {k: k * c[k] - (n - k + 1) * c[k - 1] for k in range(1, n + 1)}
        mixed = expand_mixed_form(ek, n)
        if poly_trim(list(formal)) != poly_trim(mixed):
            raise InternalCheckError("derivative coefficient form mismatch")
    return formal


@dataclass(frozen=True)
class DCoefficients:
    """Integers d_1..d_{n-1} with f''(p) = sum_k d_k p^(k-1) (1-p)^(n-k-1)."""

    n: int
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != max(self.n - 1, 0):
            raise ValueError("need n-1 second-derivative coefficients")

    def at(self, k: int) -> int:
        if not 1 <= k <= self.n - 1:
            raise IndexError(f"k must be in 1..{self.n - 1}")
        return self.values[k - 1]

    def last_nonzero(self) -> tuple[int, int] | None:
        """(k, d_k) for the largest k with d_k != 0, or None."""
        for k in range(self.n - 1, 0, -1):
            if self.values[k - 1]:
                return k, self.values[k - 1]
        return None


def d_coefficients(profile: ConnSetProfile) -> DCoefficients:
    """d_k = (k+1)k c_{k+1} - 2k(n-k) c_k + (n-k+1)(n-k) c_{k-1}."""
    n, c = profile.n, profile.c
    values = tuple(
        (k + 1) * k * c[k + 1] - 2 * k * (n - k) * c[k] + (n - k + 1) * (n - k) * c[k - 1]
        for k in range(1, n)
    )
    return DCoefficients(n, values)


def second_derivative(poly: ReliabilityPoly) -> tuple[Fraction, ...]:
    """Formal second derivative; cross-checked against the d-coefficient form
    when the source profile is available."""
    formal = tuple(poly_diff(poly_diff(list(poly.coeffs))))
    if poly.c_source is not None:
        d = d_coefficients(poly.c_source)
        mixed = expand_mixed_form(
            dict(enumerate(d.values, start=1)), poly.n, power_offset=1)
        if poly_trim(list(formal)) != poly_trim(mixed):
            raise InternalCheckError("second-derivative coefficient form mismatch")
    return formal


def eval_exact(poly, p) -> Fraction:
    """Horner evaluation at an exact rational point."""
    coeffs = poly.coeffs if isinstance(poly, ReliabilityPoly) else poly
    return Fraction(poly_eval(coeffs, Fraction(p)))


def sample(poly, count: int) -> list[tuple[Fraction, Fraction]]:
    """``count`` uniformly spaced exact samples on [0,1], endpoints included."""
    if count < 2:
        raise ValueError("need at least 2 sample points")
    coeffs = poly.coeffs if isinstance(poly, ReliabilityPoly) else poly
    out = []
    for i in range(count):
        p = Fraction(i, count - 1)
        out.append((p, Fraction(poly_eval(coeffs, p))))
    return out


@dataclass(frozen=True)
class MonteCarloEstimate:
    mean: float
    stderr: float
    trials: int
    successes: int


def monte_carlo_estimate(g: Graph, p: float, trials: int, seed: int) -> MonteCarloEstimate:
    """Simulate independent vertex survival and check induced connectivity.

    Deterministic under a fixed seed; the generator algorithm itself is not
    part of any contract.
    """
    if trials < 1:
        raise ValueError("need at least one trial")
    rng = random.Random(seed)
    adj = g.adj
    n = g.n
    successes = 0
    for _ in range(trials):
        mask = 0
        for v in range(n):
            if rng.random() < p:
                mask |= 1 << v
        if mask and mask_is_connected(adj, mask):
            successes += 1
    mean = successes / trials
    stderr = sqrt(mean * (1.0 - mean) / trials)
    return MonteCarloEstimate(mean, stderr, trials, successes)


def family_profile(spec: FamilySpec) -> ConnSetProfile | None:
    """Closed-form profile for a family when one is known, unions included;
    None when the family needs enumeration."""
    if spec.kind in ("complete", "empty", "path", "cycle", "star"):
        return profile_closed_form(spec)
    if spec.kind == "complete-bipartite":
        a, b = spec.params
        n = a + b
        c = [0, n] + [comb(n, k) - comb(a, k) - comb(b, k) for k in range(2, n + 1)]
        return ConnSetProfile(n, tuple(c))
    if spec.kind == "bonded-complete-leaf":
        n = spec.params[0]
        c = [0, n] + [comb(n - 1, k) + comb(n - 2, k - 2) for k in range(2, n + 1)]
        return ConnSetProfile(n, tuple(c))
    if spec.kind == "disjoint-union":
        parts = [family_profile(part) for part in spec.parts]
        if None in parts:
            return None
        from .connsets import profile_disjoint_union

        return profile_disjoint_union(parts[0], parts[1])
    return None
