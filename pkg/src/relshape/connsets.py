"""Counting connected induced vertex subsets by cardinality.

The profile ``c_0..c_n`` of a graph (``c_k`` = number of k-vertex subsets
whose induced subgraph is connected) is the raw material for every
reliability polynomial in this package.  The default counter enumerates each
connected set exactly once by rooted extension; an exhaustive subset scan is
kept alongside as an independent oracle.  Closed-form profiles exist for the
standard families, and report-style checks verify the bounds and identities
the counts are known to satisfy.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .graphs import (
    FamilySpec,
    Graph,
    cut_vertices,
    is_complete,
    mask_is_connected,
    triangle_count,
)

DEFAULT_COUNT_CAP = 30
BRUTEFORCE_CAP = 20


@dataclass(frozen=True)
class ConnSetProfile:
    """Exact counts ``c[k]`` of connected induced k-subsets, ``k = 0..n``."""

    n: int
    c: tuple[int, ...]

    def __post_init__(self):
        if len(self.c) != self.n + 1:
            raise ValueError("profile needs n+1 entries")
        if any(x < 0 for x in self.c):
            raise ValueError("connected-set counts cannot be negative")

    @property
    def connected(self) -> bool:
        return self.c[self.n] == 1


def count_connected_sets(g: Graph, cap: int = DEFAULT_COUNT_CAP) -> ConnSetProfile:
    """Count connected sets by rooted extension.

    Every connected set is visited exactly once: it is grown from its minimum
    vertex, extending by frontier vertices with already-tried extensions
    banned on the remaining branches.  Cost is proportional to the number of
    connected sets, so the cap guards order, not density; use a closed-form
    profile for large families.
    """
    n = g.n
    if n > cap:
        raise ValueError(
            f"order {n} above counting cap {cap}; use a closed-form profile")
    adj = g.adj
    counts = [0] * (n + 1)

    def grow(sub, size, frontier, allowed):
        counts[size] += 1
        while frontier:
            low = frontier & -frontier
            frontier &= frontier - 1
            v = low.bit_length() - 1
            # vertices popped earlier stay banned below: they are no longer
            # in `frontier`, and `allowed` drops them for the whole branch
            branch_allowed = allowed & ~low
            grow(
                sub | low,
                size + 1,
                (frontier | (adj[v] & branch_allowed & ~sub)),
                branch_allowed,
            )
            allowed = branch_allowed

    for root in range(n):
        above = ~((2 << root) - 1)
        grow(1 << root, 1, adj[root] & above, above)
    return ConnSetProfile(n, tuple(counts))


def count_connected_sets_bruteforce(g: Graph, cap: int = BRUTEFORCE_CAP) -> ConnSetProfile:
    """Independent oracle: scan all 2^n vertex subsets."""
    n = g.n
    if n > cap:
        raise ValueError(f"order {n} above brute-force cap {cap}")
    adj = g.adj
    counts = [0] * (n + 1)
    for mask in range(1, 1 << n):
        if mask_is_connected(adj, mask):
            counts[mask.bit_count()] += 1
    return ConnSetProfile(n, tuple(counts))


def profile_closed_form(spec: FamilySpec) -> ConnSetProfile:
    """Closed-form profile for complete, empty, path, cycle, and star graphs.

    complete: c_k = C(n,k);  empty: c_1 = n only;  path: c_k = n-k+1;
    cycle: c_k = n for k < n, c_n = 1;  star: c_1 = n, c_k = C(n-1,k-1).
    """
    n = spec.order
    if spec.kind == "complete":
        c = [comb(n, k) for k in range(n + 1)]
        c[0] = 0
    elif spec.kind == "empty":
        c = [0] * (n + 1)
        c[1] = n
    elif spec.kind == "path":
        c = [0] + [n - k + 1 for k in range(1, n + 1)]
    elif spec.kind == "cycle":
        c = [0] + [n] * (n - 1) + [1]
    elif spec.kind == "star":
        c = [0] * (n + 1)
        c[1] = n
        for k in range(2, n + 1):
            c[k] = comb(n - 1, k - 1)
    else:
        raise ValueError(f"no closed-form profile for family kind {spec.kind!r}")
    return ConnSetProfile(n, tuple(c))


def profile_disjoint_union(a: ConnSetProfile, b: ConnSetProfile) -> ConnSetProfile:
    """Profile of a disjoint union: a nonempty connected set lives entirely in
    one component, so counts add (on the combined order)."""
    n = a.n + b.n
    c = [0] * (n + 1)
    for k in range(1, a.n + 1):
        c[k] += a.c[k]
    for k in range(1, b.n + 1):
        c[k] += b.c[k]
    return ConnSetProfile(n, tuple(c))


# ---------------------------------------------------------------------------
# report-style checks

@dataclass(frozen=True)
class IdentityItem:
    label: str
    applicable: bool
    lhs: int | None
    rhs: int | None

    @property
    def passed(self) -> bool:
        return not self.applicable or self.lhs == self.rhs


@dataclass(frozen=True)
class CoefficientIdentityReport:
    items: tuple[IdentityItem, ...]

    @property
    def passed(self) -> bool:
        return all(item.passed for item in self.items)


def check_coefficient_identities(g: Graph, profile: ConnSetProfile) -> CoefficientIdentityReport:
    """Verify the directly computable profile entries.

    c_0 = 0, c_1 = n, c_2 = m, c_3 = sum_v C(deg v, 2) - 2*triangles, and for
    connected graphs of order >= 2 also c_{n-1} = n - t (t = cut vertices)
    and c_n = 1.  Report-only: each item carries both sides.
    """
    n, c = profile.n, profile.c
    connected = profile.connected
    items = [
        IdentityItem("c0_zero", True, c[0], 0),
        IdentityItem("c1_order", True, c[1], n),
        IdentityItem("c2_size", n >= 2, c[2] if n >= 2 else None, g.m),
    ]
    if n >= 3:
        rhs = sum(comb(g.degree(v), 2) for v in range(n)) - 2 * triangle_count(g)
        items.append(IdentityItem("c3_wedges_minus_triangles", True, c[3], rhs))
    else:
        items.append(IdentityItem("c3_wedges_minus_triangles", False, None, None))
    if connected and n >= 2:
        t = len(cut_vertices(g))
        items.append(IdentityItem("penultimate_noncut", True, c[n - 1], n - t))
        items.append(IdentityItem("full_set_connected", True, c[n], 1))
    else:
        items.append(IdentityItem("penultimate_noncut", False, None, None))
        items.append(IdentityItem("full_set_connected", False, None, None))
    return CoefficientIdentityReport(tuple(items))


@dataclass(frozen=True)
class BoundsReport:
    passed: bool
    first_violation: tuple[int, int] | None  # (k, t); consecutive form has t = k-1


def check_coefficient_bounds(profile: ConnSetProfile) -> BoundsReport:
    """Check the count growth bounds.

    Consecutive form: 2*c_k <= (n-k+1)*c_{k-1} for k = 2..n.  General form:
    (k-t+1)*c_k <= C(n-t, k-t)*c_t for 2 <= k <= n, 1 <= t < k.
    """
    n, c = profile.n, profile.c
    for k in range(2, n + 1):
        if 2 * c[k] > (n - k + 1) * c[k - 1]:
            return BoundsReport(False, (k, k - 1))
    for k in range(2, n + 1):
        for t in range(1, k):
            if (k - t + 1) * c[k] > comb(n - t, k - t) * c[t]:
                return BoundsReport(False, (k, t))
    return BoundsReport(True, None)


def f_coefficients(profile: ConnSetProfile) -> tuple[int, ...]:
    """F_k = c_{n-k}: the number of k-subsets whose failure leaves the
    operating vertices connected."""
    return tuple(reversed(profile.c))


def first_sperner_violation(profile: ConnSetProfile) -> int | None:
    """Smallest k with (k+1)*F_{k+1} > (n-k)*F_k, or None.

    Simplicial complexes satisfy these bounds; connected-set systems violate
    them for every non-complete graph, which is what separates node
    reliability from coherent reliability.
    """
    n = profile.n
    f = f_coefficients(profile)
    for k in range(n):
        if (k + 1) * f[k + 1] > (n - k) * f[k]:
            return k
    return None


def sperner_failure(profile: ConnSetProfile) -> bool:
    return first_sperner_violation(profile) is not None


def graph_profile_checks_pass(g: Graph, profile: ConnSetProfile) -> bool:
    """Convenience: identities plus bounds plus the expected Sperner outcome
    (failure exactly for non-complete graphs with a connected profile)."""
    if not check_coefficient_identities(g, profile).passed:
        return False
    if not check_coefficient_bounds(profile).passed:
        return False
    return sperner_failure(profile) != is_complete(g)
