"""The full verification suite behind ``relshape verify``.

Each check pins one quantitative claim the package is built around: exact
census counts, decrease-interval endpoints, threshold constants, coefficient
identities and bounds, family closed forms, shape theorems on their witness
families, and a seeded Monte Carlo cross-check.  Checks are pure functions of
a shared census cache so the CLI and the acceptance test suite run exactly
the same code.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction

from .census import generate_connected, generate_trees, run_census
from .connsets import (
    check_coefficient_bounds,
    check_coefficient_identities,
    count_connected_sets,
    profile_closed_form,
    profile_disjoint_union,
    sperner_failure,
)
from .graphs import (
    FamilySpec,
    Graph,
    canonical_graph,
    cut_vertices,
    is_complete,
    is_two_connected,
    make_family,
    parse_edge_list,
    to_graph6,
)
from .poly import (
    closed_form,
    d_coefficients,
    derivative,
    eval_exact,
    from_profile,
    monte_carlo_estimate,
)
from .shape import (
    DEFAULT_TOL,
    analyze_profile,
    check_fixed_point_witness,
    check_sparse_decrease,
    maximize_threshold_constant,
)

# the unique connected graph of order <= 7 whose reliability has three
# inflection points (0-based edge list)
THREE_INFLECTION_ORDER7 = "7 0 4 0 5 0 6 1 4 1 6 2 5 2 6 3 6 4 5"

CENSUS_EXPECTED = {
    6: {"total": 112, "decrease": 37, "budget_s": 10.0},
    7: {"total": 853, "decrease": 383, "budget_s": 60.0},
    8: {"total": 11117, "three_inflections": 84, "budget_s": 1800.0},
}


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


class CensusCache:
    """Memoized census graphs and summaries shared by the checks."""

    def __init__(self, tol: Fraction = DEFAULT_TOL, jobs: int = 1):
        self.tol = tol
        self.jobs = jobs
        self._graphs: dict[int, tuple[list[Graph], float]] = {}
        self._summaries: dict[int, tuple] = {}

    def graphs(self, n: int):
        if n not in self._graphs:
            start = time.monotonic()
            graphs = list(generate_connected(n))
            self._graphs[n] = (graphs, time.monotonic() - start)
        return self._graphs[n][0]

    def summary(self, n: int):
        """(summary, elapsed seconds including generation)."""
        if n not in self._summaries:
            graphs = self.graphs(n)
            gen_elapsed = self._graphs[n][1]
            start = time.monotonic()
            summary = run_census(graphs, tol=self.tol, jobs=self.jobs)
            self._summaries[n] = (summary, gen_elapsed + time.monotonic() - start)
        return self._summaries[n]


def _census_check(cache: CensusCache, n: int) -> CheckResult:
    expected = CENSUS_EXPECTED[n]
    summary, elapsed = cache.summary(n)
    problems = []
    if summary.total_connected != expected["total"]:
        problems.append(f"total {summary.total_connected} != {expected['total']}")
    if "decrease" in expected and summary.with_decrease != expected["decrease"]:
        problems.append(f"decrease {summary.with_decrease} != {expected['decrease']}")
    three = summary.inflection_histogram.get(3, 0)
    if "three_inflections" in expected and three != expected["three_inflections"]:
        problems.append(f"three-inflection count {three} != {expected['three_inflections']}")
    if n == 7:
        if three != 1:
            problems.append(f"three-inflection count {three} != 1")
        else:
            reference = to_graph6(canonical_graph(parse_edge_list(THREE_INFLECTION_ORDER7)))
            exemplar = summary.exemplars.get("inflections=3", ())
            if tuple(exemplar) != (reference,):
                problems.append(f"three-inflection exemplar {exemplar} != {reference}")
    if elapsed >= expected["budget_s"]:
        problems.append(f"elapsed {elapsed:.1f}s over budget {expected['budget_s']:.0f}s")
    detail = (f"{summary.with_decrease}/{summary.total_connected} decrease, "
              f"{three} with 3 inflections, {elapsed:.1f}s")
    return CheckResult(f"census-order-{n}", not problems,
                       detail if not problems else "; ".join(problems))


def check_census_order_6(cache, tol):
    return _census_check(cache, 6)


def check_census_order_7(cache, tol):
    return _census_check(cache, 7)


def check_census_order_8(cache, tol):
    return _census_check(cache, 8)


def check_path6_decrease_endpoints(cache, tol):
    report = analyze_profile(profile_closed_form(FamilySpec("path", (6,))), tol)
    slack = Fraction(5, 10**5)
    ok = (len(report.decrease_intervals) == 1
          and abs(report.decrease_intervals[0].lo - Fraction(2137, 10**4)) <= slack
          and abs(report.decrease_intervals[0].hi - Fraction(5851, 10**4)) <= slack)
    if report.decrease_intervals:
        iv = report.decrease_intervals[0]
        detail = f"decrease ({float(iv.lo):.6f}, {float(iv.hi):.6f}) vs (0.2137, 0.5851) +-5e-5"
    else:
        detail = "no decrease interval found"
    return CheckResult("path6-decrease-endpoints", ok, detail)


def check_threshold_constants(cache, tol):
    r_hat, f_hat = maximize_threshold_constant()
    ok = abs(r_hat - 1.729474372) <= 1e-8 and abs(f_hat - 0.08510464442) <= 1e-9
    return CheckResult("sparse-threshold-constants", ok,
                       f"argmax {r_hat:.10f}, maximum {f_hat:.12f}")


def _closed_form_specs():
    specs = []
    for n in range(1, 13):
        specs.append(FamilySpec("complete", (n,)))
        specs.append(FamilySpec("empty", (n,)))
    for n in range(2, 13):
        specs.append(FamilySpec("star", (n,)))
        specs.append(FamilySpec("bonded-complete-leaf", (n,)))
    for a in range(1, 7):
        specs.append(FamilySpec("complete-bipartite", (a, a)))
    return specs


def check_closed_form_equivalence(cache, tol):
    bad = []
    for spec in _closed_form_specs():
        direct = closed_form(spec)
        counted = from_profile(count_connected_sets(make_family(spec)))
        if direct.coeffs != counted.coeffs:
            bad.append(spec.label())
    return CheckResult("closed-form-equivalence", not bad,
                       f"{len(_closed_form_specs())} family instances coefficient-exact"
                       if not bad else f"mismatch: {', '.join(bad)}")


def _sweep_orders(cache):
    for n in range(2, 8):
        for g in cache.graphs(n):
            yield n, g


def check_coefficient_identities_sweep(cache, tol):
    bad = total = 0
    for n, g in _sweep_orders(cache):
        total += 1
        if not check_coefficient_identities(g, count_connected_sets(g)).passed:
            bad += 1
    return CheckResult("coefficient-identities-sweep", bad == 0,
                       f"{total} census graphs orders 2..7, {bad} failures")


def check_coefficient_bounds_sweep(cache, tol):
    bad = total = 0
    for n, g in _sweep_orders(cache):
        total += 1
        if not check_coefficient_bounds(count_connected_sets(g)).passed:
            bad += 1
    return CheckResult("coefficient-bounds-sweep", bad == 0,
                       f"{total} census graphs orders 2..7, {bad} failures")


def check_early_concavity_sweep(cache, tol):
    bad = total = 0
    for n, g in _sweep_orders(cache):
        total += 1
        d1 = d_coefficients(count_connected_sets(g)).at(1)
        if not d1 <= -n * (n - 1):
            bad += 1
    return CheckResult("early-concavity-sweep", bad == 0,
                       f"d_1 <= -n(n-1) on {total} census graphs, {bad} failures")


def check_endpoint_derivative_sweep(cache, tol):
    bad = total = 0
    for n, g in _sweep_orders(cache):
        total += 1
        d1 = derivative(from_profile(count_connected_sets(g)))
        if eval_exact(d1, 0) != n or eval_exact(d1, 1) != len(cut_vertices(g)):
            bad += 1
    return CheckResult("endpoint-derivative-sweep", bad == 0,
                       f"f'(0)=n and f'(1)=cut count on {total} census graphs, {bad} failures")


def check_sperner_sweep(cache, tol):
    bad = total = 0
    for n, g in _sweep_orders(cache):
        total += 1
        if sperner_failure(count_connected_sets(g)) == is_complete(g):
            bad += 1
    return CheckResult("sperner-failure-sweep", bad == 0,
                       f"failure iff non-complete on {total} census graphs, {bad} failures")


def check_late_concavity_two_connected(cache, tol):
    bad = total = 0
    for n, g in _sweep_orders(cache):
        if n < 3 or not is_two_connected(g):
            continue
        total += 1
        report = analyze_profile(count_connected_sets(g), tol)
        if report.concavity_near_1 != -1:
            bad += 1
    return CheckResult("late-concavity-two-connected-sweep", bad == 0,
                       f"{total} 2-connected census graphs concave down near 1, {bad} failures")


def check_sparse_decrease_census(cache, tol):
    applicable = bad = 0
    for n, g in _sweep_orders(cache):
        chk = check_sparse_decrease(g)
        if not chk.applicable:
            continue
        applicable += 1
        report = analyze_profile(count_connected_sets(g), tol)
        if chk.deriv_value >= 0 or not report.decrease_intervals:
            bad += 1
    return CheckResult("sparse-decrease-census", bad == 0,
                       f"{applicable} census graphs under the density threshold, {bad} failures")


def check_sparse_decrease_instances(cache, tol):
    bad = []
    cases = ([FamilySpec("cycle", (n,)) for n in range(12, 17)]
             + [FamilySpec("path", (n,)) for n in range(11, 17)])
    for spec in cases:
        g = make_family(spec)
        profile = profile_closed_form(spec)
        chk = check_sparse_decrease(g, profile)
        report = analyze_profile(profile, tol)
        if not (chk.applicable and chk.deriv_value < 0 and report.decrease_intervals):
            bad.append(spec.label())
    return CheckResult("sparse-decrease-instances", not bad,
                       f"{len(cases)} sparse family instances decrease"
                       if not bad else f"failed: {', '.join(bad)}")


def check_sparse_two_inflections(cache, tol):
    bad = []
    for n in range(12, 17):
        spec = FamilySpec("cycle", (n,))
        report = analyze_profile(profile_closed_form(spec), tol)
        if len(report.inflections) < 2:
            bad.append(spec.label())
    return CheckResult("sparse-two-inflection-instances", not bad,
                       "sparse 2-connected cycles n=12..16 all have >= 2 inflections"
                       if not bad else f"failed: {', '.join(bad)}")


def check_tree_inflections(cache, tol):
    bad = total = 0
    for n in range(4, 9):
        for tree in generate_trees(n):
            total += 1
            report = analyze_profile(count_connected_sets(tree), tol)
            if len(report.inflections) < 1:
                bad += 1
    return CheckResult("tree-inflection-sweep", bad == 0,
                       f"{total} trees of orders 4..8, {bad} without an inflection")


def check_two_cut_fixed_point(cache, tol):
    bad = total = 0
    for n, g in _sweep_orders(cache):
        if len(cut_vertices(g)) < 2:
            continue
        total += 1
        report = analyze_profile(count_connected_sets(g), tol)
        if len(report.fixed_points) < 1:
            bad += 1
    return CheckResult("two-cut-fixed-point-sweep", bad == 0,
                       f"{total} census graphs with >= 2 cut vertices, {bad} without a fixed point")


def check_clique_leaf_decreasing(cache, tol):
    bad = []
    for n in range(7, 21):
        value = eval_exact(derivative(closed_form(FamilySpec("bonded-complete-leaf", (n,)))),
                           Fraction(2, 5))
        if value >= 0:
            bad.append(str(n))
    return CheckResult("clique-leaf-decreasing-at-2-5", not bad,
                       "f'(2/5) < 0 exactly for orders 7..20"
                       if not bad else f"nonnegative at n: {', '.join(bad)}")


def check_star_single_inflection(cache, tol):
    bad = []
    for n in range(4, 21):
        report = analyze_profile(profile_closed_form(FamilySpec("star", (n,))), tol)
        target = Fraction(2, n)
        if not (len(report.inflections) == 1
                and report.inflections[0].lo <= target <= report.inflections[0].hi):
            bad.append(str(n))
    return CheckResult("star-single-inflection", not bad,
                       "stars n=4..20 have exactly one inflection bracketing 2/n"
                       if not bad else f"failed at n: {', '.join(bad)}")


def check_star_union_m_shape(cache, tol):
    bad = []
    for n in range(12, 21):
        profile = profile_disjoint_union(
            profile_closed_form(FamilySpec("star", (n,))),
            profile_closed_form(FamilySpec("complete", (1,))))
        report = analyze_profile(profile, tol)
        if len(report.decrease_intervals) != 2 or report.shape_class != "M":
            bad.append(str(n))
    return CheckResult("star-union-m-shape", not bad,
                       "star plus isolated vertex has exactly two decrease intervals, n=12..20"
                       if not bad else f"failed at n: {', '.join(bad)}")


def check_cycle50_fixed_points(cache, tol):
    profile = profile_closed_form(FamilySpec("cycle", (50,)))
    g = make_family(FamilySpec("cycle", (50,)))
    witness = check_fixed_point_witness(g, profile=profile)
    report = analyze_profile(profile, tol)
    ok = witness.applicable and witness.below and len(report.fixed_points) >= 2
    return CheckResult("cycle50-fixed-points", ok,
                       f"f(1/4) {'<' if witness.below else '>='} 1/4, "
                       f"{len(report.fixed_points)} fixed points")


MONTE_CARLO_TRIALS = 25000

MONTE_CARLO_CASES = [
    (FamilySpec("complete", (5,)), 0.5, 1001),
    (FamilySpec("complete", (5,)), 0.2, 1002),
    (FamilySpec("path", (6,)), 0.4, 1003),
    (FamilySpec("path", (6,)), 0.7, 1004),
    (FamilySpec("cycle", (6,)), 0.3, 1005),
    (FamilySpec("cycle", (6,)), 0.6, 1006),
    (FamilySpec("star", (6,)), 0.35, 1007),
    (FamilySpec("star", (6,)), 0.65, 1008),
    (FamilySpec("complete-bipartite", (3, 3)), 0.45, 1009),
    (FamilySpec("complete-bipartite", (2, 4)), 0.55, 1010),
    (FamilySpec("bonded-complete-leaf", (8,)), 0.4, 1011),
    (FamilySpec("bonded-complete-leaf", (8,)), 0.75, 1012),
    (FamilySpec("empty", (5,)), 0.25, 1013),
    (FamilySpec("empty", (5,)), 0.5, 1014),
    (FamilySpec("path", (4,)), 0.5, 1015),
    (FamilySpec("cycle", (5,)), 0.5, 1016),
    (FamilySpec("disjoint-union", parts=(FamilySpec("star", (5,)),
                                         FamilySpec("complete", (1,)))), 0.4, 1017),
    (FamilySpec("disjoint-union", parts=(FamilySpec("path", (3,)),
                                         FamilySpec("path", (3,)))), 0.6, 1018),
    (FamilySpec("complete", (7,)), 0.3, 1019),
    (FamilySpec("star", (8,)), 0.5, 1020),
]


def check_monte_carlo(cache, tol):
    bad = []
    for spec, p, seed in MONTE_CARLO_CASES:
        g = make_family(spec)
        exact = float(eval_exact(from_profile(count_connected_sets(g)), Fraction(p)))
        est = monte_carlo_estimate(g, p, MONTE_CARLO_TRIALS, seed)
        if abs(est.mean - exact) > 4.0 * est.stderr + 1e-12:
            bad.append(f"{spec.label()}@p={p}")
    return CheckResult("monte-carlo-crosscheck", not bad,
                       f"{len(MONTE_CARLO_CASES)} seeded runs within 4 standard errors"
                       if not bad else f"outliers: {', '.join(bad)}")


DEFAULT_CHECKS = [
    ("census-order-6", check_census_order_6),
    ("census-order-7", check_census_order_7),
    ("path6-decrease-endpoints", check_path6_decrease_endpoints),
    ("sparse-threshold-constants", check_threshold_constants),
    ("closed-form-equivalence", check_closed_form_equivalence),
    ("coefficient-identities-sweep", check_coefficient_identities_sweep),
    ("coefficient-bounds-sweep", check_coefficient_bounds_sweep),
    ("early-concavity-sweep", check_early_concavity_sweep),
    ("endpoint-derivative-sweep", check_endpoint_derivative_sweep),
    ("sperner-failure-sweep", check_sperner_sweep),
    ("late-concavity-two-connected-sweep", check_late_concavity_two_connected),
    ("sparse-decrease-census", check_sparse_decrease_census),
    ("sparse-decrease-instances", check_sparse_decrease_instances),
    ("sparse-two-inflection-instances", check_sparse_two_inflections),
    ("tree-inflection-sweep", check_tree_inflections),
    ("two-cut-fixed-point-sweep", check_two_cut_fixed_point),
    ("clique-leaf-decreasing-at-2-5", check_clique_leaf_decreasing),
    ("star-single-inflection", check_star_single_inflection),
    ("star-union-m-shape", check_star_union_m_shape),
    ("cycle50-fixed-points", check_cycle50_fixed_points),
    ("monte-carlo-crosscheck", check_monte_carlo),
]

SLOW_CHECKS = [("census-order-8", check_census_order_8)]


def run_checks(slow: bool = False, tol: Fraction = DEFAULT_TOL, jobs: int = 1,
               only: str | None = None) -> list[CheckResult]:
    cache = CensusCache(tol=tol, jobs=jobs)
    checks = DEFAULT_CHECKS + (SLOW_CHECKS if slow else [])
    results = []
    for name, check in checks:
        if only and only not in name:
            continue
        results.append(check(cache, tol))
    return results
