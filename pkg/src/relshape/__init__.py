"""Exact node-reliability polynomials of graphs and their shape on (0,1)."""

from .census import CensusSummary, generate_connected, generate_trees, run_census, stream_graph6
from .connsets import (
    ConnSetProfile,
    check_coefficient_bounds,
    check_coefficient_identities,
    count_connected_sets,
    count_connected_sets_bruteforce,
    f_coefficients,
    first_sperner_violation,
    profile_closed_form,
    profile_disjoint_union,
    sperner_failure,
)
from .graphs import (
    FamilySpec,
    Graph,
    canonical_graph,
    canonical_key,
    cut_vertices,
    is_connected,
    is_two_connected,
    make_family,
    min_vertex_cut,
    parse_edge_list,
    parse_graph6,
    structural_stats,
    to_graph6,
)
from .poly import (
    DCoefficients,
    ReliabilityPoly,
    closed_form,
    d_coefficients,
    derivative,
    eval_exact,
    from_profile,
    monte_carlo_estimate,
    sample,
    second_derivative,
)
from .shape import (
    Interval,
    RootRecord,
    ShapeReport,
    analyze,
    analyze_profile,
    check_fixed_point_witness,
    check_sparse_decrease,
    isolate_roots,
    maximize_threshold_constant,
)
from .sturm import ZeroPolynomialError

__version__ = "0.1.0"
