import random
from itertools import combinations

import pytest
from hypothesis import given, settings

from relshape.graphs import (
    FamilySpec,
    Graph,
    Graph6ParseError,
    EdgeListParseError,
    canonical_graph,
    canonical_key,
    cut_vertices,
    is_connected,
    is_two_connected,
    make_family,
    min_vertex_cut,
    parse_edge_list,
    parse_graph6,
    relabel,
    structural_stats,
    to_graph6,
    triangle_count,
)
from strategies import graphs


def fam(kind, *params):
    return make_family(FamilySpec(kind, tuple(params)))


# -- graph6 ------------------------------------------------------------------

def test_smallest_graph6_is_single_vertex():
    g = parse_graph6("@")
    assert g.n == 1 and g.adj == (0,)
    assert to_graph6(g) == "@"


def test_dqc_is_a_path_on_five_vertices():
    g = parse_graph6("DQc")
    assert canonical_key(g) == canonical_key(fam("path", 5))


def test_header_tolerated():
    assert parse_graph6(">>graph6<<DQc") == parse_graph6("DQc")


@given(graphs(max_n=12))
def test_graph6_round_trip(g):
    assert parse_graph6(to_graph6(g)) == g


def test_graph6_round_trip_sweep():
    # 200 seeded random graphs at every order 2..10
    rng = random.Random(77)
    for n in range(2, 11):
        for _ in range(200):
            adj = [0] * n
            for i, j in combinations(range(n), 2):
                if rng.random() < 0.5:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
            g = Graph(n, tuple(adj))
            assert parse_graph6(to_graph6(g)) == g


def test_round_trip_on_census_fixture(fixtures_dir):
    for line in (fixtures_dir / "connected_upto7.g6").read_text().splitlines():
        assert to_graph6(parse_graph6(line)) == line


@pytest.mark.parametrize("bad, offset", [
    ("~??", 0),      # extended size encoding
    ("D" + chr(40) * 2, 1),   # data byte below 63
    ("DQcX", 3),     # trailing garbage
])
def test_graph6_errors_name_offset(bad, offset):
    with pytest.raises(Graph6ParseError) as err:
        parse_graph6(bad)
    assert err.value.offset == offset


def test_graph6_nonzero_padding_rejected():
    # 'DQd' flips a padding bit of 'DQc'
    with pytest.raises(Graph6ParseError):
        parse_graph6("DQd")


def test_graph6_truncated():
    with pytest.raises(Graph6ParseError):
        parse_graph6("E?")


# -- edge lists ---------------------------------------------------------------

def test_edge_list_k2():
    g = parse_edge_list("2 0 1")
    assert g.n == 2 and g.m == 1


def test_edge_list_duplicates_ignored():
    g = parse_edge_list("3 0 1 1 0")
    assert g.n == 3 and g.m == 1


def test_edge_list_three_inflection_fixture(fixtures_dir):
    g = parse_edge_list((fixtures_dir / "three_inflection_order7.edges").read_text())
    assert g.n == 7 and g.m == 9
    stats = structural_stats(g)
    assert stats.leaves == 1 and stats.cut_vertex_count == 1


@pytest.mark.parametrize("text", ["3 0 0", "3 0 5", "3 0 x", "0", "3 0", ""])
def test_edge_list_errors(text):
    with pytest.raises(EdgeListParseError):
        parse_edge_list(text)


# -- families ------------------------------------------------------------------

def test_complete_graph():
    g = fam("complete", 4)
    assert g.n == 4 and g.m == 6


def test_bonded_complete_leaf():
    g = fam("bonded-complete-leaf", 10)
    assert g.n == 10 and g.m == 37
    assert cut_vertices(g) == (0,)
    assert not is_two_connected(g)


def test_star_union_single_vertex():
    spec = FamilySpec("disjoint-union",
                      parts=(FamilySpec("star", (20,)), FamilySpec("complete", (1,))))
    g = make_family(spec)
    assert g.n == 21 and g.m == 19 and not is_connected(g)
    assert spec.label() == "union(star:20,complete:1)"


@pytest.mark.parametrize("kind, params", [
    ("cycle", (2,)),
    ("complete", (0,)),
    ("complete", (63,)),
    ("bonded-complete-leaf", (1,)),
    ("complete-bipartite", (3,)),
    ("nosuch", (3,)),
])
def test_family_validation(kind, params):
    with pytest.raises(ValueError):
        FamilySpec(kind, params)


def test_union_order_cap():
    with pytest.raises(ValueError):
        FamilySpec("disjoint-union",
                   parts=(FamilySpec("complete", (40,)), FamilySpec("complete", (40,))))


# -- structural predicates -----------------------------------------------------

@given(graphs(max_n=10))
def test_degree_sum_is_twice_edge_count(g):
    assert sum(g.degrees()) == 2 * g.m


@given(graphs(min_n=1, max_n=8))
def test_two_connected_equivalence(g):
    expected = is_connected(g) and not cut_vertices(g) and g.n >= 3
    assert is_two_connected(g) == expected


def test_path5_cut_vertices():
    assert cut_vertices(fam("path", 5)) == (1, 2, 3)


def test_cycle6_two_connected_min_cut():
    g = fam("cycle", 6)
    assert is_two_connected(g)
    assert min_vertex_cut(g) == 2


def test_min_cut_special_cases():
    assert min_vertex_cut(fam("complete", 5)) is None
    assert min_vertex_cut(fam("empty", 3)) == 0
    assert min_vertex_cut(fam("star", 5)) == 1
    assert min_vertex_cut(fam("complete-bipartite", 2, 3)) == 2


def test_structural_stats_examples():
    assert triangle_count(fam("complete", 4)) == 4
    star = structural_stats(fam("star", 6))
    assert star.leaves == 5 and star.leaves_on_degree_two == 0
    p6 = structural_stats(fam("path", 6))
    assert p6.leaves == 2 and p6.leaves_on_degree_two == 2 and p6.cut_vertex_count == 4
    assert p6.degree_sequence == (2, 2, 2, 2, 1, 1)


# -- canonical form --------------------------------------------------------------

def test_p3_labelings_share_key():
    a = parse_edge_list("3 0 1 1 2")
    b = parse_edge_list("3 1 0 0 2")
    assert canonical_key(a) == canonical_key(b)


@settings(max_examples=60)
@given(graphs(min_n=3, max_n=8))
def test_canonical_key_relabel_invariance(g):
    rng = random.Random(sum(g.adj) + g.n)
    perm = list(range(g.n))
    rng.shuffle(perm)
    assert canonical_key(g) == canonical_key(relabel(g, perm))


def test_canonical_key_relabel_invariance_sweep():
    # 100 seeded (graph, permutation) pairs at every order 3..8
    rng = random.Random(404)
    for n in range(3, 9):
        for _ in range(100):
            adj = [0] * n
            for i, j in combinations(range(n), 2):
                if rng.random() < 0.5:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
            g = Graph(n, tuple(adj))
            perm = list(range(n))
            rng.shuffle(perm)
            assert canonical_key(g) == canonical_key(relabel(g, perm))


def test_canonical_key_separates_non_isomorphic():
    assert canonical_key(fam("path", 4)) != canonical_key(fam("star", 4))


def test_canonical_graph_is_canonical_fixed_point():
    g = fam("cycle", 5)
    c = canonical_graph(g)
    assert canonical_graph(c) == c
    assert canonical_key(c) == canonical_key(g)


def test_canonical_key_order_cap():
    with pytest.raises(ValueError):
        canonical_key(fam("path", 11))


def test_canonical_key_minimum_over_all_permutations():
    # independent oracle: explicit minimum over every labeling
    from itertools import permutations

    rng = random.Random(5)
    for _ in range(40):
        n = rng.randint(2, 6)
        adj = [0] * n
        for i, j in combinations(range(n), 2):
            if rng.random() < 0.5:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
        g = Graph(n, tuple(adj))
        best = None
        for perm in permutations(range(n)):
            bits = tuple(g.adj[perm[i]] >> perm[j] & 1
                         for j in range(1, n) for i in range(j))
            best = bits if best is None or bits < best else best
        canon = canonical_graph(g)
        got = tuple(canon.adj[i] >> j & 1 for j in range(1, n) for i in range(j))
        assert got == best
