import random
from itertools import combinations

import pytest

from relshape.census import (
    generate_connected,
    generate_trees,
    run_census,
    stream_graph6,
)
from relshape.graphs import (
    Graph,
    Graph6ParseError,
    canonical_key,
    is_connected,
    parse_graph6,
    to_graph6,
)

KNOWN_CONNECTED_COUNTS = {2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


def brute_force_connected_classes(n):
    """Oracle: enumerate every labeled graph, filter connected, dedupe by
    canonical key."""
    keys = set()
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        adj = [0] * n
        for bit, (i, j) in enumerate(pairs):
            if mask >> bit & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
        g = Graph(n, tuple(adj))
        if is_connected(g):
            keys.add(canonical_key(g))
    return len(keys)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_generator_counts_match_labeled_oracle(n):
    assert sum(1 for _ in generate_connected(n)) == brute_force_connected_classes(n)
    assert brute_force_connected_classes(n) == KNOWN_CONNECTED_COUNTS[n]


def test_order6_count(graphs6):
    assert len(graphs6) == 112


def test_order7_count(graphs7):
    assert len(graphs7) == 853


def test_generated_graphs_connected_and_distinct(graphs6):
    keys = {canonical_key(g) for g in graphs6}
    assert len(keys) == len(graphs6)
    assert all(is_connected(g) for g in graphs6)


def test_generator_emits_canonical_sorted(graphs6):
    tags = [to_graph6(g) for g in graphs6]
    assert tags == sorted(tags)


def test_generator_order_range():
    with pytest.raises(ValueError):
        list(generate_connected(1))
    with pytest.raises(ValueError):
        list(generate_connected(9))


def test_tree_counts():
    expected = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23}
    for n, count in expected.items():
        assert sum(1 for _ in generate_trees(n)) == count


def test_trees_match_census_filter(graphs7):
    from_census = {to_graph6(g) for g in graphs7 if g.m == g.n - 1}
    from_generator = {to_graph6(t) for t in generate_trees(7)}
    assert from_census == from_generator


# -- streaming ----------------------------------------------------------------------

def test_stream_fixture(fixtures_dir):
    graphs = list(stream_graph6(fixtures_dir / "connected_order6.g6"))
    assert len(graphs) == 112
    assert all(g.n == 6 for g in graphs)


def test_stream_empty(tmp_path):
    path = tmp_path / "empty.g6"
    path.write_text("")
    assert list(stream_graph6(path)) == []


def test_stream_corrupt_line_names_line(tmp_path):
    path = tmp_path / "bad.g6"
    path.write_text("E?Bw\nE?~~~\nE?Fg\n")
    with pytest.raises(Graph6ParseError) as err:
        list(stream_graph6(path))
    assert "line 2" in str(err.value)


def test_stream_round_trip(fixtures_dir):
    lines = (fixtures_dir / "connected_upto7.g6").read_text().splitlines()
    for line, g in zip(lines, stream_graph6(fixtures_dir / "connected_upto7.g6")):
        assert to_graph6(g) == line


# -- aggregation ---------------------------------------------------------------------

def test_census_counts_order6(vcache):
    summary, _elapsed = vcache.summary(6)
    assert summary.total_connected == 112
    assert summary.with_decrease == 37


def test_histograms_total_to_census_size(vcache):
    summary, _ = vcache.summary(6)
    for histogram in (summary.inflection_histogram, summary.fixed_point_histogram,
                      summary.class_histogram):
        assert sum(histogram.values()) == summary.total_connected


def test_order_independence(graphs6):
    base = run_census(graphs6)
    shuffled = list(graphs6)
    random.Random(17).shuffle(shuffled)
    assert run_census(shuffled) == base
    assert run_census(reversed(list(graphs6))) == base


def test_parallel_equals_sequential(graphs6):
    assert run_census(graphs6, jobs=2) == run_census(graphs6)


def test_exemplar_cap_and_determinism(graphs6):
    summary = run_census(graphs6, exemplar_cap=3)
    for tags in summary.exemplars.values():
        assert len(tags) <= 3
        assert list(tags) == sorted(tags)


def test_exemplars_are_lexicographically_smallest(graphs6):
    full = run_census(graphs6, exemplar_cap=10**6)
    capped = run_census(graphs6, exemplar_cap=2)
    for key, tags in capped.exemplars.items():
        assert list(tags) == list(full.exemplars[key][:2])


def test_mixed_orders_rejected(graphs6):
    mixed = [graphs6[0], next(iter(generate_connected(5)))]
    with pytest.raises(ValueError):
        run_census(mixed)


def test_empty_stream_rejected():
    with pytest.raises(ValueError):
        run_census([])


def test_census_from_stream_matches_generator(fixtures_dir, vcache):
    streamed = run_census(stream_graph6(fixtures_dir / "connected_order6.g6"))
    generated, _ = vcache.summary(6)
    assert streamed == generated
