"""Brute-force reference: definitional behavior and guard rails."""

import random

import pytest

from conftest import random_temporal_graph
from folty.graph import TemporalGraph
from folty.oracle import OracleCeilingError, oracle_counts, oracle_solutions
from folty.queries import QuerySpec, Universe, parse_tau


def test_triangle_example():
    g = TemporalGraph.from_edges([(1, 2, 10), (1, 3, 12), (2, 3, 15)])
    assert oracle_counts(g, 10).count == [1, 0, 0]


def test_triangle_free():
    g = TemporalGraph.from_edges([(1, 2, 5), (2, 3, 6), (3, 4, 7)])
    assert oracle_counts(g, 1000).count == [0, 0, 0]


def test_distinct_witnesses_not_pairs():
    # edge (1,2,10) closes with w=3 and w=4; parallel edges add pairs, not counts
    g = TemporalGraph.from_edges(
        [
            (1, 2, 10),
            (1, 3, 11),
            (1, 3, 12),
            (2, 3, 13),
            (2, 3, 14),
            (1, 4, 11),
            (2, 4, 12),
        ]
    )
    res = oracle_counts(g, 10, collect_witnesses=True)
    assert res.count[0] == 2
    assert sorted(w for w, _, _ in res.witnesses[0]) == sorted(
        [g.orig.index(3), g.orig.index(4)]
    )


def test_edge_order_invariance():
    rng = random.Random(11)
    g = random_temporal_graph(rng, max_vertices=12, max_edges=60)
    triples = [(g.orig[g.src[i]], g.orig[g.dst[i]], g.ts[i]) for i in range(g.m)]
    shuffled = triples[:]
    rng.shuffle(shuffled)
    g2 = TemporalGraph.from_edges(shuffled)
    assert oracle_counts(g, 7).count == oracle_counts(g2, 7).count


def test_ceiling():
    g = TemporalGraph.from_edges([(1, 2, t) for t in range(30)])
    with pytest.raises(OracleCeilingError):
        oracle_counts(g, 5, max_edges=10)


def test_solutions_examples():
    g = TemporalGraph.from_edges([(1, 2, 10), (1, 3, 12), (2, 3, 15)])
    half = parse_tau("1/2")
    eea = oracle_solutions(g, 10, QuerySpec("eea", 10, half))
    assert [(c.src, c.dst, c.t) for c in eea.solutions] == [(1, 2, 10)]
    eea_full = oracle_solutions(g, 10, QuerySpec("eea", 10, parse_tau("1")))
    assert eea_full.solutions == []
    eae = oracle_solutions(g, 10, QuerySpec("eae", 10, half))
    assert [v.vertex for v in eae.solutions] == [1]
    eaa = oracle_solutions(g, 10, QuerySpec("eaa", 10, half, tau2=half))
    assert [v.vertex for v in eaa.solutions] == [1]


def test_solutions_common_universe():
    g = TemporalGraph.from_edges([(1, 2, 10), (1, 3, 12), (2, 3, 15)])
    spec = QuerySpec("eea", 10, parse_tau("1"), universe=Universe.COMMON)
    sols = oracle_solutions(g, 10, spec)
    # count 1 over common universe of size 1 passes tau=1
    assert [(c.src, c.dst, c.count, c.universe_size) for c in sols.solutions] == [
        (1, 2, 1, 1)
    ]
