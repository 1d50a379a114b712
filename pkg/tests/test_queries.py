"""Threshold evaluation, reductions, and the practical baseline."""

import random
from fractions import Fraction

import pytest

from conftest import random_temporal_graph
from folty.engine import compute_counts
from folty.graph import TemporalGraph, build_static
from folty.oracle import oracle_solutions
from folty.queries import (
    ParameterError,
    QuerySpec,
    Universe,
    eval_eaa,
    eval_eae,
    eval_eea,
    parse_tau,
    practical_counts,
    practical_eea,
    validate_kind,
)

TAUS = [Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1)]


def tiny_triangle():
    return TemporalGraph.from_edges([(1, 2, 10), (1, 3, 12), (2, 3, 15)])


def prepared(g, delta):
    static = build_static(g)
    counts = compute_counts(g, delta, static)
    return static, counts


class TestTauParsing:
    def test_forms(self):
        assert parse_tau("0.25") == Fraction(1, 4)
        assert parse_tau("25%") == Fraction(1, 4)
        assert parse_tau("1/4") == Fraction(1, 4)
        assert parse_tau("1") == Fraction(1)
        assert parse_tau("12.5%") == Fraction(1, 8)

    def test_rejects_out_of_range(self):
        for bad in ("0", "-0.5", "1.5", "150%", "5/4"):
            with pytest.raises(ParameterError):
                parse_tau(bad)
        with pytest.raises(ParameterError):
            parse_tau("abc")

    def test_exactness(self):
        # 0.1 is exactly 1/10, not the binary float
        assert parse_tau("0.1") == Fraction(1, 10)


class TestKinds:
    def test_valid(self):
        assert validate_kind("EEA") == "eea"

    def test_universal_prefix_rejected(self):
        with pytest.raises(ParameterError, match="de Morgan"):
            validate_kind("aee")

    def test_unknown_rejected(self):
        with pytest.raises(ParameterError):
            validate_kind("eee")

    def test_queryspec_validation(self):
        with pytest.raises(ParameterError):
            QuerySpec("eaa", 10, Fraction(1, 2))  # missing tau2
        with pytest.raises(ParameterError):
            QuerySpec("eea", -1, Fraction(1, 2))

    def test_queryspec_normalizes_kind(self):
        assert QuerySpec("EEA", 10, Fraction(1, 2)).kind == "eea"


class TestEEA:
    def test_half_dst(self):
        g = tiny_triangle()
        static, counts = prepared(g, 10)
        sols = eval_eea(g, static, counts, Fraction(1, 2))
        assert [(c.src, c.dst, c.t, c.count, c.universe_size) for c in sols.solutions] == [
            (1, 2, 10, 1, 2)
        ]

    def test_full_dst_empty(self):
        g = tiny_triangle()
        static, counts = prepared(g, 10)
        assert eval_eea(g, static, counts, Fraction(1)).solutions == []

    def test_common_universe(self):
        g = tiny_triangle()
        static, counts = prepared(g, 10)
        sols = eval_eea(g, static, counts, Fraction(1), Universe.COMMON)
        assert [(c.src, c.dst, c.universe_size) for c in sols.solutions] == [(1, 2, 1)]

    def test_zero_count_never_certifies(self):
        # common universe size 0 must not satisfy vacuously
        g = TemporalGraph.from_edges([(1, 2, 5), (2, 3, 9)])
        static, counts = prepared(g, 100)
        sols = eval_eea(g, static, counts, Fraction(1), Universe.COMMON)
        assert sols.solutions == []

    def test_certificates_sorted_by_time_then_eid(self):
        rng = random.Random(5)
        g = random_temporal_graph(rng, max_vertices=12, max_edges=80)
        static, counts = prepared(g, 30)
        sols = eval_eea(g, static, counts, Fraction(1, 4))
        keyed = [(c.t,) for c in sols.solutions]
        assert keyed == sorted(keyed)


class TestEAE:
    def test_half(self):
        g = tiny_triangle()
        static, counts = prepared(g, 10)
        sols = eval_eae(g, static, counts, Fraction(1, 2))
        assert [(v.vertex, v.satisfied, v.degree) for v in sols.solutions] == [(1, 1, 2)]

    def test_full_empty(self):
        g = tiny_triangle()
        static, counts = prepared(g, 10)
        assert eval_eae(g, static, counts, Fraction(1)).solutions == []

    def test_requires_outgoing_edge(self):
        # 3 -> 1 and 3 -> 2 missing: vertex 3 has no outgoing qualifying edge
        g = tiny_triangle()
        static, counts = prepared(g, 10)
        sols = eval_eae(g, static, counts, Fraction(1, 4))
        assert all(v.vertex != 3 for v in sols.solutions)


class TestEAA:
    def test_half_half(self):
        g = tiny_triangle()
        static, counts = prepared(g, 10)
        sols = eval_eaa(g, static, counts, Fraction(1, 2), Fraction(1, 2))
        assert [v.vertex for v in sols.solutions] == [1]

    def test_containment_in_eae(self):
        rng = random.Random(0xAA)
        for _ in range(20):
            g = random_temporal_graph(rng, max_vertices=14, max_edges=90)
            static, counts = prepared(g, 20)
            for tau1 in TAUS:
                eae = {v.vertex for v in eval_eae(g, static, counts, tau1).solutions}
                for tau2 in TAUS:
                    eaa = {
                        v.vertex
                        for v in eval_eaa(g, static, counts, tau1, tau2).solutions
                    }
                    assert eaa <= eae


class TestMonotonicity:
    def test_threshold_monotone_set_inclusion(self):
        rng = random.Random(0xAB)
        for _ in range(15):
            g = random_temporal_graph(rng, max_vertices=14, max_edges=90)
            static, counts = prepared(g, 20)
            for lo, hi in zip(TAUS, TAUS[1:]):
                assert set(eval_eea(g, static, counts, hi).solutions) <= set(
                    eval_eea(g, static, counts, lo).solutions
                )
                assert set(eval_eae(g, static, counts, hi).solutions) <= set(
                    eval_eae(g, static, counts, lo).solutions
                )
                assert {
                    v.vertex for v in eval_eaa(g, static, counts, hi, hi).solutions
                } <= {v.vertex for v in eval_eaa(g, static, counts, lo, lo).solutions}

    def test_delta_monotone_set_inclusion(self):
        rng = random.Random(0xAC)
        for _ in range(10):
            g = random_temporal_graph(rng, max_vertices=14, max_edges=90)
            static = build_static(g)
            prev = None
            for delta in (0, 2, 10, 100):
                counts = compute_counts(g, delta, static)
                cur = {
                    (c.src, c.dst, c.t)
                    for c in eval_eea(g, static, counts, Fraction(1, 4)).solutions
                }
                if prev is not None:
                    assert prev <= cur
                prev = cur


class TestPractical:
    def test_matches_engine_counts(self):
        rng = random.Random(0xAD)
        for _ in range(30):
            g = random_temporal_graph(rng, max_vertices=16, max_edges=120)
            static = build_static(g)
            for delta in (0, 1, 20, 500):
                assert practical_counts(g, static, delta) == compute_counts(
                    g, delta, static
                ).totals()

    def test_practical_eea_equals_eval_eea(self):
        rng = random.Random(0xAE)
        for _ in range(10):
            g = random_temporal_graph(rng, max_vertices=16, max_edges=120)
            static = build_static(g)
            counts = compute_counts(g, 15, static)
            for tau in TAUS:
                for universe in (Universe.DST, Universe.COMMON):
                    assert practical_eea(g, static, 15, tau, universe) == eval_eea(
                        g, static, counts, tau, universe
                    )

    def test_triangle_free(self):
        g = TemporalGraph.from_edges([(1, 2, 5), (2, 3, 6)])
        static = build_static(g)
        assert practical_eea(g, static, 100, Fraction(1, 4)).solutions == []


class TestAgainstOracle:
    def test_all_kinds_match_oracle_solutions(self):
        rng = random.Random(0xAF)
        for _ in range(12):
            g = random_temporal_graph(rng, max_vertices=14, max_edges=90)
            static = build_static(g)
            for delta in (0, 10, 200):
                counts = compute_counts(g, delta, static)
                for tau in TAUS:
                    for universe in (Universe.DST, Universe.COMMON):
                        spec = QuerySpec("eea", delta, tau, universe=universe)
                        assert set(eval_eea(g, static, counts, tau, universe).solutions) == set(
                            oracle_solutions(g, delta, spec, static).solutions
                        )
                        spec2 = QuerySpec("eaa", delta, tau, tau2=tau, universe=universe)
                        assert set(eval_eaa(g, static, counts, tau, tau, universe).solutions) == set(
                            oracle_solutions(g, delta, spec2, static).solutions
                        )
                    spec3 = QuerySpec("eae", delta, tau)
                    assert set(eval_eae(g, static, counts, tau).solutions) == set(
                        oracle_solutions(g, delta, spec3, static).solutions
                    )
