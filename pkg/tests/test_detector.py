import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from evencycle.detector import (
    DetectorConfig,
    _first_success_in_batch,
    colorful_path_dp,
    colorful_probability,
    detect_cycle_through,
)
from evencycle.generators import gen_random
from evencycle.graph import Graph
from evencycle.oracle import oracle_cycle_through

from conftest import cycle_graph, graphs, path_graph, petersen, star_graph


def test_trial_count():
    cfg = DetectorConfig(3, delta=1e-6)
    assert cfg.trials == math.ceil(math.exp(6) * math.log(1e6))
    assert DetectorConfig(2, delta=0.999999).trials >= 1


@pytest.mark.parametrize("bad", [dict(k=1), dict(k=2, delta=0.0), dict(k=2, delta=1.0), dict(k=2, mode="x")])
def test_config_validation(bad):
    with pytest.raises(ValueError):
        DetectorConfig(**bad)


def test_colorful_probability_c6():
    assert colorful_probability(3) == pytest.approx(5 / 324, rel=1e-15)


@pytest.mark.parametrize("mode", ["randomized", "exhaustive"])
def test_c4(mode):
    g = cycle_graph(4)
    c = detect_cycle_through(g, 0, DetectorConfig(2, seed=1, mode=mode))
    c.validate(g, 4)
    assert set(c.vertices) == {0, 1, 2, 3}


@pytest.mark.parametrize("mode", ["randomized", "exhaustive"])
@pytest.mark.parametrize("k", [2, 3, 4])
def test_tree_never(mode, k):
    g = Graph.from_edges(9, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (5, 6), (5, 7), (7, 8)])
    for u in range(g.n):
        assert detect_cycle_through(g, u, DetectorConfig(k, delta=0.5, mode=mode)) is None


@pytest.mark.parametrize("mode", ["randomized", "exhaustive"])
def test_petersen_six_cycles(mode):
    g = petersen()
    assert oracle_cycle_through(g, 0, 6) is not None
    c = detect_cycle_through(g, 0, DetectorConfig(3, seed=5, mode=mode))
    c.validate(g, 6)
    assert 0 in c.vertices


class TestColorfulDP:
    def test_rainbow(self):
        assert colorful_path_dp(cycle_graph(4), 0, [0, 1, 2, 3], 2).vertices in {(0, 1, 2, 3), (0, 3, 2, 1)}

    def test_two_colors(self):
        assert colorful_path_dp(cycle_graph(4), 0, [0, 1, 0, 1], 2) is None

    def test_bad_coloring(self):
        with pytest.raises(ValueError):
            colorful_path_dp(cycle_graph(4), 0, [0, 1, 2, 4], 2)

    def test_monte_carlo_c6(self):
        g = cycle_graph(6)
        N = 100_000
        colors = np.random.default_rng(2024).integers(0, 6, size=(N, 6)).tolist()
        hits = sum(colorful_path_dp(g, 0, col, 3) is not None for col in colors)
        p = 5 / 324
        sigma = math.sqrt(N * p * (1 - p))
        assert abs(hits - N * p) <= 3 * sigma

    @settings(max_examples=80)
    @given(graphs(min_n=4, max_n=10), st.sampled_from([2, 3]), st.data())
    def test_witness_is_colorful_and_complete(self, g, k, data):
        L = 2 * k
        coloring = data.draw(st.lists(st.integers(0, L - 1), min_size=g.n, max_size=g.n))
        u = data.draw(st.integers(0, g.n - 1))
        c = colorful_path_dp(g, u, coloring, k)
        if c is not None:
            c.validate(g, L)
            assert c.vertices[0] == u
            assert len({coloring[v] for v in c.vertices}) == L
        else:
            # brute force: no colorful L-cycle through u
            from itertools import permutations

            others = [v for v in range(g.n) if v != u]
            for rest in permutations(others, L - 1):
                seq = (u,) + rest
                if len({coloring[v] for v in seq}) == L and all(
                    g.has_edge(seq[i], seq[(i + 1) % L]) for i in range(L)
                ):
                    pytest.fail(f"missed colorful cycle {seq}")

    @settings(max_examples=40)
    @given(graphs(min_n=4, max_n=10), st.sampled_from([2, 3]), st.integers(0, 2**32))
    def test_batched_matches_single_trial(self, g, k, seed):
        L = 2 * k
        colors = np.random.default_rng(seed).integers(0, L, size=(37, g.n))
        for u in range(g.n):
            expect = next(
                (t for t in range(37) if colorful_path_dp(g, u, colors[t].tolist(), k) is not None), None
            )
            assert _first_success_in_batch(g, u, colors, L) == expect


@settings(max_examples=60)
@given(st.integers(5, 12), st.integers(0, 10**6), st.sampled_from([2, 3]))
def test_soundness_randomized(n, seed, k):
    m = min(n * (n - 1) // 2, n + seed % (2 * n))
    g = gen_random(n, m, seed)
    for u in range(n):
        c = detect_cycle_through(g, u, DetectorConfig(k, delta=0.01, seed=seed))
        truth = oracle_cycle_through(g, u, 2 * k)
        if c is not None:
            c.validate(g, 2 * k)
            assert u in c.vertices
        if truth is None:
            assert c is None


@settings(max_examples=60)
@given(st.integers(4, 14), st.integers(0, 10**6), st.sampled_from([2, 3]))
def test_exhaustive_complete(n, seed, k):
    m = min(n * (n - 1) // 2, n + seed % (2 * n))
    g = gen_random(n, m, seed)
    cfg = DetectorConfig(k, mode="exhaustive")
    for u in range(n):
        c = detect_cycle_through(g, u, cfg)
        truth = oracle_cycle_through(g, u, 2 * k)
        assert (c is None) == (truth is None)
        if c is not None:
            c.validate(g, 2 * k)


def test_degree_one_vertex():
    assert detect_cycle_through(star_graph(4), 1, DetectorConfig(2)) is None
    assert detect_cycle_through(path_graph(2), 0, DetectorConfig(2, mode="exhaustive")) is None


def test_reproducible():
    g = gen_random(14, 30, 3)
    cfg = DetectorConfig(2, seed=99)
    assert detect_cycle_through(g, 0, cfg) == detect_cycle_through(g, 0, cfg)
