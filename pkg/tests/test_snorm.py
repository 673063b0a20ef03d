import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from evencycle.generators import gen_c4_free_polarity
from evencycle.graph import Graph
from evencycle.snorm import (
    CheckSkipped,
    check_kwalks_set,
    check_modified_bs,
    check_snorm_axioms,
    check_zero_one_norm_bound,
    edges_between,
    estimate_matrix_snorm_diagnostic,
    snorm,
    snorm_layered,
    snorm_quadrature,
    snorm_rows,
    zero_one_sup,
)

from conftest import complete_graph, cycle_graph, graphs, petersen, star_graph

finite = st.floats(-1e6, 1e6, allow_nan=False)
vectors = st.lists(finite, min_size=1, max_size=12)


class TestSnorm:
    def test_ones(self):
        for n in (1, 4, 9, 17):
            assert snorm(np.ones(n)) == pytest.approx(math.sqrt(n), rel=1e-12)

    def test_four_one(self):
        assert snorm([4, 1]) == pytest.approx(3 + math.sqrt(2), rel=1e-15)

    def test_zero_and_empty(self):
        assert snorm([0, 0, 0]) == 0.0
        assert snorm([]) == 0.0

    def test_rejects_nan(self):
        with pytest.raises(ValueError):
            snorm([1.0, float("nan")])

    def test_order_and_sign_free(self):
        assert snorm([-1, 3, 2]) == snorm([3, 2, 1])

    @given(vectors)
    def test_layered_form_agrees(self, v):
        assert snorm_layered(v) == pytest.approx(snorm(v), rel=1e-9, abs=1e-9)

    @settings(max_examples=30)
    @given(st.lists(st.floats(-100, 100, allow_nan=False), min_size=1, max_size=8))
    def test_quadrature_agrees(self, v):
        exact = snorm(v)
        assert snorm_quadrature(v) == pytest.approx(exact, rel=1e-6, abs=1e-9)

    def test_rows(self):
        M = np.random.default_rng(1).standard_normal((20, 7))
        assert np.allclose(snorm_rows(M), [snorm(r) for r in M], rtol=1e-12)

    @given(st.sets(st.integers(0, 19), min_size=1), st.integers(20, 30))
    def test_indicator(self, A, n):
        v = np.zeros(n)
        v[list(A)] = 1
        assert snorm(v) == pytest.approx(math.sqrt(len(A)), rel=1e-12)

    @given(vectors)
    def test_between_l2_and_l1(self, v):
        a = np.abs(v)
        assert snorm(v) <= a.sum() * (1 + 1e-12) + 1e-12
        assert snorm(v) >= np.sqrt((a**2).sum()) * (1 - 1e-12) - 1e-12


class TestAxioms:
    def test_basis_vectors(self):
        assert snorm([1, 1]) == pytest.approx(math.sqrt(2))
        assert check_snorm_axioms([1, 0], [0, 1], 1.0)

    def test_negative_scaling(self):
        u = [3.0, -1.0, 0.5]
        assert snorm(np.multiply(-3, u)) == pytest.approx(3 * snorm(u))
        assert check_snorm_axioms(u, u, -3.0)

    def test_tight_triangle(self):
        u = np.array([2.0, 1.0, 1.0])
        assert snorm(2 * u) == pytest.approx(2 * snorm(u))

    @given(st.integers(1, 10).flatmap(lambda n: st.tuples(
        st.lists(finite, min_size=n, max_size=n), st.lists(finite, min_size=n, max_size=n))), finite)
    def test_random(self, uv, c):
        assert check_snorm_axioms(uv[0], uv[1], c)

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            check_snorm_axioms([1, 2], [1], 1.0)


class TestKwalksSet:
    def test_triangle(self):
        chk = check_kwalks_set(complete_graph(3), {0}, 1)
        assert chk.holds and chk.value == 2
        assert chk.bound == pytest.approx(2 * math.sqrt(3))

    @given(graphs(min_n=1, max_n=10))
    def test_k0_is_tight(self, g):
        chk = check_kwalks_set(g, range(g.n), 0)
        assert chk.holds and chk.value == g.n
        assert chk.bound == pytest.approx(g.n)

    def test_c4(self):
        chk = check_kwalks_set(cycle_graph(4), {0, 1}, 2)
        assert chk.value == 8 and chk.bound == pytest.approx(8 * math.sqrt(2))

    @settings(max_examples=60)
    @given(graphs(min_n=1, max_n=12), st.integers(0, 4), st.data())
    def test_random_sets(self, g, k, data):
        S = data.draw(st.sets(st.integers(0, g.n - 1)))
        assert check_kwalks_set(g, S, k).holds

    def test_precision_note(self):
        chk = check_kwalks_set(complete_graph(40), {0}, 12)
        assert "precision loss" in chk.notes and chk.holds


class TestZeroOne:
    def test_identity(self):
        rep = check_zero_one_norm_bound(np.eye(5), samples=2000)
        assert rep.C == pytest.approx(1.0)
        assert rep.max_ratio == pytest.approx(1.0) and rep.holds

    def test_all_ones(self):
        A = np.ones((2, 2))
        # v=(1,1) maps to (2,2): 2*sqrt(2)/sqrt(2) = 2
        assert zero_one_sup(A) == pytest.approx(2.0)
        assert check_zero_one_norm_bound(A, samples=2000).holds

    def test_c4_graph(self):
        rep = check_zero_one_norm_bound(cycle_graph(4), samples=2000)
        assert rep.holds and rep.C == pytest.approx(2.0)

    def test_non_square(self):
        with pytest.raises(ValueError):
            check_zero_one_norm_bound(np.ones((2, 3)))

    def test_too_large(self):
        with pytest.raises(ValueError):
            zero_one_sup(np.eye(21))


class TestModifiedBS:
    def test_empty_side(self):
        chk = check_modified_bs(petersen(), [], range(10), 2)
        assert chk.holds and chk.value == 0 and chk.bound == pytest.approx(2000)

    def test_petersen_whole(self):
        chk = check_modified_bs(petersen(), range(10), range(10), 2)
        assert chk.value == 15
        assert chk.bound == pytest.approx(200 * (10**1.5 + 20))

    def test_star(self):
        chk = check_modified_bs(star_graph(9), [0], range(1, 10), 2)
        assert chk.value == 9 and chk.bound == pytest.approx(200 * (3**1.5 + 10))

    def test_refuses_graph_with_cycle(self):
        with pytest.raises(ValueError):
            check_modified_bs(complete_graph(4), [0], [1], 2)

    def test_skip_on_budget(self):
        with pytest.raises(CheckSkipped):
            check_modified_bs(gen_c4_free_polarity(7), [0], [1], 2, budget=10)

    def test_edges_between_overlap(self):
        g = complete_graph(4)
        assert edges_between(g, {0, 1}, {0, 1}) == 1
        assert edges_between(g, {0}, {1, 2, 3}) == 3


class TestMatrixDiagnostic:
    def test_edgeless(self):
        assert estimate_matrix_snorm_diagnostic(Graph.empty(4), 2).max_ratio == 0

    def test_matching(self):
        g = Graph.from_edges(10, [(2 * i, 2 * i + 1) for i in range(5)])
        d = estimate_matrix_snorm_diagnostic(g, 2, samples=400)
        # scale is m^{1/3} > 1 so the ratio sits below 1
        assert d.max_ratio * d.scale <= 1 + 1e-12
        assert not d.violations

    def test_polarity(self):
        d = estimate_matrix_snorm_diagnostic(gen_c4_free_polarity(7), 2, samples=200, seed=1)
        assert 0 < d.max_ratio < 10 and d.worst_set_size >= 1
