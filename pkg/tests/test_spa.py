from itertools import combinations

import numpy as np
import numpy.testing as npt
import pytest

from QCLDPC.errors import DimensionError
from QCLDPC.exponent import ExponentMatrix, expand_to_binary
from QCLDPC.gf2 import BitMatrix, null_space_basis
from QCLDPC.spa import build_tanner, spa_decode


def low_weight_errors(n, max_weight):
    for weight in range(max_weight + 1):
        for support in combinations(range(n), weight):
            e = np.zeros(n, dtype=np.uint8)
            e[list(support)] = 1
            yield e


def coset_leader_weights(H):
    """Minimum error weight per syndrome, by enumerating all 2^n errors; n+1 marks unreachable."""
    n, m = H.cols, H.rows
    words = np.arange(1 << n, dtype=np.int64)
    errors = ((words[:, None] >> np.arange(n)) & 1).astype(np.uint8)
    syndromes = (errors @ H.to_dense().T.astype(np.uint8)) & 1
    keys = syndromes.astype(np.int64) @ (1 << np.arange(m, dtype=np.int64))
    leaders = np.full(1 << m, n + 1, dtype=np.int64)
    np.minimum.at(leaders, keys, errors.sum(axis=1, dtype=np.int64))
    return leaders


def leader_match_rate(H, flip_prob):
    """Share of reachable syndromes whose decoded estimate is a coset leader."""
    g = build_tanner(H)
    leaders = coset_leader_weights(H)
    reachable = np.flatnonzero(leaders <= H.cols)
    matched = 0
    for key in reachable:
        s = ((int(key) >> np.arange(H.rows)) & 1).astype(np.uint8)
        estimate = spa_decode(g, s, flip_prob).estimate
        matched += np.array_equal(g.syndrome(estimate), s) and int(estimate.sum()) == leaders[key]
    return matched, len(reachable)


class TestTannerGraph:
    def test_ex1_edges(self, ex1_code):
        g = build_tanner(ex1_code.H)
        assert (g.m, g.n, g.num_edges) == (48, 128, 384)

    def test_identity(self):
        g = build_tanner(BitMatrix.identity(4))
        assert g.num_edges == 4
        npt.assert_array_equal(g.edge_check, g.edge_var)

    def test_zero(self):
        assert build_tanner(BitMatrix.zeros(3, 5)).num_edges == 0

    def test_edges_match_matrix(self, array_code):
        g = build_tanner(array_code)
        dense = np.zeros(array_code.shape, dtype=np.uint8)
        dense[g.edge_check, g.edge_var] = 1
        npt.assert_array_equal(dense, array_code.to_dense())

    def test_syndrome(self, rng, ex1_code):
        g = build_tanner(ex1_code.H)
        e = (rng.random(128) < 0.1).astype(np.uint8)
        npt.assert_array_equal(g.syndrome(e), ex1_code.H.dot_vector(e))


class TestDecode:
    def test_zero_syndrome(self, ex1_code):
        result = spa_decode(build_tanner(ex1_code.H), np.zeros(48, dtype=np.uint8), 0.1)
        assert result.converged
        assert result.iterations_used == 1
        assert not result.estimate.any()

    def test_single_errors_on_ex1(self, ex1_code):
        g = build_tanner(ex1_code.H)
        for e in low_weight_errors(128, 1):
            if not e.any():
                continue
            result = spa_decode(g, g.syndrome(e), 0.02)
            assert result.converged
            npt.assert_array_equal(result.estimate, e)

    def test_array_code_low_weight_errors(self, array_code):
        # d >= 6, so every error of weight <= 2 is the unique lightest member of its coset
        g = build_tanner(array_code)
        exact = total = 0
        for e in low_weight_errors(array_code.cols, 2):
            result = spa_decode(g, g.syndrome(e), 0.05)
            exact += np.array_equal(result.estimate, e)
            total += 1
        assert total == 211
        assert exact >= 0.95 * total

    def test_converged_means_syndrome_reproduced(self, rng, array_code):
        g = build_tanner(array_code)
        for _ in range(200):
            e = (rng.random(array_code.cols) < 0.15).astype(np.uint8)
            s = g.syndrome(e)
            result = spa_decode(g, s, 0.1, max_iter=30)
            if result.converged:
                npt.assert_array_equal(g.syndrome(result.estimate), s)
            else:
                assert result.iterations_used == 30

    def test_more_iterations_never_converge_less(self, array_code):
        g = build_tanner(array_code)
        syndromes = {g.syndrome(e).tobytes() for e in low_weight_errors(array_code.cols, 3)}
        converged = {}
        for max_iter in (1, 5, 100):
            converged[max_iter] = sum(
                spa_decode(g, np.frombuffer(s, dtype=np.uint8), 0.05, max_iter).converged
                for s in syndromes
            )
        assert converged[1] <= converged[5] <= converged[100]

    def test_deterministic(self, rng, ex1_code):
        g = build_tanner(ex1_code.H)
        s = g.syndrome((rng.random(128) < 0.05).astype(np.uint8))
        a = spa_decode(g, s, 0.04)
        b = spa_decode(g, s, 0.04)
        npt.assert_array_equal(a.estimate, b.estimate)
        assert (a.converged, a.iterations_used) == (b.converged, b.iterations_used)

    def test_depends_on_syndrome_only(self, array_code):
        g = build_tanner(array_code)
        e = np.zeros(array_code.cols, dtype=np.uint8)
        e[3] = 1
        shifted = e ^ null_space_basis(array_code)[0]
        npt.assert_array_equal(g.syndrome(e), g.syndrome(shifted))
        a = spa_decode(g, g.syndrome(e), 0.05)
        b = spa_decode(g, g.syndrome(shifted), 0.05)
        npt.assert_array_equal(a.estimate, b.estimate)

    def test_high_weight_errors_do_not_raise(self, rng, ex1_code):
        g = build_tanner(ex1_code.H)
        e = (rng.random(128) < 0.4).astype(np.uint8)
        result = spa_decode(g, g.syndrome(e), 0.49, max_iter=10)
        assert result.estimate.shape == (128,)
        assert np.isin(result.estimate, (0, 1)).all()


class TestValidation:
    def test_syndrome_length(self, array_code):
        with pytest.raises(DimensionError):
            spa_decode(build_tanner(array_code), np.zeros(3, dtype=np.uint8), 0.1)

    @pytest.mark.parametrize("p", [0.0, 0.5, 0.7, -0.1])
    def test_flip_prob(self, array_code, p):
        with pytest.raises(ValueError):
            spa_decode(build_tanner(array_code), np.zeros(array_code.rows, dtype=np.uint8), p)

    def test_max_iter(self, array_code):
        with pytest.raises(ValueError):
            spa_decode(build_tanner(array_code), np.zeros(array_code.rows, dtype=np.uint8), 0.1, max_iter=0)


@pytest.fixture(scope="module")
def toy_code():
    """Type-I r=5, rows (0,0) and (0,1): n=10, rank 9."""
    return expand_to_binary(ExponentMatrix.from_rows(5, [[0, 0], [0, 1]]))


class TestCosetLeaders:
    # sum-product is not a minimum-weight decoder; on these short codes it
    # finds a coset leader for 386/512 (toy) and 1701/8192 (array) syndromes at p=0.05

    def test_toy_code_all_syndromes(self, toy_code):
        assert toy_code.rank() == 9
        matched, reachable = leader_match_rate(toy_code, 0.05)
        assert reachable == 512
        assert matched >= 0.5 * reachable

    def test_toy_code_single_errors(self, toy_code):
        g = build_tanner(toy_code)
        leaders = coset_leader_weights(toy_code)
        keys = 1 << np.arange(toy_code.rows, dtype=np.int64)
        exact = 0
        for e in low_weight_errors(toy_code.cols, 1):
            s = g.syndrome(e)
            assert leaders[int(s.astype(np.int64) @ keys)] == e.sum()
            exact += np.array_equal(spa_decode(g, s, 0.05).estimate, e)
        assert exact >= 10

    def test_array_code_low_weight_errors_are_unique_leaders(self, array_code):
        g = build_tanner(array_code)
        syndromes = {g.syndrome(e).tobytes() for e in low_weight_errors(array_code.cols, 2)}
        assert len(syndromes) == 211

    @pytest.mark.slow
    def test_array_code_all_syndromes(self, array_code):
        matched, reachable = leader_match_rate(array_code, 0.05)
        assert reachable == 1 << array_code.rank()
        assert matched >= 0.15 * reachable
