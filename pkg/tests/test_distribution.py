import numpy as np
import pytest

from stepfeat import (DSET, StepSignal, VectorDistribution, approximate,
                      code_bound, constant_runs, constant_window_counts,
                      encode, gen_correlated, gen_white_noise, histogram,
                      symmetry_defect, vector_frequencies, Signal)


def quantized(sig):
    step, _ = approximate(sig)
    return step


class TestHistogram:
    def test_constant_zero_signal_fills_one_interior_bin(self):
        h = histogram(StepSignal(np.zeros(50, dtype=int)), 7)
        assert h.bin_values.max() == 1.0
        hot = int(np.argmax(h.bin_values))
        assert 0 < hot < 29
        assert h.bin_values.sum() == pytest.approx(1.0, abs=1e-9)

    def test_shape_and_span(self):
        s = StepSignal(np.random.default_rng(0).integers(-2, 3, 500))
        h = histogram(s, 7)
        assert h.bin_edges.size == 31 and h.bin_values.size == 30
        assert h.bin_edges[0] == -code_bound(7)
        assert h.bin_edges[-1] == code_bound(7)

    def test_unit_mass(self):
        rng = np.random.default_rng(1)
        for lw in (3, 7, 11):
            s = StepSignal(rng.integers(-2, 3, 400))
            assert histogram(s, lw).bin_values.sum() == pytest.approx(1.0, abs=1e-9)

    def test_interior_edge_goes_to_higher_bin(self):
        # code 0 sits exactly on the middle edge of the symmetric 30-bin grid
        h = histogram(StepSignal(np.zeros(10, dtype=int)), 7)
        assert np.argmax(h.bin_values) == 15

    def test_white_noise_spread_is_broad(self):
        step = quantized(gen_white_noise(100_000, seed=5))
        h = histogram(step, 7)
        assert (h.bin_values > 0).sum() >= 25
        assert h.bin_values.max() < 0.12

    def test_window_length_changes_histogram_little(self):
        # regression: measured cosine similarity is about 0.99 on smoothed
        # noise; anything below 0.95 means the shape drifted
        step = quantized(gen_correlated(100_000, 50, seed=1))
        h7 = histogram(step, 7).bin_values
        h11 = histogram(step, 11).bin_values
        cos = h7 @ h11 / (np.linalg.norm(h7) * np.linalg.norm(h11))
        assert cos > 0.95

    def test_too_short_rejected(self):
        with pytest.raises(ValueError):
            histogram(StepSignal(np.array([1, 0])), 7)


class TestVectorFrequencies:
    def test_single_window_value(self):
        d = vector_frequencies(StepSignal(np.array([1, 1, 1])), 2)
        assert d.frequencies == {encode([1, 1]): 1.0}
        assert d.total_windows == 2

    def test_three_window_enumeration(self):
        d = vector_frequencies(StepSignal(np.array([0, 1, 0, 1])), 2)
        assert d.frequencies == {5: pytest.approx(2 / 3), 1: pytest.approx(1 / 3)}

    def test_constant_codes_dominate_smooth_noise(self):
        step = quantized(gen_correlated(132_300, 50, seed=1))
        d = vector_frequencies(step, 7)
        ranked = sorted(d.frequencies, key=d.frequencies.get, reverse=True)
        assert set(ranked[:5]) == {encode([c] * 7) for c in DSET}

    def test_mass_sums_to_one(self):
        step = quantized(gen_white_noise(20_000, seed=3))
        d = vector_frequencies(step, 7)
        assert sum(d.frequencies.values()) == pytest.approx(1.0, abs=1e-9)

    def test_from_counts_normalizes(self):
        d = VectorDistribution.from_counts({1: 3, -1: 1}, lw=2)
        assert d.frequencies == {1: 0.75, -1: 0.25}
        assert d.total_windows == 4


class TestSymmetryDefect:
    def test_exactly_symmetric(self):
        d = VectorDistribution({1: 0.5, -1: 0.5}, total_windows=2, lw=2)
        assert symmetry_defect(d) == 0.0

    def test_fully_asymmetric(self):
        d = VectorDistribution({1: 1.0}, total_windows=1, lw=2)
        assert symmetry_defect(d) == 2.0

    def test_sign_symmetrized_signal_is_nearly_symmetric(self):
        half = gen_correlated(60_000, 50, seed=1).samples
        step = quantized(Signal(np.concatenate([half, -half])))
        defect = symmetry_defect(vector_frequencies(step, 7))
        assert defect < 0.2
        assert defect < 0.01  # measured ~1e-4; only junction windows differ


class TestConstantRuns:
    def test_basic_runs(self):
        s = StepSignal(np.array([1, 1, 1, 0, 1, 1]))
        assert constant_runs(s, 1).lengths.tolist() == [3, 2]

    def test_absent_level_gives_empty_report(self):
        s = StepSignal(np.array([0, 1, 0]))
        assert constant_runs(s, -2).lengths.size == 0

    def test_constant_signal_single_run(self):
        s = StepSignal(np.full(40, 2))
        assert constant_runs(s, 2).lengths.tolist() == [40]

    def test_lengths_sorted_descending(self):
        rng = np.random.default_rng(4)
        s = StepSignal(rng.integers(-2, 3, 2000))
        for level in DSET:
            lengths = constant_runs(s, level).lengths
            assert (np.diff(lengths) <= 0).all()

    def test_invalid_level_rejected(self):
        with pytest.raises(ValueError):
            constant_runs(StepSignal(np.array([0, 1])), 3)


class TestRunWindowIdentity:
    def test_runs_explain_constant_window_counts(self):
        rng = np.random.default_rng(10)
        for _ in range(20):
            s = StepSignal(rng.integers(-2, 3, int(rng.integers(50, 400))))
            for lw in (3, 7):
                if len(s) < lw:
                    continue
                counts = constant_window_counts(vector_frequencies(s, lw))
                for level in DSET:
                    runs = constant_runs(s, level).lengths
                    expected = int(np.maximum(runs - lw + 1, 0).sum())
                    assert counts.get(level, 0) == expected

    def test_window_growth_shrinks_each_run_contribution(self):
        # runs all longer than lw + k: each loses exactly k constant windows
        s = StepSignal(np.array([1] * 30 + [0] * 25 + [1] * 40 + [2] * 28))
        k = 4
        for level, nruns in ((1, 2), (0, 1), (2, 1)):
            c3 = constant_window_counts(vector_frequencies(s, 3))[level]
            c7 = constant_window_counts(vector_frequencies(s, 3 + k))[level]
            assert c3 - c7 == k * nruns


class TestSeparation:
    def test_smooth_signal_has_far_more_constant_mass_than_white(self):
        def const_mass(sig):
            d = vector_frequencies(quantized(sig), 7)
            return sum(d.frequencies.get(encode([c] * 7), 0.0) for c in DSET)

        smooth = const_mass(gen_correlated(132_300, 50, seed=1))
        white = const_mass(gen_white_noise(132_300, seed=101))
        assert smooth / white >= 0.8 * 2950.0  # measured factor ~2954 at these seeds
