import csv

import numpy as np
import pytest

from QCLDPC.channel import (
    CSV_FIELDS,
    SimConfig,
    decoder_prior,
    run_simulation,
    run_sweep,
    run_trial,
    sample_depolarizing,
    trial_rng,
    validate_config,
    wilson_interval,
    write_csv,
)
from QCLDPC.errors import InvalidParameterError, UnknownCodeError


class TestSampling:
    def test_zero_probability(self, rng):
        e_x, e_z = sample_depolarizing(500, 0.0, rng)
        assert not e_x.any() and not e_z.any()

    def test_marginals_and_correlation(self, rng):
        n, f_m = 1_000_000, 0.05
        e_x, e_z = sample_depolarizing(n, f_m, rng)
        tolerance = 5 * np.sqrt(2 * f_m / n)
        assert abs(e_x.mean() - 2 * f_m) < tolerance
        assert abs(e_z.mean() - 2 * f_m) < tolerance
        assert abs((e_x & e_z).mean() - f_m) < tolerance

    def test_deterministic_given_stream(self):
        a = sample_depolarizing(128, 0.1, trial_rng(9, 4))
        b = sample_depolarizing(128, 0.1, trial_rng(9, 4))
        np.testing.assert_array_equal(a[0], b[0])
        np.testing.assert_array_equal(a[1], b[1])

    def test_trial_streams_differ(self):
        a, _ = sample_depolarizing(256, 0.1, trial_rng(9, 4))
        b, _ = sample_depolarizing(256, 0.1, trial_rng(9, 5))
        assert not np.array_equal(a, b)

    @pytest.mark.parametrize("f_m", [-0.01, 1 / 3, 0.5])
    def test_out_of_range(self, rng, f_m):
        with pytest.raises(ValueError):
            sample_depolarizing(8, f_m, rng)

    def test_decoder_prior(self):
        assert decoder_prior(0.01) == pytest.approx(0.02)
        assert decoder_prior(0.0) > 0


class TestTrial:
    def test_noiseless_trial_succeeds(self, rng, ex1_code, hi_code):
        for spec in (ex1_code, hi_code):
            outcome = run_trial(spec, 0.0, 100, rng)
            assert outcome.success
            assert outcome.iterations == 2

    def test_failure_flags(self, ex1_code):
        for t in range(20):
            outcome = run_trial(ex1_code, 0.08, 20, trial_rng(3, t))
            assert outcome.success == (not outcome.x_failed and not outcome.z_failed)
            assert 2 <= outcome.iterations <= 40


@pytest.mark.usefixtures("clean_contexts")
class TestSimulation:
    def test_noiseless_run(self):
        report = run_simulation(SimConfig(code="ex1", f_m=0.0, trials=50))
        assert report.block_errors == 0
        assert report.bler == 0.0
        assert report.mean_iterations == 1.0
        assert report.ci_low == 0.0

    def test_reproducible(self):
        config = SimConfig(code="ex-hi", f_m=0.03, trials=40, max_iter=20, seed=5)
        assert run_simulation(config) == run_simulation(config)

    def test_independent_of_worker_count(self):
        config = SimConfig(code="ex1", f_m=0.03, trials=30, max_iter=20, seed=11)
        single = run_simulation(config, workers=1)
        sharded = run_simulation(config, workers=3)
        assert single == sharded

    def test_counter_invariants(self):
        report = run_simulation(SimConfig(code="ex-mackay", f_m=0.04, trials=60, max_iter=20))
        assert report.block_errors <= report.config.trials
        assert max(report.x_failures, report.z_failures) <= report.block_errors
        assert report.block_errors <= report.x_failures + report.z_failures
        assert report.ci_low <= report.bler <= report.ci_high

    def test_negative_seed_is_corrected(self):
        report = run_simulation(SimConfig(code="ex1", f_m=0.0, trials=2, seed=-4))
        assert report.config.seed == 4

    @pytest.mark.parametrize("kwargs", [
        {"f_m": 0.3},
        {"f_m": 0.25},
        {"trials": 0},
        {"max_iter": 0},
    ])
    def test_invalid_config(self, kwargs):
        config = SimConfig(**{"code": "ex1", "f_m": 0.01, **kwargs})
        with pytest.raises(InvalidParameterError):
            validate_config(config)

    def test_unknown_code(self):
        with pytest.raises(UnknownCodeError):
            run_simulation(SimConfig(code="nope", f_m=0.01, trials=1))

    def test_sweep_order(self):
        reports = run_sweep(["ex1", "ex-hi"], [0.0, 0.01], trials=4, max_iter=10)
        assert [(r.config.code, r.config.f_m) for r in reports] == [
            ("ex1", 0.0), ("ex1", 0.01), ("ex-hi", 0.0), ("ex-hi", 0.01),
        ]

    def test_describe(self):
        text = run_simulation(SimConfig(code="ex1", f_m=0.0, trials=2)).describe()
        assert text.startswith("ex1")
        assert "BLER=0.000000" in text


class TestWilson:
    def test_no_failures(self):
        low, high = wilson_interval(0, 100)
        z2 = 1.959963984540054 ** 2
        assert low == 0.0
        assert high == pytest.approx(z2 / (100 + z2))

    def test_symmetry(self):
        low, high = wilson_interval(17, 200)
        mirror_low, mirror_high = wilson_interval(183, 200)
        assert low == pytest.approx(1 - mirror_high)
        assert high == pytest.approx(1 - mirror_low)

    def test_contains_estimate(self):
        low, high = wilson_interval(30, 1000)
        assert low < 0.03 < high

    def test_no_trials(self):
        assert wilson_interval(0, 0) == (0.0, 1.0)


@pytest.mark.usefixtures("clean_contexts")
class TestCsv:
    def test_header_and_duplicate_rows(self, tmp_path):
        path = tmp_path / "results.csv"
        config = SimConfig(code="ex1", f_m=0.02, trials=25, max_iter=20, seed=2)
        write_csv(run_simulation(config), path)
        write_csv(run_simulation(config), path)
        lines = path.read_text(encoding="utf-8").splitlines()
        assert lines[0] == "# eaqc-sim format-version 1"
        assert lines[1] == ",".join(CSV_FIELDS)
        assert lines[1] == (
            "code,f_m,trials,max_iter,seed,block_errors,bler,"
            "x_failures,z_failures,mean_iterations,ci_low,ci_high"
        )
        assert len(lines) == 4
        assert lines[2] == lines[3]

    def test_bler_field(self, tmp_path):
        path = tmp_path / "results.csv"
        report = run_simulation(SimConfig(code="ex-mackay", f_m=0.04, trials=30, max_iter=10))
        write_csv(report, path)
        rows = list(csv.DictReader(line for line in path.read_text(encoding="utf-8").splitlines()[1:]))
        assert rows[0]["bler"] == f"{report.block_errors / 30:.6f}"
        assert rows[0]["code"] == "ex-mackay"
        assert rows[0]["max_iter"] == "10"

    def test_unwritable_destination(self, tmp_path):
        report = run_simulation(SimConfig(code="ex1", f_m=0.0, trials=1))
        with pytest.raises(OSError):
            write_csv(report, tmp_path / "missing" / "results.csv")


@pytest.mark.slow
@pytest.mark.usefixtures("clean_contexts")
class TestBenchmarkComparison:
    TRIALS = 10_000
    CODES = ("ex1", "ex2", "ex-hi", "ex-mackay")

    def _reports(self, f_m):
        return {
            code: run_simulation(SimConfig(code=code, f_m=f_m, trials=self.TRIALS, max_iter=100))
            for code in self.CODES
        }

    @pytest.mark.parametrize("f_m", [0.01, 0.02])
    def test_ordering(self, f_m):
        reports = self._reports(f_m)
        ex1, ex2, hi, mackay = (reports[c] for c in ("ex1", "ex2", "ex-hi", "ex-mackay"))
        assert ex1.ci_low <= ex2.ci_high and ex2.ci_low <= ex1.ci_high
        assert ex1.ci_high < hi.ci_low
        assert hi.ci_high < mackay.ci_low

    @pytest.mark.parametrize("code", CODES)
    def test_bler_grows_with_f_m(self, code):
        reports = run_sweep([code], [0.005, 0.01, 0.02, 0.03], trials=self.TRIALS)
        for lower, higher in zip(reports, reports[1:]):
            assert lower.ci_low <= higher.ci_high

    def test_x_and_z_failures_are_symmetric(self):
        report = run_simulation(SimConfig(code="ex1", f_m=0.03, trials=self.TRIALS))
        discordant = report.x_failures + report.z_failures
        assert abs(report.x_failures - report.z_failures) <= 3 * np.sqrt(max(discordant, 1))
