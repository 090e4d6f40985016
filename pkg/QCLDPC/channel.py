"""
Monte Carlo simulation of CSS-style decoding over the depolarizing channel.

Each trial samples a Pauli error on the n channel qubits, splits it into
its X and Z components and decodes both separately with the sum-product
decoder. A trial succeeds only if both estimates equal the true components.
Trial t draws from its own Philox stream keyed by (seed, t), so results do
not depend on how trials are split across worker processes.
"""

from __future__ import annotations

import csv
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict

from QCLDPC.constructions import CodeSpec
from QCLDPC.errors import InvalidParameterError
from QCLDPC.guardrails import SimulationGuardrail
from QCLDPC.shared_context import get_context
from QCLDPC.spa import TannerGraph, build_tanner, spa_decode
from QCLDPC import settings

logger = logging.getLogger(__name__)

# Two-sided 95% normal quantile
Z95 = 1.959963984540054

CSV_FIELDS = (
    "code", "f_m", "trials", "max_iter", "seed", "block_errors", "bler",
    "x_failures", "z_failures", "mean_iterations", "ci_low", "ci_high",
)


class SimConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    code: str
    f_m: float
    trials: int = settings.DEFAULT_TRIALS
    max_iter: int = settings.DEFAULT_MAX_ITER
    seed: int = settings.DEFAULT_SEED


class SimReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    config: SimConfig
    block_errors: int
    bler: float
    x_failures: int
    z_failures: int
    mean_iterations: float
    ci_low: float
    ci_high: float

    def to_record(self) -> List[str]:
        """One CSV row, fields in CSV_FIELDS order."""
        c = self.config
        return [
            c.code,
            f"{c.f_m:g}",
            str(c.trials),
            str(c.max_iter),
            str(c.seed),
            str(self.block_errors),
            f"{self.bler:.6f}",
            str(self.x_failures),
            str(self.z_failures),
            f"{self.mean_iterations:.4f}",
            f"{self.ci_low:.6f}",
            f"{self.ci_high:.6f}",
        ]

    def describe(self) -> str:
        c = self.config
        return (
            f"{c.code:<10} f_m={c.f_m:<8g} trials={c.trials:<7d} "
            f"BLER={self.bler:.6f} [{self.ci_low:.6f}, {self.ci_high:.6f}] "
            f"errors={self.block_errors} (X {self.x_failures}, Z {self.z_failures}) "
            f"mean_iter={self.mean_iterations:.2f}"
        )


@dataclass(frozen=True)
class TrialOutcome:
    x_failed: bool
    z_failed: bool
    iterations: int

    @property
    def success(self) -> bool:
        return not (self.x_failed or self.z_failed)


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed, spawn_key=(trial,))))


def sample_depolarizing(n: int, f_m: float, rng: np.random.Generator) -> Tuple[np.ndarray, np.ndarray]:
    """Per qubit: X, Z or Y each with probability f_m. Returns (e_x, e_z); Y sets both."""
    if not 0.0 <= f_m < 1.0 / 3.0:
        raise ValueError(f"f_m must satisfy 0 <= f_m < 1/3, got {f_m}")
    u = rng.random(n)
    is_x = u < f_m
    is_z = (u >= f_m) & (u < 2 * f_m)
    is_y = (u >= 2 * f_m) & (u < 3 * f_m)
    e_x = (is_x | is_y).astype(np.uint8)
    e_z = (is_z | is_y).astype(np.uint8)
    return e_x, e_z


def decoder_prior(f_m: float) -> float:
    """Marginal flip probability 2 f_m of each component, floored away from 0."""
    return max(2.0 * f_m, settings.MIN_PRIOR)


def run_trial(
    code: CodeSpec,
    f_m: float,
    max_iter: int,
    rng: np.random.Generator,
    graphs: Optional[Tuple[TannerGraph, TannerGraph]] = None,
) -> TrialOutcome:
    """
    One channel use: sample, decode X and Z components separately, compare exactly.

    graphs is (graph for X errors, graph for Z errors); built from code when omitted.
    """
    if graphs is None:
        tx = build_tanner(code.H_xdet)
        tz = tx if not code.is_css_pair() else build_tanner(code.H_zdet)
    else:
        tx, tz = graphs
    e_x, e_z = sample_depolarizing(code.n, f_m, rng)
    prior = decoder_prior(f_m)

    result_x = spa_decode(tx, tx.syndrome(e_x), prior, max_iter)
    result_z = spa_decode(tz, tz.syndrome(e_z), prior, max_iter)
    return TrialOutcome(
        x_failed=not np.array_equal(result_x.estimate, e_x),
        z_failed=not np.array_equal(result_z.estimate, e_z),
        iterations=result_x.iterations_used + result_z.iterations_used,
    )


def _run_shard(code_name: str, f_m: float, max_iter: int, seed: int, start: int, stop: int) -> Tuple[int, int, int, int]:
    """Counts (block errors, X failures, Z failures, iterations) for trials [start, stop)."""
    context = get_context(code_name)
    graphs = (context.tanner_x, context.tanner_z)
    block = x_fail = z_fail = iterations = 0
    for t in range(start, stop):
        outcome = run_trial(context.spec, f_m, max_iter, trial_rng(seed, t), graphs)
        block += not outcome.success
        x_fail += outcome.x_failed
        z_fail += outcome.z_failed
        iterations += outcome.iterations
    return block, x_fail, z_fail, iterations


def _shards(trials: int, workers: int) -> List[Tuple[int, int]]:
    workers = max(1, min(workers, trials))
    bounds = [trials * w // workers for w in range(workers + 1)]
    return [(bounds[w], bounds[w + 1]) for w in range(workers)]


def wilson_interval(successes: int, trials: int, z: float = Z95) -> Tuple[float, float]:
    """Wilson score interval for a binomial proportion."""
    if trials <= 0:
        return 0.0, 1.0
    p = successes / trials
    denom = 1.0 + z * z / trials
    centre = (p + z * z / (2 * trials)) / denom
    half = z * math.sqrt(p * (1 - p) / trials + z * z / (4 * trials * trials)) / denom
    low = 0.0 if successes == 0 else max(0.0, centre - half)
    high = 1.0 if successes == trials else min(1.0, centre + half)
    return low, high


def validate_config(config: SimConfig) -> SimConfig:
    """Applies SimulationGuardrail; returns the config with any corrections applied."""
    result = SimulationGuardrail.validate_sim_params(config.f_m, config.trials, config.max_iter, config.seed)
    if not result.is_valid:
        raise InvalidParameterError(result, "Invalid simulation parameters")
    for warning in result.warnings:
        logger.warning(warning)
    if result.corrected_values:
        config = config.model_copy(update=result.corrected_values)
    return config


def run_simulation(config: SimConfig, workers: Optional[int] = None) -> SimReport:
    """
    Run config.trials independent trials, sharded over worker processes.

    Args:
        config: Code name, f_m, trial count, iteration cap and seed
        workers: Process count; defaults to EAQC_WORKERS

    Returns:
        SimReport with counters, BLER and its 95% Wilson interval

    Raises:
        InvalidParameterError: If the simulation guardrail rejects config
        UnknownCodeError: If config.code names no code
    """
    config = validate_config(config)
    # unknown names fail here, before any worker starts
    get_context(config.code)
    workers = settings.WORKERS if workers is None else workers
    shards = _shards(config.trials, workers)

    logger.info("Simulating %s at f_m=%g: %d trials on %d worker(s)",
                config.code, config.f_m, config.trials, len(shards))
    args = [(config.code, config.f_m, config.max_iter, config.seed, start, stop) for start, stop in shards]
    if len(shards) == 1:
        counts = [_run_shard(*args[0])]
    else:
        with ProcessPoolExecutor(max_workers=len(shards)) as pool:
            counts = list(pool.map(_run_shard, *zip(*args)))

    block, x_fail, z_fail, iterations = (sum(column) for column in zip(*counts))
    low, high = wilson_interval(block, config.trials)
    report = SimReport(
        config=config,
        block_errors=block,
        bler=block / config.trials,
        x_failures=x_fail,
        z_failures=z_fail,
        mean_iterations=iterations / (2 * config.trials),
        ci_low=low,
        ci_high=high,
    )
    return report


def run_sweep(
    codes: Sequence[str],
    f_ms: Iterable[float],
    trials: int = settings.DEFAULT_TRIALS,
    max_iter: int = settings.DEFAULT_MAX_ITER,
    seed: int = settings.DEFAULT_SEED,
    workers: Optional[int] = None,
) -> List[SimReport]:
    """One report per (code, f_m), in grid order."""
    f_ms = list(f_ms)
    reports = []
    for code in codes:
        for f_m in f_ms:
            report = run_simulation(
                SimConfig(code=code, f_m=f_m, trials=trials, max_iter=max_iter, seed=seed),
                workers=workers,
            )
            logger.info(report.describe())
            reports.append(report)
    return reports


def write_csv(report: SimReport, destination: Union[str, Path]) -> None:
    """
    Append one record to a results CSV.

    A new or empty file first gets the format-version comment and the header.

    Args:
        report: Finished simulation report
        destination: Path of the CSV file; its directory must exist

    Raises:
        OSError: If the file cannot be opened for appending
    """
    path = Path(destination)
    new = not path.exists() or path.stat().st_size == 0
    with open(path, "a", newline="", encoding="utf-8") as handle:
        if new:
            handle.write(f"# eaqc-sim format-version {settings.CSV_FORMAT_VERSION}\n")
        writer = csv.writer(handle, lineterminator="\n")
        if new:
            writer.writerow(CSV_FIELDS)
        writer.writerow(report.to_record())
