"""
Syndrome-based sum-product decoding on the Tanner graph of a binary check matrix.

Messages live on edges, stored as flat arrays ordered by check node. Both
half-iterations are scatter/gather operations over those arrays (np.bincount
and fancy indexing), so one decode does no Python-level loop over edges.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from QCLDPC.errors import DimensionError
from QCLDPC.gf2 import BitMatrix

# Message magnitudes are clamped to this value
LLR_CLAMP = 30.0
# Floor for |tanh(m/2)| before taking logs
_TANH_FLOOR = 1e-300
_ATANH_CEIL = 1.0 - 1e-15


@dataclass(frozen=True)
class TannerGraph:
    """Edge list of H: edge e joins check edge_check[e] and variable edge_var[e]."""

    m: int
    n: int
    edge_check: np.ndarray
    edge_var: np.ndarray

    @property
    def num_edges(self) -> int:
        return int(self.edge_check.size)

    def syndrome(self, e: np.ndarray) -> np.ndarray:
        """H e^T over GF(2)."""
        counts = np.bincount(self.edge_check, weights=e[self.edge_var], minlength=self.m)
        return (counts.astype(np.int64) & 1).astype(np.uint8)


@dataclass(frozen=True)
class DecodeResult:
    estimate: np.ndarray
    converged: bool
    iterations_used: int


def build_tanner(H: BitMatrix) -> TannerGraph:
    """
    Tanner graph of a parity-check matrix.

    Args:
        H: m x n parity-check matrix

    Returns:
        TannerGraph with one edge per nonzero entry, in row-major order
    """
    checks, variables = H.nonzero()
    edge_check = checks.astype(np.int64)
    edge_var = variables.astype(np.int64)
    edge_check.setflags(write=False)
    edge_var.setflags(write=False)
    return TannerGraph(H.rows, H.cols, edge_check, edge_var)


def spa_decode(
    g: TannerGraph,
    syndrome,
    flip_prob: float,
    max_iter: int = 100,
) -> DecodeResult:
    """
    Estimate the error e with H e^T = syndrome by flooding-schedule belief propagation.

    Variable priors are log((1-p)/p). A check whose syndrome bit is 1 flips
    the sign of its outgoing messages. The hard decision after each iteration
    is tested against the syndrome; a posterior LLR of exactly 0 decides bit 0.
    Without convergence the last hard decision is returned.
    """
    s = np.asarray(syndrome, dtype=np.uint8)
    if s.shape != (g.m,):
        raise DimensionError(f"syndrome of shape {s.shape} does not match {g.m} checks")
    if not 0.0 < flip_prob < 0.5:
        raise ValueError(f"flip_prob must satisfy 0 < p < 1/2, got {flip_prob}")
    if max_iter < 1:
        raise ValueError(f"max_iter must be >= 1, got {max_iter}")

    prior = float(np.log((1.0 - flip_prob) / flip_prob))
    check, var = g.edge_check, g.edge_var
    check_sign = s[check].astype(np.int64)

    v2c = np.full(g.num_edges, prior)
    estimate = np.zeros(g.n, dtype=np.uint8)

    for iteration in range(1, max_iter + 1):
        # check -> variable, tanh rule with the edge's own factor divided out
        t = np.tanh(v2c / 2.0)
        log_abs = np.log(np.maximum(np.abs(t), _TANH_FLOOR))
        negative = (t < 0).astype(np.int64)
        log_excl = np.bincount(check, weights=log_abs, minlength=g.m)[check] - log_abs
        neg_excl = np.bincount(check, weights=negative, minlength=g.m).astype(np.int64)[check] - negative
        magnitude = 2.0 * np.arctanh(np.minimum(np.exp(log_excl), _ATANH_CEIL))
        sign = 1.0 - 2.0 * ((neg_excl + check_sign) & 1)
        c2v = np.clip(sign * magnitude, -LLR_CLAMP, LLR_CLAMP)

        # variable -> check
        posterior = prior + np.bincount(var, weights=c2v, minlength=g.n)
        v2c = np.clip(posterior[var] - c2v, -LLR_CLAMP, LLR_CLAMP)

        estimate = (posterior < 0).astype(np.uint8)
        if np.array_equal(g.syndrome(estimate), s):
            return DecodeResult(estimate, True, iteration)

    return DecodeResult(estimate, False, max_iter)
