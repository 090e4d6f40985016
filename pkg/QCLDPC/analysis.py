"""
Code analysis: girth, ebits, EAQECC parameters, rank bounds, distance search.

Everything here works on the binary check matrix (BitMatrix) except the
rank bounds, which read the polynomial form of H(X) H(X)^T.
"""

from __future__ import annotations

import logging
import math
from collections import deque
from fractions import Fraction
from typing import List, NamedTuple, Optional, Sequence, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict

from QCLDPC.errors import DimensionError, TrivialCodeError
from QCLDPC.exponent import ExponentMatrix, expand_to_binary, hhat
from QCLDPC.gf2 import BitMatrix, null_space_basis
from QCLDPC.guardrails import ParameterValidationResult
from QCLDPC.ring_poly import RingPoly, circulant_rank, gcd_with_modulus
from QCLDPC import settings

logger = logging.getLogger(__name__)

Girth = Union[int, float]


class ClassicalCodeInfo(BaseModel):
    """[n, k] code of a check matrix H, with its Tanner-graph girth."""

    model_config = ConfigDict(frozen=True)

    n: int
    k: int
    rank: int
    girth: Union[int, float]


class EAQECCParams(BaseModel):
    """[[n, k', d; c]] parameters of the entanglement-assisted code built from H."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    n: int
    k: int
    k_logical: int
    c: int
    d_upper: Optional[int] = None
    net_rate: Fraction
    entanglement_rate: Fraction

    def bracket(self) -> str:
        d = f",{self.d_upper}" if self.d_upper is not None else ""
        return f"[[{self.n},{self.k_logical}{d};{self.c}]]"


class CSSPairCheck(NamedTuple):
    compatible: bool
    n: int
    k_logical: int


# Girth

def _adjacency(H: BitMatrix) -> List[List[int]]:
    """Bipartite adjacency: variables 0..n-1, checks n..n+m-1."""
    m, n = H.shape
    adj: List[List[int]] = [[] for _ in range(n + m)]
    rows, cols = H.nonzero()
    for c, v in zip(rows.tolist(), cols.tolist()):
        adj[v].append(n + c)
        adj[n + c].append(v)
    return adj


def tanner_girth(H: BitMatrix, max_length: Optional[int] = None) -> Girth:
    """
    Length of the shortest cycle of the Tanner graph of H; math.inf if acyclic.

    A breadth-first search runs from every node; a non-tree edge met at
    depths a and b closes a cycle of length at most a + b + 1, and the
    minimum over all roots is exact. With max_length only cycles up to that
    length are looked for, and math.inf means none was found.
    """
    adj = _adjacency(H)
    best: Girth = math.inf
    limit = max_length if max_length is not None else math.inf

    for root in range(len(adj)):
        if not adj[root]:
            continue
        depth = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            # cycles closed from depth d have length >= 2d
            if 2 * depth[x] >= best or 2 * depth[x] > limit:
                break
            for y in adj[x]:
                if y == parent[x]:
                    continue
                if y in depth:
                    best = min(best, depth[x] + depth[y] + 1)
                else:
                    depth[y] = depth[x] + 1
                    parent[y] = x
                    queue.append(y)
        if best == 4:
            break

    if best > limit:
        return math.inf
    return best


# Ebits and parameters

def ebit_count(H: BitMatrix) -> int:
    """c = rank(H H^T) over GF(2)."""
    return (H @ H.T).rank()


def is_dual_containing(H: BitMatrix) -> bool:
    """H H^T = 0, i.e. the row space of H lies inside the code."""
    return (H @ H.T).is_zero()


def eaqecc_params(H: BitMatrix, d_upper: Optional[int] = None) -> EAQECCParams:
    """
    Parameters [[n, 2k - n + c; c]] of the EAQECC built from one classical code.

    Args:
        H: Parity-check matrix of the classical [n, k] code
        d_upper: Optional distance bound carried into the result

    Returns:
        EAQECCParams with the net and entanglement rates

    Raises:
        TrivialCodeError: If H is the zero matrix
    """
    if H.is_zero():
        raise TrivialCodeError("check matrix is zero; no EAQECC parameters")
    n = H.cols
    rank = H.rank()
    k = n - rank
    c = ebit_count(H)
    k_logical = 2 * k - n + c
    return EAQECCParams(
        n=n,
        k=k,
        k_logical=k_logical,
        c=c,
        d_upper=d_upper,
        net_rate=Fraction(k_logical - c, n),
        entanglement_rate=Fraction(c, n),
    )


def css_pair_check(H_C: BitMatrix, H_D: BitMatrix) -> CSSPairCheck:
    """H_C detects Z errors, H_D detects X errors; compatible iff H_C H_D^T = 0."""
    if H_C.cols != H_D.cols:
        raise DimensionError(f"column counts differ: {H_C.cols} vs {H_D.cols}")
    n = H_C.cols
    compatible = (H_C @ H_D.T).is_zero()
    return CSSPairCheck(compatible, n, n - H_C.rank() - H_D.rank())


def css_design_rate(J: int, L: int) -> Fraction:
    """(L - 2J)/L, the rate both CSS and EA codes approach for (J,L)-regular H."""
    return Fraction(L - 2 * J, L)


def regularity(H: BitMatrix) -> Optional[Tuple[int, int]]:
    """(column weight, row weight) if H is regular, else None."""
    cols = H.col_weights()
    rows = H.row_weights()
    if cols.size == 0 or rows.size == 0:
        return None
    if (cols == cols[0]).all() and (rows == rows[0]).all():
        return int(cols[0]), int(rows[0])
    return None


def classical_info(H: BitMatrix, girth_limit: Optional[int] = None) -> ClassicalCodeInfo:
    rank = H.rank()
    return ClassicalCodeInfo(
        n=H.cols,
        k=H.cols - rank,
        rank=rank,
        girth=tanner_girth(H, max_length=girth_limit),
    )


# Rank bounds on H H^T

def rank_bound(E: ExponentMatrix) -> int:
    """J (r - L + 1); valid when rank_bound_applies(E) is."""
    return E.J * (E.r - E.L + 1)


def blockwise_rank_bound(E: ExponentMatrix) -> int:
    """Sum over block rows of H^ of the largest circulant rank in that row."""
    return sum(max(circulant_rank(p) for p in row) for row in hhat(E))


def weight_rank_bound(p: RingPoly) -> int:
    """r - w + 1 for a first row of weight w; an upper bound on rank only under extra conditions."""
    return p.r - p.weight + 1


def weight_bound_violations(grid: Sequence[Sequence[RingPoly]]) -> List[Tuple[int, int]]:
    """
    Entries of a polynomial grid whose circulant rank exceeds r - w + 1.

    Args:
        grid: Polynomial grid, typically hhat(E)

    Returns:
        (i, j) of every nonzero entry with circulant_rank > weight_rank_bound
    """
    return [
        (i, j)
        for i, row in enumerate(grid)
        for j, p in enumerate(row)
        if not p.is_zero() and circulant_rank(p) > weight_rank_bound(p)
    ]


def rank_bound_applies(E: ExponentMatrix) -> ParameterValidationResult:
    """Checks the hypotheses under which rank(H H^T) <= J (r - L + 1)."""
    errors = []
    warnings = []

    if regularity(expand_to_binary(E)) is None:
        errors.append("H is not (J,L)-regular")

    for i, row in enumerate(hhat(E)):
        for j, p in enumerate(row):
            if p.is_zero():
                continue
            if p.weight != E.L:
                errors.append(
                    f"h^_({i},{j}) has weight {p.weight} != L={E.L}; "
                    "the exponent matrix of H^ is not multiplicity free"
                )
            if gcd_with_modulus(p).degree == 0:
                errors.append(f"gcd(h^_({i},{j}), X^{E.r} - 1) = 1")

    if E.L > E.r:
        warnings.append(f"L={E.L} > r={E.r}; the bound is vacuous")

    return ParameterValidationResult(is_valid=not errors, errors=errors, warnings=warnings)


# Minimum distance upper bound

def find_low_weight_codeword(
    H: BitMatrix,
    search_budget: Optional[int] = None,
    rng_seed: int = 0,
) -> np.ndarray:
    """
    Lightest nonzero codeword found by randomized information-set search.

    Each iteration permutes the columns of a null-space generator, brings it
    to reduced echelon form and tries every information pattern of weight
    one or two. One seeded generator drives the iterations in order, so a
    larger budget only extends the search.
    """
    if search_budget is None:
        search_budget = settings.DEFAULT_ISD_BUDGET
    basis = null_space_basis(H)
    if not basis:
        raise TrivialCodeError("code has no nonzero codeword")

    G = np.array(basis, dtype=np.uint8)
    n = H.cols
    rng = np.random.default_rng(rng_seed)

    best = G[int(np.argmin(G.sum(axis=1)))].copy()
    best_weight = int(best.sum())

    for iteration in range(search_budget):
        perm = rng.permutation(n)
        reduced, pivots = BitMatrix.from_dense(G[:, perm]).row_reduce()
        rows = np.unpackbits(reduced[: len(pivots)], axis=1, count=n, bitorder="little")
        weights = rows.sum(axis=1)

        candidate, weight = None, best_weight
        i = int(np.argmin(weights))
        if weights[i] < weight:
            candidate, weight = rows[i], int(weights[i])
        for i in range(len(rows) - 1):
            pair_weights = (rows[i] ^ rows[i + 1:]).sum(axis=1)
            j = int(np.argmin(pair_weights))
            if pair_weights[j] < weight:
                candidate, weight = rows[i] ^ rows[i + 1 + j], int(pair_weights[j])

        if candidate is not None:
            best = np.empty(n, dtype=np.uint8)
            best[perm] = candidate
            best_weight = weight
            logger.debug("ISD iteration %d: weight %d", iteration, best_weight)

    return best


def min_distance_upper_bound(
    H: BitMatrix,
    search_budget: Optional[int] = None,
    rng_seed: int = 0,
) -> int:
    """
    Upper bound on the minimum distance of the classical code ker H.

    Args:
        H: Parity-check matrix
        search_budget: Information-set iterations; defaults to EAQC_ISD_BUDGET
        rng_seed: Seed of the column-permutation generator

    Returns:
        Weight of the lightest codeword found

    Raises:
        TrivialCodeError: If ker H = {0}
    """
    codeword = find_low_weight_codeword(H, search_budget, rng_seed)
    weight = int(codeword.sum())
    logger.info("Distance upper bound %d after %s iterations", weight,
                search_budget if search_budget is not None else settings.DEFAULT_ISD_BUDGET)
    return weight
