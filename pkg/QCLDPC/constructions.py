"""
Named code constructions and the built-in code registry.

Four benchmark codes are compared by the simulator: two entanglement-assisted
QC-LDPC codes (ex1, ex2), a dual-containing bicycle-style code (ex-mackay) and
a CSS pair of Type-I QC-LDPC codes (ex-hi). Two small pedagogical matrices
(type1-example, type2-example) are kept as fixtures for row-difference work.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict

from QCLDPC.errors import ExponentFormatError, InvalidParameterError, UnknownCodeError
from QCLDPC.exponent import (
    ExponentMatrix,
    PolyGrid,
    dump_exponent_matrix,
    expand_poly_grid,
    expand_to_binary,
    parse_exponent_matrix,
)
from QCLDPC.gf2 import BitMatrix
from QCLDPC.guardrails import ConstructionGuardrail, multiplicative_order
from QCLDPC.ring_poly import poly_from_exponents, poly_transpose
from QCLDPC import settings

logger = logging.getLogger(__name__)

# Seed and candidate count for the default circulant of the MacKay code
MACKAY_SEED = 2008
MACKAY_CANDIDATES = 64


class CodeKind(str, Enum):
    EA = "ea"
    DUAL_CONTAINING = "dual-containing"
    CSS_PAIR = "css-pair"


class DeclaredParams(BaseModel):
    """Published parameters a construction is expected to reproduce."""

    model_config = ConfigDict(frozen=True)

    n: int
    k_logical: int
    c: int = 0
    d: Optional[int] = None
    rank: Optional[int] = None


@dataclass(frozen=True)
class CodeSpec:
    """
    A named code ready for analysis and simulation.

    Single-matrix codes hold one check matrix H, used for both X and Z
    errors. CSS pairs hold (H_C, H_D): H_C detects Z errors and H_D
    detects X errors.
    """

    name: str
    kind: CodeKind
    matrices: Tuple[BitMatrix, ...]
    exponents: Tuple[ExponentMatrix, ...] = ()
    poly_grid: Optional[PolyGrid] = None
    declared: Optional[DeclaredParams] = None
    description: str = ""
    parameters: Dict[str, int] = field(default_factory=dict)

    @property
    def n(self) -> int:
        return self.matrices[0].cols

    @property
    def H(self) -> BitMatrix:
        return self.matrices[0]

    @property
    def H_xdet(self) -> BitMatrix:
        """Check matrix whose syndrome reveals X errors."""
        return self.matrices[1] if self.kind is CodeKind.CSS_PAIR else self.matrices[0]

    @property
    def H_zdet(self) -> BitMatrix:
        """Check matrix whose syndrome reveals Z errors."""
        return self.matrices[0]

    def is_css_pair(self) -> bool:
        return self.kind is CodeKind.CSS_PAIR


def _from_exponents(name: str, E: ExponentMatrix, kind: CodeKind = CodeKind.EA, **kwargs) -> CodeSpec:
    return CodeSpec(name=name, kind=kind, matrices=(expand_to_binary(E),), exponents=(E,), **kwargs)


def ex1() -> CodeSpec:
    """Type-I (3,8)-regular code, r=16, with circulant H H^T; [[128,58,6;18]]."""
    E = ExponentMatrix.from_rows(16, [
        [1, 1, 1, 1, 1, 1, 1, 1],
        [1, 2, 3, 4, 5, 6, 7, 8],
        [1, 3, 5, 7, 9, 11, 13, 15],
    ])
    return _from_exponents(
        "ex1", E,
        declared=DeclaredParams(n=128, k_logical=58, c=18, d=6, rank=44),
        description="Type-I QC-LDPC, circulant H H^T",
    )


def ex2() -> CodeSpec:
    """Type-II (3,8)-regular code, r=16, built to meet the J(r-L+1) rank bound; [[128,58,6;18]]."""
    E = ExponentMatrix.from_rows(16, [
        [(1, 2), None, (1, 4), None, (1, 6), None, (1, 8), None],
        [5, 5, 6, 6, 7, 7, 8, 8],
        [None, (1, 2), None, (1, 4), None, (1, 6), None, (1, 8)],
    ])
    return _from_exponents(
        "ex2", E,
        declared=DeclaredParams(n=128, k_logical=58, c=18, d=6, rank=44),
        description="Type-II QC-LDPC, low-rank circulants in H H^T",
    )


def type1_example() -> CodeSpec:
    E = ExponentMatrix.from_rows(16, [
        [1, 1, 1, 1, 1, 1, 1, 1],
        [2, 5, 3, 5, 2, 5, 3, 5],
        [2, 3, 4, 5, 6, 7, 8, 9],
    ])
    return _from_exponents("type1-example", E, description="Type-I (3,8)-regular fixture")


def type2_example() -> CodeSpec:
    E = ExponentMatrix.from_rows(16, [
        [(1, 4), None, (7, 10), None],
        [5, 6, 11, 12],
        [None, (2, 9), None, (7, 13)],
    ])
    return _from_exponents("type2-example", E, description="Type-II (3,4)-regular fixture with 4-cycles")


def _mackay_matrix(n: int, m: int, first_row: Sequence[int]) -> Tuple[BitMatrix, PolyGrid]:
    half = n // 2
    c = poly_from_exponents(half, first_row)
    grid = ((c, poly_transpose(c)),)
    H0 = expand_poly_grid(grid)
    return H0.select_rows(range(m)), grid


def _default_mackay_row(n: int, m: int, L: int) -> List[int]:
    """
    First seeded support whose H has no zero column and full row rank;
    failing that, the highest-rank candidate seen.
    """
    rng = np.random.default_rng(MACKAY_SEED)
    best_row, best_rank = None, -1
    for _ in range(MACKAY_CANDIDATES):
        row = sorted(int(x) for x in rng.choice(n // 2, size=L // 2, replace=False))
        H, _ = _mackay_matrix(n, m, row)
        if (H.col_weights() == 0).any():
            continue
        rank = H.rank()
        if rank > best_rank:
            best_row, best_rank = row, rank
        if rank == m:
            break
    if best_row is None:
        raise ValueError(f"no MacKay candidate without zero columns for n={n}, m={m}, L={L}")
    logger.debug("MacKay first row %s (rank %d)", best_row, best_rank)
    return best_row


def mackay_b(
    n: int = 128,
    m: int = 48,
    L: int = 8,
    first_row: Optional[Sequence[int]] = None,
    name: str = "ex-mackay",
) -> CodeSpec:
    """H = first m rows of [C, C^T] with C an n/2 x n/2 circulant of row weight L/2."""
    result = ConstructionGuardrail.validate_mackay(n, m, L, first_row)
    if not result.is_valid:
        raise InvalidParameterError(result, "Invalid MacKay construction")
    published = first_row is None and (n, m, L) == (128, 48, 8)
    if first_row is None:
        first_row = _default_mackay_row(n, m, L)
    H, grid = _mackay_matrix(n, m, first_row)
    declared = DeclaredParams(n=128, k_logical=32, c=0) if published else None
    return CodeSpec(
        name=name,
        kind=CodeKind.DUAL_CONTAINING,
        matrices=(H,),
        poly_grid=grid,
        declared=declared,
        description=f"bicycle [C, C^T], first row {list(first_row)}",
        parameters={"n": n, "m": m, "L": L},
    )


def hagiwara_imai_exponents(J: int, K: int, P: int, sigma: int, tau: int) -> Tuple[ExponentMatrix, ExponentMatrix]:
    """Exponent matrices (H_C, H_D) over r = P; negative powers of sigma use its inverse mod P."""
    result = ConstructionGuardrail.validate_hagiwara_imai(J, K, P, sigma, tau)
    if not result.is_valid:
        raise InvalidParameterError(result, "Invalid Hagiwara-Imai parameters")
    for warning in result.warnings:
        logger.warning(warning)
    half = multiplicative_order(sigma, P)
    L = 2 * half

    def c(j: int, l: int) -> int:
        if l < half:
            return pow(sigma, -j + l, P)
        return (-tau * pow(sigma, j - 1 + l, P)) % P

    def d(k: int, l: int) -> int:
        if l < half:
            return (tau * pow(sigma, -k - 1 + l, P)) % P
        return (-pow(sigma, k + l, P)) % P

    H_C = ExponentMatrix.from_rows(P, [[c(j, l) for l in range(L)] for j in range(J)])
    H_D = ExponentMatrix.from_rows(P, [[d(k, l) for l in range(L)] for k in range(K)])
    return H_C, H_D


def hagiwara_imai(
    J: int = 3,
    K: int = 3,
    P: int = 15,
    sigma: int = 2,
    tau: int = 3,
    name: str = "ex-hi",
) -> CodeSpec:
    """
    CSS pair of Type-I codes from a proper subgroup of Z_P^*.

    Both components are 4-cycle free when P is prime. For composite P, as in
    the default (P = 15), row differences can repeat and girth drops to 4.
    """
    H_C, H_D = hagiwara_imai_exponents(J, K, P, sigma, tau)
    declared = (
        DeclaredParams(n=120, k_logical=38, c=0, d=4)
        if (J, K, P, sigma, tau) == (3, 3, 15, 2, 3)
        else None
    )
    return CodeSpec(
        name=name,
        kind=CodeKind.CSS_PAIR,
        matrices=(expand_to_binary(H_C), expand_to_binary(H_D)),
        exponents=(H_C, H_D),
        declared=declared,
        description=f"CSS pair J={J} K={K} P={P} sigma={sigma} tau={tau}",
        parameters={"J": J, "K": K, "P": P, "sigma": sigma, "tau": tau},
    )


BUILTIN_CODES: Dict[str, Callable[[], CodeSpec]] = {
    "ex1": ex1,
    "ex2": ex2,
    "ex-mackay": mackay_b,
    "ex-hi": hagiwara_imai,
    "type1-example": type1_example,
    "type2-example": type2_example,
}

# The four codes compared by the simulator
BENCHMARK_CODES = ("ex1", "ex2", "ex-mackay", "ex-hi")


# Binary matrix text format

def dump_bit_matrix(M: BitMatrix, header: bool = True) -> str:
    lines = []
    if header:
        lines.append(f"# eaqc-binary format-version {settings.EXPORT_FORMAT_VERSION}")
    lines.append(f"{M.rows} {M.cols}")
    for row in M.to_dense():
        lines.append("".join("1" if b else "0" for b in row))
    return "\n".join(lines) + "\n"


def parse_bit_matrix(text: str, path: Optional[str] = None) -> BitMatrix:
    content = [
        (number, line.strip())
        for number, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not content:
        raise ExponentFormatError("empty binary matrix", 1, 1, path)
    header_no, header = content[0]
    parts = header.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise ExponentFormatError("header must be 'rows cols'", header_no, 1, path)
    rows, cols = int(parts[0]), int(parts[1])
    body = content[1:]
    if len(body) != rows:
        last = body[-1][0] + 1 if body else header_no + 1
        raise ExponentFormatError(f"expected {rows} rows, found {len(body)}", last, 1, path)
    dense = np.zeros((rows, cols), dtype=np.uint8)
    for i, (line_no, line) in enumerate(body):
        if len(line) != cols:
            raise ExponentFormatError(f"expected {cols} bits, found {len(line)}", line_no, 1, path)
        for j, ch in enumerate(line):
            if ch not in "01":
                raise ExponentFormatError(f"unexpected character {ch!r}", line_no, j + 1, path)
            dense[i, j] = ch == "1"
    return BitMatrix.from_dense(dense)


def load_code_file(path: Union[str, Path]) -> CodeSpec:
    """A single-matrix code from an exponent-matrix or binary-matrix text file."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    header = next(
        (line.split() for line in text.splitlines() if line.strip() and not line.lstrip().startswith("#")),
        [],
    )
    if len(header) == 2:
        return CodeSpec(name=path.stem, kind=CodeKind.EA, matrices=(parse_bit_matrix(text, str(path)),))
    E = parse_exponent_matrix(text, path=str(path))
    return _from_exponents(path.stem, E, description=f"loaded from {path}")


def get_code(name_or_path: str) -> CodeSpec:
    """Built-in code by name, or a code read from an existing file."""
    if name_or_path in BUILTIN_CODES:
        return BUILTIN_CODES[name_or_path]()
    path = Path(name_or_path)
    if path.is_file():
        logger.info("Loading code from %s", path)
        return load_code_file(path)
    raise UnknownCodeError(
        f"unknown code {name_or_path!r}; built-in codes: {', '.join(BUILTIN_CODES)}"
    )


def export_code(spec: CodeSpec, directory: Union[str, Path], fmt: str = "exponent") -> List[Path]:
    """Write the code's matrices as text files; returns the paths written."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    suffixes = ("-HC", "-HD") if spec.is_css_pair() else ("",)

    written = []
    if fmt == "exponent":
        if not spec.exponents:
            raise ValueError(f"{spec.name} has no exponent-matrix form; export it as binary")
        for suffix, E in zip(suffixes, spec.exponents):
            target = directory / f"{spec.name}{suffix}.exp"
            target.write_text(dump_exponent_matrix(E), encoding="utf-8")
            written.append(target)
    elif fmt == "binary":
        for suffix, M in zip(suffixes, spec.matrices):
            target = directory / f"{spec.name}{suffix}.txt"
            target.write_text(dump_bit_matrix(M), encoding="utf-8")
            written.append(target)
    else:
        raise ValueError(f"unknown export format {fmt!r}; use 'exponent' or 'binary'")

    for target in written:
        logger.info("Wrote %s", target)
    return written
