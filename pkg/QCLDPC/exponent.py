"""
Exponent matrices of Type-I / Type-II QC-LDPC codes.

Entry (j, l) of a J x L exponent matrix lists the exponents of the circulant
block h_{j,l}(X): none (the zero block, written "inf"), one (a monomial) or
two (a binomial). Row differences, the multiplicity predicates and the
screens for dual-containment and girth >= 6 all work on exponents alone;
expand_to_binary gives the Jr x Lr matrix they can be checked against.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from QCLDPC.errors import DimensionError, ExponentFormatError
from QCLDPC.gf2 import BitMatrix, circulant_from_poly
from QCLDPC.ring_poly import RingPoly, poly_add, poly_from_exponents, poly_mul, poly_transpose
from QCLDPC import settings

logger = logging.getLogger(__name__)

PolyGrid = Tuple[Tuple[RingPoly, ...], ...]


@dataclass(frozen=True)
class ExpEntry:
    """Exponents of one circulant block; () is the zero block."""

    exps: Tuple[int, ...] = ()

    @classmethod
    def zero(cls) -> "ExpEntry":
        return cls(())

    @classmethod
    def monomial(cls, e: int) -> "ExpEntry":
        return cls((e,))

    @classmethod
    def binomial(cls, e1: int, e2: int) -> "ExpEntry":
        return cls((e1, e2))

    @property
    def kind(self) -> str:
        return ("zero", "monomial", "binomial")[len(self.exps)]

    def is_zero(self) -> bool:
        return not self.exps

    def to_poly(self, r: int) -> RingPoly:
        return poly_from_exponents(r, self.exps)

    def __str__(self) -> str:
        if not self.exps:
            return "inf"
        return ",".join(str(e) for e in self.exps)


EntryLike = Union[ExpEntry, int, None, str, Sequence[int]]


def _coerce_entry(value: EntryLike) -> ExpEntry:
    if isinstance(value, ExpEntry):
        return value
    if value is None or (isinstance(value, str) and value == "inf"):
        return ExpEntry.zero()
    if isinstance(value, int):
        return ExpEntry.monomial(value)
    return ExpEntry(tuple(int(e) for e in value))


@dataclass(frozen=True)
class ExponentMatrix:
    """J x L grid of ExpEntry over circulant size r."""

    r: int
    entries: Tuple[Tuple[ExpEntry, ...], ...]

    def __post_init__(self):
        if self.r < 2:
            raise ValueError(f"circulant size r must be >= 2, got {self.r}")
        if not self.entries or not self.entries[0]:
            raise DimensionError("exponent matrix needs J >= 1 and L >= 1")
        L = len(self.entries[0])
        for j, row in enumerate(self.entries):
            if len(row) != L:
                raise DimensionError(f"row {j} has {len(row)} entries, expected {L}")
            for l, entry in enumerate(row):
                if len(entry.exps) > 2:
                    raise ValueError(f"entry ({j},{l}) has more than two terms")
                for e in entry.exps:
                    if not 0 <= e < self.r:
                        raise ValueError(f"entry ({j},{l}) exponent {e} outside [0,{self.r})")
                if len(entry.exps) == 2 and entry.exps[0] == entry.exps[1]:
                    raise ValueError(f"entry ({j},{l}) binomial exponents must differ")

    @classmethod
    def from_rows(cls, r: int, rows: Iterable[Iterable[EntryLike]]) -> "ExponentMatrix":
        """Build from rows of ints (monomials), pairs (binomials) and None/"inf" (zero)."""
        return cls(r, tuple(tuple(_coerce_entry(v) for v in row) for row in rows))

    @property
    def J(self) -> int:
        return len(self.entries)

    @property
    def L(self) -> int:
        return len(self.entries[0])

    @property
    def n(self) -> int:
        return self.r * self.L

    def is_type_i(self) -> bool:
        """All entries are nonzero monomials."""
        return all(len(entry.exps) == 1 for row in self.entries for entry in row)

    def __getitem__(self, index: Tuple[int, int]) -> ExpEntry:
        j, l = index
        return self.entries[j][l]


@dataclass(frozen=True)
class DifferenceVector:
    """Row difference c_i - c_j: one slot per column, None standing for infinity."""

    r: int
    slots: Tuple[Optional[Tuple[int, ...]], ...]

    def residues(self) -> List[int]:
        """All residues of the non-infinite slots, pooled."""
        return [d for slot in self.slots if slot is not None for d in slot]

    def __len__(self) -> int:
        return len(self.slots)

    def __iter__(self):
        return iter(self.slots)

    def __str__(self) -> str:
        parts = []
        for slot in self.slots:
            if slot is None:
                parts.append("inf")
            elif len(slot) == 1:
                parts.append(str(slot[0]))
            else:
                parts.append("(" + ",".join(str(d) for d in slot) + ")")
        return "(" + ",".join(parts) + ")"


def _check_row(E: ExponentMatrix, i: int):
    if not 0 <= i < E.J:
        raise IndexError(f"row index {i} out of range for J={E.J}")


def row_difference(E: ExponentMatrix, i: int, j: int) -> DifferenceVector:
    """Slot k holds (a - b) mod r for a in E[i,k], b in E[j,k]; inf if either is zero."""
    _check_row(E, i)
    _check_row(E, j)
    slots = []
    for a_entry, b_entry in zip(E.entries[i], E.entries[j]):
        if a_entry.is_zero() or b_entry.is_zero():
            slots.append(None)
        else:
            slots.append(tuple((a - b) % E.r for a in a_entry.exps for b in b_entry.exps))
    return DifferenceVector(E.r, tuple(slots))


def self_cross_difference(E: ExponentMatrix, i: int) -> DifferenceVector:
    """Layer i against itself with the trivial a - a terms removed."""
    _check_row(E, i)
    slots = []
    for entry in E.entries[i]:
        if entry.is_zero():
            slots.append(None)
        else:
            slots.append(tuple((s - t) % E.r for s in entry.exps for t in entry.exps if s != t))
    return DifferenceVector(E.r, tuple(slots))


def is_multiplicity_even(d: DifferenceVector) -> bool:
    """True if every residue occurs an even number of times across all slots."""
    return all(count % 2 == 0 for count in Counter(d.residues()).values())


def is_multiplicity_free(d: DifferenceVector) -> bool:
    """True if no residue occurs twice across all slots."""
    return all(count == 1 for count in Counter(d.residues()).values())


def expand_to_poly(E: ExponentMatrix) -> PolyGrid:
    """
    Polynomial form H(X) of an exponent matrix.

    Args:
        E: J x L exponent matrix over ring size r

    Returns:
        J x L grid of RingPoly; an infinite entry becomes the zero polynomial
    """
    return tuple(tuple(entry.to_poly(E.r) for entry in row) for row in E.entries)


def expand_poly_grid(grid: Sequence[Sequence[RingPoly]]) -> BitMatrix:
    return BitMatrix.block([[circulant_from_poly(p) for p in row] for row in grid])


def expand_to_binary(E: ExponentMatrix) -> BitMatrix:
    """The Jr x Lr parity-check matrix assembled from circulant blocks."""
    return expand_poly_grid(expand_to_poly(E))


def hhat_poly(grid: Sequence[Sequence[RingPoly]]) -> PolyGrid:
    """H(X) H(X)^T for any polynomial grid: h^_{i,j} = sum_l h_{i,l} h^t_{l,j}."""
    J = len(grid)
    r = grid[0][0].r
    out = []
    for i in range(J):
        row = []
        for j in range(J):
            acc = RingPoly.zero(r)
            for h_il, h_jl in zip(grid[i], grid[j]):
                acc = poly_add(acc, poly_mul(h_il, poly_transpose(h_jl)))
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def hhat(E: ExponentMatrix) -> PolyGrid:
    """
    Polynomial form of H H^T.

    Args:
        E: Exponent matrix of H

    Returns:
        J x J grid whose (i, j) entry is sum_l h_{i,l}(X) h_{j,l}(X^-1)
    """
    return hhat_poly(expand_to_poly(E))


def dual_containing_screen(E: ExponentMatrix) -> bool:
    """Every row difference, self-differences included, is multiplicity even."""
    return all(
        is_multiplicity_even(row_difference(E, i, j))
        for i in range(E.J)
        for j in range(i, E.J)
    )


def girth6_screen(E: ExponentMatrix) -> bool:
    """No 4-cycle: distinct layers have multiplicity-free differences, and so does
    each layer against itself once the a - a terms are dropped."""
    for i in range(E.J):
        if not is_multiplicity_free(self_cross_difference(E, i)):
            return False
        for j in range(i + 1, E.J):
            if not is_multiplicity_free(row_difference(E, i, j)):
                return False
    return True


def satisfies_circulant_condition(hh: PolyGrid) -> bool:
    """h^_{i,j} == h^_{i+1,j+1} for all i, j in [0, J-2]."""
    J = len(hh)
    return all(hh[i][j] == hh[i + 1][j + 1] for i in range(J - 1) for j in range(J - 1))


def hhat_generator(E: ExponentMatrix) -> RingPoly:
    """
    g(X) = sum_i X^(i r) h^_{i,0}(X) in F2[X]/(X^(Jr) - 1).

    This is the single polynomial the circulant-H^ method reads the ebit
    count from; it requires the block diagonals of H^ to be constant.
    """
    hh = hhat(E)
    if not satisfies_circulant_condition(hh):
        raise ValueError("H^(X) does not satisfy h^_{i,j} = h^_{i+1,j+1}")
    size = E.J * E.r
    bits = 0
    for i in range(E.J):
        bits ^= hh[i][0].coeffs << (i * E.r)
    return RingPoly(size, bits)


# Text format

def dump_exponent_matrix(E: ExponentMatrix, header: bool = True) -> str:
    lines = []
    if header:
        lines.append(f"# eaqc-exponent format-version {settings.EXPORT_FORMAT_VERSION}")
    lines.append(f"{E.r} {E.J} {E.L}")
    for row in E.entries:
        lines.append(" ".join(str(entry) for entry in row))
    return "\n".join(lines) + "\n"


def _tokens(line: str):
    """Whitespace-separated tokens with their 1-based start columns."""
    column = 0
    for token in line.split():
        column = line.index(token, column)
        yield token, column + 1
        column += len(token)


def _parse_int(token: str, line_no: int, column: int, path: Optional[str]) -> int:
    try:
        return int(token)
    except ValueError:
        raise ExponentFormatError(f"expected an integer, got {token!r}", line_no, column, path) from None


def parse_exponent_matrix(text: str, path: Optional[str] = None) -> ExponentMatrix:
    """Parse "r J L" followed by J rows of L entries ("inf", "e" or "e1,e2")."""
    content = [
        (number, line)
        for number, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not content:
        raise ExponentFormatError("empty exponent matrix", 1, 1, path)

    header_no, header = content[0]
    header_tokens = list(_tokens(header))
    if len(header_tokens) != 3:
        raise ExponentFormatError("header must be 'r J L'", header_no, 1, path)
    r, J, L = (_parse_int(tok, header_no, col, path) for tok, col in header_tokens)
    if r < 2 or J < 1 or L < 1:
        raise ExponentFormatError(f"invalid header values r={r} J={J} L={L}", header_no, 1, path)

    body = content[1:]
    if len(body) != J:
        last = body[-1][0] + 1 if body else header_no + 1
        raise ExponentFormatError(f"expected {J} rows, found {len(body)}", last, 1, path)

    rows = []
    for line_no, line in body:
        tokens = list(_tokens(line))
        if len(tokens) != L:
            raise ExponentFormatError(f"expected {L} entries, found {len(tokens)}", line_no, 1, path)
        row = []
        for token, column in tokens:
            if token == "inf":
                row.append(ExpEntry.zero())
                continue
            parts = token.split(",")
            if len(parts) > 2:
                raise ExponentFormatError("at most two exponents per entry", line_no, column, path)
            exps = tuple(_parse_int(p, line_no, column, path) for p in parts)
            if any(not 0 <= e < r for e in exps):
                raise ExponentFormatError(f"exponent outside [0,{r})", line_no, column, path)
            if len(exps) == 2 and exps[0] == exps[1]:
                raise ExponentFormatError("binomial exponents must differ", line_no, column, path)
            row.append(ExpEntry(exps))
        rows.append(tuple(row))
    return ExponentMatrix(r, tuple(rows))


def load_exponent_matrix(path: Union[str, Path]) -> ExponentMatrix:
    path = Path(path)
    logger.debug("Loading exponent matrix from %s", path)
    return parse_exponent_matrix(path.read_text(encoding="utf-8"), path=str(path))
