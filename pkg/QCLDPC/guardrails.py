"""
Guardrails Module for the QC-LDPC toolkit
Parameter validation for constructions and Monte Carlo runs.
"""

from math import gcd
from typing import List, Optional, Sequence

from pydantic import BaseModel


class ParameterValidationResult(BaseModel):
    """Result of parameter validation."""
    is_valid: bool
    errors: List[str]
    warnings: List[str]
    corrected_values: Optional[dict] = None


def multiplicative_order(a: int, modulus: int) -> Optional[int]:
    """Order of a in Z_modulus^*, or None if a is not a unit."""
    if modulus < 2 or gcd(a % modulus, modulus) != 1:
        return None
    value, order = a % modulus, 1
    while value != 1 % modulus:
        value = (value * a) % modulus
        order += 1
    return order


def unit_group_size(modulus: int) -> int:
    """|Z_modulus^*| (Euler's totient)."""
    return sum(1 for z in range(1, modulus) if gcd(z, modulus) == 1)


class SimulationGuardrail:
    """
    Validates Monte Carlo parameters before a run.
    Applied by SimConfig and by the CLI.
    """

    MAX_TRIALS = 10_000_000
    MAX_ITER = 10_000
    # SPA prior is 2*f_m and must stay below 1/2
    MAX_DECODABLE_FM = 0.25

    @classmethod
    def validate_sim_params(
        cls,
        f_m: float,
        trials: int,
        max_iter: int,
        seed: int = 0,
    ) -> ParameterValidationResult:
        errors = []
        warnings = []
        corrected = {}

        if not 0.0 <= f_m < 1.0 / 3.0:
            errors.append(f"f_m must satisfy 0 <= f_m < 1/3, got {f_m}")
        elif f_m >= cls.MAX_DECODABLE_FM:
            errors.append(
                f"f_m={f_m} gives a decoder prior 2*f_m >= 1/2; "
                f"use f_m < {cls.MAX_DECODABLE_FM}"
            )
        elif f_m > 0.1:
            warnings.append(f"f_m={f_m} is far above the threshold region; expect BLER near 1")

        if trials < 1:
            errors.append(f"trials must be >= 1, got {trials}")
        elif trials > cls.MAX_TRIALS:
            errors.append(f"trials must be <= {cls.MAX_TRIALS}, got {trials}")

        if max_iter < 1:
            errors.append(f"max_iter must be >= 1, got {max_iter}")
        elif max_iter > cls.MAX_ITER:
            errors.append(f"max_iter must be <= {cls.MAX_ITER}, got {max_iter}")

        if seed < 0:
            warnings.append("Negative seed provided - will use absolute value")
            corrected["seed"] = abs(seed)

        return ParameterValidationResult(
            is_valid=len(errors) == 0,
            errors=errors,
            warnings=warnings,
            corrected_values=corrected if corrected else None,
        )


class ConstructionGuardrail:
    """
    Validates the preconditions of the named code constructions.
    Every violated precondition is reported, each under its own message.
    """

    @classmethod
    def validate_hagiwara_imai(
        cls, J: int, K: int, P: int, sigma: int, tau: int
    ) -> ParameterValidationResult:
        errors = []
        warnings = []

        if P <= 2:
            errors.append(f"P must be greater than 2, got {P}")
            return ParameterValidationResult(is_valid=False, errors=errors, warnings=warnings)
        if any(P % f == 0 for f in range(2, int(P ** 0.5) + 1)):
            warnings.append(f"P={P} is composite; the components may contain 4-cycles")

        order = multiplicative_order(sigma, P)
        if order is None:
            errors.append(f"sigma={sigma} is not a unit modulo {P}")
        elif order == unit_group_size(P):
            errors.append(
                f"ord(sigma)={order} equals |Z_{P}^*|; sigma must not generate the unit group"
            )

        if tau % P == 0:
            errors.append(f"tau={tau} is zero modulo {P}")
        elif order is not None:
            if multiplicative_order(tau, P) is None:
                warnings.append(f"tau={tau} is not a unit modulo {P}")
            subgroup = {pow(sigma, e, P) for e in range(order)}
            if tau % P in subgroup:
                errors.append(
                    f"tau={tau} lies in the subgroup generated by sigma={sigma}; "
                    "it must lie outside it"
                )

        if order is not None:
            half = order
            if not 1 <= J <= half:
                errors.append(f"J must satisfy 1 <= J <= L/2 = {half}, got {J}")
            if not 1 <= K <= half:
                errors.append(f"K must satisfy 1 <= K <= L/2 = {half}, got {K}")

        return ParameterValidationResult(
            is_valid=len(errors) == 0, errors=errors, warnings=warnings
        )

    @classmethod
    def validate_mackay(
        cls, n: int, m: int, L: int, first_row: Optional[Sequence[int]] = None
    ) -> ParameterValidationResult:
        errors = []
        warnings = []

        if n < 2 or n % 2:
            errors.append(f"n must be a positive even integer, got {n}")
        if L < 2 or L % 2:
            errors.append(f"L must be a positive even integer, got {L}")
        if m < 1:
            errors.append(f"m must be >= 1, got {m}")
        elif n >= 2 and m > n // 2:
            errors.append(f"m must be <= n/2 = {n // 2}, got {m}")

        if first_row is not None and not errors:
            support = {e % (n // 2) for e in first_row}
            if len(support) != len(list(first_row)):
                errors.append("first_row contains repeated positions modulo n/2")
            elif len(support) != L // 2:
                errors.append(f"first_row must have weight L/2 = {L // 2}, got {len(support)}")

        return ParameterValidationResult(
            is_valid=len(errors) == 0, errors=errors, warnings=warnings
        )


def format_validation_result(result: ParameterValidationResult) -> str:
    """Format a validation result for display."""
    lines = []

    if result.is_valid:
        lines.append("✅ Validation passed")
    else:
        lines.append("❌ Validation failed")

    if result.errors:
        lines.append("\nErrors:")
        for error in result.errors:
            lines.append(f"  - {error}")

    if result.warnings:
        lines.append("\nWarnings:")
        for warning in result.warnings:
            lines.append(f"  - ⚠️ {warning}")

    if result.corrected_values:
        lines.append("\nAuto-corrected values:")
        for key, value in result.corrected_values.items():
            lines.append(f"  - {key}: {value}")

    return "\n".join(lines)
