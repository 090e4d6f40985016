import pytest

from QCLDPC.errors import InvalidParameterError
from QCLDPC.guardrails import (
    ConstructionGuardrail,
    ParameterValidationResult,
    SimulationGuardrail,
    format_validation_result,
    multiplicative_order,
    unit_group_size,
)


class TestNumberTheory:
    @pytest.mark.parametrize("a,modulus,order", [(2, 15, 4), (2, 7, 3), (3, 7, 6), (3, 13, 3), (1, 9, 1)])
    def test_order(self, a, modulus, order):
        assert multiplicative_order(a, modulus) == order

    def test_non_unit(self):
        assert multiplicative_order(3, 15) is None
        assert multiplicative_order(0, 7) is None

    @pytest.mark.parametrize("modulus,size", [(15, 8), (7, 6), (31, 30), (16, 8)])
    def test_unit_group(self, modulus, size):
        assert unit_group_size(modulus) == size


class TestSimulationGuardrail:
    def test_valid(self):
        result = SimulationGuardrail.validate_sim_params(0.01, 10_000, 100, 1)
        assert result.is_valid
        assert not result.errors and not result.warnings
        assert result.corrected_values is None

    @pytest.mark.parametrize("args,fragment", [
        ((-0.1, 10, 10, 0), "0 <= f_m < 1/3"),
        ((0.34, 10, 10, 0), "0 <= f_m < 1/3"),
        ((0.3, 10, 10, 0), "decoder prior"),
        ((0.01, 0, 10, 0), "trials must be >= 1"),
        ((0.01, 10**8, 10, 0), "trials must be <="),
        ((0.01, 10, 0, 0), "max_iter must be >= 1"),
        ((0.01, 10, 10**5, 0), "max_iter must be <="),
    ])
    def test_errors(self, args, fragment):
        result = SimulationGuardrail.validate_sim_params(*args)
        assert not result.is_valid
        assert any(fragment in error for error in result.errors)

    def test_all_errors_reported(self):
        result = SimulationGuardrail.validate_sim_params(0.5, 0, 0, 0)
        assert len(result.errors) == 3

    def test_high_noise_warns(self):
        result = SimulationGuardrail.validate_sim_params(0.15, 10, 10, 0)
        assert result.is_valid
        assert result.warnings

    def test_negative_seed_corrected(self):
        result = SimulationGuardrail.validate_sim_params(0.01, 10, 10, -7)
        assert result.is_valid
        assert result.corrected_values == {"seed": 7}


class TestConstructionGuardrail:
    def test_published_parameters(self):
        assert ConstructionGuardrail.validate_hagiwara_imai(3, 3, 15, 2, 3).is_valid

    def test_every_violation_is_named(self):
        result = ConstructionGuardrail.validate_hagiwara_imai(9, 0, 15, 2, 4)
        assert len(result.errors) == 3

    def test_mackay(self):
        assert ConstructionGuardrail.validate_mackay(128, 48, 8).is_valid
        assert ConstructionGuardrail.validate_mackay(128, 48, 8, [0, 5, 9, 20]).is_valid
        assert not ConstructionGuardrail.validate_mackay(128, 0, 8).is_valid


class TestFormatting:
    def test_failed(self):
        result = ParameterValidationResult(is_valid=False, errors=["bad f_m"], warnings=["careful"],
                                           corrected_values={"seed": 3})
        text = format_validation_result(result)
        assert "Validation failed" in text
        assert "  - bad f_m" in text
        assert "careful" in text
        assert "  - seed: 3" in text

    def test_passed(self):
        result = ParameterValidationResult(is_valid=True, errors=[], warnings=[])
        assert "Validation passed" in format_validation_result(result)

    def test_error_message_joins_all_errors(self):
        result = ParameterValidationResult(is_valid=False, errors=["a", "b"], warnings=[])
        error = InvalidParameterError(result, "Invalid run")
        assert str(error) == "Invalid run: a; b"
        assert error.result is result
        assert isinstance(error, ValueError)
