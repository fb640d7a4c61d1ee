from typing import ClassVar, Literal

import numpy as np
from pydantic import Field, field_validator, model_validator

from powershift.exceptions import DomainError
from powershift.models.base import ProductionModel
from powershift.schemas.factors import FactorInputs, FactorSnapshot


def nested_marginal_products(A: float, weights: np.ndarray, x: np.ndarray, rho: float) -> np.ndarray:
    """
    Chain rule for Q = A·(Σ wᵢ·xᵢ^ρ)^(1/ρ): ∂Q/∂xᵢ = A·wᵢ·xᵢ^(ρ−1)·(Σ)^(1/ρ−1).

    Equivalent to A^ρ·wᵢ·xᵢ^(ρ−1)·Q^(1−ρ).
    """
    inner = weights @ x**rho
    return A * weights * x ** (rho - 1) * inner ** (1 / rho - 1)


class CES(ProductionModel):
    """Q = A·(δ₁L^ρ + δ₂L_agi^ρ + δ₃K^ρ + δ₄K_agi^ρ)^(1/ρ)."""

    family: Literal["ces"] = "ces"
    label: ClassVar[str] = "CES"

    A: float = Field(default=1.8, gt=0)
    delta1: float = Field(default=0.25, ge=0)
    delta2: float = Field(default=0.25, ge=0)
    delta3: float = Field(default=0.25, ge=0)
    delta4: float = Field(default=0.25, ge=0)
    rho: float = 0.9

    @field_validator("rho")
    @classmethod
    def validate_rho(cls, v):
        if v == 0:
            raise ValueError("rho must be non-zero; the rho -> 0 limit is Cobb-Douglas")
        return v

    @model_validator(mode="after")
    def validate_weights(self):
        if self.weights.sum() <= 0:
            raise ValueError("At least one CES weight must be positive")
        return self

    @property
    def weights(self) -> np.ndarray:
        return np.array([self.delta1, self.delta2, self.delta3, self.delta4])

    def check_domain(self, inputs: FactorInputs) -> np.ndarray:
        x = inputs.factors
        # Zero inputs are harmless only for positive integer exponents
        if self.rho > 0 and float(self.rho).is_integer():
            if np.any(x < 0):
                raise DomainError(f"{self.label} inputs must be non-negative")
            return x
        return super().check_domain(inputs)

    def output(self, inputs: FactorInputs) -> float:
        x = self.check_domain(inputs)
        inner = self.weights @ x**self.rho
        if inner <= 0:
            raise DomainError(f"{self.label} aggregate is zero at {x.tolist()}")
        return float(self.A * inner ** (1 / self.rho))

    def marginal_products(self, inputs: FactorInputs) -> np.ndarray:
        x = self.check_domain(inputs)
        return nested_marginal_products(self.A, self.weights, x, self.rho)


def evaluate_ces(params: CES, inputs: FactorInputs) -> FactorSnapshot:
    return params.evaluate(inputs)
