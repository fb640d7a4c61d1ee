from typing import ClassVar, Literal

import numpy as np
from pydantic import Field, field_validator, model_validator

from powershift.exceptions import DomainError
from powershift.models.base import ProductionModel
from powershift.models.ces import nested_marginal_products
from powershift.schemas.factors import FactorInputs, FactorSnapshot


class Hybrid(ProductionModel):
    """
    CES with paired human/AGI weights:
    Q = A·(λL^ρ + (1−λ)L_agi^ρ + μK^ρ + (1−μ)K_agi^ρ)^(1/ρ).

    ``mu_hyb`` defaults to ``lambda_hyb`` when not given.
    """

    family: Literal["hybrid"] = "hybrid"
    label: ClassVar[str] = "Hybrid"

    A: float = Field(default=1.8, gt=0)
    lambda_hyb: float = Field(default=0.65, ge=0, le=1)
    mu_hyb: float = Field(default=0.65, ge=0, le=1)
    rho: float = 0.9

    @model_validator(mode="before")
    @classmethod
    def default_mu_to_lambda(cls, data):
        if isinstance(data, dict) and data.get("mu_hyb") is None:
            data = {**data, "mu_hyb": data.get("lambda_hyb", 0.65)}
        return data

    @field_validator("rho")
    @classmethod
    def validate_rho(cls, v):
        if v == 0:
            raise ValueError("rho must be non-zero")
        return v

    @property
    def weights(self) -> np.ndarray:
        return np.array([self.lambda_hyb, 1 - self.lambda_hyb, self.mu_hyb, 1 - self.mu_hyb])

    def output(self, inputs: FactorInputs) -> float:
        x = self.check_domain(inputs)
        inner = self.weights @ x**self.rho
        if inner <= 0:
            raise DomainError(f"{self.label} aggregate is zero at {x.tolist()}")
        return float(self.A * inner ** (1 / self.rho))

    def marginal_products(self, inputs: FactorInputs) -> np.ndarray:
        x = self.check_domain(inputs)
        return nested_marginal_products(self.A, self.weights, x, self.rho)


def evaluate_hybrid(params: Hybrid, inputs: FactorInputs) -> FactorSnapshot:
    return params.evaluate(inputs)
