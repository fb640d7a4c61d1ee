from typing import ClassVar, Literal

import numpy as np
from pydantic import Field

from powershift.exceptions import DomainError
from powershift.models.base import ProductionModel
from powershift.models.cobb_douglas import power_product
from powershift.schemas.factors import FactorInputs, FactorSnapshot


class Spillover(ProductionModel):
    """Cobb-Douglas scaled by the knowledge stock: Q = A·L^α·L_agi^β·K^γ·K_agi^δ·S^θ."""

    family: Literal["spillover"] = "spillover"
    label: ClassVar[str] = "Spillover"

    A: float = Field(default=1.8, gt=0)
    alpha: float = 0.55
    beta: float = 0.3
    gamma: float = 0.4
    delta: float = 0.35
    theta: float = 0.45

    @property
    def elasticities(self) -> np.ndarray:
        return np.array([self.alpha, self.beta, self.gamma, self.delta])

    def check_domain(self, inputs: FactorInputs) -> np.ndarray:
        if inputs.knowledge_stock <= 0:
            raise DomainError(f"{self.label} needs a strictly positive knowledge stock")
        return super().check_domain(inputs)

    def spillover_factor(self, inputs: FactorInputs) -> float:
        return inputs.knowledge_stock**self.theta

    def output(self, inputs: FactorInputs) -> float:
        x = self.check_domain(inputs)
        return power_product(self.A, x, self.elasticities) * self.spillover_factor(inputs)

    def marginal_products(self, inputs: FactorInputs) -> np.ndarray:
        x = self.check_domain(inputs)
        return self.elasticities * self.output(inputs) / x


def evaluate_spillover(params: Spillover, inputs: FactorInputs) -> FactorSnapshot:
    return params.evaluate(inputs)
