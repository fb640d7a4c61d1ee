from typing import ClassVar, Literal

import numpy as np
from pydantic import Field

from powershift.models.base import ProductionModel
from powershift.schemas.factors import FactorInputs, FactorSnapshot


def power_product(A: float, x: np.ndarray, exponents: np.ndarray) -> float:
    """A times the product of x_i ** e_i; shared by the Cobb-Douglas relatives."""
    return float(A * np.prod(x ** exponents))


class CobbDouglas(ProductionModel):
    """Q = A·L^α·L_agi^β·K^γ·K_agi^δ."""

    family: Literal["cobb_douglas"] = "cobb_douglas"
    label: ClassVar[str] = "Cobb-Douglas"

    A: float = Field(default=1.8, gt=0)
    alpha: float = 0.55
    beta: float = 0.3
    gamma: float = 0.4
    delta: float = 0.35

    @property
    def elasticities(self) -> np.ndarray:
        return np.array([self.alpha, self.beta, self.gamma, self.delta])

    def output(self, inputs: FactorInputs) -> float:
        x = self.check_domain(inputs)
        return power_product(self.A, x, self.elasticities)

    def marginal_products(self, inputs: FactorInputs) -> np.ndarray:
        x = self.check_domain(inputs)
        return self.elasticities * self.output(inputs) / x


def evaluate_cobb_douglas(params: CobbDouglas, inputs: FactorInputs) -> FactorSnapshot:
    return params.evaluate(inputs)
