from typing import ClassVar, Literal

import numpy as np
from pydantic import Field, field_validator

from powershift.models.base import ProductionModel
from powershift.models.ces import nested_marginal_products
from powershift.schemas.factors import FactorInputs, FactorSnapshot

UNIT_WEIGHTS = np.ones(4)


class Power(ProductionModel):
    """Q = A·(L^p + L_agi^p + K^p + K_agi^p)^(1/p); an unweighted CES."""

    family: Literal["power"] = "power"
    label: ClassVar[str] = "Power"

    A: float = Field(default=1.8, gt=0)
    p: float = 1.5

    @field_validator("p")
    @classmethod
    def validate_p(cls, v):
        if v == 0:
            raise ValueError("p must be non-zero")
        return v

    def output(self, inputs: FactorInputs) -> float:
        x = self.check_domain(inputs)
        return float(self.A * np.sum(x**self.p) ** (1 / self.p))

    def marginal_products(self, inputs: FactorInputs) -> np.ndarray:
        x = self.check_domain(inputs)
        return nested_marginal_products(self.A, UNIT_WEIGHTS, x, self.p)


def evaluate_power(params: Power, inputs: FactorInputs) -> FactorSnapshot:
    return params.evaluate(inputs)
