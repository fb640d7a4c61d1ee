from typing import ClassVar, Literal

import numpy as np

from powershift.models.base import ProductionModel
from powershift.schemas.factors import FactorInputs, FactorSnapshot


class Linear(ProductionModel):
    """Perfect substitutes: Q = aL + bL_agi + cK + dK_agi, prices are the weights."""

    family: Literal["linear"] = "linear"
    label: ClassVar[str] = "Linear"
    requires_positive_inputs: ClassVar[bool] = False

    a: float = 1.0
    b: float = 1.3
    c: float = 1.0
    d: float = 1.0

    @property
    def weights(self) -> np.ndarray:
        return np.array([self.a, self.b, self.c, self.d])

    def output(self, inputs: FactorInputs) -> float:
        x = self.check_domain(inputs)
        return float(self.weights @ x)

    def marginal_products(self, inputs: FactorInputs) -> np.ndarray:
        self.check_domain(inputs)
        return self.weights.copy()


def evaluate_linear(params: Linear, inputs: FactorInputs) -> FactorSnapshot:
    return params.evaluate(inputs)
