from typing import ClassVar, Literal

import numpy as np
from pydantic import Field

from powershift.models.base import ProductionModel
from powershift.schemas.factors import FactorInputs, FactorSnapshot


class Leontief(ProductionModel):
    """
    Fixed proportions: Q = min(L/a, L_agi/b, K/c, K_agi/d).

    Prices are the shadow price of output divided by each input coefficient.
    The shadow price cancels in the power shift and only scales reported
    factor prices.
    """

    family: Literal["leontief"] = "leontief"
    label: ClassVar[str] = "Leontief"
    smooth: ClassVar[bool] = False
    requires_positive_inputs: ClassVar[bool] = False

    a: float = Field(default=1.0, gt=0)
    b: float = Field(default=1.0, gt=0)
    c: float = Field(default=1.0, gt=0)
    d: float = Field(default=1.0, gt=0)
    shadow_price: float = Field(default=1.0, gt=0)

    @property
    def coefficients(self) -> np.ndarray:
        return np.array([self.a, self.b, self.c, self.d])

    def output(self, inputs: FactorInputs) -> float:
        x = self.check_domain(inputs)
        return float(np.min(x / self.coefficients))

    def marginal_products(self, inputs: FactorInputs) -> np.ndarray:
        self.check_domain(inputs)
        return self.shadow_price / self.coefficients


def evaluate_leontief(params: Leontief, inputs: FactorInputs) -> FactorSnapshot:
    return params.evaluate(inputs)
