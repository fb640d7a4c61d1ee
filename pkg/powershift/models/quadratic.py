from typing import ClassVar, Literal

import numpy as np

from powershift.models.base import ProductionModel
from powershift.schemas.factors import FactorInputs, FactorSnapshot


class Quadratic(ProductionModel):
    """
    Q = A + bL + cL_agi + fL² + gL_agi² + hK² + iK_agi².

    There are no linear capital terms, so capital returns are 2hK and 2iK_agi.
    Negative second-order coefficients can drive prices below zero.
    """

    family: Literal["quadratic"] = "quadratic"
    label: ClassVar[str] = "Quadratic"
    requires_positive_inputs: ClassVar[bool] = False

    A: float = 1.8
    b: float = 1.0
    c: float = 0.7
    f: float = 0.1
    g: float = 0.05
    h: float = 0.1
    i: float = 0.05

    @property
    def linear_terms(self) -> np.ndarray:
        return np.array([self.b, self.c, 0.0, 0.0])

    @property
    def square_terms(self) -> np.ndarray:
        return np.array([self.f, self.g, self.h, self.i])

    def output(self, inputs: FactorInputs) -> float:
        x = self.check_domain(inputs)
        return float(self.A + self.linear_terms @ x + self.square_terms @ x**2)

    def marginal_products(self, inputs: FactorInputs) -> np.ndarray:
        x = self.check_domain(inputs)
        return self.linear_terms + 2 * self.square_terms * x


def evaluate_quadratic(params: Quadratic, inputs: FactorInputs) -> FactorSnapshot:
    return params.evaluate(inputs)
