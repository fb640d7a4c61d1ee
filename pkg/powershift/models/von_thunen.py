import math
from typing import ClassVar, Literal

import numpy as np
from pydantic import Field

from powershift.models.base import ProductionModel
from powershift.models.cobb_douglas import power_product
from powershift.schemas.factors import FactorInputs, FactorSnapshot


class VonThunen(ProductionModel):
    """
    Cobb-Douglas damped by exponential decay in both labor inputs:
    Q = A·L^α·L_agi^β·K^γ·K_agi^δ·e^(−c·L)·e^(−d·L_agi).

    Wages are Q·(α/L − c) and Q·(β/L_agi − d) and turn negative once decay
    dominates.
    """

    family: Literal["vonthunen"] = "vonthunen"
    label: ClassVar[str] = "Von Thünen"

    A: float = Field(default=1.8, gt=0)
    alpha: float = 0.55
    beta: float = 0.3
    gamma: float = 0.4
    delta: float = 0.35
    c_decay: float = 0.05
    d_decay: float = 0.08

    @property
    def elasticities(self) -> np.ndarray:
        return np.array([self.alpha, self.beta, self.gamma, self.delta])

    @property
    def decay_rates(self) -> np.ndarray:
        return np.array([self.c_decay, self.d_decay, 0.0, 0.0])

    def output(self, inputs: FactorInputs) -> float:
        x = self.check_domain(inputs)
        return power_product(self.A, x, self.elasticities) * math.exp(-(self.decay_rates @ x))

    def marginal_products(self, inputs: FactorInputs) -> np.ndarray:
        x = self.check_domain(inputs)
        return self.output(inputs) * (self.elasticities / x - self.decay_rates)


def evaluate_von_thunen(params: VonThunen, inputs: FactorInputs) -> FactorSnapshot:
    return params.evaluate(inputs)
