import math
from typing import ClassVar, Literal

import numpy as np
from pydantic import Field

from powershift.models.base import ProductionModel
from powershift.schemas.factors import FactorInputs, FactorSnapshot


class Translog(ProductionModel):
    """
    ln Q = A + α lnL + β lnL_agi + γ lnK + δ lnK_agi
           + λ₁(lnL)² + λ₂(lnL_agi)² + λ₃(lnK)² + λ₄(lnK_agi)²
           + λ₅ lnL·lnL_agi + λ₆ lnK·lnK_agi

    ``A`` is on the log scale. Each price is Q/xᵢ times the local output
    elasticity, e.g. w_L = (Q/L)·(α + 2λ₁lnL + λ₅lnL_agi). With every λ at
    zero the family is Cobb-Douglas with productivity e^A.
    """

    family: Literal["translog"] = "translog"
    label: ClassVar[str] = "Translog"

    A: float = math.log(1.8)
    alpha: float = 0.55
    beta: float = 0.3
    gamma: float = 0.4
    delta: float = 0.35
    lambda1: float = 0.0
    lambda2: float = 0.0
    lambda3: float = 0.0
    lambda4: float = 0.0
    lambda5: float = Field(default=-0.02, description="Interaction of lnL and lnL_agi")
    lambda6: float = Field(default=-0.02, description="Interaction of lnK and lnK_agi")

    @property
    def first_order(self) -> np.ndarray:
        return np.array([self.alpha, self.beta, self.gamma, self.delta])

    @property
    def own_second_order(self) -> np.ndarray:
        return np.array([self.lambda1, self.lambda2, self.lambda3, self.lambda4])

    def log_output(self, log_x: np.ndarray) -> float:
        ln_L, ln_L_agi, ln_K, ln_K_agi = log_x
        return float(
            self.A
            + self.first_order @ log_x
            + self.own_second_order @ log_x**2
            + self.lambda5 * ln_L * ln_L_agi
            + self.lambda6 * ln_K * ln_K_agi
        )

    def output_elasticities(self, log_x: np.ndarray) -> np.ndarray:
        ln_L, ln_L_agi, ln_K, ln_K_agi = log_x
        cross = np.array([
            self.lambda5 * ln_L_agi,
            self.lambda5 * ln_L,
            self.lambda6 * ln_K_agi,
            self.lambda6 * ln_K,
        ])
        return self.first_order + 2 * self.own_second_order * log_x + cross

    def output(self, inputs: FactorInputs) -> float:
        x = self.check_domain(inputs)
        return math.exp(self.log_output(np.log(x)))

    def marginal_products(self, inputs: FactorInputs) -> np.ndarray:
        x = self.check_domain(inputs)
        log_x = np.log(x)
        Q = math.exp(self.log_output(log_x))
        return Q / x * self.output_elasticities(log_x)


def evaluate_translog(params: Translog, inputs: FactorInputs) -> FactorSnapshot:
    return params.evaluate(inputs)
