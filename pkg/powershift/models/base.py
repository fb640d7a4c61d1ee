from typing import ClassVar

import numpy as np
from pydantic import BaseModel, ConfigDict

from powershift.exceptions import DomainError
from powershift.schemas.factors import FACTOR_NAMES, FactorInputs, FactorSnapshot


class ProductionModel(BaseModel):
    """
    Common contract of the ten production-function families.

    Subclasses declare their parameters as fields, a ``family`` literal used as
    the discriminator, and implement ``output`` and ``marginal_products``.
    ``output`` alone must be enough to recover the prices numerically; the
    finite-difference oracle relies on that.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    #: Human-readable name used in reports and plot legends
    label: ClassVar[str] = ""
    #: False for families whose output is not differentiable everywhere
    smooth: ClassVar[bool] = True
    #: True when log or power terms need strictly positive inputs
    requires_positive_inputs: ClassVar[bool] = True

    def check_domain(self, inputs: FactorInputs) -> np.ndarray:
        x = inputs.factors
        if self.requires_positive_inputs and np.any(x <= 0):
            bad = [name for name, value in zip(FACTOR_NAMES, x) if value <= 0]
            raise DomainError(
                f"{self.label} needs strictly positive inputs; got non-positive {', '.join(bad)}"
            )
        if np.any(x < 0):
            raise DomainError(f"{self.label} inputs must be non-negative")
        return x

    def output(self, inputs: FactorInputs) -> float:
        raise NotImplementedError

    def marginal_products(self, inputs: FactorInputs) -> np.ndarray:
        """Analytic (w_L, w_agi, r_K, r_K_agi)."""
        raise NotImplementedError

    def evaluate(self, inputs: FactorInputs) -> FactorSnapshot:
        Q = self.output(inputs)
        prices = self.marginal_products(inputs)
        if not (np.isfinite(Q) and np.all(np.isfinite(prices))):
            raise DomainError(f"{self.label} evaluation overflowed at {inputs.factors.tolist()}")
        return FactorSnapshot.from_prices(Q, prices)
