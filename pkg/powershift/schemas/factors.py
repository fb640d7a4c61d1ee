import math

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, computed_field, field_validator, model_validator

FACTOR_NAMES = ("L", "L_agi", "K", "K_agi")
PRICE_NAMES = ("w_L", "w_agi", "r_K", "r_K_agi")


class FactorInputs(BaseModel):
    """The four production inputs plus the knowledge stock used by the Spillover family."""

    model_config = ConfigDict(frozen=True)

    L: float = Field(ge=0)
    L_agi: float = Field(ge=0)
    K: float = Field(ge=0)
    K_agi: float = Field(ge=0)
    knowledge_stock: float = Field(default=1.0, ge=0)

    @field_validator("L", "L_agi", "K", "K_agi", "knowledge_stock")
    @classmethod
    def validate_finite(cls, v):
        if not math.isfinite(v):
            raise ValueError("Factor inputs must be finite")
        return v

    @property
    def factors(self) -> np.ndarray:
        """Inputs as an array ordered (L, L_agi, K, K_agi)."""
        return np.array([self.L, self.L_agi, self.K, self.K_agi], dtype=float)

    def with_factors(self, values) -> "FactorInputs":
        """Copy with the four factors replaced; the knowledge stock is kept.

        Skips validation so probe points near the domain boundary reach the
        family's own domain guard.
        """
        L, L_agi, K, K_agi = (float(v) for v in values)
        return self.model_copy(update={"L": L, "L_agi": L_agi, "K": K, "K_agi": K_agi})

    @classmethod
    def unit(cls) -> "FactorInputs":
        return cls(L=1.0, L_agi=1.0, K=1.0, K_agi=1.0)


class FactorSnapshot(BaseModel):
    """Output and the four factor prices at one input point."""

    model_config = ConfigDict(frozen=True)

    Q: float
    w_L: float
    w_agi: float
    r_K: float
    r_K_agi: float

    @model_validator(mode="after")
    def validate_finite(self):
        values = (self.Q, self.w_L, self.w_agi, self.r_K, self.r_K_agi)
        if not all(math.isfinite(v) for v in values):
            raise ValueError(f"Snapshot values must be finite, got {values}")
        return self

    @computed_field
    @property
    def negative_price_flag(self) -> bool:
        return min(self.w_L, self.w_agi, self.r_K, self.r_K_agi) < 0

    @property
    def prices(self) -> np.ndarray:
        """Prices as an array ordered like ``FactorInputs.factors``."""
        return np.array([self.w_L, self.w_agi, self.r_K, self.r_K_agi], dtype=float)

    @classmethod
    def from_prices(cls, Q: float, prices) -> "FactorSnapshot":
        w_L, w_agi, r_K, r_K_agi = (float(p) for p in prices)
        return cls(Q=float(Q), w_L=w_L, w_agi=w_agi, r_K=r_K, r_K_agi=r_K_agi)


class IncomeSplit(BaseModel):
    """Factor income accruing to the AGI side and to the human side."""

    model_config = ConfigDict(frozen=True)

    agi: float
    human: float

    @property
    def total(self) -> float:
        return self.human + self.agi


class DistributionReading(BaseModel):
    """Income, productivity and power shift at one point."""

    model_config = ConfigDict(frozen=True)

    Y: float
    P: float
    S_raw: float = Field(ge=0, le=1)
    S_norm: float = Field(ge=0, le=1)
    clamped: bool = False
    degenerate_normalization: bool = False
