from pydantic import BaseModel, ConfigDict, computed_field


class FactorMismatch(BaseModel):
    """One analytic price that disagrees with its central difference."""

    model_config = ConfigDict(frozen=True)

    point_index: int
    point: list[float]
    factor: str
    analytic: float
    numeric: float
    rel_error: float


class ValidationReport(BaseModel):
    """
    Per-price worst error of one family.

    Errors are scaled by max(|analytic|, |numeric|, error_floor·|Q|/max(xᵢ, 1)),
    so prices far below Q are checked against an absolute floor.
    """

    model_config = ConfigDict(frozen=True)

    family: str
    points_tested: int
    tolerance: float
    seed: int
    error_floor: float = 0.0
    max_rel_error: dict[str, float]
    failures: list[FactorMismatch]

    @computed_field
    @property
    def passed(self) -> bool:
        return not self.failures
