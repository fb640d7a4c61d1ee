from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from powershift.models import FAMILIES, parameter_names
from powershift.schemas.factors import DistributionReading, FactorSnapshot
from powershift.schemas.policy import PolicySpec

INPUT_NAMES = ("L", "L_agi", "K", "K_agi", "knowledge_stock")


class RampKind(str, Enum):
    """Shapes a scheduled value can follow over the horizon."""

    CONSTANT = "constant"
    LINEAR = "linear"
    LOGISTIC = "logistic"


class RampScale(str, Enum):
    """Whether interpolation happens on the values or on their logarithms."""

    LINEAR = "linear"
    LOG = "log"


class Ramp(BaseModel):
    """A value scheduled over [0, T], hitting ``start`` at t=0 and ``end`` at t=T."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: RampKind = RampKind.CONSTANT
    start: float
    end: float | None = None
    #: Logistic inflection as a fraction of the horizon
    midpoint: float = Field(default=0.5, ge=0, le=1)
    #: Logistic steepness per step; None means 10 / horizon
    steepness: float | None = Field(default=None, gt=0)
    scale: RampScale = RampScale.LINEAR

    @model_validator(mode="after")
    def validate_shape(self):
        if self.kind != RampKind.CONSTANT:
            if self.end is None:
                raise ValueError(f"A {self.kind.value} ramp needs an end value")
            if self.end == self.start:
                raise ValueError(f"A {self.kind.value} ramp needs start != end; use a constant instead")
        if self.scale == RampScale.LOG and (self.start <= 0 or (self.end is not None and self.end <= 0)):
            raise ValueError("Log-scale ramps need strictly positive endpoints")
        return self

    @classmethod
    def constant(cls, value: float) -> "Ramp":
        return cls(start=value)


def default_input_trajectories() -> dict[str, Ramp]:
    """Human inputs fixed at 1; AGI inputs grow logistically from 0.1 to 10 on a log scale."""
    agi_growth = Ramp(kind=RampKind.LOGISTIC, start=0.1, end=10.0, scale=RampScale.LOG)
    return {
        "L": Ramp.constant(1.0),
        "L_agi": agi_growth,
        "K": Ramp.constant(1.0),
        "K_agi": agi_growth,
        "knowledge_stock": Ramp.constant(1.0),
    }


class Scenario(BaseModel):
    """Everything one simulation run needs."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    horizon: int = Field(default=100, ge=1)
    families: list[str] = Field(default_factory=lambda: list(FAMILIES))
    #: family -> parameter -> schedule; unlisted parameters keep the family default
    parameters: dict[str, dict[str, Ramp]] = Field(default_factory=dict)
    inputs: dict[str, Ramp] = Field(default_factory=default_input_trajectories)
    policies: list[PolicySpec] = Field(default_factory=lambda: [PolicySpec()])

    @field_validator("families")
    @classmethod
    def validate_families(cls, v):
        if not v:
            raise ValueError("At least one family is required")
        unknown = [family for family in v if family not in FAMILIES]
        if unknown:
            raise ValueError(f"Unknown families: {', '.join(unknown)}")
        if len(set(v)) != len(v):
            raise ValueError("Families must not repeat")
        return v

    @field_validator("parameters")
    @classmethod
    def validate_parameters(cls, v):
        for family, ramps in v.items():
            if family not in FAMILIES:
                raise ValueError(f"Unknown family namespace '{family}'")
            unknown = sorted(set(ramps) - set(parameter_names(family)))
            if unknown:
                raise ValueError(f"'{family}' has no parameters named {', '.join(unknown)}")
        return v

    @field_validator("inputs")
    @classmethod
    def validate_inputs(cls, v):
        unknown = sorted(set(v) - set(INPUT_NAMES))
        if unknown:
            raise ValueError(f"Unknown input trajectories: {', '.join(unknown)}")
        defaults = default_input_trajectories()
        return {name: v.get(name, defaults[name]) for name in INPUT_NAMES}

    @field_validator("policies")
    @classmethod
    def validate_policies(cls, v):
        if not v:
            raise ValueError("At least one policy (the baseline) is required")
        names = [policy.name for policy in v]
        if len(set(names)) != len(names):
            raise ValueError("Policy names must be unique")
        return v


class TrajectoryPoint(BaseModel):
    """One step of one family under one policy; failed steps carry ``error`` instead of values."""

    model_config = ConfigDict(frozen=True)

    t: int = Field(ge=0)
    family: str
    policy: str
    reading: DistributionReading | None = None
    snapshot: FactorSnapshot | None = None
    error: str | None = None


class CellSummary(BaseModel):
    """Final and peak power shift of one family × policy series."""

    model_config = ConfigDict(frozen=True)

    family: str
    policy: str
    final_S_raw: float | None
    max_S_raw: float | None
    final_S_norm: float | None
    max_S_norm: float | None


class PolicyGrid(BaseModel):
    """Per-step power shift series aligned on t for every family × policy."""

    model_config = ConfigDict(frozen=True)

    horizon: int
    families: list[str]
    policies: list[str]
    #: "family:policy" -> S_raw per t (None where the step failed)
    s_raw: dict[str, list[float | None]]
    s_norm: dict[str, list[float | None]]
    summary: list[CellSummary]

    @staticmethod
    def key(family: str, policy: str) -> str:
        return f"{family}:{policy}"

    def series(self, family: str, policy: str, metric: str = "S_norm") -> list[float | None]:
        table = self.s_norm if metric == "S_norm" else self.s_raw
        return table[self.key(family, policy)]
