from pydantic import BaseModel, ConfigDict, Field

BASELINE_POLICY = "baseline"


class PolicySpec(BaseModel):
    """
    One intervention stack.

    Stages always run in the order: cooperative ownership (on inputs), then
    evaluation, proportional tax, Universal AI Dividend, fixed levy (on
    realized income).
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    name: str = BASELINE_POLICY
    proportional_tax: float = Field(default=0.0, ge=0, lt=1)
    uad_rate: float = Field(default=0.0, ge=0, lt=1)
    coop_share: float = Field(default=0.0, ge=0, le=1)
    #: Absolute levy in income units per step
    fixed_levy: float = Field(default=0.0, ge=0)
    #: When set, the levy is this share of the cell's total income at t=0
    fixed_levy_share: float | None = Field(default=None, ge=0)

    @property
    def is_empty(self) -> bool:
        return (
            self.proportional_tax == 0
            and self.uad_rate == 0
            and self.coop_share == 0
            and self.fixed_levy == 0
            and not self.fixed_levy_share
        )

    def anchored(self, anchor_income: float) -> "PolicySpec":
        """Resolve a share-based levy into an absolute amount."""
        if self.fixed_levy_share is None:
            return self
        return self.model_copy(
            update={"fixed_levy": max(self.fixed_levy_share * anchor_income, 0.0), "fixed_levy_share": None}
        )
