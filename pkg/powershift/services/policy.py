"""
Policy interventions.

Cooperative ownership moves AGI-owned capital into human ownership before
evaluation. The remaining stages transfer realized income from the AGI side to
the human side and leave total income unchanged.
"""

from powershift.exceptions import NegativeLevy, RateOutOfRange
from powershift.models.base import ProductionModel
from powershift.schemas.factors import DistributionReading, FactorInputs, FactorSnapshot, IncomeSplit
from powershift.schemas.policy import PolicySpec
from powershift.services.accounting import reading_from_split, split_income


def _check_rate(name: str, rate: float, *, closed: bool = False) -> None:
    upper_ok = rate <= 1 if closed else rate < 1
    if not (rate >= 0 and upper_ok):
        interval = "[0, 1]" if closed else "[0, 1)"
        raise RateOutOfRange(f"{name} must lie in {interval}, got {rate}")


def apply_coop_ownership(inputs: FactorInputs, coop_share: float) -> FactorInputs:
    """Transfer ``coop_share`` of AGI capital to human ownership; K + K_agi is kept."""
    _check_rate("Cooperative ownership share", coop_share, closed=True)
    if coop_share == 0:
        return inputs
    moved = coop_share * inputs.K_agi
    return inputs.model_copy(update={"K": inputs.K + moved, "K_agi": inputs.K_agi - moved})


def _transfer(agi_income: float, human_income: float, amount: float) -> tuple[float, float]:
    return agi_income - amount, human_income + amount


def apply_proportional_tax(agi_income: float, human_income: float, tau: float) -> tuple[float, float]:
    """Move the fraction ``tau`` of AGI income to the human side."""
    _check_rate("Proportional tax rate", tau)
    return _transfer(agi_income, human_income, tau * agi_income)


def apply_uad(agi_income: float, human_income: float, uad_rate: float) -> tuple[float, float]:
    """Universal AI Dividend: the same mechanics as the proportional tax, configured separately."""
    _check_rate("Universal AI Dividend rate", uad_rate)
    return _transfer(agi_income, human_income, uad_rate * agi_income)


def apply_fixed_levy(agi_income: float, human_income: float, levy: float) -> tuple[float, float]:
    """Move a fixed amount per step, never pushing AGI income below zero."""
    if levy < 0:
        raise NegativeLevy(f"Fixed levy must be non-negative, got {levy}")
    return _transfer(agi_income, human_income, min(levy, max(agi_income, 0.0)))


def redistribute(split: IncomeSplit, spec: PolicySpec) -> IncomeSplit:
    """Income stages of the stack: tax, then UAD, then the fixed levy."""
    agi, human = apply_proportional_tax(split.agi, split.human, spec.proportional_tax)
    agi, human = apply_uad(agi, human, spec.uad_rate)
    agi, human = apply_fixed_levy(agi, human, spec.fixed_levy)
    return IncomeSplit(agi=agi, human=human)


def evaluate_policed(
    model: ProductionModel, inputs: FactorInputs, spec: PolicySpec
) -> tuple[FactorInputs, FactorSnapshot, DistributionReading]:
    """
    Full stack at one point; returns the post-coop inputs, their snapshot, and
    the post-policy reading.

    A share-based levy that has not been anchored is anchored to this point's
    total income.
    """
    owned = apply_coop_ownership(inputs, spec.coop_share)
    snapshot = model.evaluate(owned)
    split = split_income(snapshot, owned)
    spec = spec.anchored(split.total)
    return owned, snapshot, reading_from_split(model, owned, snapshot, redistribute(split, spec))


def apply_policy_stack(model: ProductionModel, inputs: FactorInputs, spec: PolicySpec) -> DistributionReading:
    return evaluate_policed(model, inputs, spec)[2]
