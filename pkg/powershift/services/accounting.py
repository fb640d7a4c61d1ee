"""
Family-independent income accounting.

Income is always the definitional sum of factor payments; the power shift is
the AGI side's share of it, clamped to [0, 1] and normalized between its
AGI-absent and human-absent limits.
"""

import numpy as np

from powershift.exceptions import ZeroTotalIncome, ZeroTotalLabor
from powershift.models.base import ProductionModel
from powershift.schemas.factors import DistributionReading, FactorInputs, FactorSnapshot, IncomeSplit

LIMIT_EPSILON = 1e-9
DEGENERACY_TOLERANCE = 1e-12

# Masks over (L, L_agi, K, K_agi)
AGI_FACTORS = np.array([False, True, False, True])
HUMAN_FACTORS = ~AGI_FACTORS


def total_income(snapshot: FactorSnapshot, inputs: FactorInputs) -> float:
    """Y = w_L·L + w_agi·L_agi + r_K·K + r_K_agi·K_agi, summed left to right."""
    return (
        snapshot.w_L * inputs.L
        + snapshot.w_agi * inputs.L_agi
        + snapshot.r_K * inputs.K
        + snapshot.r_K_agi * inputs.K_agi
    )


def split_income(snapshot: FactorSnapshot, inputs: FactorInputs) -> IncomeSplit:
    agi = snapshot.w_agi * inputs.L_agi + snapshot.r_K_agi * inputs.K_agi
    return IncomeSplit(agi=agi, human=total_income(snapshot, inputs) - agi)


def productivity(Q: float, inputs: FactorInputs) -> float:
    """Output per unit of total (human + AGI) labor."""
    labor = inputs.L + inputs.L_agi
    if labor == 0:
        raise ZeroTotalLabor("Productivity is undefined when L + L_agi = 0")
    return Q / labor


def clamp_share(value: float) -> tuple[float, bool]:
    """Clamp to [0, 1]; the flag reports whether clamping happened."""
    clamped = min(max(value, 0.0), 1.0)
    return clamped, clamped != value


def agi_share(agi_income: float, income: float) -> float:
    """Unclamped AGI share of income."""
    if income == 0:
        raise ZeroTotalIncome("Power shift is undefined when total income is zero")
    return agi_income / income


def power_shift_raw(snapshot: FactorSnapshot, inputs: FactorInputs) -> tuple[float, bool]:
    """AGI share of total income, clamped to [0, 1], plus the clamp flag."""
    income = total_income(snapshot, inputs)
    agi = snapshot.w_agi * inputs.L_agi + snapshot.r_K_agi * inputs.K_agi
    return clamp_share(agi_share(agi, income))


def _share_at(model: ProductionModel, inputs: FactorInputs) -> float:
    snapshot = model.evaluate(inputs)
    split = split_income(snapshot, inputs)
    return agi_share(split.agi, total_income(snapshot, inputs))


def power_shift_limits(model: ProductionModel, inputs: FactorInputs) -> tuple[float, float]:
    """
    (S_min, S_max): the share with AGI inputs scaled by ε, and with human
    inputs scaled by ε.
    """
    x = inputs.factors
    agi_absent = inputs.with_factors(np.where(AGI_FACTORS, x * LIMIT_EPSILON, x))
    human_absent = inputs.with_factors(np.where(HUMAN_FACTORS, x * LIMIT_EPSILON, x))
    return _share_at(model, agi_absent), _share_at(model, human_absent)


def normalize_power_shift(
    model: ProductionModel, inputs: FactorInputs, s_raw: float
) -> tuple[float, bool]:
    """
    Rescale ``s_raw`` between the family's limits at ``inputs``.

    The limits are ordered before rescaling, so S_norm never falls as
    ``s_raw`` rises (Von Thünen can have S_min > S_max). When they coincide
    (the share does not depend on inputs, as for Cobb-Douglas and Spillover)
    the clamped raw share is returned and the degeneracy flag is set.
    """
    s_min, s_max = power_shift_limits(model, inputs)
    lo, hi = min(s_min, s_max), max(s_min, s_max)
    if hi - lo < DEGENERACY_TOLERANCE:
        return clamp_share(s_raw)[0], True
    return clamp_share((s_raw - lo) / (hi - lo))[0], False


def reading_from_split(
    model: ProductionModel,
    inputs: FactorInputs,
    snapshot: FactorSnapshot,
    split: IncomeSplit,
) -> DistributionReading:
    """Assemble a reading from an (optionally redistributed) income split."""
    income = total_income(snapshot, inputs)
    s_raw, clamped = clamp_share(agi_share(split.agi, income))
    s_norm, degenerate = normalize_power_shift(model, inputs, s_raw)
    return DistributionReading(
        Y=income,
        P=productivity(snapshot.Q, inputs),
        S_raw=s_raw,
        S_norm=s_norm,
        clamped=clamped,
        degenerate_normalization=degenerate,
    )


def read_distribution(model: ProductionModel, inputs: FactorInputs) -> tuple[FactorSnapshot, DistributionReading]:
    """Evaluate the family and derive its unpoliced distribution reading."""
    snapshot = model.evaluate(inputs)
    return snapshot, reading_from_split(model, inputs, snapshot, split_income(snapshot, inputs))
