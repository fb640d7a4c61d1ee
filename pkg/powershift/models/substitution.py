"""
Whether AGI can replace human inputs, per family, and what prevents it.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, Optional

from pydantic import BaseModel, ConfigDict

from powershift.models import ProductionModel

# rho at or below this counts as "kept near zero" (complementary or close to Cobb-Douglas)
RHO_NEAR_ZERO = 0.1

Check = Callable[[ProductionModel], bool]


class Verdict(str, Enum):
    """Answer to "can AGI replace humans?" for a family"""
    YES = "yes"
    NO = "no"
    DEPENDS = "depends"


@dataclass
class ReplacementCondition:
    """Replacement verdict and preventative condition of one family"""
    family: str
    verdict: Verdict
    replacement: str
    preventative: str
    replaces: Optional[Check] = None  # None: no parametric test
    prevents: Optional[Check] = None


class ReplacementAssessment(BaseModel):
    model_config = ConfigDict(frozen=True)

    family: str
    verdict: Verdict
    replacement: str
    preventative: str
    replacement_holds: bool | None
    preventative_holds: bool | None


REPLACEMENT_CONDITIONS: Dict[str, ReplacementCondition] = {
    "cobb_douglas": ReplacementCondition(
        family="cobb_douglas",
        verdict=Verdict.YES,
        replacement="Yes, if beta > alpha and delta > gamma",
        preventative="Maintain alpha > beta and gamma > delta",
        replaces=lambda m: m.beta > m.alpha and m.delta > m.gamma,
        prevents=lambda m: m.alpha > m.beta and m.gamma > m.delta,
    ),
    "leontief": ReplacementCondition(
        family="leontief",
        verdict=Verdict.NO,
        replacement="No (fixed ratios)",
        preventative="Require strict labor proportions",
    ),
    "ces": ReplacementCondition(
        family="ces",
        verdict=Verdict.YES,
        replacement="Yes, if rho > 0",
        preventative="Keep rho near 0",
        replaces=lambda m: m.rho > 0,
        prevents=lambda m: m.rho <= RHO_NEAR_ZERO,
    ),
    "linear": ReplacementCondition(
        family="linear",
        verdict=Verdict.YES,
        replacement="Yes, if b >= a",
        preventative="Set a > b",
        replaces=lambda m: m.b >= m.a,
        prevents=lambda m: m.a > m.b,
    ),
    "quadratic": ReplacementCondition(
        family="quadratic",
        verdict=Verdict.NO,
        replacement="No (diminishing returns)",
        preventative="Ensure f > g",
        prevents=lambda m: m.f > m.g,
    ),
    "translog": ReplacementCondition(
        family="translog",
        verdict=Verdict.DEPENDS,
        replacement="Depends on the interaction terms lambda",
        preventative="Keep every lambda > 0",
        prevents=lambda m: min(m.lambda1, m.lambda2, m.lambda3, m.lambda4, m.lambda5, m.lambda6) > 0,
    ),
    "vonthunen": ReplacementCondition(
        family="vonthunen",
        verdict=Verdict.NO,
        replacement="No, due to diminishing returns",
        preventative="Ensure c_decay > d_decay",
        prevents=lambda m: m.c_decay > m.d_decay,
    ),
    "spillover": ReplacementCondition(
        family="spillover",
        verdict=Verdict.NO,
        replacement="No, if human knowledge is needed",
        preventative="Maintain human involvement in the knowledge stock",
    ),
    "power": ReplacementCondition(
        family="power",
        verdict=Verdict.YES,
        replacement="Yes, if AGI benefits from technology",
        preventative="Ensure human capital benefits from technology",
    ),
    "hybrid": ReplacementCondition(
        family="hybrid",
        verdict=Verdict.DEPENDS,
        replacement="Depends on the substitution elasticity (rho > 0 substitutes)",
        preventative="Keep rho near 0, ensuring complementarity",
        replaces=lambda m: m.rho > 0,
        prevents=lambda m: m.rho <= RHO_NEAR_ZERO,
    ),
}


def get_replacement_condition(family: str) -> ReplacementCondition:
    """Get the replacement condition for a given family"""
    return REPLACEMENT_CONDITIONS[family]


def assess_replacement(model: ProductionModel) -> ReplacementAssessment:
    """Evaluate a family's replacement and preventative conditions at its parameters."""
    condition = get_replacement_condition(model.family)
    return ReplacementAssessment(
        family=condition.family,
        verdict=condition.verdict,
        replacement=condition.replacement,
        preventative=condition.preventative,
        replacement_holds=condition.replaces(model) if condition.replaces else None,
        preventative_holds=condition.prevents(model) if condition.prevents else None,
    )
