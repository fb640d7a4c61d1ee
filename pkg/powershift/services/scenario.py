"""
Time evolution of the power shift.

Each family × policy cell is stepped from t=0 to t=T: parameters and inputs
are read off their ramps, the family is evaluated under the policy stack, and
the reading is recorded. A step that fails is recorded with its error and the
run carries on.
"""

from concurrent.futures import ThreadPoolExecutor

from pydantic import ValidationError

from powershift.config import settings
from powershift.exceptions import PowerShiftError
from powershift.logging import get_logger
from powershift.models import ProductionModel, build_model
from powershift.schemas.factors import FactorInputs
from powershift.schemas.policy import PolicySpec
from powershift.schemas.scenario import INPUT_NAMES, CellSummary, PolicyGrid, Scenario, TrajectoryPoint
from powershift.services.policy import evaluate_policed
from powershift.services.ramps import ramp_value

logger = get_logger("scenario")


def resolve_inputs(scenario: Scenario, t: int) -> FactorInputs:
    values = {name: ramp_value(scenario.inputs[name], t, scenario.horizon) for name in INPUT_NAMES}
    return FactorInputs(**values)


def resolve_model(scenario: Scenario, family: str, t: int) -> ProductionModel:
    ramps = scenario.parameters.get(family, {})
    params = {name: ramp_value(ramp, t, scenario.horizon) for name, ramp in ramps.items()}
    return build_model(family, **params)


def _failure_detail(exc: Exception) -> str:
    return exc.detail if isinstance(exc, PowerShiftError) else str(exc).splitlines()[0]


def run_cell(scenario: Scenario, family: str, policy: PolicySpec) -> list[TrajectoryPoint]:
    """Step one family under one policy; a share-based levy is anchored to the first successful step's income."""
    logger.info("Running %s under '%s' for %d steps", family, policy.name, scenario.horizon)
    points = []
    spec = policy
    anchored = False
    for t in range(scenario.horizon + 1):
        try:
            inputs = resolve_inputs(scenario, t)
            model = resolve_model(scenario, family, t)
            _, snapshot, reading = evaluate_policed(model, inputs, spec)
        except (PowerShiftError, ValidationError) as exc:
            detail = _failure_detail(exc)
            logger.warning("%s/%s t=%d failed: %s", family, policy.name, t, detail)
            points.append(TrajectoryPoint(t=t, family=family, policy=policy.name, error=detail))
            continue
        if not anchored:
            spec = policy.anchored(reading.Y)
            anchored = True
        points.append(TrajectoryPoint(t=t, family=family, policy=policy.name, reading=reading, snapshot=snapshot))
    return points


def run_scenario(scenario: Scenario) -> list[TrajectoryPoint]:
    """All cells, ordered by (family, policy, t) in the scenario's own order."""
    cells = [(family, policy) for family in scenario.families for policy in scenario.policies]
    with ThreadPoolExecutor(max_workers=settings.get_worker_count()) as pool:
        results = list(pool.map(lambda cell: run_cell(scenario, *cell), cells))
    trajectory = [point for cell_points in results for point in cell_points]
    failed = sum(point.error is not None for point in trajectory)
    logger.info("Scenario finished: %d points, %d failed", len(trajectory), failed)
    return trajectory


def _summarize(family: str, policy: str, s_raw: list, s_norm: list) -> CellSummary:
    def final(series):
        return series[-1]

    def peak(series):
        values = [v for v in series if v is not None]
        return max(values) if values else None

    return CellSummary(
        family=family,
        policy=policy,
        final_S_raw=final(s_raw),
        max_S_raw=peak(s_raw),
        final_S_norm=final(s_norm),
        max_S_norm=peak(s_norm),
    )


def build_policy_grid(scenario: Scenario, trajectory: list[TrajectoryPoint]) -> PolicyGrid:
    s_raw: dict[str, list] = {}
    s_norm: dict[str, list] = {}
    for family in scenario.families:
        for policy in scenario.policies:
            key = PolicyGrid.key(family, policy.name)
            s_raw[key] = [None] * (scenario.horizon + 1)
            s_norm[key] = [None] * (scenario.horizon + 1)

    for point in trajectory:
        if point.reading is None:
            continue
        key = PolicyGrid.key(point.family, point.policy)
        s_raw[key][point.t] = point.reading.S_raw
        s_norm[key][point.t] = point.reading.S_norm

    summary = [
        _summarize(family, policy.name, s_raw[key], s_norm[key])
        for family in scenario.families
        for policy in scenario.policies
        for key in [PolicyGrid.key(family, policy.name)]
    ]
    return PolicyGrid(
        horizon=scenario.horizon,
        families=list(scenario.families),
        policies=[policy.name for policy in scenario.policies],
        s_raw=s_raw,
        s_norm=s_norm,
        summary=summary,
    )


def run_policy_grid(scenario: Scenario) -> tuple[list[TrajectoryPoint], PolicyGrid]:
    """Run the scenario and align every cell on t for side-by-side comparison."""
    if len(scenario.policies) < 2:
        raise PowerShiftError("A policy grid needs the baseline and at least one intervention")
    trajectory = run_scenario(scenario)
    return trajectory, build_policy_grid(scenario, trajectory)
