"""
Finite-difference referee for the analytic marginal products.

Numeric prices are built from a family's ``output`` alone, so a slip in any
hand-derived derivative shows up as a disagreement.
"""

from concurrent.futures import ThreadPoolExecutor
from typing import Iterable

import numpy as np

from powershift.config import settings
from powershift.exceptions import DomainError, NonSmoothFamily, PowerShiftError
from powershift.logging import get_logger
from powershift.models import FAMILY_MODELS, ProductionModel, get_model_class
from powershift.schemas.factors import FACTOR_NAMES, PRICE_NAMES, FactorInputs, FactorSnapshot
from powershift.schemas.oracle import FactorMismatch, ValidationReport

logger = get_logger("oracle")

DEFAULT_REL_STEP = float(np.finfo(float).eps ** (1 / 3))
MAX_REL_STEP = 1e-2
STEP_SHRINK = 10.0
SAMPLING_BOX = (0.1, 10.0)
# Prices far below Q/x are compared against this fraction of Q/max(x, 1)
ERROR_FLOOR_SCALE = 1e-4


def _require_smooth(model: ProductionModel) -> None:
    if not model.smooth:
        raise NonSmoothFamily(f"{model.label} is not differentiable; finite differences do not apply")


def _central_difference(model: ProductionModel, inputs: FactorInputs, index: int, h: float) -> float:
    x = inputs.factors
    up, down = x.copy(), x.copy()
    up[index] += h
    down[index] -= h
    return (model.output(inputs.with_factors(up)) - model.output(inputs.with_factors(down))) / (2 * h)


def fd_marginal_products(
    model: ProductionModel, inputs: FactorInputs, rel_step: float = DEFAULT_REL_STEP
) -> FactorSnapshot:
    """
    Central-difference prices with step rel_step·max(|xᵢ|, 1).

    A probe that leaves the family's domain is retried once with a step ten
    times smaller.
    """
    _require_smooth(model)
    if not 0 < rel_step <= MAX_REL_STEP:
        raise PowerShiftError(f"rel_step must lie in (0, {MAX_REL_STEP}], got {rel_step}")

    x = inputs.factors
    gradient = np.empty(len(x))
    for index, value in enumerate(x):
        h = rel_step * max(abs(value), 1.0)
        try:
            gradient[index] = _central_difference(model, inputs, index, h)
        except DomainError:
            gradient[index] = _central_difference(model, inputs, index, h / STEP_SHRINK)
    return FactorSnapshot.from_prices(model.output(inputs), gradient)


def sample_points(n_points: int, seed: int, box: tuple[float, float] = SAMPLING_BOX) -> np.ndarray:
    """Log-uniform points over box^4, reproducible from ``seed``."""
    low, high = box
    rng = np.random.default_rng(seed)
    return np.exp(rng.uniform(np.log(low), np.log(high), size=(n_points, len(FACTOR_NAMES))))


def _relative_errors(analytic: np.ndarray, numeric: np.ndarray, Q: float, x: np.ndarray) -> np.ndarray:
    """
    |analytic − numeric| over the larger of |analytic|, |numeric| and
    ERROR_FLOOR_SCALE·|Q|/max(xᵢ, 1).

    For prices below the floor this is an absolute error measured in units of
    the floor, not a relative one.
    """
    floor = ERROR_FLOOR_SCALE * abs(Q) / np.maximum(x, 1.0)
    scale = np.maximum.reduce([np.abs(analytic), np.abs(numeric), floor])
    return np.abs(analytic - numeric) / scale


def _check_point(model: ProductionModel, point: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    inputs = FactorInputs(L=point[0], L_agi=point[1], K=point[2], K_agi=point[3])
    analytic = model.evaluate(inputs)
    numeric = fd_marginal_products(model, inputs)
    errors = _relative_errors(analytic.prices, numeric.prices, analytic.Q, point)
    return analytic.prices, numeric.prices, errors


def validate_family(
    model: ProductionModel,
    n_points: int = 100,
    tol: float = 1e-5,
    seed: int = 42,
    box: tuple[float, float] = SAMPLING_BOX,
) -> ValidationReport:
    """Compare analytic and numeric prices on ``n_points`` sampled points."""
    _require_smooth(model)
    if n_points < 1:
        raise PowerShiftError(f"n_points must be at least 1, got {n_points}")

    points = sample_points(n_points, seed, box)
    with ThreadPoolExecutor(max_workers=settings.get_worker_count()) as pool:
        results = list(pool.map(lambda point: _check_point(model, point), points))

    max_errors = np.zeros(len(PRICE_NAMES))
    failures = []
    for index, (point, (analytic, numeric, errors)) in enumerate(zip(points, results)):
        max_errors = np.maximum(max_errors, errors)
        for factor, a, n, err in zip(PRICE_NAMES, analytic, numeric, errors):
            if err > tol:
                failures.append(
                    FactorMismatch(
                        point_index=index,
                        point=point.tolist(),
                        factor=factor,
                        analytic=float(a),
                        numeric=float(n),
                        rel_error=float(err),
                    )
                )

    report = ValidationReport(
        family=model.family,
        points_tested=n_points,
        tolerance=tol,
        seed=seed,
        error_floor=ERROR_FLOOR_SCALE,
        max_rel_error={factor: float(err) for factor, err in zip(PRICE_NAMES, max_errors)},
        failures=failures,
    )
    if report.passed:
        logger.info("%s passed on %d points (max rel error %.2e)", model.label, n_points, max_errors.max())
    else:
        for factor in sorted({f.factor for f in failures}):
            logger.warning("%s: %s disagrees with finite differences", model.label, factor)
    return report


def validate_families(
    families: Iterable[str] | None = None,
    n_points: int = 100,
    tol: float = 1e-5,
    seed: int = 42,
) -> list[ValidationReport]:
    """Validate the default parameterization of every differentiable family."""
    selected = list(families) if families is not None else [
        family for family, model_class in FAMILY_MODELS.items() if model_class.smooth
    ]
    return [validate_family(get_model_class(family)(), n_points, tol, seed) for family in selected]
