from scipy.special import expit

from powershift.schemas.scenario import Ramp, RampKind, RampScale

STEEPNESS_SCALE = 10.0


def _progress(ramp: Ramp, t: float, horizon: int) -> float:
    """Fraction of the way from start to end, exactly 0 at t=0 and 1 at t=T."""
    if ramp.kind == RampKind.LINEAR:
        return t / horizon

    steepness = ramp.steepness if ramp.steepness is not None else STEEPNESS_SCALE / horizon
    center = ramp.midpoint * horizon
    low = expit(steepness * (0 - center))
    high = expit(steepness * (horizon - center))
    if t == 0:
        return 0.0
    if t == horizon:
        return 1.0
    return float((expit(steepness * (t - center)) - low) / (high - low))


def ramp_value(ramp: Ramp, t: float, horizon: int) -> float:
    """Value of ``ramp`` at step ``t`` of a run with ``horizon`` steps."""
    if not 0 <= t <= horizon:
        raise ValueError(f"t must lie in [0, {horizon}], got {t}")
    if ramp.kind == RampKind.CONSTANT:
        return ramp.start

    s = _progress(ramp, t, horizon)
    if s == 0.0:
        return ramp.start
    if s == 1.0:
        return ramp.end
    if ramp.scale == RampScale.LOG:
        return ramp.start * (ramp.end / ramp.start) ** s
    return ramp.start * (1 - s) + ramp.end * s
