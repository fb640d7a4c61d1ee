"""
CSV emission for trajectories and policy grids.

Floats are printed with 17 significant digits so every value round-trips, and
rows are written in a fixed order with ``\\n`` line endings; identical runs
therefore produce identical bytes.
"""

import csv
from pathlib import Path

from powershift.exceptions import OutputError, PowerShiftError
from powershift.logging import get_logger
from powershift.models import FAMILIES
from powershift.schemas.scenario import PolicyGrid, TrajectoryPoint

logger = get_logger("csv")

TRAJECTORY_HEADER = [
    "t", "family", "policy", "Q", "Y", "P", "S_raw", "S_norm",
    "w_L", "w_agi", "r_K", "r_K_agi", "clamped", "degenerate",
]
SUMMARY_HEADER = ["family", "policy", "final_S_raw", "max_S_raw", "final_S_norm", "max_S_norm"]


def format_float(value: float | None) -> str:
    """17 significant digits; None becomes an empty field."""
    return "" if value is None else format(value, ".17g")


def format_flag(value: bool) -> str:
    return "true" if value else "false"


def sort_trajectory(trajectory: list[TrajectoryPoint]) -> list[TrajectoryPoint]:
    """Order by family (canonical order), policy (order of first appearance), then t."""
    policy_order: dict[str, int] = {}
    for point in trajectory:
        policy_order.setdefault(point.policy, len(policy_order))

    def family_rank(family: str) -> int:
        return FAMILIES.index(family) if family in FAMILIES else len(FAMILIES)

    return sorted(trajectory, key=lambda p: (family_rank(p.family), p.family, policy_order[p.policy], p.t))


def trajectory_row(point: TrajectoryPoint) -> list[str]:
    head = [str(point.t), point.family, point.policy]
    if point.reading is None or point.snapshot is None:
        return head + [""] * (len(TRAJECTORY_HEADER) - len(head))
    reading, snapshot = point.reading, point.snapshot
    return head + [
        format_float(snapshot.Q),
        format_float(reading.Y),
        format_float(reading.P),
        format_float(reading.S_raw),
        format_float(reading.S_norm),
        format_float(snapshot.w_L),
        format_float(snapshot.w_agi),
        format_float(snapshot.r_K),
        format_float(snapshot.r_K_agi),
        format_flag(reading.clamped),
        format_flag(reading.degenerate_normalization),
    ]


def _write_rows(path: Path, header: list[str], rows) -> Path:
    path = Path(path)
    try:
        with path.open("w", encoding="utf-8", newline="") as handle:
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(header)
            writer.writerows(rows)
    except OSError as exc:
        raise OutputError(f"Cannot write {path}: {exc.strerror}") from exc
    logger.info("Wrote %s", path)
    return path


def emit_csv(trajectory: list[TrajectoryPoint], path: str | Path) -> Path:
    """Write the long-format trajectory table."""
    if not trajectory:
        raise PowerShiftError("Cannot write an empty trajectory")
    return _write_rows(path, TRAJECTORY_HEADER, (trajectory_row(p) for p in sort_trajectory(trajectory)))


def emit_grid_csv(grid: PolicyGrid, path: str | Path) -> Path:
    """Wide table: one S_norm column per family:policy, one row per t."""
    keys = [PolicyGrid.key(family, policy) for family in grid.families for policy in grid.policies]
    rows = (
        [str(t)] + [format_float(grid.s_norm[key][t]) for key in keys]
        for t in range(grid.horizon + 1)
    )
    return _write_rows(path, ["t", *keys], rows)


def emit_summary_csv(grid: PolicyGrid, path: str | Path) -> Path:
    rows = (
        [
            cell.family,
            cell.policy,
            format_float(cell.final_S_raw),
            format_float(cell.max_S_raw),
            format_float(cell.final_S_norm),
            format_float(cell.max_S_norm),
        ]
        for cell in grid.summary
    )
    return _write_rows(path, SUMMARY_HEADER, rows)
