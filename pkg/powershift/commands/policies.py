"""``policies``: baseline and interventions side by side for every family."""

from powershift.services.config_loader import ScenarioConfig
from powershift.services.csv_writer import emit_csv, emit_grid_csv, emit_summary_csv, format_float
from powershift.services.manifest import build_manifest, prepare_output_dir, utc_timestamp, write_manifest
from powershift.services.scenario import run_policy_grid
from powershift.services.svg_plot import emit_plot

GRID_FILE = "policy_grid.csv"
SUMMARY_FILE = "policy_summary.csv"


def register(subparsers) -> None:
    parser = subparsers.add_parser(
        "policies",
        help="Run the policy grid and write trajectory, grid and summary tables plus the plot",
    )
    parser.add_argument("config", help="Scenario TOML file")
    parser.add_argument("--out", default="out", help="Output directory (default: out)")
    parser.set_defaults(handler=policies)


def policies(args) -> int:
    started_at = utc_timestamp()
    config = ScenarioConfig(args.config)
    out_dir = prepare_output_dir(args.out)

    trajectory, grid = run_policy_grid(config.scenario)
    files = [
        emit_csv(trajectory, out_dir / "trajectory.csv"),
        emit_grid_csv(grid, out_dir / GRID_FILE),
        emit_summary_csv(grid, out_dir / SUMMARY_FILE),
        emit_plot(trajectory, out_dir / "powershift.svg"),
    ]
    write_manifest(build_manifest("policies", out_dir, files, config.sha256, started_at), out_dir)

    print(f"{'family':<14}{'policy':<14}{'final S_norm':>16}{'max S_norm':>16}")
    for cell in grid.summary:
        final = format_float(cell.final_S_norm) or "-"
        peak = format_float(cell.max_S_norm) or "-"
        print(f"{cell.family:<14}{cell.policy:<14}{final[:14]:>16}{peak[:14]:>16}")
    return 0
