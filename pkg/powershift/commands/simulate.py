"""``simulate``: run every family × policy cell of a scenario and write its artifacts."""

from powershift.services.config_loader import ScenarioConfig
from powershift.services.csv_writer import emit_csv
from powershift.services.manifest import build_manifest, prepare_output_dir, utc_timestamp, write_manifest
from powershift.services.scenario import run_scenario
from powershift.services.svg_plot import emit_plot

TRAJECTORY_FILE = "trajectory.csv"
PLOT_FILE = "powershift.svg"


def register(subparsers) -> None:
    parser = subparsers.add_parser("simulate", help="Run a scenario and write trajectory.csv and powershift.svg")
    parser.add_argument("config", help="Scenario TOML file")
    parser.add_argument("--out", default="out", help="Output directory (default: out)")
    parser.set_defaults(handler=simulate)


def simulate(args) -> int:
    started_at = utc_timestamp()
    config = ScenarioConfig(args.config)
    out_dir = prepare_output_dir(args.out)

    trajectory = run_scenario(config.scenario)
    files = [
        emit_csv(trajectory, out_dir / TRAJECTORY_FILE),
        emit_plot(trajectory, out_dir / PLOT_FILE),
    ]
    write_manifest(build_manifest("simulate", out_dir, files, config.sha256, started_at), out_dir)

    failed = sum(point.error is not None for point in trajectory)
    cells = len(config.scenario.families) * len(config.scenario.policies)
    print(f"Simulated {cells} cells over {config.scenario.horizon} steps into {out_dir}")
    if failed:
        print(f"{failed} points failed; see the empty rows in {TRAJECTORY_FILE}")
    return 0
