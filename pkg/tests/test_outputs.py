"""Tests for the CSV, SVG and manifest artifacts"""
import csv
import json
import xml.etree.ElementTree as ET

import pytest

from powershift.exceptions import PowerShiftError
from powershift.models import FAMILIES
from powershift.schemas.policy import PolicySpec
from powershift.schemas.scenario import Ramp, Scenario, TrajectoryPoint
from powershift.services.csv_writer import (
    SUMMARY_HEADER,
    TRAJECTORY_HEADER,
    emit_csv,
    emit_grid_csv,
    emit_summary_csv,
    format_float,
    sort_trajectory,
)
from powershift.services.manifest import MANIFEST_NAME, build_manifest, sha256_file, write_manifest
from powershift.services.scenario import run_policy_grid, run_scenario
from powershift.services.svg_plot import emit_plot, render_plot

SVG_NS = "{http://www.w3.org/2000/svg}"


def polylines(document: str):
    root = ET.fromstring(document)
    return root.findall(f".//{SVG_NS}polyline")


def read_rows(path):
    with path.open(encoding="utf-8", newline="") as handle:
        return list(csv.reader(handle))


class TestTrajectoryCsv:
    """Long-format trajectory table"""

    def test_header(self, tmp_path):
        path = emit_csv(run_scenario(Scenario(horizon=2, families=["linear"])), tmp_path / "trajectory.csv")
        assert read_rows(path)[0] == TRAJECTORY_HEADER

    def test_single_point_gives_two_lines(self, tmp_path):
        point = run_scenario(Scenario(horizon=1, families=["linear"]))[0]
        path = emit_csv([point], tmp_path / "one.csv")
        lines = path.read_bytes().split(b"\n")
        assert lines[-1] == b""
        assert len(lines) == 3

    def test_float_format_round_trips(self):
        value = 0.1 + 0.2
        assert float(format_float(value)) == value
        assert format_float(None) == ""
        assert format_float(1.0) == "1"

    def test_flags_are_lowercase(self, tmp_path):
        path = emit_csv(run_scenario(Scenario(horizon=1, families=["cobb_douglas"])), tmp_path / "t.csv")
        row = read_rows(path)[1]
        assert row[-2:] == ["false", "true"]

    def test_failed_rows_have_empty_fields(self, tmp_path):
        scenario = Scenario(horizon=1, families=["cobb_douglas"], inputs={"L_agi": Ramp.constant(0.0)})
        path = emit_csv(run_scenario(scenario), tmp_path / "t.csv")
        rows = read_rows(path)
        assert rows[1][:3] == ["0", "cobb_douglas", "baseline"]
        assert rows[1][3:] == [""] * (len(TRAJECTORY_HEADER) - 3)

    def test_rows_sorted_by_family_policy_t(self):
        scenario = Scenario(horizon=1, families=["linear", "ces"], policies=[PolicySpec(), PolicySpec(name="tax", proportional_tax=0.1)])
        ordered = sort_trajectory(list(reversed(run_scenario(scenario))))
        assert [(p.family, p.t) for p in ordered][:2] == [("ces", 0), ("ces", 1)]
        assert [p.policy for p in ordered][:4] == ["tax", "tax", "baseline", "baseline"]

    def test_empty_trajectory(self, tmp_path):
        with pytest.raises(PowerShiftError):
            emit_csv([], tmp_path / "t.csv")

    def test_identical_runs_identical_bytes(self, tmp_path):
        scenario = Scenario(horizon=10)
        first = emit_csv(run_scenario(scenario), tmp_path / "a.csv")
        second = emit_csv(run_scenario(scenario), tmp_path / "b.csv")
        assert first.read_bytes() == second.read_bytes()
        assert b"\r" not in first.read_bytes()


class TestGridCsv:
    """Wide policy comparison tables"""

    def test_grid_columns(self, tmp_path):
        scenario = Scenario(horizon=3, families=["ces"], policies=[PolicySpec(), PolicySpec(name="tax", proportional_tax=0.25)])
        _, grid = run_policy_grid(scenario)
        rows = read_rows(emit_grid_csv(grid, tmp_path / "grid.csv"))
        assert rows[0] == ["t", "ces:baseline", "ces:tax"]
        assert [row[0] for row in rows[1:]] == ["0", "1", "2", "3"]

    def test_summary_rows(self, tmp_path):
        scenario = Scenario(horizon=3, families=["ces", "linear"], policies=[PolicySpec(), PolicySpec(name="tax", proportional_tax=0.25)])
        _, grid = run_policy_grid(scenario)
        rows = read_rows(emit_summary_csv(grid, tmp_path / "summary.csv"))
        assert rows[0] == SUMMARY_HEADER
        assert [row[:2] for row in rows[1:]] == [
            ["ces", "baseline"], ["ces", "tax"], ["linear", "baseline"], ["linear", "tax"],
        ]


class TestPlot:
    """SVG line chart"""

    def test_one_polyline_per_cell(self):
        document = render_plot(run_scenario(Scenario(horizon=5)))
        assert len(polylines(document)) == len(FAMILIES)

    def test_single_family(self):
        document = render_plot(run_scenario(Scenario(horizon=5, families=["ces"])))
        lines = polylines(document)
        assert len(lines) == 1
        assert len(lines[0].get("points").split()) == 6

    def test_baseline_solid_interventions_dashed(self):
        scenario = Scenario(horizon=3, families=["ces"], policies=[PolicySpec(), PolicySpec(name="tax", proportional_tax=0.25)])
        baseline, taxed = polylines(render_plot(run_scenario(scenario)))
        assert baseline.get("stroke-dasharray") is None
        assert taxed.get("stroke-dasharray") is not None
        assert baseline.get("stroke") == taxed.get("stroke")

    def test_families_get_distinct_colours(self):
        document = render_plot(run_scenario(Scenario(horizon=2)))
        assert len({line.get("stroke") for line in polylines(document)}) == len(FAMILIES)

    def test_legend_labels(self):
        root = ET.fromstring(render_plot(run_scenario(Scenario(horizon=2, families=["vonthunen"]))))
        legend = root.find(f"{SVG_NS}g[@id='legend']")
        assert [text.text for text in legend.findall(f"{SVG_NS}text")] == ["Von Thünen / baseline"]

    def test_failed_points_are_skipped(self):
        scenario = Scenario(horizon=2, families=["cobb_douglas", "linear"], inputs={"L_agi": Ramp.constant(0.0)})
        first, second = polylines(render_plot(run_scenario(scenario)))
        assert first.get("points") == ""
        assert len(second.get("points").split()) == 3

    def test_deterministic_bytes(self, tmp_path):
        scenario = Scenario(horizon=10)
        first = emit_plot(run_scenario(scenario), tmp_path / "a.svg")
        second = emit_plot(run_scenario(scenario), tmp_path / "b.svg")
        assert first.read_bytes() == second.read_bytes()

    def test_empty_trajectory(self):
        with pytest.raises(PowerShiftError):
            render_plot([])

    def test_policy_names_are_escaped(self):
        point = TrajectoryPoint(t=0, family="linear", policy="a<b", error="boom")
        ET.fromstring(render_plot([point]))


class TestManifest:
    """Provenance record"""

    def test_hashes_and_relative_paths(self, tmp_path):
        (tmp_path / "sub").mkdir()
        b = tmp_path / "sub" / "b.txt"
        a = tmp_path / "a.txt"
        b.write_bytes(b"second")
        a.write_bytes(b"")
        manifest = build_manifest("simulate", tmp_path, [b, a], config_sha256="abc", started_at="2026-01-01T00:00:00Z")
        assert [f.path for f in manifest.files] == ["a.txt", "sub/b.txt"]
        assert manifest.files[0].sha256 == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
        assert manifest.files[1].sha256 == sha256_file(b)

    def test_written_with_sorted_keys(self, tmp_path):
        manifest = build_manifest("validate", tmp_path, [])
        path = write_manifest(manifest, tmp_path)
        assert path.name == MANIFEST_NAME
        text = path.read_text(encoding="utf-8")
        document = json.loads(text)
        assert list(document) == sorted(document)
        assert document["config_sha256"] is None
        assert document["started_at"].endswith("Z")
        assert text.endswith("}\n")
