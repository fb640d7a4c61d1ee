"""
SVG 1.1 line chart of the normalized power shift over time.

One polyline per family × policy. Colour identifies the family; the baseline
policy is drawn solid and every intervention dashed. Coordinates are printed
with fixed precision and elements are emitted in trajectory order, so the
output bytes depend only on the data.
"""

from html import escape
from pathlib import Path

from powershift.exceptions import OutputError, PowerShiftError
from powershift.logging import get_logger
from powershift.models import FAMILY_MODELS
from powershift.schemas.policy import BASELINE_POLICY
from powershift.schemas.scenario import TrajectoryPoint
from powershift.services.csv_writer import sort_trajectory

logger = get_logger("svg")

PALETTE = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
)
DASH_PATTERNS = ("6,3", "2,3", "8,3,2,3", "1,2")

WIDTH = 960
MIN_HEIGHT = 540
MARGIN_LEFT = 60
MARGIN_TOP = 40
MARGIN_BOTTOM = 50
LEGEND_WIDTH = 260
LEGEND_ROW = 16


class SVG:
    def __init__(self):
        self.svg = ""

    def header(self, width, height):
        self.svg += f"""<?xml version="1.0" standalone="no"?>
<!DOCTYPE svg PUBLIC "-//W3C//DTD SVG 1.1//EN" "http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd">
<svg version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}" xmlns="http://www.w3.org/2000/svg">
"""

    def group_start(self, id, extra=""):
        self.svg += f'<g id="{id}" {extra}>\n' if extra else f'<g id="{id}">\n'

    def group_end(self):
        self.svg += "</g>\n"

    def line(self, x1, y1, x2, y2, stroke, extra=""):
        tail = f" {extra}" if extra else ""
        self.svg += f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" stroke="{stroke}"{tail}/>\n'

    def polyline(self, points, stroke, extra=""):
        coords = " ".join(f"{x:.2f},{y:.2f}" for x, y in points)
        tail = f" {extra}" if extra else ""
        self.svg += f'<polyline points="{coords}" fill="none" stroke="{stroke}" stroke-width="1.5"{tail}/>\n'

    def text(self, x, y, string, extra=""):
        tail = f" {extra}" if extra else ""
        self.svg += f'<text x="{x:.2f}" y="{y:.2f}"{tail}>{escape(string)}</text>\n'

    def get_svg(self):
        return f"{self.svg}</svg>\n"


def _series(trajectory: list[TrajectoryPoint]) -> dict[tuple[str, str], list[tuple[int, float]]]:
    series: dict[tuple[str, str], list[tuple[int, float]]] = {}
    for point in sort_trajectory(trajectory):
        values = series.setdefault((point.family, point.policy), [])
        if point.reading is not None:
            values.append((point.t, point.reading.S_norm))
    return series


def _family_label(family: str) -> str:
    model_class = FAMILY_MODELS.get(family)
    return model_class.label if model_class is not None else family


def render_plot(trajectory: list[TrajectoryPoint]) -> str:
    """The chart as an SVG document string."""
    if not trajectory:
        raise PowerShiftError("Cannot plot an empty trajectory")

    series = _series(trajectory)
    horizon = max(max(point.t for point in trajectory), 1)
    height = max(MIN_HEIGHT, MARGIN_TOP + LEGEND_ROW * (len(series) + 1))
    plot_width = WIDTH - MARGIN_LEFT - LEGEND_WIDTH - 20
    plot_height = height - MARGIN_TOP - MARGIN_BOTTOM

    def x_of(t):
        return MARGIN_LEFT + plot_width * t / horizon

    def y_of(s):
        return MARGIN_TOP + plot_height * (1 - s)

    families = list(dict.fromkeys(family for family, _ in series))
    policies = [p for p in dict.fromkeys(policy for _, policy in series) if p != BASELINE_POLICY]
    colours = {family: PALETTE[i % len(PALETTE)] for i, family in enumerate(families)}
    dashes = {policy: DASH_PATTERNS[i % len(DASH_PATTERNS)] for i, policy in enumerate(policies)}

    def stroke_extra(policy):
        return "" if policy == BASELINE_POLICY else f'stroke-dasharray="{dashes[policy]}"'

    svg = SVG()
    svg.header(WIDTH, height)
    svg.text(MARGIN_LEFT, 24, "Normalized power shift over time", 'font-family="sans-serif" font-size="16"')

    svg.group_start("axes", 'font-family="sans-serif" font-size="11"')
    svg.line(x_of(0), y_of(0), x_of(horizon), y_of(0), "#000000")
    svg.line(x_of(0), y_of(0), x_of(0), y_of(1), "#000000")
    for i in range(5):
        t = horizon * i / 4
        svg.line(x_of(t), y_of(0), x_of(t), y_of(0) + 5, "#000000")
        svg.text(x_of(t), y_of(0) + 18, f"{t:g}", 'text-anchor="middle"')
        s = i / 4
        svg.line(x_of(0) - 5, y_of(s), x_of(0), y_of(s), "#000000")
        svg.text(x_of(0) - 8, y_of(s) + 4, f"{s:g}", 'text-anchor="end"')
    svg.text(x_of(horizon / 2), height - 12, "t", 'text-anchor="middle"')
    svg.text(16, y_of(0.5), "S_norm", f'transform="rotate(-90 16 {y_of(0.5):.2f})" text-anchor="middle"')
    svg.group_end()

    svg.group_start("series")
    for (family, policy), values in series.items():
        svg.polyline([(x_of(t), y_of(s)) for t, s in values], colours[family], stroke_extra(policy))
    svg.group_end()

    legend_x = WIDTH - LEGEND_WIDTH
    svg.group_start("legend", 'font-family="sans-serif" font-size="11"')
    for row, (family, policy) in enumerate(series, start=1):
        y = MARGIN_TOP + LEGEND_ROW * row
        svg.line(legend_x, y - 4, legend_x + 24, y - 4, colours[family], stroke_extra(policy))
        svg.text(legend_x + 30, y, f"{_family_label(family)} / {policy}")
    svg.group_end()

    return svg.get_svg()


def emit_plot(trajectory: list[TrajectoryPoint], path: str | Path) -> Path:
    path = Path(path)
    document = render_plot(trajectory)
    try:
        path.write_text(document, encoding="utf-8", newline="\n")
    except OSError as exc:
        raise OutputError(f"Cannot write {path}: {exc.strerror}") from exc
    logger.info("Wrote %s", path)
    return path
