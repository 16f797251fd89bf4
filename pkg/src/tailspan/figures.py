"""
Figure emission for sweep reports.

Two figure kinds are written as SVG, each with a CSV sidecar holding the plotted
points so results can be checked without comparing images:

    series.svg / series.csv               the analysed series
    gamma_panels.svg / gamma_points.csv   one panel per eta, Gamma marked as dots
"""

import logging
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np
import pandas as pd

from .errors import OutputError, SignalError
from .report import SweepReport
from .signal import Signal

# Import config for figure styling
try:
    from config import get_config
    HAS_CONFIG = True
except ImportError:
    HAS_CONFIG = False

logger = logging.getLogger(__name__)


def _get_style() -> Dict[str, object]:
    """Get figure styling from config or use defaults."""
    if HAS_CONFIG:
        try:
            cfg = get_config().figures
            return asdict(cfg)
        except Exception:
            pass
    return {
        "width": 10.0,
        "panel_height": 2.2,
        "series_color": "#1f77b4",
        "gamma_color": "red",
        "marker_size": 12,
        "svg_hashsalt": "tailspan",
    }


def _get_figures_dir() -> str:
    if HAS_CONFIG:
        try:
            return get_config().report.figures_dir
        except Exception:
            pass
    return "figures"


@dataclass(frozen=True)
class FigureData:
    """Points of one figure: the series and, per eta panel, the highlighted indices."""
    kind: str  # series_plot, gamma_dots
    x: Tuple[int, ...]
    y: Tuple[float, ...]
    highlighted: Dict[float, Tuple[int, ...]] = field(default_factory=dict)


def plotted_values(signal: Signal) -> np.ndarray:
    """Real part for real signals, modulus otherwise."""
    if signal.is_real:
        return signal.values.real.copy()
    return np.abs(signal.values)


def build_figure_data(report: SweepReport, signal: Signal) -> List[FigureData]:
    """
    Collect the plotted points for a report.

    Raises:
        SignalError: If report and signal have different lengths
    """
    if report.n != signal.n:
        raise SignalError(f"report is over N={report.n} but signal has N={signal.n}")
    x = tuple(range(signal.n))
    y = tuple(float(v) for v in plotted_values(signal))
    panels = {row.eta: tuple(sorted(row.gamma_indices)) for row in report.rows}
    for eta, indices in panels.items():
        if any(not 0 <= i < signal.n for i in indices):
            raise SignalError(f"Gamma at eta={eta} has indices outside [0, {signal.n})")
    return [
        FigureData(kind="series_plot", x=x, y=y),
        FigureData(kind="gamma_dots", x=x, y=y, highlighted=panels),
    ]


def _write_csv(frame: pd.DataFrame, path: Path):
    frame.to_csv(path, index=False, float_format="%.17g", lineterminator="\n")


def _save_svg(fig, path: Path, salt: str):
    try:
        with plt.rc_context({"svg.hashsalt": salt}):
            fig.savefig(path, format="svg", metadata={"Date": None})
    finally:
        plt.close(fig)


def _series_figure(data: FigureData, title: str, style: Dict[str, object]):
    fig, ax = plt.subplots(figsize=(style["width"], style["panel_height"] * 1.5))
    ax.plot(data.x, data.y, color=style["series_color"], linewidth=0.8)
    ax.set_xlabel("index (Z_N)")
    ax.set_ylabel("value")
    ax.set_title(title)
    fig.tight_layout()
    return fig


def _gamma_figure(data: FigureData, title: str, style: Dict[str, object]):
    etas = sorted(data.highlighted)
    rows = max(1, len(etas))
    fig, axes = plt.subplots(rows, 1, figsize=(style["width"], style["panel_height"] * rows),
                             sharex=True, squeeze=False)
    y = np.asarray(data.y)
    for ax, eta in zip(axes[:, 0], etas):
        indices = np.asarray(data.highlighted[eta], dtype=np.int64)
        ax.plot(data.x, data.y, color=style["series_color"], linewidth=0.6, alpha=0.6)
        ax.scatter(indices, y[indices] if indices.size else [], s=style["marker_size"],
                   color=style["gamma_color"], zorder=3)
        ax.set_title(f"η = {eta:g}, |Γ| = {indices.size}", fontsize=9)
    axes[-1, 0].set_xlabel("index (Z_N)")
    fig.suptitle(title)
    fig.tight_layout()
    return fig


def emit_figures(report: SweepReport, signal: Signal, out_dir: Path,
                 labels: Optional[Sequence[str]] = None) -> List[Path]:
    """
    Write the series plot and the Gamma panels with their CSV sidecars.

    Args:
        report: Sweep report over the same N as signal
        signal: The analysed signal (centered if the report is)
        out_dir: Report directory; figures go to its figures/ subdirectory
        labels: Optional row labels written to series.csv

    Returns:
        Paths of the written files

    Raises:
        SignalError: If report and signal disagree on N
        OutputError: If the directory cannot be written
    """
    style = _get_style()
    figure_data = {data.kind: data for data in build_figure_data(report, signal)}
    fig_dir = Path(out_dir) / _get_figures_dir()
    try:
        fig_dir.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        raise OutputError(f"cannot create figure directory {fig_dir}: {e}") from e

    series = figure_data["series_plot"]
    gamma = figure_data["gamma_dots"]
    centered = " (mean-centered)" if report.mean_centered else ""
    written: List[Path] = []

    try:
        series_svg = fig_dir / "series.svg"
        _save_svg(_series_figure(series, f"{report.dataset}{centered}", style),
                  series_svg, str(style["svg_hashsalt"]))
        series_csv = fig_dir / "series.csv"
        _write_csv(pd.DataFrame({
            "index": list(series.x),
            "label": list(labels) if labels is not None else [str(i) for i in series.x],
            "value": list(series.y),
        }), series_csv)

        gamma_svg = fig_dir / "gamma_panels.svg"
        _save_svg(_gamma_figure(gamma, f"Large spectrum of {report.dataset}{centered}", style),
                  gamma_svg, str(style["svg_hashsalt"]))
        gamma_csv = fig_dir / "gamma_points.csv"
        points = [
            (eta, index, gamma.y[index])
            for eta in sorted(gamma.highlighted)
            for index in gamma.highlighted[eta]
        ]
        _write_csv(pd.DataFrame(points, columns=["eta", "index", "value"]), gamma_csv)
        written = [series_svg, series_csv, gamma_svg, gamma_csv]
    except OSError as e:
        raise OutputError(f"cannot write figures to {fig_dir}: {e}") from e

    logger.info(f"Figures saved to: {fig_dir}")
    return written
