"""SVG charts of experiment results, rendered with plotly."""
import logging
from pathlib import Path
from typing import List, Sequence, Union

import plotly.graph_objects as go
from pydantic import BaseModel, ConfigDict, Field

from ..core.exceptions import DomainError, OutputError
from ..experiments.models import ExperimentResult, Fig4Result, Fig6Result

logger = logging.getLogger(__name__)

PLOT_WIDTH = 800
PLOT_HEIGHT = 560


class PlotSeries(BaseModel):
    """One trace of a chart."""

    model_config = ConfigDict(frozen=True)

    name: str
    x: List[float]
    y: List[float]
    mode: str = Field("lines", pattern="^(lines|markers|lines\\+markers)$")


class AxesSpec(BaseModel):
    """Titles and scales of a chart."""

    model_config = ConfigDict(frozen=True)

    title: str
    x_title: str
    y_title: str
    log_x: bool = False
    log_y: bool = False


def emit_svg_plot(series: Sequence[PlotSeries], axes: AxesSpec, path: Union[str, Path]) -> Path:
    """
    Render series to a standalone SVG file.

    Raises:
        DomainError: If there is nothing to plot
        OutputError: If rendering or writing fails
    """
    if not series or not any(s.x for s in series):
        raise DomainError("Nothing to plot: no points in any series")
    path = Path(path)
    fig = go.Figure()
    for s in series:
        fig.add_trace(go.Scatter(x=s.x, y=s.y, mode=s.mode, name=s.name))
    fig.update_layout(
        title=axes.title,
        xaxis_title=axes.x_title,
        yaxis_title=axes.y_title,
        template="plotly_white",
        width=PLOT_WIDTH,
        height=PLOT_HEIGHT,
    )
    if axes.log_x:
        fig.update_xaxes(type="log")
    if axes.log_y:
        fig.update_yaxes(type="log")
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        fig.write_image(str(path), format="svg")
    except (OSError, ValueError, ImportError) as exc:
        raise OutputError(f"Cannot render plot {path}: {exc}")
    logger.info(f"Wrote plot to {path}")
    return path


def fig4_series(result: Fig4Result) -> List[PlotSeries]:
    """Empirical densities per (N, node) as lines over bin centres."""
    frame = result.to_frame()
    series = []
    for (n, node), group in frame.groupby(['N', 'node'], sort=False):
        width = group['bin_right'] - group['bin_left']
        centres = (group['bin_left'] + group['bin_right']) / 2
        series.append(PlotSeries(
            name=f"{node}, N={n}",
            x=centres.tolist(),
            y=(group['mass'] / width).tolist(),
        ))
    return series


def fig5_series(result: ExperimentResult) -> List[PlotSeries]:
    frame = result.to_frame()
    return [
        PlotSeries(name=column, x=frame['N'].tolist(), y=frame[column].tolist(), mode="lines+markers")
        for column in ('mse_ab', 'mse_ba', 'mse_ae', 'mse_be')
    ]


def fig6_series(result: Fig6Result) -> List[PlotSeries]:
    """A theory line and simulation markers per N."""
    frame = result.to_frame()
    series = []
    for n, group in frame.groupby('N', sort=False):
        series.append(PlotSeries(
            name=f"theory, N={n}", x=group['gamma'].tolist(), y=group['kdr_theory'].tolist(), mode="lines+markers",
        ))
        series.append(PlotSeries(
            name=f"simulation, N={n}", x=group['gamma'].tolist(), y=group['kdr_sim'].tolist(), mode="markers",
        ))
    return series


def keyrates_series(result: ExperimentResult) -> List[PlotSeries]:
    frame = result.to_frame()
    series = []
    for n, group in frame.groupby('N', sort=False):
        for column, label in (('kdr_ab', 'Alice-Bob'), ('kdr_b_ea', 'Bob-Eve(a)'), ('kdr_a_eb', 'Alice-Eve(b)')):
            series.append(PlotSeries(
                name=f"{label}, N={n}", x=group['gamma'].tolist(), y=group[column].tolist(), mode="lines+markers",
            ))
    return series


def plot_result(result: ExperimentResult, path: Union[str, Path]) -> Path:
    """Chart for any experiment that has one."""
    if isinstance(result, Fig4Result):
        return emit_svg_plot(fig4_series(result), AxesSpec(
            title="Empirical density of estimated NPSDS", x_title="estimate", y_title="density",
        ), path)
    if isinstance(result, Fig6Result):
        return emit_svg_plot(fig6_series(result), AxesSpec(
            title="KDR vs normalized quantization interval", x_title="gamma", y_title="KDR", log_y=True,
        ), path)
    if result.experiment == 'fig5':
        return emit_svg_plot(fig5_series(result), AxesSpec(
            title="MSE vs channel observations", x_title="N", y_title="MSE", log_y=True,
        ), path)
    if result.experiment == 'keyrates':
        return emit_svg_plot(keyrates_series(result), AxesSpec(
            title="Pipeline KDR vs normalized quantization interval", x_title="gamma", y_title="KDR", log_y=True,
        ), path)
    raise DomainError(f"No chart defined for experiment {result.experiment!r}")
