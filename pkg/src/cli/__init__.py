"""Configuration loading, experiment dispatch and output writers."""
from .config_loader import config_from_mapping, load_config
from .main import main
from .plots import AxesSpec, PlotSeries, emit_svg_plot
from .writers import emit_csv, write_manifest

__all__ = [
    "AxesSpec",
    "PlotSeries",
    "config_from_mapping",
    "emit_csv",
    "emit_svg_plot",
    "load_config",
    "main",
    "write_manifest",
]
