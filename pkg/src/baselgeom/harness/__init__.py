"""Command-line harness: registered checks, reports and figure rendering."""

from .checks import CHECKS, CheckReport, RunConfig, run_all, run_check
from .figures import FIGURES, render_figure

__all__ = ["CHECKS", "CheckReport", "FIGURES", "RunConfig", "render_figure", "run_all", "run_check"]
