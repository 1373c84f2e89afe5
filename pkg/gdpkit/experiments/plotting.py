"""
Optional SVG figures of the experiment tables, one file per quantity. The output is reproducible:
the SVG hash salt is fixed and no creation date is embedded.
"""

__version__ = '1.0'
__all__ = [
    'plot_columns', 'plot_figures', 'svg_path'
]

__author__ = 'GDPKIT'

from pathlib import Path
from typing import Mapping, Optional, Sequence

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt

from .csv_output import Table

matplotlib.rcParams["svg.hashsalt"] = "gdpkit"


def svg_path(out: Optional[str], suffix: str) -> Path:
    '''
    Returns:
        The figure path next to the table: <out stem>_<suffix>.svg, or gdp_<suffix>.svg when writing to stdout.
    '''
    if out is None:
        return Path("gdp_{}.svg".format(suffix))
    out = Path(out)
    return out.with_name("{}_{}.svg".format(out.stem, suffix))


def plot_columns(table: Table, x: str, series: Mapping[str, str], path: Path, ylabel: str, title: str):
    '''
    Draws some columns of a table against another one.

    Parameters:
        table : Table
            Source of the data.
        x : str
            Column on the horizontal axis.
        series : Mapping[str, str]
            Column name -> legend label, columns missing from the table are skipped.
        path : Path
            Destination of the SVG.
        ylabel, title : str
            Axis label and figure title.
    Raises:
        OSError
            If the file cannot be written.
    '''
    fig, ax = plt.subplots()
    try:
        xs = table.column(x)
        for column, label in series.items():
            if column in table.columns:
                ax.plot(xs, table.column(column), label=label)
        ax.set(xlabel=x, ylabel=ylabel, title=title)
        ax.grid()
        ax.legend()
        path.parent.mkdir(parents=True, exist_ok=True)
        fig.savefig(path, format="svg", metadata={"Date": None})
    finally:
        plt.close(fig)


def plot_figures(table: Table, out: Optional[str], figures: Sequence[tuple]) -> Sequence[Path]:
    '''
    Parameters:
        figures : Sequence[tuple]
            (suffix, series, ylabel, title) of each figure, drawn against "t".
    Returns:
        The written paths.
    '''
    paths = []
    for suffix, series, ylabel, title in figures:
        path = svg_path(out, suffix)
        plot_columns(table, "t", series, path, ylabel, title)
        paths.append(path)
    return paths
