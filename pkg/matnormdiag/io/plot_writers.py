from dataclasses import dataclass, replace
from typing import Optional, Tuple

import matplotlib
import numpy as np
from matplotlib.figure import Figure

from matnormdiag.diagnostics import DD, HEALY_TYPE, MHEALY, PlotSeries
from .matrix_stack import FLOAT_FORMAT, ensure_parent

CSV_HEADER = 'x,y'
SVG_HASH_SALT = 'matnormdiag'
SVG_DPI = 72

_TITLES = {
    MHEALY: 'MHealy plot',
    HEALY_TYPE: 'Healy-type plot',
    DD: 'DD plot',
}
_LABELS = {
    MHEALY: ('Nominal values', 'Cumulative probabilities'),
    HEALY_TYPE: ('Nominal values', 'Cumulative probabilities'),
    DD: ('Matrix-based MSD', 'Vector-based MSD'),
}


@dataclass(frozen=True)
class SvgPlot:
    """Look of an SVG diagnostic plot.

    Args:
        width (int): Width in pixels. Defaults to 480.
        height (int): Height in pixels. Defaults to 480.
        margin (float): Fraction of the figure reserved around the axes on
            every side. Defaults to 0.12.
        x_range (tuple, optional): Horizontal axis limits. Defaults to
            ``[0, 1]`` for probability plots and to the data range for DD
            plots.
        y_range (tuple, optional): Vertical axis limits, same defaults.
        point_radius (float): Marker radius in pixels. Defaults to 2.
        point_color (str): Defaults to ``'black'``.
        line_color (str): Color of the ``y = x`` reference line. Defaults
            to ``'red'``.
        title (str, optional): Defaults to the plot kind.
        x_label (str, optional): Defaults per plot kind.
        y_label (str, optional): Defaults per plot kind.
    """
    width: int = 480
    height: int = 480
    margin: float = 0.12
    x_range: Optional[Tuple[float, float]] = None
    y_range: Optional[Tuple[float, float]] = None
    point_radius: float = 2.0
    point_color: str = 'black'
    line_color: str = 'red'
    title: Optional[str] = None
    x_label: Optional[str] = None
    y_label: Optional[str] = None

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise ValueError(
                f'width and height should be positive, but got '
                f'{self.width}x{self.height}')
        if not 0 <= self.margin < 0.5:
            raise ValueError(
                f'margin should be in [0, 0.5), but got {self.margin}')

    def resolved(self, series: PlotSeries) -> 'SvgPlot':
        """Fill the unset fields with the defaults of ``series``."""
        x_label, y_label = _LABELS[series.kind]
        if series.kind == DD:
            top = max(np.max(series.x, initial=0.0),
                      np.max(series.y, initial=0.0))
            limits = (0.0, float(top) * 1.05 if top > 0 else 1.0)
        else:
            limits = (0.0, 1.0)
        return replace(
            self,
            x_range=self.x_range or limits,
            y_range=self.y_range or limits,
            title=self.title or _TITLES[series.kind],
            x_label=self.x_label or x_label,
            y_label=self.y_label or y_label)


def write_plot_csv(series: PlotSeries, path: str) -> None:
    """Write the points of ``series`` as ``x,y`` rows with 17 digits."""
    ensure_parent(path)
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        f.write(CSV_HEADER + '\n')
        for x, y in zip(series.x, series.y):
            f.write(f'{FLOAT_FORMAT % x},{FLOAT_FORMAT % y}\n')


def read_plot_csv(path: str) -> Tuple[np.ndarray, np.ndarray]:
    """Read back the ``(x, y)`` columns written by :func:`write_plot_csv`."""
    with open(path, encoding='utf-8') as f:
        header = f.readline().strip()
        if header != CSV_HEADER:
            raise ValueError(
                f'{path} does not start with the {CSV_HEADER!r} header')
        rows = [line.split(',') for line in f if line.strip()]
    points = np.array(rows, dtype=np.float64).reshape(-1, 2)
    return points[:, 0], points[:, 1]


def write_plot_svg(series: PlotSeries,
                   path: str,
                   style: Optional[SvgPlot] = None) -> None:
    """Render ``series`` and its ``y = x`` reference line as SVG.

    The output is byte-identical for identical inputs: the id salt is fixed
    and no date is written.
    """
    style = (style or SvgPlot()).resolved(series)
    rc = {
        'svg.hashsalt': SVG_HASH_SALT,
        'svg.fonttype': 'path',
        'font.size': 10,
    }
    with matplotlib.rc_context(rc):
        fig = Figure(
            figsize=(style.width / SVG_DPI, style.height / SVG_DPI),
            dpi=SVG_DPI)
        fig.subplots_adjust(
            left=style.margin,
            right=1 - style.margin,
            bottom=style.margin,
            top=1 - style.margin)
        ax = fig.add_subplot()
        low = min(style.x_range[0], style.y_range[0])
        high = max(style.x_range[1], style.y_range[1])
        ax.plot([low, high], [low, high],
                color=style.line_color,
                linewidth=1.5,
                label='y = x')
        if len(series):
            ax.plot(
                series.x,
                series.y,
                linestyle='none',
                marker='o',
                markersize=2 * style.point_radius,
                color=style.point_color)
        ax.set_xlim(*style.x_range)
        ax.set_ylim(*style.y_range)
        ax.set_title(style.title)
        ax.set_xlabel(style.x_label)
        ax.set_ylabel(style.y_label)
        ensure_parent(path)
        fig.savefig(path, format='svg', metadata={'Date': None})
