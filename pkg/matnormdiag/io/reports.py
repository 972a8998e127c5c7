import os.path as osp
from typing import List, Optional, Sequence, Union

import mmengine
from mmengine.logging import print_log

from matnormdiag.propcheck import PARAM_ERRORS, RateReport
from matnormdiag.simharness import ScenarioFailure, ScenarioResult
from .matrix_stack import FLOAT_FORMAT, ensure_parent
from .plot_writers import SvgPlot, write_plot_csv, write_plot_svg

PLOT_FORMATS = ('csv', 'svg')
RATE_CSV_COLUMNS = ('c', 'n', 'matrix_error', 'vector_error',
                    'matrix_error_sd', 'vector_error_sd',
                    'redraws') + PARAM_ERRORS


def dump_json(obj: dict, path: str) -> None:
    """Write ``obj`` as indented JSON with sorted keys."""
    ensure_parent(path)
    mmengine.dump(obj, path, file_format='json', indent=2, sort_keys=True)


def load_json(path: str) -> dict:
    return mmengine.load(path, file_format='json')


def check_formats(formats: Sequence[str]) -> List[str]:
    formats = list(formats)
    unknown = set(formats) - set(PLOT_FORMATS)
    if unknown:
        raise ValueError(f'unsupported plot formats {sorted(unknown)}, '
                         f'choose from {PLOT_FORMATS}')
    return formats


def write_series(series, prefix: str, formats: Sequence[str] = PLOT_FORMATS,
                 svg_style: Optional[SvgPlot] = None) -> List[str]:
    """Write ``series`` to ``<prefix>.csv`` and/or ``<prefix>.svg``."""
    written = []
    for fmt in check_formats(formats):
        path = f'{prefix}.{fmt}'
        if fmt == 'csv':
            write_plot_csv(series, path)
        else:
            write_plot_svg(series, path, svg_style)
        written.append(path)
    return written


def write_rate_csv(report: RateReport, path: str) -> None:
    """One row per ``(c, N)`` cell."""
    ensure_parent(path)
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        f.write(','.join(RATE_CSV_COLUMNS) + '\n')
        for cell in report.cells:
            values = [str(cell.c), str(cell.n)]
            values += [
                FLOAT_FORMAT % v
                for v in (cell.matrix_error, cell.vector_error,
                          cell.matrix_error_sd, cell.vector_error_sd)
            ]
            values.append(str(cell.redraws))
            values += [
                FLOAT_FORMAT % cell.param_errors[k] for k in PARAM_ERRORS
            ]
            f.write(','.join(values) + '\n')


def write_rate_report(report: RateReport, prefix: str) -> List[str]:
    """Write ``<prefix>_cells.csv`` and ``<prefix>_summary.json``."""
    csv_path = f'{prefix}_cells.csv'
    json_path = f'{prefix}_summary.json'
    write_rate_csv(report, csv_path)
    dump_json(report.to_dict(), json_path)
    return [csv_path, json_path]


def write_scenario_result(result: ScenarioResult,
                          out_dir: str,
                          formats: Sequence[str] = PLOT_FORMATS,
                          svg_style: Optional[SvgPlot] = None) -> List[str]:
    """Write ``<out_dir>/<name>/`` with one plot per series and
    ``result.json``."""
    folder = osp.join(out_dir, result.scenario.name)
    written = []
    for kind, series in result.plot_series.items():
        written += write_series(series, osp.join(folder, kind), formats,
                                svg_style)
    json_path = osp.join(folder, 'result.json')
    dump_json(result.to_dict(), json_path)
    written.append(json_path)
    return written


def write_suite(results: Sequence[Union[ScenarioResult, ScenarioFailure]],
                out_dir: str,
                formats: Sequence[str] = PLOT_FORMATS,
                svg_style: Optional[SvgPlot] = None) -> str:
    """Write every scenario folder plus ``suite.json`` summarizing the run.

    Returns:
        str: Path of ``suite.json``.
    """
    summary = []
    for result in results:
        if isinstance(result, ScenarioFailure):
            summary.append(dict(status='failed', **result.to_dict()))
            continue
        write_scenario_result(result, out_dir, formats, svg_style)
        summary.append(
            dict(
                status='ok',
                name=result.scenario.name,
                alignment={
                    k: v.to_dict()
                    for k, v in result.alignment.items()
                },
                lrt=None if result.lrt is None else result.lrt.to_dict(),
                notices=list(result.notices)))
    path = osp.join(out_dir, 'suite.json')
    dump_json(dict(scenarios=summary), path)
    print_log(f'suite results written to {out_dir}', logger='current')
    return path
