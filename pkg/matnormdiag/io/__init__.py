from .cli import build_parser, cli_main
from .matrix_stack import (dump_matrix_stack, parse_matrix_stack,
                           read_matrix_stack, write_matrix_stack)
from .plot_writers import (SvgPlot, read_plot_csv, write_plot_csv,
                           write_plot_svg)
from .reports import (dump_json, load_json, write_rate_csv, write_rate_report,
                      write_scenario_result, write_series, write_suite)

__all__ = [
    'read_matrix_stack', 'write_matrix_stack', 'parse_matrix_stack',
    'dump_matrix_stack', 'SvgPlot', 'write_plot_csv', 'read_plot_csv',
    'write_plot_svg', 'dump_json', 'load_json', 'write_series',
    'write_rate_csv', 'write_rate_report', 'write_scenario_result',
    'write_suite', 'cli_main', 'build_parser'
]
