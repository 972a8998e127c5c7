"""Command line entry point ``matnormdiag``.

Exit codes: 0 on success, 2 when a diagnostic is infeasible for the data
(``N <= cr`` for the DD plot, the Healy-type plot, the LRT and the
two-phase assessment), 1 for every other error. Errors print a one-line
message followed by a JSON object on stderr.
"""
import argparse
import logging
import sys
from typing import List, Optional

import mmengine
from mmengine.config import Config, DictAction
from mmengine.logging import MMLogger, print_log
from mmengine.registry import init_default_scope

from matnormdiag.core import MatrixDataset
from matnormdiag.core.exceptions import InfeasibleDiagnostic, MatNormDiagError
from matnormdiag.diagnostics import (NOMINAL, N_PLUS_ONE,
                                     check_unstructured_feasible, dd_series,
                                     healy_type_series, mhealy_series,
                                     separability_lrt, two_phase_assessment)
from matnormdiag.distributions import RngStream, sample_matnormal
from matnormdiag.estimation import FlipFlopConfig, flipflop_mle, mvn_mle
from matnormdiag.propcheck import RateGrid, run_rate_experiment
from matnormdiag.registry import GENERATORS
from matnormdiag.simharness import (ScenarioFailure, run_suite,
                                    scenarios_from_config)
from matnormdiag.utils import load_alignment_thresholds
from .matrix_stack import read_matrix_stack, write_matrix_stack
from .plot_writers import SvgPlot
from .reports import (PLOT_FORMATS, dump_json, write_rate_report,
                      write_series, write_suite)

LOGGER_NAME = 'matnormdiag'
DISTRIBUTIONS = {'matnorm': 'matnormal', 'mvn': 'strict_mvn'}


class UsageError(ValueError):
    """Invalid command line."""


class _ArgumentParser(argparse.ArgumentParser):
    """Raise instead of exiting so usage errors map to exit code 1."""

    def error(self, message):
        raise UsageError(message)


def _int_list(text: str) -> List[int]:
    try:
        return [int(v) for v in text.split(',') if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f'expected comma-separated integers, got {text!r}') from None


def _format_list(text: str) -> List[str]:
    return [v.strip() for v in text.split(',') if v.strip()]


def _flipflop_cfg(args) -> FlipFlopConfig:
    return FlipFlopConfig(
        tolerance=args.tol,
        max_iterations=args.max_iter,
        init_row_cov=args.init)


def _add_flipflop_args(parser) -> None:
    parser.add_argument(
        '--tol',
        type=float,
        default=1e-8,
        help='flip-flop relative Frobenius change tolerance')
    parser.add_argument(
        '--max-iter', type=int, default=100, help='flip-flop iteration cap')
    parser.add_argument(
        '--init',
        choices=['identity', 'diagonal'],
        default='identity',
        help='initial row covariance of the flip-flop algorithm')


def _add_plot_args(parser) -> None:
    parser.add_argument('--input', required=True, help='matrix stack file')
    parser.add_argument(
        '--out-prefix',
        required=True,
        help='output path without extension')
    parser.add_argument(
        '--format',
        type=_format_list,
        default=list(PLOT_FORMATS),
        help='comma-separated subset of csv,svg')
    _add_flipflop_args(parser)


def _load(path: str) -> MatrixDataset:
    data = read_matrix_stack(path)
    print_log(
        f'loaded {path}: N={data.n_samples}, c={data.n_rows}, '
        f'r={data.n_cols}',
        logger='current')
    return data


def _written(paths: List[str]) -> None:
    for path in paths:
        print_log(f'wrote {path}', logger='current')


def cmd_simulate(args) -> None:
    stream = RngStream(args.seed)
    if args.from_fit is not None:
        source = _load(args.from_fit)
        params = flipflop_mle(source, _flipflop_cfg(args)).params
        data = sample_matnormal(stream, params, args.samples)
        comments = [
            f'resampled from the flip-flop fit of {args.from_fit}',
            f'seed={args.seed}'
        ]
    else:
        if args.rows is None or args.cols is None:
            raise UsageError('--rows and --cols are required without '
                             '--from-fit')
        generator = GENERATORS.build(
            dict(
                type=DISTRIBUTIONS[args.dist],
                condition_cap=args.condition_cap))
        data = generator(stream, args.samples, args.rows, args.cols)
        comments = [f'dist={args.dist}', f'seed={args.seed}']
    write_matrix_stack(data, args.out, comments)
    _written([args.out])


def cmd_fit(args) -> None:
    data = _load(args.input)
    report = flipflop_mle(data, _flipflop_cfg(args))
    result = dict(flipflop=report.to_dict(), mvn=None, notices=[])
    try:
        check_unstructured_feasible(data, 'the unstructured fit')
        result['mvn'] = mvn_mle(data).to_dict()
    except InfeasibleDiagnostic as e:
        result['notices'].append(str(e))
        print_log(str(e), logger='current')
    dump_json(result, args.out)
    _written([args.out])


def cmd_mhealy(args) -> None:
    data = _load(args.input)
    fitted = flipflop_mle(data, _flipflop_cfg(args)).params
    series = mhealy_series(data, fitted, args.plotting_position)
    _written(write_series(series, args.out_prefix, args.format))


def cmd_ddplot(args) -> None:
    data = _load(args.input)
    check_unstructured_feasible(data, 'the DD plot')
    fitted = flipflop_mle(data, _flipflop_cfg(args)).params
    series = dd_series(data, fitted, mvn_mle(data))
    _written(write_series(series, args.out_prefix, args.format))


def cmd_healy(args) -> None:
    data = _load(args.input)
    check_unstructured_feasible(data, 'the Healy-type plot')
    series = healy_type_series(data, mvn_mle(data), args.plotting_position)
    _written(write_series(series, args.out_prefix, args.format))


def cmd_lrt(args) -> None:
    data = _load(args.input)
    result = separability_lrt(data, flipflop_cfg=_flipflop_cfg(args))
    print(mmengine.dump(result.to_dict(), file_format='json', sort_keys=True))


def cmd_twophase(args) -> None:
    data = _load(args.input)
    cfg = load_alignment_thresholds()
    thresholds = dict(cfg.alignment_thresholds.healy_type)
    if args.max_abs_dev is not None:
        thresholds['max_abs_dev'] = args.max_abs_dev
    result = two_phase_assessment(
        data,
        thresholds,
        alpha=args.alpha,
        flipflop_cfg=_flipflop_cfg(args),
        plotting_position=args.plotting_position)
    info = result.to_dict()
    info['thresholds_version'] = cfg.thresholds_version
    print(mmengine.dump(info, file_format='json', sort_keys=True))


def cmd_propcheck(args) -> None:
    cfg = Config.fromfile(args.config) if args.config else Config()
    grid_cfg = dict(cfg.get('rate_grid', {}))
    overrides = dict(
        c_values=args.c_values,
        n_values=args.n_values,
        replications=args.reps,
        probe_samples=args.probes)
    grid_cfg.update({k: v for k, v in overrides.items() if v is not None})
    seed = args.seed if args.seed is not None else cfg.get('seed', None)
    if seed is None:
        raise UsageError('--seed is required when the config sets no seed')
    report = run_rate_experiment(
        RateGrid(**grid_cfg),
        seed,
        parallelism=args.parallelism or cfg.get('parallelism', None),
        flipflop_cfg=_flipflop_cfg(args),
        progress=True)
    _written(write_rate_report(report, args.out_prefix))


def cmd_suite(args) -> None:
    cfg = Config.fromfile(args.config)
    init_default_scope(cfg.get('default_scope', 'matnormdiag'))
    if args.cfg_options is not None:
        cfg.merge_from_dict(args.cfg_options)
    scenarios = scenarios_from_config(cfg.scenarios)
    parallelism = args.parallelism or cfg.get('parallelism', None)
    results = run_suite(
        scenarios,
        parallelism=parallelism,
        flipflop_cfg=FlipFlopConfig(**cfg.get('flipflop_cfg', {})),
        plotting_position=cfg.get('plotting_position', NOMINAL),
        progress=True)
    svg_style = SvgPlot(**cfg.get('svg_style', {}))
    _written([
        write_suite(results, args.out_dir,
                    cfg.get('formats', PLOT_FORMATS), svg_style)
    ])
    failed = [r.scenario.name for r in results
              if isinstance(r, ScenarioFailure)]
    if failed:
        raise MatNormDiagError(
            f'{len(failed)} of {len(results)} scenarios failed: '
            f'{", ".join(failed)}')


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog='matnormdiag',
        description='Diagnostics of matrix-variate normality')
    parser.add_argument(
        '--log-level',
        default='WARNING',
        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'],
        help='verbosity of the messages printed on stderr')
    subparsers = parser.add_subparsers(dest='command')
    subparsers.required = True

    sim = subparsers.add_parser('simulate', help='draw a matrix stack file')
    sim.add_argument(
        '--dist', choices=sorted(DISTRIBUTIONS), default='matnorm')
    sim.add_argument('--samples', type=int, required=True, help='N')
    sim.add_argument('--rows', type=int, help='c')
    sim.add_argument('--cols', type=int, help='r')
    sim.add_argument('--seed', type=int, required=True)
    sim.add_argument('--out', required=True, help='output matrix stack file')
    sim.add_argument(
        '--condition-cap',
        type=float,
        default=100.,
        help='condition number bound of the random covariances')
    sim.add_argument(
        '--from-fit',
        help='resample from the flip-flop fit of this matrix stack file')
    _add_flipflop_args(sim)
    sim.set_defaults(func=cmd_simulate)

    fit = subparsers.add_parser('fit', help='fit both normal models')
    fit.add_argument('--input', required=True, help='matrix stack file')
    fit.add_argument('--out', required=True, help='output JSON report')
    _add_flipflop_args(fit)
    fit.set_defaults(func=cmd_fit)

    for name, func, text in (('mhealy', cmd_mhealy, 'MHealy plot'),
                             ('healy', cmd_healy, 'Healy-type plot'),
                             ('ddplot', cmd_ddplot, 'DD plot')):
        sub = subparsers.add_parser(name, help=f'write the {text}')
        _add_plot_args(sub)
        if name != 'ddplot':
            sub.add_argument(
                '--plotting-position',
                choices=[NOMINAL, N_PLUS_ONE],
                default=NOMINAL,
                help='nominal values n/N or n/(N+1)')
        sub.set_defaults(func=func)

    lrt = subparsers.add_parser(
        'lrt', help='separability likelihood ratio test')
    lrt.add_argument('--input', required=True, help='matrix stack file')
    _add_flipflop_args(lrt)
    lrt.set_defaults(func=cmd_lrt)

    two = subparsers.add_parser(
        'twophase', help='Healy-type normality check followed by the LRT')
    two.add_argument('--input', required=True, help='matrix stack file')
    two.add_argument('--alpha', type=float, default=0.05)
    two.add_argument(
        '--max-abs-dev',
        type=float,
        help='override the Healy-type alignment threshold')
    two.add_argument(
        '--plotting-position',
        choices=[NOMINAL, N_PLUS_ONE],
        default=NOMINAL)
    _add_flipflop_args(two)
    two.set_defaults(func=cmd_twophase)

    prop = subparsers.add_parser(
        'propcheck', help='Monte Carlo check of the distance error rates')
    prop.add_argument(
        '--config', help='rate grid config, e.g. configs/propcheck/*.py')
    prop.add_argument('--c-values', type=_int_list, help='default: 2,4,8')
    prop.add_argument(
        '--n-values', type=_int_list, help='default: 250,1000,4000')
    prop.add_argument('--reps', type=int, help='default: 200')
    prop.add_argument('--probes', type=int, help='default: 100')
    prop.add_argument('--seed', type=int)
    prop.add_argument('--out-prefix', required=True)
    prop.add_argument('--parallelism', type=int)
    _add_flipflop_args(prop)
    prop.set_defaults(func=cmd_propcheck)

    suite = subparsers.add_parser('suite', help='run a scenario suite')
    suite.add_argument('--config', required=True, help='suite config file')
    suite.add_argument('--out-dir', required=True)
    suite.add_argument('--parallelism', type=int)
    suite.add_argument(
        '--cfg-options',
        nargs='+',
        action=DictAction,
        help='override some settings in the used config, the key-value pair '
        'in xxx=yyy format will be merged into config file.')
    suite.set_defaults(func=cmd_suite)
    return parser


def _setup_logger(log_level: str) -> MMLogger:
    """Point the console handlers of the CLI logger at the current stderr.

    The logger outlives a single :func:`cli_main` call, and the stderr it
    was built with may be closed by then, so its console handlers are
    replaced rather than flushed and redirected.
    """
    if MMLogger.check_instance_created(LOGGER_NAME):
        logger = MMLogger.get_instance(LOGGER_NAME)
    else:
        logger = MMLogger.get_instance(LOGGER_NAME, log_level=log_level)
    logger.setLevel(log_level)
    for handler in list(logger.handlers):
        if isinstance(handler, logging.StreamHandler) and \
                not isinstance(handler, logging.FileHandler):
            logger.removeHandler(handler)
            # stdout carries command results
            console = logging.StreamHandler(sys.stderr)
            console.setFormatter(handler.formatter)
            console.setLevel(log_level)
            for log_filter in handler.filters:
                console.addFilter(log_filter)
            logger.addHandler(console)
    return logger


def _report_error(error: Exception) -> None:
    if isinstance(error, MatNormDiagError):
        info = error.to_dict()
    else:
        info = dict(error=type(error).__name__, message=str(error))
    print(f'matnormdiag: error: {error}', file=sys.stderr)
    print(
        mmengine.dump(info, file_format='json', sort_keys=True),
        file=sys.stderr)


def cli_main(argv: Optional[List[str]] = None) -> int:
    """Run the command line and return its exit code."""
    try:
        args = build_parser().parse_args(argv)
        _setup_logger(args.log_level)
        args.func(args)
    except InfeasibleDiagnostic as e:
        _report_error(e)
        return 2
    except Exception as e:
        _report_error(e)
        return 1
    return 0


def main() -> None:
    sys.exit(cli_main())
