import argparse
import os.path as osp
from collections import defaultdict
from dataclasses import replace

import numpy as np
from mmengine.config import Config, DictAction
from mmengine.logging import print_log
from mmengine.registry import init_default_scope

from matnormdiag.distributions import RngStream
from matnormdiag.estimation import FlipFlopConfig
from matnormdiag.io import dump_json
from matnormdiag.simharness import (ScenarioFailure, run_suite,
                                    scenarios_from_config)


def parse_args():
    parser = argparse.ArgumentParser(
        description='Replicate a scenario suite over several seeds')
    parser.add_argument('config', help='suite config file path')
    parser.add_argument(
        '--replications', type=int, default=5, help='seeds per scenario')
    parser.add_argument('--out', help='output JSON path')
    parser.add_argument('--parallelism', type=int, help='worker processes')
    parser.add_argument(
        '--cfg-options',
        nargs='+',
        action=DictAction,
        help='override some settings in the used config, the key-value pair '
        'in xxx=yyy format will be merged into config file.')
    return parser.parse_args()


def replicate(scenarios, replications):
    """Every scenario once per replication, with the seed derived from the
    scenario seed and the replication index."""
    out = []
    for rep in range(replications):
        for scenario in scenarios:
            seed = RngStream(scenario.seed).derive(rep).stream_id
            out.append(
                replace(scenario, name=f'{scenario.name}@{rep}', seed=seed))
    return out


def summarize(scenarios, results):
    stats = {s.name: defaultdict(list) for s in scenarios}
    failures = defaultdict(int)
    for result in results:
        name = result.scenario.name.rsplit('@', 1)[0]
        if isinstance(result, ScenarioFailure):
            failures[name] += 1
            continue
        for kind, value in result.alignment.items():
            stats[name][f'{kind}.max_abs_dev'].append(value.max_abs_dev)
            stats[name][f'{kind}.mean_abs_dev'].append(value.mean_abs_dev)
        if result.lrt is not None:
            stats[name]['lrt.p_value'].append(result.lrt.p_value)
    return {
        name: dict(
            medians={k: float(np.median(v))
                     for k, v in values.items()},
            failures=failures[name])
        for name, values in stats.items()
    }


def discrimination(scenarios, summary):
    """strict_mvn over matnormal ratio of the median MHealy max_abs_dev for
    every shape simulated with both generators."""
    by_shape = defaultdict(dict)
    for s in scenarios:
        generator = s.generator if isinstance(s.generator,
                                              str) else s.generator['type']
        by_shape[(s.n_samples, s.n_rows, s.n_cols)][generator] = s.name
    ratios = {}
    for (n, c, r), names in sorted(by_shape.items()):
        if {'matnormal', 'strict_mvn'} - set(names):
            continue
        key = 'mhealy.max_abs_dev'
        base = summary[names['matnormal']]['medians'].get(key)
        other = summary[names['strict_mvn']]['medians'].get(key)
        if base and other is not None:
            ratios[f'N={n},c={c},r={r}'] = other / base
    return ratios


def main():
    args = parse_args()
    cfg = Config.fromfile(args.config)
    if args.cfg_options is not None:
        cfg.merge_from_dict(args.cfg_options)
    init_default_scope(cfg.get('default_scope', 'matnormdiag'))

    scenarios = scenarios_from_config(cfg.scenarios)
    results = run_suite(
        replicate(scenarios, args.replications),
        parallelism=args.parallelism or cfg.get('parallelism', None),
        flipflop_cfg=FlipFlopConfig(**cfg.get('flipflop_cfg', {})),
        plotting_position=cfg.get('plotting_position', 'nominal'),
        progress=True)
    summary = summarize(scenarios, results)
    ratios = discrimination(scenarios, summary)
    factor = cfg.get('discrimination_factor', None)
    for shape, ratio in ratios.items():
        flag = '' if factor is None or ratio >= factor else ' (below factor)'
        print_log(f'{shape}: strict_mvn / matnormal = {ratio:.2f}{flag}',
                  logger='current')

    out = args.out or osp.join(
        './work_dirs',
        osp.splitext(osp.basename(args.config))[0] + '_replications.json')
    dump_json(
        dict(
            config=args.config,
            replications=args.replications,
            thresholds_version=cfg.get('thresholds_version', None),
            scenarios=summary,
            discrimination=ratios), out)
    print_log(f'The replication summary is saved at {out}.', logger='current')


if __name__ == '__main__':
    main()
