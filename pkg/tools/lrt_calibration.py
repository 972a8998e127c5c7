import argparse
import os.path as osp

import numpy as np
from mmengine.config import Config, DictAction
from mmengine.logging import print_log
from mmengine.registry import init_default_scope

from matnormdiag.diagnostics import separability_lrt
from matnormdiag.distributions import RngStream
from matnormdiag.estimation import FlipFlopConfig
from matnormdiag.io import dump_json
from matnormdiag.registry import GENERATORS
from matnormdiag.utils import ordered_map


def parse_args():
    parser = argparse.ArgumentParser(
        description='Rejection rates of the separability LRT')
    parser.add_argument('config', help='calibration config file path')
    parser.add_argument('--out', help='output JSON path')
    parser.add_argument('--parallelism', type=int, help='worker processes')
    parser.add_argument(
        '--cfg-options',
        nargs='+',
        action=DictAction,
        help='override some settings in the used config, the key-value pair '
        'in xxx=yyy format will be merged into config file.')
    return parser.parse_args()


def lrt_p_value(task):
    seed, stream_id, row, flipflop_cfg = task
    generator = GENERATORS.build(dict(type=row['generator']))
    data = generator(
        RngStream(seed, stream_id), row['n_samples'], row['n_rows'],
        row['n_cols'])
    result = separability_lrt(
        data, flipflop_cfg=FlipFlopConfig(**flipflop_cfg))
    return result.p_value


def main():
    args = parse_args()
    cfg = Config.fromfile(args.config)
    if args.cfg_options is not None:
        cfg.merge_from_dict(args.cfg_options)
    init_default_scope(cfg.get('default_scope', 'matnormdiag'))

    root = RngStream(cfg.seed)
    flipflop_cfg = dict(cfg.get('flipflop_cfg', {}))
    rows = []
    for idx, row in enumerate(cfg.calibrations):
        row = dict(row)
        tasks = []
        for rep in range(cfg.replications):
            stream = root.derive(idx, rep)
            tasks.append((stream.seed, stream.stream_id, row, flipflop_cfg))
        p_values = np.array(
            ordered_map(
                lrt_p_value,
                tasks,
                args.parallelism or cfg.get('parallelism', None),
                progress=True))
        rate = float(np.mean(p_values < cfg.alpha))
        print_log(
            f'{row["name"]}: rejection rate {rate:.3f} at alpha={cfg.alpha} '
            f'over {cfg.replications} replications',
            logger='current')
        rows.append(
            dict(
                row,
                rejection_rate=rate,
                median_p_value=float(np.median(p_values))))

    out = args.out or osp.join(
        './work_dirs',
        osp.splitext(osp.basename(args.config))[0] + '_lrt.json')
    dump_json(
        dict(
            config=args.config,
            alpha=cfg.alpha,
            replications=cfg.replications,
            rows=rows), out)
    print_log(f'The calibration table is saved at {out}.', logger='current')


if __name__ == '__main__':
    main()
