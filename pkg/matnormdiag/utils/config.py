import os.path as osp

from mmengine.config import Config

import matnormdiag

THRESHOLDS_CONFIG = '_base_/alignment_thresholds.py'


def get_config_path(relpath: str) -> str:
    """Locate a bundled config file.

    Installed packages carry the repository ``configs`` directory under
    ``matnormdiag/.mim``; a source checkout has it next to the package.
    """
    package_dir = osp.dirname(matnormdiag.__file__)
    for root in (osp.join(package_dir, '.mim', 'configs'),
                 osp.join(osp.dirname(package_dir), 'configs')):
        path = osp.join(root, relpath)
        if osp.isfile(path):
            return path
    raise FileNotFoundError(f'config {relpath!r} is not bundled')


def load_alignment_thresholds() -> Config:
    """The versioned alignment thresholds (``thresholds_version`` and
    ``alignment_thresholds``)."""
    return Config.fromfile(get_config_path(THRESHOLDS_CONFIG))
