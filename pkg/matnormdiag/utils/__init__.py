from .config import get_config_path, load_alignment_thresholds
from .parallel import THREADS_ENV, ordered_map, resolve_workers

__all__ = [
    'resolve_workers', 'ordered_map', 'THREADS_ENV', 'get_config_path',
    'load_alignment_thresholds'
]
