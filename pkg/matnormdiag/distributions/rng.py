from dataclasses import dataclass

import numpy as np

_UINT64_MAX = 2**64 - 1


@dataclass(frozen=True)
class RngStream:
    """Address of an independent pseudo-random stream.

    A stream is a pure value: every call to :meth:`generator` restarts the
    same sequence, so samplers are functions of ``(stream, params, count)``.
    Work distributed to several workers gets one derived stream per task
    (see :meth:`derive`), never a shared generator.

    Args:
        seed (int): 64-bit unsigned seed.
        stream_id (int): 64-bit unsigned stream identifier. Defaults to 0.
    """
    seed: int
    stream_id: int = 0

    def __post_init__(self):
        for name in ('seed', 'stream_id'):
            value = getattr(self, name)
            if not isinstance(value, (int, np.integer)) or not (
                    0 <= value <= _UINT64_MAX):
                raise ValueError(
                    f'{name} must be a 64-bit unsigned integer, got {value}')
            object.__setattr__(self, name, int(value))

    def generator(self) -> np.random.Generator:
        """A fresh counter-based generator positioned at the stream start."""
        seq = np.random.SeedSequence(self.seed, spawn_key=(self.stream_id, ))
        return np.random.Generator(np.random.Philox(seq))

    def derive(self, *keys: int) -> 'RngStream':
        """Child stream addressed by ``keys`` (cell index, replication...).

        The child depends only on ``(seed, stream_id, keys)``, which keeps
        parallel Monte Carlo results independent of scheduling.
        """
        seq = np.random.SeedSequence(
            self.seed, spawn_key=(self.stream_id, ) + tuple(keys))
        child_id = int(seq.generate_state(1, dtype=np.uint64)[0])
        return RngStream(self.seed, child_id)
