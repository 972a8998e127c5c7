"""Plain-text matrix stack files.

::

    # comment lines start with '#'
    c=2,r=3,N=2
    1,2,3
    4,5,6

    7,8,9
    10,11,12

The header declares the shape, then come N blocks of c lines with r
comma-separated numbers each, separated by blank lines. Numbers are written
with 17 significant digits, which round-trips every float64 exactly.
"""
import math
import os.path as osp
import re
from typing import Iterable, Iterator, List, Optional, Tuple

import mmengine
import numpy as np

from matnormdiag.core import MatrixDataset
from matnormdiag.core.exceptions import (NonFiniteValue, ParseError,
                                         ShapeMismatch)

HEADER_PATTERN = re.compile(
    r'^\s*c\s*=\s*(\d+)\s*,\s*r\s*=\s*(\d+)\s*,\s*N\s*=\s*(\d+)\s*$')
FLOAT_FORMAT = '%.17g'


def ensure_parent(path: str) -> None:
    mmengine.mkdir_or_exist(osp.dirname(osp.abspath(path)))


def format_row(values: Iterable[float]) -> str:
    return ','.join(FLOAT_FORMAT % v for v in values)


def _parse_header(line: str, lineno: int) -> Tuple[int, int, int]:
    match = HEADER_PATTERN.match(line)
    if match is None:
        raise ParseError(
            f'expected a header "c=<int>,r=<int>,N=<int>", got {line!r}',
            lineno)
    c, r, n = (int(g) for g in match.groups())
    if min(c, r, n) < 1:
        raise ParseError(f'c, r and N must be positive, got {line!r}', lineno)
    return c, r, n


def _parse_row(line: str, n_cols: int, lineno: int) -> List[float]:
    fields = line.split(',')
    if len(fields) != n_cols:
        raise ShapeMismatch(
            f'expected {n_cols} values, got {len(fields)}', lineno)
    row = []
    for text in fields:
        try:
            value = float(text)
        except ValueError:
            raise ParseError(
                f'invalid number {text.strip()!r}', lineno) from None
        if not math.isfinite(value):
            raise NonFiniteValue(f'non-finite value {text.strip()!r}',
                                 lineno)
        row.append(value)
    return row


def parse_matrix_stack(lines: Iterable[str]) -> MatrixDataset:
    """Parse the lines of a matrix stack file.

    Raises:
        ParseError: Malformed header or number.
        ShapeMismatch: A row, block or block count disagrees with the
            header.
        NonFiniteValue: ``nan`` or ``inf`` in the data.
    """
    shape: Optional[Tuple[int, int, int]] = None
    blocks: List[List[List[float]]] = []
    block: List[List[float]] = []
    lineno = 0

    def close_block(at: int) -> None:
        if not block:
            return
        if len(block) != shape[0]:
            raise ShapeMismatch(
                f'block {len(blocks) + 1} has {len(block)} rows, expected '
                f'{shape[0]}', at)
        blocks.append(list(block))
        block.clear()

    for lineno, line in enumerate(lines, start=1):
        line = line.rstrip('\r\n')
        if line.lstrip().startswith('#'):
            continue
        if shape is None:
            if line.strip():
                shape = _parse_header(line, lineno)
            continue
        if not line.strip():
            close_block(lineno)
            continue
        if len(block) == shape[0]:
            raise ShapeMismatch(
                f'block {len(blocks) + 1} has more than {shape[0]} rows',
                lineno)
        if len(blocks) == shape[2]:
            raise ShapeMismatch(f'more than N={shape[2]} blocks', lineno)
        block.append(_parse_row(line, shape[1], lineno))
    if shape is None:
        raise ParseError('missing header', max(lineno, 1))
    close_block(lineno)
    if len(blocks) != shape[2]:
        raise ShapeMismatch(
            f'found {len(blocks)} blocks, header declares N={shape[2]}',
            max(lineno, 1))
    return MatrixDataset(np.array(blocks, dtype=np.float64))


def _decoded_lines(raw_lines: Iterable[bytes]) -> Iterator[str]:
    for lineno, raw in enumerate(raw_lines, start=1):
        try:
            yield raw.decode('utf-8')
        except UnicodeDecodeError as e:
            raise ParseError(f'invalid UTF-8 ({e.reason})', lineno) from None


def read_matrix_stack(path: str) -> MatrixDataset:
    """Read a UTF-8 matrix stack file into a dataset."""
    with open(path, 'rb') as f:
        return parse_matrix_stack(_decoded_lines(f))


def dump_matrix_stack(data: MatrixDataset,
                      comments: Iterable[str] = ()) -> str:
    """Text of the matrix stack file of ``data``."""
    lines = [f'# {comment}' for comment in comments]
    lines.append(f'c={data.n_rows},r={data.n_cols},N={data.n_samples}')
    for idx, matrix in enumerate(data):
        if idx:
            lines.append('')
        lines.extend(format_row(row) for row in matrix)
    return '\n'.join(lines) + '\n'


def write_matrix_stack(data: MatrixDataset,
                       path: str,
                       comments: Iterable[str] = ()) -> None:
    """Write ``data`` as a matrix stack file, creating parent folders."""
    ensure_parent(path)
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        f.write(dump_matrix_stack(data, comments))
