import os.path as osp
from unittest import TestCase

import numpy as np
from numpy.testing import assert_array_equal

from matnormdiag.core import (MatrixDataset, NonFiniteValue, ParseError,
                              ShapeMismatch)
from matnormdiag.io import (dump_matrix_stack, parse_matrix_stack,
                            read_matrix_stack, write_matrix_stack)

DATA_DIR = osp.join(osp.dirname(osp.dirname(__file__)), 'testdata')


class TestMatrixStack(TestCase):

    def test_read(self):
        data = read_matrix_stack(osp.join(DATA_DIR, 'stack_2x3.txt'))
        self.assertEqual(data.data.shape, (2, 2, 3))
        assert_array_equal(data[1], [[7.5, -8, 9e-3], [10, 11, 12]])

    def test_round_trip(self):
        x = np.random.default_rng(0).standard_normal((3, 2, 4)) * 1e5
        data = MatrixDataset(x)
        text = dump_matrix_stack(data, comments=['seed 0'])
        self.assertTrue(text.startswith('# seed 0\nc=2,r=4,N=3\n'))
        restored = parse_matrix_stack(text.splitlines())
        assert_array_equal(restored.data, x)

    def test_write(self):
        import tempfile
        data = MatrixDataset(np.arange(12.).reshape(2, 3, 2))
        with tempfile.TemporaryDirectory() as tmpdir:
            path = osp.join(tmpdir, 'nested', 'stack.txt')
            write_matrix_stack(data, path)
            assert_array_equal(read_matrix_stack(path).data, data.data)

    def test_row_length(self):
        with self.assertRaises(ShapeMismatch) as cm:
            read_matrix_stack(osp.join(DATA_DIR, 'stack_bad_row.txt'))
        self.assertEqual(cm.exception.lineno, 3)
        self.assertEqual(cm.exception.to_dict()['lineno'], 3)

    def test_block_count(self):
        with self.assertRaisesRegex(ShapeMismatch, 'N=2'):
            parse_matrix_stack(['c=1,r=2,N=2', '1,2'])
        with self.assertRaisesRegex(ShapeMismatch, 'more than N=1'):
            parse_matrix_stack(['c=1,r=2,N=1', '1,2', '', '3,4'])
        with self.assertRaisesRegex(ShapeMismatch, 'has 1 rows'):
            parse_matrix_stack(['c=2,r=2,N=2', '1,2', '', '3,4', '5,6'])

    def test_non_finite(self):
        with self.assertRaises(NonFiniteValue) as cm:
            parse_matrix_stack(['c=1,r=2,N=1', '1,nan'])
        self.assertEqual(cm.exception.lineno, 2)

    def test_header(self):
        with self.assertRaisesRegex(ParseError, 'header'):
            parse_matrix_stack(['r=2,c=1,N=1', '1,2'])
        with self.assertRaisesRegex(ParseError, 'missing header'):
            parse_matrix_stack(['# only a comment'])
        with self.assertRaisesRegex(ParseError, 'invalid number'):
            parse_matrix_stack(['c=1,r=2,N=1', '1,two'])

    def test_invalid_utf8(self):
        import tempfile
        with tempfile.TemporaryDirectory() as tmpdir:
            path = osp.join(tmpdir, 'latin1.txt')
            with open(path, 'wb') as f:
                f.write(b'# caf\xe9\nc=1,r=2,N=1\n1,2\n')
            with self.assertRaises(ParseError) as cm:
                read_matrix_stack(path)
        self.assertEqual(cm.exception.lineno, 1)
        self.assertIn('UTF-8', str(cm.exception))
        self.assertEqual(cm.exception.to_dict()['error'], 'ParseError')

    def test_crlf(self):
        import tempfile
        with tempfile.TemporaryDirectory() as tmpdir:
            path = osp.join(tmpdir, 'crlf.txt')
            with open(path, 'wb') as f:
                f.write(b'c=1,r=2,N=1\r\n1,2\r\n')
            assert_array_equal(read_matrix_stack(path).data, [[[1., 2.]]])
