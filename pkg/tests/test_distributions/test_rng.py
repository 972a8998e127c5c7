from unittest import TestCase

from numpy.testing import assert_array_equal

from matnormdiag.distributions import RngStream, sample_standard_normal


class TestRngStream(TestCase):

    def test_replay(self):
        stream = RngStream(42, 3)
        assert_array_equal(
            sample_standard_normal(stream, 10),
            sample_standard_normal(RngStream(42, 3), 10))

    def test_streams_differ(self):
        a = sample_standard_normal(RngStream(42, 0), 5)
        b = sample_standard_normal(RngStream(42, 1), 5)
        c = sample_standard_normal(RngStream(43, 0), 5)
        self.assertFalse((a == b).all())
        self.assertFalse((a == c).all())

    def test_derive(self):
        root = RngStream(7)
        self.assertEqual(root.derive(1, 2), RngStream(7).derive(1, 2))
        self.assertNotEqual(root.derive(1, 2), root.derive(2, 1))
        self.assertEqual(root.derive(0).seed, 7)

    def test_invalid(self):
        with self.assertRaisesRegex(ValueError, 'seed'):
            RngStream(-1)
        with self.assertRaisesRegex(ValueError, 'stream_id'):
            RngStream(1, 2**64)
        with self.assertRaises(ValueError):
            sample_standard_normal(RngStream(1), -1)
