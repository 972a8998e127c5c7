import os.path as osp
import tempfile
import xml.etree.ElementTree as ET
from unittest import TestCase

import numpy as np
from numpy.testing import assert_array_equal

from matnormdiag.diagnostics import PlotSeries
from matnormdiag.io import (SvgPlot, read_plot_csv, write_plot_csv,
                            write_plot_svg)


class TestPlotWriters(TestCase):

    def setUp(self):
        self.tmpdir = tempfile.TemporaryDirectory()
        y = np.sort(np.random.default_rng(0).uniform(size=10))
        self.series = PlotSeries(
            np.arange(1, 11) / 10, y, 'mhealy', 10, 2, 2, 4)

    def tearDown(self):
        self.tmpdir.cleanup()

    def test_csv_round_trip(self):
        path = osp.join(self.tmpdir.name, 'mhealy.csv')
        write_plot_csv(self.series, path)
        with open(path) as f:
            self.assertEqual(f.readline(), 'x,y\n')
        x, y = read_plot_csv(path)
        assert_array_equal(x, self.series.x)
        assert_array_equal(y, self.series.y)

    def test_csv_empty(self):
        path = osp.join(self.tmpdir.name, 'dd.csv')
        write_plot_csv(PlotSeries([], [], 'dd', 0, 2, 2, 4), path)
        x, y = read_plot_csv(path)
        self.assertEqual(len(x), 0)
        self.assertEqual(len(y), 0)

    def test_svg_deterministic(self):
        paths = [
            osp.join(self.tmpdir.name, f'{i}', 'plot.svg') for i in range(2)
        ]
        for path in paths:
            write_plot_svg(self.series, path)
        with open(paths[0], 'rb') as f:
            first = f.read()
        with open(paths[1], 'rb') as f:
            self.assertEqual(f.read(), first)
        root = ET.fromstring(first)
        self.assertTrue(root.tag.endswith('svg'))
        self.assertNotIn(b'<dc:date>', first)

    def test_svg_empty_dd(self):
        path = osp.join(self.tmpdir.name, 'dd.svg')
        write_plot_svg(PlotSeries([], [], 'dd', 0, 2, 2, 4), path)
        self.assertTrue(osp.isfile(path))

    def test_style(self):
        with self.assertRaises(ValueError):
            SvgPlot(width=0)
        with self.assertRaises(ValueError):
            SvgPlot(margin=0.5)
        dd = PlotSeries([1., 2.], [2., 4.], 'dd', 2, 2, 2, 4)
        style = SvgPlot(title='custom').resolved(dd)
        self.assertEqual(style.title, 'custom')
        self.assertEqual(style.x_range[0], 0.0)
        self.assertAlmostEqual(style.x_range[1], 4.2)
        self.assertEqual(SvgPlot().resolved(self.series).x_range, (0., 1.))
