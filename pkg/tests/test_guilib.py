#!/usr/bin/env python
# -*- coding: utf-8 -*-

#
# PPmodel tests: drawing utilities
#

import os
import tempfile
import unittest

from ppmodel.pp_guilib import has_matplotlib, draw_levi, draw_incidence_subgraph
from ppmodel.pp_quasigon import gamma_of, line_sequence
from ppmodel.pp_helpers import generate_heawood, generate_pg2

@unittest.skipUnless(has_matplotlib, "matplotlib not installed")
class TestDrawing(unittest.TestCase):
    def setUp(self):
        self.tmpdir = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.tmpdir.cleanup()

    def test_levi(self):
        filename = os.path.join(self.tmpdir.name, "heawood.png")
        fig = draw_levi(generate_heawood(), filename)
        self.assertIsNotNone(fig)
        self.assertTrue(os.path.getsize(filename) > 0)

    def test_incidence_subgraph(self):
        fano = generate_pg2(2)
        qg = line_sequence(fano, (0, 1, 2, 3))
        filename = os.path.join(self.tmpdir.name, "gamma.png")
        self.assertIsNotNone(draw_incidence_subgraph(gamma_of(fano, qg), fano.N, filename))
        self.assertTrue(os.path.exists(filename))

if __name__ == "__main__":
    unittest.main()
