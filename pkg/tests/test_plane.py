#!/usr/bin/env python
# -*- coding: utf-8 -*-

#
# PPmodel tests: projective planes and plane files
#

import itertools
import os
import tempfile
import unittest

from ppmodel.pp_base import *
from ppmodel.pp_field import field_make
from ppmodel.pp_plane import *
from ppmodel.pp_helpers import generate_pg2

class TestBuild(unittest.TestCase):
    def test_fano(self):
        fano = generate_pg2(2)
        self.assertEqual(fano.N, 7)
        self.assertEqual(len(fano.lines), 7)
        for l in fano.lines:
            self.assertEqual(len(l), 3)
        self.assertEqual(fano.incidence_count(), 21)

    def test_valid_planes(self):
        for q in (2, 3, 4, 5, 7, 8, 9):
            report = validate_plane(generate_pg2(q))
            self.assertTrue(report.ok, report.format_table())
            report = validate_plane(dual_plane(generate_pg2(q)))
            self.assertTrue(report.ok, report.format_table())

    def test_coordinates(self):
        pg = build_pg2(field_make(3, 1))
        coords = plane_points(pg)
        self.assertEqual(len(coords), 13)
        # rightmost nonzero coordinate is 1
        for c in coords:
            self.assertEqual([x for x in c if x != 0][-1], 1)
        self.assertEqual(list(coords), sorted(coords))

    def test_line_through(self):
        fano = generate_pg2(2)
        for P, Q in itertools.combinations(range(7), 2):
            l = line_through(fano, P, Q)
            self.assertIn(P, fano.lines[l])
            self.assertIn(Q, fano.lines[l])
        self.assertRaises(domain_error, line_through, fano, 3, 3)

    def test_fano_line(self):
        fano = generate_pg2(2)
        coords = plane_points(fano)
        self.assertEqual(coords[0], (0, 0, 1))
        self.assertEqual(coords[1], (0, 1, 0))
        # the line x0 = 0
        self.assertEqual(line_through(fano, 0, 1), 3)
        self.assertEqual(fano.line_coords[3], (1, 0, 0))
        self.assertEqual(fano.lines[3], (0, 1, 2))
        self.assertEqual(coords[2], (0, 1, 1))

class TestDual(unittest.TestCase):
    def test_dual_valid(self):
        for q in (2, 3, 4):
            pg = generate_pg2(q)
            self.assertTrue(validate_plane(dual_plane(pg)).ok)

    def test_double_dual(self):
        pg = generate_pg2(3)
        self.assertEqual(dual_plane(dual_plane(pg)).lines, pg.lines)

class TestValidation(unittest.TestCase):
    def test_broken_plane(self):
        fano = generate_pg2(2)
        lines = list(fano.lines)
        lines[0] = lines[1]
        report = validate_plane(plane(2, lines))
        self.assertFalse(report.ok)
        self.assertEqual(report.status_of(ax_pair_multi), "fail")
        self.assertEqual(report.status_of(ax_pair_none), "fail")

    def test_wrong_line_size(self):
        fano = generate_pg2(2)
        lines = list(fano.lines)
        lines[0] = lines[0][:2]
        report = validate_plane(plane(2, lines))
        self.assertEqual(report.status_of(ax_line_size), "fail")

    def test_negative_index(self):
        lines = [list(l) for l in generate_pg2(2).lines]
        lines[0][0] = -1
        report = validate_plane(plane(2, lines))
        self.assertFalse(report.ok)
        self.assertEqual(report.status_of(ax_point_range), "fail")
        self.assertEqual(report.status_of(ax_line_meet), "n/a")
        self.assertEqual(len(plane(2, lines).line_bitsets()), 7)

class TestPlaneFiles(unittest.TestCase):
    def setUp(self):
        self.tmpdir = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.tmpdir.cleanup()

    def write(self, text):
        path = os.path.join(self.tmpdir.name, "plane.txt")
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
        return path

    def test_roundtrip(self):
        pg = generate_pg2(3)
        path = os.path.join(self.tmpdir.name, "pg23.txt")
        save_plane(pg, path)
        loaded = load_plane(path)
        self.assertEqual(loaded.lines, pg.lines)
        self.assertEqual(plane_to_text(loaded), plane_to_text(pg))

    def test_comments(self):
        text = plane_to_text(generate_pg2(2))
        path = self.write("# Fano plane\n" + text)
        self.assertEqual(load_plane(path).N, 7)

    def test_bad_header(self):
        path = self.write("plane order=2\n0 1 2\n")
        with self.assertRaises(parse_error) as cm:
            load_plane(path)
        self.assertEqual(cm.exception.lineno, 1)

    def test_line_count(self):
        text = plane_to_text(generate_pg2(2))
        path = self.write("\n".join(text.split("\n")[:-2]) + "\n")
        self.assertRaises(parse_error, load_plane, path)

    def test_not_increasing(self):
        lines = plane_to_text(generate_pg2(2)).split("\n")
        lines[1] = " ".join(reversed(lines[1].split(" ")))
        path = self.write("\n".join(lines))
        with self.assertRaises(parse_error) as cm:
            load_plane(path)
        self.assertEqual(cm.exception.lineno, 2)

    def test_index_out_of_range(self):
        for lineno, col, value in ((2, 0, "-1"), (4, -1, "30000"), (8, -1, "7")):
            lines = plane_to_text(generate_pg2(2)).split("\n")
            row = lines[lineno - 1].split(" ")
            row[col] = value
            lines[lineno - 1] = " ".join(row)
            path = self.write("\n".join(lines))
            with self.assertRaises(parse_error) as cm:
                load_plane(path)
            self.assertEqual(cm.exception.lineno, lineno, value)

    def test_order_mismatch(self):
        path = self.write(plane_to_text(generate_pg2(2)))
        self.assertRaises(order_mismatch_error, load_plane, path, 3)

    def test_axiom_violation(self):
        lines = plane_to_text(generate_pg2(2)).split("\n")
        lines[1] = lines[2]
        path = self.write("\n".join(lines))
        with self.assertRaises(axiom_error) as cm:
            load_plane(path)
        self.assertFalse(cm.exception.report.ok)

if __name__ == "__main__":
    unittest.main()
