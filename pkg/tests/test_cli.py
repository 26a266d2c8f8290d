#!/usr/bin/env python
# -*- coding: utf-8 -*-

#
# PPmodel tests: command line tool
#

import contextlib
import io
import json
import os
import tempfile
import unittest

from ppmodel.pp_base import *
from ppmodel.pp_cli import main
from ppmodel.pp_plane import plane_to_text
from ppmodel.pp_poly import sample_set, save_counts_csv
from ppmodel.pp_helpers import generate_pg2

def c6_closed(n):
    N = n * n + n + 1
    return N * (N - 1) * n * n // 6

class TestCommandLine(unittest.TestCase):
    def setUp(self):
        self.tmpdir = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.tmpdir.cleanup()

    def path(self, name):
        return os.path.join(self.tmpdir.name, name)

    def run_main(self, argv):
        # table and log output go to stderr
        with contextlib.redirect_stderr(io.StringIO()):
            return main(argv)

    def run_json(self, argv, expected_code=0):
        out = self.path("out.json")
        self.assertEqual(self.run_main(argv + ["--out", out]), expected_code)
        with open(out, encoding="utf-8") as f:
            return json.load(f)

    def read(self, path):
        with open(path, encoding="utf-8") as f:
            return f.read()

    def test_cycles(self):
        result = self.run_json(["cycles", "--p", "2", "--k", "3"])
        self.assertEqual(result["count"], "28")
        self.assertNotIn("seconds", result)
        result = self.run_json(["cycles", "--n", "3", "--k", "4", "--cross-check", "--timings"])
        self.assertEqual(result["count"], "702")
        self.assertEqual(result["cross_check"]["count"], "702")
        self.assertIn("seconds", result)

    def test_walks(self):
        result = self.run_json(["walks", "--n", "2", "--k", "3"])
        self.assertEqual(result["formula"], "1554")
        self.assertEqual(result["direct"], "1554")
        self.assertTrue(result["ok"])

    def test_census(self):
        result = self.run_json(["census", "--p", "2", "--k", "4"])
        self.assertEqual(result["Q"], {"1": "0", "2": "0", "3": "672", "4": "168"})
        self.assertEqual(result["A_k"], "672")
        self.assertTrue(result["checks"]["ok"])

    def test_bounds(self):
        result = self.run_json(["bounds", "--p", "2", "--k", "4"])
        self.assertEqual(result["c_prev"], "28")
        self.assertTrue(result["bounds"]["ok"])

    def test_cap(self):
        self.assertEqual(self.run_json(["cap", "--v", "14", "--k", "3"])["cap"], "35")
        result = self.run_json(["cap", "--p", "2", "--k", "4"])
        self.assertEqual((result["cap"], result["count"]), ("105", "21"))

    def test_plane_files(self):
        gen = self.path("pg3.txt")
        self.assertEqual(self.run_main(["plane", "gen", "--p", "3", "--out", gen]), 0)
        self.assertEqual(self.read(gen), plane_to_text(generate_pg2(3)))
        result = self.run_json(["plane", "check", "--plane", gen])
        self.assertTrue(result["ok"])
        dual = self.path("dual.txt")
        self.assertEqual(self.run_main(["plane", "dual", "--plane", gen, "--out", dual]), 0)
        result = self.run_json(["compare", "--plane", gen, "--plane2", dual, "--kmax", "5"])
        self.assertTrue(result["ok"])

    def test_broken_plane(self):
        lines = plane_to_text(generate_pg2(2)).split("\n")
        lines[1] = lines[2]
        broken = self.path("broken.txt")
        with open(broken, "w", encoding="utf-8") as f:
            f.write("\n".join(lines))
        result = self.run_json(["plane", "check", "--plane", broken], expected_code=1)
        self.assertFalse(result["ok"])
        self.assertEqual(self.run_main(["cycles", "--plane", broken, "--k", "3"]), 2)

    def test_point_out_of_range(self):
        for col, value in ((0, "-1"), (-1, "30000")):
            lines = plane_to_text(generate_pg2(2)).split("\n")
            row = lines[1].split(" ")
            row[col] = value
            lines[1] = " ".join(row)
            bad = self.path("bad.txt")
            with open(bad, "w", encoding="utf-8") as f:
                f.write("\n".join(lines))
            self.assertEqual(self.run_main(["plane", "check", "--plane", bad, "--out", self.path("x")]), 2, value)
            self.assertEqual(self.run_main(["cycles", "--plane", bad, "--k", "3"]), 2, value)

    def test_cycle_profile(self):
        result = self.run_json(["cycles", "--p", "2", "--kmax", "5"])
        self.assertEqual([c["count"] for c in result["counts"]][:2], ["28", "21"])
        self.assertEqual([c["k"] for c in result["counts"]], [3, 4, 5])
        self.assertFalse(result["truncated"])
        self.assertTrue(result["checks"]["ok"])
        # work estimates for order 3: 121 at k=3, 820 at k=4
        result = self.run_json(["cycles", "--p", "3", "--kmax", "5", "--budget", "500"])
        self.assertEqual(len(result["counts"]), 1)
        self.assertEqual(result["truncated_at"], 4)
        self.assertEqual(self.run_main(["cycles", "--p", "3", "--kmax", "5", "--budget", "100"]), 3)

    def test_cycles_budget(self):
        self.assertEqual(self.run_main(["cycles", "--p", "3", "--k", "4", "--budget", "500"]), 3)
        self.assertEqual(self.run_main(["cycles", "--p", "3", "--k", "3", "--budget", "500", "--out", self.path("x")]), 0)
        self.assertEqual(self.run_main(["cycles", "--p", "2"]), 2)
        self.assertEqual(self.run_main(["cycles", "--p", "2", "--k", "3", "--kmax", "4"]), 2)

    def test_fit(self):
        counts = self.path("counts.csv")
        save_counts_csv(sample_set([(n, c6_closed(n)) for n in range(2, 10)]), counts)
        result = self.run_json(["fit", "--counts", counts, "--k", "3"])
        self.assertEqual(result["poly"]["coeffs"], ["0", "0", "0", "1/6", "1/3", "1/3", "1/6"])
        self.assertEqual(result["held_out"], 1)
        save_counts_csv(sample_set([(n, c6_closed(n) + (n == 9)) for n in range(2, 10)]), counts)
        self.assertEqual(self.run_main(["fit", "--counts", counts, "--k", "3", "--out", self.path("x")]), 1)

    def test_usage_errors(self):
        self.assertEqual(self.run_main(["cycles", "--k", "3"]), 2)
        self.assertEqual(self.run_main(["cycles", "--p", "2", "--n", "2", "--k", "3"]), 2)
        self.assertEqual(self.run_main(["cycles", "--p", "4", "--k", "3"]), 2)
        self.assertEqual(self.run_main(["cycles", "--p", "2", "--k", "3", "--threads", "0"]), 2)
        self.assertEqual(self.run_main(["cycles", "--p", "2", "--k", "3", "--unknown"]), 2)
        self.assertEqual(self.run_main(["frobnicate"]), 2)
        self.assertEqual(self.run_main(["conjecture", "--counts", self.path("missing.csv"), "--k", "6"]), 2)

    def test_help(self):
        with contextlib.redirect_stdout(io.StringIO()):
            self.assertEqual(self.run_main(["--help"]), 0)

    def test_budget(self):
        self.assertEqual(self.run_main(["census", "--p", "2", "--k", "4", "--budget", "10"]), 3)

    def test_deterministic(self):
        a = self.path("a.json")
        b = self.path("b.json")
        self.assertEqual(self.run_main(["census", "--p", "3", "--k", "4", "--out", a]), 0)
        self.assertEqual(self.run_main(["census", "--p", "3", "--k", "4", "--threads", "2", "--out", b]), 0)
        self.assertEqual(self.read(a), self.read(b))

    def test_log_file(self):
        log = self.path("run.log")
        self.assertEqual(self.run_main(["cycles", "--p", "2", "--k", "3", "--log-file", log, "--out", self.path("c.json")]), 0)
        configure_logging()
        self.assertIn("3-gons: 28", self.read(log))

if __name__ == "__main__":
    unittest.main()
