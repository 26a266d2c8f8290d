#!/usr/bin/env python
# -*- coding: utf-8 -*-

#
# PPmodel tests: cycle counting
#

import itertools
import os
import unittest

import networkx as nx

from ppmodel.pp_base import *
from ppmodel.pp_plane import dual_plane
from ppmodel.pp_levi import build_levi
from ppmodel.pp_cycles import *
from ppmodel.pp_helpers import *

slow_tests = os.environ.get("PPMODEL_SLOW", "") == "1"

def c6_closed(n):
    N = n * n + n + 1
    return N * (N - 1) * n * n // 6

def c8_closed(n):
    N = n * n + n + 1
    return N * (N - 1) * n * n * (n - 1) * (n - 1) // 8

def induced_cycles(graph, L):
    # vertex sets inducing a single L-cycle; all L-cycles are induced
    # when the girth is larger than L/2 + 1
    total = 0
    for subset in itertools.combinations(graph.nodes(), L):
        sub = graph.subgraph(subset)
        if all(d == 2 for v, d in sub.degree()) and nx.is_connected(sub):
            total += 1
    return total

class TestGraphCounter(unittest.TestCase):
    def test_heawood(self):
        g = generate_heawood()
        self.assertEqual(count_cycles_graph(g, 6).count, 28)
        self.assertEqual(count_cycles_graph(g, 8).count, 21)

    def test_brute_force(self):
        g = generate_heawood()
        for L in (6, 8):
            self.assertEqual(count_cycles_graph(g, L).count, induced_cycles(g, L))

    def test_small_graphs(self):
        self.assertEqual(count_cycles_graph(generate_cycle_graph(6), 6).count, 1)
        self.assertEqual(count_cycles_graph(generate_cycle_graph(5), 5).count, 1)
        self.assertEqual(count_cycles_graph(generate_cycle_graph(6), 4).count, 0)
        self.assertEqual(count_cycles_graph(nx.complete_graph(4), 3).count, 4)
        self.assertEqual(count_cycles_graph(nx.complete_graph(4), 4).count, 3)
        self.assertEqual(count_cycles_graph(generate_tree(3), 4).count, 0)

    def test_odd_bipartite(self):
        c = count_cycles_graph(generate_heawood(), 7)
        self.assertEqual(c.count, 0)
        self.assertTrue(c.warning)

    def test_limits(self):
        g = generate_heawood()
        self.assertRaises(size_limit_error, count_cycles_graph, g, 22)
        self.assertRaises(domain_error, count_cycles_graph, g, 2)

class TestGonCounter(unittest.TestCase):
    def test_fano(self):
        fano = generate_pg2(2)
        self.assertEqual(count_gons(fano, 3).count, 28)
        self.assertEqual(count_gons(fano, 4).count, 21)
        self.assertEqual(count_gons(fano, 8).count, 0)
        self.assertRaises(domain_error, count_gons, fano, 2)

    def test_closed_forms(self):
        for q in (3, 4):
            pg = generate_pg2(q)
            self.assertEqual(count_gons(pg, 3).count, c6_closed(q))
            self.assertEqual(count_gons(pg, 4).count, c8_closed(q))

    def test_counters_agree(self):
        fano = generate_pg2(2)
        g = build_levi(fano)
        for k in range(3, 8):
            self.assertEqual(count_gons(fano, k).count, count_cycles_graph(g, 2 * k).count)
        pg = generate_pg2(3)
        g = build_levi(pg)
        for k in (3, 4, 5):
            self.assertEqual(count_gons(pg, k).count, count_cycles_graph(g, 2 * k).count)

    def test_dual(self):
        pg = generate_pg2(3)
        for k in (3, 4, 5):
            self.assertEqual(count_gons(pg, k).count, count_gons(dual_plane(pg), k).count)

    def test_threads(self):
        pg = generate_pg2(3)
        self.assertEqual(count_gons(pg, 4, threads=2).count, 702)
        self.assertEqual(count_cycles_graph(build_levi(pg), 8, threads=2).count, 702)

    def test_record(self):
        c = count_gons(generate_pg2(2), 3)
        self.assertEqual(c.cap(), 35)
        self.assertTrue(c.within_cap())
        self.assertEqual(c.to_dict(), {"n": 2, "k": 3, "count": "28", "algo": "gons"})
        self.assertIn("seconds", c.to_dict(timing=True))

    @unittest.skipUnless(slow_tests, "set PPMODEL_SLOW=1")
    def test_agreement_grid(self):
        for q in (3, 4):
            pg = generate_pg2(q)
            g = build_levi(pg)
            for k in range(3, 8):
                self.assertEqual(count_gons(pg, k, threads=4).count,
                                 count_cycles_graph(g, 2 * k, threads=4).count, (q, k))

class TestProfiles(unittest.TestCase):
    def test_profile(self):
        profile = cycle_profile(generate_pg2(2), 7)
        self.assertFalse(profile.truncated)
        self.assertEqual([c.k for c in profile], [3, 4, 5, 6, 7])
        self.assertEqual(profile.counts()[3], 28)
        for c in profile:
            self.assertTrue(c.within_cap())

    def test_truncated(self):
        # work estimates for order 3: 121 at k=3, 820 at k=4
        profile = cycle_profile(generate_pg2(3), 6, budget=500)
        self.assertTrue(profile.truncated)
        self.assertEqual(profile.truncated_at, 4)
        self.assertEqual(len(profile), 1)
        self.assertTrue(profile.to_dict()["truncated"])

    def test_compare(self):
        pg = generate_pg2(3)
        report = compare_profiles(pg, dual_plane(pg), 5)
        self.assertTrue(report.ok)
        self.assertEqual(report.status_of("c_8"), "pass")
        self.assertRaises(order_mismatch_error, compare_profiles, pg, generate_pg2(2), 4)

    def test_square(self):
        report = square_cycle_check(generate_heawood(), 3)
        self.assertTrue(report.ok, report.format_table())
        report = square_cycle_check(build_levi(generate_pg2(3)), 4)
        self.assertTrue(report.ok, report.format_table())
        report = square_cycle_check(build_levi(generate_pg2(4)), 3)
        self.assertTrue(report.ok, report.format_table())

if __name__ == "__main__":
    unittest.main()
