#!/usr/bin/env python
# -*- coding: utf-8 -*-

#
# PPmodel tests: polynomials, fitting and bounds
#

import os
import tempfile
import unittest
from fractions import Fraction

from ppmodel.pp_base import *
from ppmodel.pp_poly import *
from ppmodel.pp_cycles import count_gons
from ppmodel.pp_helpers import generate_pg2

slow_tests = os.environ.get("PPMODEL_SLOW", "") == "1"

def c6_closed(n):
    N = n * n + n + 1
    return N * (N - 1) * n * n // 6

def c8_closed(n):
    N = n * n + n + 1
    return N * (N - 1) * n * n * (n - 1) * (n - 1) // 8

class TestFallingFactorial(unittest.TestCase):
    def test_values(self):
        self.assertEqual(falling_factorial(5, 3), 60)
        self.assertEqual(falling_factorial(3, 4), 0)
        self.assertEqual(falling_factorial(7, 0), 1)
        self.assertEqual(falling_factorial(Fraction(1, 2), 2), Fraction(-1, 4))
        self.assertRaises(domain_error, falling_factorial, 5, -1)

    def test_polynomial(self):
        n = rational_poly.variable()
        ff = poly_falling_factorial(n, 3)
        self.assertEqual(ff.coeffs, (0, 2, -3, 1))
        for x in range(6):
            self.assertEqual(ff(x), falling_factorial(x, 3))

class TestRationalPoly(unittest.TestCase):
    def test_arithmetic(self):
        n = rational_poly.variable()
        p = (n + 1) ** 2
        self.assertEqual(p.coeffs, (1, 2, 1))
        self.assertEqual((p - n * n).coeffs, (1, 2))
        self.assertEqual(p - p, 0)
        self.assertEqual(rational_poly().degree, -1)
        self.assertEqual(p.leading(), 1)

    def test_compose(self):
        n = rational_poly.variable()
        N = plane_size_poly()
        self.assertEqual(N(2), 7)
        self.assertEqual((n * n).compose(n + 1), (n + 1) ** 2)

    def test_text(self):
        p = rational_poly([Fraction(1, 6), 0, -1])
        self.assertEqual(p.to_text(), "-1*n^2 + 1/6")
        self.assertEqual(rational_poly().to_text(), "0")

class TestFit(unittest.TestCase):
    def test_square(self):
        poly = fit_exact([(1, 1), (2, 4), (3, 9)], 2)
        self.assertEqual(poly.coeffs, (0, 0, 1))

    def test_sample_errors(self):
        self.assertRaises(domain_error, sample_set, [(2, 1), (2, 3)])
        self.assertRaises(domain_error, fit_exact, [(1, 1), (2, 4)], 2)

    def test_hexagons(self):
        samples = sample_set([(n, c6_closed(n)) for n in range(2, 9)], k=3)
        poly = fit_exact(samples, 6)
        report = table1_check(poly, 3)
        self.assertTrue(report.ok, report.format_table())
        self.assertTrue(holdout_check(poly, [(11, c6_closed(11))]).ok)

    def test_octagons(self):
        samples = sample_set([(n, c8_closed(n)) for n in range(2, 11)], k=4)
        poly = fit_exact(samples, 8)
        self.assertTrue(table1_check(poly, 4).ok)
        self.assertEqual(poly(2), 21)

    def test_wrong_coefficient(self):
        poly = fit_exact([(n, c6_closed(n)) for n in range(2, 9)], 6)
        poly = poly + rational_poly([0, 0, 0, 0, 0, Fraction(1, 6)])
        report = table1_check(poly, 3)
        self.assertFalse(report.ok)
        self.assertEqual(report.status_of("coefficient 2 (n^5)"), "fail")
        self.assertEqual(report.status_of("coefficient 1 (n^6)"), "pass")

    def test_holdout_failure(self):
        poly = fit_exact([(1, 1), (2, 4), (3, 9)], 2)
        report = holdout_check(poly, [(4, 16), (5, 26)])
        self.assertEqual(report.status_of("n = 4"), "pass")
        self.assertEqual(report.status_of("n = 5"), "fail")

    def test_untabulated(self):
        report = table1_check(rational_poly([0] * 22 + [Fraction(1, 22)]), 11)
        self.assertTrue(report.ok)
        self.assertEqual(report.status_of("tabulated row"), "n/a")

@unittest.skipUnless(slow_tests, "set PPMODEL_SLOW=1")
class TestFitFromPlanes(unittest.TestCase):
    def fit_counts(self, k, orders, holdout):
        samples = sample_set([(q, count_gons(generate_pg2(q), k, threads=8).count) for q in orders], k=k)
        poly = fit_exact(samples, 2 * k)
        report = table1_check(poly, k)
        report.extend(holdout_check(poly, [(holdout, count_gons(generate_pg2(holdout), k, threads=8).count)]))
        return report

    def test_hexagons(self):
        report = self.fit_counts(3, (2, 3, 4, 5, 7, 8, 9), 11)
        self.assertTrue(report.ok, report.format_table())

    def test_octagons(self):
        report = self.fit_counts(4, (2, 3, 4, 5, 7, 8, 9, 11, 13), 16)
        self.assertTrue(report.ok, report.format_table())

class TestMainTerms(unittest.TestCase):
    def test_leading(self):
        for k in range(3, 11):
            self.assertTrue(theorem1_check(k).ok)

    def test_agrees_with_table(self):
        # hexagons have an extra n^5 term
        for k in range(4, 11):
            main = theorem1_main_terms(k)
            self.assertEqual(main.coeff(2 * k), table1[k][0])
            self.assertEqual(main.coeff(2 * k - 1), table1[k][1])

class TestBounds(unittest.TestCase):
    def test_cap(self):
        self.assertEqual(theorem5_cap(14, 3), 35)
        self.assertEqual(theorem5_cap(14, 4), 105)
        self.assertEqual(theorem5_cap(6, 4), 0)
        self.assertRaises(domain_error, theorem5_cap, 15, 3)

    def test_upper_without_previous(self):
        for n, k in ((4, 4), (5, 4), (5, 5)):
            N = n * n + n + 1
            self.assertEqual(theorem4_upper(n, k, 0), theorem5_cap(2 * N, k))

    def test_lower_below_main(self):
        for n, k in ((4, 4), (5, 5), (7, 4)):
            N = n * n + n + 1
            self.assertLess(theorem3_lower(n, k), Fraction(falling_factorial(N, k), 2 * k))

    def test_preconditions(self):
        self.assertRaises(precondition_error, theorem3_lower, 3, 4)
        self.assertRaises(precondition_error, theorem4_upper, 4, 3, 0)

    def test_octagon_bounds(self):
        # order 4 has 7560 octagons and 1120 hexagons
        self.assertEqual(c8_closed(4), 7560)
        self.assertLessEqual(theorem3_lower(4, 4), 7560)
        self.assertGreaterEqual(theorem4_upper(4, 4, c6_closed(4)), 7560)

    def test_extremal_ratio(self):
        r = extremal_ratio(2, 3, 28)
        self.assertEqual(r["v"], 14)
        self.assertEqual(r["count_ratio"], Fraction(28, 14**3))
        self.assertEqual(r["cap_ratio"], Fraction(35, 14**3))
        self.assertEqual(r["limit"], Fraction(1, 48))

class TestConjecture(unittest.TestCase):
    def test_residuals(self):
        samples = [(n, int(conjecture_main(n, 6)) + 5 * n**8) for n in (6, 12)]
        report = conjecture_residuals(6, samples)
        self.assertEqual(report.ratios, [5, 5])
        self.assertEqual(report.abs_max, 5)
        self.assertTrue(report.non_increasing)
        # informational only
        self.assertTrue(report.ok)

    def test_errors(self):
        self.assertRaises(domain_error, conjecture_residuals, 5, [(2, 1), (3, 1)])
        self.assertRaises(domain_error, conjecture_residuals, 6, [(7, 1)])

class TestCountsFiles(unittest.TestCase):
    def setUp(self):
        self.tmpdir = tempfile.TemporaryDirectory()
        self.path = os.path.join(self.tmpdir.name, "counts.csv")

    def tearDown(self):
        self.tmpdir.cleanup()

    def test_save_load(self):
        samples = sample_set([(3, 234), (2, 28)])
        save_counts_csv(samples, self.path)
        with open(self.path, encoding="utf-8") as f:
            self.assertEqual(f.read(), "n,count\n2,28\n3,234\n")
        self.assertEqual(load_counts_csv(self.path, k=3), [(2, 28), (3, 234)])

    def test_bad_header(self):
        with open(self.path, "w", encoding="utf-8") as f:
            f.write("order,count\n2,28\n")
        with self.assertRaises(parse_error) as cm:
            load_counts_csv(self.path)
        self.assertEqual(cm.exception.lineno, 1)

    def test_bad_row(self):
        with open(self.path, "w", encoding="utf-8") as f:
            f.write("n,count\n2,28\n3,x\n")
        with self.assertRaises(parse_error) as cm:
            load_counts_csv(self.path)
        self.assertEqual(cm.exception.lineno, 3)

if __name__ == "__main__":
    unittest.main()
