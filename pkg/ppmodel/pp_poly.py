#!/usr/bin/env python
# -*- coding: utf-8 -*-

#
# Exact polynomials and bounds
#   Rational polynomials in n, interpolation of cycle counts and bound formulas
#
# Author:  Oscar Diaz
# Version: 0.1
# Date:    18-10-2026

#
# This code is free software; you can redistribute it and/or
# modify it under the terms of the GNU Lesser General Public
# License as published by the Free Software Foundation; either
# version 2.1 of the License, or (at your option) any later version.
#
# This code is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU
# Lesser General Public License for more details.
#
# You should have received a copy of the GNU Lesser General Public
# License along with this library; if not, write to the
# Free Software  Foundation, Inc., 59 Temple Place, Suite 330,
# Boston, MA  02111-1307  USA
#

#
# Changelog:
#
# 18-10-2026 : (OD) initial release
#

"""
=========================
PPmodel exact polynomials
=========================

Exact rational arithmetic for cycle count polynomials:

* Function 'falling_factorial'
* Class 'rational_poly'
* Class 'sample_set'
* Function 'fit_exact'
* Functions 'table1_check', 'theorem1_main_terms' and 'theorem1_check'
* Functions 'theorem3_lower', 'theorem4_upper' and 'theorem5_cap'
* Function 'conjecture_residuals'
* Functions 'extremal_ratio' and 'holdout_check'
* Functions 'load_counts_csv' and 'save_counts_csv'

No floating point is used: integers and fractions.Fraction only.
"""

import csv
import math
from fractions import Fraction

from ppmodel.pp_base import *

def falling_factorial(x, k):
    """
    x(x-1)...(x-k+1), with x_(0) = 1.

    x may be an integer, a Fraction or a rational_poly.
    """
    if k < 0:
        raise domain_error("Falling factorial needs k >= 0 (got %d)." % k)
    result = rational_poly([1]) if isinstance(x, rational_poly) else 1
    for i in range(k):
        result = (x - i) * result
    return result

class rational_poly():
    """
    Polynomial in n with exact rational coefficients.

    Attributes:
    * coeffs: tuple of Fraction, lowest degree first, no trailing zeros
      (empty for the zero polynomial)
    """
    def __init__(self, coeffs=(), **kwargs):
        c = [Fraction(x) for x in coeffs]
        while len(c) > 0 and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)
        for key in kwargs.keys():
            setattr(self, key, kwargs[key])

    @classmethod
    def variable(cls):
        return cls([0, 1])

    def __repr__(self):
        return "<%s %s>" % (self.__class__.__name__, self.to_text())

    def to_text(self):
        if self.is_zero():
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                terms.append(rational_str(c))
            elif i == 1:
                terms.append("%s*n" % rational_str(c))
            else:
                terms.append("%s*n^%d" % (rational_str(c), i))
        return " + ".join(terms)

    @property
    def degree(self):
        # zero polynomial has degree -1
        return len(self.coeffs) - 1

    def is_zero(self):
        return len(self.coeffs) == 0

    def coeff(self, i):
        if i < 0 or i >= len(self.coeffs):
            return Fraction(0)
        return self.coeffs[i]

    def leading(self):
        return self.coeff(self.degree)

    def __call__(self, x):
        # Horner
        result = Fraction(0)
        for c in reversed(self.coeffs):
            result = result * x + c
        return result

    def _coerce(self, other):
        if isinstance(other, rational_poly):
            return other
        return rational_poly([other])

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = rational_poly([other])
        if not isinstance(other, rational_poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = self._coerce(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return rational_poly([self.coeff(i) + other.coeff(i) for i in range(size)])

    __radd__ = __add__

    def __neg__(self):
        return rational_poly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return rational_poly()
        prod = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                prod[i + j] += a * b
        return rational_poly(prod)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise domain_error("Negative polynomial power.")
        result = rational_poly([1])
        for i in range(e):
            result = result * self
        return result

    def compose(self, inner):
        """
        self(inner(n))
        """
        result = rational_poly()
        for c in reversed(self.coeffs):
            result = result * inner + c
        return result

    def to_dict(self):
        return {"degree": self.degree, "coeffs": [rational_str(c) for c in self.coeffs]}

def poly_falling_factorial(poly, k):
    return falling_factorial(poly, k)

def plane_size_poly():
    """
    N = n^2 + n + 1 as a polynomial in n
    """
    return rational_poly([1, 1, 1])

# *******************************
# Samples and fitting
# *******************************

class sample_set(list):
    """
    List of (n, count) pairs sorted by n, all n distinct.

    Arguments
    * pairs: iterable of (n, count)
    * kwargs: optional parameters to put as object attributes (like k)
    """
    def __init__(self, pairs=(), **kwargs):
        pairs = sorted((int(n), int(c)) for n, c in pairs)
        for a, b in zip(pairs, pairs[1:]):
            if a[0] == b[0]:
                raise domain_error("Duplicate sample at n = %d." % a[0])
        list.__init__(self, pairs)
        self.k = None
        for key in kwargs.keys():
            setattr(self, key, kwargs[key])

    def orders(self):
        return [n for n, c in self]

    def counts(self):
        return [c for n, c in self]

def fit_exact(samples, d):
    """
    Interpolating polynomial of degree <= d through exactly d+1 samples.

    Newton divided differences in exact rationals, expanded to the
    monomial basis and re-evaluated at every sample.

    Arguments
    * samples: sample_set (or list of (n, count) pairs)
    * d: polynomial degree

    Return: rational_poly
    """
    if not isinstance(samples, sample_set):
        samples = sample_set(samples)
    if len(samples) != d + 1:
        raise domain_error("Degree %d fit needs exactly %d samples, got %d." % (d, d + 1, len(samples)))
    xs = [Fraction(n) for n, c in samples]
    table = [Fraction(c) for n, c in samples]
    newton = [table[0]]
    for level in range(1, d + 1):
        table = [(table[i + 1] - table[i]) / (xs[i + level] - xs[i]) for i in range(len(table) - 1)]
        newton.append(table[0])
    result = rational_poly()
    for level in range(d, -1, -1):
        result = result * rational_poly([-xs[level], 1]) + newton[level]
    for n, c in samples:
        if result(n) != c:
            raise pp_error("Interpolation check failed at n = %d." % n)
    return result

def holdout_check(poly, samples):
    """
    Evaluate a fitted polynomial at held-out samples.

    Return: check_report, one item per sample
    """
    report = check_report("held-out evaluation")
    for n, c in samples:
        value = poly(n)
        report.add("n = %d" % n, value == c, lhs=value, rhs=c)
    return report

# *******************************
# Coefficient table
# *******************************

# coefficients of n^2k, n^2k-1, n^2k-2, n^2k-3 in c_2k
table1 = {
    3: (Fraction(1, 6), Fraction(1, 3), Fraction(1, 3), Fraction(1, 6)),
    4: (Fraction(1, 8), Fraction(0), Fraction(-1, 8), Fraction(-1, 8)),
    5: (Fraction(1, 10), Fraction(0), Fraction(0), Fraction(-1, 10)),
    6: (Fraction(1, 12), Fraction(0), Fraction(-1, 2), Fraction(0)),
    7: (Fraction(1, 14), Fraction(0), Fraction(-1), Fraction(3, 2)),
    8: (Fraction(1, 16), Fraction(0), Fraction(-3, 2), Fraction(3)),
    9: (Fraction(1, 18), Fraction(0), Fraction(-2), Fraction(9, 2)),
    10: (Fraction(1, 20), Fraction(0), Fraction(-5, 2), Fraction(6)),
}

def table1_check(poly, k):
    """
    Compare the four leading coefficients of a c_2k polynomial with the
    tabulated ones.

    For k outside 3..10 only a_2k = 1/2k and a_2k-1 = 0 are checked. Item
    names carry the 1-based position of the coefficient.

    Return: check_report
    """
    report = check_report("coefficients k=%d" % k)
    report.add("degree = 2k", poly.degree == 2 * k, lhs=poly.degree, rhs=2 * k)
    if k in table1:
        expected = table1[k]
    else:
        expected = (Fraction(1, 2 * k), Fraction(0))
        report.add("tabulated row", report.status_na, note="k=%d not tabulated, generic checks only" % k)
    for pos, value in enumerate(expected):
        exp = 2 * k - pos
        report.add("coefficient %d (n^%d)" % (pos + 1, exp), poly.coeff(exp) == value, lhs=poly.coeff(exp), rhs=value)
    return report

def theorem1_main_terms(k):
    """
    (1/2k)N_(k) - (1/2)(n-1)N_(k-1) as a polynomial in n
    """
    if k < 3:
        raise domain_error("Cycle half length must be at least 3 (got %d)." % k)
    N = plane_size_poly()
    n = rational_poly.variable()
    return Fraction(1, 2 * k) * poly_falling_factorial(N, k) - Fraction(1, 2) * (n - 1) * poly_falling_factorial(N, k - 1)

def theorem1_check(k):
    """
    Leading coefficient of the main terms is 1/2k and the n^(2k-1)
    coefficient vanishes.

    Return: check_report
    """
    main = theorem1_main_terms(k)
    report = check_report("leading terms k=%d" % k)
    report.add("degree = 2k", main.degree == 2 * k, lhs=main.degree, rhs=2 * k)
    report.add("coefficient of n^2k = 1/2k", main.coeff(2 * k) == Fraction(1, 2 * k), lhs=main.coeff(2 * k), rhs=Fraction(1, 2 * k))
    report.add("coefficient of n^(2k-1) = 0", main.coeff(2 * k - 1) == 0, lhs=main.coeff(2 * k - 1), rhs=0)
    return report

# *******************************
# Bounds
# *******************************

def _check_nk(n, k):
    if not (n >= k >= 4):
        raise precondition_error("Bound needs n >= k >= 4 (got n=%d, k=%d)." % (n, k))

def lemma6_tail(n, k):
    """
    N(n+1)_(k) + sum over j=2..k-2 of j^(k-j) k_(j) C(N,j) (n-1)^(k-j),
    an upper bound for the quasi k-gons with at most k-2 lines.
    """
    N = n * n + n + 1
    total = N * falling_factorial(n + 1, k)
    for j in range(2, k - 1):
        total += j**(k - j) * falling_factorial(k, j) * math.comb(N, j) * (n - 1)**(k - j)
    return total

def theorem3_lower(n, k):
    """
    Explicit lower bound for c_2k of a plane of order n (n >= k >= 4):

    (1/2k)N_(k) - (1/2)(n-1)N_(k-1) - ((k-1)(k-2)/2k)N_(k-1)
    - (1/2k) * lemma6_tail(n, k)

    Return: Fraction
    """
    _check_nk(n, k)
    N = n * n + n + 1
    value = Fraction(falling_factorial(N, k), 2 * k)
    value -= Fraction((n - 1) * falling_factorial(N, k - 1), 2)
    value -= Fraction((k - 1) * (k - 2) * falling_factorial(N, k - 1), 2 * k)
    value -= Fraction(lemma6_tail(n, k), 2 * k)
    return value

def theorem4_upper(n, k, c_prev):
    """
    (1/2k)N_(k) - (n-k+2)(k-1)c_2k-2, for n >= k >= 4
    """
    _check_nk(n, k)
    N = n * n + n + 1
    return Fraction(falling_factorial(N, k), 2 * k) - (n - k + 2) * (k - 1) * c_prev

def theorem5_cap(v, k):
    """
    (1/2k)(v/2)_(k): maximum number of 2k-cycles in a bipartite C4-free
    graph on v vertices. Zero when v < 2k.
    """
    if v % 2 != 0:
        raise domain_error("Vertex count must be even (got %d)." % v)
    if k < 1:
        raise domain_error("Cycle half length must be positive (got %d)." % k)
    return Fraction(falling_factorial(v // 2, k), 2 * k)

def extremal_ratio(n, k, count):
    """
    Plane based lower bound evidence, with v = 2N vertices.

    Return: dict with exact rationals count/v^k, cap/v^k and the limit
    constant 1/(2^(k+1) k)
    """
    v = 2 * (n * n + n + 1)
    return {
        "n": n,
        "k": k,
        "v": v,
        "count_ratio": Fraction(count, v**k),
        "cap_ratio": theorem5_cap(v, k) / v**k,
        "limit": Fraction(1, 2**(k + 1) * k),
    }

def conjecture_main(n, k):
    # n^2k/2k - (1/2)(k-5)n^(2k-2) + (3/2)(k-6)n^(2k-3)
    return Fraction(n**(2 * k), 2 * k) - Fraction((k - 5) * n**(2 * k - 2), 2) + Fraction(3 * (k - 6) * n**(2 * k - 3), 2)

def conjecture_residuals(k, samples):
    """
    Residuals of exact counts against the conjectured expansion for k >= 6.

    For each sample r(n) = count - main(n) and the ratio r(n)/n^(2k-4)
    are reported. Items are informational ("n/a"): the conjecture is open.

    Return: check_report with attributes ratios (list of Fraction),
    abs_max and non_increasing (|ratio| non increasing in n)
    """
    if k < 6:
        raise domain_error("Residual analysis needs k >= 6 (got %d)." % k)
    if len(samples) < 2:
        raise domain_error("Residual analysis needs at least 2 samples (got %d)." % len(samples))
    report = check_report("residuals k=%d" % k)
    ratios = []
    for n, c in sorted(samples):
        r = c - conjecture_main(n, k)
        ratio = r / n**(2 * k - 4)
        ratios.append(ratio)
        report.add("n = %d" % n, report.status_na, lhs=r, rhs=ratio, note="residual | residual/n^(2k-4)")
    non_increasing = all(abs(b) <= abs(a) for a, b in zip(ratios, ratios[1:]))
    report.ratios = ratios
    report.abs_max = max(abs(x) for x in ratios)
    report.non_increasing = non_increasing
    report.add("|ratio| non increasing", report.status_na, lhs=report.abs_max, note=str(non_increasing))
    return report

# *******************************
# Counts files
# *******************************

def load_counts_csv(path, k=None):
    """
    Read a counts file: header "n,count" then decimal integer rows.

    Return: sample_set
    """
    pairs = []
    header = False
    with open(path, "r", encoding="utf-8", newline="") as f:
        reader = csv.reader(f)
        for row in reader:
            lineno = reader.line_num
            if lineno == 1:
                if [x.strip() for x in row] != ["n", "count"]:
                    raise parse_error("expected header 'n,count'", lineno)
                header = True
                continue
            if len(row) == 0:
                continue
            if len(row) != 2:
                raise parse_error("expected 2 fields, got %d" % len(row), lineno)
            try:
                pairs.append((int(row[0]), int(row[1])))
            except ValueError:
                raise parse_error("malformed integer in %s" % repr(",".join(row)), lineno)
    if not header:
        raise parse_error("empty counts file")
    return sample_set(pairs, k=k)

def save_counts_csv(samples, path):
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(["n", "count"])
        for n, c in samples:
            writer.writerow([n, c])
