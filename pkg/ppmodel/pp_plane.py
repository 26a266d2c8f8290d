#!/usr/bin/env python
# -*- coding: utf-8 -*-

#
# Projective plane objects
#   Construction, validation, duality and plane files
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
PPmodel projective planes
=========================

This module declares the incidence structure of a finite projective plane
of order n: N = n^2+n+1 points and N lines, points identified by indices
0..N-1 and lines by indices 0..N-1.

* Class 'plane'
* Function 'build_pg2'
* Function 'validate_plane'
* Function 'line_through'
* Function 'dual_plane'
* Functions 'load_plane', 'save_plane', 'parse_plane' and 'plane_to_text'
* Function 'plane_points'

Plane file format (UTF-8, LF line endings)::

    projective-plane order=<n>
    <n+1 strictly increasing point indices>     (N lines)

Lines starting with '#' are comments.
"""

import itertools
import re

from myhdl import intbv

from ppmodel.pp_base import *

class plane(pp_logobject):
    """
    Incidence structure claiming to be a projective plane of order n.

    The constructor does not validate: use validate_plane() (load_plane()
    always does). Lookup tables are built from whatever
    lines are given; for invalid structures some pairs may be missing in
    pair_line (None) or resolved to the first line containing them.

    Attributes:
    * n: order
    * N: n^2+n+1
    * lines: tuple of N tuples of sorted point indices
    * point_lines: for each point, the tuple of lines through it
    * pair_line: N x N table, pair_line[P][Q] = line through P and Q
      (None on the diagonal)
    * line_meet: N x N table, line_meet[l][m] = common point of l and m
    * line_masks: point bitmask (int) of each line
    * coords: optional homogeneous coordinates of points (build_pg2)
    * line_coords: optional dual coordinates of lines (build_pg2)
    * name
    * kwargs: optional parameters to put as object attributes
    """
    def __init__(self, n, lines, name="", **kwargs):
        pp_logobject.__init__(self, logname="plane")
        self.n = n
        self.N = n * n + n + 1
        self.lines = tuple(tuple(sorted(l)) for l in lines)
        self.name = name
        self.coords = None
        self.line_coords = None
        for key in kwargs.keys():
            setattr(self, key, kwargs[key])
        if self.name != "":
            self.logname = "plane '%s'" % self.name
        self._build_lookup()

    def __repr__(self):
        if self.name != "":
            return "<%s '%s' order %d>" % (self.__class__.__name__, self.name, self.n)
        else:
            return "<%s order %d at '%d'>" % (self.__class__.__name__, self.n, id(self))

    def _build_lookup(self):
        # point count is taken from the lines, to tolerate broken structures
        npoints = self.N
        for l in self.lines:
            for P in l:
                if P >= npoints:
                    npoints = P + 1
        self.npoints = npoints
        point_lines = [[] for i in range(npoints)]
        for lidx, l in enumerate(self.lines):
            for P in l:
                if P >= 0:
                    point_lines[P].append(lidx)
        self.point_lines = tuple(tuple(x) for x in point_lines)
        self.pair_line = [[None] * npoints for i in range(npoints)]
        for lidx, l in enumerate(self.lines):
            for P, Q in itertools.combinations(l, 2):
                if P < 0 or Q < 0 or P == Q:
                    continue
                if self.pair_line[P][Q] is None:
                    self.pair_line[P][Q] = lidx
                    self.pair_line[Q][P] = lidx
        nlines = len(self.lines)
        self.line_meet = [[None] * nlines for i in range(nlines)]
        for P, plines in enumerate(self.point_lines):
            for l, m in itertools.combinations(plines, 2):
                if self.line_meet[l][m] is None:
                    self.line_meet[l][m] = P
                    self.line_meet[m][l] = P
        self.line_masks = tuple(sum(1 << P for P in l if P >= 0) for l in self.lines)

    # query functions
    def points(self):
        return range(self.N)

    def line_ids(self):
        return range(len(self.lines))

    def incidence_count(self):
        """
        Number of ones in the incidence matrix
        """
        return sum(len(l) for l in self.lines)

    def on_line(self, P, l):
        return (self.line_masks[l] >> P) & 1 == 1

    def line_through(self, P, Q):
        return line_through(self, P, Q)

    def line_bitsets(self):
        """
        Fixed width (N bits) point bitsets of every line; negative
        point indices are left out
        """
        bits = []
        for l in self.lines:
            b = intbv(0)[self.npoints:]
            for P in l:
                if P >= 0:
                    b[P] = 1
            bits.append(b)
        return bits

# *******************************
# Construction
# *******************************

def _normalized_triples(field):
    # homogeneous triples whose rightmost nonzero coordinate is 1, in
    # lexicographic order
    triples = []
    for t in itertools.product(range(field.q), repeat=3):
        nz = [c for c in t if c != 0]
        if len(nz) == 0:
            continue
        if nz[-1] == 1:
            triples.append(t)
    return triples

def build_pg2(field, name=""):
    """
    Build the Desarguesian plane PG(2,q) over a finite field.

    Points and lines are the normalized homogeneous triples over GF(q)
    (rightmost nonzero coordinate equal to 1), in lexicographic order.
    Point x lies on line a iff x.a = 0 in GF(q).

    Arguments
    * field: field_spec object
    * name: optional plane name, by default "PG(2,<q>)"

    Return: plane object
    """
    if name == "":
        name = "PG(2,%d)" % field.q
    triples = _normalized_triples(field)
    lines = []
    for a in triples:
        pts = []
        for idx, x in enumerate(triples):
            dot = field.add(field.add(field.mul(x[0], a[0]), field.mul(x[1], a[1])), field.mul(x[2], a[2]))
            if dot == 0:
                pts.append(idx)
        lines.append(pts)
    newplane = plane(field.q, lines, name=name, coords=tuple(triples), line_coords=tuple(triples), field_ref=field)
    newplane.info("built with %d points and %d lines" % (newplane.N, len(newplane.lines)))
    return newplane

def line_through(plane_ref, P, Q):
    """
    Line containing two distinct points.

    Arguments
    * plane_ref: plane object
    * P, Q: point indices

    Return: line index
    """
    if P == Q:
        raise domain_error("Points must be distinct (got %d twice)." % P)
    if P < 0 or Q < 0 or P >= plane_ref.npoints or Q >= plane_ref.npoints:
        raise domain_error("Point index out of range: %s" % repr((P, Q)))
    return plane_ref.pair_line[P][Q]

def dual_plane(plane_ref):
    """
    Exchange points and lines.

    Point i of the dual is line i of plane_ref, line j of the dual is point
    j of plane_ref.

    Return: plane object
    """
    lines = [plane_ref.point_lines[P] for P in range(plane_ref.npoints)]
    name = ""
    if plane_ref.name != "":
        name = "dual %s" % plane_ref.name
    return plane(plane_ref.n, lines, name=name, coords=plane_ref.line_coords, line_coords=plane_ref.coords)

# *******************************
# Validation
# *******************************

# axiom names used in validation reports
ax_order = "order >= 2"
ax_line_count = "expected N lines"
ax_point_range = "point index in 0..N-1"
ax_line_size = "line size = n+1"
ax_point_degree = "point on n+1 lines"
ax_pair_multi = "two points on > 1 line"
ax_pair_none = "two points on no common line"
ax_line_meet = "two lines meet in > 1 point"
ax_line_disjoint = "two lines do not meet"
ax_quadrangle = "quadrangle exists"

def _find_quadrangle(plane_ref):
    # four points no three collinear
    masks = plane_ref.line_masks
    npts = plane_ref.npoints

    def collinear(a, b, c):
        bits = (1 << a) | (1 << b) | (1 << c)
        return any(m & bits == bits for m in masks)

    for a, b in itertools.combinations(range(npts), 2):
        for c in range(b + 1, npts):
            if collinear(a, b, c):
                continue
            for d in range(c + 1, npts):
                if not (collinear(a, b, d) or collinear(a, c, d) or collinear(b, c, d)):
                    return (a, b, c, d)
    return None

def validate_plane(plane_ref, max_witnesses=10):
    """
    Exhaustive check of the projective plane axioms.

    Violations are report items with a witness, not errors.

    Arguments
    * plane_ref: plane object
    * max_witnesses: optional number of failing witnesses reported per axiom

    Return: check_report object
    """
    report = check_report("plane axioms %s" % plane_ref.name)
    n = plane_ref.n
    N = plane_ref.N

    def add_axiom(name, witnesses, count=None):
        if count is None:
            count = len(witnesses)
        if count == 0:
            report.add(name, True)
        else:
            report.add(name, False, witness=witnesses[:max_witnesses], note="%d violations" % count)

    add_axiom(ax_order, [] if n >= 2 else [n])
    add_axiom(ax_line_count, [] if len(plane_ref.lines) == N else [len(plane_ref.lines)])
    bad_range = [(lidx, P) for lidx, l in enumerate(plane_ref.lines) for P in l if P < 0 or P >= N]
    add_axiom(ax_point_range, bad_range)
    bad_size = [(lidx, len(l)) for lidx, l in enumerate(plane_ref.lines) if len(l) != n + 1 or len(set(l)) != len(l)]
    add_axiom(ax_line_size, bad_size)
    bad_degree = [(P, len(plane_ref.point_lines[P]) if P < plane_ref.npoints else 0) for P in range(max(N, plane_ref.npoints))
                  if P >= plane_ref.npoints or len(plane_ref.point_lines[P]) != n + 1]
    add_axiom(ax_point_degree, bad_degree)

    # point pairs
    pair_count = {}
    for lidx, l in enumerate(plane_ref.lines):
        for P, Q in itertools.combinations(sorted(set(l)), 2):
            pair_count.setdefault((P, Q), []).append(lidx)
    multi = [(pair, lines) for pair, lines in sorted(pair_count.items()) if len(lines) > 1]
    add_axiom(ax_pair_multi, multi)
    missing = []
    nmissing = 0
    for P, Q in itertools.combinations(range(N), 2):
        if (P, Q) not in pair_count:
            nmissing += 1
            if len(missing) < max_witnesses:
                missing.append((P, Q))
    add_axiom(ax_pair_none, missing, nmissing)

    # line pairs, with fixed width point bitsets over in-range points
    if bad_range:
        report.add(ax_line_meet, "n/a", note="point indices out of range")
        report.add(ax_line_disjoint, "n/a", note="point indices out of range")
    else:
        bits = plane_ref.line_bitsets()
        meet_multi = []
        disjoint = []
        nmeet = 0
        ndisjoint = 0
        for l, m in itertools.combinations(range(len(bits)), 2):
            common = int(bits[l] & bits[m]).bit_count()
            if common > 1:
                nmeet += 1
                if len(meet_multi) < max_witnesses:
                    meet_multi.append((l, m, common))
            elif common == 0:
                ndisjoint += 1
                if len(disjoint) < max_witnesses:
                    disjoint.append((l, m))
        add_axiom(ax_line_meet, meet_multi, nmeet)
        add_axiom(ax_line_disjoint, disjoint, ndisjoint)

    quad = _find_quadrangle(plane_ref)
    if quad is None:
        report.add(ax_quadrangle, False, note="no four points with no three collinear")
    else:
        report.add(ax_quadrangle, True, witness=quad)

    # incidence totals
    total = plane_ref.incidence_count()
    report.add("incidences = N(n+1)", total == N * (n + 1), lhs=total, rhs=N * (n + 1))

    if report.ok:
        plane_ref.debug("validation passed")
    else:
        plane_ref.warning("validation failed: %s" % ", ".join(i["item"] for i in report.failures()))
    return report

# *******************************
# Plane files
# *******************************

header_re = re.compile(r"^projective-plane order=(\d+)$")

def plane_to_text(plane_ref):
    """
    Canonical text serialization of a plane
    """
    out = ["projective-plane order=%d" % plane_ref.n]
    for l in plane_ref.lines:
        out.append(" ".join(str(P) for P in l))
    return "\n".join(out) + "\n"

def save_plane(plane_ref, path):
    """
    Write a plane file in canonical form.

    Arguments
    * plane_ref: plane object
    * path: file name
    """
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(plane_to_text(plane_ref))

def parse_plane(text, name="", expected_order=None):
    """
    Parse plane file contents and validate the result.

    Arguments
    * text: file contents
    * name: optional plane name
    * expected_order: optional order the file must declare

    Return: plane object
    """
    n = None
    lines = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        if raw.startswith("#"):
            continue
        if raw.strip() == "":
            if raw == "":
                continue
            raise parse_error("blank line with whitespace", lineno)
        if n is None:
            m = header_re.match(raw)
            if m is None:
                raise parse_error("expected header 'projective-plane order=<n>'", lineno)
            n = int(m.group(1))
            if n < 2:
                raise parse_error("degenerate order %d (must be >= 2)" % n, lineno)
            if expected_order is not None and n != expected_order:
                raise order_mismatch_error("File declares order %d, expected %d." % (n, expected_order))
            N = n * n + n + 1
            continue
        tokens = raw.split(" ")
        try:
            pts = [int(t) for t in tokens]
        except ValueError:
            raise parse_error("malformed line %s" % repr(raw), lineno)
        if any(t != str(P) for t, P in zip(tokens, pts)):
            raise parse_error("malformed line %s" % repr(raw), lineno)
        for a, b in zip(pts, pts[1:]):
            if a >= b:
                raise parse_error("point indices not strictly increasing", lineno)
        for P in pts:
            if P < 0 or P >= N:
                raise parse_error("point index %d outside 0..%d" % (P, N - 1), lineno)
        lines.append(pts)
    if n is None:
        raise parse_error("empty plane file")
    if len(lines) != N:
        raise parse_error("expected %d lines, found %d" % (N, len(lines)))
    newplane = plane(n, lines, name=name)
    report = validate_plane(newplane)
    if not report.ok:
        raise axiom_error("Plane violates: %s" % ", ".join(i["item"] for i in report.failures()), report)
    return newplane

def load_plane(path, expected_order=None):
    """
    Read and validate a plane file.

    Arguments
    * path: file name
    * expected_order: optional order the file must declare

    Return: plane object
    """
    with open(path, "r", encoding="utf-8", newline="") as f:
        text = f.read()
    return parse_plane(text, name=str(path), expected_order=expected_order)

def plane_points(plane_ref):
    """
    Homogeneous coordinates of the points (None for planes read from files)
    """
    return plane_ref.coords
