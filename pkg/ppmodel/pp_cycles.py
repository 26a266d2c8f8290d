#!/usr/bin/env python
# -*- coding: utf-8 -*-

#
# Cycle counting
#   Exact 2k-cycle counts in Levi graphs, graph-generic and plane-native
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
==============
PPmodel cycles
==============

Two independent exact counters:

* Function 'count_cycles_graph': L-cycles of any graph, rooted at the
  minimum vertex of each cycle.
* Function 'count_gons': k-gons of a plane (2k-cycles of its Levi graph),
  enumerated as point sequences.

And drivers built on them:

* Class 'cycle_count'
* Class 'count_profile' and function 'cycle_profile'
* Function 'compare_profiles'
* Function 'square_cycle_check'
"""

import time
from fractions import Fraction

from ppmodel.pp_base import *
from ppmodel.pp_levi import adjacency_masks, bipartition, bipartite_square
from ppmodel.pp_poly import falling_factorial, theorem5_cap

class cycle_count():
    """
    Exact count of 2k-cycles.

    Attributes:
    * n: plane order (None for generic graphs)
    * k: half length
    * count: exact integer
    * algo: "graph" or "gons"
    * seconds: wall time
    * warning: True when the count is zero by parity
    """
    def __init__(self, n, k, count, algo, seconds=0.0, warning=False, **kwargs):
        self.n = n
        self.k = k
        self.count = count
        self.algo = algo
        self.seconds = seconds
        self.warning = warning
        for key in kwargs.keys():
            setattr(self, key, kwargs[key])

    def __repr__(self):
        return "<%s n=%s k=%d count=%d (%s)>" % (self.__class__.__name__, self.n, self.k, self.count, self.algo)

    def cap(self):
        """
        Maximum count for a C4-free bipartite graph with the same order
        """
        if self.n is None:
            return None
        return theorem5_cap(2 * (self.n * self.n + self.n + 1), self.k)

    def within_cap(self):
        cap = self.cap()
        return cap is None or self.count <= cap

    def to_dict(self, timing=False):
        d = {"n": self.n, "k": self.k, "count": str(self.count), "algo": self.algo}
        if timing:
            d["seconds"] = self.seconds
        if self.warning:
            d["warning"] = True
        return d

def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low

# *******************************
# Graph-generic counter
# *******************************

# per-process state of the graph counter workers
_graph_state = {}

def _init_graph_worker(masks, length):
    _graph_state["masks"] = masks
    _graph_state["length"] = length

def _extend_path(u, used, depth, above, closers):
    masks = _graph_state["masks"]
    if depth == _graph_state["length"] - 1:
        return (masks[u] & closers & ~used).bit_count()
    total = 0
    for w in _bits(masks[u] & above & ~used):
        total += _extend_path(w, used | (1 << w), depth + 1, above, closers)
    return total

def _cycles_from_root(r):
    # cycles whose minimum vertex is r, first neighbour a < last vertex b
    masks = _graph_state["masks"]
    above = ~((1 << (r + 1)) - 1)
    rnbrs = masks[r] & above
    total = 0
    for a in _bits(rnbrs):
        closers = rnbrs & ~((1 << (a + 1)) - 1)
        if closers == 0:
            break
        total += _extend_path(a, (1 << r) | (1 << a), 2, above, closers)
    return total

def count_cycles_graph(graph, L, threads=default_threads):
    """
    Exact number of cycles of length L in a graph.

    Each cycle is found once: from its minimum vertex, first stepping to
    the smaller of its two neighbours on the cycle. Roots are spread over
    worker processes; the result does not depend on the thread count.

    Arguments
    * graph: graph with vertices 0..V-1
    * L: cycle length, 3 <= L <= 20
    * threads: optional number of worker processes

    Return: cycle_count with k = L/2 (rounded down for odd L)
    """
    log = pp_logobject("count_cycles_graph")
    n = graph.graph.get("n")
    if L > max_cycle_length:
        raise size_limit_error("Cycle length %d above the limit %d." % (L, max_cycle_length))
    if L < 3:
        raise domain_error("Cycle length must be at least 3 (got %d)." % L)
    if L % 2 == 1:
        try:
            bipartition(graph)
            log.warning("odd length %d on a bipartite graph, no cycles" % L)
            return cycle_count(n, L // 2, 0, "graph", warning=True)
        except precondition_error:
            pass
    masks = adjacency_masks(graph)
    start = time.perf_counter()
    log.info("counting %d-cycles on %d vertices, %d threads" % (L, len(masks), threads))
    count = parallel_sum(_cycles_from_root, range(len(masks)), threads, _init_graph_worker, (masks, L))
    seconds = time.perf_counter() - start
    log.info("%d-cycles: %d (%.3f s)" % (L, count, seconds))
    return cycle_count(n, L // 2, count, "graph", seconds=seconds)

# *******************************
# Plane-native counter
# *******************************

# per-process state of the k-gon counter workers
_gon_state = {}

def _init_gon_worker(point_lines, line_masks, pair_line, k):
    _gon_state["point_lines"] = point_lines
    _gon_state["line_masks"] = line_masks
    _gon_state["pair_line"] = pair_line
    _gon_state["k"] = k

def _extend_gon(P, depth, used_pts, used_lines, forb, p1mask, above, gt_p2):
    # depth: number of points chosen so far, P the last one
    point_lines = _gon_state["point_lines"]
    line_masks = _gon_state["line_masks"]
    total = 0
    last = depth == _gon_state["k"] - 1
    for l in point_lines[P]:
        if (used_lines >> l) & 1:
            continue
        lmask = line_masks[l]
        lforb = forb
        if lmask & p1mask:
            lforb |= lmask
        if last:
            total += (lmask & gt_p2 & ~used_pts & ~lforb).bit_count()
        else:
            lused = used_lines | (1 << l)
            for Q in _bits(lmask & above & ~used_pts):
                total += _extend_gon(Q, depth + 1, used_pts | (1 << Q), lused, lforb, p1mask, above, gt_p2)
    return total

def _gons_from_prefix(prefix):
    P1, P2 = prefix
    line_masks = _gon_state["line_masks"]
    l1 = _gon_state["pair_line"][P1][P2]
    p1mask = 1 << P1
    above = ~((1 << (P1 + 1)) - 1)
    gt_p2 = ~((1 << (P2 + 1)) - 1)
    # forb: points whose closing line to P1 is already used
    return _extend_gon(P2, 2, p1mask | (1 << P2), 1 << l1, line_masks[l1], p1mask, above, gt_p2)

def count_gons(plane_ref, k, threads=default_threads):
    """
    Exact number of k-gons of a plane divided by 2k, that is the number of
    2k-cycles of its Levi graph.

    Point sequences (P1..Pk) are enumerated with P1 the minimum point and
    P2 < Pk; every connecting line, the closing line PkP1 included, must
    differ from all previous ones. Work is spread over (P1, P2) prefixes.

    Arguments
    * plane_ref: plane object
    * k: number of points, k >= 3
    * threads: optional number of worker processes

    Return: cycle_count
    """
    if k < 3:
        raise domain_error("A k-gon needs k >= 3 (got %d)." % k)
    N = plane_ref.N
    if k > N:
        return cycle_count(plane_ref.n, k, 0, "gons")
    start = time.perf_counter()
    plane_ref.info("counting %d-gons, %d threads" % (k, threads))
    prefixes = [(P1, P2) for P1 in range(N) for P2 in range(P1 + 1, N)]
    initargs = (plane_ref.point_lines, plane_ref.line_masks, plane_ref.pair_line, k)
    count = parallel_sum(_gons_from_prefix, prefixes, threads, _init_gon_worker, initargs)
    seconds = time.perf_counter() - start
    plane_ref.info("%d-gons: %d (%.3f s)" % (k, count, seconds))
    return cycle_count(plane_ref.n, k, count, "gons", seconds=seconds)

# *******************************
# Profiles
# *******************************

def gon_work(n, k):
    """
    Work estimate n^2k / 2k
    """
    return n**(2 * k) // (2 * k)

class count_profile(list):
    """
    List of cycle_count objects for k = 3, 4, ...

    Attributes:
    * truncated: True when the budget stopped the profile
    * truncated_at: first k not computed (None if complete)
    """
    def __init__(self, counts=(), truncated=False, truncated_at=None):
        list.__init__(self, counts)
        self.truncated = truncated
        self.truncated_at = truncated_at

    def counts(self):
        return dict((c.k, c.count) for c in self)

    def to_dict(self, timing=False):
        return {
            "counts": [c.to_dict(timing) for c in self],
            "truncated": self.truncated,
            "truncated_at": self.truncated_at,
        }

def cycle_profile(plane_ref, k_max, threads=default_threads, budget=default_budget):
    """
    Counts of 2k-cycles for k = 3..k_max.

    Stops before the first k whose work estimate exceeds the budget and
    marks the profile as truncated. Every count is checked against the
    cap for C4-free bipartite graphs; a violation is logged as an error.

    Return: count_profile
    """
    profile = count_profile()
    for k in range(3, k_max + 1):
        work = gon_work(plane_ref.n, k)
        if work > budget:
            plane_ref.warning("profile truncated at k=%d: work %d above budget %d" % (k, work, budget))
            profile.truncated = True
            profile.truncated_at = k
            break
        c = count_gons(plane_ref, k, threads)
        if not c.within_cap():
            plane_ref.error("count for k=%d above the cap: %d > %s" % (k, c.count, rational_str(c.cap())))
        profile.append(c)
    return profile

def compare_profiles(plane_a, plane_b, k_max, threads=default_threads, budget=default_budget):
    """
    Compare the cycle profiles of two planes of the same order.

    Return: check_report, one item per k ("pass" when counts agree)
    """
    if plane_a.n != plane_b.n:
        raise order_mismatch_error("Planes have orders %d and %d." % (plane_a.n, plane_b.n))
    prof_a = cycle_profile(plane_a, k_max, threads, budget)
    prof_b = cycle_profile(plane_b, k_max, threads, budget)
    report = check_report("profile comparison order %d" % plane_a.n)
    for ca, cb in zip(prof_a, prof_b):
        report.add("c_%d" % (2 * ca.k), ca.count == cb.count, lhs=ca.count, rhs=cb.count)
    if prof_a.truncated or prof_b.truncated:
        report.add("complete profile", report.status_na, note="truncated at k=%s" % prof_a.truncated_at)
    return report

def square_cycle_check(graph, k, threads=default_threads):
    """
    Compare 2k-cycles of a C4-free bipartite graph with k-cycles of its
    square on the first side: c_2k(G) <= c_k(G^2) <= (1/2k)|side|_(k).

    Return: check_report
    """
    report = check_report("square comparison k=%d" % k)
    sq = bipartite_square(graph, "points")
    c_graph = count_cycles_graph(graph, 2 * k, threads).count
    c_square = count_cycles_graph(sq, k, threads).count
    report.add("c_2k(G) <= c_k(G^2)", c_graph <= c_square, lhs=c_graph, rhs=c_square)
    m = sq.number_of_nodes()
    bound = Fraction(falling_factorial(m, k), 2 * k)
    report.add("c_k(G^2) <= |A|_(k)/2k", c_square <= bound, lhs=c_square, rhs=bound)
    sq_simple = all(u != v for u, v in sq.edges())
    report.add("square is simple", sq_simple)
    return report
