#!/usr/bin/env python
# -*- coding: utf-8 -*-

#
# Quasi k-gons
#   Incidence subgraphs, index permutations, census and bound checks
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
=====================
PPmodel quasi k-gons
=====================

A quasi k-gon is a sequence of k distinct points (P_0..P_k-1, indices
taken mod k). Its line sequence is l_i = P_i P_i+1, the closing line
l_k-1 = P_k-1 P_0 included, and j is the number of distinct lines. A
quasi k-gon with j = k is a k-gon.

* Class 'quasigon' and function 'line_sequence'
* Class 'incidence_subgraph' and function 'gamma_of'
* Functions 'apply_perm', 'equivalent', 'dihedral_group'
* Class 'perm_group' and function 'symmetry_group'
* Class 'quasigon_census' and function 'census'
* Function 'maximal_blocks'
* Function 'check_bounds'
* Functions 'line_sequence_multiplicity' and 'find_wide_stabilizer'

Permutations are tuples of 0-based images: sigma maps position i to
sigma[i], and sigma(QG) = (P_sigma[0], .., P_sigma[k-1]).
"""

import collections
import itertools
import math
import time
from fractions import Fraction

import networkx as nx

from ppmodel.pp_base import *
from ppmodel.pp_cycles import count_gons, cycle_count
from ppmodel.pp_poly import falling_factorial, theorem3_lower, theorem4_upper

class quasigon():
    """
    Ordered sequence of k distinct points of a plane.

    Attributes:
    * points: tuple of point indices
    * line_seq: tuple of lines, line_seq[i] joins points[i] and points[i+1]
    * j: number of distinct lines
    * k
    * plane_ref: the plane
    """
    def __init__(self, points, line_seq, plane_ref=None):
        self.points = tuple(points)
        self.line_seq = tuple(line_seq)
        self.k = len(self.points)
        self.j = len(set(self.line_seq))
        self.plane_ref = plane_ref

    def __repr__(self):
        return "<%s %s lines %s j=%d>" % (self.__class__.__name__, self.points, self.line_seq, self.j)

    def is_gon(self):
        return self.j == self.k

    def in_a_k(self):
        """
        True when j = k-1 and two cyclically consecutive lines coincide
        """
        if self.j != self.k - 1:
            return False
        return any(self.line_seq[i] == self.line_seq[(i + 1) % self.k] for i in range(self.k))

    def to_dict(self):
        return {"points": list(self.points), "lines": list(self.line_seq), "j": self.j}

def line_sequence(plane_ref, points):
    """
    Build a quasi k-gon from k >= 3 distinct points.

    Return: quasigon
    """
    points = tuple(points)
    k = len(points)
    if k < 3:
        raise domain_error("A quasi k-gon needs k >= 3 points (got %d)." % k)
    if len(set(points)) != k:
        raise domain_error("Points must be distinct: %s" % repr(points))
    for P in points:
        if P < 0 or P >= plane_ref.N:
            raise domain_error("Point %d out of range." % P)
    lines = [plane_ref.pair_line[points[i]][points[(i + 1) % k]] for i in range(k)]
    return quasigon(points, lines, plane_ref)

class incidence_subgraph():
    """
    The subgraph of the Levi graph induced by a quasi k-gon: each point
    P_i is joined to the lines l_i-1 and l_i only.

    Attributes:
    * point_vertices: frozenset of points
    * line_vertices: frozenset of lines
    * edges: frozenset of (point, line) pairs
    """
    def __init__(self, point_vertices, line_vertices, edges):
        self.point_vertices = frozenset(point_vertices)
        self.line_vertices = frozenset(line_vertices)
        self.edges = frozenset(edges)

    def __eq__(self, other):
        if not isinstance(other, incidence_subgraph):
            return NotImplemented
        return self.point_vertices == other.point_vertices and \
            self.line_vertices == other.line_vertices and self.edges == other.edges

    def __hash__(self):
        return hash((self.point_vertices, self.line_vertices, self.edges))

    def __repr__(self):
        return "<%s %d points %d lines %d edges>" % (self.__class__.__name__,
            len(self.point_vertices), len(self.line_vertices), len(self.edges))

    def to_graph(self, N):
        """
        networkx graph with Levi numbering (line l is vertex N+l)
        """
        g = nx.Graph()
        for P in self.point_vertices:
            g.add_node(P, kind="point")
        for l in self.line_vertices:
            g.add_node(N + l, kind="line")
        for P, l in self.edges:
            g.add_edge(P, N + l)
        return g

    def degree(self, P):
        return sum(1 for Q, l in self.edges if Q == P)

def gamma_of(plane_ref, qg):
    """
    Incidence subgraph of a quasi k-gon.
    """
    edges = set()
    for i, P in enumerate(qg.points):
        edges.add((P, qg.line_seq[i - 1]))
        edges.add((P, qg.line_seq[i]))
    return incidence_subgraph(qg.points, qg.line_seq, edges)

# *******************************
# Permutations
# *******************************

def _check_perm(sigma, k):
    if len(sigma) != k or sorted(sigma) != list(range(k)):
        raise domain_error("Not a permutation of 0..%d: %s" % (k - 1, repr(sigma)))

def apply_perm(sigma, qg):
    """
    sigma(QG) = (P_sigma[0], .., P_sigma[k-1]), lines recomputed.
    """
    sigma = tuple(sigma)
    _check_perm(sigma, qg.k)
    return line_sequence(qg.plane_ref, [qg.points[i] for i in sigma])

def equivalent(plane_ref, qg_a, qg_b):
    """
    True when both quasi k-gons have the same incidence subgraph
    """
    if qg_a.k != qg_b.k:
        raise domain_error("Quasi-gons have different k (%d, %d)." % (qg_a.k, qg_b.k))
    return gamma_of(plane_ref, qg_a) == gamma_of(plane_ref, qg_b)

def compose(sigma, tau):
    # (sigma o tau)(i) = sigma[tau[i]]
    return tuple(sigma[t] for t in tau)

def dihedral_group(k):
    """
    The 2k permutations generated by the shift i -> i+1 and the reversal
    i -> k-1-i.

    Return: frozenset of tuples
    """
    if k < 3:
        raise domain_error("Dihedral group needs k >= 3 (got %d)." % k)
    perms = set()
    for a in range(k):
        perms.add(tuple((i + a) % k for i in range(k)))
        perms.add(tuple((a - i) % k for i in range(k)))
    return frozenset(perms)

class perm_group(frozenset):
    """
    Set of permutations of 0..k-1 with its closure status.

    Attributes:
    * k
    * closed: True when the set is a subgroup of S_k
    * generators: generating set found while checking closure
    """
    def __new__(cls, perms, k):
        obj = frozenset.__new__(cls, perms)
        obj.k = k
        obj.generators, obj.closed = _closure_check(obj, k)
        return obj

def _closure_check(perms, k):
    # greedy generating set; perms is a group iff it equals <gens>
    identity = tuple(range(k))
    if identity not in perms:
        return ((), False)
    gens = []
    generated = set([identity])
    for h in sorted(perms):
        if h in generated:
            continue
        gens.append(h)
        queue = collections.deque(generated)
        while len(queue) > 0:
            x = queue.popleft()
            for g in gens:
                y = compose(g, x)
                if y not in generated:
                    if y not in perms:
                        return (tuple(gens), False)
                    generated.add(y)
                    queue.append(y)
    return (tuple(gens), len(generated) == len(perms))

def symmetry_group(plane_ref, qg, max_k=max_symmetry_k):
    """
    Stabilizer of a quasi k-gon: all sigma with sigma(QG) equivalent to QG.

    Backtracking over permutations, pruned on each consecutive pair of
    image points: the line joining them must be a vertex of the target
    incidence subgraph, joined to both points.

    Return: perm_group
    """
    k = qg.k
    if k > max_k:
        raise size_limit_error("Stabilizer search limited to k <= %d (got %d)." % (max_k, k))
    target = gamma_of(plane_ref, qg)
    lines = target.line_vertices
    edges = target.edges
    pair_line = plane_ref.pair_line
    pts = qg.points
    found = []
    sigma = []
    free = [True] * k

    def fits(P, Q):
        l = pair_line[P][Q]
        return l in lines and (P, l) in edges and (Q, l) in edges

    def search():
        if len(sigma) == k:
            if fits(pts[sigma[-1]], pts[sigma[0]]):
                image = line_sequence(plane_ref, [pts[i] for i in sigma])
                if gamma_of(plane_ref, image) == target:
                    found.append(tuple(sigma))
            return
        for i in range(k):
            if not free[i]:
                continue
            if len(sigma) > 0 and not fits(pts[sigma[-1]], pts[i]):
                continue
            free[i] = False
            sigma.append(i)
            search()
            sigma.pop()
            free[i] = True

    search()
    group = perm_group(found, k)
    if not group.closed:
        plane_ref.error("stabilizer of %s is not closed" % repr(qg.points))
    return group

# *******************************
# Maximal blocks
# *******************************

def _cyclic_runs(seq):
    # maximal runs of equal cyclically consecutive entries, None if constant
    k = len(seq)
    start = None
    for i in range(k):
        if seq[i - 1] != seq[i]:
            start = i
            break
    if start is None:
        return None
    runs = []
    for i in range(k):
        l = seq[(start + i) % k]
        if len(runs) > 0 and runs[-1][0] == l:
            runs[-1][1] += 1
        else:
            runs.append([l, 1])
    return [tuple(r) for r in runs]

def maximal_blocks(qg):
    """
    Partition of the cyclic line sequence into maximal runs of equal lines.

    Return: list of (line, run length) starting at the first run boundary,
    or None when j = 1 (a single block with no boundary)
    """
    return _cyclic_runs(qg.line_seq)

# *******************************
# Census
# *******************************

class quasigon_census():
    """
    Exact classification of all ordered k-tuples of distinct points.

    Attributes:
    * n, k, N
    * counts: dict j -> |Q_k,j| for j = 1..k
    * A_k, B_k: split of |Q_k,k-1|
    * checks: check_report with the census identities
    """
    def __init__(self, n, k, counts, A_k, B_k, **kwargs):
        self.n = n
        self.k = k
        self.N = n * n + n + 1
        self.counts = dict(counts)
        self.A_k = A_k
        self.B_k = B_k
        self.checks = check_report("census n=%d k=%d" % (n, k))
        for key in kwargs.keys():
            setattr(self, key, kwargs[key])

    def __repr__(self):
        return "<%s n=%d k=%d>" % (self.__class__.__name__, self.n, self.k)

    def total(self):
        return sum(self.counts.values())

    def A_gamma(self):
        """
        |A_k| / 2k, as an exact rational
        """
        return Fraction(self.A_k, 2 * self.k)

    def gon_count(self):
        """
        c_2k recovered from the census: (N_(k) - sum of |Q_k,j| for j < k) / 2k
        """
        others = sum(c for j, c in self.counts.items() if j < self.k)
        return Fraction(falling_factorial(self.N, self.k) - others, 2 * self.k)

    def to_dict(self):
        return {
            "n": self.n,
            "k": self.k,
            "Q": dict((str(j), str(c)) for j, c in sorted(self.counts.items())),
            "A_k": str(self.A_k),
            "B_k": str(self.B_k),
            "checks": self.checks.to_dict(),
        }

# per-process state of the census workers
_census_state = {}

def _init_census_worker(N, k, pair_line, line_meet, deep):
    _census_state["N"] = N
    _census_state["k"] = k
    _census_state["pair_line"] = pair_line
    _census_state["line_meet"] = line_meet
    _census_state["deep"] = deep

def _census_from_prefix(prefix):
    N = _census_state["N"]
    k = _census_state["k"]
    pair_line = _census_state["pair_line"]
    line_meet = _census_state["line_meet"]
    deep = _census_state["deep"]
    P1, P2 = prefix
    acc = {"Q": [0] * (k + 1), "A": 0, "B": 0, "b_rebuild": 0, "b_dupes": 0, "blocks": 0}
    # a B_k line sequence fixes every point, P1 and P2 included, so
    # sequences from different prefixes never collide
    seen_b = set()
    points = [P1, P2]
    lines = [pair_line[P1][P2]]
    mult = [0] * N
    mult[lines[0]] = 1
    used = [False] * N
    used[P1] = used[P2] = True

    def leaf(distinct, adj_eq):
        last = points[-1]
        b = pair_line[last][P1]
        j = distinct + (1 if mult[b] == 0 else 0)
        acc["Q"][j] += 1
        if j == k - 1:
            if adj_eq > 0 or b == lines[-1] or b == lines[0]:
                acc["A"] += 1
            else:
                acc["B"] += 1
                seq = tuple(lines) + (b,)
                # consecutive lines differ: P_i = l_i-1 meet l_i
                if any(line_meet[seq[i - 1]][seq[i]] != points[i] for i in range(k)):
                    acc["b_rebuild"] += 1
                if seq in seen_b:
                    acc["b_dupes"] += 1
                seen_b.add(seq)
        if deep:
            runs = _cyclic_runs(tuple(lines) + (b,))
            if runs is not None:
                if sum(t for l, t in runs) != k or len(runs) < j:
                    acc["blocks"] += 1
            elif j != 1:
                acc["blocks"] += 1

    def extend(distinct, adj_eq):
        if len(points) == k:
            leaf(distinct, adj_eq)
            return
        P = points[-1]
        prev = lines[-1]
        for Q in range(N):
            if used[Q]:
                continue
            l = pair_line[P][Q]
            used[Q] = True
            points.append(Q)
            lines.append(l)
            mult[l] += 1
            extend(distinct + (1 if mult[l] == 1 else 0), adj_eq + (1 if l == prev else 0))
            mult[l] -= 1
            lines.pop()
            points.pop()
            used[Q] = False

    extend(1, 0)
    return acc

def census(plane_ref, k, threads=default_threads, budget=default_budget, deep=False, cross_check=True):
    """
    Exhaustive census of the quasi k-gons of a plane.

    Every ordered k-tuple of distinct points is classified by its number
    of distinct lines j; tuples with j = k-1 are split into A_k (two
    cyclically consecutive lines coincide) and B_k. Work is spread over
    the first two points.

    Checked identities (in the 'checks' report): the partition of all
    N_(k) tuples, |Q_k,1| = N(n+1)_(k), divisibility of |Q_k,k| and |A_k|
    by 2k, reconstruction of B_k members from their line sequences, and
    (with cross_check) c_2k = |Q_k,k|/2k against count_gons.

    Arguments
    * plane_ref: plane object
    * k: k >= 3
    * threads: optional number of worker processes
    * budget: optional maximum of N_(k)
    * deep: optional, also check maximal blocks of every tuple
    * cross_check: optional, compare with count_gons

    Return: quasigon_census
    """
    if k < 3:
        raise domain_error("Census needs k >= 3 (got %d)." % k)
    N = plane_ref.N
    n = plane_ref.n
    work = falling_factorial(N, k)
    if work > budget:
        raise budget_error("Census of %d tuples above budget %d." % (work, budget), work, budget)
    start = time.perf_counter()
    plane_ref.info("census k=%d over %d tuples, %d threads" % (k, work, threads))
    prefixes = [(P1, P2) for P1 in range(N) for P2 in range(N) if P1 != P2]
    initargs = (N, k, plane_ref.pair_line, plane_ref.line_meet, deep)
    partial = parallel_map(_census_from_prefix, prefixes, threads, _init_census_worker, initargs)
    Q = [0] * (k + 1)
    totals = {"A": 0, "B": 0, "b_rebuild": 0, "b_dupes": 0, "blocks": 0}
    for acc in partial:
        for j in range(k + 1):
            Q[j] += acc["Q"][j]
        for key in totals:
            totals[key] += acc[key]
    result = quasigon_census(n, k, dict((j, Q[j]) for j in range(1, k + 1)), totals["A"], totals["B"],
                             seconds=time.perf_counter() - start)
    checks = result.checks
    checks.add("sum of |Q_k,j| = N_(k)", result.total() == work, lhs=result.total(), rhs=work)
    checks.add("|Q_k,k-1| = |A_k| + |B_k|", Q[k - 1] == result.A_k + result.B_k, lhs=Q[k - 1], rhs=result.A_k + result.B_k)
    q1 = N * falling_factorial(n + 1, k)
    checks.add("|Q_k,1| = N(n+1)_(k)", Q[1] == q1, lhs=Q[1], rhs=q1)
    checks.add("2k divides |Q_k,k|", Q[k] % (2 * k) == 0, lhs=Q[k], rhs=2 * k)
    checks.add("2k divides |A_k|", result.A_k % (2 * k) == 0, lhs=result.A_k, rhs=2 * k)
    checks.add("B_k members rebuilt from line sequences", totals["b_rebuild"] == 0 and totals["b_dupes"] == 0,
               lhs=totals["b_rebuild"] + totals["b_dupes"], rhs=0)
    if deep:
        checks.add("maximal blocks: sum t = k, r >= j", totals["blocks"] == 0, lhs=totals["blocks"], rhs=0)
    if cross_check:
        gons = count_gons(plane_ref, k, threads).count
        checks.add("c_2k from census = count_gons", result.gon_count() == gons, lhs=result.gon_count(), rhs=gons)
    if checks.ok:
        plane_ref.info("census k=%d done (%.3f s)" % (k, result.seconds))
    else:
        plane_ref.error("census k=%d failed: %s" % (k, ", ".join(i["item"] for i in checks.failures())))
    return result

# *******************************
# Bounds
# *******************************

def check_bounds(census_ref, c_prev):
    """
    Evaluate the bounds on a census with exact integers.

    Items: the A_k bracket (n-k+2)(k-1)c_2k-2 <= |A_k|/2k <= (n-1)(k-1)c_2k-2,
    |B_k| <= (k-1)(k-2)N_(k-1), the |Q_k,j| bounds for 2 <= j <= k-2 with
    the exact |Q_k,1|, and the lower and upper bounds on c_2k. Items whose
    precondition n >= k >= 4 fails are marked "n/a".

    Arguments
    * census_ref: quasigon_census
    * c_prev: c_2k-2, as an integer or a cycle_count

    Return: check_report
    """
    if isinstance(c_prev, cycle_count):
        c_prev = c_prev.count
    n = census_ref.n
    k = census_ref.k
    N = census_ref.N
    report = check_report("bounds n=%d k=%d" % (n, k))
    applicable = n >= k >= 4
    na_note = "needs n >= k >= 4"
    a_gamma = census_ref.A_gamma()

    if applicable:
        low = (n - k + 2) * (k - 1) * c_prev
        high = (n - 1) * (k - 1) * c_prev
        report.add("A_k lower bracket", low <= a_gamma, lhs=low, rhs=a_gamma)
        report.add("A_k upper bracket", a_gamma <= high, lhs=a_gamma, rhs=high)
    else:
        report.add("A_k lower bracket", report.status_na, note=na_note)
        report.add("A_k upper bracket", report.status_na, note=na_note)

    if k >= 4:
        bbound = (k - 1) * (k - 2) * falling_factorial(N, k - 1)
        report.add("B_k bound", census_ref.B_k <= bbound, lhs=census_ref.B_k, rhs=bbound)
    else:
        report.add("B_k bound", report.status_na, note="needs k >= 4")

    if applicable:
        q1 = N * falling_factorial(n + 1, k)
        report.add("|Q_k,1| exact", census_ref.counts[1] == q1, lhs=census_ref.counts[1], rhs=q1)
        for j in range(2, k - 1):
            bound = j**(k - j) * falling_factorial(k, j) * math.comb(N, j) * (n - 1)**(k - j)
            report.add("|Q_k,%d| bound" % j, census_ref.counts[j] <= bound, lhs=census_ref.counts[j], rhs=bound)
    else:
        report.add("|Q_k,j| bounds", report.status_na, note=na_note)

    gons = census_ref.gon_count()
    if applicable:
        lower = theorem3_lower(n, k)
        upper = theorem4_upper(n, k, c_prev)
        report.add("c_2k lower bound", lower < gons, lhs=lower, rhs=gons, note="explicit tail form")
        report.add("c_2k upper bound", gons <= upper, lhs=gons, rhs=upper)
    else:
        report.add("c_2k bounds", report.status_na, note=na_note)
    report.add("|A_k(Gamma)|", report.status_na, lhs=a_gamma, note="derived |A_k|/2k")
    return report

# *******************************
# Line sequence multiplicity
# *******************************

def line_sequence_multiplicity(plane_ref, k, budget=default_budget):
    """
    Group all quasi k-gons by line sequence and check the multiplicity of
    each sequence: exactly (n+1)_(k) when j = 1, otherwise at most
    prod over maximal runs of (n-1)_(t-1), which is at most (n-1)^(k-j).

    Return: check_report with one item per j
    """
    N = plane_ref.N
    n = plane_ref.n
    work = falling_factorial(N, k)
    if work > budget:
        raise budget_error("Grouping %d tuples above budget %d." % (work, budget), work, budget)
    groups = collections.Counter()
    pair_line = plane_ref.pair_line
    for pts in itertools.permutations(range(N), k):
        groups[tuple(pair_line[pts[i]][pts[(i + 1) % k]] for i in range(k))] += 1
    report = check_report("line sequence multiplicity n=%d k=%d" % (n, k))
    byj = collections.defaultdict(list)
    for seq, mult in groups.items():
        byj[len(set(seq))].append((seq, mult))
    for j in sorted(byj):
        witness = None
        attained = 0
        for seq, mult in sorted(byj[j]):
            if j == 1:
                bound = falling_factorial(n + 1, k)
                ok = mult == bound
            else:
                bound = 1
                for l, t in _cyclic_runs(seq):
                    bound *= falling_factorial(n - 1, t - 1)
                ok = mult <= bound <= (n - 1)**(k - j)
            if mult == bound:
                attained += 1
            if not ok and witness is None:
                witness = (seq, mult, bound)
        rel = "= (n+1)_(k)" if j == 1 else "<= prod (n-1)_(t-1)"
        report.add("j=%d multiplicity %s" % (j, rel), witness is None, witness=witness,
                   note="%d sequences, %d attain the bound" % (len(byj[j]), attained))
    return report

# *******************************
# Wide stabilizers
# *******************************

def find_wide_stabilizer(plane_ref, k):
    """
    Search a quasi k-gon whose stabilizer is larger than the dihedral group.

    Pattern: P_0 and the last three points on one line m, the middle
    points off m. The two last points then only meet m in the incidence
    subgraph and can be swapped.

    Return: (quasigon, perm_group), or None if nothing is found
    """
    n = plane_ref.n
    if k < 5 or n < 3:
        raise precondition_error("Wide stabilizer pattern needs k >= 5 and n >= 3 (got k=%d, n=%d)." % (k, n))
    for m, mpts in enumerate(plane_ref.lines):
        off = [P for P in range(plane_ref.N) if not plane_ref.on_line(P, m)]
        on = list(mpts)
        for middle in itertools.permutations(off, k - 4):
            points = [on[0]] + list(middle) + on[1:4]
            qg = line_sequence(plane_ref, points)
            group = symmetry_group(plane_ref, qg)
            if len(group) > 2 * k:
                plane_ref.debug("wide stabilizer of order %d at %s" % (len(group), repr(qg.points)))
                return (qg, group)
    return None
