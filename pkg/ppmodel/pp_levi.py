#!/usr/bin/env python
# -*- coding: utf-8 -*-

#
# Levi graphs
#   Point-line incidence graphs, walk counting and graph squaring
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
====================
PPmodel Levi graphs
====================

This module declares the bipartite point-line incidence graph of a plane.
Vertices 0..N-1 are the points and N..2N-1 the lines; vertex N+l is line l.

* Class 'levi_graph'
* Class 'simple_graph'
* Function 'build_levi'
* Function 'girth'
* Functions 'closed_walks_formula' and 'closed_walks_direct'
* Function 'a_squared_identity'
* Function 'bipartition'
* Function 'bipartite_square'
* Function 'part_swap_isomorphic'
* Functions 'neighbor_bitsets' and 'adjacency_masks'

Spectral properties are checked combinatorially with exact integers.
"""

import collections

import networkx as nx
import myhdl
from myhdl import intbv

from ppmodel.pp_base import *

class levi_graph(nx.Graph):
    """
    Point-line incidence graph of a projective plane.

    Plane data is kept in the graph attribute dict, so copies keep it.
    Every node carries the attribute "kind" ("point" or "line").

    Arguments
    * kwargs: optional parameters passed to nx.Graph
    """
    def __init__(self, incoming_graph_data=None, **kwargs):
        nx.Graph.__init__(self, incoming_graph_data, **kwargs)

    def __repr__(self):
        if self.graph.get("name", "") != "":
            return "<%s '%s'>" % (self.__class__.__name__, self.graph["name"])
        else:
            return "<%s at '%d'>" % (self.__class__.__name__, id(self))

    @property
    def n(self):
        return self.graph.get("n")

    @property
    def N(self):
        return self.graph.get("N")

    def point_vertex(self, P):
        return P

    def line_vertex(self, l):
        return self.N + l

    def point_vertices(self):
        return [v for v, d in self.nodes(data=True) if d.get("kind") == "point"]

    def line_vertices(self):
        return [v for v, d in self.nodes(data=True) if d.get("kind") == "line"]

class simple_graph(nx.Graph):
    """
    Loopless graph without multi-edges on vertices 0..m-1.

    The graph attribute "origin" maps each vertex to the vertex it came
    from (for instance the Levi graph vertex of a squared graph).
    """
    def __init__(self, incoming_graph_data=None, **kwargs):
        nx.Graph.__init__(self, incoming_graph_data, **kwargs)

    @property
    def origin(self):
        return self.graph.get("origin")

def build_levi(plane_ref):
    """
    Build the Levi graph of a plane.

    Arguments
    * plane_ref: plane object (should be validated)

    Return: levi_graph object
    """
    N = plane_ref.N
    g = levi_graph(name="Levi %s" % plane_ref.name, n=plane_ref.n, N=N)
    for P in range(N):
        g.add_node(P, kind="point")
    for l in range(N):
        g.add_node(N + l, kind="line")
    for l, pts in enumerate(plane_ref.lines):
        for P in pts:
            g.add_edge(P, N + l)
    return g

# *******************************
# Adjacency bitsets
# *******************************

def _check_labels(graph):
    nodes = sorted(graph.nodes())
    if nodes != list(range(len(nodes))):
        raise TypeError("Graph vertices must be the integers 0..%d." % (len(nodes) - 1))
    return len(nodes)

def neighbor_bitsets(graph):
    """
    Neighbour bitsets of every vertex, with fixed width (vertex count).

    Return: list of intbv objects, index by vertex
    """
    V = _check_labels(graph)
    bits = []
    for v in range(V):
        b = intbv(0)[V:]
        for w in graph.adj[v]:
            b[w] = 1
        bits.append(b)
    return bits

def adjacency_masks(graph):
    """
    Neighbour bitsets as plain integers (for hot loops)
    """
    return [int(b) for b in neighbor_bitsets(graph)]

def format_bitset(value, width):
    return myhdl.bin(value, width)

# *******************************
# Girth and walks
# *******************************

def girth(graph):
    """
    Length of a shortest cycle, by BFS from every vertex.

    Return: integer, or None if the graph has no cycle
    """
    best = None
    for s in graph.nodes():
        dist = {s: 0}
        parent = {s: None}
        queue = collections.deque([s])
        while len(queue) > 0:
            u = queue.popleft()
            if best is not None and 2 * dist[u] >= best:
                break
            for w in graph.adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return best

def closed_walks_formula(n, k):
    """
    Closed walks of length 2k in the Levi graph of any plane of order n:
    2(n+1)^(2k) + 2(N-1)n^k.
    """
    if n < 2:
        raise domain_error("Plane order must be at least 2 (got %d)." % n)
    if k < 1:
        raise domain_error("Walk half length must be at least 1 (got %d)." % k)
    N = n * n + n + 1
    return 2 * (n + 1)**(2 * k) + 2 * (N - 1) * n**k

# per-process adjacency for closed_walks_direct workers
_walk_state = {}

def _init_walk_worker(adjlists, steps):
    _walk_state["adj"] = adjlists
    _walk_state["steps"] = steps

def _walks_from(i):
    # (A^steps e_i)[i] by repeated integer matrix-vector products
    adj = _walk_state["adj"]
    x = [0] * len(adj)
    x[i] = 1
    for s in range(_walk_state["steps"]):
        x = [sum(x[w] for w in nbrs) for nbrs in adj]
    return x[i]

def closed_walks_direct(graph, k, threads=default_threads, size_limit=walk_size_limit):
    """
    Trace of A^(2k), computed with exact integers.

    Arguments
    * graph: graph with vertices 0..V-1
    * k: half walk length, k >= 1
    * threads: optional number of worker processes (over basis vectors)
    * size_limit: optional maximum vertex count

    Return: integer
    """
    if k < 1:
        raise domain_error("Walk half length must be at least 1 (got %d)." % k)
    V = _check_labels(graph)
    if V > size_limit:
        raise size_limit_error("Graph has %d vertices, limit is %d." % (V, size_limit))
    adjlists = [sorted(graph.adj[v]) for v in range(V)]
    return parallel_sum(_walks_from, range(V), threads, _init_walk_worker, (adjlists, 2 * k))

def a_squared_identity(graph):
    """
    Combinatorial content of A^2 for a Levi graph.

    Two distinct vertices of the same kind have exactly one common
    neighbour, and every vertex has n+1 closed walks of length 2.

    Return: check_report (truthy when the identity holds), the first
    failing vertex or pair is the witness.
    """
    report = check_report("A^2 identity %s" % graph.graph.get("name", ""))
    n = graph.n
    N = graph.N
    masks = adjacency_masks(graph)
    witness = None
    for v in range(2 * N):
        if masks[v].bit_count() != n + 1:
            witness = (v, masks[v].bit_count())
            break
    report.add("closed 2-walks = n+1", witness is None, witness=witness)
    for kind, base in (("points", 0), ("lines", N)):
        witness = None
        for u in range(base, base + N):
            for v in range(u + 1, base + N):
                common = (masks[u] & masks[v]).bit_count()
                if common != 1:
                    witness = (u, v, common)
                    break
            if witness is not None:
                break
        report.add("common neighbours of two %s = 1" % kind, witness is None, witness=witness)
    return report

# *******************************
# Bipartition and squaring
# *******************************

def bipartition(graph):
    """
    Canonical two-colouring of a bipartite graph.

    On Levi graphs the sides are the point and line vertices. Otherwise,
    in each connected component the side holding the minimum vertex is
    the first one.

    Return: tuple (first side, second side) of sorted vertex lists
    """
    if isinstance(graph, levi_graph) and graph.N is not None:
        return (sorted(graph.point_vertices()), sorted(graph.line_vertices()))
    try:
        color = nx.bipartite.color(graph)
    except nx.NetworkXError:
        raise precondition_error("Graph is not bipartite.")
    sides = ([], [])
    for comp in nx.connected_components(graph):
        flip = color[min(comp)]
        for v in comp:
            sides[color[v] ^ flip].append(v)
    return (sorted(sides[0]), sorted(sides[1]))

def bipartite_square(graph, side="points"):
    """
    Square of a C4-free bipartite graph on one side.

    Arguments
    * graph: bipartite graph
    * side: "points" (first side of the bipartition) or "lines"

    Return: simple_graph on vertices 0..m-1, "origin" maps them back

    Raises precondition_error if the graph has a C4, since two vertices
    with two common neighbours would give a multi-edge.
    """
    if side not in ("points", "lines"):
        raise domain_error("Side must be 'points' or 'lines' (got '%s')." % side)
    first, second = bipartition(graph)
    chosen = first if side == "points" else second
    masks = dict((v, sum(1 << w for w in graph.adj[v])) for v in chosen)
    sq = simple_graph(origin=tuple(chosen))
    sq.add_nodes_from(range(len(chosen)))
    for i, u in enumerate(chosen):
        for j in range(i + 1, len(chosen)):
            common = (masks[u] & masks[chosen[j]]).bit_count()
            if common > 1:
                raise precondition_error("Graph has a 4-cycle through vertices %d and %d." % (u, chosen[j]))
            if common == 1:
                sq.add_edge(i, j)
    return sq

def part_swap_isomorphic(levi_a, levi_b):
    """
    Check that point i <-> line i is an isomorphism between two Levi graphs
    (a plane and its dual).

    Return: check_report
    """
    report = check_report("part swap isomorphism")
    N = levi_a.N
    if levi_b.N != N:
        report.add("same part size", False, lhs=N, rhs=levi_b.N)
        return report

    def swap(v):
        return v + N if v < N else v - N

    mapped = set(frozenset((swap(u), swap(v))) for u, v in levi_a.edges())
    target = set(frozenset(e) for e in levi_b.edges())
    witness = None
    diff = mapped.symmetric_difference(target)
    if len(diff) > 0:
        witness = tuple(sorted(min(diff, key=sorted)))
    report.add("edges map onto edges", witness is None, lhs=len(mapped), rhs=len(target), witness=witness)
    return report
