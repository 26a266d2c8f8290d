#!/usr/bin/env python
# -*- coding: utf-8 -*-

#
# PPmodel graphic utilities
#   Drawing of Levi graphs and incidence subgraphs
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
==========================
PPmodel Graphic utilities
==========================

This module declares functions to draw graphical representations of
PPmodel objects. Drawing needs matplotlib (optional dependency).
"""
try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    has_matplotlib = True
except ImportError:
    has_matplotlib = False

import networkx as nx
import warnings

from ppmodel.pp_base import *
from ppmodel.pp_levi import bipartition

def _bipartite_positions(first, second):
    # two columns, sides sorted top to bottom
    pos = {}
    for i, v in enumerate(first):
        pos[v] = (0.0, -float(i))
    for i, v in enumerate(second):
        pos[v] = (1.0, -float(i))
    return pos

def draw_levi(graph, filename=None):
    """
    Draw a Levi graph as two columns (points left, lines right)

    Arguments:
    * graph: levi_graph or any bipartite graph
    * filename: optional file to save the figure

    Return: the matplotlib figure, or None if matplotlib is missing
    """
    if not has_matplotlib:
        warnings.warn("Function not available: matplotlib package not found")
        return None
    first, second = bipartition(graph)
    pos = _bipartite_positions(first, second)
    fig = plt.figure()
    nx.draw_networkx_nodes(graph, pos, nodelist=first, node_color="w", node_shape="o")
    nx.draw_networkx_nodes(graph, pos, nodelist=second, node_color="0.7", node_shape="s")
    nx.draw_networkx_edges(graph, pos)
    N = graph.graph.get("N")
    if N is not None:
        labels = dict((v, "P%d" % v if v < N else "L%d" % (v - N)) for v in graph.nodes())
    else:
        labels = dict((v, str(v)) for v in graph.nodes())
    nx.draw_networkx_labels(graph, pos, labels, font_size=8)
    plt.axis("off")
    if filename is not None:
        fig.savefig(filename)
    return fig

def draw_incidence_subgraph(gamma, N, filename=None):
    """
    Draw the incidence subgraph of a quasi k-gon

    Arguments:
    * gamma: incidence_subgraph object
    * N: number of points of the plane
    * filename: optional file to save the figure
    """
    if not has_matplotlib:
        warnings.warn("Function not available: matplotlib package not found")
        return None
    g = gamma.to_graph(N)
    g.graph["N"] = N
    return draw_levi(g, filename)
