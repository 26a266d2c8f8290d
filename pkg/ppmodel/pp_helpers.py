#!/usr/bin/env python
# -*- coding: utf-8 -*-

#
# PPmodel helpers
#   Plane and graph generators
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
===============
PPmodel helpers
===============

Generators for planes and small fixture graphs.
"""

import networkx as nx

from ppmodel.pp_base import *
from ppmodel.pp_field import field_make, prime_power_split
from ppmodel.pp_plane import build_pg2
from ppmodel.pp_levi import build_levi

def generate_pg2(q):
    """
    Plane generator helper: builds PG(2,q) for a prime power q

    Arguments
    * q: plane order, a prime power
    """
    p, e = prime_power_split(q)
    return build_pg2(field_make(p, e))

def generate_heawood():
    """
    Levi graph of the Fano plane (the Heawood graph)
    """
    return build_levi(generate_pg2(2))

def generate_cycle_graph(length):
    """
    Single cycle on vertices 0..length-1
    """
    return nx.cycle_graph(length)

def generate_tree(depth=3):
    # binary tree, no cycles
    return nx.balanced_tree(2, depth)
