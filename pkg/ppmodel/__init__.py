#!/usr/bin/env python
# -*- coding: utf-8 -*-

#
# PPmodel - projective plane cycle model
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
PPmodel package
===============

This package includes:

* Module pp_base: errors, check reports, logging and defaults
* Module pp_field: finite field arithmetic
* Module pp_plane: projective planes, validation and plane files
* Module pp_levi: Levi graphs, closed walks and graph squaring
* Module pp_cycles: exact 2k-cycle counters
* Module pp_quasigon: quasi k-gons, stabilizers, census and bounds
* Module pp_poly: exact polynomials, fits and bound formulas
* Module pp_helpers: plane and graph generators
* Module pp_guilib: PPmodel Graphic utilities
* Module pp_cli: command line tool (not imported by default)
"""

# required modules
import networkx as nx

# provided modules
from ppmodel.pp_base import *
from ppmodel.pp_field import *
from ppmodel.pp_plane import *
from ppmodel.pp_poly import *
from ppmodel.pp_levi import *
from ppmodel.pp_cycles import *
from ppmodel.pp_quasigon import *
from ppmodel.pp_helpers import *
from ppmodel.pp_guilib import *

__version__ = "0.1"
