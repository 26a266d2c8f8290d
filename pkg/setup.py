#!/usr/bin/env python
# -*- coding: utf-8 -*-

#
# PPmodel - setup file
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

from setuptools import setup

classifiers = """\
Development Status :: 3 - Alpha
Intended Audience :: Science/Research
License :: OSI Approved :: GNU Library or Lesser General Public License (LGPL)
Operating System :: OS Independent
Programming Language :: Python :: 3
Topic :: Scientific/Engineering :: Mathematics
"""

setup(name='ppmodel',
        version='0.1',
        description='Exact cycle counting in projective planes and their Levi graphs',
        author='Oscar Diaz',
        author_email='dargor@opencores.org',
        license='LGPL',
        python_requires='>=3.10',
        install_requires=['networkx>=2.6', 'myhdl>=0.11', 'sympy>=1.9'],
        extras_require={'draw': ['matplotlib']},
        platforms=["Any"],
        keywords="projective plane Levi graph cycle counting finite field",
        classifiers=[c for c in classifiers.split("\n") if c],
        packages=['ppmodel'],
        entry_points={'console_scripts': ['ppmodel = ppmodel.pp_cli:main']},
        test_suite='tests',
      )
