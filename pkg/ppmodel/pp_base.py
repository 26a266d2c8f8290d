#!/usr/bin/env python
# -*- coding: utf-8 -*-

#
# PPmodel base definitions
#   Error classes, check reports, logging support and common defaults
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
PPmodel base objects
=====================

This module declares objects shared by every other module:

* Error classes (rooted at 'pp_error')
* Class 'pp_errcodes': exit codes of the command line tool
* Class 'check_report': outcome of any verification
* Class 'pp_logobject': logging support with per-object names
* Function 'configure_logging'
* Functions 'rational_str' and 'to_json'
* Functions 'parallel_map' and 'parallel_sum'
* Default limits and budgets
"""

import json
import logging
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

# default limits
default_budget = 10**9
extended_budget = 10**10
walk_size_limit = 512
max_cycle_length = 20
max_field_order = 2**16
max_symmetry_k = 8
default_threads = 1

logger_name = "ppmodel"

# *******************************
# Errors
# *******************************

class pp_error(Exception):
    """
    Base class for all PPmodel errors
    """
    pass

class field_error(pp_error, ValueError):
    pass

class nonprime_error(field_error):
    pass

class degree_error(field_error):
    pass

class order_limit_error(field_error):
    pass

class domain_error(pp_error, ValueError):
    pass

class precondition_error(pp_error, ValueError):
    pass

class size_limit_error(pp_error, ValueError):
    pass

class order_mismatch_error(pp_error, ValueError):
    pass

class parse_error(pp_error, ValueError):
    """
    Malformed plane file or counts file.

    Attributes:
    * lineno: 1-based line number in the input file (None if unknown)
    """
    def __init__(self, msg, lineno=None):
        if lineno is not None:
            msg = "line %d: %s" % (lineno, msg)
        pp_error.__init__(self, msg)
        self.lineno = lineno

class axiom_error(pp_error, ValueError):
    """
    An incidence structure failed validation.

    Attributes:
    * report: the check_report with every violated axiom
    """
    def __init__(self, msg, report=None):
        pp_error.__init__(self, msg)
        self.report = report

class budget_error(pp_error):
    """
    Requested work exceeds the configured budget.

    Attributes:
    * work: estimated work
    * budget: the budget in use
    """
    def __init__(self, msg, work=None, budget=None):
        pp_error.__init__(self, msg)
        self.work = work
        self.budget = budget

class pp_errcodes():
    """
    Exit codes of the command line tool
    """
    no_error = 0
    check_failed = 1
    usage_error = 2
    budget_exceeded = 3

# *******************************
# Verification reports
# *******************************

class check_report():
    """
    Outcome of a verification.

    A report is a list of items; each item has a name, a status ("pass",
    "fail" or "n/a"), optional left and right hand sides of the checked
    relation, an optional witness and a note. A report is true when no
    item failed.

    Attributes:
    * name
    * items: list of dicts
    * kwargs: optional parameters to put as object attributes
    """
    status_pass = "pass"
    status_fail = "fail"
    status_na = "n/a"

    def __init__(self, name="", **kwargs):
        self.name = name
        self.items = []
        for key in kwargs.keys():
            setattr(self, key, kwargs[key])

    def __repr__(self):
        return "<%s '%s' %d items, %d failed>" % (self.__class__.__name__, self.name, len(self.items), len(self.failures()))

    def __bool__(self):
        return self.ok

    def __len__(self):
        return len(self.items)

    def add(self, item, status, lhs=None, rhs=None, witness=None, note=""):
        """
        Add an item to the report.

        Arguments
        * item: item name
        * status: True/False or one of "pass", "fail", "n/a"
        * lhs, rhs: optional sides of the checked relation
        * witness: optional witness of a failure
        * note: optional free text
        """
        if status is True:
            status = self.status_pass
        elif status is False:
            status = self.status_fail
        if status not in (self.status_pass, self.status_fail, self.status_na):
            raise ValueError("Unknown status '%s'." % repr(status))
        entry = {"item": item, "status": status}
        if lhs is not None:
            entry["lhs"] = lhs
        if rhs is not None:
            entry["rhs"] = rhs
        if witness is not None:
            entry["witness"] = witness
        if note != "":
            entry["note"] = note
        self.items.append(entry)
        return entry

    def extend(self, other):
        """
        Append all items of another report.
        """
        self.items.extend(other.items)

    @property
    def ok(self):
        return len(self.failures()) == 0

    def failures(self):
        return [i for i in self.items if i["status"] == self.status_fail]

    def status_of(self, item):
        """
        Return the status of the first item with this name, or None
        """
        for i in self.items:
            if i["item"] == item:
                return i["status"]
        return None

    def find(self, item):
        return [i for i in self.items if i["item"] == item]

    def to_dict(self):
        items = []
        for i in self.items:
            items.append(dict((k, jsonable(v)) for k, v in i.items()))
        return {"name": self.name, "ok": self.ok, "items": items}

    def format_table(self):
        """
        Human readable table of the report
        """
        lines = ["%s: %s" % (self.name, "PASS" if self.ok else "FAIL")]
        for i in self.items:
            sides = ""
            if "lhs" in i or "rhs" in i:
                sides = " %s | %s" % (jsonable(i.get("lhs", "")), jsonable(i.get("rhs", "")))
            lines.append("  %-5s %-28s%s" % (i["status"], i["item"], sides))
        return "\n".join(lines)

# *******************************
# Serialization helpers
# *******************************

def rational_str(value):
    """
    Exact string for integers and rationals: "p/q", or "p" when q = 1
    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return "%d/%d" % (value.numerator, value.denominator)

def jsonable(value):
    """
    Convert a value to a JSON friendly one: integers and rationals become
    decimal strings, containers are converted recursively.
    """
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, (int, Fraction)):
        return rational_str(value)
    if isinstance(value, float):
        return value
    if isinstance(value, dict):
        return dict((str(k), jsonable(v)) for k, v in value.items())
    if isinstance(value, (list, tuple, set, frozenset)):
        if isinstance(value, (set, frozenset)):
            value = sorted(value)
        return [jsonable(v) for v in value]
    if hasattr(value, "to_dict"):
        return value.to_dict()
    return str(value)

def to_json(obj):
    """
    Deterministic JSON text: sorted keys, big integers as strings
    """
    if hasattr(obj, "to_dict"):
        obj = obj.to_dict()
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"

# *******************************
# Parallel reduction
# *******************************

def parallel_map(worker, tasks, threads=default_threads, initializer=None, initargs=()):
    """
    Run worker(task) for every task, in worker processes when threads > 1.

    Workers get their read-only state through initializer(*initargs),
    called once per process (or once in this process when threads <= 1).

    Arguments
    * worker: module-level function taking one task
    * tasks: sequence of tasks
    * threads: number of worker processes
    * initializer, initargs: optional per-process setup

    Return: list of results, in task order
    """
    tasks = list(tasks)
    if threads is None or threads <= 1 or len(tasks) <= 1:
        if initializer is not None:
            initializer(*initargs)
        return [worker(t) for t in tasks]
    chunksize = max(1, len(tasks) // (threads * 4))
    with ProcessPoolExecutor(max_workers=threads, initializer=initializer, initargs=initargs) as executor:
        return list(executor.map(worker, tasks, chunksize=chunksize))

def parallel_sum(worker, tasks, threads=default_threads, initializer=None, initargs=()):
    """
    Exact integer sum of worker(task) over all tasks (see parallel_map).
    """
    return sum(parallel_map(worker, tasks, threads, initializer, initargs))

# *******************************
# Logging support
# *******************************

class pp_logobject():
    """
    Logging support for PPmodel objects.

    Every message carries the name of the emitting object ("objname"), so
    the log can be read or filtered per object.

    Attributes:
    * logname: name of this object in the log
    """
    def __init__(self, logname="BASECLASS"):
        self.log = logging.getLogger(logger_name)
        self.logname = logname

    # logging methods (only use 4 levels)
    def debug(self, msg, *args, **kwargs):
        self.log.debug(msg, *args, extra={"objname": self.logname}, **kwargs)
    def info(self, msg, *args, **kwargs):
        self.log.info(msg, *args, extra={"objname": self.logname}, **kwargs)
    def warning(self, msg, *args, **kwargs):
        self.log.warning(msg, *args, extra={"objname": self.logname}, **kwargs)
    def error(self, msg, *args, **kwargs):
        self.log.error(msg, *args, extra={"objname": self.logname}, **kwargs)

    # special log
    def debugstate(self):
        self.debug(" '%s' object state: " % repr(self))
        for i in dir(self):
            # exclude hidden attributes
            if i[0] == "_":
                continue
            attr = getattr(self, i)
            if callable(attr):
                continue
            self.debug("     ['%s'] = %s " % (i, repr(attr)))

class _objname_filter(logging.Filter):
    # records from foreign loggers have no objname
    def filter(self, record):
        if not hasattr(record, "objname"):
            record.objname = record.name
        return True

def configure_logging(log_file=None, log_level=logging.INFO, console_level=logging.WARNING):
    """
    Configure the PPmodel logger.

    Log warnings and errors to console, custom log to log_file if specified.

    Arguments:
    * log_file: optional file to save the log
    * log_level: optional logging level for the previous file
    * console_level: optional logging level for the console

    Return: the configured logger
    """
    log = logging.getLogger(logger_name)
    # reconfiguration: drop previous handlers
    for hdl in list(log.handlers):
        log.removeHandler(hdl)
        hdl.close()
    log.setLevel(min(log_level, console_level))
    log.propagate = False
    formatter = logging.Formatter("%(levelname)-5s:%(objname)-12s - %(message)s")
    console_hdl = logging.StreamHandler()
    console_hdl.setLevel(console_level)
    console_hdl.addFilter(_objname_filter())
    console_hdl.setFormatter(formatter)
    log.addHandler(console_hdl)
    addmsg = ""
    if log_file is not None:
        file_hdl = logging.FileHandler(log_file, "w", encoding="utf-8")
        file_hdl.setLevel(log_level)
        file_hdl.addFilter(_objname_filter())
        file_hdl.setFormatter(formatter)
        log.addHandler(file_hdl)
        addmsg = "and on file (%s) level %s" % (log_file, logging.getLevelName(log_level))
    log.debug("Logging enabled! Running log on console level %s %s" % (logging.getLevelName(console_level), addmsg), extra={"objname": "ppmodel"})
    return log
