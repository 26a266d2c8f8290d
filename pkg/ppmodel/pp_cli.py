#!/usr/bin/env python
# -*- coding: utf-8 -*-

#
# PPmodel command line tool
#   Reproducible experiments on projective planes and their Levi graphs
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
PPmodel command line
=====================

Subcommands::

    plane gen|check|dual   generate, validate or dualize a plane
    walks                  closed walk formula against the direct trace
    cycles                 count 2k-cycles (optionally cross-checked), or a
                           budgeted profile for k = 3..kmax
    census                 exhaustive quasi k-gon census
    bounds                 census bounds and c_2k bounds
    fit                    exact polynomial fit of a counts file
    cap                    cap for C4-free bipartite graphs
    conjecture             residuals of a counts file against the k >= 6 expansion
    compare                cycle profiles of two planes

Planes come from '--p P --e E' (PG(2,P^E)) or '--plane FILE'. JSON goes to
standard output (or '--out'), human readable tables to standard error.

Exit codes: 0 all checks passed, 1 a check failed, 2 usage error,
3 budget exceeded.
"""

import argparse
import logging
import sys

from ppmodel.pp_base import *
from ppmodel.pp_field import field_make, prime_power_split
from ppmodel.pp_plane import build_pg2, dual_plane, load_plane, parse_plane, plane_to_text, validate_plane
from ppmodel.pp_levi import build_levi, closed_walks_direct, closed_walks_formula
from ppmodel.pp_cycles import compare_profiles, count_cycles_graph, count_gons, cycle_profile, gon_work
from ppmodel.pp_quasigon import census, check_bounds
from ppmodel.pp_poly import (conjecture_residuals, fit_exact, holdout_check, load_counts_csv,
                             table1_check, theorem5_cap)

# subcommands taking a plane
plane_commands = ("plane", "walks", "cycles", "census", "bounds", "cap")

class run_config():
    """
    Options of one command line run.

    Arguments
    * args: argparse namespace
    """
    def __init__(self, args):
        self.command = args.command
        self.action = getattr(args, "action", None)
        self.p = getattr(args, "p", None)
        self.e = getattr(args, "e", 1)
        self.n = getattr(args, "n", None)
        self.plane_file = getattr(args, "plane", None)
        self.k = getattr(args, "k", None)
        self.k_max = getattr(args, "kmax", None)
        self.threads = args.threads
        self.budget = args.budget
        self.out = args.out
        self.timings = args.timings
        self.log_file = args.log_file
        self.verbose = args.verbose
        for key in ("cross_check", "deep", "counts", "degree", "v", "plane2"):
            setattr(self, key, getattr(args, key, None))

    def validate(self):
        if self.budget is not None and self.budget <= 0:
            raise domain_error("Budget must be positive (got %d)." % self.budget)
        if self.threads < 1:
            raise domain_error("Thread count must be positive (got %d)." % self.threads)
        if self.command in plane_commands and not (self.command == "cap" and self.v is not None):
            sources = [self.p is not None, self.plane_file is not None, self.n is not None]
            if sum(sources) != 1:
                raise domain_error("Give exactly one plane source: --p/--e, --n or --plane.")
        if self.command == "cycles" and (self.k is None) == (self.k_max is None):
            raise domain_error("Give exactly one of --k and --kmax.")

    def make_plane(self):
        if self.plane_file is not None:
            return load_plane(self.plane_file)
        if self.n is not None:
            p, e = prime_power_split(self.n)
            return build_pg2(field_make(p, e))
        return build_pg2(field_make(self.p, self.e))

def build_parser():
    parser = argparse.ArgumentParser(prog="ppmodel", description="Exact cycle counts in projective planes.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=default_threads, help="worker processes")
    common.add_argument("--budget", type=int, default=default_budget, help="work budget")
    common.add_argument("--out", default=None, help="output file (default: standard output)")
    common.add_argument("--timings", action="store_true", help="include wall times in JSON")
    common.add_argument("--log-file", default=None, help="write a debug log to this file")
    common.add_argument("--verbose", action="store_true", help="log progress on the console")
    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("--p", type=int, default=None, help="field characteristic")
    source.add_argument("--e", type=int, default=1, help="field extension degree")
    source.add_argument("--n", type=int, default=None, help="plane order (prime power)")
    source.add_argument("--plane", default=None, help="plane file")

    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("plane", parents=[common, source], help="generate, check or dualize a plane")
    p.add_argument("action", choices=("gen", "check", "dual"))
    p = sub.add_parser("walks", parents=[common, source], help="closed walk identity")
    p.add_argument("--k", type=int, required=True)
    p = sub.add_parser("cycles", parents=[common, source], help="count 2k-cycles")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--kmax", type=int, default=None, help="profile for k = 3..KMAX instead of one k")
    p.add_argument("--cross-check", action="store_true", help="also count on the Levi graph")
    p = sub.add_parser("census", parents=[common, source], help="quasi k-gon census")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--deep", action="store_true", help="check maximal blocks of every tuple")
    p = sub.add_parser("bounds", parents=[common, source], help="bounds on census values")
    p.add_argument("--k", type=int, required=True)
    p = sub.add_parser("fit", parents=[common], help="exact polynomial fit")
    p.add_argument("--counts", required=True, help="counts CSV file")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--degree", type=int, default=None, help="polynomial degree (default 2k)")
    p = sub.add_parser("cap", parents=[common, source], help="cap for C4-free bipartite graphs")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--v", type=int, default=None, help="vertex count instead of a plane")
    p = sub.add_parser("conjecture", parents=[common], help="residuals for k >= 6")
    p.add_argument("--counts", required=True, help="counts CSV file")
    p.add_argument("--k", type=int, required=True)
    p = sub.add_parser("compare", parents=[common], help="compare the cycle profiles of two planes")
    p.add_argument("--plane", required=True)
    p.add_argument("--plane2", required=True)
    p.add_argument("--kmax", type=int, required=True)
    return parser

# *******************************
# Subcommand handlers
# Each one returns (JSON object or text, report or None)
# *******************************

def do_plane(cfg):
    if cfg.action == "check" and cfg.plane_file is not None:
        with open(cfg.plane_file, "r", encoding="utf-8", newline="") as f:
            text = f.read()
        try:
            plane_ref = parse_plane(text, name=cfg.plane_file)
            report = validate_plane(plane_ref)
        except axiom_error as e:
            report = e.report
        return (report.to_dict(), report)
    plane_ref = cfg.make_plane()
    if cfg.action == "gen":
        return (plane_to_text(plane_ref), None)
    if cfg.action == "dual":
        return (plane_to_text(dual_plane(plane_ref)), None)
    report = validate_plane(plane_ref)
    return (report.to_dict(), report)

def do_walks(cfg):
    plane_ref = cfg.make_plane()
    levi = build_levi(plane_ref)
    formula = closed_walks_formula(plane_ref.n, cfg.k)
    direct = closed_walks_direct(levi, cfg.k, cfg.threads)
    report = check_report("closed walks n=%d k=%d" % (plane_ref.n, cfg.k))
    report.add("direct trace = formula", direct == formula, lhs=direct, rhs=formula)
    result = {"n": plane_ref.n, "k": cfg.k, "formula": str(formula), "direct": str(direct), "ok": report.ok}
    return (result, report)

def do_cycles(cfg):
    plane_ref = cfg.make_plane()
    if cfg.k_max is not None:
        return do_profile(cfg, plane_ref)
    if cfg.k < 3:
        raise domain_error("Cycle counts need k >= 3 (got %d)." % cfg.k)
    work = gon_work(plane_ref.n, cfg.k)
    if work > cfg.budget:
        raise budget_error("Counting 2k-cycles for k=%d needs work %d above budget %d." % (cfg.k, work, cfg.budget),
                           work, cfg.budget)
    c = count_gons(plane_ref, cfg.k, cfg.threads)
    result = c.to_dict(cfg.timings)
    report = check_report("cycles n=%d k=%d" % (plane_ref.n, cfg.k))
    report.add("count within cap", c.within_cap(), lhs=c.count, rhs=c.cap())
    if cfg.cross_check:
        g = count_cycles_graph(build_levi(plane_ref), 2 * cfg.k, cfg.threads)
        report.add("count_gons = count_cycles_graph", g.count == c.count, lhs=c.count, rhs=g.count)
        result["cross_check"] = g.to_dict(cfg.timings)
    result["checks"] = report.to_dict()
    return (result, report)

def do_profile(cfg, plane_ref):
    if cfg.k_max < 3:
        raise domain_error("Cycle profiles need kmax >= 3 (got %d)." % cfg.k_max)
    profile = cycle_profile(plane_ref, cfg.k_max, cfg.threads, cfg.budget)
    if len(profile) == 0 and profile.truncated:
        work = gon_work(plane_ref.n, profile.truncated_at)
        raise budget_error("Counting 2k-cycles for k=3 needs work %d above budget %d." % (work, cfg.budget),
                           work, cfg.budget)
    result = profile.to_dict(cfg.timings)
    result["n"] = plane_ref.n
    report = check_report("cycle profile n=%d k<=%d" % (plane_ref.n, cfg.k_max))
    for c in profile:
        report.add("c_%d within cap" % (2 * c.k), c.within_cap(), lhs=c.count, rhs=c.cap())
    if profile.truncated:
        report.add("complete profile", report.status_na, note="truncated at k=%d" % profile.truncated_at)
    result["checks"] = report.to_dict()
    return (result, report)

def do_census(cfg):
    plane_ref = cfg.make_plane()
    result = census(plane_ref, cfg.k, cfg.threads, cfg.budget, deep=bool(cfg.deep))
    return (result.to_dict(), result.checks)

def do_bounds(cfg):
    plane_ref = cfg.make_plane()
    if cfg.k < 4:
        raise domain_error("Bounds need k >= 4 (got %d)." % cfg.k)
    result = census(plane_ref, cfg.k, cfg.threads, cfg.budget)
    c_prev = count_gons(plane_ref, cfg.k - 1, cfg.threads)
    report = check_bounds(result, c_prev)
    report.extend(result.checks)
    return ({"census": result.to_dict(), "c_prev": str(c_prev.count), "bounds": report.to_dict()}, report)

def do_fit(cfg):
    samples = load_counts_csv(cfg.counts, k=cfg.k)
    degree = cfg.degree if cfg.degree is not None else 2 * cfg.k
    if len(samples) < degree + 1:
        raise domain_error("Degree %d fit needs %d samples, file has %d." % (degree, degree + 1, len(samples)))
    fitted = fit_exact(samples[:degree + 1], degree)
    report = table1_check(fitted, cfg.k)
    held = samples[degree + 1:]
    holdout = holdout_check(fitted, held)
    report.extend(holdout)
    result = {"k": cfg.k, "poly": fitted.to_dict(), "text": fitted.to_text(),
              "coefficients": report.to_dict(), "held_out": len(held)}
    return (result, report)

def do_cap(cfg):
    report = check_report("cap k=%d" % cfg.k)
    if cfg.v is not None:
        cap = theorem5_cap(cfg.v, cfg.k)
        return ({"v": cfg.v, "k": cfg.k, "cap": rational_str(cap)}, report)
    plane_ref = cfg.make_plane()
    v = 2 * plane_ref.N
    cap = theorem5_cap(v, cfg.k)
    c = count_gons(plane_ref, cfg.k, cfg.threads)
    report.add("count <= cap", c.count <= cap, lhs=c.count, rhs=cap)
    return ({"v": v, "k": cfg.k, "cap": rational_str(cap), "count": str(c.count), "checks": report.to_dict()}, report)

def do_conjecture(cfg):
    samples = load_counts_csv(cfg.counts, k=cfg.k)
    report = conjecture_residuals(cfg.k, samples)
    result = report.to_dict()
    result["ratios"] = [rational_str(r) for r in report.ratios]
    result["non_increasing"] = report.non_increasing
    return (result, report)

def do_compare(cfg):
    plane_a = load_plane(cfg.plane_file)
    plane_b = load_plane(cfg.plane2)
    report = compare_profiles(plane_a, plane_b, cfg.k_max, cfg.threads, cfg.budget)
    return (report.to_dict(), report)

handlers = {
    "plane": do_plane,
    "walks": do_walks,
    "cycles": do_cycles,
    "census": do_census,
    "bounds": do_bounds,
    "fit": do_fit,
    "cap": do_cap,
    "conjecture": do_conjecture,
    "compare": do_compare,
}

def write_output(cfg, result):
    if isinstance(result, str):
        text = result
    else:
        text = to_json(result)
    if cfg.out is None:
        sys.stdout.write(text)
    else:
        with open(cfg.out, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)

def main(argv=None):
    """
    Command line entry point.

    Return: exit code (see pp_errcodes)
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return pp_errcodes.no_error if e.code == 0 else pp_errcodes.usage_error
    cfg = run_config(args)
    configure_logging(cfg.log_file, logging.DEBUG, logging.INFO if cfg.verbose else logging.WARNING)
    log = pp_logobject("ppmodel-cli")
    try:
        cfg.validate()
        result, report = handlers[cfg.command](cfg)
    except budget_error as e:
        log.error(str(e))
        return pp_errcodes.budget_exceeded
    except (pp_error, OSError) as e:
        log.error(str(e))
        return pp_errcodes.usage_error
    write_output(cfg, result)
    if report is not None:
        sys.stderr.write(report.format_table() + "\n")
        if not report.ok:
            return pp_errcodes.check_failed
    return pp_errcodes.no_error

if __name__ == "__main__":
    sys.exit(main())
