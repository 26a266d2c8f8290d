#!/usr/bin/env python
# -*- coding: utf-8 -*-

#
# Finite field arithmetic
#   GF(p^e) with deterministic modulus, used to coordinatize PG(2,q)
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
========================
PPmodel finite fields
========================

Exact arithmetic in GF(p^e).

Elements are integers 0..q-1: the base-p digits of an element are the
coefficients of its polynomial representative, lowest degree in the least
significant digit. 0 and 1 are the additive and multiplicative identities,
and for e > 1 the element "x" is encoded as p.

The modulus is the lexicographically smallest monic irreducible polynomial
of degree e (coefficients compared lowest degree first), so the same (p, e)
always yields the same field and the same element labels.

* Class 'field_spec'
* Function 'field_make'
* Function 'field_arith'
* Function 'check_field_axioms'
* Function 'prime_power_split'
"""

import itertools

import sympy.polys.galoistools as gf
from sympy.polys.domains import ZZ

from ppmodel.pp_base import *

def is_prime(p):
    """
    Trial division primality test
    """
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True

def prime_power_split(q):
    """
    Split q = p^e.

    Return: tuple (p, e)

    Raises field_error if q is not a prime power.
    """
    if q < 2:
        raise field_error("Order %d is not a prime power." % q)
    p = 2
    while q % p != 0:
        p += 1
    e = 0
    rest = q
    while rest % p == 0:
        rest //= p
        e += 1
    if rest != 1:
        raise field_error("Order %d is not a prime power." % q)
    return (p, e)

# polynomial helpers over GF(p): coefficient lists, lowest degree first

def _is_irreducible(m, p):
    """
    Trial division against all monic polynomials of degree 1..deg(m)/2
    """
    # galoistools lists are highest degree first
    f = list(reversed(m))
    e = len(m) - 1
    for d in range(1, e // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if len(gf.gf_rem(f, [1] + list(reversed(low)), p, ZZ)) == 0:
                return False
    return True

def smallest_irreducible(p, e):
    """
    Lexicographically smallest monic irreducible polynomial of degree e
    over GF(p). Coefficients are compared lowest degree first.

    Return: tuple of e+1 coefficients, lowest degree first
    """
    for low in itertools.product(range(p), repeat=e):
        m = list(low) + [1]
        if _is_irreducible(m, p):
            return tuple(m)
    # there is always an irreducible polynomial of any degree
    raise RuntimeError("No irreducible polynomial found for p=%d e=%d" % (p, e))

class field_spec():
    """
    Finite field GF(p^e) with its operation tables.

    Objects are immutable after construction. Multiplication and inversion
    use discrete log tables built from a primitive element. Addition is
    digit-wise modulo p (bitwise xor when p = 2), with a full table for
    small fields.

    Attributes:
    * p: characteristic
    * e: extension degree
    * q: order p^e
    * modulus: tuple with e+1 coefficients, lowest degree first
    * generator: a primitive element
    """
    # full addition table up to this order
    add_table_limit = 256

    def __init__(self, p, e, **kwargs):
        if e < 1:
            raise degree_error("Extension degree must be at least 1 (got %d)." % e)
        if not is_prime(p):
            raise nonprime_error("Characteristic %d is not a prime." % p)
        if p**e > max_field_order:
            raise order_limit_error("Field order %d^%d exceeds the limit %d." % (p, e, max_field_order))
        self.p = p
        self.e = e
        self.q = p**e
        self.modulus = smallest_irreducible(p, e)
        self.name = "GF(%d)" % self.q
        for key in kwargs.keys():
            setattr(self, key, kwargs[key])
        self._build_tables()

    def __repr__(self):
        return "<%s '%s' modulus %s>" % (self.__class__.__name__, self.name, repr(self.modulus))

    # element <-> digit vector
    def digits(self, a):
        """
        Coefficients of element a, lowest degree first (length e)
        """
        d = []
        for i in range(self.e):
            d.append(a % self.p)
            a //= self.p
        return d

    def from_digits(self, d):
        a = 0
        for c in reversed(list(d)):
            a = a * self.p + (c % self.p)
        return a

    def _mul_slow(self, a, b):
        # polynomial product reduced by the modulus, highest degree first
        da = gf.gf_strip(list(reversed(self.digits(a))))
        db = gf.gf_strip(list(reversed(self.digits(b))))
        prod = gf.gf_mul(da, db, self.p, ZZ)
        rem = gf.gf_rem(prod, list(reversed(self.modulus)), self.p, ZZ)
        return self.from_digits([int(c) for c in reversed(rem)])

    def _add_slow(self, a, b):
        if self.p == 2:
            return a ^ b
        return self.from_digits([x + y for x, y in zip(self.digits(a), self.digits(b))])

    def _pow_slow(self, a, k):
        result = 1
        while k > 0:
            if k & 1:
                result = self._mul_slow(result, a)
            a = self._mul_slow(a, a)
            k >>= 1
        return result

    def _build_tables(self):
        q = self.q
        # primitive element: g^((q-1)/r) != 1 for every prime r dividing q-1
        factors = []
        rest = q - 1
        d = 2
        while d * d <= rest:
            if rest % d == 0:
                factors.append(d)
                while rest % d == 0:
                    rest //= d
            d += 1
        if rest > 1:
            factors.append(rest)
        self.generator = 1
        for g in range(2, q):
            if all(self._pow_slow(g, (q - 1) // r) != 1 for r in factors):
                self.generator = g
                break
        # exp and log tables
        self.exp_table = [0] * (2 * (q - 1))
        self.log_table = [None] * q
        x = 1
        for i in range(q - 1):
            self.exp_table[i] = x
            self.log_table[x] = i
            x = self._mul_slow(x, self.generator)
        for i in range(q - 1, 2 * (q - 1)):
            self.exp_table[i] = self.exp_table[i - (q - 1)]
        # negation table
        self.neg_table = [self.from_digits([-c for c in self.digits(a)]) for a in range(q)]
        # addition table for small fields
        if q <= self.add_table_limit:
            self.add_table = [[self._add_slow(a, b) for b in range(q)] for a in range(q)]
        else:
            self.add_table = None

    # element validation
    def check(self, a):
        if not isinstance(a, int) or a < 0 or a >= self.q:
            raise domain_error("Element %s is not in %s." % (repr(a), self.name))
        return a

    # arithmetic
    def add(self, a, b):
        if self.add_table is not None:
            return self.add_table[a][b]
        return self._add_slow(a, b)

    def sub(self, a, b):
        return self.add(a, self.neg_table[b])

    def neg(self, a):
        return self.neg_table[a]

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self.exp_table[self.log_table[a] + self.log_table[b]]

    def inv(self, a):
        if a == 0:
            raise domain_error("Zero has no multiplicative inverse.")
        return self.exp_table[(self.q - 1 - self.log_table[a]) % (self.q - 1)]

    def pow(self, a, k):
        if k == 0:
            return 1
        if a == 0:
            if k < 0:
                raise domain_error("Zero has no multiplicative inverse.")
            return 0
        return self.exp_table[(self.log_table[a] * k) % (self.q - 1)]

    def elements(self):
        return range(self.q)

    def multiplicative_order(self, a):
        if a == 0:
            raise domain_error("Zero has no multiplicative order.")
        x = a
        order = 1
        while x != 1:
            x = self.mul(x, a)
            order += 1
        return order

def field_make(p, e):
    """
    Build the field GF(p^e).

    Arguments
    * p: prime characteristic
    * e: extension degree >= 1

    Return: field_spec object

    Notes:
    * non prime p, e < 1 and p^e above the limit raise the distinct errors
      nonprime_error, degree_error and order_limit_error.
    """
    return field_spec(p, e)

def field_arith(spec, op, *args):
    """
    Field operation dispatcher.

    Arguments
    * spec: field_spec object
    * op: one of "add", "sub", "mul", "neg", "inv", "pow"
    * args: operands. "pow" takes an element and an integer exponent.
    """
    if op == "pow":
        if len(args) != 2:
            raise domain_error("pow needs an element and an exponent.")
        return spec.pow(spec.check(args[0]), args[1])
    arity = {"add": 2, "sub": 2, "mul": 2, "neg": 1, "inv": 1}
    if op not in arity:
        raise domain_error("Unknown field operation '%s'." % op)
    if len(args) != arity[op]:
        raise domain_error("Operation '%s' needs %d operands." % (op, arity[op]))
    vals = [spec.check(a) for a in args]
    return getattr(spec, op)(*vals)

def primitive_element(spec):
    return spec.generator

def check_field_axioms(spec):
    """
    Exhaustive verification of the field axioms over all element pairs and
    triples. Meant for small fields (q <= 32).

    Return: check_report
    """
    report = check_report("field axioms %s" % spec.name)
    q = spec.q
    elems = range(q)
    witness = None
    for a in elems:
        if spec.add(a, 0) != a or spec.mul(a, 1) != a:
            witness = (a,)
            break
    report.add("identities", witness is None, witness=witness)
    witness = None
    for a, b in itertools.product(elems, repeat=2):
        if spec.add(a, b) != spec.add(b, a) or spec.mul(a, b) != spec.mul(b, a):
            witness = (a, b)
            break
    report.add("commutativity", witness is None, witness=witness)
    assoc = None
    distrib = None
    for a, b, c in itertools.product(elems, repeat=3):
        if assoc is None:
            if spec.add(spec.add(a, b), c) != spec.add(a, spec.add(b, c)) or \
               spec.mul(spec.mul(a, b), c) != spec.mul(a, spec.mul(b, c)):
                assoc = (a, b, c)
        if distrib is None:
            if spec.mul(a, spec.add(b, c)) != spec.add(spec.mul(a, b), spec.mul(a, c)):
                distrib = (a, b, c)
        if assoc is not None and distrib is not None:
            break
    report.add("associativity", assoc is None, witness=assoc)
    report.add("distributivity", distrib is None, witness=distrib)
    witness = None
    for a in elems:
        if spec.add(a, spec.neg(a)) != 0:
            witness = (a,)
            break
        if a != 0:
            if spec.mul(a, spec.inv(a)) != 1 or spec.inv(spec.inv(a)) != a:
                witness = (a,)
                break
    report.add("inverses", witness is None, witness=witness)
    cyclic = (q == 2) or spec.multiplicative_order(spec.generator) == q - 1
    report.add("cyclic multiplicative group", cyclic, witness=None if cyclic else (spec.generator,))
    return report
