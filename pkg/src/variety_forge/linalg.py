"""Sparse exact linear algebra over Q and Q(d).

Rows are dicts column -> entry.  Entries live in an integral domain: plain
ints for rational problems, integer-coefficient polynomial tuples for
generic-d problems.  Elimination is fraction-free (cross-multiplication with
gcd-reduced multipliers, followed by content reduction), so the reduced rows
are the field RREF rescaled to a primitive integral form.

RowBasis maintains the fully reduced form at all times: pivots are the
leading (smallest) columns, every stored row vanishes at every other row's
pivot, and each row is content-free with a positive (leading coefficient of
the) pivot entry.  That representation is canonical for the row space, which
is what makes span comparison a structural equality.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

from .scalar import (PONE, RationalFunction, pcontent, pdeg, pdivexact,
                     pgcd, pmul, pneg, psub)


class LinalgError(ValueError):
    pass


class ZZDomain:
    """Entries are ints; content reduction is a plain gcd."""

    name = "Q"
    one = 1

    @staticmethod
    def is_entry(v):
        return isinstance(v, int)

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def cancel(a, b):
        g = math.gcd(a, b)
        return a // g, b // g

    @staticmethod
    def reduce_row(row):
        g = 0
        for v in row.values():
            g = math.gcd(g, v)
            if g == 1:
                return row
        if g > 1:
            for c in row:
                row[c] //= g
        return row

    @staticmethod
    def positive(entry):
        return entry > 0

    @staticmethod
    def needs_reduction(row):
        return False

    @staticmethod
    def to_field(entry):
        return Fraction(entry)

    @staticmethod
    def field_div(a, b):
        return Fraction(a, b)


class PolyDomain:
    """Entries are integer-coefficient polynomials in d (ascending tuples)."""

    name = "Q(d)"
    one = PONE
    lazy_degree = 16  # full polynomial content reduction above this degree

    @staticmethod
    def is_entry(v):
        return isinstance(v, tuple)

    @staticmethod
    def mul(a, b):
        return pmul(a, b)

    @staticmethod
    def sub(a, b):
        return psub(a, b)

    @staticmethod
    def neg(a):
        return pneg(a)

    @staticmethod
    def cancel(a, b):
        g = pgcd(a, b)
        if g == PONE:
            return a, b
        return pdivexact(a, g), pdivexact(b, g)

    @classmethod
    def reduce_row(cls, row):
        # integer content first (cheap); polynomial content only when degrees
        # drift upward, per the lazy reduction strategy
        g = 0
        for v in row.values():
            g = math.gcd(g, pcontent(v))
            if g == 1:
                break
        if g > 1:
            for c, v in row.items():
                row[c] = tuple(x // g for x in v)
        if any(pdeg(v) > cls.lazy_degree for v in row.values()):
            cls.reduce_row_full(row)
        return row

    @staticmethod
    def reduce_row_full(row):
        g = ()
        for v in row.values():
            g = pgcd(g, v)
            if g == PONE:
                return row
        if g and g != PONE:
            for c, v in row.items():
                row[c] = pdivexact(v, g)
        return row

    @staticmethod
    def positive(entry):
        return entry[-1] > 0

    @staticmethod
    def needs_reduction(row):
        return True

    @staticmethod
    def to_field(entry):
        return RationalFunction(entry)

    @staticmethod
    def field_div(a, b):
        return RationalFunction(a, b)


class SparseVector:
    """A fixed-length sparse vector with exact scalar entries."""

    __slots__ = ("length", "entries")

    def __init__(self, length: int, entries=None):
        self.length = length
        self.entries = {}
        if entries:
            for c, v in (entries.items() if isinstance(entries, dict) else entries):
                if not (0 <= c < length):
                    raise LinalgError("index %d out of range" % c)
                if v:
                    self.entries[c] = v

    def is_zero(self):
        return not self.entries

    def __eq__(self, other):
        return (isinstance(other, SparseVector) and self.length == other.length
                and self.entries == other.entries)

    def __repr__(self):
        return "SparseVector(%d, %r)" % (self.length, self.entries)


def _as_row(vec, domain):
    """Convert a SparseVector / mapping with field entries to a domain row."""
    items = vec.entries if isinstance(vec, SparseVector) else dict(vec)
    if not items:
        return {}
    if all(domain.is_entry(v) for v in items.values()):
        row = dict(items)
        domain.reduce_row(row)
        return row
    if domain is ZZDomain:
        fracs = {c: Fraction(v) for c, v in items.items()}
        lcm = 1
        for v in fracs.values():
            lcm = lcm * v.denominator // math.gcd(lcm, v.denominator)
        row = {c: int(v * lcm) for c, v in fracs.items()}
    else:
        rfs = {c: v if isinstance(v, RationalFunction)
               else RationalFunction.from_fraction(v) for c, v in items.items()}
        lcm = PONE
        for v in rfs.values():
            lcm = pdivexact(pmul(lcm, v.den), pgcd(lcm, v.den))
        row = {c: pmul(v.num, pdivexact(lcm, v.den)) for c, v in rfs.items()}
    domain.reduce_row(row)
    return {c: v for c, v in row.items() if v}


class RowBasis:
    """Incremental fully-reduced row-echelon basis over a fraction-free domain."""

    def __init__(self, ncols: int, domain=ZZDomain):
        self.ncols = ncols
        self.domain = domain
        self.rows = {}  # pivot column -> row dict

    @property
    def rank(self) -> int:
        return len(self.rows)

    def pivots(self):
        return sorted(self.rows)

    def copy(self) -> "RowBasis":
        out = RowBasis(self.ncols, self.domain)
        out.rows = {p: dict(r) for p, r in self.rows.items()}
        return out

    def _eliminate(self, r, s, p):
        """r <- a*r - b*s with a = s[p]/g, b = r[p]/g; r[p] becomes zero."""
        dom = self.domain
        a, b = dom.cancel(s[p], r[p])
        mul, sub, neg = dom.mul, dom.sub, dom.neg
        if a != dom.one:
            out = {c: mul(a, v) for c, v in r.items()}
        else:
            out = dict(r)
        for c, v in s.items():
            bv = mul(b, v)
            cur = out.get(c)
            if cur is None:
                out[c] = neg(bv)
            else:
                nv = sub(cur, bv)
                if nv:
                    out[c] = nv
                else:
                    del out[c]
        return out

    def _reduce(self, row):
        """Fully reduce a row against the basis; returns the remainder.

        Because stored rows carry no entries at any other pivot column, a
        single pass over the pivot-colliding columns cannot reintroduce one;
        the outer loop is a safety net and normally runs once.
        """
        rows = self.rows
        r = dict(row)
        steps = 0
        while r:
            hit = sorted(c for c in r if c in rows)
            if not hit:
                break
            for c in hit:
                if c in r:
                    r = self._eliminate(r, rows[c], c)
                    steps += 1
                    if steps % 8 == 0:
                        self.domain.reduce_row(r)
        if r and steps:
            self.domain.reduce_row(r)
        return r

    def reduce(self, vec) -> dict:
        return self._reduce(_as_row(vec, self.domain))

    def contains(self, vec) -> bool:
        return not self.reduce(vec)

    def insert(self, vec):
        """Grow the span by vec; True iff vec was outside the previous span."""
        row = vec if isinstance(vec, dict) else _as_row(vec, self.domain)
        r = self._reduce(row)
        if not r:
            return False
        dom = self.domain
        dom.reduce_row(r)
        if dom.needs_reduction(r):
            dom.reduce_row_full(r)
        p = min(r)
        if not dom.positive(r[p]):
            neg = dom.neg
            for c in r:
                r[c] = neg(r[c])
        # back-substitute the new pivot out of every older row
        for q, s in self.rows.items():
            if p in s:
                s2 = self._eliminate(s, r, p)
                dom.reduce_row(s2)
                if not dom.positive(s2[q]):
                    neg = dom.neg
                    for c in s2:
                        s2[c] = neg(s2[c])
                self.rows[q] = s2
        self.rows[p] = r
        return True

    def reduce_insert(self, vec):
        """Tuple-returning variant: (self, inserted flag)."""
        return self, self.insert(vec)

    def finalize(self):
        """Bring every row to its canonical primitive form."""
        dom = self.domain
        if dom.needs_reduction({}):
            for q, s in self.rows.items():
                dom.reduce_row_full(s)
                if not dom.positive(s[q]):
                    neg = dom.neg
                    self.rows[q] = {c: neg(v) for c, v in s.items()}
        return self

    def canonical_rows(self):
        """Hashable canonical content, suitable for span equality."""
        self.finalize()
        # ints lift to constant polynomials so Q and Q(d) spans compare cleanly
        lift = (lambda v: (v,) if v else ()) if self.domain is ZZDomain else (lambda v: v)
        out = []
        for p in sorted(self.rows):
            row = self.rows[p]
            out.append((p, tuple(sorted((c, lift(v)) for c, v in row.items()))))
        return tuple(out)

    def field_rows(self):
        """Rows as SparseVectors over the field, pivot entries scaled to 1."""
        self.finalize()
        out = []
        dom = self.domain
        for p in sorted(self.rows):
            row = self.rows[p]
            pivot = row[p]
            entries = {c: dom.field_div(v, pivot) for c, v in row.items()}
            out.append(SparseVector(self.ncols, entries))
        return out

    def __eq__(self, other):
        return (isinstance(other, RowBasis) and self.ncols == other.ncols
                and self.canonical_rows() == other.canonical_rows())


def rank(rows, ncols: int, domain=ZZDomain) -> int:
    basis = RowBasis(ncols, domain)
    for r in rows:
        basis.insert(r)
    return basis.rank


def nullspace(rows, ncols: int, domain=ZZDomain) -> RowBasis:
    """Basis of the right kernel {y : M y = 0}, dim = ncols - rank."""
    basis = RowBasis(ncols, domain)
    for r in rows:
        basis.insert(r)
    return kernel_of_basis(basis)


def kernel_of_basis(basis: RowBasis) -> RowBasis:
    dom = basis.domain
    pivots = basis.pivots()
    pivot_set = set(pivots)
    free = [c for c in range(basis.ncols) if c not in pivot_set]
    out = RowBasis(basis.ncols, dom)
    for f in free:
        entries = {f: Fraction(1) if dom is ZZDomain else RationalFunction(PONE)}
        for p in pivots:
            row = basis.rows[p]
            if f in row:
                entries[p] = -dom.field_div(row[f], row[p])
        out.insert(SparseVector(basis.ncols, entries))
    return out


def sampled_delta_points(k: int, seed: int = 0):
    """k random rational specialization points avoiding 0, +-1, 1/2, 1/3."""
    rng = random.Random(seed)
    banned = {Fraction(0), Fraction(1), Fraction(-1), Fraction(1, 2), Fraction(1, 3)}
    points = []
    while len(points) < k:
        q = Fraction(rng.randint(2, 97), rng.randint(1, 13))
        if rng.random() < 0.5:
            q = -q
        if q not in banned and q not in points:
            points.append(q)
    return points
