"""Multilinear components of the ideal of consequences of a variety.

The degree-n component of the T-ideal generated by multilinear identities is
built arity by arity: every identity of arity m is lifted to arity m+1 by the
two elementary steps (substitute x_i <- op(x_i, x_{m+1}), and multiply the
whole monomial by the fresh variable), and each arity level is closed under
variable relabelings.  Closure over all of S_n is realised by saturating the
row span under the two group generators (1 2) and (1 2 ... n), which spans the
same space as inserting every one of the n! images.

Rows live over Q when the variety carries no free parameter (or d is
specialized to a rational), and over Q(d) otherwise; see linalg for the
fraction-free representation.
"""

from __future__ import annotations

import math
import os
from fractions import Fraction

from .linalg import PolyDomain, RowBasis, ZZDomain, sampled_delta_points
from .scalar import PONE, RationalFunction, pdeg, pdivexact, pgcd, pmul
from .terms import (Element, OpSymbol, Permutation, TermError, act_monomial,
                    enumerate_monomials, normalize_tree, ops_table)

DEFAULT_MAX_ARITY_EXACT = 6
DEFAULT_MAX_ARITY_SAMPLED = 7


class EngineError(ValueError):
    pass


class ArityOverflowError(EngineError):
    """Requested arity exceeds the configured resource guard."""


def max_arity(mode: str) -> int:
    env = os.environ.get("VARIETY_FORGE_MAX_ARITY")
    if env:
        return int(env)
    return DEFAULT_MAX_ARITY_EXACT if mode == "exact" else DEFAULT_MAX_ARITY_SAMPLED


# ---------------------------------------------------------------------------
# varieties

class Variety:
    """Operation symbols plus a finite list of multilinear identities.

    ``delta`` is None for generic-d computations, or a Fraction to specialize
    every coefficient before any linear algebra.
    """

    def __init__(self, ops, identities, delta=None, name=""):
        self.ops = tuple(ops)
        self.identities = tuple(identities)
        self.delta = Fraction(delta) if delta is not None else None
        self.name = name
        table = ops_table(self.ops)
        for e in self.identities:
            if e.is_zero():
                raise EngineError("identity is identically zero")
            missing = e.op_names() - set(table)
            if missing:
                raise EngineError("identity uses undeclared operations %s" % sorted(missing))

    def with_delta(self, q) -> "Variety":
        return Variety(self.ops, self.identities, delta=q, name=self.name)

    def with_identities(self, extra) -> "Variety":
        return Variety(self.ops, self.identities + tuple(extra), delta=self.delta,
                       name=self.name)

    def uses_delta(self) -> bool:
        for e in self.identities:
            for c in e.terms.values():
                if pdeg(c.num) > 0 or pdeg(c.den) > 0:
                    return True
        return False

    def signature(self):
        return tuple(sorted((op.name, op.symmetry) for op in self.ops))

    def cache_key(self):
        from .exprs import format_element
        ids = tuple(sorted(format_element(e) for e in self.identities))
        return (self.signature(), ids, self.delta)

    def __repr__(self):
        return "Variety(%s, %d identities, delta=%s)" % (
            self.name or "?", len(self.identities), self.delta)


# ---------------------------------------------------------------------------
# per-arity monomial contexts with index maps

_CONTEXTS = {}


class MonomialContext:
    def __init__(self, ops, n):
        self.ops = tuple(ops)
        self.n = n
        self.table = ops_table(ops)
        self.monomials = enumerate_monomials(n, ops)
        self.index = {m: i for i, m in enumerate(self.monomials)}
        self._perm_tables = None
        self._lift_tables = None

    def perm_generator_tables(self):
        """Index maps for the S_n generators (1 2) and (1 2 ... n)."""
        if self._perm_tables is None:
            gens = []
            if self.n >= 2:
                gens.append(Permutation.transposition(self.n, 1, 2))
            if self.n >= 3:
                gens.append(Permutation.cycle(self.n))
            self._perm_tables = [self._table_for_perm(s) for s in gens]
        return self._perm_tables

    def _table_for_perm(self, sigma):
        out = []
        for m in self.monomials:
            sign, img = act_monomial(sigma, m, self.table)
            out.append((self.index[img], sign))
        return out

    def perm_table(self, sigma):
        return self._table_for_perm(sigma)

    def lift_tables(self, target: "MonomialContext"):
        """Index maps arity n -> n+1 for all elementary consequence steps."""
        if self._lift_tables is None:
            fresh = self.n + 1
            kinds = []
            for op in self.ops:
                orientations = ((False,) if op.symmetry != "none" else (False, True))
                for flip in orientations:
                    kinds.append(("mul", op, flip))
                    for i in range(1, self.n + 1):
                        kinds.append(("subst", op, i, flip))
            tables = []
            for kind in kinds:
                table = []
                for m in self.monomials:
                    if kind[0] == "mul":
                        _, op, flip = kind
                        raw = (op.name, fresh, m.tree) if flip else (op.name, m.tree, fresh)
                    else:
                        _, op, i, flip = kind
                        g = (op.name, fresh, i) if flip else (op.name, i, fresh)
                        raw = _substitute_leaf(m.tree, i, g)
                    sign, img = normalize_tree(raw, lambda nm: self.table[nm] if nm in self.table
                                               else target.table[nm])
                    table.append((target.index[img], sign))
                tables.append(table)
            self._lift_tables = tables
        return self._lift_tables


def _substitute_leaf(tree, var, g):
    if isinstance(tree, int):
        return g if tree == var else tree
    return (tree[0], _substitute_leaf(tree[1], var, g), _substitute_leaf(tree[2], var, g))


def get_context(ops, n) -> MonomialContext:
    key = (tuple((op.name, op.symmetry) for op in ops), n)
    ctx = _CONTEXTS.get(key)
    if ctx is None:
        ctx = _CONTEXTS[key] = MonomialContext(ops, n)
    return ctx


# ---------------------------------------------------------------------------
# rows

def element_to_row(e: Element, ctx: MonomialContext, delta, domain):
    """Write an element as a denominator-free row in ctx's column order."""
    if delta is not None:
        fracs = {}
        for mono, coeff in e.terms.items():
            fracs[ctx.index[mono]] = coeff.eval_at(delta)
        lcm = 1
        for v in fracs.values():
            g = _gcd(lcm, v.denominator)
            lcm = lcm * v.denominator // g
        return {c: int(v * lcm) for c, v in fracs.items() if v}
    if domain is ZZDomain:
        fracs = {ctx.index[mono]: coeff.as_fraction() for mono, coeff in e.terms.items()}
        lcm = 1
        for v in fracs.values():
            g = _gcd(lcm, v.denominator)
            lcm = lcm * v.denominator // g
        return {c: int(v * lcm) for c, v in fracs.items() if v}
    lcm = PONE
    for coeff in e.terms.values():
        lcm = pdivexact(pmul(lcm, coeff.den), pgcd(lcm, coeff.den))
    return {ctx.index[mono]: pmul(coeff.num, pdivexact(lcm, coeff.den))
            for mono, coeff in e.terms.items()}


def _gcd(a, b):
    return math.gcd(a, b)


def row_to_element(entries, monomials, arity) -> Element:
    terms = {}
    for c, v in entries.items():
        if isinstance(v, RationalFunction):
            coeff = v
        elif isinstance(v, tuple):
            coeff = RationalFunction(v)
        else:
            coeff = RationalFunction.from_fraction(Fraction(v))
        if not coeff.is_zero():
            terms[monomials[c]] = coeff
    return Element(arity, terms)


def apply_index_map(row, table, neg):
    out = {}
    for c, v in row.items():
        j, s = table[c]
        out[j] = v if s == 1 else neg(v)
    return out


# ---------------------------------------------------------------------------
# consequence spaces

class ConsequenceSpace:
    """The multilinear degree-n component of a variety's ideal of consequences."""

    def __init__(self, variety, n, monomials, basis, mode="exact", samples=None):
        self.variety = variety
        self.n = n
        self.monomials = monomials
        self.basis = basis
        self.mode = mode
        self.samples = samples or []

    @property
    def rank(self):
        if self.mode == "sampled":
            return max((r for _, r in self.samples), default=0)
        return self.basis.rank

    @property
    def dim(self):
        return len(self.monomials) - self.rank

    def __repr__(self):
        return "ConsequenceSpace(n=%d, rank=%d of %d, mode=%s)" % (
            self.n, self.rank, len(self.monomials), self.mode)


_SPACE_CACHE = {}


def clear_cache():
    _SPACE_CACHE.clear()
    _CONTEXTS.clear()


def consequences(v: Variety, n: int, mode: str = "exact") -> ConsequenceSpace:
    """Row span of the degree-n multilinear component of v's T-ideal."""
    if n < 1:
        raise EngineError("arity must be positive")
    guard = max_arity(mode)
    if n > guard:
        raise ArityOverflowError(
            "arity %d exceeds the configured guard %d for %s mode "
            "(set VARIETY_FORGE_MAX_ARITY to override)" % (n, guard, mode))
    key = (v.cache_key(), n, mode)
    hit = _SPACE_CACHE.get(key)
    if hit is not None:
        return hit
    if mode == "exact":
        space = _consequences_exact(v, n)
    elif mode == "sampled":
        space = _consequences_sampled(v, n)
    else:
        raise EngineError("unknown mode %r" % mode)
    _SPACE_CACHE[key] = space
    return space


def _consequences_exact(v: Variety, n: int) -> ConsequenceSpace:
    domain = PolyDomain if (v.delta is None and v.uses_delta()) else ZZDomain
    basis = _build_basis(v, n, v.delta, domain)
    ctx = get_context(v.ops, n)
    return ConsequenceSpace(v, n, ctx.monomials, basis)


def _consequences_sampled(v: Variety, n: int, k: int = 3) -> ConsequenceSpace:
    if v.delta is not None or not v.uses_delta():
        # nothing to sample; run the exact specialization
        domain = ZZDomain
        basis = _build_basis(v, n, v.delta, domain)
        ctx = get_context(v.ops, n)
        return ConsequenceSpace(v, n, ctx.monomials, basis,
                                mode="sampled", samples=[(v.delta, basis.rank)])
    samples = []
    best = None
    ctx = get_context(v.ops, n)
    for q in sampled_delta_points(k):
        try:
            basis = _build_basis(v, n, q, ZZDomain)
        except ZeroDivisionError:
            continue
        samples.append((q, basis.rank))
        if best is None or basis.rank > best.rank:
            best = basis
    if best is None:
        raise EngineError("every sampled specialization of d hit a pole")
    return ConsequenceSpace(v, n, ctx.monomials, best, mode="sampled", samples=samples)


def _build_basis(v: Variety, n: int, delta, domain) -> RowBasis:
    by_arity = {}
    for e in v.identities:
        by_arity.setdefault(e.arity, []).append(e)
    ctx_n = get_context(v.ops, n)
    if not by_arity or min(by_arity) > n:
        return RowBasis(len(ctx_n.monomials), domain)
    m0 = min(by_arity)
    neg = domain.neg
    prev_basis = None
    prev_ctx = None
    basis = None
    for m in range(m0, n + 1):
        ctx = get_context(v.ops, m)
        basis = RowBasis(len(ctx.monomials), domain)
        queue = []
        candidates = [element_to_row(e, ctx, delta, domain)
                      for e in by_arity.get(m, [])]
        if prev_basis is not None and prev_basis.rank:
            for table in prev_ctx.lift_tables(ctx):
                for row in prev_basis.rows.values():
                    candidates.append(apply_index_map(row, table, neg))
        for row in candidates:
            if basis.insert(row):
                queue.append(row)
        gen_tables = ctx.perm_generator_tables()
        while queue:
            row = queue.pop()
            for table in gen_tables:
                img = apply_index_map(row, table, neg)
                if basis.insert(img):
                    queue.append(img)
        prev_basis, prev_ctx = basis, ctx
    return basis


def dim_multilinear(v: Variety, n: int, mode: str = "exact") -> int:
    """Monomial-space dimension minus the rank of consequences(v, n)."""
    return consequences(v, n, mode).dim


def is_consequence(v: Variety, target: Element, n: int, mode: str = "exact") -> bool:
    """True iff target lies in the span of consequences(v, n)."""
    if target.arity != n:
        raise EngineError("target arity %d does not match n=%d" % (target.arity, n))
    if target.is_zero():
        return True
    space = consequences(v, n, mode)
    basis = space.basis
    ctx = get_context(v.ops, n)
    if basis.domain is PolyDomain:
        row = element_to_row(target, ctx, v.delta, PolyDomain)
        return basis.contains(row)
    try:
        row = element_to_row(target, ctx, v.delta, ZZDomain)
    except ValueError:
        # d-dependent target against a d-free span: membership holds iff each
        # d-power component lies in the span separately
        poly_row = element_to_row(target, ctx, None, PolyDomain)
        maxdeg = max(pdeg(p) for p in poly_row.values())
        for i in range(maxdeg + 1):
            comp = {c: p[i] for c, p in poly_row.items() if pdeg(p) >= i and p[i]}
            if comp and not basis.contains(comp):
                return False
        return True
    return basis.contains(row)


def equivalent(v1: Variety, v2: Variety, n: int, mode: str = "exact") -> bool:
    """True iff the two varieties have equal consequence spans at arity n."""
    if v1.signature() != v2.signature():
        raise EngineError("operation signature mismatch: %s vs %s"
                          % (v1.signature(), v2.signature()))
    if v1.delta != v2.delta:
        raise EngineError("parameter modes differ: %s vs %s" % (v1.delta, v2.delta))
    s1 = consequences(v1, n, mode)
    s2 = consequences(v2, n, mode)
    return s1.basis.canonical_rows() == s2.basis.canonical_rows()


# ---------------------------------------------------------------------------
# polarization at the variety level

def depolarize_variety(v: Variety, plain_name: str = "m") -> Variety:
    """One-operation variety whose identities are the depolarized ones."""
    from .terms import BRACKET, DOT, depolarize_expr
    plain = OpSymbol(plain_name, "none")
    dot = next((op for op in v.ops if op.symmetry == "symmetric"), DOT)
    bracket = next((op for op in v.ops if op.symmetry == "antisymmetric"), BRACKET)
    idents = [depolarize_expr(e, dot, bracket, plain) for e in v.identities]
    idents = [e for e in idents if not e.is_zero()]
    return Variety((plain,), idents, delta=v.delta,
                   name=(v.name + "-depolarized") if v.name else "depolarized")


# ---------------------------------------------------------------------------
# variety files

def parse_variety_text(text: str, name: str = "") -> Variety:
    """Line-oriented format: op/param/identity lines, # comments."""
    from .exprs import parse_expr
    ops = []
    delta = None
    identity_lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("op "):
            parts = line.split()
            if len(parts) != 3:
                raise EngineError("line %d: expected 'op <name> <symmetry>'" % lineno)
            ops.append(OpSymbol(parts[1], parts[2]))
        elif line.startswith("param "):
            body = line[len("param "):].strip()
            if "=" in body:
                pname, value = (s.strip() for s in body.split("=", 1))
                if pname != "delta":
                    raise EngineError("line %d: unknown parameter %r" % (lineno, pname))
                delta = Fraction(value)
            elif body != "delta":
                raise EngineError("line %d: unknown parameter %r" % (lineno, body))
        elif line.startswith("identity:"):
            identity_lines.append((lineno, line[len("identity:"):].strip()))
        else:
            raise EngineError("line %d: unrecognized directive %r" % (lineno, line))
    if not ops:
        raise EngineError("variety file declares no operations")
    identities = []
    for lineno, src in identity_lines:
        try:
            e = parse_expr(src, ops)
        except (TermError, ValueError) as exc:
            raise EngineError("line %d: %s" % (lineno, exc)) from exc
        if not e.is_zero():
            identities.append(e)
    return Variety(ops, identities, delta=delta, name=name)


def format_variety(v: Variety) -> str:
    from .exprs import format_element
    lines = []
    if v.name:
        lines.append("# %s" % v.name)
    for op in v.ops:
        lines.append("op %s %s" % (op.name, op.symmetry))
    if v.delta is not None:
        lines.append("param delta = %s" % v.delta)
    elif v.uses_delta():
        lines.append("param delta")
    for e in v.identities:
        lines.append("identity: %s" % format_element(e))
    return "\n".join(lines) + "\n"


def load_variety(path) -> Variety:
    import os.path
    with open(path, "r", encoding="utf-8") as fh:
        return parse_variety_text(fh.read(), name=os.path.splitext(os.path.basename(path))[0])
