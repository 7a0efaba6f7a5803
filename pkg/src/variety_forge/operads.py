"""Binary quadratic operad presentations, Koszul duals, Hilbert-series tests.

The Koszul dual is computed in the arity-3 component: close the relation rows
under the S3 action, then take the orthogonal complement under the
sign-twisted pairing that couples each monomial with its operation-swapped
mirror weighted by the sign of its leaf word.  The pairing normalization is
calibrated on the self-dual linkage family and cross-checked on the
mixed-Poisson relation matrix, then frozen by unit tests.

Hilbert series here carry the convention a_n = (-1)^n dim P(n) / n!, so a
Koszul operad satisfies H(H!(t)) = t; a nonzero deviation coefficient
certifies non-Koszulness.
"""

from __future__ import annotations

from fractions import Fraction

from .engine import (Variety, dim_multilinear, element_to_row, get_context,
                     row_to_element)
from .exprs import parse_expr
from .linalg import PolyDomain, RowBasis, ZZDomain, nullspace
from .scalar import RationalFunction
from .terms import (ANTISYMMETRIC, NONE, SYMMETRIC, Monomial, OpSymbol,
                    Permutation, act, normalize_tree, ops_table)

_F = Fraction


class OperadError(ValueError):
    pass


class QuadraticPresentation:
    """Binary generators with declared symmetry and arity-3 relations."""

    def __init__(self, generators, relations, delta=None, name=""):
        self.generators = tuple(generators)
        self.relations = tuple(relations)
        self.delta = _F(delta) if delta is not None else None
        self.name = name
        for op in self.generators:
            if op.symmetry == NONE:
                raise OperadError(
                    "generator %r carries no symmetry; only symmetric or "
                    "antisymmetric binary generators are supported" % op.name)
        for rel in self.relations:
            if rel.arity != 3:
                raise OperadError("non-quadratic relation of arity %d" % rel.arity)

    def with_delta(self, q):
        return QuadraticPresentation(self.generators, self.relations, delta=q,
                                     name=self.name)

    def variety(self) -> Variety:
        return Variety(self.generators, self.relations, delta=self.delta,
                       name=self.name)

    def uses_delta(self):
        return self.variety().uses_delta()

    def __repr__(self):
        return "QuadraticPresentation(%s, %d relations)" % (
            self.name or "?", len(self.relations))


def _leaf_sign(mono: Monomial) -> int:
    return Permutation(mono.leaves()).sign()


def _dual_signature(generators):
    """Dual generators and the name map applied to monomial labels."""
    syms = sorted(op.symmetry for op in generators)
    if len(generators) == 1:
        (op,) = generators
        flipped = SYMMETRIC if op.symmetry == ANTISYMMETRIC else ANTISYMMETRIC
        return (OpSymbol(op.name, flipped),), {op.name: op.name}
    if len(generators) == 2 and syms == [ANTISYMMETRIC, SYMMETRIC]:
        # one generator of each kind: flipping the symmetries and renaming
        # keeps the dual on the same signature, with the operation names
        # swapped inside every monomial
        a = next(op for op in generators if op.symmetry == SYMMETRIC)
        b = next(op for op in generators if op.symmetry == ANTISYMMETRIC)
        return tuple(generators), {a.name: b.name, b.name: a.name}
    raise OperadError("unsupported generator signature for Koszul duality")


def _swap_ops(tree, name_map):
    if isinstance(tree, int):
        return tree
    return (name_map[tree[0]], _swap_ops(tree[1], name_map),
            _swap_ops(tree[2], name_map))


def koszul_dual(p: QuadraticPresentation) -> QuadraticPresentation:
    """Dual presentation on the sign-twisted orthogonal complement."""
    ctx = get_context(p.generators, 3)
    dual_ops, name_map = _dual_signature(p.generators)
    dual_ctx = get_context(dual_ops, 3)
    dual_table = ops_table(dual_ops)
    generic = p.delta is None and p.uses_delta()
    domain = PolyDomain if generic else ZZDomain

    relation_span = RowBasis(len(ctx.monomials), domain)
    for rel in p.relations:
        for sigma in Permutation.all(3):
            img = act(sigma, rel, p.generators)
            relation_span.insert(element_to_row(img, ctx, p.delta, domain))
    if relation_span.rank == len(ctx.monomials):
        raise OperadError("relations span the whole arity-3 space")

    twisted = []
    for i, mono in enumerate(ctx.monomials):
        sign, img = normalize_tree(_swap_ops(mono.tree, name_map),
                                   lambda n: dual_table[n])
        twisted.append((dual_ctx.index[img], sign * _leaf_sign(mono)))
    neg = domain.neg
    m_rows = []
    for row in relation_span.rows.values():
        out = {}
        for c, v in row.items():
            j, s = twisted[c]
            out[j] = v if s == 1 else neg(v)
        m_rows.append(out)
    kernel = nullspace(m_rows, len(dual_ctx.monomials), domain)
    relations = tuple(row_to_element(vec.entries, dual_ctx.monomials, 3)
                      for vec in kernel.field_rows())
    return QuadraticPresentation(dual_ops, relations, delta=p.delta,
                                 name=(p.name + "!") if p.name else "dual")


# ---------------------------------------------------------------------------
# the fixed ordered arity-3 sub-bases used for relation matrices

_BLOCK_SOURCES = {
    "mixed": ("bracket(dot(x1,x2),x3)", "bracket(dot(x1,x3),x2)", "bracket(dot(x2,x3),x1)",
              "dot(bracket(x1,x2),x3)", "dot(bracket(x1,x3),x2)", "dot(bracket(x2,x3),x1)"),
    "pure-dot": ("dot(dot(x1,x2),x3)", "dot(dot(x1,x3),x2)", "dot(dot(x2,x3),x1)"),
    "pure-bracket": ("bracket(bracket(x1,x2),x3)", "bracket(bracket(x1,x3),x2)",
                     "bracket(bracket(x2,x3),x1)"),
}


def block_basis(p: QuadraticPresentation, block: str):
    """The fixed ordered sub-basis, restricted to the available generators."""
    try:
        sources = _BLOCK_SOURCES[block]
    except KeyError:
        raise OperadError("unknown block %r (mixed | pure-dot | pure-bracket)" % block)
    names = {op.name for op in p.generators}
    out = []
    for src in sources:
        used = {w for w in ("dot", "bracket") if w in src}
        if used <= names:
            e = parse_expr(src, p.generators)
            ((mono, _),) = e.terms.items()
            out.append(mono)
    return out


def dual_relation_matrix(p: QuadraticPresentation, block: str):
    """Coefficient rows of p's relations on the block, in presentation order.

    Relations with no support on the block are skipped; a relation that
    straddles the block boundary is an error since the printed matrices are
    block-homogeneous.
    """
    basis = block_basis(p, block)
    index = {m: i for i, m in enumerate(basis)}
    rows = []
    for rel in p.relations:
        row = [None] * len(basis)
        inside = 0
        for mono, coeff in rel.terms.items():
            if mono in index:
                row[index[mono]] = coeff
                inside += 1
        if inside == 0:
            continue
        if inside != len(rel.terms):
            raise OperadError("relation %s straddles the %s block" % (rel, block))
        rows.append([c if c is not None else RationalFunction(0) for c in row])
    return rows


# ---------------------------------------------------------------------------
# Hilbert series

class Series:
    """Truncated power series with exact rational coefficients a_1..a_N."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs, order=None):
        coeffs = [_F(c) for c in coeffs]
        self.order = order if order is not None else len(coeffs)
        if len(coeffs) < self.order:
            coeffs += [_F(0)] * (self.order - len(coeffs))
        self.coeffs = tuple(coeffs[: self.order])

    def coefficient(self, n: int) -> Fraction:
        if not (1 <= n <= self.order):
            raise OperadError("coefficient index %d out of range" % n)
        return self.coeffs[n - 1]

    def __eq__(self, other):
        return (isinstance(other, Series) and self.order == other.order
                and self.coeffs == other.coeffs)

    def __sub__(self, other):
        order = min(self.order, other.order)
        return Series([self.coeffs[i] - other.coeffs[i] for i in range(order)], order)

    def __str__(self):
        parts = []
        for i, c in enumerate(self.coeffs, 1):
            if not c:
                continue
            mag = abs(c)
            body = "t" if i == 1 else "t^%d" % i
            if mag != 1:
                body = "%s*%s" % (mag, body)
            parts.append(("-" if c < 0 else "+", body))
        if not parts:
            return "0"
        sign, body = parts[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            text += " %s %s" % (sign, body)
        return text

    def __repr__(self):
        return "Series(%s)" % self


def identity_series(order: int) -> Series:
    return Series([1] + [0] * (order - 1), order)


def hilbert_series(dims, order: int = None) -> Series:
    """a_n = (-1)^n dim P(n) / n! from the dimension list dims[0] = dim P(1)."""
    if order is None:
        order = len(dims)
    if len(dims) < order:
        raise OperadError("need dimensions through n=%d" % order)
    coeffs = []
    fact = 1
    for n in range(1, order + 1):
        fact *= n
        coeffs.append(_F((-1) ** n * dims[n - 1], fact))
    return Series(coeffs, order)


def compose(f: Series, g: Series, order: int = None) -> Series:
    """Truncated functional composition f(g(t)); g has no constant term."""
    if order is None:
        order = min(f.order, g.order)
    out = [_F(0)] * (order + 1)
    gpoly = [_F(0)] + [g.coeffs[i] for i in range(min(g.order, order))]
    gpoly += [_F(0)] * (order + 1 - len(gpoly))
    power = [_F(0)] * (order + 1)
    power[0] = _F(1)
    for k in range(1, order + 1):
        power = _trunc_mul(power, gpoly, order)
        if k <= f.order:
            a = f.coeffs[k - 1]
            if a:
                for i in range(order + 1):
                    out[i] += a * power[i]
    return Series(out[1:], order)


def _trunc_mul(a, b, order):
    out = [_F(0)] * (order + 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if i + j > order:
                    break
                if y:
                    out[i + j] += x * y
    return out


# ---------------------------------------------------------------------------
# Koszulness witness

class KoszulVerdict:
    def __init__(self, name, order, dims, dual_dims, series, dual_series,
                 composed, probabilistic=False):
        self.name = name
        self.order = order
        self.dims = tuple(dims)
        self.dual_dims = tuple(dual_dims)
        self.series = series
        self.dual_series = dual_series
        self.composed = composed
        self.probabilistic = probabilistic

    @property
    def deviation_order(self):
        for n in range(1, self.order + 1):
            c = self.composed.coefficient(n) - (1 if n == 1 else 0)
            if c:
                return n
        return None

    @property
    def deviation(self):
        n = self.deviation_order
        if n is None:
            return None
        return self.composed.coefficient(n) - (1 if n == 1 else 0)

    @property
    def consistent(self):
        return self.deviation_order is None

    def to_lines(self):
        lines = ["name=%s" % (self.name or "?"),
                 "order=%d" % self.order,
                 "dims=%s" % ",".join(str(d) for d in self.dims),
                 "dual_dims=%s" % ",".join(str(d) for d in self.dual_dims),
                 "probabilistic=%s" % ("yes" if self.probabilistic else "no")]
        if self.consistent:
            lines.append("verdict=consistent with Koszul through order %d" % self.order)
        else:
            lines.append("deviation_order=%d" % self.deviation_order)
            lines.append("deviation=%s" % self.deviation)
            lines.append("verdict=not Koszul")
        return lines

    def __str__(self):
        head = "Hilbert-series Koszulness test for %s through t^%d%s" % (
            self.name or "?", self.order,
            " (probabilistic dims)" if self.probabilistic else "")
        body = ["  dim P(n), n=1..%d:  %s" % (self.order, list(self.dims)),
                "  dim P!(n), n=1..%d: %s" % (self.order, list(self.dual_dims)),
                "  H(t)   = %s" % self.series,
                "  H!(t)  = %s" % self.dual_series,
                "  H(H!(t)) = %s" % self.composed]
        if self.consistent:
            body.append("  consistent with Koszul through order %d" % self.order)
        else:
            body.append("  NOT Koszul: deviation %s at t^%d"
                        % (self.deviation, self.deviation_order))
        return "\n".join([head] + body)


def presentation_of_variety(v: Variety) -> QuadraticPresentation:
    for e in v.identities:
        if e.arity != 3:
            raise OperadError("variety is not binary quadratic: identity of arity %d"
                              % e.arity)
    return QuadraticPresentation(v.ops, v.identities, delta=v.delta, name=v.name)


def koszulness_witness(v: Variety, order: int, mode: str = "exact") -> KoszulVerdict:
    """Compare H(H!(t)) with t using engine-computed dimensions on both sides."""
    p = presentation_of_variety(v)
    dual = koszul_dual(p)
    dims = [dim_multilinear(v, n, mode) for n in range(1, order + 1)]
    dual_dims = [dim_multilinear(dual.variety(), n, mode) for n in range(1, order + 1)]
    h = hilbert_series(dims, order)
    h_dual = hilbert_series(dual_dims, order)
    composed = compose(h, h_dual, order)
    return KoszulVerdict(v.name, order, dims, dual_dims, h, h_dual, composed,
                         probabilistic=(mode == "sampled"))


# ---------------------------------------------------------------------------
# free-algebra basis families for the self-dual linkage variety

def _lyndon_multilinear(letters):
    """Standard-bracketing basis monomials: one per word starting at the min."""
    import itertools
    letters = sorted(letters)
    first, rest = letters[0], letters[1:]
    out = []
    for perm in itertools.permutations(rest):
        word = (first,) + perm
        out.append(_standard_bracketing(word))
    return out


def _standard_bracketing(word):
    if len(word) == 1:
        return word[0]
    # split at the longest proper Lyndon suffix (for distinct letters: the
    # suffix starting at the last position where a new minimum-from-the-right
    # begins)
    best = None
    for i in range(1, len(word)):
        suffix = word[i:]
        if _is_lyndon(suffix) and (best is None or len(suffix) > len(word) - best):
            best = i
    u, v = word[:best], word[best:]
    return ("bracket", _standard_bracketing(u), _standard_bracketing(v))


def _is_lyndon(word):
    return all(word < word[i:] for i in range(1, len(word)))


def _canonical(tree, ops):
    from .terms import normalize
    sign, mono = normalize(tree, ops, fragment=True)
    return mono


def _sorted_product(letters):
    letters = sorted(letters)
    tree = letters[0]
    for v in letters[1:]:
        tree = ("dot", tree, v)
    return tree


class FreeBasisReport:
    def __init__(self, n, families):
        self.n = n
        self.families = families  # list of (name, [Monomial])

    @property
    def counts(self):
        return tuple(len(monos) for _, monos in self.families)

    @property
    def total(self):
        return sum(self.counts)

    def __str__(self):
        head = "free basis, multilinear arity %d: %s = %d" % (
            self.n, " + ".join(str(c) for c in self.counts), self.total)
        lines = [head]
        for name, monos in self.families:
            lines.append("  %s (%d):" % (name, len(monos)))
            for m in monos:
                lines.append("    %s" % m)
        return "\n".join(lines)


def free_delta_p_basis(n: int) -> FreeBasisReport:
    """Multilinear basis families of the free self-dual-linkage algebra.

    For n >= 5 the three families have sizes ((n-1)!, (n-2)!, 1); small
    arities return the explicit bases, which carry extra families.
    """
    from .catalog import TWO_OPS
    if n < 1:
        raise OperadError("arity must be positive")
    ops = TWO_OPS
    letters = list(range(1, n + 1))
    if n == 1:
        fam = [("generator", [_canonical(1, ops)])]
        return FreeBasisReport(1, fam)
    lie = [_canonical(t, ops) for t in _lyndon_multilinear(letters)]
    product = [_canonical(_sorted_product(letters), ops)]
    if n == 2:
        return FreeBasisReport(2, [("lie", lie), ("product", product)])
    if n == 3:
        mixed = [_canonical(("dot", ("bracket", a, b), c), ops)
                 for c in letters for a, b in [sorted(set(letters) - {c})]]
        return FreeBasisReport(3, [("lie", lie), ("var-times-bracket", mixed),
                                   ("product", product)])
    if n == 4:
        mixed = [_canonical(("dot", t, 1), ops)
                 for t in _lyndon_multilinear(letters[1:])]
        import itertools
        pairs = []
        for a, b in itertools.combinations(letters, 2):
            c, e = sorted(set(letters) - {a, b})
            if (a, b) <= (c, e):
                pairs.append(_canonical(("dot", ("bracket", a, b), ("bracket", c, e)), ops))
        return FreeBasisReport(4, [("lie", lie), ("var-times-lie", mixed),
                                   ("bracket-pairs", pairs), ("product", product)])
    mixed = [_canonical(("dot", t, 1), ops) for t in _lyndon_multilinear(letters[1:])]
    return FreeBasisReport(n, [("lie", lie), ("var-times-lie", mixed),
                               ("product", product)])
