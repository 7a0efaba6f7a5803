"""Multilinear monomials over binary operations with declared symmetry.

A monomial is a leaf-labelled binary tree; internal nodes carry operation
symbols, leaves carry variable indices 1..n, each exactly once.  Trees are
stored as nested tuples: a leaf is an int, a node is ``(op_name, left, right)``.
Canonical form orders the children of every symmetric or antisymmetric node by
the fixed total order on subtrees (shape, then operation labels, then the leaf
word); reordering under an antisymmetric node flips the sign.

Elements are finite sums of canonical monomials with coefficients in Q(d);
an identity is an element asserted to vanish.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .scalar import RF_ONE, RationalFunction

SYMMETRIC = "symmetric"
ANTISYMMETRIC = "antisymmetric"
NONE = "none"

_SYMMETRIES = (SYMMETRIC, ANTISYMMETRIC, NONE)

HALF = RationalFunction.from_fraction(Fraction(1, 2))


class TermError(ValueError):
    pass


@dataclass(frozen=True)
class OpSymbol:
    name: str
    symmetry: str

    def __post_init__(self):
        if self.symmetry not in _SYMMETRIES:
            raise TermError("unknown symmetry %r" % self.symmetry)

    def __str__(self):
        return "%s(%s)" % (self.name, self.symmetry)


DOT = OpSymbol("dot", SYMMETRIC)
BRACKET = OpSymbol("bracket", ANTISYMMETRIC)
PLAIN = OpSymbol("m", NONE)


def _tree_key(tree):
    """Total-order key: left-depth-first shape, then op labels, then leaves.

    Internal nodes encode as 0 and leaves as 1, so compound subtrees precede
    plain variables; canonical form therefore writes x{y,z} as dot(bracket,var).
    """
    shape = []
    ops = []
    leaves = []
    stack = [tree]
    while stack:
        t = stack.pop()
        if isinstance(t, int):
            shape.append(1)
            leaves.append(t)
        else:
            shape.append(0)
            ops.append(t[0])
            stack.append(t[2])
            stack.append(t[1])
    return (tuple(shape), tuple(ops), tuple(leaves))


def _tree_leaves(tree, out):
    if isinstance(tree, int):
        out.append(tree)
    else:
        _tree_leaves(tree[1], out)
        _tree_leaves(tree[2], out)


class Monomial:
    """A canonical multilinear monomial.  Construct through ``normalize``."""

    __slots__ = ("tree", "arity", "_key", "_hash")

    def __init__(self, tree, _trusted=False):
        if not _trusted:
            sign, mono = normalize_tree(tree, _symmetry_oracle)
            if sign != 1:
                raise TermError("tree is not in canonical form: %r" % (tree,))
            tree = mono.tree
        leaves = []
        _tree_leaves(tree, leaves)
        self.tree = tree
        self.arity = len(leaves)
        self._key = _tree_key(tree)
        self._hash = hash(self._key)

    @property
    def key(self):
        return self._key

    def leaves(self):
        out = []
        _tree_leaves(self.tree, out)
        return out

    def op_names(self):
        return set(self._key[1])

    def __eq__(self, other):
        return isinstance(other, Monomial) and self._key == other._key

    def __lt__(self, other):
        return self._key < other._key

    def __hash__(self):
        return self._hash

    def __str__(self):
        return format_tree(self.tree)

    def __repr__(self):
        return "Monomial(%s)" % self


def format_tree(tree) -> str:
    if isinstance(tree, int):
        return "x%d" % tree
    return "%s(%s,%s)" % (tree[0], format_tree(tree[1]), format_tree(tree[2]))


# Symmetry lookup used during normalization: trees only carry op names, so the
# caller supplies name -> symmetry.  A global default covers dot/bracket/m.
_DEFAULT_SYMMETRY = {DOT.name: SYMMETRIC, BRACKET.name: ANTISYMMETRIC, PLAIN.name: NONE}


def _symmetry_oracle(name):
    try:
        return _DEFAULT_SYMMETRY[name]
    except KeyError:
        raise TermError("unknown operation %r" % name)


def ops_table(ops) -> dict:
    table = {}
    for op in ops:
        if op.name in table and table[op.name] != op.symmetry:
            raise TermError("operation %r declared twice with different symmetry" % op.name)
        table[op.name] = op.symmetry
    return table


def normalize_tree(tree, symmetry_of, fragment=False):
    """Canonicalize a raw tree; returns (sign, Monomial).

    With fragment=True leaf labels need only be distinct, which is the shape
    substitution arguments come in; otherwise they must be exactly 1..n.
    """
    sign, canon = _normalize_rec(tree, symmetry_of)
    leaves = []
    _tree_leaves(canon, leaves)
    if fragment:
        if len(set(leaves)) != len(leaves):
            raise TermError("repeated variable in monomial: %r" % (tree,))
    elif sorted(leaves) != list(range(1, len(leaves) + 1)):
        raise TermError("monomial is not multilinear in x1..xn: %r" % (tree,))
    m = Monomial.__new__(Monomial)
    m.tree = canon
    m.arity = len(leaves)
    m._key = _tree_key(canon)
    m._hash = hash(m._key)
    return sign, m


def _normalize_rec(tree, symmetry_of):
    if isinstance(tree, int):
        return 1, tree
    name, left, right = tree
    sym = symmetry_of(name) if callable(symmetry_of) else symmetry_of[name]
    sl, left = _normalize_rec(left, symmetry_of)
    sr, right = _normalize_rec(right, symmetry_of)
    sign = sl * sr
    if sym != NONE and _tree_key(left) > _tree_key(right):
        left, right = right, left
        if sym == ANTISYMMETRIC:
            sign = -sign
    return sign, (name, left, right)


def normalize(tree, ops=None, fragment=False):
    """Public canonicalization: (sign, Monomial) for a raw labelled tree."""
    table = ops_table(ops) if ops is not None else _DEFAULT_SYMMETRY
    return normalize_tree(tree, lambda n: _lookup(table, n), fragment=fragment)


def _lookup(table, name):
    try:
        return table[name]
    except KeyError:
        raise TermError("unknown operation %r" % name)


# ---------------------------------------------------------------------------
# elements

class Element:
    """A finite Q(d)-combination of canonical monomials of one arity."""

    __slots__ = ("arity", "terms")

    def __init__(self, arity: int, terms=None):
        self.arity = arity
        self.terms = {}
        if terms:
            for mono, coeff in (terms.items() if isinstance(terms, dict) else terms):
                self._add(mono, coeff)

    def _add(self, mono: Monomial, coeff):
        if not isinstance(coeff, RationalFunction):
            coeff = RationalFunction.from_fraction(coeff) if not isinstance(coeff, int) \
                else RationalFunction((coeff,) if coeff else ())
        if mono.arity != self.arity:
            raise TermError("arity mismatch: %d vs %d" % (mono.arity, self.arity))
        cur = self.terms.get(mono)
        new = coeff if cur is None else cur + coeff
        if new.is_zero():
            self.terms.pop(mono, None)
        else:
            self.terms[mono] = new

    def is_zero(self) -> bool:
        return not self.terms

    def items_sorted(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0].key)

    def op_names(self):
        names = set()
        for m in self.terms:
            names |= m.op_names()
        return names

    def scale(self, c) -> "Element":
        out = Element(self.arity)
        for m, v in self.terms.items():
            out._add(m, v * c)
        return out

    def __add__(self, other: "Element") -> "Element":
        if self.arity != other.arity:
            raise TermError("arity mismatch in addition")
        out = Element(self.arity, dict(self.terms))
        for m, v in other.terms.items():
            out._add(m, v)
        return out

    def __sub__(self, other: "Element") -> "Element":
        return self + other.scale(-1)

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        if not self.terms and not other.terms:
            return True  # the zero element, whatever arity tag it carries
        return self.arity == other.arity and self.terms == other.terms

    def __hash__(self):
        return hash((self.arity if self.terms else 0,
                     frozenset(self.terms.items())))

    def __str__(self):
        from .exprs import format_element
        return format_element(self)

    def __repr__(self):
        return "Element(%s)" % self



# ---------------------------------------------------------------------------
# permutations

class Permutation:
    """A bijection of 1..n given by its image tuple."""

    __slots__ = ("image",)

    def __init__(self, image):
        image = tuple(image)
        if sorted(image) != list(range(1, len(image) + 1)):
            raise TermError("not a permutation of 1..n: %r" % (image,))
        self.image = image

    @staticmethod
    def identity(n):
        return Permutation(range(1, n + 1))

    @staticmethod
    def transposition(n, i, j):
        img = list(range(1, n + 1))
        img[i - 1], img[j - 1] = j, i
        return Permutation(img)

    @staticmethod
    def cycle(n):
        """The n-cycle (1 2 ... n)."""
        return Permutation(list(range(2, n + 1)) + [1]) if n > 1 else Permutation((1,))

    @staticmethod
    def all(n):
        for img in itertools.permutations(range(1, n + 1)):
            yield Permutation(img)

    def __call__(self, i: int) -> int:
        return self.image[i - 1]

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other: (self*other)(i) = self(other(i))."""
        return Permutation(tuple(self.image[j - 1] for j in other.image))

    def sign(self) -> int:
        img = self.image
        sign = 1
        seen = [False] * len(img)
        for i in range(len(img)):
            if seen[i]:
                continue
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = img[j] - 1
                length += 1
            if length % 2 == 0:
                sign = -sign
        return sign

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.image == other.image

    def __hash__(self):
        return hash(self.image)

    def __repr__(self):
        return "Permutation(%r)" % (self.image,)


def _relabel(tree, mapping):
    if isinstance(tree, int):
        return mapping[tree]
    return (tree[0], _relabel(tree[1], mapping), _relabel(tree[2], mapping))


def act(sigma: Permutation, e: Element, ops) -> Element:
    """Replace each leaf label i by sigma(i) and renormalize."""
    if len(sigma.image) != e.arity:
        raise TermError("permutation arity %d does not match element arity %d"
                        % (len(sigma.image), e.arity))
    table = ops_table(ops)
    mapping = {i: sigma(i) for i in range(1, e.arity + 1)}
    out = Element(e.arity)
    for mono, coeff in e.terms.items():
        sign, new = normalize_tree(_relabel(mono.tree, mapping), lambda n: _lookup(table, n))
        out._add(new, coeff if sign == 1 else coeff * (-1))
    return out


def act_monomial(sigma: Permutation, mono: Monomial, table):
    mapping = {i: sigma(i) for i in range(1, mono.arity + 1)}
    return normalize_tree(_relabel(mono.tree, mapping), lambda n: _lookup(table, n))


# ---------------------------------------------------------------------------
# substitution and multiplication by a fresh variable

def _substitute_tree(tree, var, g_tree):
    if isinstance(tree, int):
        return g_tree if tree == var else tree
    return (tree[0], _substitute_tree(tree[1], var, g_tree),
            _substitute_tree(tree[2], var, g_tree))


def substitute(e: Element, var: int, g: Monomial, ops) -> Element:
    """Replace x_var by the monomial g everywhere, renumber to 1..n'.

    Variables of g other than x_var itself must be disjoint from e's; the
    result is renumbered to consecutive indices preserving relative order.
    """
    table = ops_table(ops)
    g_leaves = set(g.leaves())
    clash = (g_leaves - {var}) & set(range(1, e.arity + 1))
    if clash:
        raise TermError("substitution variables %s collide with element variables" % sorted(clash))
    new_labels = sorted((set(range(1, e.arity + 1)) - {var}) | g_leaves)
    renum = {old: i + 1 for i, old in enumerate(new_labels)}
    out = Element(len(new_labels))
    for mono, coeff in e.terms.items():
        raw = _substitute_tree(mono.tree, var, g.tree)
        raw = _relabel(raw, renum)
        sign, new = normalize_tree(raw, lambda n: _lookup(table, n))
        out._add(new, coeff if sign == 1 else coeff * (-1))
    return out


def multiply_by_var(e: Element, op: OpSymbol, position: str = "right") -> Element:
    """Wrap every monomial as op(m, x_{n+1}) (or mirrored for position left)."""
    if position not in ("left", "right"):
        raise TermError("position must be left or right")
    fresh = e.arity + 1
    out = Element(fresh)
    for mono, coeff in e.terms.items():
        # subtrees are already canonical, only the new root needs ordering
        left, right = (mono.tree, fresh) if position == "right" else (fresh, mono.tree)
        sign = 1
        if op.symmetry != NONE and _tree_key(left) > _tree_key(right):
            left, right = right, left
            if op.symmetry == ANTISYMMETRIC:
                sign = -1
        new = Monomial.__new__(Monomial)
        new.tree = (op.name, left, right)
        new.arity = fresh
        new._key = _tree_key(new.tree)
        new._hash = hash(new._key)
        out._add(new, coeff if sign == 1 else coeff * (-1))
    return out


# ---------------------------------------------------------------------------
# monomial enumeration

def enumerate_monomials(n: int, ops) -> list:
    """All canonical multilinear monomials of arity n, in the total order.

    For k operations all carrying a symmetry the count is (2n-3)!! * k^(n-1).
    """
    if n < 1:
        raise TermError("arity must be positive")
    ops = tuple(ops)
    monos = _enum_rec(frozenset(range(1, n + 1)), ops, {})
    return sorted(monos, key=lambda m: m.key)


def _enum_rec(leafset, ops, cache):
    if leafset in cache:
        return cache[leafset]
    if len(leafset) == 1:
        (leaf,) = leafset
        m = Monomial.__new__(Monomial)
        m.tree = leaf
        m.arity = 1
        m._key = _tree_key(leaf)
        m._hash = hash(m._key)
        out = [m]
        cache[leafset] = out
        return out
    out = []
    members = sorted(leafset)
    anchor = members[0]
    rest = members[1:]
    # unordered partitions: the block containing the smallest leaf is A
    for r in range(len(rest) + 1):
        for extra in itertools.combinations(rest, r):
            a = frozenset((anchor,) + extra)
            b = leafset - a
            if not b:
                continue
            for op in ops:
                for la in _enum_rec(a, ops, cache):
                    for rb in _enum_rec(b, ops, cache):
                        if op.symmetry == NONE:
                            out.append(_make_node(op.name, la, rb))
                            out.append(_make_node(op.name, rb, la))
                        else:
                            if la.key <= rb.key:
                                out.append(_make_node(op.name, la, rb))
                            else:
                                out.append(_make_node(op.name, rb, la))
    cache[leafset] = out
    return out


def _make_node(name, left: Monomial, right: Monomial) -> Monomial:
    m = Monomial.__new__(Monomial)
    m.tree = (name, left.tree, right.tree)
    m.arity = left.arity + right.arity
    m._key = _tree_key(m.tree)
    m._hash = hash(m._key)
    return m


def double_factorial_count(n: int, k: int) -> int:
    """(2n-3)!! * k^(n-1): canonical monomial count for k symmetric-type ops."""
    out = 1
    for v in range(2 * n - 3, 0, -2):
        out *= v
    return out * k ** (n - 1)


# ---------------------------------------------------------------------------
# multilinearization (full polarization, characteristic zero)

def multilinearize(e, ops) -> list:
    """Full polarization family of a (possibly non-multilinear) element.

    The input is given as a list of (raw_tree, coeff) pairs; leaf labels may
    repeat.  Each multihomogeneous component is polarized separately: every
    variable of multiplicity k is spread over k fresh variables in all k!
    ways.  Vanishing of the returned family is equivalent over Q to vanishing
    of the input.
    """
    table = ops_table(ops)
    components = {}
    for tree, coeff in e:
        leaves = []
        _tree_leaves(tree, leaves)
        degree = {}
        for v in leaves:
            degree[v] = degree.get(v, 0) + 1
        key = tuple(sorted(degree.items()))
        components.setdefault(key, []).append((tree, coeff))
    out = []
    for key, part in sorted(components.items()):
        degree = dict(key)
        variables = sorted(degree)
        blocks = {}
        base = 1
        for v in variables:
            blocks[v] = list(range(base, base + degree[v]))
            base += degree[v]
        arity = base - 1
        acc = Element(arity)
        for tree, coeff in part:
            if not isinstance(coeff, RationalFunction):
                coeff = RationalFunction.from_fraction(coeff)
            for assign in _occurrence_assignments(tree, blocks):
                relabeled = _relabel_occurrences(tree, assign)
                sign, mono = normalize_tree(relabeled, lambda n: _lookup(table, n))
                acc._add(mono, coeff if sign == 1 else coeff * (-1))
        out.append(acc)
    return out


def _occurrence_assignments(tree, blocks):
    """Yield per-occurrence label assignments: lists consumed left to right."""
    leaves = []
    _tree_leaves(tree, leaves)
    positions = {}
    for idx, v in enumerate(leaves):
        positions.setdefault(v, []).append(idx)
    per_var = []
    for v, occ in sorted(positions.items()):
        per_var.append((occ, list(itertools.permutations(blocks[v]))))
    for choice in itertools.product(*(perms for _, perms in per_var)):
        assign = {}
        for (occ, _), labels in zip(per_var, choice):
            for pos, lab in zip(occ, labels):
                assign[pos] = lab
        yield assign


def _relabel_occurrences(tree, assign, counter=None):
    if counter is None:
        counter = itertools.count()
    if isinstance(tree, int):
        return assign[next(counter)]
    return (tree[0], _relabel_occurrences(tree[1], assign, counter),
            _relabel_occurrences(tree[2], assign, counter))


# ---------------------------------------------------------------------------
# polarization and depolarization of expressions

def polarize_expr(e: Element, plain_op=None, dot=DOT, bracket=BRACKET) -> Element:
    """Rewrite a one-operation element over {dot, bracket}: ab -> a o b + [a,b]."""
    names = e.op_names()
    if plain_op is None:
        if len(names) > 1:
            raise TermError("polarize_expr expects a single operation, got %s" % sorted(names))
        plain = names.pop() if names else PLAIN.name
    else:
        plain = plain_op.name
    table = {dot.name: dot.symmetry, bracket.name: bracket.symmetry}
    out = Element(e.arity)
    for mono, coeff in e.terms.items():
        for tree, sign in _polarize_tree(mono.tree, plain, dot.name, bracket.name):
            snorm, new = normalize_tree(tree, lambda n: _lookup(table, n))
            out._add(new, coeff * (sign * snorm))
    return out


def _polarize_tree(tree, plain, dot_name, bracket_name):
    if isinstance(tree, int):
        return [(tree, 1)]
    if tree[0] != plain:
        raise TermError("unexpected operation %r in one-operation element" % tree[0])
    out = []
    for lt, ls in _polarize_tree(tree[1], plain, dot_name, bracket_name):
        for rt, rs in _polarize_tree(tree[2], plain, dot_name, bracket_name):
            out.append(((dot_name, lt, rt), ls * rs))
            out.append(((bracket_name, lt, rt), ls * rs))
    return out


def depolarize_expr(e: Element, dot=DOT, bracket=BRACKET, plain_op=PLAIN) -> Element:
    """Expand dot/bracket into the free one-operation space.

    dot(a,b) -> (ab+ba)/2 and bracket(a,b) -> (ab-ba)/2, exactly.
    """
    allowed = {dot.name, bracket.name}
    if not e.op_names() <= allowed:
        raise TermError("element uses operations outside {%s, %s}" % (dot.name, bracket.name))
    table = {plain_op.name: plain_op.symmetry}
    out = Element(e.arity)
    for mono, coeff in e.terms.items():
        for tree, weight in _depolarize_tree(mono.tree, dot.name, bracket.name, plain_op.name):
            snorm, new = normalize_tree(tree, lambda n: _lookup(table, n))
            out._add(new, coeff * weight * (1 if snorm == 1 else -1))
    return out


def _depolarize_tree(tree, dot_name, bracket_name, plain):
    if isinstance(tree, int):
        return [(tree, RF_ONE)]
    is_dot = tree[0] == dot_name
    out = []
    for lt, lw in _depolarize_tree(tree[1], dot_name, bracket_name, plain):
        for rt, rw in _depolarize_tree(tree[2], dot_name, bracket_name, plain):
            w = lw * rw * HALF
            out.append(((plain, lt, rt), w))
            out.append(((plain, rt, lt), w if is_dot else w * (-1)))
    return out
