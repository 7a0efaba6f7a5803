"""Finite-dimensional algebras by structure constants, and identity checks.

An algebra stores, per operation, a sparse table c[i][j] -> {k: coefficient}
meaning op(e_i, e_j) = sum_k c e_k, with indices 0-based internally and
printed 1-based.  Declared products are completed by the operation's symmetry;
everything undeclared is zero.  Multilinear identities hold on the algebra iff
they vanish on all basis tuples, which is what eval_identity checks, returning
the first failing tuple as a witness.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .terms import BRACKET, DOT, Element, OpSymbol, ops_table

_F = Fraction


class AlgebraError(ValueError):
    pass


class Algebra:
    def __init__(self, dim, ops, products, params=None, name=""):
        """products: iterable of (op_name, i, j, {k: Fraction}) with 1-based indices."""
        self.dim = int(dim)
        self.ops = tuple(ops)
        self.params = {k: _F(v) for k, v in (params or {}).items()}
        self.name = name
        self._symmetry = ops_table(self.ops)
        self.tables = {op.name: {} for op in self.ops}
        for op_name, i, j, comps in products:
            self._declare(op_name, i, j, comps)

    def _declare(self, op_name, i, j, comps):
        if op_name not in self.tables:
            raise AlgebraError("undeclared operation %r" % op_name)
        if not (1 <= i <= self.dim and 1 <= j <= self.dim):
            raise AlgebraError("basis index out of range in %s e%d e%d" % (op_name, i, j))
        for k in comps:
            if not (1 <= k <= self.dim):
                raise AlgebraError("basis index e%d out of range" % k)
        value = {k - 1: _F(c) for k, c in comps.items() if c}
        table = self.tables[op_name]
        sym = self._symmetry[op_name]
        self._set(table, op_name, i - 1, j - 1, value)
        if sym == "symmetric" and i != j:
            self._set(table, op_name, j - 1, i - 1, value)
        elif sym == "antisymmetric":
            if i == j:
                if value:
                    raise AlgebraError(
                        "%s(e%d,e%d) must vanish for an antisymmetric operation"
                        % (op_name, i, i))
                return
            self._set(table, op_name, j - 1, i - 1, {k: -c for k, c in value.items()})

    @staticmethod
    def _set(table, op_name, i, j, value):
        old = table.get((i, j))
        if old is not None and old != value:
            raise AlgebraError("conflicting declarations for %s(e%d,e%d)"
                               % (op_name, i + 1, j + 1))
        if value:
            table[(i, j)] = value

    # -- evaluation -------------------------------------------------------

    def apply(self, op_name, u, v):
        """Bilinear product of sparse vectors {index: Fraction}."""
        table = self.tables.get(op_name)
        if table is None:
            return {}
        out = {}
        for i, a in u.items():
            for j, b in v.items():
                comps = table.get((i, j))
                if not comps:
                    continue
                ab = a * b
                for k, c in comps.items():
                    val = out.get(k, _F(0)) + ab * c
                    if val:
                        out[k] = val
                    else:
                        out.pop(k, None)
        return out

    def _eval_tree(self, tree, assignment):
        if isinstance(tree, int):
            return assignment[tree]
        return self.apply(tree[0], self._eval_tree(tree[1], assignment),
                          self._eval_tree(tree[2], assignment))

    def eval_element(self, e: Element, assignment, delta=None):
        """Value of a multilinear element on vectors x_i -> assignment[i]."""
        coeffs = self._coefficients(e, delta)
        out = {}
        for mono, c in zip(e.terms.keys(), coeffs):
            val = self._eval_tree(mono.tree, assignment)
            for k, v in val.items():
                acc = out.get(k, _F(0)) + c * v
                if acc:
                    out[k] = acc
                else:
                    out.pop(k, None)
        return out

    def _coefficients(self, e: Element, delta):
        q = delta if delta is not None else self.params.get("delta")
        out = []
        for coeff in e.terms.values():
            if coeff.is_constant():
                out.append(coeff.as_fraction())
            elif q is None:
                raise AlgebraError(
                    "identity coefficients involve d but no delta binding is "
                    "available (algebra %r)" % (self.name or "?"))
            else:
                out.append(coeff.eval_at(q))
        return out

    def eval_identity(self, e: Element, delta=None, label=""):
        """CheckEntry for one identity: vanishing on all basis tuples."""
        missing = e.op_names() - set(self.tables)
        if missing:
            raise AlgebraError("algebra lacks operations %s" % sorted(missing))
        coeffs = self._coefficients(e, delta)
        monos = list(e.terms.keys())
        for tup in itertools.product(range(self.dim), repeat=e.arity):
            assignment = {i + 1: {tup[i]: _F(1)} for i in range(e.arity)}
            out = {}
            for mono, c in zip(monos, coeffs):
                for k, v in self._eval_tree(mono.tree, assignment).items():
                    acc = out.get(k, _F(0)) + c * v
                    if acc:
                        out[k] = acc
                    else:
                        out.pop(k, None)
            if out:
                return CheckEntry(label or str(e), False, tup, out)
        return CheckEntry(label or str(e), True)

    def check_variety(self, v, delta=None):
        """CheckReport over all identities of the variety."""
        q = delta if delta is not None else v.delta
        entries = []
        for idx, ident in enumerate(v.identities):
            label = "%s[%d]" % (v.name or "identity", idx + 1)
            entries.append(self.eval_identity(ident, delta=q, label=label))
        return CheckReport(self.name or "algebra", v.name or "variety", entries)

    # -- constructions ------------------------------------------------------

    def bracket_is_perfect(self) -> bool:
        """Span of all bracket values equals the whole algebra."""
        span = []
        for value in self.tables.get("bracket", {}).values():
            vec = [value.get(k, _F(0)) for k in range(self.dim)]
            span.append(vec)
        return _rank_dense(span) == self.dim

    def ideal_closure(self, vectors):
        """Smallest subspace containing the vectors and all products with
        basis elements, as a list of spanning dense rows."""
        span = [list(v) for v in vectors]
        changed = True
        while changed:
            changed = False
            current = [dict(enumerate(v)) for v in span]
            for vec in current:
                vec = {k: c for k, c in vec.items() if c}
                for op in self.tables:
                    for i in range(self.dim):
                        basis_vec = {i: _F(1)}
                        for prod in (self.apply(op, basis_vec, vec),
                                     self.apply(op, vec, basis_vec)):
                            dense = [prod.get(k, _F(0)) for k in range(self.dim)]
                            if _extends_span(span, dense):
                                span.append(dense)
                                changed = True
        return span

    def proper_ideal_from_basis_subsets(self):
        """A proper nonzero ideal generated by a basis-vector subset, if any.

        Exhaustive over the 2^dim - 2 candidate subsets; intended for the
        tiny dimensions of the catalog's simplicity analysis.
        """
        for size in range(1, self.dim):
            for subset in itertools.combinations(range(self.dim), size):
                seed = []
                for i in subset:
                    vec = [_F(0)] * self.dim
                    vec[i] = _F(1)
                    seed.append(vec)
                closure = self.ideal_closure(seed)
                if _rank_dense(closure) < self.dim:
                    return subset
        return None

    def simplicity_check(self):
        """(perfect bracket, no proper basis-subset ideal) for small algebras."""
        return self.bracket_is_perfect(), self.proper_ideal_from_basis_subsets() is None

    def __repr__(self):
        return "Algebra(%s, dim=%d)" % (self.name or "?", self.dim)


def _extends_span(span, dense):
    rows = [list(r) for r in span] + [list(dense)]
    return _rank_dense(rows) > _rank_dense([list(r) for r in span])


def _rank_dense(rows):
    rows = [list(r) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((r for r in rows if r[col]), None)
        if piv is None:
            continue
        rows.remove(piv)
        rank += 1
        for r in rows:
            if r[col]:
                f = r[col] / piv[col]
                for c in range(ncols):
                    r[c] -= f * piv[c]
    return rank


class CheckEntry:
    __slots__ = ("label", "satisfied", "witness", "value")

    def __init__(self, label, satisfied, witness=None, value=None):
        self.label = label
        self.satisfied = satisfied
        self.witness = witness
        self.value = value

    def witness_str(self):
        if self.witness is None:
            return ""
        args = ",".join("e%d" % (i + 1) for i in self.witness)
        val = " + ".join(_coeff_basis(c, k) for k, c in sorted(self.value.items()))
        return "(%s) -> %s" % (args, val)

    def __str__(self):
        if self.satisfied:
            return "%s: satisfied" % self.label
        return "%s: FAILS at %s" % (self.label, self.witness_str())


def _coeff_basis(c, k):
    if c == 1:
        return "e%d" % (k + 1)
    return "%s*e%d" % (c, k + 1)


class CheckReport:
    def __init__(self, algebra_name, variety_name, entries):
        self.algebra_name = algebra_name
        self.variety_name = variety_name
        self.entries = entries

    @property
    def all_satisfied(self):
        return all(entry.satisfied for entry in self.entries)

    def __str__(self):
        head = "check %s against %s: %s" % (
            self.algebra_name, self.variety_name,
            "all satisfied" if self.all_satisfied else "violations found")
        return "\n".join([head] + ["  " + str(e) for e in self.entries])


# ---------------------------------------------------------------------------
# tensor product and polarization splitting

def tensor(a: Algebra, b: Algebra) -> Algebra:
    """Poisson-type tensor product on the dot/bracket signature.

    dot = dot (x) dot and bracket = bracket (x) dot + dot (x) bracket on
    basis pairs; the result is d_a * d_b dimensional.
    """
    for alg in (a, b):
        names = {op.name: op.symmetry for op in alg.ops}
        if names.get("dot") != "symmetric" or names.get("bracket") != "antisymmetric":
            raise AlgebraError("tensor requires the {dot, bracket} signature")

    def pair(i, j):
        return i * b.dim + j

    dot_table = {}
    br_table = {}
    for (i1, i2), da in a.tables["dot"].items():
        for (j1, j2), db in b.tables["dot"].items():
            comps = {}
            for k, ca in da.items():
                for l, cb in db.items():
                    comps[pair(k, l)] = comps.get(pair(k, l), _F(0)) + ca * cb
            _merge(dot_table, (pair(i1, j1), pair(i2, j2)), comps)
    for left_name, right_name in (("bracket", "dot"), ("dot", "bracket")):
        for (i1, i2), ta in a.tables[left_name].items():
            for (j1, j2), tb in b.tables[right_name].items():
                comps = {}
                for k, ca in ta.items():
                    for l, cb in tb.items():
                        comps[pair(k, l)] = comps.get(pair(k, l), _F(0)) + ca * cb
                _merge(br_table, (pair(i1, j1), pair(i2, j2)), comps)
    products = []
    for (i, j), comps in dot_table.items():
        products.append(("dot", i + 1, j + 1, {k + 1: c for k, c in comps.items()}))
    for (i, j), comps in br_table.items():
        products.append(("bracket", i + 1, j + 1, {k + 1: c for k, c in comps.items()}))
    params = {k: v for k, v in a.params.items() if b.params.get(k) == v}
    name = "%s(x)%s" % (a.name, b.name) if a.name and b.name else ""
    return Algebra(a.dim * b.dim, (DOT, BRACKET), products, params=params, name=name)


def _merge(target, key, comps):
    cur = target.setdefault(key, {})
    for k, c in comps.items():
        new = cur.get(k, _F(0)) + c
        if new:
            cur[k] = new
        else:
            cur.pop(k, None)
    if not cur:
        target.pop(key, None)


def split_polarization(a: Algebra) -> Algebra:
    """One-operation algebra -> (dot, bracket) with c = (sym, antisym)/2 parts."""
    if len(a.ops) != 1:
        raise AlgebraError("split_polarization expects a single-operation algebra")
    (op,) = a.ops
    table = a.tables[op.name]
    products = []
    for i in range(a.dim):
        for j in range(i, a.dim):
            fwd = table.get((i, j), {})
            bwd = table.get((j, i), {})
            keys = set(fwd) | set(bwd)
            dot_comps = {k + 1: (fwd.get(k, _F(0)) + bwd.get(k, _F(0))) / 2 for k in keys}
            br_comps = {k + 1: (fwd.get(k, _F(0)) - bwd.get(k, _F(0))) / 2 for k in keys}
            dot_comps = {k: c for k, c in dot_comps.items() if c}
            br_comps = {k: c for k, c in br_comps.items() if c}
            if dot_comps:
                products.append(("dot", i + 1, j + 1, dot_comps))
            if br_comps and i != j:
                products.append(("bracket", i + 1, j + 1, br_comps))
    return Algebra(a.dim, (DOT, BRACKET), products, params=a.params,
                   name=(a.name + "-polarized") if a.name else "")


def merge_polarization(a: Algebra, op_name: str = "m") -> Algebra:
    """(dot, bracket) algebra -> single operation x*y = dot(x,y)+bracket(x,y)."""
    names = {op.name for op in a.ops}
    if not {"dot", "bracket"} <= names:
        raise AlgebraError("merge_polarization expects the {dot, bracket} signature")
    merged = {}
    for key, comps in a.tables["dot"].items():
        _merge(merged, key, comps)
    for key, comps in a.tables["bracket"].items():
        _merge(merged, key, comps)
    products = [(op_name, i + 1, j + 1, {k + 1: c for k, c in comps.items()})
                for (i, j), comps in merged.items()]
    return Algebra(a.dim, (OpSymbol(op_name, "none"),), products, params=a.params,
                   name=(a.name + "-depolarized") if a.name else "")


# ---------------------------------------------------------------------------
# file format

_DEFAULT_OP_SYMMETRY = {"dot": "symmetric", "bracket": "antisymmetric"}


def parse_algebra_text(text: str, name: str = "") -> Algebra:
    dim = None
    params = {}
    op_decls = {}
    product_lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "dim":
            dim = int(parts[1])
        elif parts[0] == "param":
            body = line[len("param"):].strip()
            pname, value = (s.strip() for s in body.split("="))
            params[pname] = _F(value)
        elif parts[0] == "op":
            op_decls[parts[1]] = parts[2]
        else:
            product_lines.append((lineno, line))
    if dim is None:
        raise AlgebraError("algebra file lacks a 'dim' line")
    products = []
    op_names = dict(op_decls)
    for lineno, line in product_lines:
        try:
            lhs, rhs = line.split("=", 1)
            tokens = lhs.split()
            op_name, ei, ej = tokens
            i = int(ei.lstrip("e"))
            j = int(ej.lstrip("e"))
            comps = _parse_lincomb(rhs)
        except (ValueError, IndexError) as exc:
            raise AlgebraError("line %d: cannot parse product %r" % (lineno, line)) from exc
        if op_name not in op_names:
            op_names[op_name] = _DEFAULT_OP_SYMMETRY.get(op_name, "none")
        products.append((op_name, i, j, comps))
    ops = tuple(OpSymbol(n, s) for n, s in sorted(op_names.items()))
    if not ops:
        ops = (DOT, BRACKET)
    return Algebra(dim, ops, products, params=params, name=name)


def _parse_lincomb(text: str):
    text = text.replace("-", "+-").replace("*", " ")
    comps = {}
    for chunk in text.split("+"):
        chunk = chunk.strip()
        if not chunk or chunk == "0":
            continue
        if "e" not in chunk:
            raise ValueError("term %r has no basis vector" % chunk)
        coeff_part, idx_part = chunk.rsplit("e", 1)
        coeff_part = coeff_part.strip()
        if coeff_part in ("", "-"):
            coeff = _F(-1) if coeff_part == "-" else _F(1)
        else:
            coeff = _F(coeff_part.replace(" ", ""))
        k = int(idx_part)
        comps[k] = comps.get(k, _F(0)) + coeff
    return {k: c for k, c in comps.items() if c}


def format_algebra(a: Algebra) -> str:
    lines = []
    if a.name:
        lines.append("# %s" % a.name)
    lines.append("dim %d" % a.dim)
    for pname, value in sorted(a.params.items()):
        lines.append("param %s = %s" % (pname, value))
    for op in a.ops:
        lines.append("op %s %s" % (op.name, op.symmetry))
    for op in a.ops:
        table = a.tables[op.name]
        seen = set()
        for (i, j) in sorted(table):
            if (i, j) in seen:
                continue
            sym = a._symmetry[op.name]
            if sym in ("symmetric", "antisymmetric") and i > j:
                continue  # mirrors are implied
            seen.add((i, j))
            rhs = " + ".join(_coeff_basis(c, k) for k, c in sorted(table[(i, j)].items()))
            lines.append("%s e%d e%d = %s" % (op.name, i + 1, j + 1, rhs))
    return "\n".join(lines) + "\n"


def load_algebra(path) -> Algebra:
    import os.path
    with open(path, "r", encoding="utf-8") as fh:
        return parse_algebra_text(fh.read(),
                                  name=os.path.splitext(os.path.basename(path))[0])
