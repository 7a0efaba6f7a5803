"""Exact arithmetic in Q and in the rational-function field Q(d).

Rationals are stdlib ``fractions.Fraction``.  Elements of Q(d) are kept as a
pair of integer-coefficient polynomials (numerator, denominator) in canonical
form: the pair is coprime over Q[d], the denominator is nonzero with positive
leading coefficient, and the integer contents are reduced as far as possible.
Polynomials are tuples of ints in ascending degree with no trailing zeros, so
``()`` is the zero polynomial and ``(0, 1)`` is d itself.
"""

from __future__ import annotations

import math
from fractions import Fraction

Poly = tuple  # integer coefficients, ascending degree, no trailing zeros

PZERO: Poly = ()
PONE: Poly = (1,)
PD: Poly = (0, 1)  # the formal parameter d


class PoleError(ZeroDivisionError):
    """Evaluation of a rational function at a root of its denominator."""


class DegreeOverflowError(ArithmeticError):
    """Intermediate polynomial degree exceeded the configured ceiling."""


# Default ceiling; computations that legitimately need more can raise it.
_DEGREE_LIMIT = 64


def set_degree_limit(limit: int) -> int:
    """Set the polynomial degree ceiling; returns the previous value."""
    global _DEGREE_LIMIT
    old, _DEGREE_LIMIT = _DEGREE_LIMIT, int(limit)
    return old


def degree_limit() -> int:
    return _DEGREE_LIMIT


# ---------------------------------------------------------------------------
# integer polynomial helpers

def pnormalize(coeffs) -> Poly:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def pdeg(p: Poly) -> int:
    """Degree; -1 for the zero polynomial."""
    return len(p) - 1


def padd(a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, v in enumerate(b):
        out[i] += v
    return pnormalize(out)


def pneg(a: Poly) -> Poly:
    return tuple(-v for v in a)


def psub(a: Poly, b: Poly) -> Poly:
    return padd(a, pneg(b))


def pmul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return PZERO
    if len(a) + len(b) - 2 > _DEGREE_LIMIT:
        raise DegreeOverflowError(
            "polynomial degree %d exceeds ceiling %d"
            % (len(a) + len(b) - 2, _DEGREE_LIMIT))
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return pnormalize(out)


def pconst(c: int) -> Poly:
    return (c,) if c else PZERO


def pscale(a: Poly, c: int) -> Poly:
    if c == 0:
        return PZERO
    return tuple(v * c for v in a)


def pcontent(a: Poly) -> int:
    """gcd of the coefficients, nonnegative; 0 for the zero polynomial."""
    g = 0
    for v in a:
        g = math.gcd(g, v)
        if g == 1:
            return 1
    return g


def pprimitive(a: Poly) -> Poly:
    c = pcontent(a)
    if c <= 1:
        return a
    return tuple(v // c for v in a)


def pdivexact(a: Poly, b: Poly) -> Poly:
    """Exact division a/b in Z[d]; raises if it does not divide."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return PZERO
    rem = list(a)
    db, lb = len(b) - 1, b[-1]
    qn = len(a) - len(b)
    if qn < 0:
        raise ArithmeticError("inexact polynomial division")
    q = [0] * (qn + 1)
    for k in range(qn, -1, -1):
        lead = rem[k + db]
        if lead % lb:
            raise ArithmeticError("inexact polynomial division")
        c = lead // lb
        q[k] = c
        if c:
            for j, v in enumerate(b):
                rem[k + j] -= c * v
    if any(rem):
        raise ArithmeticError("inexact polynomial division")
    return pnormalize(q)


def pprem(a: Poly, b: Poly) -> Poly:
    """Pseudo-remainder of a by b in Z[d] (b nonzero, deg a >= deg b)."""
    da, db = pdeg(a), pdeg(b)
    lb = b[-1]
    r = list(a)
    for k in range(da - db, -1, -1):
        coef = r[k + db]
        if coef:
            for i in range(len(r)):
                r[i] *= lb
            for j in range(db + 1):
                r[k + j] -= coef * b[j]
    return pnormalize(r[:db])


def pgcd(a: Poly, b: Poly) -> Poly:
    """gcd in Z[d]: gcd of contents times primitive gcd, positive leading."""
    if not a:
        return b if not b or b[-1] > 0 else pneg(b)
    if not b:
        return a if a[-1] > 0 else pneg(a)
    ca, cb = pcontent(a), pcontent(b)
    a, b = pprimitive(a), pprimitive(b)
    if pdeg(a) < pdeg(b):
        a, b = b, a
    while b:
        r = pprem(a, b)
        a, b = b, pprimitive(r)
    if a[-1] < 0:
        a = pneg(a)
    cg = math.gcd(ca, cb)
    return pscale(a, cg) if cg > 1 else a


def peval(a: Poly, q: Fraction) -> Fraction:
    acc = Fraction(0)
    for v in reversed(a):
        acc = acc * q + v
    return acc


def pstr(a: Poly, var: str = "d") -> str:
    """Human form, descending powers: ``3*d^2-d+1``."""
    if not a:
        return "0"
    parts = []
    for i in range(len(a) - 1, -1, -1):
        c = a[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if i == 0:
            body = str(mag)
        elif i == 1:
            body = var if mag == 1 else "%d*%s" % (mag, var)
        else:
            body = "%s^%d" % (var, i) if mag == 1 else "%d*%s^%d" % (mag, var, i)
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        text += sign + body
    return text


# ---------------------------------------------------------------------------
# the field Q(d)

class RationalFunction:
    """An element of Q(d) in reduced canonical form.

    Equality, hashing and printing all operate on the canonical pair, so two
    values are equal exactly when their canonical fields coincide.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=PONE, _canonical=False):
        if not _canonical:
            num = _as_poly(num)
            den = _as_poly(den)
            if not den:
                raise ZeroDivisionError("zero denominator in Q(d)")
            num, den = _reduce(num, den)
        self.num = num
        self.den = den

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_fraction(q) -> "RationalFunction":
        q = Fraction(q)
        return RationalFunction(pconst(q.numerator), pconst(q.denominator))

    @staticmethod
    def delta() -> "RationalFunction":
        return RationalFunction(PD, PONE, _canonical=True)

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def is_one(self) -> bool:
        return self.num == PONE and self.den == PONE

    def is_constant(self) -> bool:
        return pdeg(self.num) <= 0 and self.den == PONE

    def as_fraction(self) -> Fraction:
        if pdeg(self.num) > 0 or pdeg(self.den) > 0:
            raise ValueError("not a constant: %s" % self)
        n = self.num[0] if self.num else 0
        return Fraction(n, self.den[0])

    # -- field arithmetic ----------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        num = padd(pmul(self.num, other.den), pmul(other.num, self.den))
        return RationalFunction(num, pmul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(pneg(self.num), self.den, _canonical=True)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(pmul(self.num, other.num),
                                pmul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero in Q(d)")
        return RationalFunction(pmul(self.num, other.den),
                                pmul(self.den, other.num))

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, k: int):
        if k < 0:
            return (RationalFunction(PONE) / self) ** (-k)
        out = RationalFunction(PONE)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return bool(self.num)

    # -- evaluation and printing ---------------------------------------------

    def eval_at(self, q) -> Fraction:
        """Exact value at d = q; raises PoleError at a denominator root."""
        q = Fraction(q)
        dv = peval(self.den, q)
        if dv == 0:
            raise PoleError("denominator %s vanishes at d=%s" % (pstr(self.den), q))
        return peval(self.num, q) / dv

    def __str__(self):
        if self.den == PONE:
            return pstr(self.num)
        return "(%s)/(%s)" % (pstr(self.num), pstr(self.den))

    def __repr__(self):
        return "RationalFunction(%s)" % self


def _as_poly(v) -> Poly:
    if isinstance(v, tuple):
        return pnormalize(v)
    if isinstance(v, int):
        return pconst(v)
    raise TypeError("cannot build a polynomial from %r" % (v,))


def _reduce(num: Poly, den: Poly):
    if not num:
        return PZERO, PONE
    g = pgcd(num, den)
    if pdeg(g) > 0 or (g and g[0] not in (1, -1)):
        num = pdivexact(num, g)
        den = pdivexact(den, g)
    cn, cd = pcontent(num), pcontent(den)
    c = math.gcd(cn, cd)
    if c > 1:
        num = tuple(v // c for v in num)
        den = tuple(v // c for v in den)
    if den[-1] < 0:
        num, den = pneg(num), pneg(den)
    return num, den


def _coerce(v):
    if isinstance(v, RationalFunction):
        return v
    if isinstance(v, int):
        return RationalFunction(pconst(v), PONE, _canonical=True)
    if isinstance(v, Fraction):
        return RationalFunction.from_fraction(v)
    return NotImplemented


RF_ZERO = RationalFunction(PZERO, PONE, _canonical=True)
RF_ONE = RationalFunction(PONE, PONE, _canonical=True)
DELTA = RationalFunction.delta()


def field_arith(a: RationalFunction, b: RationalFunction, operator: str) -> RationalFunction:
    """Exact field operation in Q(d): one of add | sub | mul | div."""
    if operator == "add":
        return a + b
    if operator == "sub":
        return a - b
    if operator == "mul":
        return a * b
    if operator == "div":
        return a / b
    raise ValueError("unknown operator %r" % operator)


def eval_at(a: RationalFunction, q) -> Fraction:
    return a.eval_at(q)


def is_zero(a: RationalFunction) -> bool:
    return a.is_zero()


# ---------------------------------------------------------------------------
# parsing: integer-coefficient arithmetic over d, with / allowed anywhere

def parse_scalar(text: str) -> RationalFunction:
    """Parse the canonical textual form, e.g. ``(3*d^2-1)/(d-1)`` or ``-2/3``."""
    tokens = _tokenize_scalar(text)
    value, pos = _parse_scalar_expr(tokens, 0)
    if pos != len(tokens):
        raise ScalarSyntaxError("trailing input at token %d in %r" % (pos, text))
    return value


class ScalarSyntaxError(ValueError):
    pass


def _tokenize_scalar(text: str):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j])))
            i = j
        elif ch == "d":
            tokens.append(("d", None))
            i += 1
        elif ch in "+-*/^()":
            tokens.append((ch, None))
            i += 1
        else:
            raise ScalarSyntaxError("unexpected character %r at position %d" % (ch, i))
    return tokens


def _parse_scalar_expr(tokens, pos):
    value, pos = _parse_scalar_term(tokens, pos)
    while pos < len(tokens) and tokens[pos][0] in "+-":
        op = tokens[pos][0]
        rhs, pos = _parse_scalar_term(tokens, pos + 1)
        value = value + rhs if op == "+" else value - rhs
    return value, pos


def _parse_scalar_term(tokens, pos):
    value, pos = _parse_scalar_factor(tokens, pos)
    while pos < len(tokens) and tokens[pos][0] in "*/":
        op = tokens[pos][0]
        rhs, pos = _parse_scalar_factor(tokens, pos + 1)
        value = value * rhs if op == "*" else value / rhs
    return value, pos


def _parse_scalar_factor(tokens, pos):
    if pos >= len(tokens):
        raise ScalarSyntaxError("unexpected end of scalar expression")
    kind, payload = tokens[pos]
    if kind == "-":
        value, pos = _parse_scalar_factor(tokens, pos + 1)
        return -value, pos
    if kind == "+":
        return _parse_scalar_factor(tokens, pos + 1)
    if kind == "int":
        value = RationalFunction(pconst(payload))
        pos += 1
    elif kind == "d":
        value = DELTA
        pos += 1
    elif kind == "(":
        value, pos = _parse_scalar_expr(tokens, pos + 1)
        if pos >= len(tokens) or tokens[pos][0] != ")":
            raise ScalarSyntaxError("missing closing parenthesis")
        pos += 1
    else:
        raise ScalarSyntaxError("unexpected token %r" % kind)
    if pos < len(tokens) and tokens[pos][0] == "^":
        if pos + 1 >= len(tokens) or tokens[pos + 1][0] != "int":
            raise ScalarSyntaxError("exponent must be an integer")
        value = value ** tokens[pos + 1][1]
        pos += 2
    return value, pos
