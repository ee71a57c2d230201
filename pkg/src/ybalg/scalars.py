"""Exact coefficient field: rational functions in one indeterminate q.

A Poly is a Laurent polynomial in q with integer coefficients, stored as a
mapping exponent -> coefficient (exponents may be negative, coefficients are
never zero).  A Scalar is a quotient num/den of Polys in canonical form:

  * den is an ordinary polynomial with nonzero constant term,
  * num and den are coprime as polynomials (after clearing the Laurent shift
    of num),
  * the integer gcd of all coefficients across num and den is 1,
  * den's leading coefficient is positive,
  * zero is always 0/1.

Equality of Scalars is structural, which makes every identity check in the
rest of the library an exact test.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


class ZeroDenominator(ZeroDivisionError):
    pass


class DivisionByZero(ZeroDivisionError):
    pass


class ScalarParseError(ValueError):
    pass


class Poly:
    """Laurent polynomial in q over the integers."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs=None):
        if coeffs is None:
            coeffs = {}
        self.coeffs = {e: c for e, c in coeffs.items() if c != 0}
        self._hash = None

    @staticmethod
    def zero():
        return Poly()

    @staticmethod
    def one():
        return Poly({0: 1})

    @staticmethod
    def const(n):
        return Poly({0: n})

    @staticmethod
    def q(exp=1, coeff=1):
        return Poly({exp: coeff})

    def is_zero(self):
        return not self.coeffs

    def min_exp(self):
        return min(self.coeffs)

    def max_exp(self):
        return max(self.coeffs)

    def leading_coeff(self):
        return self.coeffs[self.max_exp()]

    def content(self):
        g = 0
        for c in self.coeffs.values():
            g = gcd(g, abs(c))
        return g

    def shift(self, k):
        """Multiply by q^k."""
        if k == 0:
            return self
        return Poly({e + k: c for e, c in self.coeffs.items()})

    def __add__(self, other):
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return Poly(out)

    def __neg__(self):
        return Poly({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return Poly(out)

    def scale(self, n):
        if n == 0:
            return Poly()
        return Poly({e: c * n for e, c in self.coeffs.items()})

    def divexact_int(self, n):
        return Poly({e: c // n for e, c in self.coeffs.items()})

    def __eq__(self, other):
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(sorted(self.coeffs.items())))
        return self._hash

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs, reverse=True):
            c = self.coeffs[e]
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if e == 0:
                body = str(a)
            else:
                qpart = "q" if e == 1 else "q^%d" % e
                body = qpart if a == 1 else "%d%s" % (a, qpart)
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += sign + body
        return out

    __repr__ = __str__


def _to_dense(p):
    """Ordinary poly (min exp 0 assumed) -> coefficient list, low to high."""
    if p.is_zero():
        return []
    n = p.max_exp()
    return [p.coeffs.get(i, 0) for i in range(n + 1)]


def _from_dense(cs):
    return Poly({i: c for i, c in enumerate(cs) if c != 0})


def _dense_gcd(a, b):
    """Gcd of two ordinary integer polynomials, primitive over Z."""
    a = [Fraction(c) for c in a]
    b = [Fraction(c) for c in b]
    while b and not any(b):
        b = []
    while b:
        # a mod b
        a = a[:]
        while len(a) >= len(b) and any(a):
            if a[-1] == 0:
                a.pop()
                continue
            f = a[-1] / b[-1]
            shift = len(a) - len(b)
            for i, bc in enumerate(b):
                a[shift + i] -= f * bc
            while a and a[-1] == 0:
                a.pop()
        a, b = b, a
        while b and b[-1] == 0:
            b.pop()
    # clear denominators, take primitive part
    if not a:
        return []
    from math import lcm

    den = 1
    for c in a:
        den = lcm(den, c.denominator)
    ints = [int(c * den) for c in a]
    g = 0
    for c in ints:
        g = gcd(g, abs(c))
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return ints


def _dense_divexact(a, b):
    """Exact division of ordinary integer polys (a = b * result)."""
    a = [Fraction(c) for c in a]
    out = [Fraction(0)] * (len(a) - len(b) + 1)
    while len(a) >= len(b) and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) < len(b):
            break
        f = a[-1] / b[-1]
        shift = len(a) - len(b)
        out[shift] = f
        for i, bc in enumerate(b):
            a[shift + i] -= f * bc
    return [int(c) for c in out]


class Scalar:
    """Canonical rational function num/den in q."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den, _normalized=False):
        if _normalized:
            self.num, self.den = num, den
            self._hash = None
            return
        if den.is_zero():
            raise ZeroDenominator("denominator is the zero polynomial")
        if num.is_zero():
            self.num, self.den = Poly.zero(), Poly.one()
            self._hash = None
            return
        # clear Laurent shifts: den becomes ordinary with nonzero constant
        mn, md = num.min_exp(), den.min_exp()
        n0 = num.shift(-mn)
        d0 = den.shift(-md)
        g = _dense_gcd(_to_dense(n0), _to_dense(d0))
        if len(g) > 1 or (g and g[0] != 1):
            n0 = _from_dense(_dense_divexact(_to_dense(n0), g))
            d0 = _from_dense(_dense_divexact(_to_dense(d0), g))
        cg = gcd(n0.content(), d0.content())
        if cg > 1:
            n0 = n0.divexact_int(cg)
            d0 = d0.divexact_int(cg)
        if d0.leading_coeff() < 0:
            n0, d0 = -n0, -d0
        self.num = n0.shift(mn - md)
        self.den = d0
        self._hash = None

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero():
        return _ZERO

    @staticmethod
    def one():
        return _ONE

    @staticmethod
    def from_int(n):
        return Scalar(Poly.const(n), Poly.one())

    @staticmethod
    def q_power(exp, coeff=1):
        return Scalar(Poly.q(exp, coeff), Poly.one())

    # -- predicates --------------------------------------------------------

    def is_zero(self):
        return self.num.is_zero()

    def is_one(self):
        return self.num == Poly.one() and self.den == Poly.one()

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        return Scalar(self.num * other.den + other.num * self.den,
                      self.den * other.den)

    def __sub__(self, other):
        return Scalar(self.num * other.den - other.num * self.den,
                      self.den * other.den)

    def __neg__(self):
        return Scalar(-self.num, self.den)

    def __mul__(self, other):
        return Scalar(self.num * other.num, self.den * other.den)

    def invert(self):
        if self.is_zero():
            raise DivisionByZero("cannot invert zero")
        return Scalar(self.den, self.num)

    def __truediv__(self, other):
        return self * other.invert()

    def __eq__(self, other):
        return (isinstance(other, Scalar)
                and self.num == other.num and self.den == other.den)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __str__(self):
        if self.den == Poly.one():
            return str(self.num)
        n = str(self.num)
        if len(self.num.coeffs) > 1:
            n = "(%s)" % n
        d = str(self.den)
        if len(self.den.coeffs) > 1:
            d = "(%s)" % d
        return "%s/%s" % (n, d)

    __repr__ = __str__


_ZERO = Scalar(Poly.zero(), Poly.one())
_ONE = Scalar(Poly.one(), Poly.one())


def scalar_normalize(num, den):
    """Canonical representative of num/den; raises ZeroDenominator."""
    return Scalar(num, den)


def scalar_invert(s):
    return s.invert()


# -- parsing ---------------------------------------------------------------

def _tokenize(text):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "+-*/^()":
            tokens.append(ch)
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(int(text[i:j]))
            i = j
        elif ch == "q":
            tokens.append("q")
            i += 1
        else:
            raise ScalarParseError("unexpected character %r" % ch)
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.toks = tokens
        self.pos = 0

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def next(self):
        t = self.peek()
        self.pos += 1
        return t

    def parse_rational(self):
        num = self.parse_expr()
        if self.peek() == "/":
            self.next()
            den = self.parse_expr()
        else:
            den = Poly.one()
        if self.peek() is not None:
            raise ScalarParseError("trailing input at token %d" % self.pos)
        return num, den

    def parse_expr(self):
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.next() == "-" else 1
        acc = self.parse_term()
        if sign < 0:
            acc = -acc
        while self.peek() in ("+", "-"):
            op = self.next()
            t = self.parse_term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def parse_term(self):
        acc = self.parse_factor()
        while True:
            nxt = self.peek()
            if nxt == "*":
                self.next()
                acc = acc * self.parse_factor()
            elif nxt == "q" or nxt == "(":
                # juxtaposition, e.g. "2q" or "3(q+1)"
                acc = acc * self.parse_factor()
            else:
                return acc

    def parse_factor(self):
        base = self.parse_atom()
        if self.peek() == "^":
            self.next()
            sign = 1
            if self.peek() == "-":
                self.next()
                sign = -1
            e = self.next()
            if not isinstance(e, int):
                raise ScalarParseError("exponent must be an integer")
            return _poly_pow(base, sign * e)
        return base

    def parse_atom(self):
        t = self.next()
        if isinstance(t, int):
            return Poly.const(t)
        if t == "q":
            return Poly.q()
        if t == "(":
            inner = self.parse_expr()
            if self.next() != ")":
                raise ScalarParseError("unbalanced parenthesis")
            return inner
        raise ScalarParseError("unexpected token %r" % (t,))


def _poly_pow(p, e):
    if e >= 0:
        out = Poly.one()
        for _ in range(e):
            out = out * p
        return out
    # negative powers only for monomials
    if len(p.coeffs) != 1:
        raise ScalarParseError("negative power of a non-monomial")
    (exp, c), = p.coeffs.items()
    if abs(c) != 1:
        raise ScalarParseError("negative power of a non-unit monomial")
    return Poly({exp * e: c if e % 2 else abs(c)})


def parse_scalar(text):
    """Parse the coefficient string grammar into a canonical Scalar."""
    tokens = _tokenize(text)
    if not tokens:
        raise ScalarParseError("empty scalar string")
    num, den = _Parser(tokens).parse_rational()
    return Scalar(num, den)
