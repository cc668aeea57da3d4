"""Exact Laurent-polynomial arithmetic in the indeterminate v.

Conventions used throughout the package:

- The base ring is Z[v, v^-1], stored sparsely as {exponent: coefficient}.
- u is shorthand for v^2.  Quantities living in Z[u, u^-1] are Laurent
  polynomials supported on even v-exponents.  `subst_v_to_u` doubles every
  exponent, i.e. evaluates p(v) at v = u; `halve_exponents` is its inverse
  on even-supported polynomials.
- Kazhdan-Lusztig-style tables store polynomials "in u-units": the exponent
  of a monomial means a power of u.  Converting such a table entry to the
  ambient v-representation is exactly `subst_v_to_u`.
- `RationalFn` is a reduced quotient of Laurent polynomials over Q, needed
  for intermediate divisions (bar recursions, row reduction over Q(u)).
  Every published value is converted back to Z[v, v^-1] with an exactness
  check.

>>> p = LaurentPoly({3: 1, -1: 1})
>>> p.bar()
LaurentPoly({-3: 1, 1: 1})
>>> LaurentPoly({-4: 1, -6: 1, -8: -1}).pretty()
'u^{-2}+u^{-3}-u^{-4}'
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


class LaurentPoly:
    """Sparse integer Laurent polynomial in v; immutable by convention."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for e, a in coeffs.items():
                if a:
                    c[int(e)] = int(a)
        self._c = c
        self._hash = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def const(cls, n):
        return cls({0: n})

    @classmethod
    def monomial(cls, exp, coeff=1):
        return cls({exp: coeff})

    @classmethod
    def u_power(cls, k, coeff=1):
        """coeff * u^k as a v-Laurent polynomial (u = v^2)."""
        return cls({2 * k: coeff})

    # -- basic queries -----------------------------------------------------

    def is_zero(self):
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def items(self):
        return sorted(self._c.items())

    def support(self):
        return sorted(self._c)

    def coeff_of_v(self, n):
        """The coefficient of v^n (0 when absent)."""
        return self._c.get(n, 0)

    def degree(self):
        """Maximal exponent, or None for the zero polynomial."""
        return max(self._c) if self._c else None

    def valuation(self):
        """Minimal exponent, or None for the zero polynomial."""
        return min(self._c) if self._c else None

    def content(self):
        g = 0
        for a in self._c.values():
            g = gcd(g, abs(a))
        return g

    # -- ring structure ----------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly({0: other})
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        c = dict(self._c)
        for e, a in o._c.items():
            s = c.get(e, 0) + a
            if s:
                c[e] = s
            else:
                c.pop(e, None)
        return LaurentPoly(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -a for e, a in self._c.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        c = {}
        for e1, a1 in self._c.items():
            for e2, a2 in o._c.items():
                e = e1 + e2
                s = c.get(e, 0) + a1 * a2
                if s:
                    c[e] = s
                else:
                    c.pop(e, None)
        return LaurentPoly(c)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers only via RationalFn")
        out = LaurentPoly({0: 1})
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shifted(self, k):
        """v^k * self."""
        return LaurentPoly({e + k: a for e, a in self._c.items()})

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._c == o._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __repr__(self):
        return "LaurentPoly(%r)" % (dict(self.items()),)

    # -- the involutions and substitutions the algebra needs ----------------

    def bar(self):
        """The bar involution v -> v^-1 (exponent negation)."""
        return LaurentPoly({-e: a for e, a in self._c.items()})

    def subst_v_to_u(self):
        """Evaluate p(v) at v = u = v^2, i.e. double all exponents."""
        return LaurentPoly({2 * e: a for e, a in self._c.items()})

    def halve_exponents(self):
        """Inverse of subst_v_to_u; rejects odd-supported polynomials."""
        if any(e % 2 for e in self._c):
            raise ValueError("polynomial has odd v-exponents: %r" % self)
        return LaurentPoly({e // 2: a for e, a in self._c.items()})

    def specialize_uinv_zero(self):
        """The specialization u^-1 -> 0 of an element of Z[u^-1].

        Rejects input outside Z[u^-1] (odd or positive v-exponents).
        """
        for e in self._c:
            if e % 2 or e > 0:
                raise ValueError("not in Z[u^-1]: %r" % self)
        return self._c.get(0, 0)

    # -- display and serialization ------------------------------------------

    def pretty(self):
        """Display in u when the support is even, else in v (descending powers)."""
        if not self._c:
            return "0"
        even = all(e % 2 == 0 for e in self._c)
        var = "u" if even else "v"
        parts = []
        for e in sorted(self._c, reverse=True):
            a = self._c[e]
            p = e // 2 if even else e
            if p == 0:
                term = str(abs(a))
            else:
                pw = var if p == 1 else "%s^{%d}" % (var, p)
                term = pw if abs(a) == 1 else "%d%s" % (abs(a), pw)
            if not parts:
                parts.append(("-" if a < 0 else "") + term)
            else:
                parts.append(("-" if a < 0 else "+") + term)
        return "".join(parts)

    def to_json(self):
        return {"v": {str(e): a for e, a in self.items()}}

    @classmethod
    def from_json(cls, data):
        return cls({int(e): a for e, a in data["v"].items()})

    # -- exact division ------------------------------------------------------

    def try_divide(self, d):
        """Exact quotient self/d in Z[v, v^-1], or None if it does not exist."""
        d = self._coerce(d)
        if d is None or d.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return LaurentPoly()
        num, nval = _dense(self)
        den, dval = _dense(d)
        q, r = _q_divmod([Fraction(a) for a in num], [Fraction(a) for a in den])
        if any(r):
            return None
        if any(c.denominator != 1 for c in q):
            return None
        return LaurentPoly({i + nval - dval: int(c) for i, c in enumerate(q) if c})


ZERO = LaurentPoly()
ONE = LaurentPoly({0: 1})


def _dense(p):
    """(ascending dense coefficient list, valuation) of a nonzero polynomial."""
    lo = p.valuation()
    hi = p.degree()
    out = [0] * (hi - lo + 1)
    for e, a in p._c.items():
        out[e - lo] = a
    return out, lo


def _q_divmod(num, den):
    """Long division of dense Fraction lists (ascending); returns (quot, rem)."""
    num = list(num)
    dd = len(den) - 1
    lead = den[-1]
    if len(num) - 1 < dd:
        return [Fraction(0)], num
    quot = [Fraction(0)] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i] / lead
        quot[i - dd] = c
        if c:
            for j, b in enumerate(den):
                num[i - dd + j] -= c * b
    return quot, num


def _primitive_from_fractions(cs):
    """Scale a Fraction list to a primitive integer list with positive lead."""
    from math import lcm

    m = 1
    for c in cs:
        m = lcm(m, c.denominator)
    vals = [int(c * m) for c in cs]
    g = 0
    for a in vals:
        g = gcd(g, abs(a))
    if g:
        vals = [a // g for a in vals]
    # strip trailing zeros; normalization assumes a nonzero input
    while vals and vals[-1] == 0:
        vals.pop()
    if vals and vals[-1] < 0:
        vals = [-a for a in vals]
    return vals


def poly_gcd(p, q):
    """gcd in Z[v, v^-1] up to units, normalized: valuation 0, positive lead.

    Gauss: gcd = gcd(contents) * gcd(primitive parts); the primitive gcd is
    computed by Euclid over Q and scaled back to a primitive integer poly.
    """
    if p.is_zero() and q.is_zero():
        return ZERO
    if p.is_zero():
        return poly_gcd(q, q)
    if q.is_zero():
        p0, _ = _dense(p)
        vals = _primitive_from_fractions([Fraction(a) for a in p0])
        c = p.content()
        return LaurentPoly({i: a * c for i, a in enumerate(vals)})
    a, _ = _dense(p)
    b, _ = _dense(q)
    fa = [Fraction(x) for x in a]
    fb = [Fraction(x) for x in b]
    while any(fb):
        _, r = _q_divmod(fa, fb)
        while r and not r[-1]:
            r.pop()
        fa, fb = fb, r
    vals = _primitive_from_fractions(fa)
    c = gcd(p.content(), q.content())
    return LaurentPoly({i: x * c for i, x in enumerate(vals)})


class RationalFn:
    """A reduced fraction of integer Laurent polynomials (the field Q(v)).

    Canonical form: gcd(num, den) = 1 including integer content, denominator
    has valuation 0 and positive leading coefficient.  Used only where the
    algebra genuinely divides (bar recursions, row reduction over Q(u)); all
    published coefficients are checked back into Z[v, v^-1].
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=ONE):
        num = _as_poly(num)
        den = _as_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num, self.den = ZERO, ONE
            return
        g = poly_gcd(num, den)
        if g != ONE:
            num = num.try_divide(g)
            den = den.try_divide(g)
        k = den.valuation()
        if k:
            num = num.shifted(-k)
            den = den.shifted(-k)
        if den.coeff_of_v(den.degree()) < 0:
            num, den = -num, -den
        self.num, self.den = num, den

    @staticmethod
    def _coerce(other):
        if isinstance(other, RationalFn):
            return other
        if isinstance(other, (LaurentPoly, int)):
            return RationalFn(_as_poly(other))
        return None

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return bool(self.num)

    def is_laurent(self):
        return self.den == ONE

    def as_laurent(self):
        """Convert back to Z[v, v^-1]; raises when a denominator survives."""
        if self.den != ONE:
            raise ValueError("not integral: (%r)/(%r)" % (self.num, self.den))
        return self.num

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RationalFn(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFn(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RationalFn(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by zero")
        return RationalFn(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def bar(self):
        return RationalFn(self.num.bar(), self.den.bar())

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        if self.den == ONE:
            return "RationalFn(%r)" % self.num
        return "RationalFn(%r, %r)" % (self.num, self.den)


def _as_poly(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly({0: x})
    raise TypeError("cannot coerce %r to LaurentPoly" % (x,))


def as_laurent(x):
    """Coerce an int / LaurentPoly / integral RationalFn to LaurentPoly."""
    if isinstance(x, RationalFn):
        return x.as_laurent()
    return _as_poly(x)
