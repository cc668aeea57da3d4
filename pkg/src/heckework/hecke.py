"""The Hecke algebra in the T-basis, its bar involution, Kazhdan-Lusztig
polynomials and the canonical basis, and structure constants.

Everything is computed in the variable-v convention: the algebra is free
over Z[v, v^-1] with basis (T_w), T_w T_w' = T_{ww'} when lengths add, and
(T_s + 1)(T_s - u) = 0 with u = v^2.  The parameter-u^2 version of any
quantity is obtained by doubling exponents (`LaurentPoly.subst_v_to_u`),
never recomputed.

Kazhdan-Lusztig polynomials are produced by two independent routes that
serve as each other's oracle:

- `KLTable.p`: the classical multiplication recursion with mu-corrections;
- `HeckeAlgebra.c_elt_solved` / `kl_solved`: a triangular bar-invariance
  solve that only uses the expansion of bar(T_w) in the T-basis.

KL polynomials are stored in u-units (monomial exponent = power of u);
`subst_v_to_u` converts them to the ambient v-representation.

Hecke elements are plain dicts {CoxeterElement: LaurentPoly} in T-basis
coordinates; the `HeckeElement` wrapper records which basis a dict is
written in where that matters (CLI export, c-coordinates).
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .laurent import LaurentPoly, ZERO, ONE

# v-units scalars for the T-basis quadratic relation
U_V = LaurentPoly.monomial(2)                    # u = v^2
U_MINUS_1_V = LaurentPoly({2: 1, 0: -1})         # u - 1
UINV_V = LaurentPoly.monomial(-2)                # u^-1
UINV_MINUS_1_V = LaurentPoly({-2: 1, 0: -1})     # u^-1 - 1

# u-units scalar for the KL recursion
U_U = LaurentPoly.monomial(1)


def add_into(acc, w, coeff):
    """acc[w] += coeff, dropping exact zeros."""
    if not coeff:
        return
    s = acc.get(w)
    s = coeff if s is None else s + coeff
    if s:
        acc[w] = s
    else:
        del acc[w]


def add_scaled(acc, coeffs, scale):
    for w, c in coeffs.items():
        add_into(acc, w, c * scale)


@dataclass
class HeckeElement:
    """A finite formal sum of basis elements; basis tag is "T" or "c"."""

    basis: str
    coeffs: dict

    def support(self):
        return sorted(self.coeffs, key=lambda w: w.sort_key())

    def to_json(self):
        return {
            "basis": self.basis,
            "terms": [
                {"w": str(w), "coeff": self.coeffs[w].to_json()}
                for w in self.support()
            ],
        }


class KLTable:
    """Memoized Kazhdan-Lusztig polynomials P_{y,w}, in u-units.

    The memo dict supports concurrent readers; duplicated computation of an
    entry is idempotent (plain dict insert under the GIL).  Entries can be
    persisted through a `CacheStore`, keyed by the system's content hash.
    """

    def __init__(self, system, store=None):
        self.system = system
        self._p = {}
        self._store = store
        self._syshash = system.content_hash()
        if store is not None:
            for key, val in store.load_table("kl", self._syshash).items():
                y_word, w_word = json.loads(key.decode())
                self._p[(tuple(y_word), tuple(w_word))] = LaurentPoly.from_json(
                    json.loads(val.decode())
                )

    def p(self, y, w):
        """P_{y,w} as a polynomial in u (zero unless y <= w)."""
        sys = self.system
        if y == w:
            return ONE
        if not sys.bruhat_leq(y, w):
            return ZERO
        key = (y.word, w.word)
        got = self._p.get(key)
        if got is not None:
            return got
        s = sys.generator(w.word[0])
        v = s * w  # shorter; the normal form starts with a left descent
        sy = s * y
        if len(sy.word) < len(y.word):
            res = self.p(sy, v) + U_U * self.p(y, v)
        else:
            res = U_U * self.p(sy, v) + self.p(y, v)
        lw = len(w.word)
        for z in sys.lower_interval(v):
            lz = len(z.word)
            if lz < len(y.word) or (lw - lz) % 2:
                continue
            sz = s * z
            if len(sz.word) > lz:
                continue
            m = self.mu(z, v)
            if m:
                pyz = self.p(y, z)
                if pyz:
                    res = res - LaurentPoly.monomial((lw - lz) // 2, m) * pyz
        deg = res.degree()
        if deg is not None and 2 * deg > lw - len(y.word) - 1:
            raise AssertionError(
                "KL degree bound violated at (%s, %s): %r" % (y, w, res)
            )
        self._p[key] = res
        if self._store is not None:
            self._store.append(
                "kl",
                self._syshash,
                json.dumps([list(y.word), list(w.word)]).encode(),
                json.dumps(res.to_json(), sort_keys=True).encode(),
            )
        return res

    def mu(self, y, w):
        """The coefficient of u^((l(w)-l(y)-1)/2) in P_{y,w}."""
        d = len(w.word) - len(y.word)
        if d <= 0 or d % 2 == 0:
            return 0
        return self.p(y, w).coeff_of_v((d - 1) // 2)


class HeckeAlgebra:
    """Operations on T-basis coefficient dicts over one Coxeter system."""

    def __init__(self, system, store=None):
        self.system = system
        self.kl = KLTable(system, store=store)
        self._bar_t = {}
        self._c_elt = {}
        self._c_elt_u = {}
        self._h_struct = {}

    def as_element(self, coeffs, basis="T"):
        """Wrap a coefficient dict as a tagged element (for export)."""
        return HeckeElement(basis, dict(coeffs))

    # -- T-basis multiplication ------------------------------------------------

    def t_gen_mult(self, i, coeffs):
        """Left multiplication by T_{s_i}."""
        sys = self.system
        s = sys.generator(i)
        out = {}
        for w, c in coeffs.items():
            sw = s * w
            if len(sw.word) > len(w.word):
                add_into(out, sw, c)
            else:
                add_into(out, w, c * U_MINUS_1_V)
                add_into(out, sw, c * U_V)
        return out

    def t_word_mult(self, word, coeffs):
        """Left multiplication by T_{s_{i1}} ... T_{s_{ik}} for word (i1..ik)."""
        for i in reversed(word):
            coeffs = self.t_gen_mult(i, coeffs)
        return coeffs

    def t_mult(self, x, h):
        """Left multiplication by T_x (x reduced via its normal form)."""
        return self.t_word_mult(x.word, h)

    def mult(self, h1, h2):
        """Product of two T-basis coefficient dicts."""
        out = {}
        for w, c in h1.items():
            part = self.t_word_mult(w.word, h2)
            add_scaled(out, part, c)
        return out

    def t_inv_gen_mult(self, i, coeffs):
        """Left multiplication by T_{s_i}^{-1} = u^-1 T_{s_i} + (u^-1 - 1)."""
        out = {}
        add_scaled(out, self.t_gen_mult(i, coeffs), UINV_V)
        add_scaled(out, coeffs, UINV_MINUS_1_V)
        return out

    # -- bar involution -----------------------------------------------------------

    def bar_t(self, w):
        """bar(T_w) = (T_{w^-1})^{-1} as a T-basis dict."""
        got = self._bar_t.get(w)
        if got is None:
            if not w.word:
                got = {w: ONE}
            else:
                i = w.word[0]
                rest = self.bar_t(self.system.generator(i) * w)
                got = self.t_inv_gen_mult(i, rest)
            self._bar_t[w] = got
        return got

    def bar_h(self, coeffs):
        """The semilinear bar involution on a T-basis dict."""
        out = {}
        for w, c in coeffs.items():
            add_scaled(out, self.bar_t(w), c.bar())
        return out

    # -- canonical basis ------------------------------------------------------------

    def c_elt(self, w):
        """c_w = v^{-l(w)} sum_{y<=w} P_{y,w}(u) T_y, as a T-basis dict."""
        got = self._c_elt.get(w)
        if got is None:
            lw = len(w.word)
            got = {}
            for y in self.system.lower_interval(w):
                p = self.kl.p(y, w)
                if p:
                    got[y] = p.subst_v_to_u().shifted(-lw)
            self._c_elt[w] = got
        return got

    def c_elt_u(self, w):
        """The parameter-u^2 canonical basis element (exponents doubled)."""
        got = self._c_elt_u.get(w)
        if got is None:
            got = {y: c.subst_v_to_u() for y, c in self.c_elt(w).items()}
            self._c_elt_u[w] = got
        return got

    def to_c(self, coeffs):
        """Rewrite a T-basis dict in c-coordinates (triangular strip-off)."""
        rem = dict(coeffs)
        out = {}
        while rem:
            z = max(rem, key=lambda x: x.sort_key())
            alpha = rem[z].shifted(len(z.word))
            out[z] = alpha
            for y, c in self.c_elt(z).items():
                add_into(rem, y, -(alpha * c))
        return out

    def h_struct(self, x, y):
        """All structure constants of c_x c_y: a dict z -> coefficient."""
        key = (x, y)
        got = self._h_struct.get(key)
        if got is None:
            got = self.to_c(self.mult(self.c_elt(x), self.c_elt(y)))
            self._h_struct[key] = got
        return got

    def triple_H(self, x, w, wp):
        """Coefficient of c_{w'} in c_x c_w c_{(x*)^{-1}}.

        Computed both by the direct triple product and by summing products
        of pairwise structure constants; the two must agree.
        """
        xs = self.system.star_elt(x).inverse()
        direct = self.to_c(
            self.mult(self.mult(self.c_elt(x), self.c_elt(w)), self.c_elt(xs))
        ).get(wp, ZERO)
        total = ZERO
        left = self.h_struct(x, w)
        for y, hxy in left.items():
            hyw = self.h_struct(y, xs).get(wp)
            if hyw:
                total = total + hxy * hyw
        if direct != total:
            raise AssertionError(
                "triple product mismatch at (%s, %s, %s)" % (x, w, wp)
            )
        return direct

    # -- independent bar-invariance solver ----------------------------------------

    def c_elt_solved(self, w):
        """The canonical basis element by a triangular bar-invariance solve.

        Independent of the mu-recursion: only uses bar(T_y).  For x < w the
        coefficient pi_x must satisfy f_x - bar(f_x) = v^{l(x)} * (column sum)
        with f_x strictly negatively supported, which pins it uniquely; the
        consistency of that equation is asserted, so success certifies both
        existence and uniqueness.
        """
        order = sorted(
            self.system.lower_interval(w), key=lambda x: x.sort_key(), reverse=True
        )
        lw = len(w.word)
        pi = {w: LaurentPoly.monomial(-lw)}
        for x in order:
            if x == w:
                bt = self.bar_t(x)
                if bt.get(x) != LaurentPoly.monomial(-2 * lw):
                    raise AssertionError("bar(T_w) has unexpected leading term")
                continue
            lx = len(x.word)
            if self.bar_t(x).get(x) != LaurentPoly.monomial(-2 * lx):
                raise AssertionError("bar(T_x) has unexpected leading term")
            g = ZERO
            for y, piy in pi.items():
                r = self.bar_t(y).get(x)
                if r:
                    g = g + piy.bar() * r
            big_g = g.shifted(lx)
            f = LaurentPoly({e: c for e, c in big_g.items() if e < 0})
            if f - f.bar() != big_g:
                raise AssertionError(
                    "bar-invariance solve inconsistent at %s below %s" % (x, w)
                )
            if f:
                pi[x] = f.shifted(-lx)
        return pi

    def kl_solved(self, y, w):
        """P_{y,w} read off from the bar-invariance solver, in u-units."""
        if not self.system.bruhat_leq(y, w):
            return ZERO
        coeff = self.c_elt_solved(w).get(y, ZERO)
        return coeff.shifted(len(w.word)).halve_exponents()
