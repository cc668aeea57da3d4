"""The Hecke module spanned by twisted involutions, its bar operator and
upper canonical basis, the leading-coefficient constants, and the induced
module over the asymptotic ring.

The module M is free over Z[u, u^-1] on (a_w), w in the twisted involution
set; the generator action is the four-case rule

    T_s a_w = u a_w + (u+1) a_{sw}            if sw = ws* > w
    T_s a_w = (u^2-u-1) a_w + (u^2-u) a_{sw}  if sw = ws* < w
    T_s a_w = a_{sws*}                        if sw != ws* > w
    T_s a_w = (u^2-1) a_w + u^2 a_{sws*}      if sw != ws* < w

with u = v^2 throughout, so (T_s + 1)(T_s - u^2) = 0 on M.

The bar operator is defined by the descent recursion

    a_w = (u+1)^{-1} (T_s - u) a_{sw}   when sw = ws* < w,
    a_w = T_s a_{sws*}                  when sw != ws* < w,

ground case bar(a_e) = a_e, with bar(T_s) = u^-2 T_s + (u^-2 - 1) applied
semilinearly.  The recursion is well defined independently of the chosen
descent; that is a tested property, not an assumption.  Intermediate values
live over Q(u) because of the (u+1)^{-1}; every published coefficient is
checked back into Z[v, v^-1].

Module elements are dicts {twisted involution: coefficient}; coefficients
are LaurentPoly, or RationalFn inside the bar recursion.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .laurent import LaurentPoly, RationalFn, ZERO, ONE, as_laurent
from .hecke import add_into
from .report import Report

# v-units scalars of the four-case action (u = v^2)
_U = LaurentPoly.monomial(2)
_U_PLUS_1 = LaurentPoly({2: 1, 0: 1})
_U2_MINUS_U_MINUS_1 = LaurentPoly({4: 1, 2: -1, 0: -1})
_U2_MINUS_U = LaurentPoly({4: 1, 2: -1})
_U2 = LaurentPoly.monomial(4)
_U2_MINUS_1 = LaurentPoly({4: 1, 0: -1})
_UINV2 = LaurentPoly.monomial(-4)
_UINV2_MINUS_1 = LaurentPoly({-4: 1, 0: -1})
_UINV = LaurentPoly.monomial(-2)


@dataclass
class ModuleElement:
    """A finite formal sum over twisted involutions; basis tag "a" or "A"."""

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


def _scale(m, c):
    return {w: x * c for w, x in m.items()} if c else {}


def _add(m1, m2):
    out = dict(m1)
    for w, c in m2.items():
        add_into(out, w, c)
    return out


class InvolutionModule:
    """The module on I_* for one Coxeter system (finite, or length-truncated)."""

    def __init__(self, algebra, max_len=None):
        self.algebra = algebra
        self.system = algebra.system
        self.max_len = max_len
        self.basis = tuple(self.system.twisted_involutions(max_len=max_len))
        self._basis_set = frozenset(self.basis)
        self._bar_a = {}
        self._a_upper = {}
        self._psigma = {}
        self._f = {}

    # -- the four-case generator action ------------------------------------------

    def _case(self, i, w):
        """(sw, ws*, sws*) data for generator i at a twisted involution w."""
        sys = self.system
        s = sys.generator(i)
        sw = s * w
        ws = w * sys.generator(sys.star_perm[i])
        return s, sw, ws

    def ts_action(self, i, m):
        """T_{s_i} acting on a module element (a-basis coordinates)."""
        out = {}
        for w, c in m.items():
            s, sw, ws = self._case(i, w)
            up = len(sw.word) > len(w.word)
            if sw == ws:
                if up:
                    add_into(out, w, c * _U)
                    add_into(out, sw, c * _U_PLUS_1)
                else:
                    add_into(out, w, c * _U2_MINUS_U_MINUS_1)
                    add_into(out, sw, c * _U2_MINUS_U)
            else:
                sws = sw * self.system.generator(self.system.star_perm[i])
                if up:
                    add_into(out, sws, c)
                else:
                    add_into(out, w, c * _U2_MINUS_1)
                    add_into(out, sws, c * _U2)
        return out

    def t_word_action(self, word, m):
        for i in reversed(word):
            m = self.ts_action(i, m)
        return m

    def h_action(self, h, m):
        """Action of the parameter-u^2 algebra: h is either a group element
        (acting as T_h through a reduced word) or a T-coordinate dict."""
        if hasattr(h, "word"):
            return self.t_word_action(h.word, m)
        out = {}
        for x, c in h.items():
            part = self.t_word_action(x.word, m)
            for w, a in part.items():
                add_into(out, w, a * c)
        return out

    def c_act(self, x, m):
        """Action of the canonical basis element c_x (parameter-u^2 coordinates)."""
        return self.h_action(self.algebra.c_elt_u(x), m)

    # -- bar operator ---------------------------------------------------------------

    def _bar_ts(self, i, m):
        """bar(T_s) = u^-2 T_s + (u^-2 - 1), applied to a module element."""
        return _add(_scale(self.ts_action(i, m), _UINV2), _scale(m, _UINV2_MINUS_1))

    def bar_a_via(self, w, i):
        """bar(a_w) computed through the descent i (RationalFn coefficients)."""
        s, sw, ws = self._case(i, w)
        if len(sw.word) >= len(w.word):
            raise ValueError("%d is not a left descent of %s" % (i + 1, w))
        if sw == ws:
            prev = self._bar_a_rational(sw)
            num = _add(self._bar_ts(i, prev), _scale(prev, -_UINV))
            scale = RationalFn(ONE, LaurentPoly({-2: 1, 0: 1}))  # (u^-1 + 1)^-1
            return {x: RationalFn._coerce(c) * scale for x, c in num.items()}
        sws = sw * self.system.generator(self.system.star_perm[i])
        return self._bar_ts(i, self._bar_a_rational(sws))

    def _bar_a_rational(self, w):
        if not w.word:
            return {w: ONE}
        got = self._bar_a.get(w)
        if got is not None:
            return got
        return self.bar_a_via(w, w.word[0])

    def bar_a(self, w):
        """bar(a_w) with integral (Laurent) coefficients, memoized."""
        got = self._bar_a.get(w)
        if got is None:
            raw = self._bar_a_rational(w)
            got = {x: as_laurent(c) for x, c in raw.items()}
            self._bar_a[w] = got
        return got

    def bar_m(self, m):
        """The semilinear bar operator on a module element."""
        out = {}
        for w, c in m.items():
            cl = as_laurent(c) if not isinstance(c, LaurentPoly) else c
            for x, a in self.bar_a(w).items():
                add_into(out, x, a * cl.bar())
        return out

    # -- the upper canonical basis ----------------------------------------------------

    def a_upper(self, w):
        """A_w = v^{-l(w)} sum_{y <= w} P^sigma_{y,w}(u) a_y: the unique
        bar-invariant element with this triangular, degree-bounded shape.

        Returns the module element; the P^sigma table entry is cached and
        available through `psigma`.  The triangular solve certifies
        existence and uniqueness (any failure raises).
        """
        got = self._a_upper.get(w)
        if got is not None:
            return got
        sub = [y for y in self.basis if self.system.bruhat_leq(y, w)]
        sub.sort(key=lambda y: y.sort_key(), reverse=True)
        lw = len(w.word)
        pi = {w: LaurentPoly.monomial(-lw)}
        for x in sub:
            lx = len(x.word)
            if self.bar_a(x).get(x) != LaurentPoly.monomial(-2 * lx):
                raise AssertionError("bar(a_x) has unexpected leading term at %s" % x)
            if x == w:
                continue
            g = ZERO
            for y, piy in pi.items():
                r = self.bar_a(y).get(x)
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
        psig = {}
        for y, c in pi.items():
            p = c.shifted(lw).halve_exponents()
            d = p.degree()
            if y != w and d is not None and 2 * d > lw - len(y.word) - 1:
                raise AssertionError("P^sigma degree bound violated at (%s,%s)" % (y, w))
            psig[y] = p
        if self.bar_m(pi) != pi:
            raise AssertionError("A_%s is not bar-invariant" % w)
        self._a_upper[w] = pi
        self._psigma[w] = psig
        return pi

    def psigma(self, y, w):
        """P^sigma_{y,w} in u-units (integer coefficients, possibly negative)."""
        if w not in self._psigma:
            self.a_upper(w)
        return self._psigma[w].get(y, ZERO)

    def a_upper_element(self, w):
        """A_w as a tagged element (written in a-basis coordinates)."""
        return ModuleElement("a", self.a_upper(w))

    def f_element(self, x, w):
        """c_x A_w as a tagged element in A-basis coordinates."""
        return ModuleElement("A", self.f_constants(x, w))

    # -- leading-coefficient constants and the induced module ---------------------------

    def f_constants(self, x, w):
        """A-basis coordinates of c_x A_w: a dict w' -> f_{x,w,w'}."""
        key = (x, w)
        got = self._f.get(key)
        if got is None:
            rem = dict(self.c_act(x, self.a_upper(w)))
            got = {}
            while rem:
                wp = max(rem, key=lambda y: y.sort_key())
                coeff = rem[wp].shifted(len(wp.word))
                got[wp] = coeff
                for y, c in self.a_upper(wp).items():
                    add_into(rem, y, -(coeff * c))
            self._f[key] = got
        return got

    def beta(self, x, w, wp, cells):
        """The leading coefficient of f_{x,w,w'} at v^{2 a(w')}."""
        f = self.f_constants(x, w).get(wp)
        return f.coeff_of_v(2 * cells.a[wp]) if f is not None else 0

    def beta_table(self, cells):
        """{(x, w) -> {w' -> beta}} over all x in W, w in I_* (nonzero only)."""
        out = {}
        for x in cells.elements:
            for w in self.basis:
                row = {}
                for wp, f in self.f_constants(x, w).items():
                    b = f.coeff_of_v(2 * cells.a[wp])
                    if b:
                        row[wp] = b
                out[(x, w)] = row
        return out

    def cm_action(self, j, t, cells):
        """The induced action of the asymptotic ring: t_x tau_w = sum beta tau_{w'}."""
        out = {}
        for x, cx in j.items():
            for w, cw in t.items():
                c = cx * cw
                if not c:
                    continue
                for wp, b in self._beta_row(x, w, cells).items():
                    s = out.get(wp, 0) + c * b
                    if s:
                        out[wp] = s
                    else:
                        del out[wp]
        return out

    def _beta_row(self, x, w, cells):
        row = {}
        for wp, f in self.f_constants(x, w).items():
            b = f.coeff_of_v(2 * cells.a[wp])
            if b:
                row[wp] = b
        return row

    # -- the verifier suite -------------------------------------------------------------

    def verify_section1(self, cells, n_random=2000, seed=0):
        """Pass/fail report for the leading-term law, support constraints,
        associativity and unit laws of the induced module, and its block and
        left-cell restrictions."""
        rep = Report("invmod", self.system.describe())
        els = cells.elements
        inv = self.basis
        part = cells.partition

        bad = None
        for x in els:
            for w in inv:
                for wp, f in self.f_constants(x, w).items():
                    d = f.degree()
                    if d is not None and d > 2 * cells.a[wp]:
                        bad = (str(x), str(w), str(wp))
                        break
        rep.add("leading-term-law", bad is None, bad)

        bad = None
        for x in els:
            for w in inv:
                for wp in self.f_constants(x, w):
                    if not (part.preceq(wp, w) and part.preceq(wp, x)):
                        bad = (str(x), str(w), str(wp))
        rep.add("support-constraint", bad is None, bad)

        bad = None
        for x in els:
            for w in inv:
                for wp, b in self._beta_row(x, w, cells).items():
                    if not (part.same_two_sided(x, w) and part.same_two_sided(w, wp)):
                        bad = (str(x), str(w), str(wp), b)
        rep.add("beta-cell-support", bad is None, bad)

        bad = None
        for w in inv:
            for wp in inv:
                total = sum(
                    self._beta_row(d, w, cells).get(wp, 0)
                    for d in cells.distinguished_involutions()
                )
                if total != (1 if w == wp else 0):
                    bad = (str(w), str(wp), total)
        rep.add("unit-identity", bad is None, bad)

        triples = len(els) * len(els) * len(inv)
        if triples <= 4000:
            it = itertools.product(els, els, inv)
        else:
            rng = random.Random(seed)
            it = (
                (rng.choice(els), rng.choice(els), rng.choice(inv))
                for _ in range(n_random)
            )
        bad = None
        for x, y, w in it:
            lhs = self.cm_action(cells.j_mult({x: 1}, {y: 1}), {w: 1}, cells)
            rhs = self.cm_action({x: 1}, self.cm_action({y: 1}, {w: 1}, cells), cells)
            if lhs != rhs:
                bad = (str(x), str(y), str(w))
                break
        rep.add("module-associativity", bad is None, bad)

        bad = None
        for x in els:
            for w in inv:
                if not part.same_two_sided(x, w) and self._beta_row(x, w, cells):
                    bad = (str(x), str(w))
        rep.add("block-decomposition", bad is None, bad)

        bad = None
        dist = set(cells.distinguished_involutions())
        for lam in part.left_cells:
            if frozenset(w.star() for w in lam) != lam:
                continue
            lam_inv = frozenset(w.inverse() for w in lam)
            inter_inv = [w for w in inv if w in lam and w in lam_inv]
            (d,) = tuple(lam & dist)
            for w in inter_inv:
                if self.cm_action({d: 1}, {w: 1}, cells) != {w: 1}:
                    bad = ("unit", str(d), str(w))
                for x in lam & lam_inv:
                    for wp in self._beta_row(x, w, cells):
                        if wp not in lam or wp not in lam_inv:
                            bad = ("closure", str(x), str(w), str(wp))
                for dp in dist - lam:
                    if self._beta_row(dp, w, cells):
                        bad = ("outside-unit", str(dp), str(w))
        rep.add("left-cell-restriction", bad is None, bad)
        return rep

    def sign_split_check(self, x, w, wp):
        """Coefficientwise comparison of f_{x,w,w'} with the triple product
        coefficient H_{x,w,w'}: |f| <= H, H-coefficient 0 forces f = 0, and
        H-coefficient 1 forces f = +-1.  Returns (ok, detail)."""
        H = self.algebra.triple_H(x, w, wp)
        f = self.f_constants(x, w).get(wp, ZERO)
        exps = set(H.support()) | set(f.support())
        for e in exps:
            hc = H.coeff_of_v(e)
            fc = f.coeff_of_v(e)
            if abs(fc) > hc:
                return False, ("abs", e, fc, hc)
            if hc == 0 and fc != 0:
                return False, ("zero", e, fc, hc)
            if hc == 1 and abs(fc) != 1:
                return False, ("unit", e, fc, hc)
        return True, None
