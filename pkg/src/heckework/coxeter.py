"""Coxeter systems at desk scale, with exact ShortLex normal forms.

Elements are stored as their ShortLex normal form: the lexicographically
least reduced word.  It is computed greedily — the first letter of the
normal form of w is the smallest left descent of w, and the rest is the
normal form of s_i w — so everything reduces to an exact left-descent test.

Two element models back that test:

- a matrix model (the standard geometric representation with integral
  Cartan-style entries), available whenever every bond order m(i,j) lies in
  {2, 3, 4, 6, inf}: i is a right descent of w iff the i-th column of the
  matrix of w is nonpositive (w sends alpha_i to a negative root);
- an exact dihedral word model for rank <= 2 and arbitrary bond order
  (covers I2(5), I2(7), ... where the matrix entries are irrational).

Bond order infinity is encoded as 0, matching the external matrix format.
Words are displayed as digit strings over 1..n ("121321"); the identity
prints as "e".
"""

from __future__ import annotations

import hashlib
import json

INF = 0  # Coxeter-matrix encoding of m(i,j) = infinity

# a_ij, a_ji with a_ij * a_ji = 4 cos^2(pi/m); keeps the matrix model integral
_CARTAN_PAIRS = {2: (0, 0), 3: (-1, -1), 4: (-1, -2), 6: (-1, -3), INF: (-2, -2)}

_FINITE_LABELS = {"A1": 2, "A2": 6, "A3": 24, "B2": 8, "G2": 12}


class InfiniteGroupError(ValueError):
    """Raised when a full enumeration of an infinite group is requested."""


def _mat_mul(a, b):
    n = len(a)
    return tuple(
        tuple(sum(a[r][k] * b[k][c] for k in range(n)) for c in range(n))
        for r in range(n)
    )


def _identity_mat(n):
    return tuple(tuple(1 if r == c else 0 for c in range(n)) for r in range(n))


class ReflectionRep:
    """Exact matrix action of the generators on the geometric representation.

    Requires all bond orders in {2, 3, 4, 6, inf}.  Generator matrices are
    integral involutions; descent tests read off root-sign changes.
    """

    def __init__(self, matrix):
        n = len(matrix)
        a = [[0] * n for _ in range(n)]
        for i in range(n):
            a[i][i] = 2
            for j in range(i + 1, n):
                m = matrix[i][j]
                if m not in _CARTAN_PAIRS:
                    raise ValueError("bond order %r has no integral model" % m)
                a[i][j], a[j][i] = _CARTAN_PAIRS[m]
        gens = []
        for i in range(n):
            rows = [list(r) for r in _identity_mat(n)]
            for j in range(n):
                rows[i][j] = -1 if j == i else -a[i][j]
            gens.append(tuple(tuple(r) for r in rows))
        self.n = n
        self.gens = tuple(gens)
        self.identity = _identity_mat(n)

    def matrix_of_word(self, word):
        m = self.identity
        for g in word:
            m = _mat_mul(m, self.gens[g])
        return m

    def inverse_matrix_of_word(self, word):
        m = self.identity
        for g in word:
            m = _mat_mul(self.gens[g], m)
        return m

    @staticmethod
    def _column_nonpositive(mat, i):
        return all(row[i] <= 0 for row in mat)


class _MatrixBackend:
    def __init__(self, matrix):
        self.rep = ReflectionRep(matrix)

    def normalize(self, word):
        rep = self.rep
        b = rep.inverse_matrix_of_word(word)  # matrix of w^-1
        out = []
        n = rep.n
        guard = len(word)
        while b != rep.identity:
            for i in range(n):
                if rep._column_nonpositive(b, i):
                    out.append(i)
                    b = _mat_mul(b, rep.gens[i])
                    break
            else:
                raise AssertionError("no descent found; matrix model broken")
            if len(out) > guard:
                raise AssertionError("normalization did not terminate")
        return tuple(out)

    def left_descents(self, nf_word):
        rep = self.rep
        b = rep.inverse_matrix_of_word(nf_word)
        return frozenset(
            i for i in range(rep.n) if rep._column_nonpositive(b, i)
        )

    def right_descents(self, nf_word):
        rep = self.rep
        a = rep.matrix_of_word(nf_word)
        return frozenset(
            i for i in range(rep.n) if rep._column_nonpositive(a, i)
        )


class _DihedralBackend:
    """Exact word model for rank-2 systems with arbitrary bond order.

    Elements are r^k or r^k s_0 with r = s_0 s_1 (k mod m when m is finite);
    normal forms are alternating words, ties at the top resolved to the
    lexicographically least word.
    """

    def __init__(self, m):
        self.m = m  # bond order; INF (0) means the infinite dihedral group

    def _fold(self, word):
        t, k = 0, 0
        for g in word:
            if g == 0:
                t ^= 1
            elif g == 1:
                if t == 0:
                    t, k = 1, k - 1
                else:
                    t, k = 0, k + 1
            else:
                raise ValueError("dihedral backend has generators 0 and 1")
        if self.m != INF:
            k %= self.m
        return t, k

    @staticmethod
    def _alt(first, length):
        return tuple((first + i) % 2 for i in range(length))

    def _unparse(self, t, k):
        m = self.m
        if m == INF:
            if t == 0:
                if k == 0:
                    return ()
                return self._alt(0, 2 * k) if k > 0 else self._alt(1, -2 * k)
            return self._alt(0, 2 * k + 1) if k >= 0 else self._alt(1, -2 * k - 1)
        if t == 0:
            if k == 0:
                return ()
            c1, c2 = 2 * k, 2 * (m - k)
        else:
            c1, c2 = 2 * k + 1, 2 * (m - k) - 1
        # ties happen only at the longest element: prefer the word starting 0
        return self._alt(0, c1) if c1 <= c2 else self._alt(1, c2)

    def normalize(self, word):
        return self._unparse(*self._fold(word))

    def left_descents(self, nf_word):
        out = set()
        for i in (0, 1):
            if len(self.normalize((i,) + nf_word)) < len(nf_word):
                out.add(i)
        return frozenset(out)

    def right_descents(self, nf_word):
        out = set()
        for i in (0, 1):
            if len(self.normalize(nf_word + (i,))) < len(nf_word):
                out.add(i)
        return frozenset(out)


class CoxeterElement:
    """A group element in ShortLex normal form, bound to its system."""

    __slots__ = ("system", "word", "_hash")

    def __init__(self, system, word):
        self.system = system
        self.word = word
        self._hash = hash((system._ckey, word))

    @property
    def length(self):
        return len(self.word)

    def __mul__(self, other):
        return self.system.multiply(self, other)

    def inverse(self):
        return self.system.inverse(self)

    def star(self):
        return self.system.star_elt(self)

    def left_descents(self):
        return self.system.left_descents(self)

    def right_descents(self):
        return self.system.right_descents(self)

    def bruhat_leq(self, other):
        return self.system.bruhat_leq(self, other)

    def sort_key(self):
        return (len(self.word), self.word)

    def __eq__(self, other):
        if not isinstance(other, CoxeterElement):
            return NotImplemented
        return self.word == other.word and self.system._ckey == other.system._ckey

    def __hash__(self):
        return self._hash

    def __str__(self):
        return "".join(str(i + 1) for i in self.word) if self.word else "e"

    def __repr__(self):
        return "<%s>" % self

    def __len__(self):
        return len(self.word)


class CoxeterSystem:
    """A Coxeter system (W, S) with a diagram involution sigma-star."""

    def __init__(self, matrix, star=None, label=None):
        matrix = tuple(tuple(int(x) for x in row) for row in matrix)
        n = len(matrix)
        for i in range(n):
            if len(matrix[i]) != n:
                raise ValueError("Coxeter matrix must be square")
            if matrix[i][i] != 1:
                raise ValueError("diagonal entries must be 1")
            for j in range(n):
                if matrix[i][j] != matrix[j][i]:
                    raise ValueError("Coxeter matrix must be symmetric")
                if i != j and matrix[i][j] != INF and matrix[i][j] < 2:
                    raise ValueError("off-diagonal orders are >= 2 (0 = infinity)")
        if star is None:
            star = tuple(range(n))
        else:
            star = tuple(int(i) for i in star)
            if sorted(star) != list(range(n)):
                raise ValueError("star must be a permutation of the generators")
            for i in range(n):
                if star[star[i]] != i:
                    raise ValueError("star must be an involution")
            for i in range(n):
                for j in range(n):
                    if matrix[star[i]][star[j]] != matrix[i][j]:
                        raise ValueError("star must preserve the Coxeter matrix")
        self.matrix = matrix
        self.star_perm = star
        self.label = label
        self.rank = n
        self._ckey = (matrix, star)
        if n <= 2 and not all(
            matrix[i][j] in _CARTAN_PAIRS
            for i in range(n)
            for j in range(n)
            if i != j
        ):
            self._backend = _DihedralBackend(matrix[0][1])
            self._rep = None
        else:
            self._backend = _MatrixBackend(matrix)
            self._rep = self._backend.rep
        self._nf_memo = {}
        self._mul_memo = {}
        self._descL = {}
        self._descR = {}
        self._interval = {}
        self.identity = CoxeterElement(self, ())

    # -- construction helpers ------------------------------------------------

    @classmethod
    def from_label(cls, label, star=None):
        """Build a named system: An, B2/C2, B3, G2, I2(m), Dinf."""
        lab = label.strip()
        key = lab.upper().replace("∞", "INF")
        if key.startswith("A") and key[1:].isdigit():
            n = int(key[1:])
            m = [[1 if i == j else (3 if abs(i - j) == 1 else 2) for j in range(n)]
                 for i in range(n)]
            return cls(m, star=star, label="A%d" % n)
        if key in ("B2", "C2"):
            return cls([[1, 4], [4, 1]], star=star, label="B2")
        if key == "B3":
            return cls([[1, 4, 2], [4, 1, 3], [2, 3, 1]], star=star, label="B3")
        if key == "G2":
            return cls([[1, 6], [6, 1]], star=star, label="G2")
        if key in ("DINF", "D_INF", "I2(INF)", "I2INF"):
            return cls([[1, INF], [INF, 1]], star=star, label="Dinf")
        if key.startswith("I2"):
            digits = "".join(ch for ch in key[2:] if ch.isdigit())
            if digits:
                m = int(digits)
                if m < 2:
                    raise ValueError("I2(m) needs m >= 2")
                return cls([[1, m], [m, 1]], star=star, label="I2(%d)" % m)
            if "INF" in key:
                return cls([[1, INF], [INF, 1]], star=star, label="Dinf")
        raise ValueError("unknown type label %r" % label)

    @classmethod
    def from_config(cls, cfg):
        """Config document: {"type": label} or {"matrix": rows}; optional "star"."""
        star = cfg.get("star")
        if star is not None:
            star = [i - 1 for i in star]
        if "type" in cfg:
            return cls.from_label(cfg["type"], star=star)
        if "matrix" in cfg:
            return cls(cfg["matrix"], star=star)
        raise ValueError("config needs a 'type' or a 'matrix' field")

    def to_config(self):
        cfg = {"matrix": [list(r) for r in self.matrix],
               "star": [i + 1 for i in self.star_perm]}
        if self.label:
            cfg["type"] = self.label
        return cfg

    def content_hash(self):
        blob = json.dumps(
            {"matrix": [list(r) for r in self.matrix],
             "star": list(self.star_perm)},
            sort_keys=True,
        ).encode()
        return hashlib.sha256(blob).hexdigest()[:16]

    def describe(self):
        return self.label or ("matrix:" + self.content_hash())

    # -- elements --------------------------------------------------------------

    def element(self, word):
        """Build an element from an iterable of generator indices or a digit string."""
        if isinstance(word, str):
            if word in ("", "e"):
                word = ()
            else:
                word = tuple(int(ch) - 1 for ch in word)
        word = tuple(word)
        for g in word:
            if not 0 <= g < self.rank:
                raise ValueError("generator index %r out of range" % g)
        return CoxeterElement(self, self._normalize(word))

    def generator(self, i):
        return self.element((i,))

    def generators(self):
        return [self.element((i,)) for i in range(self.rank)]

    def _normalize(self, word):
        nf = self._nf_memo.get(word)
        if nf is None:
            nf = self._backend.normalize(word)
            self._nf_memo[word] = nf
        return nf

    def _check_same(self, w):
        if w.system._ckey != self._ckey:
            raise ValueError("element belongs to a different Coxeter system")

    def multiply(self, a, b):
        self._check_same(a)
        self._check_same(b)
        key = (a.word, b.word)
        nf = self._mul_memo.get(key)
        if nf is None:
            nf = self._normalize(a.word + b.word)
            self._mul_memo[key] = nf
        return CoxeterElement(self, nf)

    def inverse(self, w):
        self._check_same(w)
        return CoxeterElement(self, self._normalize(tuple(reversed(w.word))))

    def star_elt(self, w):
        self._check_same(w)
        return CoxeterElement(
            self, self._normalize(tuple(self.star_perm[g] for g in w.word))
        )

    def left_descents(self, w):
        self._check_same(w)
        d = self._descL.get(w.word)
        if d is None:
            d = self._backend.left_descents(w.word)
            self._descL[w.word] = d
        return d

    def right_descents(self, w):
        self._check_same(w)
        d = self._descR.get(w.word)
        if d is None:
            d = self._backend.right_descents(w.word)
            self._descR[w.word] = d
        return d

    # -- enumeration -------------------------------------------------------------

    @property
    def is_finite(self):
        if self.label in _FINITE_LABELS or (self.label or "").startswith("I2("):
            return True
        if self.rank == 1:
            return True
        orders = [self.matrix[i][j] for i in range(self.rank)
                  for j in range(i + 1, self.rank)]
        if any(m == INF for m in orders):
            return False
        if self.rank == 2:
            return True
        if self.rank == 3:
            # spherical triangle condition
            from fractions import Fraction
            return sum(Fraction(1, m) for m in orders) > 1
        return None  # unknown; enumeration will probe with a cap

    def elements(self, max_len=None, cap=100000):
        """All elements of length <= max_len (all of W when max_len is None),
        sorted by (length, word)."""
        if max_len is None:
            fin = self.is_finite
            if fin is False:
                raise InfiniteGroupError(
                    "infinite Coxeter group: pass max_len for a bounded window"
                )
        out = [self.identity]
        seen = {()}
        layer = [self.identity]
        length = 0
        while layer:
            if max_len is not None and length >= max_len:
                break
            nxt = {}
            for w in layer:
                for i in range(self.rank):
                    x = self.multiply(w, self.generator(i))
                    if len(x.word) == length + 1 and x.word not in seen:
                        seen.add(x.word)
                        nxt[x.word] = x
            layer = [nxt[k] for k in sorted(nxt)]
            out.extend(layer)
            length += 1
            if len(out) > cap:
                raise InfiniteGroupError(
                    "enumeration exceeded cap=%d; group looks infinite" % cap
                )
        return out

    def twisted_involutions(self, max_len=None):
        """All w with w* = w^-1 (length <= max_len), sorted by (length, word)."""
        out = [
            w for w in self.elements(max_len=max_len)
            if self.star_elt(w) == self.inverse(w)
        ]
        return out

    # -- Bruhat order ---------------------------------------------------------------

    def lower_interval(self, w):
        """{y : y <= w} computed from the subword property on the normal form."""
        self._check_same(w)
        ivl = self._interval.get(w.word)
        if ivl is None:
            cur = {self.identity}
            for g in w.word:
                s = self.generator(g)
                cur = cur | {y * s for y in cur}
            ivl = frozenset(cur)
            self._interval[w.word] = ivl
        return ivl

    def bruhat_leq(self, y, w):
        self._check_same(y)
        self._check_same(w)
        if len(y.word) > len(w.word):
            return False
        return y in self.lower_interval(w)
