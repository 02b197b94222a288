"""Exact linear algebra over the rationals.

Provides formal linear combinations over an arbitrary hashable, orderable
basis, permutation parities, and sparse fraction-free (Bareiss) elimination
for rank / membership / solving.  Everything is exact; no floats anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def perm_parity(perm):
    """Sign of a permutation of 0..n-1, given as a sequence."""
    perm = list(perm)
    n = len(perm)
    seen = [False] * n
    sign = 1
    for i in range(n):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def sort_sign(items, key=None):
    """Sort a list of distinct items, returning (sorted_items, parity sign).

    The sign is the parity of the permutation taking the given order to the
    sorted order.  Items must be pairwise distinct under the key.
    """
    idx = sorted(range(len(items)), key=(lambda i: key(items[i])) if key else (lambda i: items[i]))
    return [items[i] for i in idx], perm_parity(idx)


class LinComb:
    """A finite formal Q-linear combination of hashable basis objects.

    Zero coefficients are never stored.  Basis objects are compared with ==
    and must sort consistently (used only for display and serialization).
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for b, c in (terms.items() if isinstance(terms, dict) else terms):
                c = Fraction(c)
                if c:
                    nc = self.terms.get(b, 0) + c
                    if nc:
                        self.terms[b] = nc
                    else:
                        self.terms.pop(b, None)

    @classmethod
    def single(cls, basis, coeff=1):
        return cls([(basis, coeff)])

    @classmethod
    def zero(cls):
        return cls()

    def __add__(self, other):
        out = dict(self.terms)
        for b, c in other.terms.items():
            nc = out.get(b, 0) + c
            if nc:
                out[b] = nc
            else:
                out.pop(b, None)
        r = LinComb()
        r.terms = out
        return r

    def __sub__(self, other):
        return self + (-1) * other

    def __neg__(self):
        return (-1) * self

    def __rmul__(self, scalar):
        scalar = Fraction(scalar)
        r = LinComb()
        if scalar:
            r.terms = {b: scalar * c for b, c in self.terms.items()}
        return r

    def __mul__(self, scalar):
        return self.__rmul__(scalar)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, LinComb) and self.terms == other.terms

    def __hash__(self):
        raise TypeError("LinComb is not hashable")

    def __len__(self):
        return len(self.terms)

    def coeff(self, basis):
        return self.terms.get(basis, Fraction(0))

    def map_basis(self, f):
        """Linear extension of a map basis -> LinComb."""
        out = LinComb()
        for b, c in self.terms.items():
            out = out + c * f(b)
        return out

    def sorted_items(self, key=None):
        return sorted(self.terms.items(), key=(lambda bc: key(bc[0])) if key else (lambda bc: bc[0]))

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for b, c in list(self.terms.items())[:12]:
            bits.append("%s*%r" % (c, b))
        if len(self.terms) > 12:
            bits.append("... (%d terms)" % len(self.terms))
        return " + ".join(bits)


def _clear_row(row):
    """Scale a dict col->Fraction to integers, dropping the overall gcd."""
    if not row:
        return {}
    denlcm = 1
    for c in row.values():
        denlcm = denlcm * c.denominator // gcd(denlcm, c.denominator)
    ints = {j: int(c * denlcm) for j, c in row.items()}
    g = 0
    for v in ints.values():
        g = gcd(g, v)
    if g > 1:
        ints = {j: v // g for j, v in ints.items()}
    return ints


class ExactMatrix:
    """A sparse matrix over Q, stored as a list of integer rows (dicts).

    Built from columns that are LinCombs (or dicts) over arbitrary row keys;
    row keys are interned to integer indices.  Rank and solving use
    fraction-free Bareiss elimination on the integer rows.
    """

    def __init__(self):
        self.row_index = {}
        self.cols = []

    @classmethod
    def from_columns(cls, columns):
        m = cls()
        for col in columns:
            m.add_column(col)
        return m

    def add_column(self, col):
        terms = col.terms if isinstance(col, LinComb) else col
        d = {}
        for rk, c in terms.items():
            i = self.row_index.setdefault(rk, len(self.row_index))
            d[i] = Fraction(c)
        self.cols.append(d)
        return len(self.cols) - 1

    def vectorize(self, col):
        """Express a LinComb in this matrix's row indexing; None if it
        involves a row key the matrix has never seen (hence not in image
        unless that coefficient is zero, which LinComb guarantees it isn't).
        """
        terms = col.terms if isinstance(col, LinComb) else col
        d = {}
        for rk, c in terms.items():
            if rk not in self.row_index:
                return None
            d[self.row_index[rk]] = Fraction(c)
        return d

    def _rows(self, extra_cols=()):
        """Transpose columns (plus optional extra columns) into integer rows.

        Returns (rows, ncols); extra columns are appended on the right.
        """
        ncols = len(self.cols) + len(extra_cols)
        rows = {}
        for j, col in enumerate(self.cols):
            for i, c in col.items():
                rows.setdefault(i, {})[j] = c
        for k, col in enumerate(extra_cols):
            for i, c in col.items():
                rows.setdefault(i, {})[len(self.cols) + k] = c
        int_rows = [_clear_row(r) for r in rows.values()]
        return [r for r in int_rows if r], ncols

    def rank(self, extra_cols=()):
        rows, _ = self._rows(extra_cols)
        ech, piv = _bareiss(rows)
        return len(piv)

    def in_image(self, col):
        """Whether the LinComb lies in the column span."""
        v = self.vectorize(col)
        if v is None:
            return False
        if not v:
            return True
        return self.rank() == self.rank(extra_cols=[v])

    def solve(self, col):
        """One exact solution x (list of Fractions, len == #columns) with
        A x = col, or None if col is not in the image."""
        v = self.vectorize(col)
        if v is None:
            return None
        rows, ncols = self._rows(extra_cols=[v])
        ech, piv = _bareiss(rows)
        k = len(self.cols)
        if any(p == k for p in piv):
            return None
        x = [Fraction(0)] * k
        for r, p in reversed(list(zip(ech, piv))):
            s = Fraction(r.get(k, 0))
            for j in range(p + 1, k):
                cj = r.get(j)
                if cj:
                    s -= cj * x[j]
            x[p] = s / r[p]
        return x

    def kernel_dim(self):
        return len(self.cols) - self.rank()


def _bareiss(rows):
    """Fraction-free elimination on sparse integer rows (dicts col->int).

    Returns (echelon_rows, pivot_columns).  Cross-multiplication keeps all
    entries integral; every derived row is reduced by its content gcd, which
    plays the role of the Bareiss pivot division on sparse data.
    """
    rows = [dict(r) for r in rows if r]
    ech = []
    piv = []
    while rows:
        pc = min(min(r) for r in rows)
        cand = [r for r in rows if pc in r]
        pr = min(cand, key=lambda r: (abs(r[pc]), len(r)))
        rows.remove(pr)
        p = pr[pc]
        nxt = []
        for r in rows:
            a = r.get(pc, 0)
            if not a:
                nxt.append(r)
                continue
            new = {}
            for j in set(r) | set(pr):
                if j == pc:
                    continue
                val = p * r.get(j, 0) - a * pr.get(j, 0)
                if val:
                    new[j] = val
            if new:
                g = 0
                for v in new.values():
                    g = gcd(g, v)
                if g > 1:
                    new = {j: v // g for j, v in new.items()}
                nxt.append(new)
        ech.append(pr)
        piv.append(pc)
        rows = nxt
    return ech, piv
