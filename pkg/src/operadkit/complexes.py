"""Finite chain complex slices over Q: assembly, homology, chain maps.

A slice stores, per integer degree, an ordered duplicate-free basis and the
boundary matrix to the next degree (the differential raises degree by 1).
All arithmetic is exact.
"""

from .linalg import LinComb, ExactMatrix


class ChainComplexSlice:
    """Bases and differential matrices for a window of degrees.

    bases: dict degree -> ordered list of basis objects
    mats:  dict degree -> ExactMatrix whose columns are d(basis element),
           expressed over the basis objects of degree+1 (row keys)
    """

    def __init__(self, bases, diff):
        self.bases = {k: list(v) for k, v in bases.items() if v}
        for k, bl in self.bases.items():
            assert len(set(bl)) == len(bl), "duplicate basis element"
        self.mats = {}
        degs = sorted(self.bases)
        for k in degs:
            m = ExactMatrix()
            # seed the row indexing with the next degree's basis so image
            # vectors always vectorize
            for b in self.bases.get(k + 1, ()):
                m.row_index.setdefault(b, len(m.row_index))
            for b in self.bases[k]:
                db = diff(b)
                for t in db.terms:
                    assert t in m.row_index, (
                        "differential leaves the window at degree %d: %r" % (k, t))
                m.add_column(db)
            self.mats[k] = m
        self._check_d2(diff)

    def _check_d2(self, diff):
        for k, bl in self.bases.items():
            for b in bl:
                d2 = diff(b).map_basis(diff)
                assert d2.is_zero(), "d^2 != 0 at degree %d on %r" % (k, b)

    def dim(self, k):
        return len(self.bases.get(k, ()))

    def rank_d(self, k):
        m = self.mats.get(k)
        return m.rank() if m is not None else 0

    def homology_dims(self):
        out = {}
        for k in sorted(self.bases):
            h = self.dim(k) - self.rank_d(k) - self.rank_d(k - 1)
            if h:
                out[k] = h
        return out

    def degrees(self):
        return sorted(self.bases)


def _tree_spaces():
    from . import trees
    return trees


def assemble(space, arity=None, window=None, bases=None, diff=None):
    """Build a ChainComplexSlice.

    space: one of 'cbr', 'br' (finite, arity required), or 'custom' with
    explicit bases (dict degree -> list) and diff (basis -> LinComb).
    window restricts to a closed degree interval; for cbr/br the default is
    the full finite support.
    """
    if space in ("cbr", "br"):
        trees = _tree_spaces()
        assert arity is not None and arity >= 1
        elems = trees.enumerate_basis("CBr" if space == "cbr" else "Br", arity)
        bases = {}
        for t in elems:
            bases.setdefault(trees.degree(t), []).append(t)
        if space == "br":
            diff = lambda b: _restrict(trees.differential(LinComb.single(b)),
                                       set(elems))
        else:
            diff = lambda b: trees.differential(LinComb.single(b))
    elif space == "custom":
        assert bases is not None and diff is not None
    else:
        raise ValueError("unknown space %r" % (space,))
    if window is not None:
        lo, hi = window
        kept = {k: v for k, v in bases.items() if lo <= k <= hi}
        for k in list(bases):
            if not lo <= k <= hi and bases[k]:
                raise ValueError("window (%d,%d) cuts a nonzero degree %d"
                                 % (lo, hi, k))
        bases = kept
    return ChainComplexSlice(bases, diff)


def _restrict(x, allowed):
    out = LinComb()
    for b, c in x.terms.items():
        if b in allowed:
            out = out + LinComb.single(b, c)
    return out


def chain_map_check(src, dst, f):
    """Exact commuting-square check d∘f = f∘d for f: basis -> LinComb.

    src, dst are ChainComplexSlices over the same degree convention; f must
    be degree 0.  Returns True/False.
    """
    def d_of(slice_, x):
        out = LinComb()
        for b, c in x.terms.items():
            k = None
            for deg, bl in slice_.bases.items():
                if b in bl:
                    k = deg
                    break
            assert k is not None, "element outside slice: %r" % (b,)
            m = slice_.mats[k]
            j = slice_.bases[k].index(b)
            col = m.cols[j]
            inv = {i: rk for rk, i in m.row_index.items()}
            for i, cv in col.items():
                out = out + LinComb.single(inv[i], c * cv)
        return out

    for k, bl in src.bases.items():
        for b in bl:
            lhs = d_of(dst, f(b))
            rhs = f_linear(f, d_of(src, LinComb.single(b)))
            if lhs != rhs:
                return False
    return True


def f_linear(f, x):
    return x.map_basis(f)


def induced_homology_iso(src, dst, f):
    """Whether a chain map f induces an isomorphism on homology, degreewise.

    Representatives of src homology are completed from kernel/image ranks;
    the induced map is tested for injectivity and surjectivity by rank
    arithmetic in dst's cycle space modulo boundaries.
    """
    if not chain_map_check(src, dst, f):
        return False
    hs, hd = src.homology_dims(), dst.homology_dims()
    if hs != hd:
        return False
    degs = sorted(set(src.bases) | set(dst.bases))
    for k in degs:
        hk = hs.get(k, 0)
        if hk == 0:
            continue
        # cycles in src at degree k
        cyc = _cycle_basis(src, k)
        # image of f on those cycles, counted modulo dst boundaries
        bnd = dst.mats.get(k - 1)
        m = ExactMatrix()
        if bnd is not None:
            for col in bnd.cols:
                inv = {i: rk for rk, i in bnd.row_index.items()}
                m.add_column({inv[i]: c for i, c in col.items()})
        nb = len(m.cols)
        rank_b = m.rank()
        for z in cyc:
            m.add_column(f_linear(f, z))
        # induced rank = rank(boundaries + images) - rank(boundaries)
        if m.rank() - rank_b != hk:
            return False
    return True


def _cycle_basis(slice_, k):
    """LinComb cycles spanning ker d at degree k (full kernel, may include
    boundaries; that is fine for the rank test above)."""
    bl = slice_.bases.get(k, [])
    if not bl:
        return []
    m = slice_.mats[k]
    # kernel via solving: append columns one by one, a column dependent on
    # its predecessors yields a kernel vector
    out = []
    acc = ExactMatrix()
    acc.row_index = dict(m.row_index)
    for j, col in enumerate(m.cols):
        inv = {i: rk for rk, i in m.row_index.items()}
        lc = LinComb([(inv[i], c) for i, c in col.items()])
        if lc.is_zero():
            out.append(LinComb.single(bl[j]))
            continue
        sol = acc.solve(lc)
        if sol is None:
            acc.add_column(lc)
            acc._live = getattr(acc, "_live", []) + [j]
        else:
            z = LinComb.single(bl[j])
            live = getattr(acc, "_live", [])
            for idx, cv in zip(live, sol):
                z = z - cv * LinComb.single(bl[idx])
            out.append(z)
    return out


def report(slice_, space, arity, runtime_ms=None):
    """JSON-friendly summary of an assembled slice."""
    return {
        "space": space,
        "arity": arity,
        "dims_by_degree": {str(k): slice_.dim(k) for k in slice_.degrees()},
        "homology_by_degree": {str(k): v
                               for k, v in slice_.homology_dims().items()},
        "d2_ok": True,
        "runtime_ms": runtime_ms,
    }


def dump_matrix(m, fh):
    """Sparse triplet text dump: row col value per line."""
    for j, col in enumerate(m.cols):
        for i, c in sorted(col.items()):
            fh.write("%d %d %s\n" % (i, j, c))
