"""Polynomial multivector fields and multidifferential operators on formal
R^d, with the operations that realize the graph calculus concretely:
Schouten bracket, wedge, divergence and the BV axioms on the multivector
side; Hochschild differential, cup, pre-Lie circle, braces, the formal
adjoint cyclic action and the Connes-style B operator on the operator side;
the antisymmetrized multiderivation (HKR) map; and the two graph
representation maps.

Everything is exact over Q and term-wise; computations live inside a
declared finite window (dimension, coefficient degree, operator order,
arity) and the window is the caller's responsibility.
"""

from fractions import Fraction
from itertools import permutations, product as iproduct

from .linalg import LinComb


def _fr(c):
    return c if isinstance(c, Fraction) else Fraction(c)


# ---------------------------------------------------------------------------
# plain polynomials (coefficient ring helpers)


def poly_mul(p, q):
    out = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            nc = out.get(e, Fraction(0)) + c1 * c2
            if nc:
                out[e] = nc
            elif e in out:
                del out[e]
    return out


def poly_diff(p, l):
    """d/dx_l on a polynomial, l is 1-based."""
    out = {}
    for e, c in p.items():
        if e[l - 1] == 0:
            continue
        ne = e[: l - 1] + (e[l - 1] - 1,) + e[l:]
        out[ne] = out.get(ne, Fraction(0)) + c * e[l - 1]
    return {e: c for e, c in out.items() if c}


def poly_diff_multi(p, idx):
    """Apply the multi-index idx (tuple of length d of exponents)."""
    for l, r in enumerate(idx, start=1):
        for _ in range(r):
            p = poly_diff(p, l)
            if not p:
                return {}
    return p


def _zero_exp(d):
    return (0,) * d


# ---------------------------------------------------------------------------
# multivector fields


class PolyMV:
    """Polynomial multivector field on formal R^d: a Q-linear combination
    of monomials x^e ξ_S with S a strictly increasing tuple of directions.
    Multivector degree of a monomial is |S|; odd generators anticommute."""

    __slots__ = ("d", "terms")

    def __init__(self, d, terms=None):
        self.d = d
        self.terms = {}
        if terms:
            for (e, s), c in (terms.items() if isinstance(terms, dict)
                              else terms):
                c = _fr(c)
                if not c:
                    continue
                key = (tuple(e), tuple(s))
                nc = self.terms.get(key, Fraction(0)) + c
                if nc:
                    self.terms[key] = nc
                elif key in self.terms:
                    del self.terms[key]

    @classmethod
    def zero(cls, d):
        return cls(d)

    @classmethod
    def monomial(cls, d, exp, odd, coeff=1):
        odd = tuple(odd)
        assert len(set(odd)) == len(odd) and all(1 <= l <= d for l in odd)
        srt = tuple(sorted(odd))
        sign = 1
        lst = list(odd)
        for i in range(len(lst)):
            for j in range(i + 1, len(lst)):
                if lst[i] > lst[j]:
                    sign = -sign
        return cls(d, {(tuple(exp), srt): _fr(coeff) * sign})

    def is_zero(self):
        return not self.terms

    def map_coeff(self, f):
        return PolyMV(self.d, {k: f(c) for k, c in self.terms.items()})

    def to_json(self):
        return [{"exp": list(e), "odd": list(s), "coeff": str(c)}
                for (e, s), c in sorted(self.terms.items())]

    @classmethod
    def from_json(cls, d, data):
        return cls(d, {(tuple(t["exp"]), tuple(t["odd"])): Fraction(t["coeff"])
                       for t in data})

    def __add__(self, other):
        assert self.d == other.d, "dimension mismatch"
        t = dict(self.terms)
        for k, c in other.terms.items():
            nc = t.get(k, Fraction(0)) + c
            if nc:
                t[k] = nc
            elif k in t:
                del t[k]
        return PolyMV(self.d, t)

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, c):
        c = _fr(c)
        return PolyMV(self.d, {k: c * v for k, v in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, PolyMV) and self.d == other.d \
            and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "PolyMV(0)"
        bits = []
        for (e, s), c in sorted(self.terms.items()):
            mon = "".join("x%d^%d" % (i + 1, r) for i, r in enumerate(e) if r)
            mon += "".join("q%d" % l for l in s)
            bits.append("%s*%s" % (c, mon or "1"))
        return "PolyMV(%s)" % " + ".join(bits)

    def degrees(self):
        return {len(s) for _, s in self.terms}


def _dxi(term, l):
    """Left derivative d/dξ_l on one monomial key; returns (key, sign) or
    None."""
    e, s = term
    if l not in s:
        return None
    i = s.index(l)
    return (e, s[:i] + s[i + 1:]), (-1) ** i


def dx(x, l):
    """d/dx_l on a PolyMV, l 1-based."""
    out = {}
    for (e, s), c in x.terms.items():
        if e[l - 1] == 0:
            continue
        ne = e[: l - 1] + (e[l - 1] - 1,) + e[l:]
        k = (ne, s)
        out[k] = out.get(k, Fraction(0)) + c * e[l - 1]
    return PolyMV(x.d, out)


def dxi(x, l):
    """Left derivative d/dξ_l on a PolyMV."""
    out = {}
    for k, c in x.terms.items():
        r = _dxi(k, l)
        if r is None:
            continue
        nk, sg = r
        out[nk] = out.get(nk, Fraction(0)) + c * sg
    return PolyMV(x.d, out)


def wedge(x, y):
    assert x.d == y.d, "dimension mismatch"
    out = {}
    for (e1, s1), c1 in x.terms.items():
        for (e2, s2), c2 in y.terms.items():
            if set(s1) & set(s2):
                continue
            e = tuple(a + b for a, b in zip(e1, e2))
            merged = list(s1) + list(s2)
            sign = 1
            for i in range(len(merged)):
                for j in range(i + 1, len(merged)):
                    if merged[i] > merged[j]:
                        sign = -sign
            k = (e, tuple(sorted(merged)))
            nc = out.get(k, Fraction(0)) + sign * c1 * c2
            if nc:
                out[k] = nc
            elif k in out:
                del out[k]
    return PolyMV(x.d, out)


def _mv_degree(x):
    degs = x.degrees()
    assert len(degs) <= 1, "inhomogeneous multivector"
    return degs.pop() if degs else 0


def schouten(x, y):
    """Schouten bracket, extending the Lie bracket of vector fields by the
    biderivation rule; degree -1 in multivector degree.  Realized as the
    failure of the divergence to be a derivation of the wedge product,
    which pins every sign: [x,y] = Δ(x∧y) - Δx∧y - (-1)^{|x|} x∧Δy."""
    assert x.d == y.d, "dimension mismatch"
    kx = _mv_degree(x)
    return div(wedge(x, y)) - wedge(div(x), y) \
        - ((-1) ** kx) * wedge(x, div(y))


def div(x):
    """Divergence for the standard volume: Σ_l ∂²/∂x_l∂ξ_l."""
    out = PolyMV.zero(x.d)
    for l in range(1, x.d + 1):
        out = out + dx(dxi(x, l), l)
    return out


def bv_axioms(x, y, z):
    """Check the BV axiom list on homogeneous x, y, z: graded commutativity
    and associativity of the product, shifted Jacobi and antisymmetry,
    Leibniz, Δ² = 0, the bracket as the failure of Δ to be a derivation,
    and Δ as a derivation of the bracket.  Returns (ok, failures)."""
    kx, ky, kz = _mv_degree(x), _mv_degree(y), _mv_degree(z)
    fails = []

    def chk(name, lhs, rhs):
        if not (lhs - rhs).is_zero():
            fails.append(name)

    chk("commutativity", wedge(x, y), ((-1) ** (kx * ky)) * wedge(y, x))
    chk("associativity", wedge(wedge(x, y), z), wedge(x, wedge(y, z)))
    # bracket signs below are in the odd (degree -1) convention induced by
    # realizing the bracket as the deviation of Δ from being a derivation
    chk("antisymmetry", schouten(x, y),
        ((-1) ** (kx * ky)) * schouten(y, x))
    jac = schouten(x, schouten(y, z)) \
        + ((-1) ** kx) * schouten(schouten(x, y), z) \
        + ((-1) ** (kx * ky + kx + ky)) * schouten(y, schouten(x, z))
    chk("jacobi", jac, PolyMV.zero(x.d))
    chk("leibniz", schouten(x, wedge(y, z)),
        wedge(schouten(x, y), z)
        + ((-1) ** ((kx - 1) * ky)) * wedge(y, schouten(x, z)))
    chk("delta_squared", div(div(x)), PolyMV.zero(x.d))
    chk("bracket_failure", schouten(x, y),
        div(wedge(x, y)) - wedge(div(x), y)
        - ((-1) ** kx) * wedge(x, div(y)))
    chk("delta_bracket", div(schouten(x, y)),
        -1 * schouten(div(x), y)
        + (-(-1) ** kx) * schouten(x, div(y)))
    return not fails, fails


# ---------------------------------------------------------------------------
# multidifferential operators


class PolyDiffOp:
    """Polynomial multidifferential operator of arity n on formal R^d: a
    Q-linear combination of terms x^e ∂_{I_1}⊗…⊗∂_{I_n}, each I_j a
    multi-index (length-d exponent tuple)."""

    __slots__ = ("d", "n", "terms")

    def __init__(self, d, n, terms=None):
        self.d = d
        self.n = n
        self.terms = {}
        if terms:
            for (e, idcs), c in (terms.items() if isinstance(terms, dict)
                                 else terms):
                c = _fr(c)
                if not c:
                    continue
                key = (tuple(e), tuple(tuple(i) for i in idcs))
                assert len(key[1]) == n
                nc = self.terms.get(key, Fraction(0)) + c
                if nc:
                    self.terms[key] = nc
                elif key in self.terms:
                    del self.terms[key]

    @classmethod
    def zero(cls, d, n):
        return cls(d, n)

    def is_zero(self):
        return not self.terms

    def to_json(self):
        return [{"exp": list(e), "I": [list(i) for i in idcs],
                 "coeff": str(c)}
                for (e, idcs), c in sorted(self.terms.items())]

    @classmethod
    def from_json(cls, d, n, data):
        return cls(d, n, {(tuple(t["exp"]),
                           tuple(tuple(i) for i in t["I"])):
                          Fraction(t["coeff"]) for t in data})

    def __add__(self, other):
        assert (self.d, self.n) == (other.d, other.n)
        t = dict(self.terms)
        for k, c in other.terms.items():
            nc = t.get(k, Fraction(0)) + c
            if nc:
                t[k] = nc
            elif k in t:
                del t[k]
        return PolyDiffOp(self.d, self.n, t)

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, c):
        c = _fr(c)
        return PolyDiffOp(self.d, self.n,
                          {k: c * v for k, v in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, PolyDiffOp) and self.d == other.d \
            and self.n == other.n and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "PolyDiffOp(d=%d, n=%d, 0)" % (self.d, self.n)
        bits = []
        for (e, idcs), c in sorted(self.terms.items()):
            mon = "".join("x%d^%d" % (i + 1, r) for i, r in enumerate(e) if r)
            ops = "|".join(
                "".join("d%d^%d" % (i + 1, r) for i, r in enumerate(I) if r)
                or "id" for I in idcs)
            bits.append("%s*%s[%s]" % (c, mon or "1", ops))
        return "PolyDiffOp(%s)" % " + ".join(bits)

    def evaluate(self, polys):
        """Apply to a tuple of n polynomials (dicts exp -> Fraction)."""
        assert len(polys) == self.n
        out = {}
        for (e, idcs), c in self.terms.items():
            prod = {e: c}
            for I, p in zip(idcs, polys):
                q = poly_diff_multi(dict(p), I)
                if not q:
                    prod = {}
                    break
                prod = poly_mul(prod, q)
            for k, v in prod.items():
                nv = out.get(k, Fraction(0)) + v
                if nv:
                    out[k] = nv
                elif k in out:
                    del out[k]
        return out


def mult_op(d):
    """The multiplication operator μ(a, b) = a·b."""
    z = _zero_exp(d)
    return PolyDiffOp(d, 2, {(z, (z, z)): 1})


def identity_op(d):
    z = _zero_exp(d)
    return PolyDiffOp(d, 1, {(z, (z,)): 1})


def _index_splits(I, parts):
    """All ways to split multi-index I into `parts` multi-indices, with
    multinomial coefficients; yields (tuple_of_indices, coeff)."""
    d = len(I)
    out = [((), Fraction(1))]
    for _ in range(parts - 1):
        nxt = []
        for done, c in out:
            rem = tuple(I[l] - sum(J[l] for J in done) for l in range(d))
            for J in iproduct(*(range(r + 1) for r in rem)):
                cc = c
                for l in range(d):
                    cc *= _binom(rem[l], J[l])
                nxt.append((done + (tuple(J),), cc))
        out = nxt
    final = []
    for done, c in out:
        last = tuple(I[l] - sum(J[l] for J in done) for l in range(d))
        final.append((done + (last,), c))
    return final


def _binom(n, k):
    r = Fraction(1)
    for i in range(k):
        r = r * (n - i) / (i + 1)
    return r


def hoch_d(D):
    """Hochschild differential: (dD)(a_1..a_{n+1}) = a_1 D(a_2,…)
    + Σ_i (-1)^i D(a_1,…,a_i a_{i+1},…) + (-1)^{n+1} D(a_1,…,a_n) a_{n+1}."""
    d, n = D.d, D.n
    z = _zero_exp(d)
    out = {}

    def acc(key, c):
        nc = out.get(key, Fraction(0)) + c
        if nc:
            out[key] = nc
        elif key in out:
            del out[key]

    for (e, idcs), c in D.terms.items():
        acc((e, (z,) + idcs), c)
        acc((e, idcs + (z,)), ((-1) ** (n + 1)) * c)
        for i in range(1, n + 1):
            for (J, K), cc in [(s[0], s[1]) for s in
                               [(sp[0], sp[1]) for sp in
                                _index_splits(idcs[i - 1], 2)]]:
                nid = idcs[: i - 1] + (J, K) + idcs[i:]
                acc((e, nid), ((-1) ** i) * c * cc)
    return PolyDiffOp(d, n + 1, out)


def cup(f, g):
    """Cup product: (f ∪ g)(a_1..a_{m+n}) = f(a_1..a_m)·g(a_{m+1}..)."""
    assert f.d == g.d
    out = {}
    for (e1, i1), c1 in f.terms.items():
        for (e2, i2), c2 in g.terms.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            k = (e, i1 + i2)
            nc = out.get(k, Fraction(0)) + c1 * c2
            if nc:
                out[k] = nc
            elif k in out:
                del out[k]
    return PolyDiffOp(f.d, f.n + g.n, out)


def _insert_op(f, i, g):
    """f ∘_i g as multidifferential operators: slot i of f differentiates
    the product g(a_i,…); Leibniz-split the multi-index of slot i over g's
    coefficient and g's slots."""
    assert f.d == g.d and 1 <= i <= f.n
    d = f.d
    out = {}
    for (ef, idf), cf in f.terms.items():
        I = idf[i - 1]
        for split, cc in _index_splits(I, g.n + 1):
            J0, Js = split[0], split[1:]
            for (eg, idg), cg in g.terms.items():
                coeff_poly = poly_diff_multi({eg: Fraction(1)}, J0)
                if not coeff_poly:
                    continue
                nidg = tuple(tuple(a + b for a, b in zip(K, J))
                             for K, J in zip(idg, Js))
                nid = idf[: i - 1] + nidg + idf[i:]
                for e0, c0 in coeff_poly.items():
                    e = tuple(a + b for a, b in zip(ef, e0))
                    k = (e, nid)
                    nc = out.get(k, Fraction(0)) + cf * cg * cc * c0
                    if nc:
                        out[k] = nc
                    elif k in out:
                        del out[k]
    return PolyDiffOp(d, f.n + g.n - 1, out)


def circle(f, g):
    """Pre-Lie circle product: Σ_i (-1)^{(i-1)(|g|-1)} f ∘_i g, grading by
    arity minus one."""
    out = PolyDiffOp.zero(f.d, f.n + g.n - 1)
    for i in range(1, f.n + 1):
        out = out + ((-1) ** ((i - 1) * (g.n - 1))) * _insert_op(f, i, g)
    return out


def brace(f, gs):
    """Braces f{g_1,…,g_k}: sum over order-preserving multi-insertions
    with Gerstenhaber signs."""
    if not gs:
        return f
    from itertools import combinations
    out = None
    arities = [g.n for g in gs]
    res_n = f.n + sum(arities) - len(gs)
    out = PolyDiffOp.zero(f.d, res_n)
    for pos in combinations(range(1, f.n + 1), len(gs)):
        sign = sum((arities[s] - 1) * (pos[s] - 1 - s)
                   for s in range(len(gs)))
        term = f
        # insert from the right so earlier slot numbers stay valid
        for s in range(len(gs) - 1, -1, -1):
            term = _insert_op(term, pos[s], gs[s])
        out = out + ((-1) ** sign) * term
    return out


def adjoint_sigma(D):
    """Formal adjoint cyclic action: determined by the integral identity
    ∫ f_1 D(f_2,…,f_{n+1}) = ∫ f_2 D^σ(f_3,…,f_{n+1},f_1); algebraically,
    slot 1's multi-index is moved by iterated integration by parts, with
    sign (-1)^{|I_1|}, Leibniz-distributing over the coefficient, the other
    slots, and the new last slot (the old output multiplier)."""
    d, n = D.d, D.n
    assert n >= 1
    out = {}
    for (e, idcs), c in D.terms.items():
        I1 = idcs[0]
        s = (-1) ** sum(I1)
        # distribute I1 over: coefficient, slots 2..n, the new last slot
        for split, cc in _index_splits(I1, n + 1):
            Jc, Jmid, Jlast = split[0], split[1: n], split[n]
            coeff_poly = poly_diff_multi({e: Fraction(1)}, Jc)
            if not coeff_poly:
                continue
            nid = tuple(tuple(a + b for a, b in zip(idcs[j + 1], Jmid[j]))
                        for j in range(n - 1)) + (Jlast,)
            for e0, c0 in coeff_poly.items():
                k = (e0, nid)
                nc = out.get(k, Fraction(0)) + s * c * cc * c0
                if nc:
                    out[k] = nc
                elif k in out:
                    del out[k]
    return PolyDiffOp(d, n, out)


def connes_b(D):
    """B(D)(f_1,…,f_{n-1}) = Σ_{k=0}^{n} (-1)^k D^{σ^k}(1, f_1,…,f_{n-1});
    arity n-1."""
    d, n = D.d, D.n
    assert n >= 1
    out = PolyDiffOp.zero(d, n - 1)
    cur = D
    for k in range(0, n + 1):
        # insert the unit in slot 1: terms with a nonempty first index die
        part = {}
        for (e, idcs), c in cur.terms.items():
            if any(idcs[0]):
                continue
            k2 = (e, idcs[1:])
            nc = part.get(k2, Fraction(0)) + c
            if nc:
                part[k2] = nc
            elif k2 in part:
                del part[k2]
        out = out + ((-1) ** k) * PolyDiffOp(d, n - 1, part)
        cur = adjoint_sigma(cur)
    return out


HKR_FACTORIAL = False  # normalization: no 1/k! by default


def hkr(x):
    """Antisymmetrized multiderivation of a multivector field."""
    degs = x.degrees()
    assert len(degs) <= 1, "inhomogeneous multivector"
    k = degs.pop() if degs else 0
    d = x.d
    out = {}
    for (e, s), c in x.terms.items():
        for perm in permutations(range(k)):
            sign = 1
            for a in range(k):
                for b in range(a + 1, k):
                    if perm[a] > perm[b]:
                        sign = -sign
            idcs = tuple(
                tuple(1 if l == s[perm[j]] - 1 else 0 for l in range(d))
                for j in range(k))
            cc = c * sign
            if HKR_FACTORIAL:
                fact = 1
                for t in range(2, k + 1):
                    fact *= t
                cc = cc / fact
            key = (e, idcs)
            nc = out.get(key, Fraction(0)) + cc
            if nc:
                out[key] = nc
            elif key in out:
                del out[key]
    return PolyDiffOp(d, k, out)


# ---------------------------------------------------------------------------
# graph representations


def _apply_dxi_factor(state, t, l):
    """Apply the odd derivative d/dξ_l to factor t (1-based) of a tensor
    state: dict[tuple of (exp, odd)] -> coeff.  Koszul sign from passing
    the odd operator over the factors before t."""
    out = {}
    for fac, c in state.items():
        pre = sum(len(fac[u][1]) for u in range(t - 1))
        r = _dxi(fac[t - 1], l)
        if r is None:
            continue
        nk, sg = r
        nf = fac[: t - 1] + (nk,) + fac[t:]
        nc = out.get(nf, Fraction(0)) + c * sg * ((-1) ** pre)
        if nc:
            out[nf] = nc
        elif nf in out:
            del out[nf]
    return out


def _apply_dx_factor(state, t, l):
    out = {}
    for fac, c in state.items():
        e, s = fac[t - 1]
        if e[l - 1] == 0:
            continue
        ne = e[: l - 1] + (e[l - 1] - 1,) + e[l:]
        nf = fac[: t - 1] + ((ne, s),) + fac[t:]
        nc = out.get(nf, Fraction(0)) + c * e[l - 1]
        if nc:
            out[nf] = nc
        elif nf in out:
            del out[nf]
    return out


def graph_act(g, xs):
    """Action of a graph with only type-I vertices on multivector fields:
    Γ(X_1,…,X_m) = (Π_{(i,j)∈Γ} Σ_l ∂/∂x_l^{(j)} ∂/∂ξ_l^{(i)})(X_1⊗…⊗X_m),
    then wedge the factors together.  Accepts a Graph or LinComb."""
    if isinstance(g, LinComb):
        out = None
        for b, c in g.terms.items():
            v = graph_act(b, xs)
            out = c * v if out is None else out + c * v
        return out if out is not None else PolyMV.zero(xs[0].d)
    assert g.n == 0 and g.k == 0, "type-I graphs only"
    assert g.m == len(xs)
    d = xs[0].d
    state = {}
    for combo in iproduct(*(x.terms.items() for x in xs)):
        fac = tuple(k for k, _ in combo)
        c = Fraction(1)
        for _, cc in combo:
            c *= cc
        nc = state.get(fac, Fraction(0)) + c
        if nc:
            state[fac] = nc
    for (i, j) in g.edges:
        nxt = {}
        for l in range(1, d + 1):
            part = _apply_dxi_factor(state, i, l)
            part = _apply_dx_factor(part, j, l)
            for k, c in part.items():
                nc = nxt.get(k, Fraction(0)) + c
                if nc:
                    nxt[k] = nc
                elif k in nxt:
                    del nxt[k]
        state = nxt
    out = PolyMV.zero(d)
    for fac, c in state.items():
        v = PolyMV(d, {fac[0]: c})
        for t in range(1, len(fac)):
            v = wedge(v, PolyMV(d, {fac[t]: 1}))
        out = out + v
    return out


def graph_act_mixed(g, xs, d=None):
    """Mixed representation: a graph with m type-I and n type-II vertices
    acts on m multivector fields, yielding a multidifferential operator of
    arity n; type-II slots collect multi-indices and all remaining ξ are
    set to zero.  Graphs with internal vertices represent the trivial
    (zero) insertion and map to 0.  Accepts a Graph or LinComb."""
    if xs:
        d = xs[0].d
    if isinstance(g, LinComb):
        out = None
        for b, c in g.terms.items():
            if b.k > 0:
                continue
            v = graph_act_mixed(b, xs, d=d)
            out = c * v if out is None else out + c * v
        if out is None:
            n = next((b.n for b in g.terms), 0)
            return PolyDiffOp.zero(d if d else 1, n)
        return out
    assert g.m == len(xs)
    if d is None:
        raise ValueError("dimension required when there are no arguments")
    if g.k > 0:
        return PolyDiffOp.zero(d, g.n)
    state = {}
    for combo in iproduct(*(x.terms.items() for x in xs)):
        fac = tuple(k for k, _ in combo)
        c = Fraction(1)
        for _, cc in combo:
            c *= cc
        key = (fac, ((0,) * d,) * g.n)
        nc = state.get(key, Fraction(0)) + c
        if nc:
            state[key] = nc
    for (i, h) in g.edges:
        assert i > 0, "type-II vertices have no outgoing edges"
        nxt = {}
        for l in range(1, d + 1):
            for (fac, idcs), c in state.items():
                pre = sum(len(fac[u][1]) for u in range(i - 1))
                r = _dxi(fac[i - 1], l)
                if r is None:
                    continue
                nk, sg = r
                nfac = fac[: i - 1] + (nk,) + fac[i:]
                if h > 0:
                    e, s = nfac[h - 1]
                    if e[l - 1] == 0:
                        continue
                    ne = e[: l - 1] + (e[l - 1] - 1,) + e[l:]
                    nfac2 = nfac[: h - 1] + ((ne, s),) + nfac[h:]
                    key = (nfac2, idcs)
                    cc = c * sg * ((-1) ** pre) * e[l - 1]
                else:
                    j = -h
                    I = idcs[j - 1]
                    nI = I[: l - 1] + (I[l - 1] + 1,) + I[l:]
                    key = (nfac, idcs[: j - 1] + (nI,) + idcs[j:])
                    cc = c * sg * ((-1) ** pre)
                nc = nxt.get(key, Fraction(0)) + cc
                if nc:
                    nxt[key] = nc
                elif key in nxt:
                    del nxt[key]
        state = nxt
    out = {}
    for (fac, idcs), c in state.items():
        # set ξ = 0: all odd parts must be exhausted
        if any(s for _, s in fac):
            continue
        e = _zero_exp(d)
        for ef, _ in fac:
            e = tuple(a + b for a, b in zip(e, ef))
        key = (e, idcs)
        nc = out.get(key, Fraction(0)) + c
        if nc:
            out[key] = nc
        elif key in out:
            del out[key]
    # arity-dependent normalization so the graph bimodule differential
    # corresponds, under this map, to the Hochschild differential
    sg = (-1) ** (1 + g.n * (g.n + 1) // 2)
    return sg * PolyDiffOp(d, g.n, out)


def diffop_window(d, n, deg, order):
    """All multidifferential-operator basis keys with coefficient degree
    <= deg and each slot multi-index of total order <= order."""
    exps = [e for e in iproduct(range(deg + 1), repeat=d) if sum(e) <= deg]
    idcs = [e for e in iproduct(range(order + 1), repeat=d)
            if sum(e) <= order]
    return [(e, I) for e in exps for I in iproduct(idcs, repeat=n)]


def hoch_exact(target, deg, order):
    """Whether target (arity n >= 1) equals hoch_d of some arity n-1
    operator supported on the finite window (coefficient degree <= deg,
    slot orders <= order).  Exact rational solve."""
    from .linalg import ExactMatrix
    if target.is_zero():
        return True
    d, n = target.d, target.n
    assert n >= 1
    m = ExactMatrix()
    for key in diffop_window(d, n - 1, deg, order):
        img = hoch_d(PolyDiffOp(d, n - 1, {key: Fraction(1)}))
        if not img.is_zero():
            m.add_column(img.terms)
    return m.in_image(target.terms)


def equivariance_check(g, xs):
    """adjoint_sigma(graph_act_mixed(Γ, xs)) == graph_act_mixed(σΓ, xs)."""
    from .graphs import sigma
    lhs = adjoint_sigma(graph_act_mixed(g, xs))
    rhs = graph_act_mixed(sigma(g), xs)
    return (lhs - rhs).is_zero(), lhs, rhs
