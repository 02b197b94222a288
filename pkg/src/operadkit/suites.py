"""Registered verification suites.

Each suite is a function taking a RunConfig-style dict and returning a list
of report rows {"check", "status", "detail"}.  Statuses: "pass" / "fail"
for decidable assertions, "undecidable" when a finite-window membership
solve cannot certify the statement at the configured truncation, and
"info" for measured-but-not-required quantities.  Randomized suites draw
uniformly (via the seeded RNG) from enumerated truncated bases.

The registry maps suite names to (function, covered invariants); the
coverage map is what `verify --list` emits.
"""

import random
from fractions import Fraction
from itertools import combinations, product as iproduct

from .linalg import LinComb, ExactMatrix
from . import trees
from . import graphs as gr
from . import twisting as tw
from . import poly
from . import complexes


def _row(check, ok, detail=""):
    return {"check": check, "status": "pass" if ok else "fail",
            "detail": detail}


def _info(check, detail):
    return {"check": check, "status": "info", "detail": detail}


def _cfg(cfg, key, full, quick):
    if cfg.get(key) is not None:
        return cfg[key]
    return quick if cfg.get("quick") else full


def _rand_mv(rng, d, k, deg, nt=2):
    odds = list(combinations(range(1, d + 1), k))
    if not odds:
        return poly.PolyMV(d)
    t = {}
    for _ in range(nt):
        e = tuple(rng.randint(0, deg) for _ in range(d))
        t[(e, rng.choice(odds))] = Fraction(rng.randint(-2, 2))
    return poly.PolyMV(d, t)


def _rand_op(rng, d, n, deg, order, nt=2):
    keys = poly.diffop_window(d, n, deg, order)
    t = {}
    for _ in range(nt):
        t[rng.choice(keys)] = Fraction(rng.randint(-2, 2))
    return poly.PolyDiffOp(d, n, t)


def _rand_graph_pool(max_m, max_n, max_e, max_k=0, space=None):
    pool = []
    for m in range(0, max_m + 1):
        for n in range(0, max_n + 1):
            for k in range(0, max_k + 1):
                if m + k == 0:
                    continue
                for b in gr.enumerate_graphs(m, n, max_e, k=k):
                    if space is not None:
                        ok, _ = tw.subobject_filter(space, b)
                        if not ok:
                            continue
                    pool.append(b)
    return pool


def _act_lincomb(x, xs, d):
    out = None
    for b, c in x.terms.items():
        v = poly.graph_act(b, xs)
        out = c * v if out is None else out + c * v
    return out if out is not None else poly.PolyMV.zero(d)


# ---------------------------------------------------------------------------
# suites


def suite_cbr_d2(cfg):
    nmax = _cfg(cfg, "arity", 3, 2)
    rows = []
    for space in ("CBr", "Br"):
        for n in range(1, nmax + 1):
            basis = trees.enumerate_basis(space, n)
            if space == "Br":
                allowed = set(basis)
                diff = lambda b: complexes._restrict(
                    trees.differential(LinComb.single(b)), allowed)
            else:
                diff = lambda b: trees.differential(LinComb.single(b))
            bad = sum(1 for b in basis
                      if not diff(b).map_basis(diff).is_zero())
            rows.append(_row("d2-%s-%d" % (space.lower(), n), bad == 0,
                             "%d basis elements, %d failures"
                             % (len(basis), bad)))
    # internal-count filtration: the vertex-count-preserving part squares
    # to zero on its own (degree-0 page of the filtration)
    bad0 = 0
    for n in range(1, min(nmax, 2) + 1):
        for b in trees.enumerate_basis("CBr", n):
            if not trees.d0(trees.d0(b)).is_zero():
                bad0 += 1
    rows.append(_row("d0-squares-to-zero", bad0 == 0, "%d failures" % bad0))
    return rows


def suite_tw_d2(cfg):
    max_m = 2
    max_k = _cfg(cfg, "internal", 2, 1)
    max_e = _cfg(cfg, "max_edges", 4, 3)
    tot = bad = 0
    for m in range(0, max_m + 1):
        for k in range(0, max_k + 1):
            if m + k == 0:
                continue
            for b in gr.enumerate_graphs(m, 0, max_e, k=k):
                tot += 1
                if not tw.tw_differential(tw.tw_differential(b)).is_zero():
                    bad += 1
    return [_row("d2-twisted-one-colored", bad == 0,
                 "%d basis graphs, %d failures" % (tot, bad))]


def suite_bimodule_d2(cfg):
    max_e = _cfg(cfg, "max_edges", 3, 2)
    pool = _rand_graph_pool(2, 2, max_e, max_k=1, space="bvkgraphs")
    tot = bad_k0 = bad_internal = nonzero = 0
    for b in pool:
        tot += 1
        r = tw.tw_bimodule_differential(tw.tw_bimodule_differential(b))
        if not r.is_zero():
            nonzero += 1
        k0 = LinComb({g: c for g, c in r.terms.items() if g.k == 0})
        if not k0.is_zero():
            bad_k0 += 1
        if any(g.k == 0 for g in r.terms):
            bad_internal += 1
    rows = [
        _row("bimodule-d2-hochschild-part-vanishes", bad_k0 == 0,
             "%d basis graphs, %d failures" % (tot, bad_k0)),
        _row("bimodule-d2-residual-has-internal-vertex",
             bad_internal == 0,
             "%d basis graphs, %d failures" % (tot, bad_internal)),
        _info("bimodule-d2-full",
              "nonzero on %d of %d; the residual requires relations beyond "
              "the graph calculus (see tests for the expected failure)"
              % (nonzero, tot)),
    ]
    return rows


_CBR_HOMOLOGY = {1: {0: 1, -1: 1}, 2: {0: 1, -1: 3, -2: 3, -3: 1}}
_GER_DIM = {1: 1, 2: 2, 3: 6}


def suite_homology(cfg):
    nmax = _cfg(cfg, "arity", 3, 2)
    rows = []
    for n in range(1, nmax + 1):
        sl = complexes.assemble("cbr", arity=n)
        dims = sl.homology_dims()
        if n in _CBR_HOMOLOGY:
            rows.append(_row("homology-cbr-%d" % n,
                             dims == _CBR_HOMOLOGY[n], str(dims)))
        else:
            total = sum(dims.values())
            rows.append(_row("homology-cbr-%d-total" % n,
                             total == _GER_DIM[n] * 2 ** n, str(dims)))
        slb = complexes.assemble("br", arity=n)
        dimb = slb.homology_dims()
        rows.append(_row("homology-br-%d-total" % n,
                         sum(dimb.values()) == _GER_DIM[n], str(dimb)))
    return rows


def _f_map_source(n):
    elems = trees.enumerate_basis("Br", n)
    allowed = set(elems)
    bases = {}
    for t in elems:
        for eps in iproduct(("plain", "delta"), repeat=n):
            deg = trees.degree(t) - sum(e == "delta" for e in eps)
            bases.setdefault(deg, []).append((t, eps))

    def diff(b):
        t, eps = b
        out = LinComb.zero()
        for b2, c in trees.differential(LinComb.single(t)).terms.items():
            if b2 in allowed:
                out = out + LinComb.single((b2, eps), c)
        return out

    return complexes.assemble("custom", bases=bases, diff=diff)


def suite_chain_map(cfg):
    nmax = _cfg(cfg, "arity", 3, 2)
    rows = []
    f = lambda b: trees.f_map(b[0], b[1])
    for n in range(1, nmax + 1):
        src = _f_map_source(n)
        dst = complexes.assemble("cbr", arity=n)
        rows.append(_row("f-chain-map-%d" % n,
                         complexes.chain_map_check(src, dst, f)))
        if n <= 2:
            rows.append(_row("f-homology-iso-%d" % n,
                             complexes.induced_homology_iso(src, dst, f)))
    return rows


def suite_sigma_welldef(cfg):
    rng = random.Random(cfg.get("seed", 0))
    max_mn = _cfg(cfg, "arity", 3, 2)
    max_e = _cfg(cfg, "max_edges", 3, 2)
    tot = bad = 0
    for m in range(0, max_mn + 1):
        for n in range(0, max_mn + 1):
            if m == 0:
                continue
            for b in gr.enumerate_graphs(m, n, max_e):
                tot += 1
                if gr.sigma_pow(LinComb.single(b), n + 1) \
                        != LinComb.single(b):
                    bad += 1
    rows = [_row("sigma-order-graphs", bad == 0,
                 "%d basis graphs, %d failures" % (tot, bad))]
    trials = _cfg(cfg, "trials", 40, 10)
    d = min(cfg.get("dim") or 2, 2)
    bad_adj = 0
    for _ in range(trials):
        n = rng.randint(1, 3)
        D = _rand_op(rng, d, n, 1, 1)
        r = D
        for _ in range(n + 1):
            r = poly.adjoint_sigma(r)
        if not (r - D).is_zero():
            bad_adj += 1
    rows.append(_row("sigma-order-adjoint", bad_adj == 0,
                     "%d trials, %d failures" % (trials, bad_adj)))
    return rows


def suite_equivariance(cfg):
    rng = random.Random(cfg.get("seed", 0))
    trials = _cfg(cfg, "trials", 120, 25)
    pool = _rand_graph_pool(2, 2, 3)
    pool = [b for b in pool if b.n >= 1]
    done = bad = 0
    while done < trials:
        b = rng.choice(pool)
        d = rng.randint(1, min(cfg.get("dim") or 2, 2))
        xs = [_rand_mv(rng, d, rng.randint(0, d), 2) for _ in range(b.m)]
        if any(x.is_zero() for x in xs):
            continue
        done += 1
        ok, _, _ = poly.equivariance_check(b, xs)
        if not ok:
            bad += 1
    return [_row("equivariance", bad == 0,
                 "%d instances, %d failures" % (done, bad))]


def suite_bv_tpoly(cfg):
    rng = random.Random(cfg.get("seed", 0))
    trials = _cfg(cfg, "trials", 220, 40)
    dmax = _cfg(cfg, "dim", 3, 2)
    deg = _cfg(cfg, "poly_deg", 3, 2)
    counts = {}
    bad = 0
    for _ in range(trials):
        d = rng.randint(1, dmax)
        xs = [_rand_mv(rng, d, rng.randint(0, d), deg) for _ in range(3)]
        ok, fails = poly.bv_axioms(*xs)
        for name in fails:
            counts[name] = counts.get(name, 0) + 1
        bad += not ok
    rows = [_row("bv-axioms", bad == 0,
                 "%d triples, failures per axiom %s" % (trials, counts))]

    # graph realization of the bracket, global sign +1: the d = 1 oracle
    x = poly.PolyMV(1, {((1,), (1,)): 1})
    y = poly.PolyMV(1, {((0,), (1,)): 1})
    e12 = gr.graph(2, 0, [(1, 2)])
    e21 = gr.graph(2, 0, [(2, 1)])
    lhs = _act_lincomb(e12 + e21, [x, y], 1)
    ok0 = (lhs - poly.schouten(x, y)).is_zero() \
        and (poly.schouten(x, y) + y).is_zero()
    rows.append(_row("schouten-graph-oracle-d1", ok0))
    nz = bad2 = 0
    for _ in range(trials // 2):
        d = rng.randint(1, min(dmax, 2))
        x = _rand_mv(rng, d, rng.randint(0, d), 2)
        y = _rand_mv(rng, d, rng.randint(0, d), 2)
        e12 = gr.graph(2, 0, [(1, 2)])
        e21 = gr.graph(2, 0, [(2, 1)])
        lhs = _act_lincomb(e12 + e21, [x, y], d)
        rhs = poly.schouten(x, y)
        if not rhs.is_zero():
            nz += 1
        if not (lhs - rhs).is_zero():
            bad2 += 1
    rows.append(_row("schouten-graph-realization", bad2 == 0,
                     "%d instances (%d nonzero), %d failures"
                     % (trials // 2, nz, bad2)))
    # no-edge graph acts as the wedge product
    bad3 = 0
    for _ in range(10):
        d = rng.randint(1, min(dmax, 2))
        x = _rand_mv(rng, d, rng.randint(0, d), 2)
        y = _rand_mv(rng, d, rng.randint(0, d), 2)
        g0 = next(iter(gr.graph(2, 0, []).terms))
        if not (poly.graph_act(g0, [x, y]) - poly.wedge(x, y)).is_zero():
            bad3 += 1
    rows.append(_row("no-edge-acts-as-wedge", bad3 == 0))
    return rows


def suite_operad_morphism(cfg):
    rng = random.Random(cfg.get("seed", 0))
    trials = _cfg(cfg, "trials", 60, 15)
    done = bad = nz = 0
    while done < trials:
        d = rng.randint(1, 2)
        m1, m2 = rng.randint(1, 2), rng.randint(1, 2)
        g1 = rng.choice(gr.enumerate_graphs(m1, 0, 2))
        g2 = rng.choice(gr.enumerate_graphs(m2, 0, 2))
        i = rng.randint(1, m1)
        xs2 = [_rand_mv(rng, d, rng.randint(0, d), 1) for _ in range(m2)]
        xs1 = [_rand_mv(rng, d, rng.randint(0, d), 1)
               for _ in range(m1 - 1)]
        done += 1
        lhs = _act_lincomb(gr.compose_typeI(g1, i, g2),
                           xs1[:i - 1] + xs2 + xs1[i - 1:], d)
        inner = poly.graph_act(g2, xs2)
        rhs = poly.graph_act(g1, xs1[:i - 1] + [inner] + xs1[i - 1:])
        if not rhs.is_zero():
            nz += 1
        if not (lhs - rhs).is_zero():
            bad += 1
    return [_row("graph-act-operad-morphism", bad == 0,
                 "%d instances (%d nonzero), %d failures"
                 % (done, nz, bad))]


def suite_mc(cfg):
    rng = random.Random(cfg.get("seed", 0))
    rows = []
    ok, res = tw.mc_check(tw.MC_MU, degree=2)
    rows.append(_row("mc-graph-mu", ok and len(tw.MC_MU) == 1))
    d = min(cfg.get("dim") or 2, 2)
    m = poly.mult_op(d)
    ok2 = poly.hoch_d(m).is_zero() and poly.circle(m, m).is_zero()
    rows.append(_row("mc-hochschild-multiplication", ok2))
    mu = next(iter(tw.MC_MU.terms))
    ok3 = (poly.graph_act_mixed(mu, [], d=d) - m).is_zero()
    rows.append(_row("rep-of-mu-is-multiplication", ok3))

    trials = _cfg(cfg, "trials", 60, 15)
    pool = _rand_graph_pool(2, 2, 3)
    done = bad = nz = 0
    while done < trials:
        b = rng.choice(pool)
        dd = rng.randint(1, 2)
        xs = [_rand_mv(rng, dd, rng.randint(0, dd), 2) for _ in range(b.m)]
        if any(x.is_zero() for x in xs):
            continue
        done += 1
        lhs = poly.graph_act_mixed(tw.tw_bimodule_differential(b), xs, d=dd)
        rhs = poly.hoch_d(poly.graph_act_mixed(b, xs, d=dd))
        if not rhs.is_zero():
            nz += 1
        if (lhs.d, lhs.n) != (rhs.d, rhs.n):
            if not (lhs.is_zero() and rhs.is_zero()):
                bad += 1
        elif not (lhs - rhs).is_zero():
            bad += 1
    rows.append(_row("bimodule-differential-is-hochschild-under-rep",
                     bad == 0, "%d instances (%d nonzero), %d failures"
                     % (done, nz, bad)))
    return rows


def suite_closure(cfg):
    rng = random.Random(cfg.get("seed", 0))
    trials = _cfg(cfg, "trials", 80, 20)
    rows = []
    for space, dfun, max_k in (("bvgraphs", tw.tw_differential, 2),
                               ("bvkgraphs", tw.tw_bimodule_differential, 1)):
        pool = _rand_graph_pool(2, 0 if space == "bvgraphs" else 2, 3,
                                max_k=max_k, space=space)
        badd = badc = 0
        for _ in range(trials):
            b = rng.choice(pool)
            ok, off = tw.subobject_filter(space, dfun(b))
            if not ok:
                badd += 1
            b2 = rng.choice(pool)
            if b2.m >= 1:
                i = rng.randint(1, b.m) if b.m else 1
                if b.m and b2.n == 0:
                    comp = gr.compose_typeI(b, i, b2)
                    ok2, _ = tw.subobject_filter(space, comp)
                    if not ok2:
                        badc += 1
        rows.append(_row("closure-differential-%s" % space, badd == 0,
                         "%d trials, %d failures" % (trials, badd)))
        rows.append(_row("closure-composition-%s" % space, badc == 0,
                         "%d trials, %d failures" % (trials, badc)))
    return rows


def suite_cpt_action(cfg):
    rows = []
    mu = tw.MC_MU
    # braces generator of arity 1 acts as the identity
    t11 = trees.gen_t(1, 1)
    rows.append(_row("action-t11-identity",
                     tw.cpt_action(t11, [mu]) == mu))
    # arity-2 braces on (mu, mu) agrees with the pre-Lie line insertion
    t12 = trees.gen_t(2, 1)
    lhs = tw.cpt_action(t12, [mu, mu])
    rows.append(_row("action-t12-circle",
                     lhs == tw.circle_line(mu, mu) and lhs.is_zero()))
    # gap-generator oracle: the unit insertion on the single-edge graph
    # gives -2 times the tadpole
    g11 = gr.graph(1, 1, [(1, -1)])
    got = tw.cpt_action(trees.gen_t_gap(1, 0), [g11])
    rows.append(_row("action-gap-oracle",
                     got == (-2) * gr.graph(1, 0, [(1, 1)])))
    pool = _rand_graph_pool(2, 2, 2, max_k=0, space="bvkgraphs")
    rng = random.Random(cfg.get("seed", 0))
    trials = _cfg(cfg, "trials", 40, 10)
    bad = 0
    for _ in range(trials):
        b = rng.choice(pool)
        t = rng.choice([trees.gen_t(1, 1), trees.gen_t_gap(1, 0),
                        trees.gen_t_gap(1, 1)])
        out = tw.cpt_action(t, [LinComb.single(b)])
        ok, _ = tw.subobject_filter("bvkgraphs", out) if not out.is_zero() \
            else (True, [])
        if not ok:
            bad += 1
    rows.append(_row("action-preserves-subspace", bad == 0,
                     "%d trials, %d failures" % (trials, bad)))
    return rows


def suite_cyclic_descent(cfg):
    rng = random.Random(cfg.get("seed", 0))
    trials = _cfg(cfg, "trials", 36, 10)
    rows = []
    okb = all((poly.connes_b(poly.mult_op(d)) - poly.identity_op(d))
              .is_zero() for d in (1, 2))
    rows.append(_row("b-of-multiplication-is-identity", okb))
    done = passed = trivial = failed = undecid = 0
    while done < trials:
        d = rng.randint(1, 2)
        if rng.random() < 0.6:
            D = poly.hoch_d(_rand_op(rng, d, rng.randint(1, 2), 1, 1))
        else:
            k = rng.randint(1, min(2, d))
            D = poly.hkr(_rand_mv(rng, d, k, 1))
        if D.is_zero() or D.n < 2:
            continue
        if not poly.hoch_d(D).is_zero():
            continue
        done += 1
        t = poly.hoch_d(poly.connes_b(D))
        if t.is_zero():
            trivial += 1
        elif poly.hoch_exact(t, 3, 2):
            passed += 1
        elif poly.hoch_exact(t, 4, 3):
            passed += 1
        else:
            undecid += 1
    detail = "%d cocycles: %d exact, %d trivially zero, %d undecidable" \
        % (done, passed, trivial, undecid)
    if undecid:
        rows.append({"check": "b-descends-to-cohomology",
                     "status": "undecidable", "detail": detail})
    else:
        rows.append(_row("b-descends-to-cohomology", failed == 0, detail))
    return rows


BV_COMPAT_CONSTANT = Fraction(1)


def suite_bv_compat(cfg):
    rng = random.Random(cfg.get("seed", 0))
    trials = _cfg(cfg, "trials", 60, 15)
    rows = []
    c = BV_COMPAT_CONSTANT
    # the degree-1 instance determines the constant: both sides are the
    # constant operator 1
    X = poly.PolyMV(1, {((1,), (1,)): 1})
    lhs = poly.connes_b(poly.hkr(X))
    rhs = poly.hkr(poly.div(X))
    rows.append(_row("bv-compat-degree-1-constant",
                     (lhs - c * rhs).is_zero(), "c = %s" % c))
    done = exact = inimg = undecid = failed = 0
    while done < trials:
        d = rng.randint(1, 2)
        k = rng.randint(1, min(2, d))
        X = _rand_mv(rng, d, k, 2)
        if X.is_zero():
            continue
        done += 1
        a = poly.connes_b(poly.hkr(X))
        dv = poly.div(X)
        diff = a if dv.is_zero() else a - c * poly.hkr(dv)
        if diff.is_zero():
            exact += 1
        elif diff.n >= 1 and poly.hoch_exact(diff, 4, 3):
            inimg += 1
        elif diff.n >= 1:
            undecid += 1
        else:
            failed += 1
    detail = "%d instances: %d chain-level zero, %d exact in im(d), " \
        "%d undecidable, %d failed" % (done, exact, inimg, undecid, failed)
    if failed:
        rows.append(_row("bv-compat-global", False, detail))
    elif undecid:
        rows.append({"check": "bv-compat-global", "status": "undecidable",
                     "detail": detail})
    else:
        rows.append(_row("bv-compat-global", True, detail))
    return rows


def suite_cbr_identity(cfg):
    delta = trees.Tree(1, 1, ())
    mu_rep = trees.corolla(0, [1, 2], 0)
    lhs = trees.normalize(trees.compose(delta, 1, mu_rep))
    c1 = trees.normalize(trees.compose(mu_rep, 1, delta))
    c2 = trees.normalize(trees.compose(mu_rep, 2, delta))
    ch1 = trees.normalize(LinComb.single(trees.Tree(1, 0,
                                                    (trees.Tree(2, 0, ()),))))
    ch2 = trees.normalize(LinComb.single(trees.Tree(2, 0,
                                                    (trees.Tree(1, 0, ()),))))
    r = lhs - ch1 - ch2 - c1 - c2
    m = ExactMatrix()
    cols = []
    for u in trees.enumerate_basis("CBr", 2):
        if trees.degree(u) != -2:
            continue
        du = trees.differential(LinComb.single(u))
        if not du.is_zero():
            m.add_column(du)
            cols.append(u)
    sol = m.solve(r)
    rows = [_row("delta-of-product-identity", sol is not None,
                 "residual %s, d-term %s"
                 % ("zero" if r.is_zero() else "nonzero",
                    "solved" if sol is not None else "missing"))]
    if sol is not None:
        u = LinComb.zero()
        for t, cv in zip(cols, sol):
            u = u + cv * LinComb.single(t)
        du = trees.differential(u)
        rows.append(_row("delta-of-product-identity-d-term",
                         (du - r).is_zero()))
    return rows


SUITES = {
    "cbr-d2": (suite_cbr_d2, [
        "d^2 = 0 on the full CBr(n) and Br(n) bases",
        "the vertex-count-preserving differential part squares to zero",
    ]),
    "tw-d2": (suite_tw_d2, [
        "d^2 = 0 for the twisted differential on one-colored graphs "
        "(truncated basis)",
    ]),
    "bimodule-d2": (suite_bimodule_d2, [
        "the type-II splitting part of the bimodule differential squares "
        "to zero on 0-internal graphs",
        "every bimodule d^2 residual term has an internal vertex",
    ]),
    "homology": (suite_homology, [
        "homology dimensions of CBr(1), CBr(2) (and CBr(3) total)",
        "homology of Br(n) has the Gerstenhaber dimensions",
    ]),
    "chain-map": (suite_chain_map, [
        "the comparison map is a chain map",
        "the comparison map induces homology isomorphisms",
    ]),
    "sigma-welldef": (suite_sigma_welldef, [
        "sigma^{n+1} = id on graph bases",
        "adjoint_sigma^{n+1} = id on random operators",
    ]),
    "equivariance": (suite_equivariance, [
        "adjoint_sigma intertwines the mixed graph representation with "
        "the graph rotation",
    ]),
    "bv-tpoly": (suite_bv_tpoly, [
        "BV algebra axioms on multivector fields",
        "the two-edge graph sum acts as the Schouten bracket (global "
        "sign fixed by the d=1 oracle)",
        "the edgeless graph acts as the wedge product",
    ]),
    "operad-morphism": (suite_operad_morphism, [
        "graph_act turns graph insertion into operadic composition of "
        "the actions",
    ]),
    "mc": (suite_mc, [
        "the edgeless two-slot graph and the Hochschild multiplication "
        "satisfy Maurer-Cartan",
        "the mixed representation sends the graph mu to the multiplication",
        "the bimodule differential maps to the Hochschild differential "
        "under the representation",
    ]),
    "closure": (suite_closure, [
        "differentials stay inside the distinguished graph subspaces "
        "after cancellation",
        "compositions stay inside the distinguished graph subspaces",
    ]),
    "cpt-action": (suite_cpt_action, [
        "the arity-1 braces generator acts as the identity",
        "the arity-2 braces generator agrees with the line insertion",
        "the tree action preserves the distinguished graph subspace",
    ]),
    "cyclic-descent": (suite_cyclic_descent, [
        "B of the multiplication is the identity operator",
        "hoch_d(B(D)) is hoch_d-exact for random cocycles D (finite-"
        "window membership solves)",
    ]),
    "bv-compat": (suite_bv_compat, [
        "a single rational constant c relates B∘hkr and hkr∘div modulo "
        "hoch_d-exact terms (c = 1, fixed on the degree-1 instance)",
    ]),
    "cbr-identity": (suite_cbr_identity, [
        "the arity-2 identity for Delta of the product holds exactly "
        "with an explicit d-term",
    ]),
}


def run_suite(name, cfg=None):
    if name not in SUITES:
        raise KeyError("unregistered suite %r" % name)
    fn, _ = SUITES[name]
    return fn(dict(cfg or {}))


def coverage_map():
    return {name: invs for name, (fn, invs) in SUITES.items()}
