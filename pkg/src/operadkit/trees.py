"""Rooted planar trees with angular marks: the tree operads behind the
cyclic braces construction.

A basis tree has external vertices (labeled 1..n, each exactly once) and
internal vertices (label 0, unlabeled among themselves, degree +2 each).
Around a vertex of valence v (parent edge or root stem, plus children) there
are 2v angular positions: even position 2a lies on half-edge a (0 = parent),
odd position 2a+1 lies in the gap after half-edge a.  Every external vertex
carries exactly one mark.  A mark in a gap stands for a unit-leg attached
there, carrying the mark; it contributes -1 to the degree.  Edges are odd
(degree -1): basis trees carry an implicit canonical ordering of their odd
items (edges in depth-first order, then legs in depth-first order), and all
operations account for the sign of re-sorting into it.

Internal vertices in the quotient normal form carry either no mark (all edge
positions are identified) or a gap mark (a unit-leg).  The normal form also
contracts any internal vertex whose only attachments are its parent (or the
root stem), one child, and a marked leg, replacing it by a bare edge.

Composition at a vertex j: the guest tree's root stem is glued along the
mark of j (onto the marked half-edge, or onto j's leg), and the remaining
half-edges of j are distributed over the guest's boundary contour in every
order-preserving planar way.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement, permutations, product

from .linalg import LinComb, perm_parity


@dataclass(frozen=True)
class Tree:
    label: int        # 0 for internal, 1..n for external
    mark: object      # angular position 0..2v-1, or None (internal, erased)
    children: tuple

    def sort_key(self):
        m = -1 if self.mark is None else self.mark
        return (self.label, m, tuple(c.sort_key() for c in self.children))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def to_json(self):
        d = {"label": self.label, "children": [c.to_json() for c in self.children]}
        if self.mark is None:
            d["mark"] = None
        elif self.mark % 2 == 0:
            d["mark"] = {"type": "edge", "index": self.mark // 2}
        else:
            d["mark"] = {"type": "gap", "index": self.mark // 2}
        return d

    @classmethod
    def from_json(cls, d):
        m = d.get("mark")
        if m is not None:
            m = 2 * m["index"] + (1 if m["type"] == "gap" else 0)
        return cls(d["label"], m, tuple(cls.from_json(c) for c in d.get("children", ())))


def t_vertices(t):
    yield t
    for c in t.children:
        yield from t_vertices(c)


def arity(t):
    return sum(1 for v in t_vertices(t) if v.label > 0)


def labels(t):
    return sorted(v.label for v in t_vertices(t) if v.label > 0)


def n_internal(t):
    return sum(1 for v in t_vertices(t) if v.label == 0)


def n_legs(t):
    return sum(1 for v in t_vertices(t) if v.mark is not None and v.mark % 2 == 1)


def degree(t):
    nv = sum(1 for _ in t_vertices(t))
    return 2 * n_internal(t) - (nv - 1) - n_legs(t)


def deg_of(x):
    """Degree of a homogeneous LinComb of trees."""
    degs = {degree(b) for b in x.terms}
    assert len(degs) == 1, "not homogeneous: %s" % degs
    return degs.pop()


def corolla(root_label, child_labels, mark):
    """Corolla with the given root label (0 = internal), external children
    in the given planar order, and the root's mark at angular position
    `mark`; children are marked toward their parent."""
    kids = tuple(Tree(l, 0, ()) for l in child_labels)
    return Tree(root_label, mark, kids)


def gen_t(n, i):
    """Arity-n corolla, root labeled 1, children 2..n, mark toward vertex i
    (i = 1 means toward the root stem)."""
    assert 1 <= i <= n
    return corolla(1, range(2, n + 1), 0 if i == 1 else 2 * (i - 1))


def gen_t_gap(n, i):
    """Arity-n corolla with the root's mark in the gap between the
    directions of vertices i and i+1 (cyclically; i = 0 means the gap
    opening at the stem, i = n wraps back to the stem)."""
    assert 0 <= i <= n
    if i == 0:
        return corolla(1, range(2, n + 1), 1)
    return corolla(1, range(2, n + 1), 2 * (i - 1) + 1)


# ---------------------------------------------------------------------------
# fat-graph surgery


def _to_fat(t, prefix):
    """Unfold a nested tree into (vertices, edges, items).

    vertices: vid -> {label, ports (cyclic list), mark (port index or None)}
    edges: eid -> [vid, vid] (parent side first, purely informational)
    items: canonical odd-item order, edges depth-first then legs depth-first.
    """
    vertices = {}
    edges = {}
    eorder = []
    legs = []
    counter = [0]

    def rec(node, parent_port):
        vid = counter[0]
        counter[0] += 1
        ports = [parent_port]
        rec_later = []
        for ch in node.children:
            eid = ("e", prefix, len(eorder))
            eorder.append(eid)
            edges[eid] = [vid, None]
            ports.append(("e", eid))
            rec_later.append((ch, eid))
        mark = None
        if node.mark is not None:
            if node.mark % 2 == 0:
                mark = node.mark // 2
            else:
                a = node.mark // 2
                lid = ("l", prefix, vid)
                ports.insert(a + 1, ("leg", lid))
                mark = a + 1
                legs.append((vid, lid))
        vertices[vid] = {"label": node.label, "ports": ports, "mark": mark}
        for ch, eid in rec_later:
            edges[eid][1] = rec(ch, ("e", eid))
        return vid

    rec(t, ("stem",))
    # canonical item order comes from the same traversal _from_fat uses,
    # so the two conventions can never drift apart
    back, items = _from_fat(vertices, edges)
    assert back == t, (back, t)
    return vertices, edges, items


def _from_fat(vertices, edges):
    """Fold a fat graph back into a nested tree.

    Returns (tree, items) with items in the canonical order of the result,
    or (None, None) when the configuration is zero (a vertex has a leg but
    its mark elsewhere).
    """
    stem_at = None
    for vid, v in vertices.items():
        for q, p in enumerate(v["ports"]):
            if p == ("stem",):
                assert stem_at is None
                stem_at = (vid, q)
    assert stem_at is not None
    eorder = []
    legs = []
    bad = [False]

    def rec(vid, enter_idx):
        v = vertices[vid]
        ports = v["ports"]
        L = len(ports)
        rot = [ports[(enter_idx + o) % L] for o in range(L)]
        mark_port = None if v["mark"] is None else ports[v["mark"]]
        kids = []
        mark = None
        leg_here = None
        h = 0  # half-edge index of the most recent edge/stem port seen
        pending = []
        for q in range(1, L):
            p = rot[q]
            if p[0] == "leg":
                if leg_here is not None:
                    bad[0] = True
                leg_here = p
                if p == mark_port:
                    mark = 2 * h + 1
            else:
                h += 1
                if p == mark_port:
                    mark = 2 * h
                pending.append(p[1])
        if mark_port == rot[0]:
            mark = 0
        if leg_here is not None:
            legs.append(p_leg := leg_here[1])
            if mark is None or mark % 2 == 0:
                bad[0] = True
        if v["mark"] is not None and mark is None:
            bad[0] = True
        for eid in pending:
            eorder.append(eid)
            a, b = edges[eid]
            other = b if a == vid else a
            kids.append(rec2(other, eid))
        return Tree(v["label"], mark, tuple(kids))

    def rec2(vid, eid):
        ports = vertices[vid]["ports"]
        enter = ports.index(("e", eid))
        return rec(vid, enter)

    # legs must come out in depth-first vertex order: interleave by doing a
    # first pass that records them in traversal order
    tree = rec(*stem_at)
    if bad[0]:
        return None, None
    # recompute leg order depth-first (rec above appended at visit time but
    # child recursion happens after the vertex's own leg, which is the
    # depth-first convention already)
    return tree, eorder_with_legs(tree, eorder, legs)


def eorder_with_legs(tree, eorder, legs):
    return list(eorder) + list(legs)


def _perm_sign(constructed, canonical):
    assert set(constructed) == set(canonical) and len(constructed) == len(canonical)
    pos = {it: i for i, it in enumerate(canonical)}
    return perm_parity([pos[it] for it in constructed])


def _contour(vertices, edges, start_vid, start_idx):
    """Corners of the planar boundary walk, starting just after the given
    port.  A corner (vid, q) is the gap following ports[q] of vertex vid."""
    corners = []

    def walk(vid, enter_idx):
        ports = vertices[vid]["ports"]
        L = len(ports)
        for off in range(L):
            idx = (enter_idx + off) % L
            corners.append((vid, idx))
            if off < L - 1:
                nxt = ports[(idx + 1) % L]
                if nxt[0] == "e":
                    eid = nxt[1]
                    a, b = edges[eid]
                    other = b if a == vid else a
                    walk(other, vertices[other]["ports"].index(nxt))

    walk(start_vid, start_idx)
    return corners


def _relabel(t, f):
    return Tree(f(t.label) if t.label else 0, t.mark,
                tuple(_relabel(c, f) for c in t.children))


def compose(t1, j, t2, at_internal=None):
    """Planar insertion of t2 at vertex j of t1, as a LinComb of trees.

    j is an external label of t1; alternatively `at_internal` gives the
    depth-first index of an internal vertex of t1 (then t2 must have a
    single external vertex which becomes internal, and no relabeling
    happens).
    """
    if isinstance(t1, LinComb):
        return t1.map_basis(lambda b: compose(b, j, t2, at_internal))
    if isinstance(t2, LinComb):
        out = LinComb.zero()
        for b2, c2 in t2.terms.items():
            out = out + c2 * compose(t1, j, b2, at_internal)
        return out

    n2 = arity(t2)
    if at_internal is None:
        t1 = _relabel(t1, lambda l: l if l < j else (l + n2 - 1 if l > j else j))
        t2 = _relabel(t2, lambda l: l + j - 1)
        internalize = False
    else:
        internalize = True

    v1, e1, items1 = _to_fat(t1, "h")
    v2, e2, items2 = _to_fat(t2, "g")

    if at_internal is None:
        J = next(vid for vid, v in v1.items() if v["label"] == j)
    else:
        J = [vid for vid in sorted(v1) if v1[vid]["label"] == 0][at_internal]
        if v1[J]["mark"] is None:
            v1[J]["mark"] = 0  # representative of the erased mark class

    jv = v1[J]
    m = jv["mark"]
    glue = jv["ports"][m]
    rem = [jv["ports"][(m + o) % len(jv["ports"])] for o in range(1, len(jv["ports"]))]

    # root of t2 and its stem slot
    R = next(vid for vid, v in v2.items() if ("stem",) in v["ports"])
    s = v2[R]["ports"].index(("stem",))

    if glue[0] == "leg" and v2[R]["mark"] != s:
        return LinComb.zero()

    corners = _contour(v2, e2, R, s)
    out = LinComb.zero()
    for assign in combinations_with_replacement(range(len(corners)), len(rem)):
        nv = {}
        ne = {}
        for vid, v in v1.items():
            if vid == J:
                continue
            nv[("h", vid)] = {"label": v["label"], "ports": list(v["ports"]),
                              "mark": v["mark"]}
        for vid, v in v2.items():
            lbl = v["label"]
            if internalize and lbl > 0:
                lbl = 0
            nv[("g", vid)] = {"label": lbl, "ports": list(v["ports"]),
                              "mark": v["mark"]}
        for eid, (a, b) in e1.items():
            ne[eid] = [("h", a) if a != J else None, ("h", b) if b != J else None]
        for eid, (a, b) in e2.items():
            ne[eid] = [("g", a), ("g", b)]

        # distribute the remaining half-edges of J over the corners of t2
        per_vertex = {}
        for item, ci in zip(rem, assign):
            cvid, cq = corners[ci]
            per_vertex.setdefault(("g", cvid), []).append((ci, cq, item))
        for gvid, ins in per_vertex.items():
            ports = nv[gvid]["ports"]
            markp = None if nv[gvid]["mark"] is None else ports[nv[gvid]["mark"]]
            newports = []
            for q, p in enumerate(ports):
                newports.append(p)
                for ci, cq, item in ins:
                    if cq == q:
                        newports.append(item)
                        if item[0] == "e":
                            end = ne[item[1]]
                            end[end.index(None)] = gvid
            nv[gvid]["ports"] = newports
            if markp is not None:
                nv[gvid]["mark"] = newports.index(markp)

        # glue t2's stem slot
        gR = ("g", R)
        ports = nv[gR]["ports"]
        si = ports.index(("stem",))
        items = list(items1) + list(items2)
        if glue[0] == "leg":
            ports[si] = glue  # the leg (and its mark) transfers to the root
        else:
            ports[si] = glue
            if glue[0] == "e":
                end = ne[glue[1]]
                end[end.index(None)] = gR
        if nv[gR]["mark"] is not None and nv[gR]["mark"] == si and glue[0] != "leg":
            pass  # mark now points at the glued half-edge

        tree, canon = _from_fat(nv, ne)
        if tree is None:
            continue
        out = out + LinComb.single(tree, _perm_sign(items, canon))
    return out


# ---------------------------------------------------------------------------
# quotient normal form

def _strip(t):
    if t.label == 0 and t.mark is not None and t.mark % 2 == 0:
        t = Tree(0, None, t.children)
    return Tree(t.label, t.mark, tuple(_strip(c) for c in t.children))


def _find_contractible(t, path=()):
    """Depth-first path to an internal vertex with exactly one child and a
    marked leg (the bare-edge relation), or None."""
    if t.label == 0 and len(t.children) == 1 and t.mark is not None and t.mark % 2 == 1:
        return path
    for i, c in enumerate(t.children):
        got = _find_contractible(c, path + (i,))
        if got is not None:
            return got
    return None


def _contract_once(t):
    """Contract the first bare-edge fragment; returns (tree, sign)."""
    path = _find_contractible(t)
    if path is None:
        return t, 1
    v, e, items = _to_fat(t, "h")
    # locate the fat vertex by path
    vid = 0

    def descend(node, nvid, path):
        if not path:
            return nvid
        # children vids: recompute depth-first numbering
        cnt = [nvid + 1]
        for i, c in enumerate(node.children):
            if i == path[0]:
                return descend(c, cnt[0], path[1:])
            cnt[0] += sum(1 for _ in t_vertices(c))
        raise AssertionError

    U = descend(t, 0, path)
    u = v[U]
    assert u["label"] == 0 and len(u["ports"]) == 3
    parent_p = u["ports"][0]
    child_p = next(p for p in u["ports"][1:] if p[0] == "e")
    leg_p = next(p for p in u["ports"][1:] if p[0] == "leg")
    # the two mirror orientations of the fragment contract with opposite
    # signs: leg after the child edge is +, leg before it is -
    chir = 1 if u["ports"][2][0] == "leg" else -1
    ec = child_p[1]
    child_v = e[ec][1] if e[ec][0] == U else e[ec][0]
    cports = v[child_v]["ports"]
    ci = cports.index(child_p)
    cmark = v[child_v]["mark"]
    if parent_p == ("stem",):
        cports[ci] = ("stem",)
    else:
        cports[ci] = parent_p
        ep = parent_p[1]
        end = e[ep]
        end[end.index(U)] = child_v
    del v[U]
    del e[ec]
    p1 = items.index(ec)
    p2 = items.index(leg_p[1])
    lo, hi = min(p1, p2), max(p1, p2)
    sign = chir * (-1) ** (hi - lo - 1)
    items = [it for it in items if it not in (ec, leg_p[1])]
    tree, canon = _from_fat(v, e)
    assert tree is not None
    return_sign = sign * _perm_sign(items, canon)
    t2, s2 = _contract_once(tree)
    return t2, return_sign * s2


def normalize(x):
    """Quotient normal form: erase internal edge-marks, contract bare-edge
    fragments, and drop trees that keep a unit-leg on an internal vertex
    (the erased mark can no longer point at it, so the tree is zero in the
    forced-mark quotient).  Linear over LinCombs."""
    if isinstance(x, Tree):
        x = LinComb.single(x)
    out = LinComb.zero()
    for b, c in x.terms.items():
        t = _strip(b)
        t, s = _contract_once(t)
        if any(v.mark is not None for v in t_vertices(t) if v.label == 0):
            continue
        out = out + LinComb.single(t, s * c)
    return out


cbr_normalize = normalize


def is_reduced(t):
    """Whether every internal vertex is unmarked with at least two children
    (the normal form for the quotient; under-valent terms must cancel in any
    differential output)."""
    return all(v.mark is None and len(v.children) >= 2
               for v in t_vertices(t) if v.label == 0)


# ---------------------------------------------------------------------------
# twisted differential

LAM1 = Tree(0, 0, (Tree(1, 0, ()),))   # internal root over external vertex
LAM2 = Tree(1, 0, (Tree(0, 0, ()),))   # external root over internal vertex
LAMI = Tree(0, 0, (Tree(0, 0, ()),))   # both internal

# global sign choices, pinned by the d^2 = 0 and closure suites
SIGN_B = -1
SIGN_C = -1


def _remark(t):
    """Pick the stem representative for erased internal marks so the raw
    differential can be evaluated on normal forms (the result does not
    depend on this choice after normalization)."""
    mk = 0 if (t.label == 0 and t.mark is None) else t.mark
    return Tree(t.label, mk, tuple(_remark(c) for c in t.children))


def differential(x, normal=True):
    """Twisted differential: bracket with the one-internal-vertex element
    plus internal vertex splitting.  Input and output are LinCombs of trees
    (in quotient normal form when `normal`; under-valent internal vertices
    must then cancel, which is asserted)."""
    if isinstance(x, Tree):
        x = LinComb.single(x)
    out = LinComb.zero()
    for b, c in x.terms.items():
        if normal:
            b = _remark(b)
        d = degree(b)
        sgn = (-1) ** d
        term = compose(LAM1, 1, b) + compose(LAM2, 1, b)
        for i in labels(b):
            term = term + (SIGN_B * sgn) * (compose(b, i, LAM1) + compose(b, i, LAM2))
        for vi in range(n_internal(b)):
            term = term + (SIGN_C * sgn) * compose(b, None, LAMI, at_internal=vi)
        out = out + c * term
    if not normal:
        return out
    out = normalize(out)
    for b in out.terms:
        assert is_reduced(b), b
    return out


# ---------------------------------------------------------------------------
# generators, bases, comparison map

def generator(kind, n, i):
    """Named corolla generators.  kind 'T' / 'Tgap' build an external-rooted
    arity-n corolla with the mark on edge i (i = 1 is the stem) or in gap i
    (0 = before the first child); 'Tint' / 'Tintgap' build the internal-rooted
    arity-n corolla with the mark on edge i (0 = stem) or in gap i."""
    if kind == "T":
        assert 1 <= i <= n
        return gen_t(n, i)
    if kind == "Tgap":
        assert 0 <= i <= n - 1
        return corolla(1, range(2, n + 1), 2 * i + 1)
    if kind == "Tint":
        assert 0 <= i <= n
        return corolla(0, range(1, n + 1), 2 * i)
    if kind == "Tintgap":
        assert 0 <= i <= n
        return corolla(0, range(1, n + 1), 2 * i + 1)
    raise ValueError(kind)


def _shapes(N):
    """Planar rooted trees with N vertices, as nested tuples."""
    if N == 1:
        return [()]
    out = []

    def comps(total):
        if total == 0:
            yield ()
            return
        for first in range(1, total + 1):
            for rest in comps(total - first):
                yield (first,) + rest

    for comp in comps(N - 1):
        for chs in product(*[_shapes(c) for c in comp]):
            out.append(tuple(chs))
    return out


def enumerate_basis(space, n):
    """Complete basis of CPT(n), Br(n) or CBr(n) in canonical order.

    CBr normal form: internal vertices are unmarked, have at least two
    children and never carry unit-legs; external vertices take any of their
    2v angular mark states.  Br restricts to all marks toward the root and
    no internal vertices erased data; CPT has no internal vertices."""
    assert n >= 1
    basis = []
    kmax = {"CPT": 0, "Br": n - 1, "CBr": n - 1}[space]
    for k in range(kmax + 1):
        N = n + k
        for sh in _shapes(N):
            nports, nch = [], []

            def walk(s):
                nports.append(len(s) + 1)
                nch.append(len(s))
                for c in s:
                    walk(c)

            walk(sh)
            idxs = range(N)
            for internal in combinations(idxs, k):
                if any(nch[i] < 2 for i in internal):
                    continue
                ext = [i for i in idxs if i not in internal]
                for perm in permutations(range(1, n + 1)):
                    lab = {e: p for e, p in zip(ext, perm)}
                    choices = []
                    for i in idxs:
                        if i in internal:
                            choices.append([None])
                        elif space == "Br":
                            choices.append([0])
                        else:
                            choices.append(list(range(2 * nports[i])))
                    for marks in product(*choices):
                        def build(s):
                            i = build.i
                            build.i += 1
                            return Tree(lab.get(i, 0), marks[i],
                                        tuple(build(c) for c in s))
                        build.i = 0
                        basis.append(build(sh))
    basis.sort(key=lambda t: (-degree(t), t.sort_key()))
    return basis


def f_map(t, eps):
    """Comparison map from braces trees with a unit decoration per external
    vertex: 'plain' keeps the mark toward the root, 'delta' sums over all
    unit-leg positions at that vertex.  Linear over LinCombs in t."""
    if isinstance(t, LinComb):
        out = LinComb.zero()
        for b, c in t.terms.items():
            out = out + c * f_map(b, eps)
        return out
    assert len(eps) == arity(t)

    # the odd unit-leg factors come in label order; the canonical edge order
    # lists legs in planar pre-order, so reordering contributes a sign
    pre = [v.label for v in t_vertices(t)
           if v.label > 0 and eps[v.label - 1] == "delta"]
    sign = perm_parity([sorted(pre).index(l) for l in pre])

    def expand(node):
        opts = []
        for chs in product(*[expand(c) for c in node.children]):
            if node.label == 0:
                opts.append(Tree(0, None, chs))
            elif eps[node.label - 1] == "plain":
                opts.append(Tree(node.label, 0, chs))
            else:
                v = len(node.children) + 1
                for a in range(v):
                    opts.append(Tree(node.label, 2 * a + 1, chs))
        return opts

    out = LinComb.zero()
    for b in expand(t):
        out = out + LinComb.single(b, sign)
    return out


def d0(x):
    """Internal-vertex-count-preserving part of the differential."""
    if isinstance(x, Tree):
        x = LinComb.single(x)
    out = LinComb.zero()
    for b, c in differential(x).terms.items():
        ks = {n_internal(t) for t in x.terms}
        if n_internal(b) in ks:
            out = out + LinComb.single(b, c)
    return out
