"""Directed-graph operads on two colors of vertices.

A basis graph has m external type-I vertices (labels 1..m), k internal
type-I vertices (labels m+1..m+k, unordered among themselves), and n type-II
vertices (labels -1..-n, thought of as sitting on a line).  Edges are an
ordered tuple of (tail, head) pairs; type-II vertices never appear as tails.
Tadpoles (i, i) on type-I vertices are allowed.

Edges are odd: a graph with a repeated edge is zero, and reordering the edge
list costs the sign of the permutation.  Internal vertices are even and
unlabeled: relabeling them is free, and a graph with an internal relabeling
that induces an odd edge permutation is zero.  The degree of a graph is
(#type-II) - (#edges) + 2*(#internal).

Operations: insertion at a type-I or a type-II vertex, superposition product
on a fixed vertex set, the cyclic action rotating the type-II line together
with the output, unit insertion at a type-II slot, and the induced forgetful
map dropping the last type-II slot.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product as iproduct

from .linalg import LinComb, sort_sign


@dataclass(frozen=True, order=True)
class Graph:
    m: int
    n: int
    k: int
    edges: tuple

    @property
    def degree(self):
        return self.n - len(self.edges) + 2 * self.k

    def vertices_typeI(self):
        return range(1, self.m + self.k + 1)

    def vertices_all(self):
        return list(self.vertices_typeI()) + [-j for j in range(1, self.n + 1)]

    def is_valid(self):
        ok_v = set(self.vertices_all())
        for t, h in self.edges:
            if t not in ok_v or h not in ok_v or t < 0:
                return False
        return True

    def to_json(self):
        d = {"m": self.m, "n": self.n, "edges": [list(e) for e in self.edges]}
        if self.k:
            d["k"] = self.k
        return d

    @classmethod
    def from_json(cls, d):
        return cls(d["m"], d["n"], d.get("k", 0), tuple(tuple(e) for e in d["edges"]))


def graph(m, n, edges, k=0, coeff=1):
    """Canonicalized LinComb for an edge-ordered graph (possibly zero)."""
    return _canon(m, n, k, [tuple(e) for e in edges], coeff)


def _canon(m, n, k, edges, coeff):
    if len(set(edges)) < len(edges):
        return LinComb.zero()
    g = Graph(m, n, k, tuple(edges))
    assert g.is_valid(), g
    if k == 0:
        if not edges:
            return LinComb.single(g, coeff)
        srt, sgn = sort_sign(edges)
        return LinComb.single(Graph(m, n, 0, tuple(srt)), sgn * coeff)
    best = None
    best_sign = None
    dead = False
    internals = list(range(m + 1, m + k + 1))
    for perm in permutations(internals):
        rel = dict(zip(internals, perm))
        re = [(rel.get(t, t), rel.get(h, h)) for t, h in edges]
        if len(set(re)) < len(re):
            continue
        srt, sgn = sort_sign(re)
        key = tuple(srt)
        if best is None or key < best:
            best, best_sign = key, sgn
        elif key == best and sgn != best_sign:
            dead = True
    if best is None or (dead and best is not None):
        # all relabelings collide, or an internal symmetry acts by -1
        if best is None:
            return LinComb.zero()
    if dead:
        return LinComb.zero()
    return LinComb.single(Graph(m, n, k, best), best_sign * coeff)


def edge_to_typeII(i, j, m, n, k=0):
    """Single edge from type-I vertex i down to type-II vertex j."""
    return graph(m, n, [(i, -j)], k)


def edge_typeI(i, j, m, n, k=0):
    """Single directed edge between type-I vertices i -> j (tadpole if i == j)."""
    return graph(m, n, [(i, j)], k)


def _lift(op):
    """Lift a basis-level map Graph -> LinComb to LinComb inputs."""
    def wrapped(g, *a, **kw):
        if isinstance(g, LinComb):
            return g.map_basis(lambda b: wrapped(b, *a, **kw))
        if a and isinstance(a[-1], LinComb):
            out = LinComb.zero()
            for b2, c2 in a[-1].terms.items():
                out = out + c2 * op(g, *a[:-1], b2, **kw)
            return out
        return op(g, *a, **kw)
    return wrapped


@_lift
def compose_typeI(g1, i, g2):
    """Insert g2 (with no type-II vertices) at external type-I vertex i of g1.

    Edges formerly incident to i reconnect to the vertices of g2 in all ways;
    host edges keep their positions, guest edges are appended.
    """
    assert 1 <= i <= g1.m and g2.n == 0
    m = g1.m + g2.m - 1
    k = g1.k + g2.k

    def rel1(v):
        if v < 0:
            return v
        if v <= g1.m:
            return v if v < i else (v + g2.m - 1 if v > i else None)
        return m + (v - g1.m)  # g1 internal

    def rel2(v):
        if v <= g2.m:
            return i - 1 + v
        return m + g1.k + (v - g2.m)  # g2 internal

    targets = [rel2(v) for v in g2.vertices_typeI()]
    slots = []
    host = []
    for t, h in g1.edges:
        host.append((rel1(t), rel1(h)))
        if rel1(t) is None:
            slots.append((len(host) - 1, 0))
        if rel1(h) is None:
            slots.append((len(host) - 1, 1))
    guest = [(rel2(t), rel2(h)) for t, h in g2.edges]
    out = LinComb.zero()
    for choice in iproduct(targets, repeat=len(slots)):
        es = [list(e) for e in host]
        for (ei, side), tgt in zip(slots, choice):
            es[ei][side] = tgt
        out = out + _canon(m, g1.n, k, [tuple(e) for e in es] + guest, 1)
    return out


@_lift
def compose_typeII(g1, j, g2):
    """Insert g2 at type-II vertex j of g1.

    Edges of g1 arriving at j reconnect to any vertex of g2 (either color);
    g2's type-II vertices take over slot j's place on the line, g2's type-I
    labels are appended after g1's external block.
    """
    assert 1 <= j <= g1.n
    m = g1.m + g2.m
    k = g1.k + g2.k
    n = g1.n + g2.n - 1

    def rel1(v):
        if v > 0:
            return v if v <= g1.m else v + g2.m
        jj = -v
        if jj < j:
            return v
        if jj > j:
            return -(jj + g2.n - 1)
        return None

    def rel2(v):
        if v > 0:
            return g1.m + v if v <= g2.m else g1.m + g2.m + g1.k + (v - g2.m)
        return -(j - 1 + (-v))

    # fix internal relabeling: rel1 internals land in m+1..m+k1 block
    def rel1i(v):
        if v > g1.m and v > 0:
            return m + (v - g1.m)
        return rel1(v)

    targets = [rel2(v) for v in g2.vertices_all()]
    slots = []
    host = []
    for t, h in g1.edges:
        rt, rh = rel1i(t), rel1i(h)
        host.append((rt, rh))
        assert rt is not None, "type-II vertex used as a tail"
        if rh is None:
            slots.append(len(host) - 1)
    guest = [(rel2(t), rel2(h)) for t, h in g2.edges]
    out = LinComb.zero()
    for choice in iproduct(targets, repeat=len(slots)):
        es = [list(e) for e in host]
        for ei, tgt in zip(slots, choice):
            es[ei][1] = tgt
        out = out + _canon(m, n, k, [tuple(e) for e in es] + guest, 1)
    return out


def superpose(g1, g2):
    """Product of two graphs on the same vertex set: union of the edge
    lists, left factor's edges first."""
    if isinstance(g1, LinComb) or isinstance(g2, LinComb):
        l1 = g1 if isinstance(g1, LinComb) else LinComb.single(g1)
        l2 = g2 if isinstance(g2, LinComb) else LinComb.single(g2)
        out = LinComb.zero()
        for b1, c1 in l1.terms.items():
            for b2, c2 in l2.terms.items():
                out = out + c1 * c2 * superpose(b1, b2)
        return out
    assert (g1.m, g1.n, g1.k) == (g2.m, g2.n, g2.k)
    return _canon(g1.m, g1.n, g1.k, list(g1.edges) + list(g2.edges), 1)


def _sigma_edge(e, m, n, k):
    """Cyclic action on a single edge, as a list of (edge, coeff)."""
    t, h = e
    if h > 0:
        return [((t, h), 1)]
    j = -h
    if j != 1:
        return [((t, -(j - 1)), 1)]
    out = [((t, -l), -1) for l in range(1, n + 1)]
    out += [((t, l), -1) for l in range(1, m + k + 1)]
    return out


@_lift
def sigma(g):
    """Generator of the cyclic group C_{n+1} rotating the type-II line with
    the output; acts multiplicatively over superposition of edges."""
    out = LinComb.single(Graph(g.m, g.n, g.k, ()), 1)
    terms = [(list(), 1)]
    for e in g.edges:
        repl = _sigma_edge(e, g.m, g.n, g.k)
        terms = [(es + [ne], c * nc) for es, c in terms for ne, nc in repl]
    out = LinComb.zero()
    for es, c in terms:
        out = out + _canon(g.m, g.n, g.k, es, c)
    return out


def sigma_pow(x, p):
    for _ in range(p):
        x = sigma(x)
    return x


@_lift
def insert_unit(g, j):
    """Insert the algebra unit at type-II slot j: zero if j has incident
    edges, otherwise the slot is forgotten and later slots shift down."""
    assert 1 <= j <= g.n
    if any(h == -j for _, h in g.edges):
        return LinComb.zero()
    es = [(t, h if h > 0 or -h < j else -(-h - 1)) for t, h in g.edges]
    return _canon(g.m, g.n - 1, g.k, es, 1)


def forgetful(g):
    """Drop the last type-II slot: unit insertion there after one cyclic
    rotation.  Takes (m, n) to (m, n-1)."""
    x = sigma(g)
    n = (g.n if isinstance(g, Graph) else next(iter(g.terms)).n)
    return insert_unit(x, n)


def enumerate_graphs(m, n, max_edges, k=0):
    """All canonical nonzero basis graphs with m external type-I vertices,
    n type-II vertices, k internal vertices, and at most max_edges edges."""
    from itertools import combinations
    heads = list(range(1, m + k + 1)) + [-j for j in range(1, n + 1)]
    pool = [(t, h) for t in range(1, m + k + 1) for h in heads]
    seen = set()
    out = []
    for r in range(max_edges + 1):
        for es in combinations(pool, r):
            lc = graph(m, n, list(es), k)
            if lc.is_zero():
                continue
            b = next(iter(lc.terms))
            if b not in seen:
                seen.add(b)
                out.append(b)
    return out
