"""Finite k-graph presentations and normal-form path arithmetic.

A presentation lists vertices, colored edges and factorization squares
``a b = c d`` (meaning a∘b = c∘d with color(a) < color(b)).  Paths are
stored as edge sequences in color-ascending normal form; composition
sorts the concatenated sequence using the squares as adjacent
transposition rules.
"""
from collections import defaultdict
from dataclasses import dataclass, field
import itertools

from . import degree as dg
from .report import Report, summarize


class FactorizationError(ValueError):
    """A pair of edges has no square to swap with."""


class NotComposable(ValueError):
    pass


@dataclass(frozen=True)
class Edge:
    id: str
    color: int
    source: str
    range: str


@dataclass(frozen=True)
class Square:
    a: str
    b: str
    c: str
    d: str

    def __str__(self):
        return f"{self.a} {self.b} = {self.c} {self.d}"


@dataclass(frozen=True, order=True)
class Path:
    """A morphism in normal form.

    ``edges`` lists the color-1 edges first, then color 2, and so on.
    Ordering is lexicographic on (degree, edges), which is the canonical
    order used by every enumeration.
    """

    degree: tuple
    edges: tuple
    range: str
    source: str

    @property
    def is_vertex(self):
        return not self.edges

    def blocks(self):
        """The per-color edge lists."""
        out, i = [], 0
        for n in self.degree:
            out.append(self.edges[i:i + n])
            i += n
        return out

    def __str__(self):
        if not self.edges:
            return f"id_{self.range}"
        return "".join(f"[{e}]" for e in self.edges)


class Presentation:
    """A finitely presented k-graph (skeleton plus squares).

    Construction does no semantic checking; use ``validate_presentation``.
    ``ext_vertices`` optionally records vertices that come from a window
    export, mapping id -> (base, offset).
    """

    def __init__(self, rank, vertices, edges, squares=(), ext_vertices=None):
        if rank < 1:
            raise ValueError("rank must be at least 1")
        self.rank = rank
        self.vertices = tuple(vertices)
        self.edges = {e.id: e for e in edges}
        self.squares = tuple(squares)
        self.ext_vertices = dict(ext_vertices or {})
        self._vertex_set = frozenset(self.vertices)
        self._into = defaultdict(list)
        for e in sorted(self.edges.values(), key=lambda e: e.id):
            self._into[(e.range, e.color)].append(e)
        self._rewrite = {}
        for s in self.squares:
            self._rewrite.setdefault((s.a, s.b), (s.c, s.d))
            self._rewrite.setdefault((s.c, s.d), (s.a, s.b))
        self._cache = {}

    def _key(self):
        return (self.rank, self.vertices, tuple(sorted(self.edges.items())),
                self.squares, tuple(sorted(self.ext_vertices.items())))

    def __eq__(self, other):
        return isinstance(other, Presentation) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return (f"Presentation(k={self.rank}, {len(self.vertices)} vertices, "
                f"{len(self.edges)} edges, {len(self.squares)} squares)")

    # basic lookups

    def color(self, e):
        return self.edges[e].color

    def edges_into(self, v, color):
        return self._into.get((v, color), [])

    def receives(self, v, colors=None):
        """Does v receive an edge of one of ``colors`` (default: any)?"""
        colors = range(1, self.rank + 1) if colors is None else colors
        return any(self._into.get((v, i)) for i in colors)

    def check_vertex(self, v):
        if v not in self._vertex_set:
            raise KeyError(f"unknown vertex {v!r}")

    def identity(self, v):
        self.check_vertex(v)
        return Path(dg.zero(self.rank), (), v, v)

    def path(self, range_, edges=()):
        """Build a Path from an edge sequence, normalizing it."""
        edges = tuple(edges)
        if not edges:
            return self.identity(range_)
        seq = self._sort(list(edges))
        return self._make(range_, seq)

    def edge_path(self, e):
        edge = self.edges[e]
        return Path(dg.unit(self.rank, edge.color), (e,), edge.range, edge.source)

    def _make(self, range_, seq, source=None):
        deg = [0] * self.rank
        for e in seq:
            deg[self.edges[e].color - 1] += 1
        if source is None:
            source = self.edges[seq[-1]].source if seq else range_
        return Path(tuple(deg), tuple(seq), range_, source)

    def is_well_formed(self, f):
        """Chaining and normal-form check on a Path."""
        v = f.range
        last = 0
        for e in f.edges:
            edge = self.edges.get(e)
            if edge is None or edge.range != v or edge.color < last:
                return False
            v, last = edge.source, edge.color
        deg = [0] * self.rank
        for e in f.edges:
            deg[self.edges[e].color - 1] += 1
        return v == f.source and tuple(deg) == f.degree

    # rewriting

    def _swap(self, e, f):
        try:
            return self._rewrite[(e, f)]
        except KeyError:
            raise FactorizationError(f"pair ({e},{f}) has no factorization") from None

    def _sort(self, seq, rightmost=False):
        """Bubble lower colors leftward.  Each swap removes one inversion."""
        color = self.color
        while True:
            spots = [i for i in range(len(seq) - 1) if color(seq[i]) > color(seq[i + 1])]
            if not spots:
                return seq
            i = spots[-1] if rightmost else spots[0]
            seq[i], seq[i + 1] = self._swap(seq[i], seq[i + 1])

    def _reshape(self, seq, colors):
        """Rewrite seq into the equivalent word whose colors read ``colors``."""
        seq = list(seq)
        for i, c in enumerate(colors):
            j = i
            while self.color(seq[j]) != c:
                j += 1
            while j > i:
                seq[j - 1], seq[j] = self._swap(seq[j - 1], seq[j])
                j -= 1
        return seq

    def _vertex_at(self, f, seq, i):
        if i < len(seq):
            return self.edges[seq[i]].range
        if i > 0:
            return self.edges[seq[i - 1]].source
        return f.range


def _colors(n):
    return [i + 1 for i, a in enumerate(n) for _ in range(a)]


def compose(p, f, g):
    """The normal form of f∘g."""
    if f.source != g.range:
        raise NotComposable(f"s({f}) = {f.source} but r({g}) = {g.range}")
    seq = p._sort(list(f.edges + g.edges))
    return Path(dg.add(f.degree, g.degree), tuple(seq), f.range, g.source)


def compose_all(p, *paths):
    out = paths[0]
    for g in paths[1:]:
        out = compose(p, out, g)
    return out


def factor(p, f, m, n):
    """The segment f(m, n)."""
    m, n = tuple(m), tuple(n)
    if not (dg.leq(dg.zero(p.rank), m) and dg.leq(m, n) and dg.leq(n, f.degree)):
        raise ValueError(f"need 0 <= {m} <= {n} <= {f.degree}")
    if m == dg.zero(p.rank) and n == f.degree:
        return f
    target = _colors(m) + _colors(dg.sub(n, m)) + _colors(dg.sub(f.degree, n))
    seq = p._reshape(f.edges, target)
    i, j = sum(m), sum(n)
    return Path(dg.sub(n, m), tuple(seq[i:j]),
                p._vertex_at(f, seq, i), p._vertex_at(f, seq, j))


def vertex_at(p, f, m):
    """The vertex f(m)."""
    return factor(p, f, m, m).range


def enumerate_paths(p, v, n):
    """vΛ^n, sorted."""
    p.check_vertex(v)
    colors = _colors(n)
    out = []

    def walk(u, i, seq):
        if i == len(colors):
            out.append(p._make(v, tuple(seq), u))
            return
        for e in p.edges_into(u, colors[i]):
            seq.append(e.id)
            walk(e.source, i + 1, seq)
            seq.pop()

    walk(v, 0, [])
    return sorted(out)


def paths_upto(p, v, q):
    """Every path at v with degree <= q, sorted."""
    p.check_vertex(v)
    out = []

    def walk(u, color, deg, seq):
        out.append(p._make(v, tuple(seq), u))
        for i in range(color, p.rank + 1):
            if deg[i - 1] >= q[i - 1]:
                continue
            for e in p.edges_into(u, i):
                deg[i - 1] += 1
                seq.append(e.id)
                walk(e.source, i, deg, seq)
                seq.pop()
                deg[i - 1] -= 1

    walk(v, 1, [0] * p.rank, [])
    return sorted(out)


def enumerate_leq(p, v, q):
    """vΛ^{≤q}: paths of degree <= q that cannot grow in any color below q."""
    out = []
    for f in paths_upto(p, v, q):
        if all(f.degree[i - 1] == q[i - 1] or not p.edges_into(f.source, i)
               for i in range(1, p.rank + 1)):
            out.append(f)
    return out


def all_paths(p, max_total=None):
    """All morphisms, optionally capped by total length; needs a bound if cyclic."""
    out = []
    for v in p.vertices:
        def walk(u, color, seq):
            out.append(p._make(v, tuple(seq), u))
            if max_total is not None and len(seq) >= max_total:
                return
            for i in range(color, p.rank + 1):
                for e in p.edges_into(u, i):
                    seq.append(e.id)
                    walk(e.source, i, seq)
                    seq.pop()
        walk(v, 1, [])
    return sorted(out)


def generate_omega(k, m):
    """Presentation of the grid k-graph Ω_{k,m} for finite m."""
    m = dg.check_degree(m, k)
    if any(a == dg.INFINITY for a in m):
        raise ValueError("generate_omega needs a finite degree")

    def vid(pt):
        return "v" + "_".join(map(str, pt))

    def eid(i, pt):
        return f"e{i}_" + "_".join(map(str, pt))

    points = sorted(dg.box(m))
    edges, squares = [], []
    for pt in points:
        for i in range(1, k + 1):
            up = dg.add(pt, dg.unit(k, i))
            if dg.leq(up, m):
                edges.append(Edge(eid(i, pt), i, vid(up), vid(pt)))
        for i, j in itertools.combinations(range(1, k + 1), 2):
            ei, ej = dg.unit(k, i), dg.unit(k, j)
            if dg.leq(dg.add(dg.add(pt, ei), ej), m):
                squares.append(Square(eid(i, pt), eid(j, dg.add(pt, ei)),
                                      eid(j, pt), eid(i, dg.add(pt, ej))))
    return Presentation(k, [vid(pt) for pt in points], edges, squares)


def from_directed_graph(vertices, edges):
    """Rank-1 presentation from (id, source, range) triples."""
    vertices = list(vertices)
    known = set(vertices)
    out = []
    for eid, s, r in edges:
        for v in (s, r):
            if v not in known:
                raise ValueError(f"edge {eid} has dangling endpoint {v}")
        out.append(Edge(eid, 1, s, r))
    return Presentation(1, vertices, out)


def swap_squares(p, i, j):
    """Fault injection: exchange the right-hand sides of squares i and j."""
    sq = list(p.squares)
    a, b = sq[i], sq[j]
    sq[i] = Square(a.a, a.b, b.c, b.d)
    sq[j] = Square(b.a, b.b, a.c, a.d)
    return Presentation(p.rank, p.vertices, p.edges.values(), sq, p.ext_vertices)


def validate_presentation(p):
    rep = Report("validate")
    E = p.edges

    bad = []
    for e in E.values():
        if not 1 <= e.color <= p.rank:
            bad.append(f"{e.id} has color {e.color}")
        for v in (e.source, e.range):
            if v not in p._vertex_set:
                bad.append(f"{e.id} endpoint {v} undeclared")
    rep.add("endpoints", not bad, summarize(bad) or f"{len(E)} edges")

    bad = []
    for s in p.squares:
        missing = [x for x in (s.a, s.b, s.c, s.d) if x not in E]
        if missing:
            bad.append(f"square {s} uses unknown {missing[0]}")
            continue
        a, b, c, d = E[s.a], E[s.b], E[s.c], E[s.d]
        if not (a.color < b.color and c.color == b.color and d.color == a.color):
            bad.append(f"square {s} has wrong colors")
        elif not (a.source == b.range and c.source == d.range
                  and a.range == c.range and b.source == d.source):
            bad.append(f"square {s} is not composable")
    rep.add("square-composability", not bad,
            summarize(bad) or f"{len(p.squares)} squares")

    bad = []
    left, right = defaultdict(int), defaultdict(int)
    for s in p.squares:
        left[(s.a, s.b)] += 1
        right[(s.c, s.d)] += 1
    for a in E.values():
        for b in E.values():
            if a.source != b.range or a.color == b.color:
                continue
            side = left if a.color < b.color else right
            count = side.get((a.id, b.id), 0)
            if count == 0:
                bad.append(f"pair ({a.id},{b.id}) has no factorization")
            elif count > 1:
                bad.append(f"pair ({a.id},{b.id}) appears in {count} squares")
    rep.add("square-bijectivity", not bad, summarize(bad) or "complete")

    if p.rank < 3:
        rep.add("cube-consistency", True, f"not applicable for k={p.rank}")
    elif bad or not rep.passed:
        rep.add("cube-consistency", False, "not checked: squares incomplete")
    else:
        bad = []
        for e1 in E.values():
            for e2 in _out_of(p, e1):
                for e3 in _out_of(p, e2):
                    if len({e1.color, e2.color, e3.color}) < 3:
                        continue
                    word = [e1.id, e2.id, e3.id]
                    one = p._sort(list(word))
                    two = p._sort(list(word), rightmost=True)
                    if one != two:
                        bad.append(f"triple {tuple(word)} normalizes to {one} and {two}")
        rep.add("cube-consistency", not bad, summarize(bad) or "all triples agree")
    return rep


def _out_of(p, e):
    """Edges f with r(f) = s(e), i.e. those composable on the right of e."""
    return [f for i in range(1, p.rank + 1) for f in p.edges_into(e.source, i)]
