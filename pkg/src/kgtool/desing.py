"""The source-free extension Λ̄ of a finite k-graph, in canonical form.

A vertex of Λ̄ is ``ExtVertex(base, offset)``: a zero offset is the
original vertex, a nonzero one is the class of [x; m] with
base = x(m∧d(x)) and offset = m - m∧d(x).

A morphism is ``ExtPath(shadow, offset, degree)``, the class of
[x; (m, n)] with shadow = x(m∧d(x), n∧d(x)), offset = m - m∧d(x) and
degree = n - m.  Original paths are exactly those with zero offset and
degree equal to the shadow's degree, so equality of these triples is
equality in Λ̄.
"""
from dataclasses import dataclass
import random

import networkx as nx
from networkx.algorithms import isomorphism

from . import degree as dg
from .analysis import (all_boundary_paths, flat, is_exhaustive,
                       minimal_extensions)
from .core import (Edge, NotComposable, Presentation, Square, compose,
                   factor, paths_upto)
from .kgfile import ext_vertex_id
from .report import Report, WindowReport, summarize


class PreconditionViolation(ValueError):
    pass


class InvalidExtension(ValueError):
    pass


@dataclass(frozen=True)
class ExtVertex:
    base: str
    offset: tuple

    @property
    def is_new(self):
        return any(self.offset)

    def key(self):
        return (self.is_new, self.offset, self.base)

    def __str__(self):
        if not self.is_new:
            return f"Base({self.base})"
        return f"New({self.base},{dg.fmt(self.offset)})"


@dataclass(frozen=True)
class ExtPath:
    shadow: object
    offset: tuple
    degree: tuple

    @property
    def is_new(self):
        return any(self.offset) or self.degree != self.shadow.degree

    def key(self):
        return (self.degree, self.is_new, self.offset, self.shadow)

    def __str__(self):
        if not self.is_new:
            return f"Base({self.shadow})"
        return f"New({self.shadow},{dg.fmt(self.offset)},{dg.fmt(self.degree)})"


def _vsorted(vs):
    return sorted(vs, key=ExtVertex.key)


def _psorted(fs):
    return sorted(fs, key=ExtPath.key)


def _unwrap(x):
    return getattr(x, "path", x)


def base_vertex(p, v):
    return ExtVertex(v, dg.zero(p.rank))


def base_path(lam):
    return ExtPath(lam, tuple(0 for _ in lam.degree), lam.degree)


def new_vertex(p, w, c):
    """Checked constructor for New(w, c)."""
    c = tuple(c)
    if not any(c) or not flat(p, w, dg.support(c)):
        raise InvalidExtension(f"New({w},{dg.fmt(c)}) is not realizable")
    return ExtVertex(w, c)


def new_path(p, mu, c, g):
    """Checked constructor; collapses to the original path when it is one."""
    c, g = tuple(c), tuple(g)
    if any(ci and di for ci, di in zip(c, mu.degree)):
        raise InvalidExtension("offset and shadow overlap")
    if not dg.leq(mu.degree, g):
        raise InvalidExtension("shadow longer than degree")
    tail = dg.sub(dg.add(c, g), mu.degree)
    if any(tail) and not flat(p, mu.source, dg.support(tail)):
        raise InvalidExtension("source is not realizable")
    return ExtPath(mu, c, g)


def canonicalize_vertex(p, x, m):
    x, m = _unwrap(x), dg.check_degree(m, p.rank)
    mm = dg.meet(m, x.degree)
    return ExtVertex(factor(p, x, mm, mm).range, dg.sub(m, mm))


def canonicalize_path(p, x, m, n):
    x, m, n = _unwrap(x), dg.check_degree(m, p.rank), dg.check_degree(n, p.rank)
    if not dg.leq(m, n):
        raise ValueError(f"{m} is not below {n}")
    mm, nn = dg.meet(m, x.degree), dg.meet(n, x.degree)
    return ExtPath(factor(p, x, mm, nn), dg.sub(m, mm), dg.sub(n, m))


def ext_range(f):
    return ExtVertex(f.shadow.range, f.offset)


def ext_source(f):
    return ExtVertex(f.shadow.source,
                     dg.sub(dg.add(f.offset, f.degree), f.shadow.degree))


def ext_endpoints(p, f):
    return ext_range(f), ext_source(f), f.degree


def ext_identity(p, v):
    return ExtPath(p.identity(v.base), v.offset, dg.zero(p.rank))


def ext_compose(p, f, g):
    if ext_source(f) != ext_range(g):
        raise NotComposable(f"source of {f} is not the range of {g}")
    return ExtPath(compose(p, f.shadow, g.shadow), f.offset, dg.add(f.degree, g.degree))


def ext_factor(p, f, a):
    a = tuple(a)
    if not dg.leq(a, f.degree):
        raise ValueError(f"{a} is not below {f.degree}")
    mu, c = f.shadow, f.offset
    t = dg.meet(dg.add(c, a), mu.degree)
    head = ExtPath(factor(p, mu, dg.zero(p.rank), t), c, a)
    tail = ExtPath(factor(p, mu, t, mu.degree), dg.sub(dg.add(c, a), t),
                   dg.sub(f.degree, a))
    return head, tail


def enumerate_ext_paths(p, v, n):
    """vΛ̄^n."""
    n = tuple(n)
    w, c = v.base, v.offset
    out = []
    if v.is_new:
        cap = tuple(0 if ci else ni for ci, ni in zip(c, n))
        for mu in paths_upto(p, w, cap):
            tail = dg.sub(dg.add(c, n), mu.degree)
            if flat(p, mu.source, dg.support(tail)):
                out.append(ExtPath(mu, c, n))
    else:
        for mu in paths_upto(p, w, n):
            if mu.degree == n:
                out.append(base_path(mu))
            elif flat(p, mu.source, dg.support(dg.sub(n, mu.degree))):
                out.append(ExtPath(mu, c, n))
    return _psorted(out)


def window_vertices(p, q):
    q = dg.check_degree(q, p.rank)
    out = [base_vertex(p, v) for v in p.vertices]
    for w in p.vertices:
        for c in dg.box(q):
            if any(c) and flat(p, w, dg.support(c)):
                out.append(ExtVertex(w, c))
    return _vsorted(out)


def in_window(v, q):
    return dg.leq(v.offset, q)


def window_paths(p, q):
    """Every ext path with range in the window and degree <= q."""
    out = []
    for v in window_vertices(p, q):
        for n in dg.box(q):
            out.extend(enumerate_ext_paths(p, v, n))
    return _psorted(out)


def _well_formed(p, f):
    return p.is_well_formed(f.shadow)


def verify_axioms(p, q, samples=500, seed=0):
    q = dg.check_degree(q, p.rank)
    k = p.rank
    verts = window_vertices(p, q)
    rep = WindowReport("verify", window=q, vertices=verts)
    rng = random.Random(seed)
    paths = window_paths(p, q)

    bad = []
    for v in verts:
        i = ext_identity(p, v)
        if ext_endpoints(p, i) != (v, v, dg.zero(k)):
            bad.append(f"id of {v} has wrong endpoints")
    for f in paths:
        try:
            left = ext_compose(p, ext_identity(p, ext_range(f)), f)
            right = ext_compose(p, f, ext_identity(p, ext_source(f)))
        except ValueError as exc:
            bad.append(f"{f}: {exc}")
            continue
        if left != f or right != f:
            bad.append(f"identity law fails at {f}")
    rep.add("identity", not bad, summarize(bad) or f"{len(verts)} vertices, {len(paths)} paths")

    # composable triples: f from the window, then g at s(f), h at s(g)
    bad_assoc, bad_deg = [], []
    degrees = list(dg.box(q))
    for _ in range(samples):
        f = rng.choice(paths)
        g = _pick(p, rng, ext_source(f), degrees)
        h = _pick(p, rng, ext_source(g), degrees) if g is not None else None
        if g is None or h is None:
            continue
        try:
            fg = ext_compose(p, f, g)
            gh = ext_compose(p, g, h)
            one, two = ext_compose(p, fg, h), ext_compose(p, f, gh)
        except ValueError as exc:
            bad_assoc.append(f"({f},{g},{h}): {exc}")
            continue
        if one != two:
            bad_assoc.append(f"({f},{g},{h}): {one} != {two}")
        for comp, a, b in ((fg, f, g), (gh, g, h)):
            if (comp.degree != dg.add(a.degree, b.degree) or ext_range(comp) != ext_range(a)
                    or ext_source(comp) != ext_source(b) or not _well_formed(p, comp)):
                bad_deg.append(f"{a} o {b} = {comp}")
    rep.add("associativity", not bad_assoc,
            summarize(bad_assoc) or f"{samples} seeded triples (seed {seed})")

    bad = []
    for f in paths:
        for a in dg.box(f.degree):
            try:
                g, h = ext_factor(p, f, a)
                if ext_compose(p, g, h) != f or g.degree != a:
                    bad.append(f"{f} at {dg.fmt(a)}: factors recompose wrongly")
                    continue
            except ValueError as exc:
                bad.append(f"{f} at {dg.fmt(a)}: {exc}")
                continue
            count = 0
            for g2 in enumerate_ext_paths(p, ext_range(f), a):
                for h2 in enumerate_ext_paths(p, ext_source(g2), dg.sub(f.degree, a)):
                    try:
                        if ext_compose(p, g2, h2) == f:
                            count += 1
                    except ValueError:
                        pass
            if count != 1:
                bad.append(f"{f} at {dg.fmt(a)}: {count} factorizations")
    rep.add("factorization", not bad, summarize(bad) or "existence and uniqueness on all window paths")

    for f in paths:
        if not _well_formed(p, f):
            bad_deg.append(f"{f} is malformed")
    rep.add("degree-additivity", not bad_deg, summarize(bad_deg) or "degrees add, endpoints chain")

    bad = []
    for v in verts:
        for i in range(1, k + 1):
            if not enumerate_ext_paths(p, v, dg.unit(k, i)):
                bad.append(f"{v} receives no color-{i} edge")
    rep.add("no-sources", not bad, summarize(bad) or "every window vertex receives every color")

    bad = []
    for v in verts:
        for i in range(1, k + 1):
            for j in range(1, k + 1):
                if i == j:
                    continue
                for lam in enumerate_ext_paths(p, v, dg.unit(k, i)):
                    if not enumerate_ext_paths(p, ext_source(lam), dg.unit(k, j)):
                        bad.append(f"{lam} cannot continue in color {j}")
    rep.add("local-convexity", not bad, summarize(bad) or "window is locally convex")
    return rep


def _pick(p, rng, v, degrees):
    options = list(degrees)
    rng.shuffle(options)
    for n in options:
        found = enumerate_ext_paths(p, v, n)
        if found:
            return rng.choice(found)
    return None


def ext_minimal_extensions(p, f, g):
    if ext_range(f) != ext_range(g):
        return []
    top = dg.join(f.degree, g.degree)
    out = []
    for alpha in enumerate_ext_paths(p, ext_source(f), dg.sub(top, f.degree)):
        whole = ext_compose(p, f, alpha)
        head, beta = ext_factor(p, whole, g.degree)
        if head == g:
            out.append((alpha, beta))
    return sorted(out, key=lambda ab: (ab[0].key(), ab[1].key()))


def check_lambda_min_preserved(p, q):
    q = dg.check_degree(q, p.rank)
    rep = WindowReport("lambda-min", window=q)
    bad, pairs = [], 0
    for v in p.vertices:
        local = paths_upto(p, v, q)
        for lam in local:
            for mu in local:
                pairs += 1
                core = [(base_path(m.alpha), base_path(m.beta))
                        for m in minimal_extensions(p, lam, mu)]
                ext = ext_minimal_extensions(p, base_path(lam), base_path(mu))
                if sorted(core, key=lambda ab: (ab[0].key(), ab[1].key())) != ext:
                    bad.append(f"({lam},{mu})")
    rep.add("lambda-min-preserved", not bad, summarize(bad) or f"{pairs} pairs agree")
    return rep


def sheet_report(p, v, q):
    """Each boundary path x at v spans a sheet {[x; m] : m <= d(x)+q} of
    the window; check the sheets cover it and meet only at Base(v)."""
    q = dg.check_degree(q, p.rank)
    verts = window_vertices(p, q)
    rep = WindowReport("sheets", window=q, vertices=verts)
    sheets = []
    for bx in all_boundary_paths(p):
        if bx.range == v:
            x = bx.path
            sheets.append({canonicalize_vertex(p, x, m) for m in dg.box(dg.add(x.degree, q))})
    covered = set().union(*sheets) if sheets else set()
    rep.add("window-size", True, f"{len(verts)} vertices")
    corner = [w for w in verts if w.base == v and w.is_new and all(w.offset)]
    rep.add("no-interior-at-" + v, not corner, summarize([str(w) for w in corner])
            or f"no New({v},c) with every offset coordinate positive")
    bad = []
    for i in range(len(sheets)):
        for j in range(i + 1, len(sheets)):
            meet = sheets[i] & sheets[j]
            if meet != {base_vertex(p, v)}:
                bad.append(", ".join(sorted(map(str, meet))))
    # New vertices over distinct bases are distinct classes by construction
    rep.add(f"sheets-meet-only-at-{v}", not bad and covered <= set(verts),
            summarize(bad) or f"{len(sheets)} sheets")
    return rep


def check_exhaustive_preserved(p, v, E, q):
    """Does E stay exhaustive in Λ̄ over all of vΛ̄^n with n <= q?"""
    E = list(E)
    q = dg.check_degree(q, p.rank)
    top = dg.join_all((lam.degree for lam in E), p.rank)
    if not is_exhaustive(p, v, E, dg.join(top, q)):
        raise PreconditionViolation(f"{{{', '.join(map(str, E))}}} is not exhaustive at {v}")
    start = base_vertex(p, v)
    for n in dg.box(q):
        for f in enumerate_ext_paths(p, start, n):
            if not any(ext_minimal_extensions(p, base_path(lam), f) for lam in E):
                return False
    return True


def window_presentation(p, q):
    """The window as a presentation: induced 1-skeleton plus its squares."""
    q = dg.check_degree(q, p.rank)
    k = p.rank
    verts = window_vertices(p, q)

    def vid(v):
        return ext_vertex_id(v.base, v.offset) if v.is_new else v.base

    names, edges = {}, []
    for v in verts:
        for i in range(1, k + 1):
            for f in enumerate_ext_paths(p, v, dg.unit(k, i)):
                s = ext_source(f)
                if not in_window(s, q):
                    continue
                if f.is_new:
                    eid = "X_" + "_".join([vid(v), vid(s), str(i)])
                else:
                    eid = f.shadow.edges[0]
                names[f] = eid
                edges.append(Edge(eid, i, vid(s), vid(v)))
    squares = []
    for v in verts:
        for i in range(1, k + 1):
            for j in range(i + 1, k + 1):
                n = dg.add(dg.unit(k, i), dg.unit(k, j))
                for f in enumerate_ext_paths(p, v, n):
                    if not in_window(ext_source(f), q):
                        continue
                    a, b = ext_factor(p, f, dg.unit(k, i))
                    c, d = ext_factor(p, f, dg.unit(k, j))
                    squares.append(Square(names[a], names[b], names[c], names[d]))
    ext = {vid(v): (v.base, v.offset) for v in verts if v.is_new}
    return Presentation(k, [vid(v) for v in verts], edges, squares, ext)


def _skeleton(p):
    g = nx.MultiDiGraph()
    g.add_nodes_from(p.vertices)
    for e in p.edges.values():
        g.add_edge(e.source, e.range, color=e.color)
    return g


def iso_check_window(a, b):
    """Color-preserving isomorphism of the 1-skeletons of two finite
    presentations (typically a window and a grid)."""
    if a.rank != b.rank or len(a.vertices) != len(b.vertices) or len(a.edges) != len(b.edges):
        return False
    matcher = isomorphism.MultiDiGraphMatcher(
        _skeleton(a), _skeleton(b),
        edge_match=isomorphism.categorical_multiedge_match("color", None))
    return matcher.is_isomorphic()


def add_heads(p, q):
    """Γ: a chain of q new vertices hung above each vertex receiving nothing."""
    if p.rank != 1:
        raise ValueError("add_heads needs a 1-graph")
    vertices = list(p.vertices)
    edges = list(p.edges.values())
    heads = {}
    for v in p.vertices:
        if p.receives(v):
            continue
        prev = v
        for j in range(1, q + 1):
            hv = f"{v}_h{j}"
            heads[(v, j)] = hv
            vertices.append(hv)
            edges.append(Edge(f"e_{v}_h{j}", 1, hv, prev))
            prev = hv
    return Presentation(1, vertices, edges), heads


def compare_add_heads(p, q):
    """Check that Φ maps the Λ̄ window of a 1-graph onto the add-heads
    window, bijectively on vertices and on paths of length <= q."""
    if p.rank != 1:
        raise ValueError("compare_add_heads needs a 1-graph")
    q = q[0] if isinstance(q, tuple) else q
    gamma, heads = add_heads(p, q)
    rep = Report("addheads")

    def phi_v(v):
        return heads[(v.base, v.offset[0])] if v.is_new else v.base

    verts = window_vertices(p, (q,))
    images = [phi_v(v) for v in verts]
    rep.add("vertex-bijection", sorted(images) == sorted(gamma.vertices)
            and len(set(images)) == len(images),
            f"{len(verts)} window vertices, {len(gamma.vertices)} in the add-heads graph")

    def phi(f):
        mu = f.shadow
        s = mu.source
        c = f.offset[0]
        top = c + f.degree[0] - mu.degree[0]
        seq = list(mu.edges) + [f"e_{s}_h{j}" for j in range(c + 1, top + 1)]
        start = phi_v(ext_range(f))
        return gamma._make(start, tuple(seq), phi_v(ext_source(f)))

    bad, mapped = [], []
    for v in verts:
        for n in range(q + 1):
            for f in enumerate_ext_paths(p, v, (n,)):
                if not in_window(ext_source(f), (q,)):
                    continue
                g = phi(f)
                if not gamma.is_well_formed(g) or g.degree != f.degree:
                    bad.append(f"{f} -> {g}")
                mapped.append(g)
    target = [g for v in gamma.vertices for g in paths_upto(gamma, v, (q,))]
    ok = not bad and sorted(mapped) == sorted(target) and len(set(mapped)) == len(mapped)
    rep.add("path-bijection", ok, summarize(bad) or f"{len(mapped)} paths of length <= {q} match")
    return rep


# raw classes [x; m] and [x; (m, n)] over explicit finite boundary paths

def raw_vertex_equiv(p, x, m, y, n):
    x, y = _unwrap(x), _unwrap(y)
    mx, ny = dg.meet(m, x.degree), dg.meet(n, y.degree)
    return (vertex_of(p, x, mx) == vertex_of(p, y, ny)
            and dg.sub(m, mx) == dg.sub(n, ny))


def vertex_of(p, x, m):
    return factor(p, x, m, m).range


def raw_path_equiv(p, x, mn, y, pq):
    x, y = _unwrap(x), _unwrap(y)
    (m, n), (a, b) = mn, pq
    return (factor(p, x, dg.meet(m, x.degree), dg.meet(n, x.degree))
            == factor(p, y, dg.meet(a, y.degree), dg.meet(b, y.degree))
            and dg.sub(m, dg.meet(m, x.degree)) == dg.sub(a, dg.meet(a, y.degree))
            and dg.sub(n, m) == dg.sub(b, a))


def raw_compose(p, first, second):
    """Compose raw triples (x, m, n) straight from the class definitions."""
    (x, m, n), (y, a, b) = first, second
    x, y = _unwrap(x), _unwrap(y)
    if dg.leq(n, x.degree):
        lam = factor(p, x, m, n)
        tail = factor(p, y, a, y.degree)
        z = compose(p, lam, tail)
        return z, dg.zero(p.rank), dg.add(lam.degree, dg.sub(b, a))
    head = factor(p, x, dg.zero(p.rank), dg.meet(n, x.degree))
    tail = factor(p, y, dg.meet(a, y.degree), y.degree)
    z = compose(p, head, tail)
    return z, m, dg.sub(dg.add(n, b), a)


def raw_triples(p, q):
    """Raw representatives (x, m, n) with x a boundary path, m <= n and
    n - n∧d(x) <= q."""
    out = []
    for bx in all_boundary_paths(p):
        x = bx.path
        top = dg.add(x.degree, q)
        for n in dg.box(top):
            for m in dg.box(n):
                out.append((x, m, n))
    return out
