"""Structural predicates: minimal common extensions, sources, local
convexity, exhaustive sets, boundary paths and the flatness test."""
from dataclasses import dataclass
import itertools

from . import degree as dg
from .core import compose, enumerate_leq, enumerate_paths, factor, paths_upto


class CyclicPresentation(ValueError):
    pass


@dataclass(frozen=True, order=True)
class MinimalExtensionPair:
    alpha: object
    beta: object


@dataclass(frozen=True, order=True)
class BoundaryPath:
    """A finite boundary path: s(path) receives no edges at all."""

    path: object

    @property
    def range(self):
        return self.path.range

    @property
    def degree(self):
        return self.path.degree

    def __str__(self):
        return str(self.path)


def minimal_extensions(p, lam, mu):
    if lam.range != mu.range:
        return []
    top = dg.join(lam.degree, mu.degree)
    out = []
    for alpha in enumerate_paths(p, lam.source, dg.sub(top, lam.degree)):
        whole = compose(p, lam, alpha)
        if factor(p, whole, dg.zero(p.rank), mu.degree) == mu:
            beta = factor(p, whole, mu.degree, top)
            out.append(MinimalExtensionPair(alpha, beta))
    return sorted(out)


def _reach_diagonal(p, v, n):
    """Vertices s(λ) for λ ∈ vΛ^n, computed one color step at a time."""
    frontier = {v}
    for i, a in enumerate(n, 1):
        for _ in range(a):
            frontier = {e.source for u in frontier for e in p.edges_into(u, i)}
            if not frontier:
                return frontier
    return frontier


def is_source(p, v):
    """vΛ^{(B,...,B)} = ∅ with B = number of vertices."""
    p.check_vertex(v)
    B = len(p.vertices)
    return not _reach_diagonal(p, v, (B,) * p.rank)


def is_source_naive(p, v, extra=2):
    """Search every n up to (B+extra, ...) for an empty vΛ^n."""
    B = len(p.vertices) + extra
    return any(not enumerate_paths(p, v, n) for n in dg.box((B,) * p.rank))


def is_locally_convex(p):
    """Returns (True, None) or (False, (v, λ, μ))."""
    for v in p.vertices:
        for i, j in itertools.permutations(range(1, p.rank + 1), 2):
            for lam in p.edges_into(v, i):
                if not p.edges_into(lam.source, j):
                    for mu in p.edges_into(v, j):
                        return False, (v, p.edge_path(lam.id), p.edge_path(mu.id))
    return True, None


def is_acyclic(p):
    state = {}

    def visit(u):
        state[u] = 1
        for i in range(1, p.rank + 1):
            for e in p.edges_into(u, i):
                s = state.get(e.source)
                if s == 1 or (s is None and not visit(e.source)):
                    return False
        state[u] = 2
        return True

    return all(state.get(v) == 2 or visit(v) for v in p.vertices)


def is_exhaustive(p, v, E, bound=None):
    """Bounded exhaustivity: checks every μ ∈ vΛ^{≤bound}."""
    E = list(E)
    if not E:
        raise ValueError("E must be nonempty")
    for lam in E:
        if lam.range != v:
            raise ValueError(f"{lam} is not in {v}Λ")
    top = dg.join_all((lam.degree for lam in E), p.rank)
    bound = top if bound is None else tuple(bound)
    if not dg.leq(top, bound):
        raise ValueError(f"bound {bound} is below {top}")
    return all(any(minimal_extensions(p, lam, mu) for lam in E)
               for mu in enumerate_leq(p, v, bound))


def enumerate_boundary_paths(p, v):
    if not is_acyclic(p):
        raise CyclicPresentation("boundary paths of a cyclic presentation are not enumerable")
    out = []

    def walk(u, color, seq):
        if not p.receives(u):
            out.append(BoundaryPath(p._make(v, tuple(seq), u)))
        for i in range(color, p.rank + 1):
            for e in p.edges_into(u, i):
                seq.append(e.id)
                walk(e.source, i, seq)
                seq.pop()

    p.check_vertex(v)
    walk(v, 1, [])
    return sorted(out)


def all_boundary_paths(p):
    return [x for v in p.vertices for x in enumerate_boundary_paths(p, v)]


def _reachable(p, v, colors):
    seen, stack = {v}, [v]
    while stack:
        u = stack.pop()
        for i in colors:
            for e in p.edges_into(u, i):
                if e.source not in seen:
                    seen.add(e.source)
                    stack.append(e.source)
    return seen


def _grid_vertices(p, f):
    return {factor(p, f, m, m).range for m in dg.box(f.degree)}


def _infinite_in(p, u, inf, allowed, bound):
    """Is there a path from u, unbounded in the colors ``inf`` and zero
    elsewhere, all of whose grid vertices lie in ``allowed``?

    Exact for a single color (cycle search).  For two or more colors
    this is the bounded test at degree (bound, ..., bound) on ``inf``.
    """
    if len(inf) == 1:
        (i,) = inf
        alive = {w for w in allowed}
        while True:
            keep = {w for w in alive if any(e.source in alive for e in p.edges_into(w, i))}
            if keep == alive:
                return u in alive
            alive = keep
    n = tuple(bound if i in inf else 0 for i in range(1, p.rank + 1))
    # grow along the diagonal, keeping only paths whose grid stays allowed
    layer = [p.identity(u)]
    step = tuple(1 if i in inf else 0 for i in range(1, p.rank + 1))
    for _ in range(bound):
        nxt = set()
        for f in layer:
            for c in enumerate_paths(p, f.source, step):
                g = compose(p, f, c)
                if _grid_vertices(p, g) <= allowed:
                    nxt.add(g)
        if not nxt:
            return False
        layer = sorted(nxt)
    return dg.leq(n, layer[0].degree)


def flat(p, v, S, bound=None):
    """Is there a boundary path at v with zero degree in every color of S?

    A witness splits into a prefix from v avoiding S, then a tail that is
    infinite exactly in some set I of colors and whose vertices receive
    no edge of the remaining (finished) colors.  With I empty the tail is
    a vertex receiving nothing, which is the whole story for acyclic
    presentations.
    """
    S = frozenset(S)
    bound = 2 * len(p.vertices) if bound is None else bound
    key = ("flat", v, S, bound)
    if key in p._cache:
        return p._cache[key]
    p.check_vertex(v)
    colors = frozenset(range(1, p.rank + 1))
    reach = _reachable(p, v, sorted(colors - S))
    result = any(not p.receives(u) for u in reach)
    if not result and not is_acyclic(p):
        free = sorted(colors - S)
        for r in range(1, len(free) + 1):
            for inf in itertools.combinations(free, r):
                finished = sorted(colors - set(inf))
                allowed = {w for w in p.vertices if not p.receives(w, finished)}
                if any(u in allowed and _infinite_in(p, u, set(inf), allowed, bound)
                       for u in sorted(reach)):
                    result = True
                    break
            if result:
                break
    p._cache[key] = result
    return result


def flat_bruteforce(p, v, S, bound=None):
    """Oracle for ``flat``: scan every S-avoiding path of degree at most
    (B, ..., B).  Colors reaching B count as infinite; the rest must be
    finished on the far face of the path from B//2 onward."""
    S = frozenset(S)
    B = 2 * len(p.vertices) if bound is None else bound
    q = tuple(0 if i in S else B for i in range(1, p.rank + 1))
    half = B // 2
    for f in paths_upto(p, v, q):
        d = f.degree
        inf = [i for i in range(1, p.rank + 1) if i not in S and d[i - 1] == B]
        finished = [i for i in range(1, p.rank + 1) if i not in inf]
        ok = True
        for m in dg.box(d):
            if any(m[i - 1] != d[i - 1] for i in finished):
                continue
            if any(m[i - 1] < half for i in inf):
                continue
            if p.receives(factor(p, f, m, m).range, finished):
                ok = False
                break
        if ok:
            return True
    return False
