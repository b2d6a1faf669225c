import itertools

from hypothesis import strategies as st

from kgtool.core import Edge, Presentation, Square, from_directed_graph


def product_graph(*factors):
    """The product k-graph of k 1-graphs; always a valid presentation."""
    k = len(factors)
    verts = ["x".join(t) for t in itertools.product(*(f.vertices for f in factors))]

    def name(parts):
        return "x".join(parts)

    def edge_id(c, e, others):
        parts = list(others)
        parts.insert(c, e)
        return name(parts)

    edges, squares = [], []
    for c, f in enumerate(factors):
        rest = [g.vertices for j, g in enumerate(factors) if j != c]
        for e in f.edges.values():
            for others in itertools.product(*rest):
                src, rng = list(others), list(others)
                src.insert(c, e.source)
                rng.insert(c, e.range)
                edges.append(Edge(edge_id(c, e.id, others), c + 1, name(src), name(rng)))
    for a, b in itertools.combinations(range(k), 2):
        rest = [g.vertices for j, g in enumerate(factors) if j not in (a, b)]
        for e in factors[a].edges.values():
            for f in factors[b].edges.values():
                for others in itertools.product(*rest):
                    def at(x, y):
                        parts = list(others)
                        for pos, val in sorted([(a, x), (b, y)]):
                            parts.insert(pos, val)
                        return name(parts)
                    # (e, r(f)) (s(e), f) = (r(e), f) (e, s(f))
                    squares.append(Square(at(e.id, f.range), at(e.source, f.id),
                                          at(e.range, f.id), at(e.id, f.source)))
    return Presentation(k, verts, edges, squares)


@st.composite
def digraphs(draw, max_vertices=4, max_edges=5, acyclic=False):
    n = draw(st.integers(1, max_vertices))
    verts = [f"a{i}" for i in range(n)]
    pairs = [(s, r) for s in range(n) for r in range(n) if not acyclic or s > r]
    if not pairs:
        return from_directed_graph(verts, [])
    chosen = draw(st.lists(st.sampled_from(pairs), max_size=max_edges))
    edges = [(f"g{i}", verts[s], verts[r]) for i, (s, r) in enumerate(chosen)]
    return from_directed_graph(verts, edges)


@st.composite
def products(draw, acyclic=False, max_vertices=3, max_edges=3):
    g1 = draw(digraphs(max_vertices, max_edges, acyclic))
    g2 = draw(digraphs(max_vertices, max_edges, acyclic))
    return product_graph(g1, g2)


def color_subsets(k):
    colors = range(1, k + 1)
    return [frozenset(c) for r in range(k + 1) for c in itertools.combinations(colors, r)]


@st.composite
def products3(draw, max_vertices=2, max_edges=2):
    return product_graph(*(draw(digraphs(max_vertices, max_edges)) for _ in range(3)))
