"""Boundary-path representation of a finite acyclic k-graph.

T_λ acts on the space spanned by boundary paths by prefixing λ:
T_λ[y, x] = 1 exactly when s(λ) = r(x) and y = λx.
"""
from dataclasses import dataclass
import itertools

import networkx as nx
import numpy as np

from . import degree as dg
from .analysis import (all_boundary_paths, is_acyclic, is_exhaustive,
                       is_locally_convex, minimal_extensions, CyclicPresentation)
from .core import all_paths, compose, enumerate_leq, paths_upto
from .linalg import integer_rank
from .report import Report, summarize


@dataclass
class CKFamily:
    presentation: object
    basis: list
    matrices: dict

    def T(self, lam):
        return self.matrices[lam]

    def vertex(self, v):
        return self.matrices[self.presentation.identity(v)]


def build_boundary_representation(p):
    if not is_acyclic(p):
        raise CyclicPresentation("the boundary representation needs an acyclic presentation")
    basis = [x.path for x in all_boundary_paths(p)]
    index = {x: i for i, x in enumerate(basis)}
    n = len(basis)
    mats = {}
    for lam in all_paths(p):
        t = np.zeros((n, n), dtype=np.int64)
        for x in basis:
            if x.range == lam.source:
                t[index[compose(p, lam, x)], index[x]] = 1
        t.setflags(write=False)
        mats[lam] = t
    return CKFamily(p, basis, mats)


def check_toeplitz(p, mats, rep=None):
    """TCK1-TCK3 for a family given as {path: matrix}; Λ^min is taken in p."""
    rep = rep or Report("ck", prefix="CK-CHECK")
    paths = sorted(mats)
    verts = [p.identity(v) for v in p.vertices if p.identity(v) in mats]

    bad = []
    for a, b in itertools.product(verts, repeat=2):
        ta, tb = mats[a], mats[b]
        want = ta if a == b else 0 * ta
        if not (np.array_equal(ta @ tb, want) and np.array_equal(ta, ta.T)):
            bad.append(f"({a},{b})")
    rep.add("TCK1", not bad, summarize(bad) or f"{len(verts)} orthogonal projections")

    bad = []
    for f in paths:
        for g in paths:
            if f.source == g.range:
                fg = compose(p, f, g)
                if fg in mats and not np.array_equal(mats[fg], mats[f] @ mats[g]):
                    bad.append(f"({f},{g})")
    rep.add("TCK2", not bad, summarize(bad) or "T_{λμ} = T_λ T_μ on composable pairs")

    bad = []
    for f in paths:
        for g in paths:
            lhs = mats[f].T @ mats[g]
            rhs = 0 * lhs
            for pair in minimal_extensions(p, f, g):
                rhs = rhs + mats[pair.alpha] @ mats[pair.beta].T
            if not np.array_equal(lhs, rhs):
                bad.append(f"({f},{g})")
    rep.add("TCK3", not bad, summarize(bad) or f"{len(paths) ** 2} pairs")
    return rep


def minimal_exhaustive_sets(p, v, bound):
    """All minimal exhaustive subsets of paths at v with degree <= bound."""
    cands = paths_upto(p, v, bound)
    if len(cands) > 16:
        raise ValueError(f"{len(cands)} candidate paths at {v}; lower the bound")
    found = []
    for size in range(1, len(cands) + 1):
        for E in itertools.combinations(cands, size):
            if any(set(F) <= set(E) for F in found):
                continue
            if is_exhaustive(p, v, E, bound):
                found.append(E)
    return found


def check_ck_relations(fam, bound):
    p = fam.presentation
    bound = dg.check_degree(bound, p.rank)
    rep = check_toeplitz(p, fam.matrices)

    bad, count = [], 0
    for v in p.vertices:
        tv = fam.vertex(v)
        for E in minimal_exhaustive_sets(p, v, bound):
            count += 1
            prod = tv
            for lam in E:
                t = fam.T(lam)
                prod = prod @ (tv - t @ t.T)
            if prod.any():
                bad.append(f"{v}: {{{', '.join(map(str, E))}}}")
    rep.add("CK", not bad, summarize(bad) or f"{count} minimal exhaustive sets")

    convex, _ = is_locally_convex(p)
    bad, count = [], 0
    for v in p.vertices:
        tv = fam.vertex(v)
        for m in dg.box(bound):
            count += 1
            total = 0 * tv
            for lam in enumerate_leq(p, v, m):
                t = fam.T(lam)
                total = total + t @ t.T
            if not np.array_equal(total, tv):
                bad.append(f"{v} at {dg.fmt(m)}")
    if convex:
        rep.add("CK'", not bad, summarize(bad) or f"{count} (v, m) cases")
    else:
        note = "holds" if not bad else f"fails on {len(bad)} cases"
        rep.add("CK'", True, f"not required (not locally convex); identity {note}")
    return rep


def algebra_dimension(fam):
    """Rank of span{T_λ T_μ* : s(λ) = s(μ)} and the matrix block sizes."""
    by_source = {}
    for lam, t in fam.matrices.items():
        by_source.setdefault(lam.source, []).append(t)
    rows = []
    for ts in by_source.values():
        for a in ts:
            for b in ts:
                rows.append((a @ b.T).ravel().tolist())
    rank = integer_rank(rows)

    g = nx.Graph()
    g.add_nodes_from(range(len(fam.basis)))
    for t in fam.matrices.values():
        for y, x in zip(*np.nonzero(t)):
            g.add_edge(int(y), int(x))
    blocks = sorted(len(c) for c in nx.connected_components(g))
    return rank, blocks


def dump_csv(fam, out):
    """Write every T_λ as integer CSV rows, one block per path."""
    lines = ["# basis order: " + " ".join(str(x) for x in fam.basis)]
    for lam in sorted(fam.matrices):
        lines.append(f"# T {lam} range={lam.range} source={lam.source}")
        for row in fam.matrices[lam]:
            lines.append(",".join(str(int(a)) for a in row))
    with open(out, "w") as fh:
        fh.write("\n".join(lines) + "\n")
