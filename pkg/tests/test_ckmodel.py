import itertools
import random

import numpy as np
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from kgtool.analysis import CyclicPresentation
from kgtool.ckmodel import (algebra_dimension, build_boundary_representation,
                            check_ck_relations, check_toeplitz, dump_csv,
                            minimal_exhaustive_sets)
from kgtool.core import all_paths, compose, generate_omega
from kgtool.demos import demo
from kgtool.kgfile import parse_presentation
from kgtool.linalg import integer_rank

from helpers import products


def E(p, name):
    return p.edge_path(name)


def test_basis_sizes(omega11, ex43):
    assert len(build_boundary_representation(omega11).basis) == 4
    assert len(build_boundary_representation(ex43).basis) == 4


def test_isolated_vertex():
    p = parse_presentation("kgraph k=1\nvertex v\n")
    fam = build_boundary_representation(p)
    assert fam.vertex("v").tolist() == [[1]]
    assert algebra_dimension(fam) == (1, [1])


def test_cyclic_rejected():
    with pytest.raises(CyclicPresentation):
        build_boundary_representation(demo("loop"))


def test_partial_isometries(any_demo):
    try:
        fam = build_boundary_representation(any_demo)
    except CyclicPresentation:
        return
    for t in fam.matrices.values():
        assert set(np.unique(t)) <= {0, 1}
        assert (t.sum(axis=0) <= 1).all() and (t.sum(axis=1) <= 1).all()
        assert np.array_equal(t @ t.T @ t, t)


def test_tck3_example(omega11):
    fam = build_boundary_representation(omega11)
    p = omega11
    lhs = fam.T(E(p, "lambda")).T @ fam.T(E(p, "mu"))
    rhs = fam.T(E(p, "alpha")) @ fam.T(E(p, "beta")).T
    assert np.array_equal(lhs, rhs)
    assert lhs.sum() == 1


def test_ck_example(omega11):
    p = omega11
    fam = build_boundary_representation(p)
    t = fam.T(E(p, "lambda"))
    assert not (fam.vertex("v0") - t @ t.T).any()


def test_ck_prime_example(omega11):
    p = omega11
    fam = build_boundary_representation(p)
    t = fam.T(compose(p, E(p, "lambda"), E(p, "alpha")))
    assert np.array_equal(fam.vertex("v0"), t @ t.T)


def test_relations_pass(omega11, ex43):
    for p in (omega11, ex43, generate_omega(2, (2, 2)), demo("example41")):
        rep = check_ck_relations(build_boundary_representation(p), (2,) * p.rank)
        assert rep.passed, rep.text()
        assert all(line.startswith("CK-CHECK ") for line in rep.lines())


def test_ck_detects_broken_family(omega11):
    fam = build_boundary_representation(omega11)
    lam = E(omega11, "lambda")
    broken = dict(fam.matrices)
    broken[lam] = np.zeros_like(broken[lam])
    rep = check_toeplitz(omega11, broken)
    assert not rep["TCK2"].passed and not rep["TCK3"].passed


def test_minimal_exhaustive_sets(omega11):
    sets = minimal_exhaustive_sets(omega11, "v0", (2, 2))
    names = {tuple(str(x) for x in s) for s in sets}
    assert ("id_v0",) in names
    assert (str(E(omega11, "lambda")),) in names
    assert (str(E(omega11, "mu")),) in names


def test_dimensions(omega11, ex43):
    assert algebra_dimension(build_boundary_representation(omega11)) == (16, [4])
    assert algebra_dimension(build_boundary_representation(ex43)) == (8, [2, 2])


def test_dimension_matches_blocks(any_demo):
    try:
        fam = build_boundary_representation(any_demo)
    except CyclicPresentation:
        return
    dim, blocks = algebra_dimension(fam)
    assert dim == sum(b * b for b in blocks)


@settings(max_examples=25, deadline=None)
@given(products(acyclic=True, max_vertices=3, max_edges=2))
def test_dimension_matches_blocks_products(p):
    fam = build_boundary_representation(p)
    dim, blocks = algebra_dimension(fam)
    assert dim == sum(b * b for b in blocks)
    assert check_toeplitz(p, fam.matrices).passed


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 6), st.integers(1, 6), st.integers(0, 10 ** 6))
def test_integer_rank_against_sympy(rows, cols, seed):
    rng = random.Random(seed)
    m = [[rng.choice([0, 0, 1, -1, 2, 3]) for _ in range(cols)] for _ in range(rows)]
    assert integer_rank(m) == sympy.Matrix(m).rank()


def test_integer_rank_edge_cases():
    assert integer_rank([]) == 0
    assert integer_rank([[0, 0], [0, 0]]) == 0
    assert integer_rank([[2, 4], [1, 2]]) == 1


def test_restriction_to_subgraph():
    big = generate_omega(2, (2, 2))
    small = generate_omega(2, (1, 1))
    fam = build_boundary_representation(big)
    sub = {f: fam.T(f) for f in all_paths(small)}
    assert all(f in fam.matrices for f in sub)
    assert check_toeplitz(small, sub).passed


def test_span_closure(omega11, ex43):
    for p in (omega11, ex43):
        fam = build_boundary_representation(p)
        spanning = [fam.T(a) @ fam.T(b).T for a, b in itertools.product(fam.matrices, repeat=2)
                    if a.source == b.source]
        rows = [s.ravel().tolist() for s in spanning]
        base = integer_rank(rows)
        rng = random.Random(0)
        for _ in range(40):
            x, y = rng.choice(spanning), rng.choice(spanning)
            assert integer_rank(rows + [(x @ y).ravel().tolist()]) == base


def test_vertex_projections_nonzero(omega11, ex43):
    for p in (omega11, ex43):
        fam = build_boundary_representation(p)
        assert all(fam.vertex(v).any() for v in p.vertices)


def test_csv_dump(tmp_path, ex43):
    fam = build_boundary_representation(ex43)
    out = tmp_path / "m.csv"
    dump_csv(fam, out)
    lines = out.read_text().splitlines()
    assert lines[0].startswith("# basis order: ")
    blocks = [l for l in lines if l.startswith("# T ")]
    assert len(blocks) == len(fam.matrices)
    data = [l for l in lines if not l.startswith("#")]
    assert len(data) == 4 * len(fam.matrices)
    assert all(set(l.split(",")) <= {"0", "1"} for l in data)
