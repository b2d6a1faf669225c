import pytest
from hypothesis import given, settings

from kgtool import degree as dg
from kgtool.analysis import (CyclicPresentation, MinimalExtensionPair,
                             all_boundary_paths, enumerate_boundary_paths,
                             flat, flat_bruteforce, is_acyclic, is_exhaustive,
                             is_locally_convex, is_source, is_source_naive,
                             minimal_extensions)
from kgtool.core import (all_paths, compose, enumerate_leq, enumerate_paths,
                         factor, generate_omega, paths_upto)
from kgtool.demos import demo
from kgtool.kgfile import parse_presentation

from helpers import color_subsets, digraphs, products, products3


def E(p, name):
    return p.edge_path(name)


def test_mce_square(omega11):
    p = omega11
    assert minimal_extensions(p, E(p, "lambda"), E(p, "mu")) == [
        MinimalExtensionPair(E(p, "alpha"), E(p, "beta"))]


def test_mce_self(omega11):
    p = omega11
    lam = E(p, "lambda")
    ident = p.identity("v1")
    assert minimal_extensions(p, lam, lam) == [MinimalExtensionPair(ident, ident)]


def test_mce_none(ex43):
    assert minimal_extensions(ex43, E(ex43, "lambda"), E(ex43, "mu")) == []
    assert minimal_extensions(ex43, E(ex43, "lambda"), ex43.identity("v2")) == []


def test_mce_symmetry(any_demo):
    p = any_demo
    paths = all_paths(p, max_total=3)
    for f in paths:
        for g in paths:
            one = {(m.alpha, m.beta) for m in minimal_extensions(p, f, g)}
            two = {(m.beta, m.alpha) for m in minimal_extensions(p, g, f)}
            assert one == two


def test_common_extensions_have_minimal_prefix():
    p = generate_omega(2, (2, 2))
    paths = all_paths(p)
    for f in paths:
        for g in paths:
            if f.range != g.range:
                continue
            top = dg.join(f.degree, g.degree)
            mce = {compose(p, f, m.alpha) for m in minimal_extensions(p, f, g)}
            for h in paths:
                if h.range != f.range or not dg.leq(top, h.degree):
                    continue
                z = dg.zero(2)
                if factor(p, h, z, f.degree) == f and factor(p, h, z, g.degree) == g:
                    assert factor(p, h, z, top) in mce


def test_is_source_examples(omega11):
    assert is_source(omega11, "v0")
    assert not is_source(demo("loop"), "v")
    p = generate_omega(2, (3, 1))
    assert all(is_source(p, v) for v in p.vertices)


def test_is_source_agrees_with_naive(any_demo):
    for v in any_demo.vertices:
        assert is_source(any_demo, v) == is_source_naive(any_demo, v)


@settings(max_examples=30, deadline=None)
@given(products(max_vertices=2, max_edges=2))
def test_is_source_agrees_with_naive_on_products(p):
    for v in p.vertices:
        assert is_source(p, v) == is_source_naive(p, v, extra=1)


def test_is_source_monotone():
    p = demo("cylinder")
    for v in p.vertices:
        for n in dg.box((3, 3)):
            if not enumerate_paths(p, v, n):
                for n2 in dg.box((4, 4)):
                    if dg.leq(n, n2):
                        assert not enumerate_paths(p, v, n2)


def test_locally_convex(omega11, ex43):
    assert is_locally_convex(omega11) == (True, None)
    ok, witness = is_locally_convex(ex43)
    assert not ok
    assert witness == ("v0", E(ex43, "lambda"), E(ex43, "mu"))
    assert is_locally_convex(demo("example41b"))[0]


def test_is_exhaustive_examples(omega11, ex43):
    assert is_exhaustive(omega11, "v0", [E(omega11, "lambda")], (1, 1))
    assert not is_exhaustive(ex43, "v0", [E(ex43, "lambda")], (1, 1))
    for p in (omega11, ex43):
        for v in p.vertices:
            assert is_exhaustive(p, v, [p.identity(v)])


def test_is_exhaustive_errors(omega11):
    with pytest.raises(ValueError):
        is_exhaustive(omega11, "v1", [E(omega11, "lambda")])
    with pytest.raises(ValueError):
        is_exhaustive(omega11, "v0", [])
    with pytest.raises(ValueError):
        is_exhaustive(omega11, "v0", [E(omega11, "lambda")], (0, 1))


def test_leq_set_versus_all_short_paths(any_demo):
    # testing vΛ^{≤q} is the same as testing every path of degree <= q
    p = any_demo
    q = (2,) * p.rank
    for v in p.vertices:
        cands = paths_upto(p, v, q)
        for lam in cands:
            via_leq = all(minimal_extensions(p, lam, mu) for mu in enumerate_leq(p, v, q))
            via_all = all(minimal_extensions(p, lam, mu) for mu in cands)
            assert via_leq == via_all


def test_is_acyclic(omega11, ex43):
    assert is_acyclic(omega11) and is_acyclic(ex43)
    assert not is_acyclic(demo("loop"))
    assert not is_acyclic(demo("cylinder"))


def test_boundary_paths_omega11(omega11):
    p = omega11
    got = {str(x) for x in all_boundary_paths(p)}
    la = compose(p, E(p, "lambda"), E(p, "alpha"))
    assert got == {"id_v3", str(E(p, "alpha")), str(E(p, "beta")), str(la)}


def test_boundary_paths_ex43(ex43):
    got = {str(x) for x in all_boundary_paths(ex43)}
    assert got == {"id_v1", "id_v2", "[lambda]", "[mu]"}


def test_boundary_paths_isolated():
    p = parse_presentation("kgraph k=2\nvertex v\n")
    assert [str(x) for x in enumerate_boundary_paths(p, "v")] == ["id_v"]


def test_boundary_paths_cyclic_raises():
    with pytest.raises(CyclicPresentation):
        enumerate_boundary_paths(demo("loop"), "v")


@pytest.mark.parametrize("name", ["example42", "example43", "example41", "omega2_22"])
def test_boundary_closed_under_shift_and_prefix(name):
    from kgtool.demos import all_demos
    p = all_demos()[name]
    basis = {x.path for x in all_boundary_paths(p)}
    for x in basis:
        for m in dg.box(x.degree):
            assert factor(p, x, m, x.degree) in basis
    for lam in all_paths(p):
        for x in basis:
            if x.range == lam.source:
                assert compose(p, lam, x) in basis
    for v in p.vertices:
        assert enumerate_boundary_paths(p, v)


def test_flat_examples(omega11, ex43):
    assert flat(omega11, "v3", {1, 2})
    assert flat(omega11, "v1", {1})
    assert not flat(omega11, "v1", {2})
    assert flat(ex43, "v0", {1}) and flat(ex43, "v0", {2})
    assert not flat(ex43, "v0", {1, 2})


def test_flat_cyclic():
    loop = demo("loop")
    assert flat(loop, "v", set()) and not flat(loop, "v", {1})
    cyl = demo("cylinder")
    assert flat(cyl, "u", {2})
    assert not flat(cyl, "u", {1}) and not flat(cyl, "v", {1}) and not flat(cyl, "v", {2})


def test_flat_empty_set_in_acyclic(any_demo):
    if is_acyclic(any_demo):
        assert all(flat(any_demo, v, set()) for v in any_demo.vertices)


def test_flat_agrees_with_bruteforce_on_demos(any_demo):
    p = any_demo
    for v in p.vertices:
        for S in color_subsets(p.rank):
            assert flat(p, v, S) == flat_bruteforce(p, v, S), (v, S)


@settings(max_examples=40, deadline=None)
@given(products(max_vertices=2, max_edges=3))
def test_flat_agrees_with_bruteforce_on_products(p):
    # the default bound 2|V| is too slow for brute force on dense cyclic graphs
    for v in p.vertices:
        for S in color_subsets(2):
            assert flat(p, v, S, bound=4) == flat_bruteforce(p, v, S, bound=4), (v, S)


@settings(max_examples=30, deadline=None)
@given(products3())
def test_flat_agrees_with_bruteforce_on_rank3_products(p):
    for v in p.vertices:
        for S in color_subsets(3):
            assert flat(p, v, S, bound=3) == flat_bruteforce(p, v, S, bound=3), (v, S)


@settings(max_examples=60, deadline=None)
@given(digraphs())
def test_flat_agrees_with_bruteforce_on_1graphs(p):
    for v in p.vertices:
        for S in color_subsets(1):
            assert flat(p, v, S) == flat_bruteforce(p, v, S)
