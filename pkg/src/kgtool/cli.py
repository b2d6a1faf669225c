"""Command-line front end.

Inputs are ``.kg`` files or built-in demos written ``demo:NAME`` (for
grids, ``demo:omega:K:M1,...,Mk``).  Exit status is 0 when every check
passes, 1 when one fails and 2 for usage or parse errors.
"""
import argparse
import itertools
import sys

from . import degree as dg
from .analysis import (CyclicPresentation, all_boundary_paths, flat, is_acyclic,
                       is_locally_convex, is_source)
from .ckmodel import (algebra_dimension, build_boundary_representation,
                      check_ck_relations, dump_csv)
from .core import generate_omega, validate_presentation
from .demos import demo
from .desing import (PreconditionViolation, check_lambda_min_preserved,
                     compare_add_heads, iso_check_window, sheet_report,
                     verify_axioms, window_presentation, window_vertices)
from .dot import export_dot
from .kgfile import KgSyntaxError, format_presentation, load
from .report import Report


class UsageError(Exception):
    pass


def load_input(arg):
    if arg.startswith("demo:"):
        name, *args = arg[5:].split(":")
        if name == "omega":
            if len(args) != 2:
                raise UsageError("write grids as demo:omega:K:M1,...,Mk")
            k = int(args[0])
            return generate_omega(k, dg.parse_degree(args[1], k))
        try:
            return demo(name)
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
    return load(arg)


def _degree(text, p, default=2):
    if text is None:
        return (default,) * p.rank
    try:
        return dg.parse_degree(text, p.rank)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit(out, lines):
    for line in lines:
        print(line, file=out)


def _subsets(k):
    colors = range(1, k + 1)
    return [frozenset(c) for r in range(k + 1) for c in itertools.combinations(colors, r)]


def cmd_validate(args, out):
    p = load_input(args.input)
    rep = validate_presentation(p)
    _emit(out, rep.lines())
    return rep.passed


def cmd_analyze(args, out):
    p = load_input(args.input)
    rep = validate_presentation(p)
    _emit(out, rep.lines())
    if not rep.passed:
        return False
    info = Report()
    convex, witness = is_locally_convex(p)
    info.add("row-finite", True, "finite presentation")
    info.add("acyclic", True, str(is_acyclic(p)).lower())
    info.add("locally-convex", True, "true" if convex else
             f"false, witness {witness[0]}: {witness[1]}, {witness[2]}")
    sources = [v for v in p.vertices if is_source(p, v)]
    info.add("sources", True, " ".join(sources) or "none")
    if is_acyclic(p):
        paths = all_boundary_paths(p)
        info.add("boundary-paths", True, f"{len(paths)}: " + " ".join(map(str, paths)))
    _emit(out, info.lines())
    for v in p.vertices:
        row = ["1" if flat(p, v, S) else "0" for S in _subsets(p.rank)]
        names = ["{" + ",".join(map(str, sorted(S))) + "}" for S in _subsets(p.rank)]
        print(f"FLAT {v} " + " ".join(f"{n}={r}" for n, r in zip(names, row)), file=out)
    return True


def _window_lines(p, q):
    verts = window_vertices(p, q)
    yield f"WINDOW {dg.fmt(q)} vertices={len(verts)}"
    for v in verts:
        yield f"VERTEX {v}"


def _write_window_files(p, q, args):
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(format_presentation(window_presentation(p, q)))
    if getattr(args, "figure", None):
        from .plotting import plot_presentation
        plot_presentation(window_presentation(p, q), args.figure,
                          title=f"window {dg.fmt(q)}")


def cmd_desingularize(args, out):
    p = load_input(args.input)
    q = _degree(args.window, p)
    _emit(out, _window_lines(p, q))
    _write_window_files(p, q, args)
    return True


def cmd_verify(args, out):
    p = load_input(args.input)
    q = _degree(args.window, p)
    rep = validate_presentation(p)
    _emit(out, rep.lines())
    ok = rep.passed
    if not ok:
        return False
    for r in (verify_axioms(p, q, args.samples, args.seed), check_lambda_min_preserved(p, q)):
        _emit(out, r.lines())
        ok = ok and r.passed
    return ok


def cmd_ck(args, out):
    p = load_input(args.input)
    fam = build_boundary_representation(p)
    rep = check_ck_relations(fam, _degree(args.bound, p))
    dim, blocks = algebra_dimension(fam)
    rep.add("dimension", dim == sum(b * b for b in blocks),
            f"dimension {dim} blocks {blocks}")
    _emit(out, rep.lines())
    if args.out:
        dump_csv(fam, args.out)
    return rep.passed


def cmd_isocheck(args, out):
    p = load_input(args.input)
    q = _degree(args.window, p)
    other = load_input(args.other)
    ok = iso_check_window(window_presentation(p, q), other)
    status = "PASS" if ok else "FAIL"
    print(f"CHECK window-isomorphism {status}: window {dg.fmt(q)} of {args.input} "
          f"vs {args.other}", file=out)
    return ok


def cmd_addheads(args, out):
    p = load_input(args.input)
    q = _degree(args.bound, p, default=6)
    rep = compare_add_heads(p, q)
    _emit(out, rep.lines())
    return rep.passed


def cmd_export_dot(args, out):
    p = load_input(args.input)
    if args.window:
        p = window_presentation(p, _degree(args.window, p))
    text = export_dot(p, args.out)
    if not args.out:
        out.write(text)
    return True


def _ck_summary(p, q, out):
    fam = build_boundary_representation(p)
    rep = check_ck_relations(fam, q)
    dim, blocks = algebra_dimension(fam)
    _emit(out, rep.lines())
    ok = rep.passed and dim == sum(b * b for b in blocks)
    print(f"CHECK ck-dimension {'PASS' if ok else 'FAIL'}: dimension {dim} "
          f"block{'s' if len(blocks) > 1 else ''} {blocks}", file=out)
    return ok


def cmd_demo(args, out):
    name = args.name
    p = demo(name, *args.params)
    q = _degree(args.window, p)
    _emit(out, _window_lines(p, q))
    _write_window_files(p, q, args)
    ok = True
    if name == "example42":
        grid = generate_omega(2, dg.add(q, (1, 1)))
        iso = iso_check_window(window_presentation(p, q), grid)
        print(f"CHECK iso-omega2 {'PASS' if iso else 'FAIL'}: window {dg.fmt(q)} "
              f"vs grid {dg.fmt(dg.add(q, (1, 1)))}", file=out)
        ok = iso and _ck_summary(p, q, out)
    elif name == "example43":
        rep = sheet_report(p, "v0", q)
        _emit(out, rep.lines())
        ok = rep.passed and _ck_summary(p, q, out)
    elif name == "omega":
        m = generate_shape(p)
        grid = generate_omega(p.rank, dg.add(m, q))
        iso = iso_check_window(window_presentation(p, q), grid)
        print(f"CHECK iso-omega {'PASS' if iso else 'FAIL'}: window {dg.fmt(q)} "
              f"vs grid {dg.fmt(dg.add(m, q))}", file=out)
        ok = iso
    elif p.rank == 1:
        rep = compare_add_heads(p, q)
        _emit(out, rep.lines())
        ok = rep.passed
    rep = verify_axioms(p, q, args.samples, args.seed)
    _emit(out, rep.lines())
    return ok and rep.passed


def generate_shape(p):
    """The degree m of a grid presentation built by generate_omega."""
    top = p.vertices[-1]
    return tuple(int(a) for a in top[1:].split("_"))


def build_parser():
    ap = argparse.ArgumentParser(prog="kgtool", description="k-graph toolkit")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(func=func)
        return sp

    def window(sp):
        sp.add_argument("--window", metavar="c1,...,ck", help="window bound (default 2,...,2)")

    def sampling(sp):
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--samples", type=int, default=500)

    sp = add("validate", cmd_validate, "check the k-graph axioms of a presentation")
    sp.add_argument("input")
    sp = add("analyze", cmd_analyze, "structural predicates and the flat table")
    sp.add_argument("input")
    sp = add("desingularize", cmd_desingularize, "list the window of the extension")
    sp.add_argument("input")
    window(sp)
    sp.add_argument("--out", help="write the window as a .kg file")
    sp.add_argument("--figure", help="render the window to an image file")
    sp = add("verify", cmd_verify, "run the axiom suite on a window")
    sp.add_argument("input")
    window(sp)
    sampling(sp)
    sp = add("ck", cmd_ck, "check Cuntz-Krieger relations and algebra dimension")
    sp.add_argument("input")
    sp.add_argument("--bound", metavar="c1,...,ck", help="exhaustive-set bound (default 2,...,2)")
    sp.add_argument("--out", help="dump the matrices as integer CSV")
    sp = add("isocheck", cmd_isocheck, "compare a window with another presentation")
    sp.add_argument("input")
    sp.add_argument("other")
    window(sp)
    sp = add("addheads", cmd_addheads, "compare a 1-graph window with its add-heads graph")
    sp.add_argument("input")
    sp.add_argument("--bound", metavar="n", help="path length bound (default 6)")
    sp = add("demo", cmd_demo, "replay a built-in example")
    sp.add_argument("name")
    sp.add_argument("params", nargs="*", help="for omega: K then M")
    window(sp)
    sampling(sp)
    sp.add_argument("--out", help="write the window as a .kg file")
    sp.add_argument("--figure", help="render the window to an image file")
    sp = add("export-dot", cmd_export_dot, "write Graphviz DOT")
    sp.add_argument("input")
    window(sp)
    sp.add_argument("--out")
    return ap


def main(argv=None, out=None):
    out = out or sys.stdout
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        ok = args.func(args, out)
    except (KgSyntaxError, UsageError, KeyError, ValueError, OSError) as exc:
        if isinstance(exc, (CyclicPresentation, PreconditionViolation)):
            print(f"CHECK precondition FAIL: {exc}", file=out)
            return 1
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return 2
    return 0 if ok else 1


def run():
    sys.exit(main())
