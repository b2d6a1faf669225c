"""Reading and writing the line-oriented ``.kg`` format.

    kgraph k=2
    vertex v0
    edge lambda color=1 from=v1 to=v0
    square lambda alpha = mu beta
    extvertex New v3 1 2          # window exports only

``from`` is the source, ``to`` the range.  ``#`` starts a comment.
"""
import re

from .core import Edge, Presentation, Square

IDENT = re.compile(r"[A-Za-z0-9_]+\Z")


class KgSyntaxError(ValueError):
    def __init__(self, lineno, message):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def ext_vertex_id(base, offset):
    return "N_" + base + "_" + "_".join(str(c) for c in offset)


def _ident(tok, lineno, what):
    if not IDENT.match(tok):
        raise KgSyntaxError(lineno, f"bad {what} identifier {tok!r}")
    return tok


def parse_presentation(text):
    rank = None
    vertices, seen_v = [], set()
    edges, seen_e = [], set()
    squares = []
    ext = {}

    def declare(v, lineno):
        if v in seen_v:
            raise KgSyntaxError(lineno, f"duplicate vertex {v}")
        seen_v.add(v)
        vertices.append(v)

    for lineno, raw in enumerate(text.splitlines(), 1):
        toks = raw.split("#", 1)[0].split()
        if not toks:
            continue
        kw, args = toks[0], toks[1:]
        if rank is None:
            m = re.fullmatch(r"k=(\d+)", args[0]) if kw == "kgraph" and len(args) == 1 else None
            if not m or int(m.group(1)) < 1:
                raise KgSyntaxError(lineno, "expected header 'kgraph k=<K>'")
            rank = int(m.group(1))
            continue
        if kw == "vertex":
            if len(args) != 1:
                raise KgSyntaxError(lineno, "expected 'vertex <id>'")
            declare(_ident(args[0], lineno, "vertex"), lineno)
        elif kw == "edge":
            if len(args) != 4:
                raise KgSyntaxError(lineno, "expected 'edge <id> color=<i> from=<v> to=<v>'")
            eid = _ident(args[0], lineno, "edge")
            fields = {}
            for tok in args[1:]:
                key, _, val = tok.partition("=")
                if key not in ("color", "from", "to") or key in fields or not val:
                    raise KgSyntaxError(lineno, f"bad edge field {tok!r}")
                fields[key] = val
            try:
                color = int(fields["color"])
            except ValueError:
                raise KgSyntaxError(lineno, f"bad color {fields['color']!r}") from None
            if not 1 <= color <= rank:
                raise KgSyntaxError(lineno, f"color {color} outside 1..{rank}")
            for key in ("from", "to"):
                if fields[key] not in seen_v:
                    raise KgSyntaxError(lineno, f"unknown vertex {fields[key]}")
            if eid in seen_e:
                raise KgSyntaxError(lineno, f"duplicate edge {eid}")
            seen_e.add(eid)
            edges.append(Edge(eid, color, fields["from"], fields["to"]))
        elif kw == "square":
            if len(args) != 5 or args[2] != "=":
                raise KgSyntaxError(lineno, "expected 'square <a> <b> = <c> <d>'")
            ids = [_ident(t, lineno, "edge") for t in (args[0], args[1], args[3], args[4])]
            squares.append((lineno, Square(*ids)))
        elif kw == "extvertex":
            if len(args) != 2 + rank or args[0] != "New":
                raise KgSyntaxError(lineno, f"expected 'extvertex New <base> <c1> ... <c{rank}>'")
            base = _ident(args[1], lineno, "vertex")
            try:
                offset = tuple(int(a) for a in args[2:])
            except ValueError:
                raise KgSyntaxError(lineno, "offsets must be integers") from None
            if any(c < 0 for c in offset) or not any(offset):
                raise KgSyntaxError(lineno, "offset must be nonzero and nonnegative")
            v = ext_vertex_id(base, offset)
            declare(v, lineno)
            ext[v] = (base, offset)
        else:
            raise KgSyntaxError(lineno, f"unknown declaration {kw!r}")
    if rank is None:
        raise KgSyntaxError(1, "missing header 'kgraph k=<K>'")
    for lineno, s in squares:
        for e in (s.a, s.b, s.c, s.d):
            if e not in seen_e:
                raise KgSyntaxError(lineno, f"unknown edge {e}")
    return Presentation(rank, vertices, edges, [s for _, s in squares], ext)


def format_presentation(p):
    lines = [f"kgraph k={p.rank}"]
    for v in p.vertices:
        if v in p.ext_vertices:
            base, offset = p.ext_vertices[v]
            lines.append("extvertex New " + base + " " + " ".join(map(str, offset)))
        else:
            lines.append(f"vertex {v}")
    for e in p.edges.values():
        lines.append(f"edge {e.id} color={e.color} from={e.source} to={e.range}")
    for s in p.squares:
        lines.append(f"square {s}")
    return "\n".join(lines) + "\n"


def load(path):
    with open(path) as fh:
        return parse_presentation(fh.read())
