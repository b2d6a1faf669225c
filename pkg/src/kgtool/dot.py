"""Graphviz DOT output.

Colors 1 to 4 draw as solid, dashed, dotted and bold; higher colors fall
back to a numeric label.  In window exports the original vertices and
edges are double-stroked and the added ones single.
"""

STYLES = {1: "solid", 2: "dashed", 3: "dotted", 4: "bold"}


def _q(s):
    return '"' + str(s).replace('"', '\\"') + '"'


def to_dot(p, name="kgraph"):
    yield f"digraph {_q(name)} {{\n"
    yield "  rankdir=TB;\n"
    marked = bool(p.ext_vertices)
    # an added edge always has an added source
    ext_edges = {e.id for e in p.edges.values() if e.source in p.ext_vertices}
    for v in p.vertices:
        attrs = []
        if v in p.ext_vertices:
            base, offset = p.ext_vertices[v]
            attrs.append(f"label={_q(f'New({base},' + ','.join(map(str, offset)) + ')')}")
        elif marked:
            attrs.append("peripheries=2")
        yield f"  {_q(v)}" + (f" [{', '.join(attrs)}]" if attrs else "") + ";\n"
    for e in p.edges.values():
        style = STYLES.get(e.color)
        attrs = [f"style={style}" if style else "style=solid"]
        label = e.id if style else f"{e.id} ({e.color})"
        attrs.append(f"label={_q(label)}")
        if marked and e.id not in ext_edges:
            attrs.append('color="black:invis:black"')
        # arrows run from source to range
        yield f"  {_q(e.source)} -> {_q(e.range)} [{', '.join(attrs)}];\n"
    yield "}\n"


def export_dot(p, out, name="kgraph"):
    text = "".join(to_dot(p, name))
    if out is None:
        return text
    with open(out, "w") as fh:
        fh.write(text)
    return text
