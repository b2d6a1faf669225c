"""Compiled-in example presentations."""
from .core import generate_omega
from .kgfile import parse_presentation

OMEGA11 = """\
kgraph k=2
# the unit square: v3 is the top corner, v0 the bottom
vertex v0
vertex v1
vertex v2
vertex v3
edge lambda color=1 from=v1 to=v0
edge mu color=2 from=v2 to=v0
edge alpha color=2 from=v3 to=v1
edge beta color=1 from=v3 to=v2
square lambda alpha = mu beta
"""

EX43 = """\
kgraph k=2
# two edges of different colors into v0 that never meet
vertex v0
vertex v1
vertex v2
edge lambda color=1 from=v1 to=v0
edge mu color=2 from=v2 to=v0
"""

CHAIN = """\
kgraph k=1
vertex v
vertex w
edge e color=1 from=w to=v
"""

LOOP_PENDANT = """\
kgraph k=1
vertex a
vertex s
edge l color=1 from=a to=a
edge f color=1 from=s to=a
"""

LOOP = """\
kgraph k=1
vertex v
edge l color=1 from=v to=v
"""

# color-1 loops at both vertices, a color-2 edge from u down to v
CYLINDER = """\
kgraph k=2
vertex v
vertex u
edge a color=1 from=v to=v
edge b color=1 from=u to=u
edge f color=2 from=u to=v
square a f = f b
"""

TEXTS = {
    "example41": CHAIN,
    "example41b": LOOP_PENDANT,
    "example42": OMEGA11,
    "example43": EX43,
    "loop": LOOP,
    "cylinder": CYLINDER,
}


def demo(name, *args):
    """A demo presentation by name; ``omega`` takes k and then m."""
    if name == "omega":
        k, *m = (int(a) for a in ",".join(map(str, args)).split(","))
        if len(m) == 1:
            m = m * k
        return generate_omega(k, tuple(m))
    try:
        return parse_presentation(TEXTS[name])
    except KeyError:
        raise KeyError(f"unknown demo {name!r}; choose from {', '.join(sorted(TEXTS))}, omega") from None


def omega11():
    return demo("example42")


def ex43():
    return demo("example43")


def all_demos():
    """Every compiled-in presentation plus the 2x2 grid."""
    out = {name: demo(name) for name in TEXTS}
    out["omega2_22"] = generate_omega(2, (2, 2))
    return out
