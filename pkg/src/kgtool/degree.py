"""Degree vectors in N^k, stored as plain tuples of ints.

Extended degrees may carry ``INFINITY`` (a float inf), which compares
above every integer and is absorbed by ``meet``.
"""
import itertools
import math

INFINITY = math.inf


def zero(k):
    return (0,) * k


def unit(k, i):
    """The generator e_i, colors counted from 1."""
    return tuple(1 if j == i else 0 for j in range(1, k + 1))


def add(m, n):
    return tuple(a + b for a, b in zip(m, n))


def sub(m, n):
    out = tuple(a - b for a, b in zip(m, n))
    if any(x < 0 for x in out):
        raise ValueError(f"degree {n} is not below {m}")
    return out


def meet(m, n):
    return tuple(min(a, b) for a, b in zip(m, n))


def join(m, n):
    return tuple(max(a, b) for a, b in zip(m, n))


def leq(m, n):
    return all(a <= b for a, b in zip(m, n))


def is_zero(m):
    return not any(m)


def support(m):
    """Colors (1-based) where m is nonzero."""
    return frozenset(i + 1 for i, a in enumerate(m) if a)


def total(m):
    return sum(m)


def box(q):
    """Every n with 0 <= n <= q, in lexicographic order."""
    return itertools.product(*(range(a + 1) for a in q))


def join_all(degrees, k):
    out = zero(k)
    for d in degrees:
        out = join(out, d)
    return out


def check_degree(m, k):
    m = tuple(m)
    if len(m) != k:
        raise ValueError(f"degree {m} has length {len(m)}, expected {k}")
    for a in m:
        if a != INFINITY and (not isinstance(a, int) or a < 0):
            raise ValueError(f"degree {m} has an invalid component {a!r}")
    return m


def parse_degree(text, k=None):
    """Parse ``"2,2"`` into ``(2, 2)``."""
    try:
        m = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"bad degree {text!r}") from None
    if any(a < 0 for a in m):
        raise ValueError(f"bad degree {text!r}")
    if k is not None:
        if len(m) == 1 and k > 1:
            m = m * k
        check_degree(m, k)
    return m


def fmt(m):
    return "(" + ",".join(str(a) for a in m) + ")"
