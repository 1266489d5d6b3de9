"""Positive roots of the underlying graph of a quiver, loops allowed.

The root system depends only on the underlying graph, so a quiver and its
double have the same positive roots.  Real roots are the reflection orbit
of the loop-free vertex simples; imaginary roots are the orbit of the
fundamental region.
"""

from __future__ import annotations

from enum import Enum

from .quiver import DimVector, Quiver, glex_key, iter_box


class RootClass(Enum):
    NOT_ROOT = "not_root"
    REAL = "real"
    IMAGINARY = "imaginary"


def reflect(q: Quiver, a, v: int) -> tuple:
    """Simple reflection at a loop-free vertex v.

    Replaces the v-th coordinate of a by -a_v + sum of m(v, w) * a_w over
    the neighbours w.  The result may leave the positive cone, so it is
    returned as a plain signed tuple rather than a DimVector.
    """
    if len(a) != q.k:
        raise ValueError(f"length mismatch: quiver has {q.k} vertices, vector has {len(a)}")
    if not (0 <= v < q.k):
        raise ValueError(f"vertex {v} out of range")
    if q.loops(v) > 0:
        raise ValueError(f"reflection undefined at vertex {v}: it carries a loop")
    new_v = -a[v] + sum(q.mult(v, w) * a[w] for w in q.neighbors(v))
    return tuple(new_v if i == v else a[i] for i in range(q.k))


def in_fundamental_region(q: Quiver, a: DimVector) -> bool:
    """Connected support and sym(a, e_v) <= 0 at every loop-free vertex.

    At loopy vertices the inequality holds automatically for a >= 0, so
    only loop-free vertices are checked.
    """
    a = DimVector(a)
    if a.is_zero():
        raise ValueError("the zero vector is not in the fundamental region")
    if not q.support_connected(a):
        return False
    return all(q.sym_unit(a, v) <= 0 for v in q.loopfree_vertices())


def classify_root(q: Quiver, a) -> RootClass:
    """Kac classification of a nonnegative vector by reflection descent.

    Loop: disconnected support is never a root; a vertex simple is real
    when loop-free and imaginary when loopy; a vector in the fundamental
    region is imaginary; otherwise reflect at the smallest-index loop-free
    vertex with sym(a, e_v) > 0 and recurse.  A reflection that leaves the
    positive cone certifies "not a root".  The coordinate sum strictly
    decreases with each reflection, so the loop terminates.
    """
    a = DimVector(a)
    if a.is_zero():
        raise ValueError("cannot classify the zero vector")
    if len(a) != q.k:
        raise ValueError(f"length mismatch: quiver has {q.k} vertices, vector has {len(a)}")
    cur = a
    while True:
        if not q.support_connected(cur):
            return RootClass.NOT_ROOT
        if cur.grade() == 1:
            v = cur.index(1)
            return RootClass.REAL if q.loops(v) == 0 else RootClass.IMAGINARY
        descend_at = None
        for v in q.loopfree_vertices():
            if q.sym_unit(cur, v) > 0:
                descend_at = v
                break
        if descend_at is None:
            # fundamental region (support is already known connected)
            return RootClass.IMAGINARY
        nxt = reflect(q, cur, descend_at)
        if any(x < 0 for x in nxt):
            return RootClass.NOT_ROOT
        cur = DimVector(nxt)


def positive_roots_upto(q: Quiver, bound) -> list[tuple[DimVector, RootClass]]:
    """All positive roots beta <= bound with their class, graded-lex order."""
    bound = DimVector(bound)
    if len(bound) != q.k:
        raise ValueError(f"length mismatch: quiver has {q.k} vertices, bound has {len(bound)}")
    out = []
    for a in iter_box(bound):
        cls = classify_root(q, a)
        if cls is not RootClass.NOT_ROOT:
            out.append((a, cls))
    out.sort(key=lambda pair: glex_key(pair[0]))
    return out
