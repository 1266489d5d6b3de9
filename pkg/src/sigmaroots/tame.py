"""The catalog of tame settings and the containment search.

A tame setting is an extended Dynkin diagram together with its imaginary
root.  A setting (D, delta) is contained in (G, a) when D embeds into G
as a multiplicity-respecting subgraph on distinct vertices and delta is
bounded by a along the embedding.  Loops on target vertices neither help
nor block: only non-loop edges are matched.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .quiver import DimVector
from .local import UGraph

_FAMILY_RANK = {"A": 0, "D": 1, "E": 2}


@dataclass(frozen=True)
class TameSetting:
    """An extended Dynkin diagram with its imaginary root.

    Vertex layouts (0-based):
      A~m   cycle 0-1-...-m-0; A~1 degenerates to a double edge.
      D~m   forks 0,1 joined to spine 2..m-2, forks m-1,m at the far end;
            delta is 1 on the forks and 2 on the spine.
      E~6   path 0-1-2-3-4 labelled 1,2,3,2,1 with arm 2-5-6 labelled 2,1.
      E~7   path 0..6 labelled 1,2,3,4,3,2,1 with vertex 7 (label 2) at 3.
      E~8   path 0..7 labelled 2,4,6,5,4,3,2,1 with vertex 8 (label 3) at 2.
    """

    family: str
    m: int
    graph: UGraph
    delta: DimVector

    @property
    def name(self) -> str:
        return f"{self.family}~{self.m}"

    def vertex_count(self) -> int:
        return self.graph.l

    def __str__(self):
        return self.name


def _cycle(m: int) -> TameSetting:
    n = m + 1
    if m == 1:
        edges = [(0, 1, 2)]
    else:
        edges = [(i, i + 1, 1) for i in range(n - 1)] + [(n - 1, 0, 1)]
    return TameSetting("A", m, UGraph(n, edges), DimVector([1] * n))


def _fork(m: int) -> TameSetting:
    n = m + 1
    edges = [(0, 2, 1), (1, 2, 1), (m - 2, m - 1, 1), (m - 2, m, 1)]
    edges += [(i, i + 1, 1) for i in range(2, m - 2)]
    delta = [1, 1] + [2] * (m - 3) + [1, 1]
    return TameSetting("D", m, UGraph(n, edges), DimVector(delta))


def _e_series(m: int) -> TameSetting:
    if m == 6:
        edges = [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 4, 1), (2, 5, 1), (5, 6, 1)]
        delta = (1, 2, 3, 2, 1, 2, 1)
    elif m == 7:
        edges = [(i, i + 1, 1) for i in range(6)] + [(3, 7, 1)]
        delta = (1, 2, 3, 4, 3, 2, 1, 2)
    elif m == 8:
        edges = [(i, i + 1, 1) for i in range(7)] + [(2, 8, 1)]
        delta = (2, 4, 6, 5, 4, 3, 2, 1, 3)
    else:
        raise ValueError(f"no exceptional setting E~{m}")
    return TameSetting("E", m, UGraph(len(delta), edges), DimVector(delta))


@lru_cache(maxsize=None)
def catalog(max_vertices: int) -> tuple[TameSetting, ...]:
    """All tame settings with at most max_vertices vertices.

    Ordered by family (A, D, E) and then size, which is also the
    preference order of the containment search.
    """
    if max_vertices < 2:
        raise ValueError("tame settings have at least 2 vertices")
    out = [_cycle(m) for m in range(1, max_vertices)]
    out += [_fork(m) for m in range(4, max_vertices)]
    out += [_e_series(m) for m in (6, 7, 8) if m + 1 <= max_vertices]
    return tuple(out)


@dataclass(frozen=True)
class Embedding:
    """Injective vertex map, diagram vertex i -> target vertex map[i]."""

    map: tuple[int, ...]

    def validate(self, setting: TameSetting, g: UGraph, a) -> None:
        """Check injectivity, edge domination and the delta <= a bound."""
        d = setting.graph
        if len(self.map) != d.l:
            raise ValueError("embedding length does not match the diagram")
        if len(set(self.map)) != d.l:
            raise ValueError("embedding is not injective")
        if any(not 0 <= t < g.l for t in self.map):
            raise ValueError("embedding image out of range")
        for u in range(d.l):
            if setting.delta[u] > a[self.map[u]]:
                raise ValueError(
                    f"delta bound fails at diagram vertex {u}: "
                    f"{setting.delta[u]} > {a[self.map[u]]}"
                )
            for v in range(u + 1, d.l):
                need = d.edge(u, v)
                if need and g.edge(self.map[u], self.map[v]) < need:
                    raise ValueError(
                        f"edge multiplicity fails on diagram edge ({u}, {v})"
                    )


def _embeddings(setting: TameSetting, g: UGraph, a, first_only: bool):
    """Backtracking search for embeddings of one diagram.

    Diagram vertices are assigned in index order and candidate targets in
    increasing order, so the first complete assignment is the
    lexicographically least image tuple.  Pruning: the delta bound, a
    degree bound, and every diagram edge whose endpoints are both placed.
    """
    d = setting.graph
    n = d.l
    if n > g.l:
        return
    delta = setting.delta
    deg_d = [d.degree(u) for u in range(n)]
    deg_g = [g.degree(t) for t in range(g.l)]
    image = [-1] * n
    used = [False] * g.l

    def place(u: int):
        if u == n:
            yield Embedding(tuple(image))
            return
        for t in range(g.l):
            if used[t] or delta[u] > a[t] or deg_d[u] > deg_g[t]:
                continue
            ok = True
            for w in range(u):
                need = d.edge(u, w)
                if need and g.edge(t, image[w]) < need:
                    ok = False
                    break
            if not ok:
                continue
            image[u] = t
            used[t] = True
            yield from place(u + 1)
            used[t] = False
            image[u] = -1

    for emb in place(0):
        yield emb
        if first_only:
            return


def contains_tame(g: UGraph, a) -> tuple[TameSetting, Embedding] | None:
    """First tame setting contained in (g, a), or None.

    The search is complete over the whole catalog with at most as many
    vertices as g, so None is a proof of absence.  Deterministic: the
    smallest family and size wins, then the lexicographically least
    embedding.
    """
    a = DimVector(a)
    if len(a) != g.l:
        raise ValueError(f"length mismatch: graph has {g.l} vertices, vector has {len(a)}")
    if g.l < 2:
        return None
    for setting in catalog(g.l):
        for emb in _embeddings(setting, g, a, first_only=True):
            return setting, emb
    return None


def find_all_tame(g: UGraph, a) -> list[tuple[TameSetting, Embedding]]:
    """All containments up to diagram automorphism.

    Two embeddings of the same diagram are identified when they share the
    image vertex set together with the induced delta labelling; the
    lexicographically least representative of each class is returned, in
    catalog order.
    """
    a = DimVector(a)
    if len(a) != g.l:
        raise ValueError(f"length mismatch: graph has {g.l} vertices, vector has {len(a)}")
    if g.l < 2:
        return []
    out = []
    seen = set()
    for setting in catalog(g.l):
        for emb in _embeddings(setting, g, a, first_only=False):
            key = (
                setting.family,
                setting.m,
                frozenset(zip(emb.map, setting.delta)),
            )
            if key not in seen:
                seen.add(key)
                out.append((setting, emb))
    return out
