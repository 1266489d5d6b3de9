"""Representation types, local graphs and the refinement step.

The local graph of a family B of dimension vectors has one vertex per
member, 2 p(b) loops at it, and -sym(b, c) edges between distinct
members; it is the combinatorial shadow of the local structure at a
semisimple point with composition factors B.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .quiver import DimVector, Quiver, glex_key
from .sigma import SigmaContext

DEFAULT_BUDGET = 10**7


class BudgetExceeded(RuntimeError):
    """An enumeration refused to continue past its node budget.

    This is a refusal, not a wrong answer.  `nodes` is the budget that was
    exhausted; closure searches also report the `round` reached and the
    `partial` result built so far.
    """

    def __init__(self, message, nodes=None, round=None, partial=None):
        super().__init__(message)
        self.nodes = nodes
        self.round = round
        self.partial = partial


class UGraph:
    """Undirected multigraph on vertices 0..l-1 with loop counts.

    Edge multiplicities sit in a symmetric matrix with unused diagonal;
    loops are held separately.
    """

    __slots__ = ("l", "edges", "loops")

    def __init__(self, l: int, edges=(), loops=None):
        if l < 1:
            raise ValueError("a graph needs at least one vertex")
        matrix = [[0] * l for _ in range(l)]
        for i, j, m in edges:
            if not (0 <= i < l and 0 <= j < l):
                raise ValueError(f"edge endpoint out of range: {(i, j)}")
            if i == j:
                raise ValueError("loops belong in the loop vector, not the edge list")
            if m < 0:
                raise ValueError("edge multiplicity must be nonnegative")
            matrix[i][j] += m
            matrix[j][i] += m
        self.l = l
        self.edges = tuple(tuple(row) for row in matrix)
        if loops is None:
            loops = [0] * l
        loops = tuple(int(x) for x in loops)
        if len(loops) != l:
            raise ValueError("loop vector length must match the vertex count")
        if any(x < 0 for x in loops):
            raise ValueError("loop counts must be nonnegative")
        self.loops = loops

    def __eq__(self, other):
        return (
            isinstance(other, UGraph)
            and self.edges == other.edges
            and self.loops == other.loops
        )

    def __hash__(self):
        return hash((self.edges, self.loops))

    def __repr__(self):
        return f"UGraph(l={self.l}, edges={self.edge_list()!r}, loops={self.loops!r})"

    def edge(self, i: int, j: int) -> int:
        return self.edges[i][j]

    def degree(self, v: int) -> int:
        """Non-loop degree: total edge multiplicity at v."""
        return sum(self.edges[v])

    def edge_list(self) -> list[tuple[int, int, int]]:
        return [
            (i, j, self.edges[i][j])
            for i in range(self.l)
            for j in range(i + 1, self.l)
            if self.edges[i][j]
        ]

    def to_quiver(self) -> Quiver:
        """Orient every edge from the lower vertex; loops stay diagonal."""
        matrix = [[0] * self.l for _ in range(self.l)]
        for i, j, m in self.edge_list():
            matrix[i][j] = m
        for v in range(self.l):
            matrix[v][v] = self.loops[v]
        return Quiver(matrix)

    # JSON interface, 1-based vertices
    @classmethod
    def from_json(cls, data) -> "UGraph":
        if isinstance(data, str):
            data = json.loads(data)
        l = int(data["vertices"])
        edges = []
        for triple in data.get("edges", []):
            if len(triple) != 3:
                raise ValueError(f"bad edge triple: {triple!r}")
            i, j, m = (int(x) for x in triple)
            if not (1 <= i <= l and 1 <= j <= l):
                raise ValueError(f"edge vertex out of range 1..{l}: {triple!r}")
            if m < 1:
                raise ValueError(f"edge multiplicity must be >= 1: {triple!r}")
            edges.append((i - 1, j - 1, m))
        loops = data.get("loops", [0] * l)
        return cls(l, edges, loops)

    def to_json(self) -> dict:
        return {
            "vertices": self.l,
            "edges": [[i + 1, j + 1, m] for (i, j, m) in self.edge_list()],
            "loops": list(self.loops),
        }


def underlying_graph(q: Quiver) -> UGraph:
    """Forget orientation: edge multiplicities and loop counts of q."""
    edges = [
        (i, j, q.mult(i, j))
        for i in range(q.k)
        for j in range(i + 1, q.k)
        if q.mult(i, j)
    ]
    return UGraph(q.k, edges, [q.loops(v) for v in range(q.k)])


def ext_dim(q: Quiver, b, c) -> int:
    """-sym(b, c): the extension-space dimension between non-isomorphic
    simples of those dimension vectors."""
    return -q.sym(b, c)


def local_graph(q: Quiver, parts) -> UGraph:
    """Graph with 2 p(b_i) loops at vertex i and -sym(b_i, b_j) edges.

    Raises when a prescribed count comes out negative, which signals that
    the family cannot consist of pairwise non-isomorphic simples.
    """
    family = [DimVector(b) for b in parts]
    if not family:
        raise ValueError("local graph needs at least one part")
    loops = []
    for b in family:
        if b.is_zero():
            raise ValueError("parts must be positive")
        twice_p = 2 * q.p(b)
        if twice_p < 0:
            raise ValueError(f"negative loop count 2p({tuple(b)}) = {twice_p}")
        loops.append(twice_p)
    edges = []
    for i in range(len(family)):
        for j in range(i + 1, len(family)):
            m = ext_dim(q, family[i], family[j])
            if m < 0:
                raise ValueError(
                    f"negative edge count -sym({tuple(family[i])}, {tuple(family[j])}) = {m}"
                )
            if m:
                edges.append((i, j, m))
    return UGraph(len(family), edges, loops)


@dataclass(frozen=True)
class RepType:
    """A representation type: multiplicities with dimension vectors.

    Parts are kept in canonical order (graded-lex on the vector, then the
    multiplicity).  Producers of unrefined types keep the vectors pairwise
    distinct; refined types may repeat a vector.
    """

    parts: tuple[tuple[int, DimVector], ...]

    def __post_init__(self):
        if not self.parts:
            raise ValueError("a representation type needs at least one part")
        norm = []
        for d, beta in self.parts:
            d = int(d)
            beta = DimVector(beta)
            if d < 1:
                raise ValueError("multiplicities must be positive")
            if beta.is_zero():
                raise ValueError("parts must be positive vectors")
            norm.append((d, beta))
        norm.sort(key=lambda part: (glex_key(part[1]), part[0]))
        object.__setattr__(self, "parts", tuple(norm))

    @property
    def multiplicities(self) -> DimVector:
        return DimVector(d for d, _ in self.parts)

    @property
    def betas(self) -> tuple[DimVector, ...]:
        return tuple(beta for _, beta in self.parts)

    def total(self) -> DimVector:
        k = len(self.parts[0][1])
        acc = [0] * k
        for d, beta in self.parts:
            for i in range(k):
                acc[i] += d * beta[i]
        return DimVector(acc)

    def sort_key(self):
        return tuple((glex_key(beta), d) for d, beta in self.parts)

    def label(self) -> str:
        return ";".join(
            "(" + ",".join(str(x) for x in (d, *beta)) + ")" for d, beta in self.parts
        )

    def __str__(self):
        return self.label()


def parse_rep_type(text: str, k: int) -> RepType:
    """Parse the literal "(d1,b1,...,bk);(d2,...)" against vertex count k."""
    parts = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not (chunk.startswith("(") and chunk.endswith(")")):
            raise ValueError(f"bad representation-type part: {chunk!r}")
        try:
            nums = [int(s) for s in chunk[1:-1].split(",")]
        except ValueError:
            raise ValueError(f"bad representation-type part: {chunk!r}") from None
        if len(nums) != k + 1:
            raise ValueError(
                f"part {chunk!r} has {len(nums) - 1} vector entries, expected {k}"
            )
        parts.append((nums[0], DimVector(nums[1:])))
    return RepType(tuple(parts))


def rep_types(
    q: Quiver,
    lam,
    a,
    budget: int = DEFAULT_BUDGET,
    context: SigmaContext | None = None,
) -> list[RepType]:
    """All nontrivial representation types of a with parts in the simple set.

    A type assigns a positive multiplicity to finitely many distinct
    members summing to a; the trivial type (1, a) is excluded.  The
    enumeration walks members in graded-lex order choosing multiplicities,
    pruning on the remaining vector, and counts every partial sum against
    the budget.
    """
    a = DimVector(a)
    if a.is_zero():
        raise ValueError("representation types undefined for the zero vector")
    ctx = context if context is not None else SigmaContext(q, lam)
    members = ctx.members_upto(a)
    out = []
    nodes = 0
    trivial = ((1, a),)

    def rec(idx, remaining, acc):
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(
                f"representation-type enumeration exceeded {budget} nodes", nodes=budget
            )
        if not any(remaining):
            if acc and tuple(acc) != trivial:
                out.append(RepType(tuple(acc)))
            return
        if idx == len(members):
            return
        beta = members[idx]
        dmax = min(
            (remaining[i] // beta[i] for i in range(len(beta)) if beta[i]), default=0
        )
        for d in range(dmax, -1, -1):
            if d:
                acc.append((d, beta))
                rec(idx + 1, tuple(r - d * b for r, b in zip(remaining, beta)), acc)
                acc.pop()
            else:
                rec(idx + 1, remaining, acc)

    rec(0, tuple(a), [])
    out.sort(key=RepType.sort_key)
    return out


def refine_type(q: Quiver, t: RepType, threshold: int = 0) -> RepType:
    """Split multiplicities into copies where p(beta) exceeds the threshold.

    Each part (d, beta) with p(beta) > threshold becomes d parts (1, beta);
    other parts are kept verbatim.  The default threshold 0 follows the
    mechanism that justifies the split: whenever p(beta) > 0 there are
    infinitely many non-isomorphic simples of that dimension, so distinct
    copies can be chosen.  threshold = 1 is the stricter published reading
    and is exposed as a switch.
    """
    if threshold not in (0, 1):
        raise ValueError("refinement threshold must be 0 or 1")
    parts = []
    for d, beta in t.parts:
        if q.p(beta) > threshold:
            parts.extend((1, beta) for _ in range(d))
        else:
            parts.append((d, beta))
    return RepType(tuple(parts))
