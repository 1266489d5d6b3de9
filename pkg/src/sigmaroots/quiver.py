"""Quiver data model and the integer/rational forms attached to it.

Everything here is immutable after construction and every operation is a
pure function, so values can be shared freely between workers.
"""

from __future__ import annotations

import json
from fractions import Fraction
from itertools import product

# Dimension entries are capped so that a typo cannot silently turn a desk
# computation into a runaway one.  Python integers never wrap, so the cap
# is the only overflow policy needed.
ENTRY_CAP = 1 << 20


class DimVector(tuple):
    """Nonnegative integer vector indexed by the vertices of a quiver.

    Entries live in [0, 2**20]; violations raise instead of wrapping.
    Instances are plain tuples, hence hashable and lexicographically
    comparable.
    """

    def __new__(cls, entries):
        vals = tuple(int(e) for e in entries)
        if not vals:
            raise ValueError("dimension vector needs at least one entry")
        for e in vals:
            if e < 0:
                raise ValueError(f"dimension vector entry {e} is negative")
            if e > ENTRY_CAP:
                raise ValueError(f"dimension vector entry {e} exceeds the cap {ENTRY_CAP}")
        return super().__new__(cls, vals)

    def is_zero(self) -> bool:
        return not any(self)

    def grade(self) -> int:
        return sum(self)

    def __repr__(self):
        return f"DimVector({tuple(self)!r})"


def unit_vector(k: int, v: int) -> DimVector:
    """Vertex simple: 1 at 0-based vertex v, 0 elsewhere."""
    return DimVector(1 if i == v else 0 for i in range(k))


def vadd(a, b) -> DimVector:
    return DimVector(x + y for x, y in zip(a, b))


def vsub(a, b) -> tuple:
    """Signed difference; not a DimVector because entries may be negative."""
    return tuple(x - y for x, y in zip(a, b))


def vscale(n: int, a) -> DimVector:
    return DimVector(n * x for x in a)


def vleq(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def glex_key(a):
    """Graded-lexicographic sort key: total first, then entries."""
    return (sum(a), tuple(a))


def iter_box(bound) -> list:
    """All 0 < a <= bound in graded-lexicographic order."""
    cells = [DimVector(t) for t in product(*[range(b + 1) for b in bound]) if any(t)]
    cells.sort(key=glex_key)
    return cells


def format_vector(a) -> str:
    return "(" + ",".join(str(x) for x in a) + ")"


def parse_vector(text: str, k: int | None = None) -> DimVector:
    """Parse "1,0,2" (optionally a single value meaning a uniform vector)."""
    items = [s.strip() for s in text.split(",") if s.strip() != ""]
    if not items:
        raise ValueError(f"empty vector literal: {text!r}")
    try:
        vals = [int(s) for s in items]
    except ValueError:
        raise ValueError(f"bad vector literal: {text!r}") from None
    if k is not None and len(vals) == 1 and k > 1:
        vals = vals * k
    v = DimVector(vals)
    if k is not None and len(v) != k:
        raise ValueError(f"vector {text!r} has length {len(v)}, expected {k}")
    return v


def _parse_rational(text: str) -> Fraction:
    s = text.strip()
    if "/" in s:
        num, _, den = s.partition("/")
        try:
            n, d = int(num), int(den)
        except ValueError:
            raise ValueError(f"bad rational literal: {text!r}") from None
        if d == 0:
            raise ValueError(f"zero denominator in rational literal: {text!r}")
        return Fraction(n, d)
    try:
        return Fraction(int(s))
    except ValueError:
        raise ValueError(f"bad rational literal: {text!r}") from None


class Weight(tuple):
    """Vector of exact rationals; the deformation parameter.

    Pairing with a dimension vector is computed in exact arithmetic so
    that "pairs to zero" is never a tolerance question.
    """

    def __new__(cls, entries):
        vals = tuple(Fraction(e) for e in entries)
        if not vals:
            raise ValueError("weight needs at least one entry")
        return super().__new__(cls, vals)

    @classmethod
    def zeros(cls, k: int) -> "Weight":
        return cls([Fraction(0)] * k)

    @classmethod
    def parse(cls, text: str, k: int | None = None) -> "Weight":
        """Parse "1/2,-1/3,0"; entries are "p/q" or "p"."""
        items = [s for s in (t.strip() for t in text.split(",")) if s != ""]
        vals = [_parse_rational(s) for s in items]
        w = cls(vals)
        if k is not None and len(w) != k:
            raise ValueError(f"weight {text!r} has length {len(w)}, expected {k}")
        return w

    def pair(self, a) -> Fraction:
        """Exact rational pairing sum(lambda_i * a_i)."""
        if len(self) != len(a):
            raise ValueError(f"length mismatch: weight has {len(self)}, vector has {len(a)}")
        return sum((l * x for l, x in zip(self, a)), Fraction(0))

    def format(self) -> str:
        return ",".join(str(x) for x in self)

    def __repr__(self):
        return f"Weight(({self.format()}))"


class Quiver:
    """Finite directed multigraph, loops allowed.

    Stored as the k x k arrow-multiplicity matrix; entry (i, j) counts the
    arrows from vertex i to vertex j, so the diagonal holds loop counts.
    The Euler form has matrix delta_ij - arrows(i, j).  Vertices are
    0-based here and 1-based in all text/JSON interfaces.
    """

    __slots__ = ("k", "arrows", "_mult", "_loops", "_loopfree", "_neighbors")

    def __init__(self, arrows):
        rows = tuple(tuple(int(x) for x in row) for row in arrows)
        k = len(rows)
        if k < 1:
            raise ValueError("a quiver needs at least one vertex")
        if any(len(row) != k for row in rows):
            raise ValueError("arrow matrix must be square")
        if any(x < 0 for row in rows for x in row):
            raise ValueError("arrow multiplicities must be nonnegative")
        self.k = k
        self.arrows = rows
        self._mult = tuple(
            tuple(0 if i == j else rows[i][j] + rows[j][i] for j in range(k))
            for i in range(k)
        )
        self._loops = tuple(rows[i][i] for i in range(k))
        self._loopfree = tuple(v for v in range(k) if rows[v][v] == 0)
        self._neighbors = tuple(
            tuple(j for j in range(k) if self._mult[i][j] > 0) for i in range(k)
        )

    def __eq__(self, other):
        return isinstance(other, Quiver) and self.arrows == other.arrows

    def __hash__(self):
        return hash(self.arrows)

    def __repr__(self):
        return f"Quiver({self.arrows!r})"

    def loops(self, v: int) -> int:
        return self._loops[v]

    def mult(self, i: int, j: int) -> int:
        """Total number of edges between distinct vertices in the underlying graph."""
        return self._mult[i][j]

    def loopfree_vertices(self):
        return self._loopfree

    def neighbors(self, v: int):
        return self._neighbors[v]

    def reversed(self) -> "Quiver":
        """Quiver with every arrow reversed (transpose matrix)."""
        return Quiver(tuple(tuple(self.arrows[j][i] for j in range(self.k)) for i in range(self.k)))

    def _check_len(self, a):
        if len(a) != self.k:
            raise ValueError(f"length mismatch: quiver has {self.k} vertices, vector has {len(a)}")

    def euler(self, a, b) -> int:
        """Euler form sum(a_i b_i) - sum(arrows(i,j) a_i b_j)."""
        self._check_len(a)
        self._check_len(b)
        total = 0
        for i in range(self.k):
            ai = a[i]
            total += ai * b[i]
            if ai:
                row = self.arrows[i]
                total -= ai * sum(row[j] * b[j] for j in range(self.k) if row[j])
        return total

    def p(self, a) -> int:
        """p(a) = 1 - euler(a, a); the count of free parameters at a."""
        return 1 - self.euler(a, a)

    def sym(self, a, b) -> int:
        """Symmetrized Euler form euler(a,b) + euler(b,a); orientation independent."""
        return self.euler(a, b) + self.euler(b, a)

    def sym_unit(self, a, v: int) -> int:
        """sym(a, e_v) without materializing the unit vector."""
        self._check_len(a)
        return (2 - 2 * self._loops[v]) * a[v] - sum(
            self._mult[v][w] * a[w] for w in self._neighbors[v]
        )

    def support_connected(self, a) -> bool:
        """True iff the vertices with a_v > 0 induce a connected subgraph
        of the underlying graph (loops ignored)."""
        self._check_len(a)
        support = [v for v in range(self.k) if a[v] > 0]
        if not support:
            raise ValueError("support of the zero vector is undefined")
        in_support = [x > 0 for x in a]
        seen = {support[0]}
        stack = [support[0]]
        while stack:
            u = stack.pop()
            for w in self._neighbors[u]:
                if in_support[w] and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(support)

    # ------------------------------------------------------------------
    # text / JSON interfaces (1-based vertices)

    @classmethod
    def from_text(cls, text: str) -> "Quiver":
        """Parse the line-oriented format:

            vertices K
            arrow I J [M]     # M defaults to 1, repeated lines accumulate

        '#' starts a comment.
        """
        k = None
        entries = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            fields = line.split()
            if fields[0] == "vertices":
                if k is not None:
                    raise ValueError(f"line {lineno}: repeated 'vertices' directive")
                if len(fields) != 2:
                    raise ValueError(f"line {lineno}: expected 'vertices K'")
                k = int(fields[1])
                if k < 1:
                    raise ValueError(f"line {lineno}: vertex count must be positive")
            elif fields[0] == "arrow":
                if k is None:
                    raise ValueError(f"line {lineno}: 'arrow' before 'vertices'")
                if len(fields) not in (3, 4):
                    raise ValueError(f"line {lineno}: expected 'arrow I J [M]'")
                i, j = int(fields[1]), int(fields[2])
                m = int(fields[3]) if len(fields) == 4 else 1
                if not (1 <= i <= k and 1 <= j <= k):
                    raise ValueError(f"line {lineno}: vertex out of range 1..{k}")
                if m < 1:
                    raise ValueError(f"line {lineno}: arrow multiplicity must be >= 1")
                entries.append((i - 1, j - 1, m))
            else:
                raise ValueError(f"line {lineno}: unknown directive {fields[0]!r}")
        if k is None:
            raise ValueError("missing 'vertices' directive")
        matrix = [[0] * k for _ in range(k)]
        for i, j, m in entries:
            matrix[i][j] += m
        return cls(matrix)

    @classmethod
    def from_json(cls, data) -> "Quiver":
        """Parse {"vertices": K, "arrows": [[i, j, m], ...]} (1-based)."""
        if isinstance(data, str):
            data = json.loads(data)
        k = int(data["vertices"])
        if k < 1:
            raise ValueError("vertex count must be positive")
        matrix = [[0] * k for _ in range(k)]
        for triple in data.get("arrows", []):
            if len(triple) != 3:
                raise ValueError(f"bad arrow triple: {triple!r}")
            i, j, m = (int(x) for x in triple)
            if not (1 <= i <= k and 1 <= j <= k):
                raise ValueError(f"arrow vertex out of range 1..{k}: {triple!r}")
            if m < 1:
                raise ValueError(f"arrow multiplicity must be >= 1: {triple!r}")
            matrix[i - 1][j - 1] += m
        return cls(matrix)

    @classmethod
    def parse(cls, text: str) -> "Quiver":
        """Sniff JSON vs the line format and parse accordingly."""
        if text.lstrip().startswith("{"):
            return cls.from_json(text)
        return cls.from_text(text)

    def to_json(self) -> dict:
        arrows = []
        for i in range(self.k):
            for j in range(self.k):
                if self.arrows[i][j]:
                    arrows.append([i + 1, j + 1, self.arrows[i][j]])
        return {"vertices": self.k, "arrows": arrows}

    def to_text(self) -> str:
        lines = [f"vertices {self.k}"]
        for i in range(self.k):
            for j in range(self.k):
                if self.arrows[i][j]:
                    lines.append(f"arrow {i + 1} {j + 1} {self.arrows[i][j]}")
        return "\n".join(lines) + "\n"
