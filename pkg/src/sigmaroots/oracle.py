"""Independent brute-force implementations used by tests and, on demand,
by the command line to cross-check the main algorithms.

Nothing here shares search logic with the modules it validates: the
decomposition enumerator recurses over root multisets directly, and the
root oracles build reflection orbits instead of running the descent
classifier.
"""

from __future__ import annotations

from .quiver import DimVector, Quiver, Weight, glex_key, iter_box, vleq, vsub
from .roots import RootClass, positive_roots_upto, reflect

BRUTE_CAP = 12


def brute_decompositions(q: Quiver, lam, a) -> list[tuple[DimVector, ...]]:
    """Every multiset of eligible positive roots summing to a (r >= 1).

    Complete enumeration by recursive descent over the canonically ordered
    root list; refuses vectors with total above BRUTE_CAP.
    """
    a = DimVector(a)
    lam = Weight(lam)
    if a.is_zero():
        raise ValueError("cannot decompose the zero vector")
    if a.grade() > BRUTE_CAP:
        raise ValueError(f"total {a.grade()} exceeds the brute-force cap {BRUTE_CAP}")
    roots = [
        b
        for (b, _) in positive_roots_upto(q, a)
        if lam.pair(b) == 0
    ]
    out: list[tuple[DimVector, ...]] = []

    def rec(start: int, rem, acc):
        if not any(rem):
            out.append(tuple(acc))
            return
        for i in range(start, len(roots)):
            b = roots[i]
            if vleq(b, rem):
                acc.append(b)
                rec(i, vsub(rem, b), acc)
                acc.pop()

    rec(0, tuple(a), [])
    return out


def brute_max_decomp_sum(q: Quiver, lam, a) -> int | None:
    """Reference value for the decomposition maximum (r >= 1)."""
    sums = [sum(q.p(b) for b in d) for d in brute_decompositions(q, lam, a)]
    return max(sums) if sums else None


def brute_in_sigma(q: Quiver, lam, a) -> bool:
    """Reference membership: positive root, zero pairing, and p beats
    every decomposition with at least two parts."""
    from .roots import classify_root

    a = DimVector(a)
    if classify_root(q, a) is RootClass.NOT_ROOT:
        return False
    if Weight(lam).pair(a) != 0:
        return False
    pa = q.p(a)
    return all(
        sum(q.p(b) for b in d) < pa
        for d in brute_decompositions(q, lam, a)
        if len(d) >= 2
    )


def weyl_real_roots(q: Quiver, bound) -> set[DimVector]:
    """Real positive roots <= bound by breadth-first reflection orbit.

    Seeds are the loop-free vertex simples inside the box; reflections at
    loop-free vertices are applied and results are kept while nonnegative
    and within the box.  Truncation is harmless: the descent path of any
    real root stays coordinatewise below it.
    """
    bound = DimVector(bound)
    seeds = {
        DimVector(1 if i == v else 0 for i in range(q.k))
        for v in q.loopfree_vertices()
        if bound[v] >= 1
    }
    return _reflection_closure(q, seeds, bound)


def imaginary_roots_closure(q: Quiver, bound) -> set[DimVector]:
    """Imaginary positive roots <= bound: every vector of the fundamental
    region in the box (scaling included, since the region is a cone),
    closed under loop-free reflections inside the box."""
    bound = DimVector(bound)
    seeds = set()
    for a in iter_box(bound):
        if not q.support_connected(a):
            continue
        if all(q.sym_unit(a, v) <= 0 for v in q.loopfree_vertices()):
            seeds.add(a)
    return _reflection_closure(q, seeds, bound)


def _reflection_closure(q: Quiver, seeds: set[DimVector], bound) -> set[DimVector]:
    found = set(seeds)
    frontier = list(seeds)
    while frontier:
        a = frontier.pop()
        for v in q.loopfree_vertices():
            b = reflect(q, a, v)
            if any(x < 0 for x in b):
                continue
            bv = DimVector(b)
            if bv.is_zero() or not vleq(bv, bound) or bv in found:
                continue
            found.add(bv)
            frontier.append(bv)
    return found


def battery(max_vertices: int = 3, max_mult: int = 2, max_loops: int = 2) -> list[Quiver]:
    """Connected test quivers with small multiplicities.

    Underlying multigraphs on 1..max_vertices vertices with pairwise edge
    multiplicities up to max_mult and loop counts up to max_loops,
    canonically oriented (low vertex to high) and deduplicated up to
    vertex relabelling.  Every quantity the test batteries check is
    orientation- and relabelling-invariant, so this enumeration loses
    nothing against enumerating raw arrow matrices.
    """
    from itertools import permutations, product

    out = []
    seen = set()
    for k in range(1, max_vertices + 1):
        pairs = [(i, j) for i in range(k) for j in range(i + 1, k)]
        for mults in product(range(max_mult + 1), repeat=len(pairs)):
            for loops in product(range(max_loops + 1), repeat=k):
                matrix = [[0] * k for _ in range(k)]
                for (i, j), m in zip(pairs, mults):
                    matrix[i][j] = m
                for v in range(k):
                    matrix[v][v] = loops[v]
                q = Quiver(matrix)
                try:
                    connected = q.support_connected(DimVector([1] * k))
                except ValueError:
                    connected = False
                if not connected:
                    continue
                canon = min(
                    tuple(
                        tuple(q.mult(sig[i], sig[j]) if i != j else q.loops(sig[i]) for j in range(k))
                        for i in range(k)
                    )
                    for sig in permutations(range(k))
                )
                if canon in seen:
                    continue
                seen.add(canon)
                out.append(q)
    return out
