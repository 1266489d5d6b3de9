"""Shared fixtures-in-code for the test battery.

The battery quivers, per-size bounds and weight choices here are used by
several test modules; keeping them in one place pins the enumeration the
acceptance suite runs over.
"""

from fractions import Fraction

from sigmaroots import DimVector, Quiver, Weight
from sigmaroots.sigma import SigmaContext
from sigmaroots.tame import catalog


def quiver_a2() -> Quiver:
    return Quiver([[0, 1], [0, 0]])


def quiver_a3() -> Quiver:
    return Quiver([[0, 1, 0], [0, 0, 1], [0, 0, 0]])


def quiver_d4() -> Quiver:
    # star with the center first: delta-style vectors read (2,1,1,1)
    return Quiver([[0, 1, 1, 1], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]])


def quiver_d4_tilde() -> Quiver:
    return next(s for s in catalog(5) if s.name == "D~4").graph.to_quiver()


def quiver_e8_tilde() -> Quiver:
    return next(s for s in catalog(9) if s.name == "E~8").graph.to_quiver()


def quiver_kronecker() -> Quiver:
    return Quiver([[0, 2], [0, 0]])


def quiver_jordan() -> Quiver:
    return Quiver([[1]])


def quiver_two_loop() -> Quiver:
    return Quiver([[2]])


def battery_bound(k: int) -> DimVector:
    return DimVector({1: (6,), 2: (4, 4), 3: (3, 3, 3)}[k])


def battery_weights(k: int) -> list[Weight]:
    """The zero weight plus two fixed nonzero weights per vertex count."""
    zero = Weight.zeros(k)
    alternating = Weight([(-1) ** i for i in range(k)])
    rational = {
        1: Weight([Fraction(2)]),
        2: Weight([Fraction(1, 2), Fraction(-1, 3)]),
        3: Weight([Fraction(1, 2), Fraction(-1, 3), Fraction(-1, 6)]),
    }[k]
    return [zero, alternating, rational]


_CTX_CACHE: dict = {}


def shared_context(q: Quiver, lam: Weight) -> SigmaContext:
    """Memoized contexts so acceptance criteria reuse each other's tables."""
    key = (q.arrows, tuple(lam))
    ctx = _CTX_CACHE.get(key)
    if ctx is None:
        ctx = SigmaContext(q, lam)
        _CTX_CACHE[key] = ctx
    return ctx


def brute_rep_types(q: Quiver, lam, a) -> set:
    """Independent enumeration of nontrivial representation types.

    Walks multisets of simple-set members one element at a time with
    nondecreasing indices (a different recursion than the library's
    per-member multiplicity choice), then groups them into types.
    """
    a = DimVector(a)
    ctx = shared_context(q, Weight(lam))
    members = ctx.members_upto(a)
    found = set()

    def rec(start, rem, acc):
        if not any(rem):
            if acc:
                grouped = []
                for beta in sorted(set(acc)):
                    grouped.append((acc.count(beta), beta))
                if tuple(grouped) != ((1, a),):
                    found.add(tuple(sorted(grouped, key=lambda t: (sum(t[1]), t[1], t[0]))))
            return
        for i in range(start, len(members)):
            b = members[i]
            if all(x <= y for x, y in zip(b, rem)):
                acc.append(b)
                rec(i, tuple(x - y for x, y in zip(rem, b)), acc)
                acc.pop()

    rec(0, tuple(a), [])
    return found
