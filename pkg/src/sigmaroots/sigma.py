"""Membership in the set of simple dimension vectors of the deformed
preprojective algebra attached to a quiver and a rational weight.

A positive root a with lambda.a = 0 belongs to the set exactly when
p(a) > p(b_1) + ... + p(b_r) for every decomposition a = b_1 + ... + b_r
with r >= 2 into positive roots pairing to zero with the weight.  The
search over decompositions is a dynamic program over sub-vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .quiver import DimVector, Quiver, Weight, glex_key, iter_box, vleq, vsub
from .roots import RootClass, classify_root


class SigmaReason(Enum):
    NOT_POSITIVE_ROOT = "not_positive_root"
    WEIGHT_PAIRING_NONZERO = "weight_pairing_nonzero"
    BLOCKED_BY_DECOMPOSITION = "blocked_by_decomposition"
    MEMBER = "member"


@dataclass(frozen=True)
class SigmaVerdict:
    """Outcome of the membership test.

    When blocked, `witness` is a decomposition with r >= 2 parts, each an
    eligible positive root, summing to the queried vector and realising a
    p-sum that is at least p(alpha).
    """

    member: bool
    reason: SigmaReason
    witness: tuple[DimVector, ...] | None = None


class SigmaContext:
    """Shared memo tables for one (quiver, weight) pair.

    Classification, the decomposition maxima and verdicts are cached per
    vector, so a box enumeration fills each cell once.  All methods are
    deterministic; the memo is the only state.
    """

    def __init__(self, quiver: Quiver, weight: Weight):
        weight = Weight(weight)
        if len(weight) != quiver.k:
            raise ValueError(
                f"length mismatch: quiver has {quiver.k} vertices, weight has {len(weight)}"
            )
        self.quiver = quiver
        self.weight = weight
        self._class: dict[DimVector, RootClass] = {}
        self._p: dict[DimVector, int] = {}
        self._max: dict[DimVector, int | None] = {}
        self._verdict: dict[DimVector, SigmaVerdict] = {}
        self._eligible_cache: dict[DimVector, tuple[DimVector, ...]] = {}

    def classify(self, a: DimVector) -> RootClass:
        got = self._class.get(a)
        if got is None:
            got = classify_root(self.quiver, a)
            self._class[a] = got
        return got

    def p(self, a: DimVector) -> int:
        got = self._p.get(a)
        if got is None:
            got = self.quiver.p(a)
            self._p[a] = got
        return got

    def eligible_roots_upto(self, bound) -> tuple[DimVector, ...]:
        """Positive roots <= bound pairing to zero, graded-lex order."""
        bound = DimVector(bound)
        got = self._eligible_cache.get(bound)
        if got is None:
            got = tuple(
                a
                for a in iter_box(bound)
                if self.classify(a) is not RootClass.NOT_ROOT and self.weight.pair(a) == 0
            )
            self._eligible_cache[bound] = got
        return got

    def _fill_max(self, bound: DimVector) -> tuple[DimVector, ...]:
        """Fill the decomposition-maximum table over the box [0, bound].

        M(s) is the largest sum of p over decompositions of s into r >= 1
        eligible roots, or None when no such decomposition exists.  Cells
        are filled in graded-lex order, so every s - beta is ready when
        s is processed.
        """
        roots = self.eligible_roots_upto(bound)
        for s in iter_box(bound):
            if s in self._max:
                continue
            best = None
            for beta in roots:
                if not vleq(beta, s):
                    continue
                if beta == s:
                    val = self.p(beta)
                else:
                    sub = self._max[DimVector(vsub(s, beta))]
                    if sub is None:
                        continue
                    val = self.p(beta) + sub
                if best is None or val > best:
                    best = val
            self._max[s] = best
        return roots

    def max_decomp_sum(self, a) -> int | None:
        a = DimVector(a)
        if a.is_zero():
            raise ValueError("cannot decompose the zero vector")
        if a not in self._max:
            self._fill_max(a)
        return self._max[a]

    def _best_proper(self, a: DimVector) -> int | None:
        """Largest p-sum over decompositions with r >= 2 parts."""
        roots = self._fill_max(a)
        best = None
        for beta in roots:
            if beta == a or not vleq(beta, a):
                continue
            sub = self._max[DimVector(vsub(a, beta))]
            if sub is None:
                continue
            val = self.p(beta) + sub
            if best is None or val > best:
                best = val
        return best

    def _witness(self, a: DimVector, target: int) -> tuple[DimVector, ...]:
        """Reconstruct one maximizing r >= 2 decomposition from the memo.

        The first part is the lexicographically smallest proper eligible
        root realising the maximum; each remainder is completed the same
        way, so witnesses are reproducible.
        """
        roots = self.eligible_roots_upto(a)
        first = None
        for beta in sorted(roots):
            if beta == a or not vleq(beta, a):
                continue
            sub = self._max[DimVector(vsub(a, beta))]
            if sub is not None and self.p(beta) + sub == target:
                first = beta
                break
        assert first is not None, "witness requested for an unblocked vector"
        parts = [first]
        rem = DimVector(vsub(a, first))
        while True:
            goal = self._max[rem]
            chosen = None
            for beta in sorted(roots):
                if not vleq(beta, rem):
                    continue
                if beta == rem:
                    if self.p(beta) == goal:
                        chosen = beta
                        break
                else:
                    sub = self._max[DimVector(vsub(rem, beta))]
                    if sub is not None and self.p(beta) + sub == goal:
                        chosen = beta
                        break
            assert chosen is not None
            parts.append(chosen)
            if chosen == rem:
                return tuple(parts)
            rem = DimVector(vsub(rem, chosen))

    def verdict(self, a) -> SigmaVerdict:
        a = DimVector(a)
        if a.is_zero():
            raise ValueError("membership undefined for the zero vector")
        got = self._verdict.get(a)
        if got is not None:
            return got
        if self.classify(a) is RootClass.NOT_ROOT:
            out = SigmaVerdict(False, SigmaReason.NOT_POSITIVE_ROOT)
        elif self.weight.pair(a) != 0:
            out = SigmaVerdict(False, SigmaReason.WEIGHT_PAIRING_NONZERO)
        else:
            best = self._best_proper(a)
            if best is None or self.p(a) > best:
                out = SigmaVerdict(True, SigmaReason.MEMBER)
            else:
                out = SigmaVerdict(
                    False, SigmaReason.BLOCKED_BY_DECOMPOSITION, self._witness(a, best)
                )
        self._verdict[a] = out
        return out

    def is_member(self, a) -> bool:
        return self.verdict(a).member

    def members_upto(self, bound) -> list[DimVector]:
        bound = DimVector(bound)
        self._fill_max(bound)
        return [a for a in iter_box(bound) if self.verdict(a).member]


# ----------------------------------------------------------------------
# Free-function API; each call builds a fresh context.  Reuse a
# SigmaContext explicitly when iterating over many vectors.

def roots_lambda(q: Quiver, lam, bound) -> list[DimVector]:
    """Positive roots <= bound with exact pairing zero, graded-lex order."""
    return list(SigmaContext(q, lam).eligible_roots_upto(bound))


def max_decomp_sum(q: Quiver, lam, a) -> int | None:
    """Largest sum of p over decompositions of a into eligible roots,
    or None when no decomposition exists."""
    return SigmaContext(q, lam).max_decomp_sum(a)


def in_sigma(q: Quiver, lam, a) -> SigmaVerdict:
    """Membership verdict for a single vector."""
    return SigmaContext(q, lam).verdict(a)


def sigma_upto(q: Quiver, lam, bound) -> list[DimVector]:
    """All members in (0, bound], graded-lex order, one shared memo."""
    return SigmaContext(q, lam).members_upto(bound)


def minimal_vectors(vectors) -> list[DimVector]:
    """Coordinatewise-minimal elements of a finite set of vectors."""
    vecs = sorted(set(DimVector(v) for v in vectors), key=glex_key)
    out = []
    for v in vecs:
        if not any(vleq(u, v) and u != v for u in vecs):
            out.append(v)
    return out
