"""Inductive construction of the simple set and the irreducibility test.

The closure starts from the minimal eligible positive roots and, round by
round, adds every vector of the form sum(delta_v * beta_v) where the
beta_v are current members placed on the vertices of a tame setting so
that the setting's edges are dominated by the local-graph edges between
the placed parts.  A member may be placed on several vertices only when
p of it is positive.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .quiver import DimVector, Quiver, Weight, glex_key, iter_box, vleq
from .roots import RootClass, positive_roots_upto
from .sigma import SigmaContext, SigmaVerdict, minimal_vectors
from .local import DEFAULT_BUDGET, BudgetExceeded, RepType, local_graph, refine_type, rep_types
from .tame import Embedding, TameSetting, catalog, contains_tame

SEED_MODES = ("minimal", "real-roots")


@dataclass(frozen=True)
class GeneticCert:
    """Derivation of one closure member.

    `parts` pairs each diagram vertex of `setting`, in order, with its
    coefficient (always the setting's own delta entry) and the member
    placed there.  `depth` is the round in which the member was derived;
    seeds sit at depth 0 and carry no certificate.
    """

    target: DimVector
    parts: tuple[tuple[int, DimVector], ...]
    setting: TameSetting
    depth: int

    def revalidate(self, q: Quiver) -> None:
        """Re-check the certificate independently of the search."""
        d = self.setting.graph
        if len(self.parts) != d.l:
            raise ValueError("certificate parts do not span the setting")
        k = len(self.target)
        acc = [0] * k
        for u, (e, beta) in enumerate(self.parts):
            if e != self.setting.delta[u]:
                raise ValueError("certificate coefficients must equal the setting's delta")
            for i in range(k):
                acc[i] += e * beta[i]
        if DimVector(acc) != self.target:
            raise ValueError("certificate parts do not sum to the target")
        betas = [beta for _, beta in self.parts]
        for u in range(d.l):
            for v in range(u + 1, d.l):
                need = d.edge(u, v)
                if need and -q.sym(betas[u], betas[v]) < need:
                    raise ValueError(f"setting edge ({u}, {v}) is not dominated")
        seen = set()
        for beta in betas:
            if beta in seen and q.p(beta) <= 0:
                raise ValueError(f"part {tuple(beta)} repeated although p <= 0")
            seen.add(beta)


def seeds(q: Quiver, lam, bound, mode: str = "minimal") -> list[DimVector]:
    """Induction seeds within the box.

    "minimal": coordinatewise-minimal positive roots pairing to zero with
    the weight; for the zero weight these are exactly the vertex simples.
    "real-roots": every real positive root pairing to zero, an
    experimental mode reproducing the looser published phrasing (it can
    seed vectors outside the simple set).
    """
    if mode not in SEED_MODES:
        raise ValueError(f"unknown seed mode {mode!r}")
    lam = Weight(lam)
    if mode == "minimal":
        eligible = [
            a
            for (a, _) in positive_roots_upto(q, bound)
            if lam.pair(a) == 0
        ]
        return minimal_vectors(eligible)
    return [
        a
        for (a, cls) in positive_roots_upto(q, bound)
        if cls is RootClass.REAL and lam.pair(a) == 0
    ]


def _symmetry_ok(setting: TameSetting, placed: list[DimVector], u: int, beta) -> bool:
    """Prune assignments that are non-canonical under known diagram
    automorphisms: cycle rotations and reflections, fork swaps on the
    D series, and the swap of the two free arms on E~6.  Every pruned
    assignment has an equivalent canonical representative, so
    completeness is preserved."""
    key = glex_key(beta)
    fam, m = setting.family, setting.m
    if fam == "A":
        if m == 1:
            return u != 1 or key >= glex_key(placed[0])
        if u >= 1 and key < glex_key(placed[0]):
            return False
        if u == m and key < glex_key(placed[1]):
            return False
        return True
    if fam == "D":
        if u == 1 and key < glex_key(placed[0]):
            return False
        if u == m and key < glex_key(placed[m - 1]):
            return False
        return True
    if fam == "E" and m == 6:
        if u == 5 and key < glex_key(placed[3]):
            return False
        if u == 6 and placed[5] == placed[3] and key < glex_key(placed[4]):
            return False
        return True
    return True


def genetic_closure(
    q: Quiver,
    lam,
    bound,
    seed_mode: str = "minimal",
    budget: int = DEFAULT_BUDGET,
) -> list[tuple[DimVector, GeneticCert | None]]:
    """Least fixed point of the derivation step inside the box [0, bound].

    Rounds are batched: each round places only members known before the
    round, so certificates carry the minimal derivation depth.  Within a
    round, settings are tried in catalog order and parts in graded-lex
    order, which makes the retained certificate deterministic.  Raises
    BudgetExceeded (with the round and the partial closure) if the
    assignment search grows past `budget` nodes.
    """
    bound = DimVector(bound)
    lam = Weight(lam)
    grade_cap = bound.grade()
    members: dict[DimVector, GeneticCert | None] = {}
    for s in seeds(q, lam, bound, seed_mode):
        members[s] = None
    settings = (
        [s for s in catalog(max(grade_cap, 2)) if sum(s.delta) <= grade_cap]
        if grade_cap >= 2
        else []
    )
    p_cache: dict[DimVector, int] = {}
    sym_cache: dict[tuple[DimVector, DimVector], int] = {}

    def p_of(beta):
        got = p_cache.get(beta)
        if got is None:
            got = q.p(beta)
            p_cache[beta] = got
        return got

    def sym_of(b1, b2):
        key = (b1, b2) if b1 <= b2 else (b2, b1)
        got = sym_cache.get(key)
        if got is None:
            got = q.sym(key[0], key[1])
            sym_cache[key] = got
        return got

    nodes = 0
    depth = 0
    while True:
        depth += 1
        snapshot = sorted(members, key=glex_key)
        if not snapshot:
            break
        new: dict[DimVector, GeneticCert] = {}
        for setting in settings:
            d = setting.graph
            n = d.l
            delta = setting.delta
            # least possible grade still to come: every part has grade >= 1
            suffix_need = [sum(delta[v] for v in range(u + 1, n)) for u in range(n)]
            placed: list[DimVector] = []

            def place(u: int, partial, partial_grade: int):
                nonlocal nodes
                if u == n:
                    target = DimVector(partial)
                    if target not in members and target not in new:
                        new[target] = GeneticCert(
                            target,
                            tuple((delta[v], placed[v]) for v in range(n)),
                            setting,
                            depth,
                        )
                    return
                for beta in snapshot:
                    nodes += 1
                    if nodes > budget:
                        raise BudgetExceeded(
                            f"closure search exceeded {budget} nodes",
                            nodes=budget,
                            round=depth,
                            partial=sorted(members, key=glex_key),
                        )
                    next_grade = partial_grade + delta[u] * beta.grade()
                    if next_grade + suffix_need[u] > grade_cap:
                        # snapshot is graded-lex sorted, so no later part fits
                        break
                    nxt = tuple(x + delta[u] * b for x, b in zip(partial, beta))
                    if not vleq(nxt, bound):
                        continue
                    if not _symmetry_ok(setting, placed, u, beta):
                        continue
                    if beta in placed and p_of(beta) <= 0:
                        continue
                    ok = True
                    for w in range(u):
                        need = d.edge(u, w)
                        if need and -sym_of(beta, placed[w]) < need:
                            ok = False
                            break
                    if not ok:
                        continue
                    placed.append(beta)
                    place(u + 1, nxt, next_grade)
                    placed.pop()

            place(0, (0,) * q.k, 0)
        if not new:
            break
        members.update(new)
    return [(a, members[a]) for a in sorted(members, key=glex_key)]


def irreducible_sigma_check(
    q: Quiver,
    lam,
    a,
    budget: int = DEFAULT_BUDGET,
    threshold: int = 0,
    context: SigmaContext | None = None,
) -> tuple[bool, RepType | None]:
    """Tame-containment test over every nontrivial representation type.

    True iff for every nontrivial type of a (after refinement) the local
    graph of the refined parts together with the refined multiplicity
    vector contains some tame setting.  Vacuously true when there is no
    nontrivial type.  On failure returns the first failing type in
    canonical order.
    """
    types = rep_types(q, lam, a, budget=budget, context=context)
    for t in types:
        refined = refine_type(q, t, threshold=threshold)
        graph = local_graph(q, refined.betas)
        if contains_tame(graph, refined.multiplicities) is None:
            return False, t
    return True, None


@dataclass(frozen=True)
class CompareRecord:
    """Everything the three characterizations say about one vector."""

    alpha: DimVector
    verdict: SigmaVerdict
    closure_cert: GeneticCert | None
    in_closure: bool
    irreducible: bool | None
    failing_type: RepType | None
    budget_exceeded: bool = False


@dataclass
class CompareReport:
    """Side-by-side comparison of the three descriptions over a box.

    The report only states what each description yields; no set is
    asserted equal to another.  `discrepancies` lists every vector on
    which two descriptions disagree, with the direction of disagreement.
    """

    bound: DimVector
    records: list[CompareRecord]
    sigma_members: list[DimVector]
    closure_members: list[DimVector]
    irreducible_members: list[DimVector]
    discrepancies: list[dict] = field(default_factory=list)
    closure_budget_exceeded: bool = False

    def has_discrepancies(self) -> bool:
        return bool(self.discrepancies)


def compare(q: Quiver, lam, bound, budget: int = DEFAULT_BUDGET) -> CompareReport:
    """Run the membership test, the closure and the irreducibility check
    over every vector in the box and report all pairwise disagreements.

    Budget refusals are recorded per vector (and for the closure as a
    whole) instead of aborting the report.
    """
    bound = DimVector(bound)
    lam = Weight(lam)
    ctx = SigmaContext(q, lam)
    closure_budget_exceeded = False
    try:
        closure = dict(genetic_closure(q, lam, bound, budget=budget))
    except BudgetExceeded as exc:
        closure = {a: None for a in (exc.partial or [])}
        closure_budget_exceeded = True
    records = []
    for a in iter_box(bound):
        verdict = ctx.verdict(a)
        cert = closure.get(a)
        in_closure = a in closure
        try:
            ok, failing = irreducible_sigma_check(q, lam, a, budget=budget, context=ctx)
            budget_hit = False
        except BudgetExceeded:
            ok, failing, budget_hit = None, None, True
        records.append(
            CompareRecord(a, verdict, cert, in_closure, ok, failing, budget_hit)
        )
    sigma_members = [r.alpha for r in records if r.verdict.member]
    closure_members = [r.alpha for r in records if r.in_closure]
    irred_members = [r.alpha for r in records if r.irreducible]
    discrepancies = []
    pairs = [
        ("sigma", set(sigma_members), "genetic", set(closure_members)),
        ("sigma", set(sigma_members), "irreducible", set(irred_members)),
        ("genetic", set(closure_members), "irreducible", set(irred_members)),
    ]
    by_alpha = {r.alpha: r for r in records}
    for left_name, left, right_name, right in pairs:
        for a in sorted(left ^ right, key=glex_key):
            rec = by_alpha[a]
            if rec.budget_exceeded and {left_name, right_name} & {"irreducible"}:
                continue
            discrepancies.append(
                {
                    "alpha": a,
                    "pair": (left_name, right_name),
                    "only_in": left_name if a in left else right_name,
                    "record": rec,
                }
            )
    return CompareReport(
        bound=bound,
        records=records,
        sigma_members=sigma_members,
        closure_members=closure_members,
        irreducible_members=irred_members,
        discrepancies=discrepancies,
        closure_budget_exceeded=closure_budget_exceeded,
    )
