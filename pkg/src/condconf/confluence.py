"""Conditional critical pairs, their joinability, and the confluence verdict.

The verdict follows the critical pair criterion for quasi-decreasing strongly
deterministic oriented 3-CTRSs: if the system is strongly deterministic,
quasi-reductive for some LPO (hence quasi-decreasing) and every conditional
critical pair is joinable, it is confluent.  Conversely a critical pair
without conditions whose sides have disjoint, fully explored reduct sets is a
genuine non-joinable peak, which refutes confluence for any CTRS.
"""

from __future__ import annotations

import enum
from collections.abc import Sequence
from dataclasses import dataclass, field

from .ctrs import CTRS, Check, Condition, is_3ctrs, is_deterministic, variant_of
from .orders import OrderReport, Precedence, check_quasi_reductive, search_precedence
from .rewriting import Budget, Outcome, Rewriter
from .terms import (
    App,
    FreshNames,
    Position,
    Subst,
    Term,
    apply,
    format_position,
    function_positions,
    is_ground,
    match,
    mgu,
    rename_apart,
    replace_at,
    subterm_at,
    subterms,
    variables,
    variant,
)


@dataclass(frozen=True)
class CCP:
    u: Term
    v: Term
    conditions: tuple[Condition, ...]
    outer: str
    inner: str
    position: Position
    mgu: tuple[tuple[str, Term], ...]

    def __str__(self):
        text = f"{self.u} = {self.v}"
        if self.conditions:
            text += " <= " + ", ".join(f"{s} == {t}" for s, t in self.conditions)
        return text

    @property
    def provenance(self) -> str:
        return f"rules {self.outer}/{self.inner} at {format_position(self.position)}"


@dataclass(frozen=True)
class Irreducibility:
    strongly_irreducible: bool
    # (subterm position, rule label, unifier) of the first possible redex
    witness: tuple[Position, str, Subst] | None = None


def strongly_irreducible(R: CTRS, t: Term, fresh: FreshNames | None = None) -> Irreducibility:
    """Sufficient test: no non-variable subterm of ``t`` unifies with a lhs.

    Under a normalized substitution, a redex of ``t*sigma`` can only sit at a
    non-variable position of ``t``, and it would make that subterm unify with
    the rule's left-hand side.  ``False`` therefore means "unknown".
    """
    fresh = fresh or FreshNames()
    names = variables(t)
    for p, u in subterms(t):
        if not isinstance(u, App):
            continue
        for rule in R.rules:
            _, renamed = rename_apart(names, rule, fresh)
            unifier = mgu(u, renamed.lhs)
            if unifier is not None:
                return Irreducibility(False, (p, rule.label, unifier))
    return Irreducibility(True)


def strongly_deterministic(R: CTRS) -> Check:
    three = is_3ctrs(R)
    det = is_deterministic(R)
    problems = three.diagnostics + det.diagnostics
    fresh = FreshNames()
    for rule in R.rules:
        for i, (_s, t) in enumerate(rule.conditions, 1):
            res = strongly_irreducible(R, t, fresh)
            if not res.strongly_irreducible:
                p, label, _ = res.witness
                problems.append(
                    f"rule {rule.label}: condition {i} right side {t} is not known to be "
                    f"strongly irreducible ({subterm_at(t, p)} unifies with the "
                    f"left-hand side of rule {label})"
                )
    return Check(not problems, problems)


def critical_pairs(
    R: CTRS, fresh: FreshNames | None = None, keep_mirrors: bool = False
) -> list[CCP]:
    """Conditional critical pairs, ordered by (outer rule, inner rule, position).

    Root overlaps of a rule with a variant of itself are skipped.  Unless
    ``keep_mirrors`` is set, a pair that is an earlier pair with its sides
    swapped (same condition sequence, up to renaming) is dropped.
    """
    fresh = fresh or FreshNames()
    out: list[CCP] = []
    for outer in R.rules:
        outer_names = variables(outer)
        for inner in R.rules:
            _, inner_r = rename_apart(outer_names, inner, fresh)
            for p in function_positions(outer.lhs):
                if not p and variant_of(outer, inner) is not None:
                    continue
                mu = mgu(subterm_at(outer.lhs, p), inner_r.lhs)
                if mu is None:
                    continue
                u = apply(mu, replace_at(outer.lhs, p, inner_r.rhs))
                v = apply(mu, outer.rhs)
                conds = apply(mu, outer.conditions) + apply(mu, inner_r.conditions)
                if not keep_mirrors and any(
                    variant((v, u, conds), (c.u, c.v, c.conditions)) for c in out
                ):
                    continue
                out.append(
                    CCP(u, v, tuple(conds), outer.label, inner.label, p, tuple(sorted(mu.items())))
                )
    return out


def contextual_reducts(
    R: CTRS, hypotheses: Sequence[Condition], t: Term, budget: Budget | None = None
) -> tuple[frozenset[Term], bool]:
    reach = Rewriter(R, budget).reach(t, hypotheses=tuple(hypotheses))
    return reach.terms, reach.exhaustive


def _infeasible(rw: Rewriter, conditions: Sequence[Condition]) -> str | None:
    hyps = tuple(conditions)
    for i, (s1, t1) in enumerate(hyps):
        for j in range(i + 1, len(hyps)):
            s2, t2 = hyps[j]
            if s1 != s2 or mgu(t1, t2) is not None:
                continue
            r1, r2 = rw.reach(t1, hypotheses=hyps), rw.reach(t2, hypotheses=hyps)
            if r1.exhaustive and r2.exhaustive and not (r1.terms & r2.terms):
                return f"{s1} cannot reach both {t1} and {t2}"
    for s, t in hyps:
        # instantiating variables can create redexes, so only ground left
        # sides have reduct sets that cover every instance
        if not is_ground(s):
            continue
        reach = rw.reach(s)
        if reach.exhaustive and all(match(t, u) is None for u in reach):
            return f"no reduct of {s} is an instance of {t}"
    return None


def conditions_infeasible(R: CTRS, conditions: Sequence[Condition], budget: Budget | None = None) -> bool:
    """``True`` when no substitution can satisfy ``conditions``.

    Two conditions with the same left side and non-unifiable right sides
    whose reduct sets are explored and disjoint are treated as contradictory.
    That is justified for strongly deterministic quasi-reductive systems,
    where condition right sides are strongly irreducible and peaks below the
    overlap are joinable by the well-founded induction behind the criterion;
    it is not a statement about arbitrary CTRSs.
    """
    return _infeasible(Rewriter(R, budget), conditions) is not None


class JoinKind(enum.Enum):
    TRIVIAL = "identical sides"
    INFEASIBLE = "infeasible conditions"
    COMMON_REDUCT = "common reduct"
    DISJOINT = "disjoint normal reduct sets"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class CCPResult:
    outcome: Outcome
    kind: JoinKind
    common: Term | None = None
    left: tuple[Term, ...] = ()
    right: tuple[Term, ...] = ()
    reason: str = ""


def _ccp_joinable(rw: Rewriter, pair: CCP, use_conditions: bool = True) -> CCPResult:
    if pair.u == pair.v:
        return CCPResult(Outcome.YES, JoinKind.TRIVIAL, pair.u, (pair.u,), (pair.v,))
    hyps = pair.conditions if use_conditions else ()
    if hyps:
        reason = _infeasible(rw, hyps)
        if reason is not None:
            return CCPResult(Outcome.YES, JoinKind.INFEASIBLE, reason=reason)
    join = rw.joinable(pair.u, pair.v, hyps)
    if join.outcome is Outcome.YES:
        return CCPResult(Outcome.YES, JoinKind.COMMON_REDUCT, join.common, join.left, join.right)
    if not pair.conditions and join.outcome is Outcome.NO:
        return CCPResult(Outcome.NO, JoinKind.DISJOINT)
    return CCPResult(Outcome.UNKNOWN, JoinKind.UNKNOWN)


def ccp_joinable(R: CTRS, pair: CCP, budget: Budget | None = None) -> CCPResult:
    """Joinability of one pair, using its conditions as hypotheses.

    ``YES`` via infeasible conditions assumes the setting of the criterion
    (see :func:`conditions_infeasible`); ``NO`` needs an unconditional pair.
    """
    return _ccp_joinable(Rewriter(R, budget), pair)


@dataclass
class Verdict:
    answer: str  # "YES", "NO" or "MAYBE"
    sdtrs: Check
    order: OrderReport | None
    ccps: list[CCP]
    results: list[CCPResult | None]
    reason: str = ""
    precedence_hint: Precedence | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def quasi_reductive(self) -> bool:
        return self.order is not None and self.order.quasi_reductive


def decide_confluence(
    R: CTRS,
    prec_hint: Precedence | None = None,
    budget: Budget | None = None,
    search_limit: int = 10_000,
) -> Verdict:
    fresh = FreshNames()
    rw = Rewriter(R, budget, fresh)
    sdtrs = strongly_deterministic(R)
    prec = search_precedence(R, prec_hint, search_limit)
    order = check_quasi_reductive(R, prec) if prec is not None else None
    if order is None and prec_hint is not None:
        order = check_quasi_reductive(R, prec_hint)
    criterion = sdtrs.ok and order is not None and order.quasi_reductive
    ccps = critical_pairs(R, fresh)

    results: list[CCPResult | None] = []
    for pair in ccps:
        if criterion:
            results.append(_ccp_joinable(rw, pair))
        elif not pair.conditions:
            # only refutations are useful without the criterion's hypotheses
            results.append(_ccp_joinable(rw, pair, use_conditions=False))
        else:
            results.append(None)

    verdict = Verdict("MAYBE", sdtrs, order, ccps, results, precedence_hint=prec_hint)
    refuted = [i for i, r in enumerate(results, 1) if r is not None and r.outcome is Outcome.NO]
    if refuted:
        verdict.answer = "NO"
        verdict.reason = f"critical pair {refuted[0]} is not joinable"
    elif not sdtrs.ok:
        verdict.reason = "not a strongly deterministic oriented 3-CTRS"
    elif not criterion:
        verdict.reason = "no LPO precedence shows quasi-reductivity"
    elif all(r.outcome is Outcome.YES for r in results):
        verdict.answer = "YES"
        verdict.reason = "all conditional critical pairs are joinable"
    else:
        unknown = [i for i, r in enumerate(results, 1) if r.outcome is Outcome.UNKNOWN]
        verdict.reason = f"joinability of critical pair {unknown[0]} could not be shown"
    return verdict
