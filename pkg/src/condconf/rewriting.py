"""Bounded operational conditional rewriting.

A step with a conditional rule at condition depth ``d`` evaluates the rule's
conditions with reachability at depth ``d - 1``; at depth 0 only
unconditional rules fire.  Every search is capped by a :class:`Budget`, and
results carry a flag telling whether they are complete.  A result is only
reported complete (``NoStep``, an exhaustive reduct set) when no cap was hit
anywhere below it, including the depth cap, so "complete" statements hold for
the unbounded rewrite relation.
"""

from __future__ import annotations

import enum
from collections import deque
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field

from .ctrs import CTRS, Condition, Rule
from .terms import (
    App,
    FreshNames,
    Position,
    Subst,
    Term,
    _match_into,
    apply,
    canonical,
    format_position,
    rename_apart,
    replace_at,
    subterms,
    variables,
)


@dataclass(frozen=True)
class Budget:
    cond_depth: int = 8
    fuel: int = 10_000
    max_term_size: int = 500

    def __post_init__(self):
        if self.cond_depth < 0 or self.fuel < 0 or self.max_term_size < 1:
            raise ValueError(f"invalid budget {self}")


@dataclass(frozen=True)
class Step:
    """One rewrite step ``source -> result`` with its provenance.

    ``condition_paths`` holds, per condition ``s == t`` of the rule, the
    derivation ``s*sigma -> ... -> t*sigma`` found while evaluating it.
    Hypothesis steps (contextual rewriting) use labels ``hyp1``, ``hyp2``, ...
    """

    rule: str
    position: Position
    binding: tuple[tuple[str, Term], ...]
    source: Term
    result: Term
    condition_paths: tuple[tuple[Term, ...], ...] = ()
    # the rule instance actually applied (renamed apart from the source)
    applied: Rule | None = field(default=None, compare=False, repr=False)

    @property
    def substitution(self) -> Subst:
        return dict(self.binding)

    def __str__(self):
        return f"{self.source} -> {self.result}  [rule {self.rule} at {format_position(self.position)}]"


class StepStatus(enum.Enum):
    STEPS = "steps"
    NO_STEP = "no-step"
    EXHAUSTED = "budget-exhausted"


@dataclass(frozen=True)
class StepResult:
    steps: tuple[Step, ...]
    complete: bool

    @property
    def status(self) -> StepStatus:
        if self.steps:
            return StepStatus.STEPS
        return StepStatus.NO_STEP if self.complete else StepStatus.EXHAUSTED

    @property
    def successors(self) -> list[Term]:
        return list(dict.fromkeys(s.result for s in self.steps))


@dataclass
class Reach:
    """Result of a breadth-first reachability search from ``start``."""

    start: Term
    parents: dict[Term, Step | None]
    exhaustive: bool

    @property
    def terms(self) -> frozenset[Term]:
        return frozenset(self.parents)

    def __contains__(self, t: Term) -> bool:
        return t in self.parents

    def __iter__(self):
        return iter(self.parents)

    def __len__(self):
        return len(self.parents)

    def steps_to(self, t: Term) -> list[Step]:
        path = []
        step = self.parents[t]
        while step is not None:
            path.append(step)
            step = self.parents[step.source]
        path.reverse()
        return path

    def derivation(self, t: Term) -> tuple[Term, ...]:
        return (self.start, *(s.result for s in self.steps_to(t)))


class Outcome(enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Join:
    outcome: Outcome
    common: Term | None = None
    left: tuple[Term, ...] = ()
    right: tuple[Term, ...] = ()


@dataclass
class _RuleInfo:
    rule: Rule
    names: frozenset[str]


class Rewriter:
    """Conditional rewriting for one CTRS under one budget, with memoisation."""

    def __init__(self, R: CTRS, budget: Budget | None = None, fresh: FreshNames | None = None):
        self.R = R
        self.budget = budget or Budget()
        self.fresh = fresh or FreshNames()
        self._rules = [
            _RuleInfo(r, frozenset(variables(r))) for r in R.rules
        ]
        self._by_symbol: dict[str, list[_RuleInfo]] = {}
        for info in self._rules:
            self._by_symbol.setdefault(info.rule.lhs.symbol, []).append(info)
        self._steps: dict[tuple[Term, int], StepResult] = {}
        self._reach: dict[tuple[Term, int, tuple], Reach] = {}

    # -- single steps ------------------------------------------------------

    def step(self, t: Term, depth: int | None = None) -> StepResult:
        depth = self.budget.cond_depth if depth is None else depth
        key = (t, depth)
        cached = self._steps.get(key)
        if cached is None:
            cached = self._steps[key] = self._step(t, depth)
        return cached

    def _step(self, t: Term, depth: int) -> StepResult:
        steps: dict[tuple, Step] = {}
        complete = True
        t_names: frozenset[str] | None = None
        for p, u in subterms(t):
            if not isinstance(u, App):
                continue
            for info in self._by_symbol.get(u.symbol, ()):
                rule = info.rule
                if t_names is None:
                    t_names = frozenset(variables(t))
                if info.names & t_names:
                    _, rule = rename_apart(t_names, rule, self.fresh)
                sigma: Subst = {}
                if not _match_into(rule.lhs, u, sigma):
                    continue
                if rule.conditions and depth == 0:
                    complete = False
                    continue
                extensions, ok = self._eval(rule.conditions, sigma, depth - 1)
                complete &= ok
                rhs_names = variables(rule.rhs)
                for theta, paths in extensions:
                    if any(x not in theta for x in rhs_names):
                        # unbound right-hand side variables: infinitely many
                        # successors, the emitted one only represents them
                        complete = False
                    result = replace_at(t, p, apply(theta, rule.rhs))
                    binding = tuple(sorted(canonical(theta).items()))
                    key = (rule.label, p, result)
                    if key not in steps:
                        steps[key] = Step(rule.label, p, binding, t, result, paths, rule)
        return StepResult(tuple(steps.values()), complete)

    # -- conditions --------------------------------------------------------

    def _eval(
        self, conditions: Sequence[Condition], sigma: Subst, depth: int
    ) -> tuple[list[tuple[Subst, tuple]], bool]:
        results: list[tuple[Subst, tuple]] = [(sigma, ())]
        complete = True
        for s, target in conditions:
            extended = []
            seen = set()
            for theta, paths in results:
                if any(x not in theta for x in variables(s)):
                    complete = False
                    continue
                reach = self.reach(apply(theta, s), depth)
                complete &= reach.exhaustive
                for u in reach:
                    ext = dict(theta)
                    if _match_into(target, u, ext):
                        key = tuple(sorted(ext.items(), key=lambda kv: kv[0]))
                        if key not in seen:
                            seen.add(key)
                            extended.append((ext, paths + (reach.derivation(u),)))
            results = extended
            if not results:
                break
        return results, complete

    def eval_conditions(
        self, conditions: Sequence[Condition], sigma: Mapping[str, Term], depth: int | None = None
    ) -> tuple[list[Subst], bool]:
        depth = self.budget.cond_depth if depth is None else depth
        results, complete = self._eval(conditions, dict(sigma), depth)
        return [canonical(theta) for theta, _ in results], complete

    # -- reachability ------------------------------------------------------

    def reach(
        self, t: Term, depth: int | None = None, hypotheses: Sequence[Condition] = ()
    ) -> Reach:
        depth = self.budget.cond_depth if depth is None else depth
        key = (t, depth, tuple(hypotheses))
        cached = self._reach.get(key)
        if cached is None:
            cached = self._reach[key] = self._closure(t, depth, tuple(hypotheses))
        return cached

    def _closure(self, start: Term, depth: int, hypotheses: tuple[Condition, ...]) -> Reach:
        parents: dict[Term, Step | None] = {start: None}
        queue = deque([start])
        fuel = self.budget.fuel
        exhaustive = True
        while queue:
            if fuel == 0:
                exhaustive = False
                break
            fuel -= 1
            t = queue.popleft()
            result = self.step(t, depth)
            exhaustive &= result.complete
            steps = list(result.steps)
            if hypotheses:
                steps.extend(hypothesis_steps(hypotheses, t))
            for step in steps:
                u = step.result
                if u in parents:
                    continue
                if u.size > self.budget.max_term_size:
                    exhaustive = False
                    continue
                parents[u] = step
                queue.append(u)
        return Reach(start, parents, exhaustive)

    def normal_forms(self, t: Term) -> tuple[frozenset[Term], bool]:
        reach = self.reach(t)
        nfs = frozenset(
            u for u in reach if self.step(u).status is StepStatus.NO_STEP
        )
        return nfs, reach.exhaustive

    def joinable(self, u: Term, v: Term, hypotheses: Sequence[Condition] = ()) -> Join:
        if u == v:
            return Join(Outcome.YES, u, (u,), (v,))
        ru = self.reach(u, hypotheses=hypotheses)
        rv = self.reach(v, hypotheses=hypotheses)
        for w in ru:
            if w in rv:
                return Join(Outcome.YES, w, ru.derivation(w), rv.derivation(w))
        if ru.exhaustive and rv.exhaustive:
            return Join(Outcome.NO)
        return Join(Outcome.UNKNOWN)


def hypothesis_steps(hypotheses: Iterable[Condition], t: Term) -> list[Step]:
    """Steps ``C[s] -> C[t']`` for each hypothesis ``s == t'``.

    Hypotheses apply only where ``s`` occurs literally: their variables stand
    for fixed (if unknown) terms and are never instantiated.
    """
    steps = []
    for p, u in subterms(t):
        for i, (s, target) in enumerate(hypotheses, 1):
            if u == s:
                steps.append(Step(f"hyp{i}", p, (), t, replace_at(t, p, target)))
    return steps


# -- functional interface --------------------------------------------------

def rewrite_step(R: CTRS, t: Term, budget: Budget | None = None) -> StepResult:
    return Rewriter(R, budget).step(t)


def eval_conditions(
    R: CTRS, conditions: Sequence[Condition], sigma: Mapping[str, Term], budget: Budget | None = None
) -> tuple[list[Subst], bool]:
    """All extensions of ``sigma`` satisfying ``conditions`` left to right.

    The flag is ``False`` when some search hit a budget cap, in which case
    the list may be missing solutions (an empty list then means "unknown").
    """
    return Rewriter(R, budget).eval_conditions(conditions, sigma)


def reducts(R: CTRS, t: Term, budget: Budget | None = None) -> tuple[frozenset[Term], bool]:
    reach = Rewriter(R, budget).reach(t)
    return reach.terms, reach.exhaustive


def normal_forms(R: CTRS, t: Term, budget: Budget | None = None) -> tuple[frozenset[Term], bool]:
    return Rewriter(R, budget).normal_forms(t)


def joinable(R: CTRS, u: Term, v: Term, budget: Budget | None = None) -> Join:
    return Rewriter(R, budget).joinable(u, v)
