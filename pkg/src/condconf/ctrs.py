"""Conditional rules, rewrite systems and their syntactic classification."""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field

from .terms import App, Permutation, Term, Var, apply, variables, variant

Condition = tuple[Term, Term]


class CTRSError(ValueError):
    """Base class for malformed rewrite systems."""


class ArityError(CTRSError):
    pass


class LhsVariableError(CTRSError):
    pass


@dataclass(frozen=True)
class Rule:
    """``lhs -> rhs <= s1 == t1, ..., sn == tn`` with oriented conditions."""

    label: str
    lhs: Term
    rhs: Term
    conditions: tuple[Condition, ...] = ()

    def __post_init__(self):
        if isinstance(self.lhs, Var):
            raise LhsVariableError(f"rule {self.label}: left-hand side {self.lhs} is a variable")
        object.__setattr__(self, "conditions", tuple((s, t) for s, t in self.conditions))

    def terms(self):
        yield self.lhs
        yield self.rhs
        for s, t in self.conditions:
            yield s
            yield t

    def substitute(self, sigma: Mapping[str, Term]) -> Rule:
        return Rule(
            self.label,
            apply(sigma, self.lhs),
            apply(sigma, self.rhs),
            tuple((apply(sigma, s), apply(sigma, t)) for s, t in self.conditions),
        )

    @property
    def is_conditional(self) -> bool:
        return bool(self.conditions)

    def __str__(self):
        text = f"{self.lhs} -> {self.rhs}"
        if self.conditions:
            text += " | " + ", ".join(f"{s} == {t}" for s, t in self.conditions)
        return text


@dataclass(frozen=True)
class CTRS:
    rules: tuple[Rule, ...]
    signature: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "rules", tuple(self.rules))
        sig = dict(self.signature)
        for rule in self.rules:
            for t in rule.terms():
                _check_arities(t, sig, rule.label)
        object.__setattr__(self, "signature", sig)

    @classmethod
    def of(cls, rules: Iterable[Rule | tuple]) -> CTRS:
        """Build from rules or ``(lhs, rhs[, conditions])`` tuples, labelling 1, 2, ..."""
        built = []
        for i, r in enumerate(rules, 1):
            if isinstance(r, Rule):
                built.append(r)
            else:
                lhs, rhs, *rest = r
                built.append(Rule(str(i), lhs, rhs, tuple(rest[0]) if rest else ()))
        return cls(tuple(built))

    @property
    def defined(self) -> frozenset[str]:
        return frozenset(r.lhs.symbol for r in self.rules)

    @property
    def constructors(self) -> frozenset[str]:
        return frozenset(self.signature) - self.defined

    def rule(self, label: str) -> Rule:
        for r in self.rules:
            if r.label == label:
                return r
        raise KeyError(label)

    def __iter__(self):
        return iter(self.rules)

    def __len__(self):
        return len(self.rules)


def _check_arities(t: Term, sig: dict[str, int], label: str) -> None:
    stack = [t]
    while stack:
        u = stack.pop()
        if isinstance(u, App):
            known = sig.setdefault(u.symbol, len(u.args))
            if known != len(u.args):
                raise ArityError(
                    f"rule {label}: symbol {u.symbol!r} used with arities {known} and {len(u.args)}"
                )
            stack.extend(u.args)


@dataclass
class Check:
    """Outcome of a syntactic test together with human-readable diagnostics."""

    ok: bool
    diagnostics: list[str] = field(default_factory=list)

    def __bool__(self):
        return self.ok


def extra_vars(rule: Rule) -> tuple[str, ...]:
    lhs = set(variables(rule.lhs))
    return tuple(x for x in variables(rule.conditions) if x not in lhs)


def is_3ctrs(R: CTRS | Iterable[Rule]) -> Check:
    problems = []
    for rule in R:
        allowed = set(variables(rule.lhs, rule.conditions))
        missing = [x for x in variables(rule.rhs) if x not in allowed]
        if missing:
            problems.append(
                f"rule {rule.label}: right-hand side variable(s) {', '.join(missing)} "
                "occur neither in the left-hand side nor in the conditions"
            )
    return Check(not problems, problems)


def is_deterministic(R: CTRS | Iterable[Rule]) -> Check:
    problems = []
    for rule in R:
        bound = set(variables(rule.lhs))
        for i, (s, t) in enumerate(rule.conditions, 1):
            missing = [x for x in variables(s) if x not in bound]
            if missing:
                problems.append(
                    f"rule {rule.label}: condition {i} left side {s} uses unbound "
                    f"variable(s) {', '.join(missing)}"
                )
            bound.update(variables(t))
    return Check(not problems, problems)


def variant_of(r1: Rule, r2: Rule) -> Permutation | None:
    """A renaming turning ``r1`` into ``r2`` (labels ignored), or ``None``."""
    if len(r1.conditions) != len(r2.conditions):
        return None
    return variant(r1, r2)
