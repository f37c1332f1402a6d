"""Lexicographic path order and the premise-free quasi-reductivity check.

The precedence is a quasi-precedence: symbols can be strictly ordered or
declared equivalent.  Between equivalent symbols of equal arity the LPO
compares arguments lexicographically, with terms that differ only in
equivalent symbols treated as equal.
"""

from __future__ import annotations

import functools
from collections.abc import Iterable
from dataclasses import dataclass, field

from .ctrs import CTRS
from .terms import Term, Var, occurs, symbols


class Precedence:
    """A strict order on equivalence classes of function symbols."""

    def __init__(self, greater: Iterable[tuple[str, str]] = (), equivalent: Iterable[tuple[str, str]] = ()):
        self._rep: dict[str, str] = {}
        for f, g in equivalent:
            rf, rg = self.rep(f), self.rep(g)
            if rf != rg:
                self._rep[rg] = rf
        # flatten so that rep() is a single lookup
        self._rep = {f: self.rep(f) for f in self._rep}
        closure: set[tuple[str, str]] = {(self.rep(f), self.rep(g)) for f, g in greater}
        changed = True
        while changed:
            changed = False
            for a, b in list(closure):
                for c, d in list(closure):
                    if b == c and (a, d) not in closure:
                        closure.add((a, d))
                        changed = True
        if any(a == b for a, b in closure):
            raise ValueError("precedence is cyclic")
        self._gt = frozenset(closure)
        self._given = tuple(greater), tuple(equivalent)

    def rep(self, f: str) -> str:
        while f in self._rep and self._rep[f] != f:
            f = self._rep[f]
        return f

    def gt(self, f: str, g: str) -> bool:
        return (self.rep(f), self.rep(g)) in self._gt

    def eq(self, f: str, g: str) -> bool:
        return f == g or self.rep(f) == self.rep(g)

    def comparable(self, f: str, g: str) -> bool:
        return self.eq(f, g) or self.gt(f, g) or self.gt(g, f)

    def with_greater(self, f: str, g: str) -> Precedence | None:
        if self.eq(f, g) or self.gt(g, f):
            return None
        return Precedence(self._given[0] + ((f, g),), self._given[1])

    def with_equivalent(self, f: str, g: str) -> Precedence | None:
        if self.gt(f, g) or self.gt(g, f):
            return None
        try:
            return Precedence(self._given[0], self._given[1] + ((f, g),))
        except ValueError:
            return None

    @property
    def pairs(self) -> frozenset[tuple[str, str]]:
        """Strict pairs between class representatives (transitively closed)."""
        return self._gt

    def classes(self) -> list[set[str]]:
        groups: dict[str, set[str]] = {}
        for f in self._rep:
            groups.setdefault(self.rep(f), {self.rep(f)}).add(f)
        return [g for g in groups.values() if len(g) > 1]

    def _key(self):
        return self._gt, frozenset(frozenset(c) for c in self.classes())

    def __eq__(self, other):
        return isinstance(other, Precedence) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    @classmethod
    def parse(cls, text: str) -> Precedence:
        """Parse ``min>le>true,min>false``; ``even=odd`` declares equivalence."""
        greater, equivalent = [], []
        for chain in text.replace(" ", "").split(","):
            if not chain:
                continue
            prev = None
            for part in chain.split(">"):
                names = part.split("=")
                if any(not n for n in names):
                    raise ValueError(f"malformed precedence chain {chain!r}")
                equivalent += [(names[0], n) for n in names[1:]]
                if prev is not None:
                    greater.append((prev, names[0]))
                prev = names[0]
        return cls(greater, equivalent)

    def __str__(self):
        parts = [f"{a}>{b}" for a, b in sorted(self._gt)]
        parts += ["=".join(sorted(c)) for c in sorted(self.classes(), key=sorted)]
        return ",".join(parts)

    def __repr__(self):
        return f"Precedence({str(self)!r})"


def _lpo(prec: Precedence):
    @functools.cache
    def equivalent(s: Term, t: Term) -> bool:
        if isinstance(s, Var) or isinstance(t, Var):
            return s == t
        return (
            len(s.args) == len(t.args)
            and prec.eq(s.symbol, t.symbol)
            and all(equivalent(a, b) for a, b in zip(s.args, t.args))
        )

    @functools.cache
    def greater(s: Term, t: Term) -> bool:
        if isinstance(s, Var):
            return False
        if isinstance(t, Var):
            return occurs(t.name, s)
        if any(equivalent(si, t) or greater(si, t) for si in s.args):
            return True
        f, g = s.symbol, t.symbol
        if prec.gt(f, g):
            return all(greater(s, tj) for tj in t.args)
        if prec.eq(f, g) and len(s.args) == len(t.args):
            for si, ti in zip(s.args, t.args):
                if not equivalent(si, ti):
                    return greater(si, ti) and all(greater(s, tj) for tj in t.args)
        return False

    return greater, equivalent


def lpo_greater(prec: Precedence, s: Term, t: Term) -> bool:
    return _lpo(prec)[0](s, t)


def lpo_equivalent(prec: Precedence, s: Term, t: Term) -> bool:
    return _lpo(prec)[1](s, t)


def subterm_extended_greater(prec: Precedence, s: Term, t: Term) -> bool:
    """``s (>lpo U |>)+ t``.

    The proper-subterm relation is contained in the LPO and the LPO is
    transitive, so the closure coincides with the LPO itself.
    """
    return lpo_greater(prec, s, t)


@dataclass(frozen=True)
class Obligation:
    rule: str
    kind: str  # "condition" (lhs >st s_i) or "rule" (lhs > rhs)
    index: int  # 1-based condition index; 0 for the rule obligation
    left: Term
    right: Term
    holds: bool

    def __str__(self):
        rel = ">st" if self.kind == "condition" else ">"
        what = f"condition {self.index}" if self.kind == "condition" else "rhs"
        return f"rule {self.rule} {what}: {self.left} {rel} {self.right}"


@dataclass
class OrderReport:
    precedence: Precedence
    obligations: list[Obligation] = field(default_factory=list)

    @property
    def quasi_reductive(self) -> bool:
        return all(o.holds for o in self.obligations)

    def failed(self) -> list[Obligation]:
        return [o for o in self.obligations if not o.holds]


def check_quasi_reductive(R: CTRS, prec: Precedence) -> OrderReport:
    """Sufficient check: ``lhs >st s_i`` for every condition and ``lhs > rhs``.

    Premises about earlier conditions are dropped, which only strengthens each
    obligation; closure of the LPO under substitutions lifts the checks to all
    instances.
    """
    greater, _ = _lpo(prec)
    report = OrderReport(prec)
    for rule in R.rules:
        for i, (s, _t) in enumerate(rule.conditions, 1):
            report.obligations.append(
                Obligation(rule.label, "condition", i, rule.lhs, s, greater(rule.lhs, s))
            )
        report.obligations.append(
            Obligation(rule.label, "rule", 0, rule.lhs, rule.rhs, greater(rule.lhs, rule.rhs))
        )
    return report


def search_precedence(
    R: CTRS, hint: Precedence | None = None, limit: int = 10_000
) -> Precedence | None:
    """Find a precedence under which ``R`` passes :func:`check_quasi_reductive`.

    Depth-first search from ``hint`` (then from the empty precedence); each
    node adds one relation between a symbol of the left and a symbol of the
    right side of the first failing obligation (left root symbol first).  At most ``limit``
    precedences are checked.  Symbols are tried in order of first appearance.
    """
    order = {f: i for i, f in enumerate(R.signature)}
    arity = dict(R.signature)
    checked = 0
    visited: set[Precedence] = set()

    def candidates(prec: Precedence, left: Term, right: Term):
        # the root symbol first: a root decision usually settles the obligation
        fs = sorted(symbols(left), key=lambda f: (f != left.symbol, order[f]))
        gs = sorted(symbols(right), key=order.__getitem__)
        for f in fs:
            for g in gs:
                if f == g or prec.comparable(f, g):
                    continue
                yield prec.with_greater(f, g)
                if arity[f] == arity[g]:
                    yield prec.with_equivalent(f, g)

    def dfs(prec: Precedence) -> Precedence | None:
        nonlocal checked
        if checked >= limit or prec in visited:
            return None
        visited.add(prec)
        checked += 1
        report = check_quasi_reductive(R, prec)
        if report.quasi_reductive:
            return prec
        bad = report.failed()[0]
        for nxt in candidates(prec, bad.left, bad.right):
            if nxt is not None:
                found = dfs(nxt)
                if found is not None:
                    return found
        return None

    roots = [hint, Precedence()] if hint is not None else [Precedence()]
    for root in roots:
        found = dfs(root)
        if found is not None:
            return found
    return None
