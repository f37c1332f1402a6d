"""Independent reference implementations used by the acceptance suite.

Terms here are plain nested tuples ``(symbol, arg, ...)`` and variables are
strings, so nothing is shared with the library beyond the parsed input.
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache
from itertools import product

from condconf.terms import Var


def to_tuple(t):
    if isinstance(t, Var):
        return t.name
    return (t.symbol, *(to_tuple(a) for a in t.args))


def rules_of(R):
    return [
        (r.label, to_tuple(r.lhs), to_tuple(r.rhs), tuple((to_tuple(s), to_tuple(t)) for s, t in r.conditions))
        for r in R.rules
    ]


# -- naive unification ---------------------------------------------------------

def subst(sigma, t):
    if isinstance(t, str):
        return subst(sigma, sigma[t]) if t in sigma else t
    return (t[0], *(subst(sigma, a) for a in t[1:]))


def vars_of(t, acc=None):
    acc = [] if acc is None else acc
    if isinstance(t, str):
        if t not in acc:
            acc.append(t)
    else:
        for a in t[1:]:
            vars_of(a, acc)
    return acc


def unify(s, t):
    """Triangular-substitution unifier; returns a fully applied dict or None."""
    sigma = {}
    stack = [(s, t)]
    while stack:
        a, b = stack.pop()
        a, b = subst(sigma, a), subst(sigma, b)
        if a == b:
            continue
        if isinstance(b, str) and not isinstance(a, str):
            a, b = b, a
        if isinstance(a, str):
            if a in vars_of(b):
                return None
            sigma[a] = b
            continue
        if a[0] != b[0] or len(a) != len(b):
            return None
        stack.extend(zip(a[1:], b[1:]))
    return {x: subst(sigma, x) for x in sigma}


def positions(t, p=()):
    if isinstance(t, str):
        return
    yield p, t
    for i, a in enumerate(t[1:], 1):
        yield from positions(a, p + (i,))


def put(t, p, u):
    if not p:
        return u
    args = list(t)
    args[p[0]] = put(t[p[0]], p[1:], u)
    return tuple(args)


def canonical(t):
    """Rename variables to v0, v1, ... in first-occurrence order."""
    names = {x: f"v{i}" for i, x in enumerate(vars_of(t))}
    return subst(names, t)


def _bundle(rule):
    # one term holding the whole rule, so renaming and shape checks see everything
    _, lhs, rhs, conds = rule
    return ("_", lhs, rhs, *(("_", s, t) for s, t in conds))


def _rename(rule, suffix):
    label, lhs, rhs, conds = rule
    sigma = {x: x + suffix for x in vars_of(_bundle(rule))}
    return label, subst(sigma, lhs), subst(sigma, rhs), tuple((subst(sigma, s), subst(sigma, t)) for s, t in conds)


def brute_force_ccps(R):
    """Every (outer, inner, position) overlap, with root self-variants skipped
    and later exact mirrors collapsed into the earlier pair."""
    rules = rules_of(R)
    found = []
    for outer in rules:
        for inner in rules:
            inner_r = _rename(inner, "#")
            for p, sub in positions(outer[1]):
                if not p and canonical(_bundle(outer)) == canonical(_bundle(inner)):
                    continue
                mu = unify(sub, inner_r[1])
                if mu is None:
                    continue
                u = subst(mu, put(outer[1], p, inner_r[2]))
                v = subst(mu, outer[2])
                conds = tuple(("_", subst(mu, s), subst(mu, t)) for s, t in outer[3] + inner_r[3])
                mirror = canonical(("_", v, u, *conds))
                if any(canonical(("_", a, b, *c)) == mirror for a, b, c in found):
                    continue
                found.append((u, v, conds))
    return found


# -- ground conditional rewriting ------------------------------------------

def ground_match(pattern, t, sigma):
    if isinstance(pattern, str):
        if pattern in sigma:
            return sigma if sigma[pattern] == t else None
        return {**sigma, pattern: t}
    if pattern[0] != t[0] or len(pattern) != len(t):
        return None
    for a, b in zip(pattern[1:], t[1:]):
        sigma = ground_match(a, b, sigma)
        if sigma is None:
            return None
    return sigma


class GroundOracle:
    """Unbounded ground conditional rewriting for terminating systems."""

    def __init__(self, R):
        self.rules = rules_of(R)
        self.successors = lru_cache(maxsize=None)(self._successors)
        self.reducts = lru_cache(maxsize=None)(self._reducts)

    def _solve(self, conds, sigma):
        if not conds:
            yield sigma
            return
        (s, t), rest = conds[0], conds[1:]
        for u in self.reducts(subst(sigma, s)):
            ext = ground_match(t, u, sigma)
            if ext is not None:
                yield from self._solve(rest, ext)

    def _successors(self, t):
        out = set()
        for p, sub in positions(t):
            for _, lhs, rhs, conds in self.rules:
                sigma = ground_match(lhs, sub, {})
                if sigma is None:
                    continue
                for theta in self._solve(conds, sigma):
                    out.add(put(t, p, subst(theta, rhs)))
        return frozenset(out)

    def _reducts(self, t):
        seen = {t}
        queue = deque([t])
        while queue:
            for u in self.successors(queue.popleft()):
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
        return frozenset(seen)

    def joinable(self, a, b):
        return not self.reducts(a).isdisjoint(self.reducts(b))


def all_ground_terms(signature, max_size):
    """Every ground term with at most ``max_size`` nodes."""
    by_size = {1: [(f,) for f, n in sorted(signature.items()) if n == 0]}
    for size in range(2, max_size + 1):
        terms = []
        for f, n in sorted(signature.items()):
            if n == 0:
                continue
            for split in _compositions(size - 1, n):
                for args in product(*(by_size[k] for k in split)):
                    terms.append((f, *args))
        by_size[size] = terms
    return [t for size in sorted(by_size) for t in by_size[size]]


def _compositions(total, parts):
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first, *rest)


def non_joinable_peaks(oracle, terms):
    """Local peaks ``t <- s -> u`` with ``t`` and ``u`` not joinable.

    For terminating systems local confluence on every term is equivalent to
    confluence, and every term of the enumeration is a peak source.
    """
    peaks = []
    for s in terms:
        succ = sorted(oracle.successors(s))
        for i, t in enumerate(succ):
            for u in succ[i + 1:]:
                if not oracle.joinable(t, u):
                    peaks.append((s, t, u))
    return peaks
