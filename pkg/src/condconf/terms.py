"""First-order terms, positions, substitutions, matching and unification.

Terms are immutable and hashable; equality is structural.  Positions are
tuples of 1-based argument indices, ``()`` being the root.  Substitutions are
plain ``dict`` objects mapping variable names to terms; the functions here
never store a trivial binding ``x -> x`` in a returned substitution.
"""

from __future__ import annotations

import itertools
import threading
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from typing import Union

Position = tuple[int, ...]
Subst = dict[str, "Term"]

ROOT: Position = ()


class Var:
    __slots__ = ("name", "_hash")

    def __init__(self, name: str):
        self.name = name
        self._hash = hash(("V", name))

    size = 1

    def __eq__(self, other):
        return isinstance(other, Var) and other.name == self.name

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Var({self.name!r})"

    def __str__(self):
        return self.name


class App:
    __slots__ = ("symbol", "args", "size", "_hash")

    def __init__(self, symbol: str, args: Iterable[Term] = ()):
        self.symbol = symbol
        self.args = tuple(args)
        self.size = 1 + sum(a.size for a in self.args)
        self._hash = hash((symbol, self.args))

    @property
    def arity(self) -> int:
        return len(self.args)

    def __eq__(self, other):
        if self is other:
            return True
        return (
            isinstance(other, App)
            and self._hash == other._hash
            and self.symbol == other.symbol
            and self.args == other.args
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if not self.args:
            return f"App({self.symbol!r})"
        return f"App({self.symbol!r}, {list(self.args)!r})"

    def __str__(self):
        if not self.args:
            return self.symbol
        return f"{self.symbol}({','.join(str(a) for a in self.args)})"


Term = Union[Var, App]


class InvalidPosition(ValueError):
    pass


def fun(symbol: str, *args: Term) -> App:
    """Shorthand constructor: ``fun("f", Var("x"), fun("a"))``."""
    return App(symbol, args)


# -- positions --------------------------------------------------------------

def subterm_at(t: Term, p: Position) -> Term:
    for i in p:
        if not isinstance(t, App) or not 1 <= i <= len(t.args):
            raise InvalidPosition(f"position {format_position(p)} is not valid in {t}")
        t = t.args[i - 1]
    return t


def replace_at(t: Term, p: Position, s: Term) -> Term:
    if not p:
        return s
    i = p[0]
    if not isinstance(t, App) or not 1 <= i <= len(t.args):
        raise InvalidPosition(f"position {format_position(p)} is not valid in {t}")
    args = list(t.args)
    args[i - 1] = replace_at(args[i - 1], p[1:], s)
    return App(t.symbol, args)


def subterms(t: Term, p: Position = ROOT) -> Iterator[tuple[Position, Term]]:
    """All ``(position, subterm)`` pairs in preorder, root included."""
    stack = [(p, t)]
    while stack:
        q, u = stack.pop()
        yield q, u
        if isinstance(u, App):
            for i in range(len(u.args), 0, -1):
                stack.append((q + (i,), u.args[i - 1]))


def proper_subterms(t: Term) -> list[tuple[Position, Term]]:
    return [(p, u) for p, u in subterms(t) if p]


def function_positions(t: Term) -> list[Position]:
    return [p for p, u in subterms(t) if isinstance(u, App)]


def format_position(p: Position) -> str:
    return ".".join(map(str, p)) if p else "ε"


# -- variables and symbols -------------------------------------------------

def _terms_of(obj) -> Iterator[Term]:
    if isinstance(obj, (Var, App)):
        yield obj
    elif hasattr(obj, "terms"):
        yield from obj.terms()
    else:
        for item in obj:
            yield from _terms_of(item)


def variables(*objs) -> tuple[str, ...]:
    """Variable names of terms, rules or nested sequences of them.

    Names are returned once each, in order of first occurrence.
    """
    seen: dict[str, None] = {}
    for t in _terms_of(objs):
        for _, u in subterms(t):
            if isinstance(u, Var):
                seen.setdefault(u.name)
    return tuple(seen)


def symbols(*objs) -> dict[str, int]:
    """Function symbols with their arities, in order of first occurrence."""
    seen: dict[str, int] = {}
    for t in _terms_of(objs):
        for _, u in subterms(t):
            if isinstance(u, App):
                seen.setdefault(u.symbol, len(u.args))
    return seen


def is_ground(t: Term) -> bool:
    return not any(isinstance(u, Var) for _, u in subterms(t))


def occurs(name: str, t: Term) -> bool:
    if isinstance(t, Var):
        return t.name == name
    return any(occurs(name, a) for a in t.args)


# -- substitutions ---------------------------------------------------------

def canonical(sigma: Mapping[str, Term]) -> Subst:
    return {x: t for x, t in sigma.items() if not (isinstance(t, Var) and t.name == x)}


def apply(sigma: Mapping[str, Term], obj):
    """Apply ``sigma`` simultaneously to a term, a rule, or a sequence of them."""
    if isinstance(obj, Var):
        return sigma.get(obj.name, obj)
    if isinstance(obj, App):
        if not obj.args or not sigma:
            return obj
        return App(obj.symbol, [apply(sigma, a) for a in obj.args])
    if hasattr(obj, "substitute"):
        return obj.substitute(sigma)
    return tuple(apply(sigma, item) for item in obj)


def compose(sigma: Mapping[str, Term], tau: Mapping[str, Term]) -> Subst:
    """The substitution that applies ``sigma`` first, then ``tau``."""
    out = {x: apply(tau, t) for x, t in sigma.items()}
    for x, t in tau.items():
        out.setdefault(x, t)
    return canonical(out)


def restrict(sigma: Mapping[str, Term], names: Iterable[str]) -> Subst:
    return {x: sigma[x] for x in names if x in sigma}


def _match_into(pattern: Term, subject: Term, binding: Subst) -> bool:
    # extends `binding` in place; identity bindings are kept so that every
    # variable of the pattern ends up in the domain
    stack = [(pattern, subject)]
    while stack:
        p, s = stack.pop()
        if isinstance(p, Var):
            bound = binding.get(p.name)
            if bound is None:
                binding[p.name] = s
            elif bound != s:
                return False
        elif isinstance(s, App) and s.symbol == p.symbol and len(s.args) == len(p.args):
            stack.extend(zip(p.args, s.args))
        else:
            return False
    return True


def match(pattern: Term, subject: Term, sigma: Mapping[str, Term] | None = None) -> Subst | None:
    """The substitution instantiating ``pattern`` to ``subject``, or ``None``.

    If ``sigma`` is given, the result extends it: variables already bound by
    ``sigma`` must match their binding exactly.
    """
    binding = dict(sigma) if sigma else {}
    if not _match_into(pattern, subject, binding):
        return None
    return canonical(binding)


def mgu(s: Term, t: Term) -> Subst | None:
    """Most general unifier (idempotent, with occurs check), or ``None``."""
    bind: Subst = {}

    def walk(u: Term) -> Term:
        while isinstance(u, Var) and u.name in bind:
            u = bind[u.name]
        return u

    def occurs_walk(name: str, u: Term) -> bool:
        u = walk(u)
        if isinstance(u, Var):
            return u.name == name
        return any(occurs_walk(name, a) for a in u.args)

    stack = [(s, t)]
    while stack:
        a, b = stack.pop()
        a, b = walk(a), walk(b)
        if a == b:
            continue
        if isinstance(a, Var) or isinstance(b, Var):
            # prefer binding variables of the right term, so that the result
            # is phrased in the left term's variables
            if isinstance(b, Var):
                a, b = b, a
            if occurs_walk(a.name, b):
                return None
            bind[a.name] = b
        elif a.symbol == b.symbol and len(a.args) == len(b.args):
            stack.extend(zip(a.args, b.args))
        else:
            return None

    def resolve(u: Term) -> Term:
        u = walk(u)
        if isinstance(u, Var) or not u.args:
            return u
        return App(u.symbol, [resolve(a) for a in u.args])

    return canonical({x: resolve(Var(x)) for x in bind})


# -- renaming --------------------------------------------------------------

class FreshNames:
    """Run-scoped supply of fresh variable names (``x'1``, ``y'2``, ...)."""

    def __init__(self, start: int = 1):
        self._counter = itertools.count(start)
        self._lock = threading.Lock()

    def fresh(self, base: str, avoid: Iterable[str] = ()) -> str:
        stem = base.split("'", 1)[0] or "v"
        avoid = set(avoid)
        while True:
            with self._lock:
                n = next(self._counter)
            name = f"{stem}'{n}"
            if name not in avoid:
                return name


@dataclass(frozen=True)
class Permutation:
    """A bijective renaming of variables; names outside the mapping are fixed."""

    mapping: Mapping[str, str]

    def __post_init__(self):
        targets = list(self.mapping.values())
        if len(set(targets)) != len(targets):
            raise ValueError(f"renaming is not injective: {dict(self.mapping)}")
        # a finite bijection must permute the names it touches
        moved = set(self.mapping) | set(targets)
        extra = moved - set(self.mapping)
        if extra:
            back = {t: s for s, t in self.mapping.items()}
            completed = dict(self.mapping)
            for name in extra:
                src = name
                while src in back:
                    src = back[src]
                completed[name] = src
            object.__setattr__(self, "mapping", completed)

    def __call__(self, obj):
        return apply(self.as_substitution(), obj)

    def as_substitution(self) -> Subst:
        return {x: Var(y) for x, y in self.mapping.items() if x != y}

    def inverse(self) -> Permutation:
        return Permutation({y: x for x, y in self.mapping.items()})


def variant(a, b) -> Permutation | None:
    """A renaming mapping ``a`` onto ``b`` (terms or nested sequences), or ``None``."""
    fwd: dict[str, str] = {}
    back: dict[str, str] = {}
    xs, ys = list(_terms_of(a)), list(_terms_of(b))
    if len(xs) != len(ys):
        return None
    pairs = list(zip(xs, ys))
    while pairs:
        x, y = pairs.pop()
        if isinstance(x, Var):
            if not isinstance(y, Var):
                return None
            if fwd.setdefault(x.name, y.name) != y.name:
                return None
            if back.setdefault(y.name, x.name) != x.name:
                return None
        elif isinstance(y, App) and x.symbol == y.symbol and len(x.args) == len(y.args):
            pairs.extend(zip(x.args, y.args))
        else:
            return None
    return Permutation(fwd)


def rename_apart(avoid: Iterable[str], obj, fresh: FreshNames | None = None):
    """Rename every variable of ``obj`` to a name outside ``avoid``.

    Returns ``(permutation, renamed_object)``.
    """
    fresh = fresh or FreshNames()
    avoid = set(avoid)
    names = variables(obj)
    taken = avoid | set(names)
    mapping = {}
    for x in names:
        y = fresh.fresh(x, taken)
        taken.add(y)
        mapping[x] = y
    perm = Permutation(mapping)
    return perm, perm(obj)
