import pytest
from hypothesis import given
from hypothesis import strategies as st

from condconf.orders import (
    Precedence,
    check_quasi_reductive,
    lpo_greater,
    search_precedence,
    subterm_extended_greater,
)
from condconf.parser import parse_ctrs, parse_term
from condconf.terms import App, apply, proper_subterms

from termgen import SIGNATURE, terms


def T(text):
    return parse_term(text, "x y z")


def system(text):
    return parse_ctrs(f"(VAR x y z)(RULES {text})")


@st.composite
def precedences(draw):
    syms = draw(st.permutations(sorted(SIGNATURE)))
    greater = [(a, b) for i, a in enumerate(syms) for b in syms[i + 1:] if draw(st.booleans())]
    prec = Precedence(greater)
    eq = draw(st.sampled_from([None, ("a", "b"), ("f", "g")]))
    if eq is not None:
        # equivalence of f/2 and g/1 is allowed but never used for lexicographic steps
        prec = prec.with_equivalent(*eq) or prec
    return prec


contexts = st.sampled_from(
    [
        lambda h: h,
        lambda h: App("g", [h]),
        lambda h: App("f", [h, App("a")]),
        lambda h: App("f", [T("x"), App("g", [h])]),
        lambda h: App("g", [App("f", [T("b"), h])]),
    ]
)


class TestPrecedence:
    def test_parse_chains(self):
        p = Precedence.parse("min>le>true,min>false")
        assert p.gt("min", "true") and p.gt("le", "true") and p.gt("min", "false")
        assert not p.gt("le", "false")

    def test_equivalence(self):
        p = Precedence.parse("even=odd>true")
        assert p.eq("even", "odd") and p.gt("odd", "true") and p.gt("even", "true")

    def test_cycle_rejected(self):
        with pytest.raises(ValueError):
            Precedence.parse("a>b>a")

    def test_extensions(self):
        p = Precedence.parse("a>b")
        assert p.with_greater("b", "a") is None
        assert p.with_equivalent("a", "b") is None
        assert p.with_greater("b", "c").gt("a", "c")


class TestLPO:
    def test_plus(self):
        # case (b) plus > s, then case (c): (x, s(y)) >lex (x, y)
        assert lpo_greater(Precedence.parse("plus>s"), T("plus(x,s(y))"), T("s(plus(x,y))"))

    def test_variable_never_greater(self):
        assert not lpo_greater(Precedence(), T("x"), T("f(x)"))

    def test_variable_subterm(self):
        assert lpo_greater(Precedence(), T("f(x)"), T("x"))
        assert not lpo_greater(Precedence(), T("f(x)"), T("y"))

    def test_equivalent_symbols_compare_lexicographically(self):
        p = Precedence.parse("even=odd")
        assert lpo_greater(p, T("even(s(x))"), T("odd(x)"))
        assert lpo_greater(p, T("odd(s(x))"), T("even(x)"))
        assert not lpo_greater(p, T("even(x)"), T("odd(x)"))

    @given(precedences(), terms())
    def test_irreflexive(self, prec, s):
        assert not lpo_greater(prec, s, s)

    @given(precedences(), terms(max_leaves=6), terms(max_leaves=6), terms(max_leaves=6))
    def test_transitive(self, prec, s, t, u):
        if lpo_greater(prec, s, t) and lpo_greater(prec, t, u):
            assert lpo_greater(prec, s, u)

    @given(precedences(), terms(), terms(max_leaves=4), terms(max_leaves=4))
    def test_closed_under_substitution(self, prec, s, a, b):
        sub = [u for _, u in proper_subterms(s)] or [s]
        for t in sub:
            if lpo_greater(prec, s, t):
                sigma = {"x": a, "y": b}
                assert lpo_greater(prec, apply(sigma, s), apply(sigma, t))

    @given(precedences(), terms(max_leaves=8), terms(max_leaves=8), contexts)
    def test_closed_under_contexts(self, prec, s, t, ctx):
        # proper subterms guarantee some related pairs without heavy filtering
        for u in [t, *(v for _, v in proper_subterms(s))]:
            if lpo_greater(prec, s, u):
                assert lpo_greater(prec, ctx(s), ctx(u))

    @given(precedences(), terms())
    def test_contains_proper_subterm(self, prec, s):
        for _, u in proper_subterms(s):
            assert lpo_greater(prec, s, u)
            assert subterm_extended_greater(prec, s, u)


class TestSubtermExtended:
    def test_examples(self):
        assert subterm_extended_greater(Precedence(), T("f(g(a))"), T("a"))
        assert subterm_extended_greater(Precedence.parse("f>h"), T("f(x)"), T("h(x)"))
        assert not subterm_extended_greater(Precedence(), T("a"), T("a"))


class TestQuasiReductive:
    def test_fork(self):
        report = check_quasi_reductive(system("a -> b  a -> c"), Precedence.parse("a>b,a>c"))
        assert report.quasi_reductive and len(report.obligations) == 2

    def test_min(self, corpus):
        prec = Precedence.parse("min>le,min>true,min>false,le>true,le>false")
        report = check_quasi_reductive(corpus("min"), prec)
        assert report.quasi_reductive
        kinds = [o.kind for o in report.obligations]
        assert kinds.count("condition") == 2 and kinds.count("rule") == 5

    def test_loop(self):
        report = check_quasi_reductive(system("f(x) -> f(x)"), Precedence.parse("f>a"))
        assert not report.quasi_reductive
        assert report.failed()[0].kind == "rule"

    def test_condition_obligation_can_fail(self):
        report = check_quasi_reductive(system("f(x) -> x | f(x) == a"), Precedence())
        assert [o.holds for o in report.obligations] == [False, True]


class TestSearch:
    def test_forced(self):
        p = search_precedence(system("a -> b"))
        assert p is not None and p.gt("a", "b")

    def test_impossible(self):
        assert search_precedence(system("f(x) -> f(x)")) is None

    def test_min(self, corpus):
        p = search_precedence(corpus("min"))
        assert p.gt("min", "le") and p.gt("le", "true") and p.gt("le", "false")

    def test_even(self, corpus):
        R = corpus("even")
        p = search_precedence(R)
        assert p is not None and check_quasi_reductive(R, p).quasi_reductive

    def test_hint_returned_when_it_works(self, corpus):
        hint = Precedence.parse("even=odd,even>true,even>false")
        assert search_precedence(corpus("even"), hint) == hint

    def test_failing_hint_is_extended(self):
        p = search_precedence(system("a -> b  b -> c"), Precedence.parse("a>b"))
        assert p.gt("a", "b") and p.gt("b", "c")

    def test_limit(self, corpus):
        assert search_precedence(corpus("min"), limit=1) is None

    def test_deterministic(self, corpus):
        assert str(search_precedence(corpus("even"))) == str(search_precedence(corpus("even")))
