"""
Terms, positions and unification
================================

Terms are built by the parser or by hand, and positions address subterms.
"""

from condconf import App, Var, match, mgu, apply, subterm_at, replace_at
from condconf.parser import parse_term

t = parse_term("f(x, g(a))", "x y")
print("term:", t, "size", t.size)
print("at position 2:", subterm_at(t, (2,)))
print("replaced:", replace_at(t, (2, 1), Var("y")))

# Matching instantiates only the pattern
found = match(parse_term("f(x,x)", "x"), parse_term("f(a,a)", ""))
print("match:", {k: str(v) for k, v in found.items()})

# Unification instantiates both sides; the occurs check rejects cycles
s, u = parse_term("f(x,g(y))", "x y z"), parse_term("f(g(z),x)", "x y z")
mu = mgu(s, u)
print("mgu:", {k: str(v) for k, v in mu.items()})
print("both sides become", apply(mu, s), "and", apply(mu, u))
print("x against g(x):", mgu(Var("x"), App("g", [Var("x")])))
