"""
Conditional rewriting with budgets
==================================

A conditional rule fires only when its conditions can be established by
rewriting.  Every search runs under a budget and says whether it finished.
"""

from pathlib import Path

from condconf import Budget, Rewriter
from condconf.parser import parse_ctrs, parse_term

R = parse_ctrs((Path(__file__).parent.parent / "corpus" / "min.trs").read_text())
for rule in R:
    print(" ", rule)

rw = Rewriter(R)
t = parse_term("min(s(0), s(s(0)))", "")
for step in rw.step(t).steps:
    print("step:", step)
    print("  condition evidence:", [" -> ".join(map(str, p)) for p in step.condition_paths])

reach = rw.reach(t)
print("reducts:", sorted(map(str, reach.terms)), "exhaustive:", reach.exhaustive)
print("normal forms:", [str(n) for n in rw.normal_forms(t)[0]])

# With no condition depth left, conditional rules are blocked and the
# answer is marked incomplete instead of claiming there is no step.
shallow = Rewriter(R, Budget(cond_depth=0)).step(t)
print("depth 0:", shallow.status.value)
