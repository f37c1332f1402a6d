"""
Path orders and quasi-reductivity
=================================

The lexicographic path order over a precedence proves termination of the
unconditional part; for conditional rules the left side must also dominate
each condition's left side.
"""

from pathlib import Path

from condconf import Precedence, check_quasi_reductive, lpo_greater, search_precedence
from condconf.parser import parse_ctrs, parse_term

corpus = Path(__file__).parent.parent / "corpus"

prec = Precedence.parse("plus>s")
lhs, rhs = parse_term("plus(x,s(y))", "x y"), parse_term("s(plus(x,y))", "x y")
print(f"{lhs} > {rhs} under {prec}:", lpo_greater(prec, lhs, rhs))

R = parse_ctrs((corpus / "min.trs").read_text())
report = check_quasi_reductive(R, Precedence.parse("min>le,le>true,le>false,min>true,min>false"))
for ob in report.obligations:
    print(" ", ob, "holds" if ob.holds else "fails")
print("quasi-reductive:", report.quasi_reductive)

# Mutual recursion needs equivalent symbols or a helper precedence
EVEN = parse_ctrs((corpus / "even.trs").read_text())
print("found for EVEN:", search_precedence(EVEN))
print("with even=odd:", check_quasi_reductive(EVEN, Precedence.parse("even=odd,even>true,even>false")).quasi_reductive)
print("for f(x) -> f(x):", search_precedence(parse_ctrs((corpus / "loopy.trs").read_text())))
