"""
Confluence verdicts on the corpus
=================================

Each system goes through classification, the order search, critical pair
computation and joinability.  NO comes with a concrete non-joinable pair.
"""

from pathlib import Path

from condconf import critical_pairs, decide_confluence
from condconf.parser import parse_ctrs

corpus = Path(__file__).parent.parent / "corpus"

for name in ["even", "min", "fork", "nested", "loopy", "nonsdt"]:
    R = parse_ctrs((corpus / f"{name}.trs").read_text())
    v = decide_confluence(R)
    print(f"{name:7} {v.answer:5} {v.reason}")
    for pair, res in zip(v.ccps, v.results):
        outcome = "skipped" if res is None else f"{res.outcome.value}, {res.kind.value}"
        print(f"        {pair}   [{pair.provenance}; {outcome}]")
    for d in v.sdtrs.diagnostics:
        print("       ", d)

# Both orientations of a root overlap are available on request
fork = parse_ctrs((corpus / "fork.trs").read_text())
print("FORK pairs with mirrors:", [str(p) for p in critical_pairs(fork, keep_mirrors=True)])
