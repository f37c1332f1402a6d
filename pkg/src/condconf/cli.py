"""Command-line front end.

    condconf FILE [--mode full|ccps-only|classify-only] [--format text|structured]

In full mode the first output line is ``YES``, ``NO`` or ``MAYBE``.  Exit
status is 0 for every completed analysis, 1 for unreadable or malformed
input and 2 for internal errors.
"""

from __future__ import annotations

import argparse
import re
import sys
from dataclasses import dataclass

from .confluence import CCP, CCPResult, critical_pairs, decide_confluence, strongly_deterministic
from .ctrs import CTRS, CTRSError, is_3ctrs, is_deterministic
from .orders import Precedence
from .parser import parse_ctrs
from .rewriting import Budget
from .terms import format_position

MODES = ("full", "ccps-only", "classify-only")
FORMATS = ("text", "structured")


@dataclass(frozen=True)
class RunConfig:
    path: str = "-"
    cond_depth: int = Budget.cond_depth
    fuel: int = Budget.fuel
    max_term_size: int = Budget.max_term_size
    precedence: str | None = None
    mode: str = "full"
    format: str = "text"

    def __post_init__(self):
        if min(self.cond_depth, self.fuel, self.max_term_size) < 1:
            raise ValueError("budget overrides must be positive")
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.format not in FORMATS:
            raise ValueError(f"unknown format {self.format!r}")

    @property
    def budget(self) -> Budget:
        return Budget(self.cond_depth, self.fuel, self.max_term_size)


Fact = tuple[str, str]


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _conds(ccp: CCP) -> str:
    return ", ".join(f"{s} == {t}" for s, t in ccp.conditions) or "none"


def ccp_facts(n: int, ccp: CCP, result: CCPResult | None = None, with_result: bool = True) -> list[Fact]:
    facts = [
        (f"ccp.{n}.u", str(ccp.u)),
        (f"ccp.{n}.v", str(ccp.v)),
        (f"ccp.{n}.conditions", _conds(ccp)),
        (f"ccp.{n}.rules", f"{ccp.outer}/{ccp.inner}"),
        (f"ccp.{n}.position", format_position(ccp.position)),
    ]
    if not with_result:
        return facts
    if result is None:
        facts.append((f"ccp.{n}.result", "skipped"))
        return facts
    facts.append((f"ccp.{n}.result", f"{result.outcome.value} ({result.kind.value})"))
    if result.common is not None:
        facts.append((f"ccp.{n}.witness", str(result.common)))
        facts.append((f"ccp.{n}.left", " -> ".join(map(str, result.left))))
        facts.append((f"ccp.{n}.right", " -> ".join(map(str, result.right))))
    if result.reason:
        facts.append((f"ccp.{n}.reason", result.reason))
    return facts


def classification_facts(R: CTRS) -> list[Fact]:
    sdt = strongly_deterministic(R)
    facts = [
        ("rules", str(len(R))),
        ("3ctrs", _yes(is_3ctrs(R).ok)),
        ("deterministic", _yes(is_deterministic(R).ok)),
        ("sdtrs", _yes(sdt.ok)),
    ]
    facts += [(f"sdtrs.diagnostic.{i}", d) for i, d in enumerate(sdt.diagnostics, 1)]
    return facts


def analysis_facts(R: CTRS, config: RunConfig) -> list[Fact]:
    if config.mode == "classify-only":
        return classification_facts(R)
    if config.mode == "ccps-only":
        ccps = critical_pairs(R)
        facts = [("ccp.count", str(len(ccps)))]
        for n, ccp in enumerate(ccps, 1):
            facts += ccp_facts(n, ccp, with_result=False)
        return facts

    hint = Precedence.parse(config.precedence) if config.precedence else None
    verdict = decide_confluence(R, hint, config.budget)
    facts = [("verdict", verdict.answer), ("reason", verdict.reason)]
    facts += [(f"sdtrs.diagnostic.{i}", d) for i, d in enumerate(verdict.sdtrs.diagnostics, 1)]
    facts.insert(2, ("sdtrs", _yes(verdict.sdtrs.ok)))
    order = verdict.order
    facts.append(("precedence", str(order.precedence) if order else "none"))
    facts.append(("quasi_reductive", _yes(verdict.quasi_reductive)))
    if order is not None:
        for i, ob in enumerate(order.obligations, 1):
            facts.append((f"obligation.{i}", f"{ob}: {'holds' if ob.holds else 'fails'}"))
    facts.append(("ccp.count", str(len(verdict.ccps))))
    for n, (ccp, res) in enumerate(zip(verdict.ccps, verdict.results), 1):
        facts += ccp_facts(n, ccp, res)
    return facts


def render_structured(facts: list[Fact]) -> str:
    return "".join(f"{k}: {v}\n" for k, v in facts)


_LABELS = {
    "reason": "reason",
    "rules": "rules",
    "3ctrs": "3-CTRS",
    "deterministic": "deterministic",
    "sdtrs": "strongly deterministic",
    "precedence": "precedence",
    "quasi_reductive": "quasi-reductive",
    "ccp.count": "critical pairs",
}


def render_text(facts: list[Fact]) -> str:
    lines = []
    for key, value in facts:
        if key == "verdict":
            lines.append(value)
        elif key in _LABELS:
            lines.append(f"{_LABELS[key]}: {value}")
        elif m := re.fullmatch(r"(sdtrs\.diagnostic|obligation)\.\d+", key):
            lines.append(f"  {value}")
        elif m := re.fullmatch(r"ccp\.(\d+)\.(\w+)", key):
            n, field = m.groups()
            if field == "u":
                lines.append(f"  ccp {n}: {value}")
            elif field == "v":
                lines[-1] += f" = {value}"
            else:
                lines.append(f"    {field}: {value}")
        else:
            lines.append(f"{key}: {value}")
    return "\n".join(lines) + "\n"


def run(config: RunConfig, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        if config.path == "-":
            text = sys.stdin.read()
        else:
            with open(config.path, encoding="utf-8") as fh:
                text = fh.read()
        R = parse_ctrs(text)
        if config.precedence:
            Precedence.parse(config.precedence)
    except (OSError, CTRSError, ValueError) as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    try:
        facts = analysis_facts(R, config)
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {exc!r}", file=stderr)
        return 2
    out = render_structured(facts) if config.format == "structured" else render_text(facts)
    stdout.write(out)
    return 0


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="condconf",
        description="Confluence analysis of oriented conditional term rewrite systems.",
    )
    p.add_argument("path", nargs="?", default="-", help="CTRS file in COPS format ('-' for stdin)")
    p.add_argument("--cond-depth", type=_positive, default=Budget.cond_depth)
    p.add_argument("--fuel", type=_positive, default=Budget.fuel)
    p.add_argument("--max-term-size", type=_positive, default=Budget.max_term_size)
    p.add_argument("--precedence", help="LPO precedence hint, e.g. 'min>le>true,min>false'")
    p.add_argument("--mode", choices=MODES, default="full")
    p.add_argument("--format", choices=FORMATS, default="text")
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    config = RunConfig(
        args.path, args.cond_depth, args.fuel, args.max_term_size,
        args.precedence, args.mode, args.format,
    )
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
