"""Confluence analysis for oriented conditional term rewrite systems."""

from .confluence import (
    CCP,
    CCPResult,
    JoinKind,
    Verdict,
    ccp_joinable,
    conditions_infeasible,
    contextual_reducts,
    critical_pairs,
    decide_confluence,
    strongly_deterministic,
    strongly_irreducible,
)
from .ctrs import (
    CTRS,
    ArityError,
    Check,
    CTRSError,
    LhsVariableError,
    Rule,
    extra_vars,
    is_3ctrs,
    is_deterministic,
    variant_of,
)
from .orders import (
    OrderReport,
    Precedence,
    check_quasi_reductive,
    lpo_greater,
    search_precedence,
    subterm_extended_greater,
)
from .parser import ParseError, UnsupportedSemantics, format_ctrs, parse_ctrs, parse_term
from .rewriting import (
    Budget,
    Outcome,
    Rewriter,
    StepResult,
    StepStatus,
    eval_conditions,
    joinable,
    normal_forms,
    reducts,
    rewrite_step,
)
from .terms import (
    App,
    FreshNames,
    InvalidPosition,
    Permutation,
    Var,
    apply,
    compose,
    fun,
    match,
    mgu,
    proper_subterms,
    rename_apart,
    replace_at,
    subterm_at,
    variables,
)

__version__ = "0.1.0"

__all__ = [
    "ParseError",
    "UnsupportedSemantics",
    "format_ctrs",
    "parse_ctrs",
    "parse_term",
    "CCP",
    "CCPResult",
    "JoinKind",
    "Verdict",
    "ccp_joinable",
    "conditions_infeasible",
    "contextual_reducts",
    "critical_pairs",
    "decide_confluence",
    "strongly_deterministic",
    "strongly_irreducible",
    "CTRS",
    "ArityError",
    "Check",
    "CTRSError",
    "LhsVariableError",
    "Rule",
    "extra_vars",
    "is_3ctrs",
    "is_deterministic",
    "variant_of",
    "OrderReport",
    "Precedence",
    "check_quasi_reductive",
    "lpo_greater",
    "search_precedence",
    "subterm_extended_greater",
    "Budget",
    "Outcome",
    "Rewriter",
    "StepResult",
    "StepStatus",
    "eval_conditions",
    "joinable",
    "normal_forms",
    "reducts",
    "rewrite_step",
    "App",
    "FreshNames",
    "InvalidPosition",
    "Permutation",
    "Var",
    "apply",
    "compose",
    "fun",
    "match",
    "mgu",
    "proper_subterms",
    "rename_apart",
    "replace_at",
    "subterm_at",
    "variables",
]
