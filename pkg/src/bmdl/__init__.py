"""Decision procedure, proof kernel and countermodel builder for a dyadic
deontic logic over S4."""

from .calculus import RuleApplication, RuleId
from .consistency import (
    ConsistencyResult,
    assumption_sequents,
    check_consistency,
    derives,
    discharge,
    outer_consistent,
    reduction_sequent,
)
from .countermodel import (
    CounterModelResult,
    CountermodelError,
    build,
    result_to_json,
    truth_lemma_audit,
)
from .formula import (
    And,
    Atom,
    BOT,
    Bottom,
    Box,
    Formula,
    Imp,
    Neg,
    Obl,
    Or,
    Sequent,
    SetSequent,
    TOP,
    sequent,
)
from .kernel import (
    Derivation,
    DerivationError,
    check_derivation,
    derivation_from_json,
    derivation_to_json,
)
from .parser import (
    ParseError,
    parse_formula,
    parse_problem,
    parse_sequent,
    print_formula,
    print_sequent,
)
from .search import (
    Budget,
    BudgetExceeded,
    DEFAULT_BUDGET,
    SearchResult,
    decide,
    prove,
)
from .semantics import (
    FrameViolation,
    Generator,
    MModel,
    holds,
    model_from_json,
    model_to_json,
    truth_set,
    validate_frame,
)

__version__ = "0.1.0"

__all__ = [
    "And",
    "Atom",
    "BOT",
    "Bottom",
    "Box",
    "Budget",
    "BudgetExceeded",
    "ConsistencyResult",
    "CounterModelResult",
    "CountermodelError",
    "DEFAULT_BUDGET",
    "Derivation",
    "DerivationError",
    "Formula",
    "FrameViolation",
    "Generator",
    "Imp",
    "MModel",
    "Neg",
    "Obl",
    "Or",
    "ParseError",
    "RuleApplication",
    "RuleId",
    "SearchResult",
    "Sequent",
    "SetSequent",
    "TOP",
    "assumption_sequents",
    "build",
    "check_consistency",
    "check_derivation",
    "decide",
    "derivation_from_json",
    "derivation_to_json",
    "derives",
    "discharge",
    "holds",
    "model_from_json",
    "model_to_json",
    "outer_consistent",
    "parse_formula",
    "parse_problem",
    "parse_sequent",
    "print_formula",
    "print_sequent",
    "prove",
    "reduction_sequent",
    "result_to_json",
    "sequent",
    "truth_lemma_audit",
    "truth_set",
    "validate_frame",
]
