"""Exact Paley/Peisert graph construction and subfield-clique verification."""

from .cayley import (
    CayleyGraph,
    CliqueReport,
    DegenerateModulus,
    EmptyJ,
    ExactBudgetExceeded,
    GraphKind,
    NotAClique,
    SelfLoopQuery,
    make_graph,
    maximum_clique,
)
from .charsum import (
    Character,
    EpsilonResult,
    KatzReport,
    LemmaBoundReport,
    NoValidTheta,
    NotASubfield,
    OddD,
    RestrictedCharacter,
    RootOfUnitySum,
    TrivialCharacter,
    ZeroArgument,
    ZeroEncountered,
    epsilon_star,
    half_circle_points,
    katz_bound_check,
    line_sum,
    restrict_character,
    unit_root,
    verify_lemma_bound,
)
from .ff import (
    DEFAULT_CAP,
    CapExceeded,
    FieldParams,
    FieldTable,
    NotADivisor,
    build_field,
    factorize,
)
from .verify import (
    CaseParams,
    HypothesisRegime,
    NoQualifyingR,
    SweepConfig,
    TheoremReport,
    check_hypotheses,
    conjecture_r,
    enumerate_cases,
    find_counterexamples,
    make_case,
    sweep,
    verify_case,
    verify_conjecture_case,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_CAP",
    "CapExceeded",
    "CaseParams",
    "CayleyGraph",
    "Character",
    "CliqueReport",
    "DegenerateModulus",
    "EmptyJ",
    "EpsilonResult",
    "ExactBudgetExceeded",
    "FieldParams",
    "FieldTable",
    "GraphKind",
    "HypothesisRegime",
    "KatzReport",
    "LemmaBoundReport",
    "NoQualifyingR",
    "NoValidTheta",
    "NotAClique",
    "NotADivisor",
    "NotASubfield",
    "OddD",
    "RestrictedCharacter",
    "RootOfUnitySum",
    "SelfLoopQuery",
    "SweepConfig",
    "TheoremReport",
    "TrivialCharacter",
    "ZeroArgument",
    "ZeroEncountered",
    "build_field",
    "check_hypotheses",
    "conjecture_r",
    "enumerate_cases",
    "epsilon_star",
    "factorize",
    "find_counterexamples",
    "half_circle_points",
    "katz_bound_check",
    "line_sum",
    "make_case",
    "make_graph",
    "maximum_clique",
    "restrict_character",
    "sweep",
    "unit_root",
    "verify_case",
    "verify_conjecture_case",
    "verify_lemma_bound",
]
