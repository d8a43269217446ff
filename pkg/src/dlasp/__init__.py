"""Bounded-model reasoning for SROIQ knowledge bases via answer-set programs.

The pipeline: parse or build a knowledge base (kb, kbparser), rewrite it
into the flat normal form (normalize), compile it into a ground guess-and-
check answer-set program (translate, asp), and read the answer sets back as
bounded models (reasoner).  The semantics module provides the direct,
definition-level model checker and brute-force enumerator the rest of the
package is validated against.
"""

from .asp import (
    Atom,
    Constant,
    CountExpression,
    Program,
    Rule,
    SolveStats,
    UnsupportedProgramError,
    Variable,
    emit_text,
    gl_reduct,
    ground,
    is_answer_set,
    solve,
)
from .kb import (
    ABoxRepresentation,
    AtLeast,
    AtMost,
    Bot,
    BoundedInterpretation,
    ConceptAssertion,
    ConceptFact,
    DifferentIndividuals,
    DisjointRoles,
    Exists,
    Forall,
    GCI,
    HasSelf,
    Inverse,
    KnowledgeBase,
    Name,
    Nominal,
    Not,
    And,
    Or,
    RIA,
    Role,
    RoleAssertion,
    RoleFact,
    SameIndividual,
    SortClashError,
    Top,
    Universal,
    Vocabulary,
    at_least,
    facts_from_interpretation,
    interpretation_from_facts,
    kb_from_axioms,
    sorted_facts,
    vocabulary_of,
    vocabulary_of_axioms,
)
from .kbparser import (
    ParseError,
    parse_axiom,
    parse_kb,
    print_axiom,
    print_concept,
    print_kb,
    print_role,
)
from .normalize import (
    NormalizedKB,
    is_normalized,
    nnf,
    nnf_complement,
    normalize,
    positive_polarity,
    project_model,
)
from .reasoner import (
    CompiledKB,
    EntailmentResult,
    axiomatize_bm,
    check_sat_bm,
    compile_kb,
    entails_bm,
    enumerate_models,
    extract_model,
    reduce_3sat,
)
from .semantics import (
    BruteForceCapError,
    candidate_exponent,
    entails_bm_bruteforce,
    enumerate_bounded_models_bruteforce,
    extend_concept,
    extend_role,
    is_bounded_model,
    satisfies_axiom,
)
from .translate import (
    UnsupportedConstructError,
    project_answer_set,
    translate,
)

__version__ = "0.1.0"

__all__ = [
    "ABoxRepresentation",
    "And",
    "AtLeast",
    "AtMost",
    "Atom",
    "Bot",
    "BoundedInterpretation",
    "BruteForceCapError",
    "CompiledKB",
    "ConceptAssertion",
    "ConceptFact",
    "Constant",
    "CountExpression",
    "DifferentIndividuals",
    "DisjointRoles",
    "EntailmentResult",
    "Exists",
    "Forall",
    "GCI",
    "HasSelf",
    "Inverse",
    "KnowledgeBase",
    "Name",
    "Nominal",
    "NormalizedKB",
    "Not",
    "Or",
    "ParseError",
    "Program",
    "RIA",
    "Role",
    "RoleAssertion",
    "RoleFact",
    "Rule",
    "SameIndividual",
    "SolveStats",
    "SortClashError",
    "Top",
    "Universal",
    "UnsupportedConstructError",
    "UnsupportedProgramError",
    "Variable",
    "Vocabulary",
    "at_least",
    "axiomatize_bm",
    "candidate_exponent",
    "check_sat_bm",
    "compile_kb",
    "emit_text",
    "entails_bm",
    "entails_bm_bruteforce",
    "enumerate_bounded_models_bruteforce",
    "enumerate_models",
    "extend_concept",
    "extend_role",
    "extract_model",
    "facts_from_interpretation",
    "gl_reduct",
    "ground",
    "interpretation_from_facts",
    "is_answer_set",
    "is_bounded_model",
    "is_normalized",
    "kb_from_axioms",
    "nnf",
    "nnf_complement",
    "normalize",
    "parse_axiom",
    "parse_kb",
    "positive_polarity",
    "print_axiom",
    "print_concept",
    "print_kb",
    "print_role",
    "project_answer_set",
    "project_model",
    "reduce_3sat",
    "satisfies_axiom",
    "solve",
    "sorted_facts",
    "translate",
    "vocabulary_of",
    "vocabulary_of_axioms",
]
