"""Bounded-model reasoning services.

Under bounded-model semantics an interpretation's domain is exactly the set
of declared individual names, each denoting itself.  A knowledge base
without individuals therefore has no bounded models at all: satisfiability
fails, entailment holds vacuously, and enumeration is empty.  All services
short-circuit on that case; otherwise they run the compilation pipeline
(normalize, translate, solve) and map answer sets back to models.

Extraction and enumeration return models of the original knowledge base:
answer-set projections drop the fresh names the normalizer introduced, and
duplicate projections are collapsed.  Entailment enumerates the models and
checks the candidate axiom on each with the direct model checker, returning
the first countermodel found.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterator, Optional, Sequence

from .asp import Program, SolveStats, solve
from .kb import (
    Bot,
    BoundedInterpretation,
    ConceptAssertion,
    DifferentIndividuals,
    GCI,
    KnowledgeBase,
    Name,
    Nominal,
    Not,
    Or,
    Top,
    Vocabulary,
    interpretation_from_facts,
)
from .normalize import NormalizedKB, normalize
from .semantics import satisfies_axiom
from .translate import project_answer_set, translate


@dataclass(frozen=True)
class CompiledKB:
    """A knowledge base together with its answer-set compilation."""

    kb: KnowledgeBase
    normalized: NormalizedKB
    program: Program


@dataclass(frozen=True)
class EntailmentResult:
    entailed: bool
    countermodel: Optional[BoundedInterpretation] = None


def compile_kb(kb: KnowledgeBase) -> CompiledKB:
    """Normalize and translate, keeping the intermediate stages."""
    normalized = normalize(kb)
    return CompiledKB(kb, normalized, translate(normalized))


def enumerate_models(
    kb: KnowledgeBase,
    limit: Optional[int] = None,
    stats: Optional[SolveStats] = None,
) -> Iterator[BoundedInterpretation]:
    """All bounded models of kb, deduplicated, in a deterministic order.

    Distinct answer sets can project to the same model when the normalizer
    introduced fresh names; only the first occurrence is yielded.
    """
    if limit is not None and limit <= 0:
        return
    if not kb.vocabulary.individuals:
        return
    compiled = compile_kb(kb)
    seen = set()
    for answer in solve(compiled.program, stats=stats):
        rep = project_answer_set(answer, kb.vocabulary)
        if rep.facts in seen:
            continue
        seen.add(rep.facts)
        yield interpretation_from_facts(rep)
        if limit is not None and len(seen) >= limit:
            return


def check_sat_bm(kb: KnowledgeBase, stats: Optional[SolveStats] = None) -> bool:
    """Whether kb has a bounded model."""
    if not kb.vocabulary.individuals:
        return False
    compiled = compile_kb(kb)
    for _ in solve(compiled.program, limit=1, stats=stats):
        return True
    return False


def extract_model(
    kb: KnowledgeBase, stats: Optional[SolveStats] = None
) -> Optional[BoundedInterpretation]:
    """Some bounded model of kb, or None if there is none."""
    for interp in enumerate_models(kb, limit=1, stats=stats):
        return interp
    return None


def entails_bm(
    kb: KnowledgeBase, axiom, stats: Optional[SolveStats] = None
) -> EntailmentResult:
    """Whether every bounded model of kb satisfies the axiom.

    A knowledge base without bounded models entails everything.  On failure
    the first violating model is returned as the countermodel.
    """
    for interp in enumerate_models(kb, stats=stats):
        if not satisfies_axiom(interp, axiom):
            return EntailmentResult(False, interp)
    return EntailmentResult(True, None)


def axiomatize_bm(kb: KnowledgeBase) -> KnowledgeBase:
    """Axioms forcing the bounded-model shape under classical semantics.

    The domain is pinned to the declared individuals by covering it with
    their nominals and separating the names pairwise.  Without individuals
    there is no bounded model, which classically means an inconsistency.
    """
    inds = kb.vocabulary.individuals
    if not inds:
        return KnowledgeBase(
            kb.vocabulary, kb.abox, kb.tbox + (GCI(Top(), Bot()),), kb.rbox
        )
    cover = GCI(Top(), Nominal(inds))
    apart = tuple(
        DifferentIndividuals(inds[i], inds[j])
        for i in range(len(inds))
        for j in range(i + 1, len(inds))
    )
    return KnowledgeBase(
        kb.vocabulary, kb.abox + apart, kb.tbox + (cover,), kb.rbox
    )


def reduce_3sat(
    clauses: Sequence[Sequence[int]], num_vars: Optional[int] = None
) -> KnowledgeBase:
    """A knowledge base whose bounded models are the satisfying assignments.

    Clauses hold nonzero integers in the usual convention: k stands for the
    variable x<k> and -k for its negation.  One individual carries the
    assignment; variable k maps to concept x<k>, true at the individual iff
    the variable is true.  The knowledge base is satisfiable iff the formula
    is, and its bounded models correspond one-to-one with the satisfying
    assignments over num_vars variables.
    """
    peak = 0
    for clause in clauses:
        for lit in clause:
            if lit == 0:
                raise ValueError("clause literals must be nonzero")
            peak = max(peak, abs(lit))
    if num_vars is None:
        num_vars = peak
    if peak > num_vars:
        raise ValueError(f"literal mentions variable {peak} beyond {num_vars}")
    vocabulary = Vocabulary(
        individuals=("w",),
        concepts=tuple(f"x{k}" for k in range(1, num_vars + 1)),
        roles=(),
    )
    tbox = []
    for clause in clauses:
        if not clause:
            tbox.append(GCI(Top(), Bot()))
            continue
        parts = [
            Name(f"x{lit}") if lit > 0 else Not(Name(f"x{-lit}")) for lit in clause
        ]
        tbox.append(GCI(Top(), reduce(Or, parts)))
    return KnowledgeBase(
        vocabulary, (ConceptAssertion(Top(), "w"),), tuple(tbox), ()
    )
