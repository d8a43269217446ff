"""Brute-force semantic ground truth.

Everything here evaluates expressions directly against a bounded
interpretation by set arithmetic, independently of the compilation pipeline,
so it can serve as the oracle that validates the pipeline end to end.
"""

from __future__ import annotations

import os
from itertools import product
from typing import Iterator, Optional

from .kb import (
    ABoxRepresentation,
    AtLeast,
    AtMost,
    And,
    Axiom,
    Bot,
    BoundedInterpretation,
    ConceptAssertion,
    ConceptExpr,
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
    Or,
    RIA,
    Role,
    RoleAssertion,
    RoleExpr,
    RoleFact,
    SameIndividual,
    Top,
    Universal,
    Vocabulary,
    interpretation_from_facts,
    vocabulary_of_axioms,
)

DEFAULT_CAP = 24
CAP_ENV_VAR = "DLASP_BRUTEFORCE_CAP"


class BruteForceCapError(ValueError):
    """The candidate space exponent exceeds the configured cap."""


class Evaluator:
    """Memoizing extension calculator for one bounded interpretation.

    Extensions of structurally equal subexpressions are computed once, which
    keeps repeated axiom checks over the same interpretation cheap.
    """

    def __init__(self, interp: BoundedInterpretation):
        self.interp = interp
        self._domain = frozenset(interp.vocabulary.individuals)
        self._concepts: dict[ConceptExpr, frozenset[str]] = {}
        self._roles: dict[RoleExpr, frozenset[tuple[str, str]]] = {}

    def role_extension(self, r: RoleExpr) -> frozenset[tuple[str, str]]:
        hit = self._roles.get(r)
        if hit is not None:
            return hit
        if isinstance(r, Role):
            ext = self.interp.role_ext[r.name]
        elif isinstance(r, Inverse):
            ext = frozenset((b, a) for a, b in self.interp.role_ext[r.name])
        elif isinstance(r, Universal):
            ext = frozenset(product(self._domain, self._domain))
        else:
            raise TypeError(f"not a role expression: {r!r}")
        self._roles[r] = ext
        return ext

    def concept_extension(self, c: ConceptExpr) -> frozenset[str]:
        hit = self._concepts.get(c)
        if hit is not None:
            return hit
        ext = self._concept_extension(c)
        self._concepts[c] = ext
        return ext

    def _concept_extension(self, c: ConceptExpr) -> frozenset[str]:
        if isinstance(c, Top):
            return self._domain
        if isinstance(c, Bot):
            return frozenset()
        if isinstance(c, Name):
            return self.interp.concept_ext[c.name]
        if isinstance(c, Not):
            return self._domain - self.concept_extension(c.arg)
        if isinstance(c, And):
            return self.concept_extension(c.left) & self.concept_extension(c.right)
        if isinstance(c, Or):
            return self.concept_extension(c.left) | self.concept_extension(c.right)
        if isinstance(c, Nominal):
            return frozenset(c.members)
        if isinstance(c, HasSelf):
            rel = self.role_extension(c.role)
            return frozenset(x for x in self._domain if (x, x) in rel)
        if isinstance(c, (Forall, Exists, AtLeast, AtMost)):
            rel = self.role_extension(c.role)
            filler = self.concept_extension(c.filler)
            succ: dict[str, int] = {x: 0 for x in self._domain}
            out: dict[str, int] = {x: 0 for x in self._domain}
            for a, b in rel:
                out[a] += 1
                if b in filler:
                    succ[a] += 1
            if isinstance(c, Forall):
                return frozenset(x for x in self._domain if succ[x] == out[x])
            if isinstance(c, Exists):
                return frozenset(x for x in self._domain if succ[x] >= 1)
            if isinstance(c, AtLeast):
                return frozenset(x for x in self._domain if succ[x] >= c.n)
            return frozenset(x for x in self._domain if succ[x] <= c.n)
        raise TypeError(f"not a concept expression: {c!r}")

    def chain_extension(self, chain: tuple[RoleExpr, ...]) -> frozenset[tuple[str, str]]:
        ext = self.role_extension(chain[0])
        for r in chain[1:]:
            step = self.role_extension(r)
            by_first: dict[str, set[str]] = {}
            for y, z in step:
                by_first.setdefault(y, set()).add(z)
            ext = frozenset(
                (x, z) for x, y in ext for z in by_first.get(y, ())
            )
        return ext

    def satisfies(self, ax: Axiom) -> bool:
        if isinstance(ax, GCI):
            return self.concept_extension(ax.lhs) <= self.concept_extension(ax.rhs)
        if isinstance(ax, RIA):
            return self.chain_extension(ax.chain) <= self.role_extension(ax.sup)
        if isinstance(ax, DisjointRoles):
            return not (self.role_extension(ax.first) & self.role_extension(ax.second))
        if isinstance(ax, ConceptAssertion):
            return ax.individual in self.concept_extension(ax.concept)
        if isinstance(ax, RoleAssertion):
            return (ax.subject, ax.object) in self.role_extension(ax.role)
        if isinstance(ax, SameIndividual):
            # names denote themselves, so equality is name identity
            return ax.first == ax.second
        if isinstance(ax, DifferentIndividuals):
            return ax.first != ax.second
        raise TypeError(f"not an axiom: {ax!r}")


def _check_axiom_vocabulary(interp: BoundedInterpretation, ax: Axiom) -> None:
    used = vocabulary_of_axioms((ax,))
    v = interp.vocabulary
    for name in used.individuals:
        if name not in v.individuals:
            raise ValueError(f"axiom mentions unknown individual {name!r}")
    for name in used.concepts:
        if name not in v.concepts:
            raise ValueError(f"axiom mentions unknown concept {name!r}")
    for name in used.roles:
        if name not in v.roles:
            raise ValueError(f"axiom mentions unknown role {name!r}")


def extend_role(interp: BoundedInterpretation, r: RoleExpr) -> frozenset[tuple[str, str]]:
    return Evaluator(interp).role_extension(r)


def extend_concept(interp: BoundedInterpretation, c: ConceptExpr) -> frozenset[str]:
    return Evaluator(interp).concept_extension(c)


def satisfies_axiom(
    interp: BoundedInterpretation, ax: Axiom, evaluator: Optional[Evaluator] = None
) -> bool:
    _check_axiom_vocabulary(interp, ax)
    ev = evaluator if evaluator is not None else Evaluator(interp)
    return ev.satisfies(ax)


def is_bounded_model(interp: BoundedInterpretation, kb: KnowledgeBase) -> bool:
    """Truth of every kb axiom in interp; requires matching vocabularies."""
    if interp.vocabulary != kb.vocabulary:
        raise ValueError("interpretation and knowledge base vocabularies differ")
    ev = Evaluator(interp)
    return all(ev.satisfies(ax) for ax in kb.axioms())


def candidate_exponent(vocab: Vocabulary) -> int:
    ni = len(vocab.individuals)
    return len(vocab.concepts) * ni + len(vocab.roles) * ni * ni


def _effective_cap(cap: Optional[int]) -> int:
    if cap is not None:
        return cap
    env = os.environ.get(CAP_ENV_VAR)
    if env is not None:
        return int(env)
    return DEFAULT_CAP


def enumerate_bounded_models_bruteforce(
    kb: KnowledgeBase, cap: Optional[int] = None
) -> Iterator[ABoxRepresentation]:
    """All bounded models of kb as fact sets, by filtering every candidate.

    Candidates are the 2**(|N_C|*|N_I| + |N_R|*|N_I|^2) fact subsets, visited
    in the deterministic order induced by vocabulary order.  A knowledge base
    without individuals has no bounded models (domains are nonempty).
    """
    exponent = candidate_exponent(kb.vocabulary)
    limit = _effective_cap(cap)
    if exponent > limit:
        raise BruteForceCapError(
            f"candidate exponent {exponent} exceeds cap {limit}"
        )
    v = kb.vocabulary
    if not v.individuals:
        return
    atoms: list = [
        ConceptFact(c, a) for c in v.concepts for a in v.individuals
    ]
    atoms += [
        RoleFact(r, a, b) for r in v.roles for a in v.individuals for b in v.individuals
    ]
    axioms = kb.axioms()
    for mask in range(1 << exponent):
        facts = frozenset(atoms[i] for i in range(exponent) if mask >> i & 1)
        rep = ABoxRepresentation(v, facts)
        interp = interpretation_from_facts(rep)
        ev = Evaluator(interp)
        if all(ev.satisfies(ax) for ax in axioms):
            yield rep


def entails_bm_bruteforce(kb: KnowledgeBase, ax: Axiom, cap: Optional[int] = None) -> bool:
    """Truth of ax in every bounded model of kb, by full enumeration."""
    used = vocabulary_of_axioms((ax,))
    v = kb.vocabulary
    for name in used.individuals:
        if name not in v.individuals:
            raise ValueError(f"axiom mentions unknown individual {name!r}")
    for name in used.concepts:
        if name not in v.concepts:
            raise ValueError(f"axiom mentions unknown concept {name!r}")
    for name in used.roles:
        if name not in v.roles:
            raise ValueError(f"axiom mentions unknown role {name!r}")
    for rep in enumerate_bounded_models_bruteforce(kb, cap=cap):
        interp = interpretation_from_facts(rep)
        if not Evaluator(interp).satisfies(ax):
            return False
    return True
