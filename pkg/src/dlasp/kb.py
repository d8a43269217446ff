"""Data model for SROIQ knowledge bases under fixed-domain semantics.

A knowledge base is a triple (ABox, TBox, RBox) over a sorted vocabulary of
individual, concept, and role names.  Interpretations here are *bounded*: the
domain is exactly the set of individual names and every name denotes itself.
Consequently a bounded interpretation carries the same information as a finite
set of atomic facts, and both views are provided with a bijection between them.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterator, Mapping, Union

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class SortClashError(ValueError):
    """A name is used in more than one sort (say, as concept and as role)."""


# ===========================================================================
# role and concept expressions
# ===========================================================================


@dataclass(frozen=True)
class Role:
    """Atomic role name."""

    name: str


@dataclass(frozen=True)
class Inverse:
    """Inverse of an atomic role."""

    name: str


@dataclass(frozen=True)
class Universal:
    """The universal role, interpreted as Delta x Delta."""


RoleExpr = Union[Role, Inverse, Universal]


@dataclass(frozen=True)
class Top:
    """The top concept, interpreted as the whole domain."""


@dataclass(frozen=True)
class Bot:
    """The bottom concept, interpreted as the empty set."""


@dataclass(frozen=True)
class Name:
    """Atomic concept name."""

    name: str


@dataclass(frozen=True)
class Not:
    arg: "ConceptExpr"


@dataclass(frozen=True)
class And:
    left: "ConceptExpr"
    right: "ConceptExpr"


@dataclass(frozen=True)
class Or:
    left: "ConceptExpr"
    right: "ConceptExpr"


@dataclass(frozen=True)
class Nominal:
    """Enumerated concept {a1, ..., an}; members must be nonempty."""

    members: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.members:
            raise ValueError("nominal must enumerate at least one individual")


@dataclass(frozen=True)
class Forall:
    role: RoleExpr
    filler: "ConceptExpr"


@dataclass(frozen=True)
class Exists:
    role: RoleExpr
    filler: "ConceptExpr"


@dataclass(frozen=True)
class HasSelf:
    """Self restriction: elements related to themselves by the role."""

    role: RoleExpr


@dataclass(frozen=True)
class AtLeast:
    """Qualified lower cardinality bound; n >= 1 is structural (use at_least
    to build restrictions from possibly-zero bounds)."""

    n: int
    role: RoleExpr
    filler: "ConceptExpr"

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("AtLeast requires n >= 1; a >=0 bound is Top")


@dataclass(frozen=True)
class AtMost:
    """Qualified upper cardinality bound; n >= 0."""

    n: int
    role: RoleExpr
    filler: "ConceptExpr"

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("AtMost requires n >= 0")


ConceptExpr = Union[
    Top, Bot, Name, Not, And, Or, Nominal, Forall, Exists, HasSelf, AtLeast, AtMost
]


def at_least(n: int, role: RoleExpr, filler: ConceptExpr) -> ConceptExpr:
    """Cardinality-restriction constructor; >=0 of anything is Top."""
    if n == 0:
        return Top()
    return AtLeast(n, role, filler)


# ===========================================================================
# axioms
# ===========================================================================


@dataclass(frozen=True)
class GCI:
    """General concept inclusion lhs SubClassOf rhs."""

    lhs: ConceptExpr
    rhs: ConceptExpr


@dataclass(frozen=True)
class RIA:
    """Role inclusion r1 o ... o rn SubRoleOf sup; the chain is nonempty."""

    chain: tuple[RoleExpr, ...]
    sup: RoleExpr

    def __post_init__(self) -> None:
        if not self.chain:
            raise ValueError("role chain must be nonempty")


@dataclass(frozen=True)
class DisjointRoles:
    first: RoleExpr
    second: RoleExpr


@dataclass(frozen=True)
class ConceptAssertion:
    concept: ConceptExpr
    individual: str


@dataclass(frozen=True)
class RoleAssertion:
    role: RoleExpr
    subject: str
    object: str


@dataclass(frozen=True)
class SameIndividual:
    first: str
    second: str


@dataclass(frozen=True)
class DifferentIndividuals:
    first: str
    second: str


ABoxAxiom = Union[ConceptAssertion, RoleAssertion, SameIndividual, DifferentIndividuals]
RBoxAxiom = Union[RIA, DisjointRoles]
Axiom = Union[ABoxAxiom, GCI, RBoxAxiom]


# ===========================================================================
# vocabulary and knowledge base
# ===========================================================================


@dataclass(frozen=True)
class Vocabulary:
    """Sorted name carrier: individuals, concepts, roles, pairwise disjoint,
    each kept in a deterministic (first-use or declaration) order."""

    individuals: tuple[str, ...] = ()
    concepts: tuple[str, ...] = ()
    roles: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        for sort in (self.individuals, self.concepts, self.roles):
            for name in sort:
                if not _IDENT.match(name):
                    raise ValueError(f"not a valid name: {name!r}")
            if len(set(sort)) != len(sort):
                raise ValueError("duplicate name within one sort")
        seen: dict[str, str] = {}
        for label, sort in (
            ("individual", self.individuals),
            ("concept", self.concepts),
            ("role", self.roles),
        ):
            for name in sort:
                if name in seen:
                    raise SortClashError(
                        f"name {name!r} used both as {seen[name]} and as {label}"
                    )
                seen[name] = label


@dataclass(frozen=True)
class KnowledgeBase:
    """(ABox, TBox, RBox) over a vocabulary that covers every used name."""

    vocabulary: Vocabulary
    abox: tuple[ABoxAxiom, ...] = ()
    tbox: tuple[GCI, ...] = ()
    rbox: tuple[RBoxAxiom, ...] = ()

    def __post_init__(self) -> None:
        used = vocabulary_of_axioms(self.axioms())
        for name in used.individuals:
            if name not in self.vocabulary.individuals:
                _sort_check(self.vocabulary, name, "individual")
        for name in used.concepts:
            if name not in self.vocabulary.concepts:
                _sort_check(self.vocabulary, name, "concept")
        for name in used.roles:
            if name not in self.vocabulary.roles:
                _sort_check(self.vocabulary, name, "role")

    def axioms(self) -> tuple[Axiom, ...]:
        return tuple(self.abox) + tuple(self.tbox) + tuple(self.rbox)


def _sort_check(vocab: Vocabulary, name: str, wanted: str) -> None:
    for label, sort in (
        ("individual", vocab.individuals),
        ("concept", vocab.concepts),
        ("role", vocab.roles),
    ):
        if name in sort:
            raise SortClashError(f"name {name!r} used as {wanted} but declared as {label}")
    raise ValueError(f"{wanted} name {name!r} missing from vocabulary")


# ---------------------------------------------------------------------------
# name collection

def _role_names(r: RoleExpr) -> Iterator[str]:
    if isinstance(r, (Role, Inverse)):
        yield r.name


def _concept_names(c: ConceptExpr) -> Iterator[tuple[str, str]]:
    """Yield (sort, name) events in syntactic order."""
    if isinstance(c, Name):
        yield ("concept", c.name)
    elif isinstance(c, Not):
        yield from _concept_names(c.arg)
    elif isinstance(c, (And, Or)):
        yield from _concept_names(c.left)
        yield from _concept_names(c.right)
    elif isinstance(c, Nominal):
        for m in c.members:
            yield ("individual", m)
    elif isinstance(c, (Forall, Exists, AtLeast, AtMost)):
        for n in _role_names(c.role):
            yield ("role", n)
        yield from _concept_names(c.filler)
    elif isinstance(c, HasSelf):
        for n in _role_names(c.role):
            yield ("role", n)


def _axiom_names(ax: Axiom) -> Iterator[tuple[str, str]]:
    if isinstance(ax, GCI):
        yield from _concept_names(ax.lhs)
        yield from _concept_names(ax.rhs)
    elif isinstance(ax, RIA):
        for r in ax.chain:
            for n in _role_names(r):
                yield ("role", n)
        for n in _role_names(ax.sup):
            yield ("role", n)
    elif isinstance(ax, DisjointRoles):
        for r in (ax.first, ax.second):
            for n in _role_names(r):
                yield ("role", n)
    elif isinstance(ax, ConceptAssertion):
        yield from _concept_names(ax.concept)
        yield ("individual", ax.individual)
    elif isinstance(ax, RoleAssertion):
        for n in _role_names(ax.role):
            yield ("role", n)
        yield ("individual", ax.subject)
        yield ("individual", ax.object)
    elif isinstance(ax, (SameIndividual, DifferentIndividuals)):
        yield ("individual", ax.first)
        yield ("individual", ax.second)
    else:
        raise TypeError(f"not an axiom: {ax!r}")


def vocabulary_of_axioms(axioms: tuple[Axiom, ...]) -> Vocabulary:
    """Names occurring in the axioms, per sort, in first-use order.

    Raises SortClashError if one name occurs in two sorts.
    """
    order: dict[str, str] = {}
    inds: list[str] = []
    cons: list[str] = []
    rols: list[str] = []
    for ax in axioms:
        for sort, name in _axiom_names(ax):
            if name in order:
                if order[name] != sort:
                    raise SortClashError(
                        f"name {name!r} used both as {order[name]} and as {sort}"
                    )
                continue
            order[name] = sort
            {"individual": inds, "concept": cons, "role": rols}[sort].append(name)
    return Vocabulary(tuple(inds), tuple(cons), tuple(rols))


def vocabulary_of(kb: KnowledgeBase) -> Vocabulary:
    """Names actually occurring in kb's axioms (declared-only names omitted)."""
    return vocabulary_of_axioms(kb.axioms())


def kb_from_axioms(
    axioms: tuple[Axiom, ...] | list[Axiom],
    declared: Vocabulary = Vocabulary(),
) -> KnowledgeBase:
    """Partition axioms into (ABox, TBox, RBox) and derive the vocabulary:
    declared names first, then names in first-use order."""
    used = vocabulary_of_axioms(tuple(axioms))

    def merge(first: tuple[str, ...], rest: tuple[str, ...]) -> tuple[str, ...]:
        out = list(first)
        for n in rest:
            if n not in out:
                out.append(n)
        return tuple(out)

    vocab = Vocabulary(
        merge(declared.individuals, used.individuals),
        merge(declared.concepts, used.concepts),
        merge(declared.roles, used.roles),
    )
    abox = tuple(a for a in axioms if isinstance(a, (ConceptAssertion, RoleAssertion, SameIndividual, DifferentIndividuals)))
    tbox = tuple(a for a in axioms if isinstance(a, GCI))
    rbox = tuple(a for a in axioms if isinstance(a, (RIA, DisjointRoles)))
    if len(abox) + len(tbox) + len(rbox) != len(tuple(axioms)):
        raise TypeError("unknown axiom kind in input")
    return KnowledgeBase(vocab, abox, tbox, rbox)


# ===========================================================================
# bounded interpretations and their fact-set view
# ===========================================================================


@dataclass(frozen=True, eq=True)
class BoundedInterpretation:
    """Interpretation whose domain is exactly the individual names and where
    every individual name denotes itself.

    concept_ext is total on the vocabulary's concepts, role_ext on its roles;
    extensions stay inside the domain.  Equality is structural.
    """

    vocabulary: Vocabulary
    concept_ext: Mapping[str, frozenset[str]]
    role_ext: Mapping[str, frozenset[tuple[str, str]]]

    def __post_init__(self) -> None:
        domain = set(self.vocabulary.individuals)
        if set(self.concept_ext) != set(self.vocabulary.concepts):
            raise ValueError("concept_ext must be total on the concept names")
        if set(self.role_ext) != set(self.vocabulary.roles):
            raise ValueError("role_ext must be total on the role names")
        for ext in self.concept_ext.values():
            if not ext <= domain:
                raise ValueError("concept extension outside the domain")
        for ext in self.role_ext.values():
            for a, b in ext:
                if a not in domain or b not in domain:
                    raise ValueError("role extension outside the domain")

    @property
    def domain(self) -> frozenset[str]:
        return frozenset(self.vocabulary.individuals)

    def __hash__(self) -> int:
        return hash(
            (
                self.vocabulary,
                frozenset(self.concept_ext.items()),
                frozenset(self.role_ext.items()),
            )
        )


@dataclass(frozen=True)
class ConceptFact:
    concept: str
    individual: str


@dataclass(frozen=True)
class RoleFact:
    role: str
    subject: str
    object: str


Fact = Union[ConceptFact, RoleFact]


@dataclass(frozen=True)
class ABoxRepresentation:
    """A bounded model written as the finite set of atomic facts it makes true."""

    vocabulary: Vocabulary
    facts: frozenset[Fact]

    def __post_init__(self) -> None:
        for f in self.facts:
            if isinstance(f, ConceptFact):
                if f.concept not in self.vocabulary.concepts:
                    raise ValueError(f"unknown concept in fact: {f.concept!r}")
                if f.individual not in self.vocabulary.individuals:
                    raise ValueError(f"unknown individual in fact: {f.individual!r}")
            elif isinstance(f, RoleFact):
                if f.role not in self.vocabulary.roles:
                    raise ValueError(f"unknown role in fact: {f.role!r}")
                for i in (f.subject, f.object):
                    if i not in self.vocabulary.individuals:
                        raise ValueError(f"unknown individual in fact: {i!r}")
            else:
                raise TypeError(f"not a fact: {f!r}")


def sorted_facts(rep: ABoxRepresentation) -> list[Fact]:
    """Deterministic fact order: concept facts by (concept, individual), then
    role facts by (role, subject, object), all lexicographic."""
    cs = sorted(
        (f for f in rep.facts if isinstance(f, ConceptFact)),
        key=lambda f: (f.concept, f.individual),
    )
    rs = sorted(
        (f for f in rep.facts if isinstance(f, RoleFact)),
        key=lambda f: (f.role, f.subject, f.object),
    )
    return [*cs, *rs]


def interpretation_from_facts(rep: ABoxRepresentation) -> BoundedInterpretation:
    concept_ext = {c: set() for c in rep.vocabulary.concepts}
    role_ext = {r: set() for r in rep.vocabulary.roles}
    for f in rep.facts:
        if isinstance(f, ConceptFact):
            concept_ext[f.concept].add(f.individual)
        else:
            role_ext[f.role].add((f.subject, f.object))
    return BoundedInterpretation(
        rep.vocabulary,
        {c: frozenset(v) for c, v in concept_ext.items()},
        {r: frozenset(v) for r, v in role_ext.items()},
    )


def facts_from_interpretation(interp: BoundedInterpretation) -> ABoxRepresentation:
    facts: set[Fact] = set()
    for c, ext in interp.concept_ext.items():
        for a in ext:
            facts.add(ConceptFact(c, a))
    for r, ext in interp.role_ext.items():
        for a, b in ext:
            facts.add(RoleFact(r, a, b))
    return ABoxRepresentation(interp.vocabulary, frozenset(facts))
