"""Model-conservative normalization into the translator's normal form.

The normal form: every GCI is Top SubClassOf a disjunction whose disjuncts
are literals, singleton nominals, value restrictions with literal fillers,
self restrictions, or qualified cardinality bounds with literal fillers; the
ABox contains only literal concept assertions and atomic role assertions and
is nonempty; role chains have length at most two.

Complex subconcepts are replaced by fresh surrogate names defined in one
polarity only, so every source model extends to a model of the output and
every output model projects to a source model; project_model realizes the
projection by dropping facts that mention fresh names.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .kb import (
    ABoxAxiom,
    And,
    AtLeast,
    AtMost,
    ABoxRepresentation,
    Axiom,
    Bot,
    ConceptAssertion,
    ConceptExpr,
    ConceptFact,
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
    RBoxAxiom,
    Role,
    RoleAssertion,
    RoleExpr,
    Top,
    Vocabulary,
)


# ===========================================================================
# negation normal form
# ===========================================================================


def nnf(c: ConceptExpr) -> ConceptExpr:
    """Push negation onto names, nominals, and self restrictions; existential
    restrictions become >=1 bounds on the way."""
    if isinstance(c, (Top, Bot, Name, Nominal, HasSelf)):
        return c
    if isinstance(c, And):
        return And(nnf(c.left), nnf(c.right))
    if isinstance(c, Or):
        return Or(nnf(c.left), nnf(c.right))
    if isinstance(c, Exists):
        return AtLeast(1, c.role, nnf(c.filler))
    if isinstance(c, Forall):
        return Forall(c.role, nnf(c.filler))
    if isinstance(c, AtLeast):
        return AtLeast(c.n, c.role, nnf(c.filler))
    if isinstance(c, AtMost):
        return AtMost(c.n, c.role, nnf(c.filler))
    if isinstance(c, Not):
        a = c.arg
        if isinstance(a, Top):
            return Bot()
        if isinstance(a, Bot):
            return Top()
        if isinstance(a, (Name, Nominal, HasSelf)):
            return c
        if isinstance(a, Not):
            return nnf(a.arg)
        if isinstance(a, And):
            return Or(nnf(Not(a.left)), nnf(Not(a.right)))
        if isinstance(a, Or):
            return And(nnf(Not(a.left)), nnf(Not(a.right)))
        if isinstance(a, Exists):
            return Forall(a.role, nnf(Not(a.filler)))
        if isinstance(a, Forall):
            return AtLeast(1, a.role, nnf(Not(a.filler)))
        if isinstance(a, AtLeast):
            # the filler is not negated by cardinality duality
            return AtMost(a.n - 1, a.role, nnf(a.filler))
        if isinstance(a, AtMost):
            return AtLeast(a.n + 1, a.role, nnf(a.filler))
    raise TypeError(f"not a concept expression: {c!r}")


def is_literal(c: ConceptExpr) -> bool:
    return isinstance(c, Name) or (isinstance(c, Not) and isinstance(c.arg, Name))


def nnf_complement(c: ConceptExpr) -> ConceptExpr:
    """Complement of an nnf concept, again in nnf; flips literals directly."""
    if isinstance(c, Name):
        return Not(c)
    if isinstance(c, Not) and isinstance(c.arg, Name):
        return c.arg
    return nnf(Not(c))


def positive_polarity(c: ConceptExpr) -> bool:
    """Whether the surrogate for c is used positively (Q) or negated (not Q)."""
    if isinstance(c, (Top, Bot)):
        return False
    if isinstance(c, (Name, Nominal, HasSelf)):
        return True
    if isinstance(c, Not):
        if isinstance(c.arg, (Name, Nominal, HasSelf)):
            return False
        return positive_polarity(nnf(c))
    if isinstance(c, (And, Or)):
        return positive_polarity(c.left) or positive_polarity(c.right)
    if isinstance(c, Forall):
        return positive_polarity(c.filler)
    if isinstance(c, (Exists, AtLeast)):
        return True
    if isinstance(c, AtMost):
        if c.n == 0:
            return positive_polarity(nnf_complement(c.filler))
        return True
    raise TypeError(f"not a concept expression: {c!r}")


# ===========================================================================
# fresh names
# ===========================================================================


@dataclass
class FreshNameTable:
    """Fresh surrogate names for one normalization run.

    Structurally equal concepts share one name; chain prefixes share one
    auxiliary role.  Spellings are q_<n> and chain_<n>, skipping collisions
    with the source vocabulary.
    """

    source_names: frozenset[str]
    by_concept: dict[ConceptExpr, str] = field(default_factory=dict)
    by_chain_prefix: dict[tuple[RoleExpr, RoleExpr], str] = field(default_factory=dict)
    fresh_concepts: list[str] = field(default_factory=list)
    fresh_roles: list[str] = field(default_factory=list)
    fresh_individuals: list[str] = field(default_factory=list)

    def _alloc(self, prefix: str, into: list[str]) -> str:
        n = 0
        taken = self.source_names
        while True:
            cand = f"{prefix}{n}"
            if cand not in taken and cand not in self.fresh_concepts \
                    and cand not in self.fresh_roles and cand not in self.fresh_individuals:
                into.append(cand)
                return cand
            n += 1

    def concept_name(self, c: ConceptExpr) -> str:
        hit = self.by_concept.get(c)
        if hit is None:
            hit = self._alloc("q_", self.fresh_concepts)
            self.by_concept[c] = hit
        return hit

    def chain_name(self, prefix: tuple[RoleExpr, RoleExpr]) -> str:
        hit = self.by_chain_prefix.get(prefix)
        if hit is None:
            hit = self._alloc("chain_", self.fresh_roles)
            self.by_chain_prefix[prefix] = hit
        return hit

    def individual_name(self) -> str:
        return self._alloc("a", self.fresh_individuals)


def surrogate(c: ConceptExpr, table: FreshNameTable) -> ConceptExpr:
    """The literal standing in for c: its fresh name, negated when c's
    polarity calls for it."""
    q = Name(table.concept_name(c))
    return q if positive_polarity(c) else Not(q)


@dataclass(frozen=True)
class NormalizedKB:
    kb: KnowledgeBase
    fresh: FreshNameTable
    source_vocabulary: Vocabulary


# ===========================================================================
# the rewriting itself
# ===========================================================================


def _flatten_or(c: ConceptExpr) -> list[ConceptExpr]:
    if isinstance(c, Or):
        return _flatten_or(c.left) + _flatten_or(c.right)
    return [c]


def _flatten_and(c: ConceptExpr) -> list[ConceptExpr]:
    if isinstance(c, And):
        return _flatten_and(c.left) + _flatten_and(c.right)
    return [c]


def _or_of(disjuncts: list[ConceptExpr]) -> ConceptExpr:
    out = disjuncts[0]
    for d in disjuncts[1:]:
        out = Or(out, d)
    return out


def _conforming(d: ConceptExpr) -> bool:
    if is_literal(d):
        return True
    if isinstance(d, Nominal):
        return len(d.members) == 1
    if isinstance(d, Forall):
        return is_literal(d.filler)
    if isinstance(d, HasSelf):
        return True
    if isinstance(d, Not) and isinstance(d.arg, HasSelf):
        return True
    if isinstance(d, (AtLeast, AtMost)):
        return is_literal(d.filler)
    return False


class _Normalizer:
    def __init__(self, kb: KnowledgeBase):
        all_names = (
            kb.vocabulary.individuals + kb.vocabulary.concepts + kb.vocabulary.roles
        )
        self.table = FreshNameTable(source_names=frozenset(all_names))
        self.abox: list[ABoxAxiom] = []
        self.tbox: list[GCI] = []
        self.rbox: list[RBoxAxiom] = []
        self.seen: set[Axiom] = set()
        self.pending: list[list[ConceptExpr]] = []
        self.kb = kb

    # -- emission with dedupe ------------------------------------------

    def emit(self, ax: Axiom) -> None:
        if ax in self.seen:
            return
        self.seen.add(ax)
        if isinstance(ax, GCI):
            self.tbox.append(ax)
        elif isinstance(ax, (RIA, DisjointRoles)):
            self.rbox.append(ax)
        else:
            self.abox.append(ax)

    def emit_unsat_marker(self) -> None:
        # a contradictory pair over one fresh name; unsatisfiable since the
        # normalized ABox guarantees at least one individual
        q = Name(self.table.concept_name(Bot()))
        self.emit(GCI(Top(), q))
        self.emit(GCI(Top(), Not(q)))

    # -- ABox ----------------------------------------------------------

    def assertion(self, concept_nnf: ConceptExpr, individual: str) -> None:
        if is_literal(concept_nnf):
            self.emit(ConceptAssertion(concept_nnf, individual))
            return
        a = surrogate(concept_nnf, self.table)
        self.emit(ConceptAssertion(a, individual))
        self.pending.append([nnf_complement(a), concept_nnf])

    def abox_axiom(self, ax: ABoxAxiom) -> None:
        if isinstance(ax, ConceptAssertion):
            self.assertion(nnf(ax.concept), ax.individual)
        elif isinstance(ax, RoleAssertion):
            if isinstance(ax.role, Role):
                self.emit(ax)
            elif isinstance(ax.role, Inverse):
                self.emit(RoleAssertion(Role(ax.role.name), ax.object, ax.subject))
            else:
                # universal-role assertions hold in every bounded
                # interpretation; nothing to keep
                pass
        else:
            self.emit(ax)

    # -- RBox ----------------------------------------------------------

    def rbox_axiom(self, ax: RBoxAxiom) -> None:
        if isinstance(ax, DisjointRoles):
            self.emit(ax)
            return
        chain = ax.chain
        while len(chain) > 2:
            prefix = (chain[0], chain[1])
            fresh = Role(self.table.chain_name(prefix))
            self.emit(RIA(prefix, fresh))
            chain = (fresh,) + chain[2:]
        self.emit(RIA(chain, ax.sup))

    # -- TBox ----------------------------------------------------------

    def gci(self, disjuncts: list[ConceptExpr]) -> None:
        self.pending.append(disjuncts)

    def drain(self) -> None:
        while self.pending:
            self.step(self.pending.pop(0))

    def step(self, disjuncts: list[ConceptExpr]) -> None:
        flat: list[ConceptExpr] = []
        for d in disjuncts:
            flat.extend(_flatten_or(d))
        if any(isinstance(d, Top) for d in flat):
            return
        flat = [d for d in flat if not isinstance(d, Bot)]
        if not flat:
            self.emit_unsat_marker()
            return

        for i, d in enumerate(flat):
            if _conforming(d):
                continue
            rest = flat[:i] + flat[i + 1 :]
            if isinstance(d, Nominal):
                self.gci(flat[:i] + [Nominal((m,)) for m in d.members] + flat[i + 1 :])
                return
            if isinstance(d, Not) and isinstance(d.arg, Nominal):
                members = d.arg.members
                if len(members) > 1:
                    conj: ConceptExpr = Not(Nominal((members[0],)))
                    for m in members[1:]:
                        conj = And(conj, Not(Nominal((m,))))
                    self.gci(flat[:i] + [conj] + flat[i + 1 :])
                    return
                if not rest:
                    self.emit_unsat_marker()
                    return
                self.assertion(_or_of(rest), members[0])
                return
            if isinstance(d, And):
                conjuncts = _flatten_and(d)
                a = surrogate(d, self.table)
                self.gci(flat[:i] + [a] + flat[i + 1 :])
                for cj in conjuncts:
                    self.gci([nnf_complement(a), cj])
                return
            if isinstance(d, (Forall, AtLeast)):
                a = surrogate(d.filler, self.table)
                replacement = (
                    Forall(d.role, a)
                    if isinstance(d, Forall)
                    else AtLeast(d.n, d.role, a)
                )
                self.gci(flat[:i] + [replacement] + flat[i + 1 :])
                self.gci([nnf_complement(a), d.filler])
                return
            if isinstance(d, AtMost):
                comp = nnf_complement(d.filler)
                a = surrogate(comp, self.table)
                self.gci(flat[:i] + [AtMost(d.n, d.role, nnf_complement(a))] + flat[i + 1 :])
                self.gci([nnf_complement(a), comp])
                return
            if isinstance(d, Exists):
                self.gci(flat[:i] + [AtLeast(1, d.role, d.filler)] + flat[i + 1 :])
                return
            raise TypeError(f"cannot normalize disjunct {d!r}")

        # every disjunct conforms; drop tautologies, dedupe, emit
        out: list[ConceptExpr] = []
        for d in flat:
            if d not in out:
                out.append(d)
        for d in out:
            if is_literal(d) and nnf_complement(d) in out:
                return
        self.emit(GCI(Top(), _or_of(out)))

    # -- driver --------------------------------------------------------

    def run(self) -> NormalizedKB:
        kb = self.kb
        abox_in = kb.abox
        if not abox_in:
            if kb.vocabulary.individuals:
                guard = kb.vocabulary.individuals[0]
            else:
                guard = self.table.individual_name()
            abox_in = (ConceptAssertion(Top(), guard),)
        for ax in abox_in:
            self.abox_axiom(ax)
        for ax in kb.tbox:
            self.gci(_flatten_or(nnf(Or(Not(ax.lhs), ax.rhs))))
        for ax in kb.rbox:
            self.rbox_axiom(ax)
        self.drain()

        v = kb.vocabulary
        vocab = Vocabulary(
            v.individuals + tuple(self.table.fresh_individuals),
            v.concepts + tuple(self.table.fresh_concepts),
            v.roles + tuple(self.table.fresh_roles),
        )
        out = KnowledgeBase(vocab, tuple(self.abox), tuple(self.tbox), tuple(self.rbox))
        return NormalizedKB(out, self.table, v)


def normalize(kb: KnowledgeBase) -> NormalizedKB:
    """Rewrite kb into normal form, recording fresh names for projection."""
    return _Normalizer(kb).run()


def is_normalized(kb: KnowledgeBase) -> bool:
    if not kb.abox:
        return False
    for ax in kb.abox:
        if isinstance(ax, ConceptAssertion) and not is_literal(ax.concept):
            return False
        if isinstance(ax, RoleAssertion) and not isinstance(ax.role, Role):
            return False
    for ax in kb.tbox:
        if not isinstance(ax.lhs, Top):
            return False
        if not all(_conforming(d) for d in _flatten_or(ax.rhs)):
            return False
    for ax in kb.rbox:
        if isinstance(ax, RIA) and len(ax.chain) > 2:
            return False
    return True


def project_model(rep: ABoxRepresentation, normalized: NormalizedKB) -> ABoxRepresentation:
    """Restrict a model of the normalized KB to the source vocabulary."""
    src = normalized.source_vocabulary
    keep: set = set()
    for f in rep.facts:
        if isinstance(f, ConceptFact):
            if f.concept in src.concepts and f.individual in src.individuals:
                keep.add(f)
        else:
            if (
                f.role in src.roles
                and f.subject in src.individuals
                and f.object in src.individuals
            ):
                keep.add(f)
    return ABoxRepresentation(src, frozenset(keep))
