"""Compilation of normalized knowledge bases into answer-set programs.

The program has three layers.  A guess layer opens one complementary atom
pair per concept membership and per role edge over the named individuals, so
its answer sets run through all bounded interpretations.  A constraint layer
rules out violations: one constraint per general concept inclusion, built
from per-disjunct counterexample elements, plus role-axiom and assertion
clash constraints.  A fact layer fixes the individuals (top), the asserted
memberships and edges, and the nominal markers.

Answer sets of the result are in one-to-one correspondence with the bounded
models of the knowledge base; project_answer_set recovers the model as a
fact set over a chosen vocabulary.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .asp import Atom, Constant, CountExpression, Program, Rule, Variable
from .kb import (
    ABoxRepresentation,
    AtLeast,
    AtMost,
    ConceptAssertion,
    ConceptExpr,
    ConceptFact,
    DifferentIndividuals,
    DisjointRoles,
    Forall,
    GCI,
    HasSelf,
    Inverse,
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
    Vocabulary,
)
from .normalize import NormalizedKB, is_normalized


class UnsupportedConstructError(ValueError):
    """The construct has no answer-set counterpart in this compilation."""


TOP_PRED = "top"


def concept_pred(name: str, positive: bool = True) -> str:
    return ("c_" if positive else "nc_") + name


def role_pred(name: str, positive: bool = True) -> str:
    return ("r_" if positive else "nr_") + name


def nominal_pred(name: str) -> str:
    return "o_" + name


def ar(role: RoleExpr, x, y) -> Atom:
    """The atom asserting the (x, y) edge of a possibly inverse role."""
    if isinstance(role, Role):
        return Atom(role_pred(role.name), (x, y))
    if isinstance(role, Inverse):
        return Atom(role_pred(role.name), (y, x))
    raise UnsupportedConstructError("the universal role cannot be compiled")


def top_atom(term) -> Atom:
    return Atom(TOP_PRED, (term,))


# ===========================================================================
# guess layer
# ===========================================================================


def guess_rules(vocabulary: Vocabulary) -> list[Rule]:
    """One complementary pair of choice rules per guessable ground atom."""
    x, y = Variable("X"), Variable("Y")
    rules: list[Rule] = []
    for a in vocabulary.concepts:
        pos = Atom(concept_pred(a), (x,))
        neg = Atom(concept_pred(a, positive=False), (x,))
        rules.append(Rule((pos,), (top_atom(x),), (neg,)))
        rules.append(Rule((neg,), (top_atom(x),), (pos,)))
    for r in vocabulary.roles:
        pos = Atom(role_pred(r), (x, y))
        neg = Atom(role_pred(r, positive=False), (x, y))
        rules.append(Rule((pos,), (top_atom(x), top_atom(y)), (neg,)))
        rules.append(Rule((neg,), (top_atom(x), top_atom(y)), (pos,)))
    return rules


def top_facts(vocabulary: Vocabulary) -> set[Atom]:
    return {top_atom(Constant(a)) for a in vocabulary.individuals}


# ===========================================================================
# concept-inclusion constraints
# ===========================================================================


@dataclass
class _Elements:
    """Counterexample conditions for one disjunct at point X."""

    pos: list[Atom]
    neg: list[Atom]
    counts: list[CountExpression]
    facts: list[Atom]


def _literal_condition(c: ConceptExpr) -> tuple[str, bool]:
    """(concept name, polarity) for a normal-form literal."""
    if isinstance(c, Name):
        return c.name, True
    if isinstance(c, Not) and isinstance(c.arg, Name):
        return c.arg.name, False
    raise ValueError(f"{c} is not a normal-form literal")


def _trans_disjunct(d: ConceptExpr, x: Variable, k: int) -> _Elements:
    """Body elements stating that disjunct d fails at X."""
    yk = Variable(f"Y{k}")
    if isinstance(d, Name):
        return _Elements([], [Atom(concept_pred(d.name), (x,))], [], [])
    if isinstance(d, Not) and isinstance(d.arg, Name):
        return _Elements([Atom(concept_pred(d.arg.name), (x,))], [], [], [])
    if isinstance(d, Nominal):
        if len(d.members) != 1:
            raise ValueError("nominal disjuncts must be singletons here")
        member = d.members[0]
        marker = Atom(nominal_pred(member), (x,))
        fact = Atom(nominal_pred(member), (Constant(member),))
        return _Elements([], [marker], [], [fact])
    if isinstance(d, HasSelf):
        return _Elements([], [ar(d.role, x, x)], [], [])
    if isinstance(d, Not) and isinstance(d.arg, HasSelf):
        return _Elements([ar(d.arg.role, x, x)], [], [], [])
    if isinstance(d, Forall):
        name, polarity = _literal_condition(d.filler)
        edge = ar(d.role, x, yk)
        body = Atom(concept_pred(name), (yk,))
        if polarity:
            return _Elements([edge], [body], [], [])
        return _Elements([edge, body], [], [], [])
    if isinstance(d, (AtLeast, AtMost)):
        op = "<" if isinstance(d, AtLeast) else ">"
        name, polarity = _literal_condition(d.filler)
        conditions = ((Atom(concept_pred(name), (yk,)), polarity),)
        count = CountExpression(ar(d.role, x, yk), conditions, op, d.n)
        return _Elements([], [], [count], [])
    raise ValueError(f"disjunct {d} is not in normal form")


def _flatten_or(c: ConceptExpr) -> list[ConceptExpr]:
    if isinstance(c, Or):
        return _flatten_or(c.left) + _flatten_or(c.right)
    return [c]


def _gci_constraint(axiom: GCI, facts: set[Atom]) -> Rule:
    """The violation constraint for one normalized inclusion."""
    x = Variable("X")
    pos: list[Atom] = [top_atom(x)]
    neg: list[Atom] = []
    counts: list[CountExpression] = []
    for k, d in enumerate(_flatten_or(axiom.rhs), start=1):
        got = _trans_disjunct(d, x, k)
        pos += got.pos
        neg += got.neg
        counts += got.counts
        facts.update(got.facts)
    return Rule((), tuple(pos), tuple(neg), tuple(counts))


# ===========================================================================
# role-axiom and assertion layers
# ===========================================================================


def _rbox_constraint(axiom) -> Rule:
    x, y, z = Variable("X"), Variable("Y"), Variable("Z")
    if isinstance(axiom, RIA):
        if len(axiom.chain) == 1:
            body = [ar(axiom.chain[0], x, y)]
            return Rule((), tuple(body), (ar(axiom.sup, x, y),))
        if len(axiom.chain) == 2:
            body = [ar(axiom.chain[0], x, y), ar(axiom.chain[1], y, z)]
            return Rule((), tuple(body), (ar(axiom.sup, x, z),))
        raise ValueError("role chains longer than two are not in normal form")
    if isinstance(axiom, DisjointRoles):
        return Rule((), (ar(axiom.first, x, y), ar(axiom.second, x, y)), ())
    raise ValueError(f"unexpected role axiom {axiom}")


def _clash_constraints(vocabulary: Vocabulary) -> list[Rule]:
    x, y = Variable("X"), Variable("Y")
    out = []
    for a in vocabulary.concepts:
        out.append(
            Rule(
                (),
                (
                    Atom(concept_pred(a), (x,)),
                    Atom(concept_pred(a, positive=False), (x,)),
                ),
                (),
            )
        )
    for r in vocabulary.roles:
        out.append(
            Rule(
                (),
                (
                    Atom(role_pred(r), (x, y)),
                    Atom(role_pred(r, positive=False), (x, y)),
                ),
                (),
            )
        )
    return out


_UNSAT_RULE = Rule((), (top_atom(Variable("X")),), ())


def _abox_translation(kb_abox, facts: set[Atom]) -> list[Rule]:
    """Assertion facts, plus unsatisfiable constraints for equality clashes.

    Identity assertions resolve against the fixed interpretation of
    individual names: a sameness claim between distinct names (or a
    distinctness claim about one name) can never hold, so it compiles to a
    constraint over the nonempty domain; the tautological variants vanish.
    """
    rules: list[Rule] = []
    for axiom in kb_abox:
        if isinstance(axiom, ConceptAssertion):
            name, polarity = _literal_condition(axiom.concept)
            facts.add(
                Atom(concept_pred(name, positive=polarity), (Constant(axiom.individual),))
            )
        elif isinstance(axiom, RoleAssertion):
            facts.add(
                ar(axiom.role, Constant(axiom.subject), Constant(axiom.object))
            )
        elif isinstance(axiom, SameIndividual):
            if axiom.first != axiom.second:
                rules.append(_UNSAT_RULE)
        elif isinstance(axiom, DifferentIndividuals):
            if axiom.first == axiom.second:
                rules.append(_UNSAT_RULE)
        else:
            raise ValueError(f"unexpected assertion {axiom}")
    return rules


# ===========================================================================
# the compilation
# ===========================================================================


def translate(normalized: NormalizedKB) -> Program:
    """Compile a normalized knowledge base into an answer-set program."""
    kb = normalized.kb
    if not is_normalized(kb):
        raise ValueError("translate expects a normalized knowledge base")
    if not kb.vocabulary.individuals:
        raise ValueError("translate needs at least one individual")
    facts: set[Atom] = set(top_facts(kb.vocabulary))
    rules: list[Rule] = list(guess_rules(kb.vocabulary))
    for axiom in kb.tbox:
        rules.append(_gci_constraint(axiom, facts))
    for axiom in kb.rbox:
        rules.append(_rbox_constraint(axiom))
    rules.extend(_abox_translation(kb.abox, facts))
    rules.extend(_clash_constraints(kb.vocabulary))
    return Program(tuple(rules), frozenset(facts))


# ===========================================================================
# projection back to fact sets
# ===========================================================================


def decode_fact(atom: Atom, vocabulary: Vocabulary) -> Union[ConceptFact, RoleFact, None]:
    """The positive membership or edge fact an atom encodes, if any.

    Atoms of the bookkeeping predicates, negative-polarity atoms, and atoms
    whose names fall outside the vocabulary decode to None.
    """
    names = [t.name for t in atom.args if isinstance(t, Constant)]
    if len(names) != len(atom.args):
        return None
    if atom.pred.startswith("nc_") or atom.pred.startswith("nr_"):
        return None
    if atom.pred.startswith("c_") and len(names) == 1:
        concept = atom.pred[2:]
        if concept in vocabulary.concepts and names[0] in vocabulary.individuals:
            return ConceptFact(concept, names[0])
        return None
    if atom.pred.startswith("r_") and len(names) == 2:
        role = atom.pred[2:]
        if (
            role in vocabulary.roles
            and names[0] in vocabulary.individuals
            and names[1] in vocabulary.individuals
        ):
            return RoleFact(role, names[0], names[1])
        return None
    return None


def project_answer_set(
    atoms: frozenset[Atom], vocabulary: Vocabulary
) -> ABoxRepresentation:
    """The fact set a solver answer set denotes over a vocabulary.

    Projecting to the source vocabulary of a normalization discards the
    facts about fresh names, yielding the bounded model of the original
    knowledge base.
    """
    facts = []
    for atom in atoms:
        fact = decode_fact(atom, vocabulary)
        if fact is not None:
            facts.append(fact)
    return ABoxRepresentation(vocabulary, frozenset(facts))
