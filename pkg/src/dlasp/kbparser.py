"""Parser and pretty-printer for the .kb surface syntax.

Grammar (statements end with '.', '#' starts a line comment):

    axiom   := concept "SubClassOf" concept
             | roleChain "SubRoleOf" role
             | "Disjoint(" role "," role ")"
             | concept "(" ind ")"
             | role "(" ind "," ind ")"
             | ind "=" ind | ind "!=" ind
    decl    := "individual" name | "concept" name | "role" name
    roleChain := role ("o" role)*
    role    := name | "inv(" name ")" | "U"
    concept := "Top" | "Bot" | name | "not" concept
             | concept "and" concept | concept "or" concept
             | "{" ind ("," ind)* "}"
             | "some" role concept | "only" role concept | "self" role
             | ">=" nat role concept | "<=" nat role concept | "(" concept ")"

Precedence: not > and > or; quantifiers and cardinalities bind tighter than
the binary connectives and extend over one concept argument.  Name sorts are
inferred from use; one name in two sorts is an error.  print_kb emits
declarations for the whole vocabulary ahead of the axioms, which makes
parse_kb(print_kb(kb)) structurally equal to kb, declaration order included.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .kb import (
    ABoxAxiom,
    And,
    AtLeast,
    AtMost,
    Axiom,
    Bot,
    ConceptAssertion,
    ConceptExpr,
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
    RBoxAxiom,
    Role,
    RoleAssertion,
    RoleExpr,
    SameIndividual,
    Top,
    Universal,
    Vocabulary,
    at_least,
)

KEYWORDS = frozenset(
    {
        "SubClassOf", "SubRoleOf", "Disjoint", "inv", "U", "o",
        "Top", "Bot", "not", "and", "or", "some", "only", "self",
        "individual", "concept", "role",
    }
)


@dataclass(frozen=True)
class SourceSpan:
    """Position of a token: 1-based line and column, 0-based byte offset."""

    line: int
    column: int
    offset: int

    def __str__(self) -> str:
        return f"{self.line}:{self.column}"


class ParseError(ValueError):
    def __init__(self, message: str, span: SourceSpan):
        super().__init__(f"{span}: {message}")
        self.message = message
        self.span = span


@dataclass(frozen=True)
class _Token:
    kind: str  # NAME, NAT, SYM, EOF
    text: str
    span: SourceSpan


def _lex(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    line, col, offset = 1, 1, 0
    i, n = 0, len(text)

    def here() -> SourceSpan:
        return SourceSpan(line, col, offset)

    def step(k: int = 1) -> None:
        nonlocal i, line, col, offset
        for _ in range(k):
            ch = text[i]
            offset += len(ch.encode("utf-8"))
            if ch == "\n":
                line += 1
                col = 1
            else:
                col += 1
            i += 1

    while i < n:
        ch = text[i]
        if ch in " \t\r\n":
            step()
        elif ch == "#":
            while i < n and text[i] != "\n":
                step()
        elif ch.isalpha() or ch == "_":
            span = here()
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            step(j - i)
            tokens.append(_Token("NAME", word, span))
        elif ch.isdigit():
            span = here()
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("NAT", text[i:j], span))
            step(j - i)
        elif text.startswith("!=", i) or text.startswith(">=", i) or text.startswith("<=", i):
            span = here()
            tokens.append(_Token("SYM", text[i : i + 2], span))
            step(2)
        elif ch in ".(){},=":
            tokens.append(_Token("SYM", ch, here()))
            step()
        else:
            raise ParseError(f"unexpected character {ch!r}", here())
    tokens.append(_Token("EOF", "", here()))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _lex(text)
        self.pos = 0
        self.axioms: list[Axiom] = []
        # committed sorts: name -> (sort, first span)
        self.sorts: dict[str, tuple[str, SourceSpan]] = {}
        self.order: dict[str, list[str]] = {"individual": [], "concept": [], "role": []}
        # uses buffered within one statement: (name, sort, span)
        self.buffer: list[tuple[str, str, SourceSpan]] = []

    # ------------------------------------------------------------------
    # token plumbing

    def peek(self, ahead: int = 0) -> _Token:
        return self.tokens[min(self.pos + ahead, len(self.tokens) - 1)]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        if tok.kind != "EOF":
            self.pos += 1
        return tok

    def expect_sym(self, sym: str) -> _Token:
        tok = self.peek()
        if tok.kind != "SYM" or tok.text != sym:
            raise ParseError(f"expected {sym!r}, found {tok.text!r}", tok.span)
        return self.advance()

    def expect_keyword(self, word: str) -> _Token:
        tok = self.peek()
        if tok.kind != "NAME" or tok.text != word:
            raise ParseError(f"expected {word!r}, found {tok.text!r}", tok.span)
        return self.advance()

    def at_keyword(self, *words: str) -> bool:
        tok = self.peek()
        return tok.kind == "NAME" and tok.text in words

    def parse_name(self, what: str) -> _Token:
        tok = self.peek()
        if tok.kind != "NAME":
            raise ParseError(f"expected {what} name, found {tok.text!r}", tok.span)
        if tok.text in KEYWORDS:
            raise ParseError(f"keyword {tok.text!r} cannot be a {what} name", tok.span)
        return self.advance()

    # ------------------------------------------------------------------
    # sort bookkeeping

    def use(self, name: str, sort: str, span: SourceSpan) -> None:
        self.buffer.append((name, sort, span))

    def flush_uses(self) -> None:
        for name, sort, span in self.buffer:
            known = self.sorts.get(name)
            if known is None:
                self.sorts[name] = (sort, span)
                self.order[sort].append(name)
            elif known[0] != sort:
                raise ParseError(
                    f"name {name!r} used as {sort} but earlier as {known[0]} "
                    f"(at {known[1]})",
                    span,
                )
        self.buffer.clear()

    # ------------------------------------------------------------------
    # roles and concepts

    def parse_role(self) -> RoleExpr:
        tok = self.peek()
        if self.at_keyword("inv"):
            self.advance()
            self.expect_sym("(")
            name = self.parse_name("role")
            self.expect_sym(")")
            self.use(name.text, "role", name.span)
            return Inverse(name.text)
        if self.at_keyword("U"):
            self.advance()
            return Universal()
        name = self.parse_name("role")
        self.use(name.text, "role", name.span)
        return Role(name.text)

    def parse_concept(self) -> ConceptExpr:
        left = self.parse_concept_and()
        while self.at_keyword("or"):
            self.advance()
            right = self.parse_concept_and()
            left = Or(left, right)
        return left

    def parse_concept_and(self) -> ConceptExpr:
        left = self.parse_concept_unary()
        while self.at_keyword("and"):
            self.advance()
            right = self.parse_concept_unary()
            left = And(left, right)
        return left

    def parse_concept_unary(self) -> ConceptExpr:
        tok = self.peek()
        if self.at_keyword("not"):
            self.advance()
            return Not(self.parse_concept_unary())
        if self.at_keyword("some"):
            self.advance()
            role = self.parse_role()
            return Exists(role, self.parse_concept_unary())
        if self.at_keyword("only"):
            self.advance()
            role = self.parse_role()
            return Forall(role, self.parse_concept_unary())
        if self.at_keyword("self"):
            self.advance()
            return HasSelf(self.parse_role())
        if tok.kind == "SYM" and tok.text in (">=", "<="):
            self.advance()
            nat = self.peek()
            if nat.kind != "NAT":
                raise ParseError(f"expected a number, found {nat.text!r}", nat.span)
            self.advance()
            n = int(nat.text)
            role = self.parse_role()
            filler = self.parse_concept_unary()
            if tok.text == ">=":
                return at_least(n, role, filler)
            return AtMost(n, role, filler)
        return self.parse_concept_primary()

    def parse_concept_primary(self) -> ConceptExpr:
        tok = self.peek()
        if self.at_keyword("Top"):
            self.advance()
            return Top()
        if self.at_keyword("Bot"):
            self.advance()
            return Bot()
        if tok.kind == "SYM" and tok.text == "{":
            self.advance()
            members = [self.parse_individual()]
            while self.peek().text == ",":
                self.advance()
                members.append(self.parse_individual())
            self.expect_sym("}")
            return Nominal(tuple(members))
        if tok.kind == "SYM" and tok.text == "(":
            self.advance()
            inner = self.parse_concept()
            self.expect_sym(")")
            return inner
        if tok.kind == "NAME" and tok.text not in KEYWORDS:
            self.advance()
            self.use(tok.text, "concept", tok.span)
            return Name(tok.text)
        raise ParseError(f"expected a concept, found {tok.text!r}", tok.span)

    def parse_individual(self) -> str:
        tok = self.parse_name("individual")
        self.use(tok.text, "individual", tok.span)
        return tok.text

    # ------------------------------------------------------------------
    # statements

    def statement_has(self, word: str) -> bool:
        """Look ahead to the next '.' for a keyword, to pick the axiom form."""
        k = 0
        while True:
            tok = self.peek(k)
            if tok.kind == "EOF" or (tok.kind == "SYM" and tok.text == "."):
                return False
            if tok.kind == "NAME" and tok.text == word:
                return True
            k += 1

    def parse_statement(self) -> None:
        tok = self.peek()
        if self.at_keyword("individual", "concept", "role"):
            kw = self.advance()
            name = self.parse_name(kw.text)
            self.use(name.text, kw.text, name.span)
            self.expect_sym(".")
        elif self.at_keyword("Disjoint"):
            self.advance()
            self.expect_sym("(")
            first = self.parse_role()
            self.expect_sym(",")
            second = self.parse_role()
            self.expect_sym(")")
            self.expect_sym(".")
            self.axioms.append(DisjointRoles(first, second))
        elif self.at_keyword("inv", "U") or self.statement_has("SubRoleOf"):
            self.parse_role_led()
        elif (
            tok.kind == "NAME"
            and tok.text not in KEYWORDS
            and self.peek(1).kind == "SYM"
            and self.peek(1).text in ("=", "!=")
        ):
            first = self.parse_individual()
            op = self.advance()
            second = self.parse_individual()
            self.expect_sym(".")
            if op.text == "=":
                self.axioms.append(SameIndividual(first, second))
            else:
                self.axioms.append(DifferentIndividuals(first, second))
        elif self.statement_has("SubClassOf"):
            lhs = self.parse_concept()
            self.expect_keyword("SubClassOf")
            rhs = self.parse_concept()
            self.expect_sym(".")
            self.axioms.append(GCI(lhs, rhs))
        else:
            self.parse_assertion()
        self.flush_uses()

    def parse_role_led(self) -> None:
        """RIA (a chain) or a role assertion with an inverse/universal role."""
        first = self.parse_role()
        tok = self.peek()
        if self.at_keyword("o") or self.at_keyword("SubRoleOf"):
            chain = [first]
            while self.at_keyword("o"):
                self.advance()
                chain.append(self.parse_role())
            self.expect_keyword("SubRoleOf")
            sup = self.parse_role()
            self.expect_sym(".")
            self.axioms.append(RIA(tuple(chain), sup))
        elif tok.kind == "SYM" and tok.text == "(":
            self.advance()
            subject = self.parse_individual()
            self.expect_sym(",")
            obj = self.parse_individual()
            self.expect_sym(")")
            self.expect_sym(".")
            self.axioms.append(RoleAssertion(first, subject, obj))
        else:
            raise ParseError(
                f"expected 'o', 'SubRoleOf', or '(', found {tok.text!r}", tok.span
            )

    def parse_assertion(self) -> None:
        start = len(self.buffer)
        concept = self.parse_concept()
        tok = self.peek()
        if tok.kind != "SYM" or tok.text != "(":
            raise ParseError(f"expected an axiom, found {tok.text!r}", tok.span)
        self.advance()
        subject = self.parse_individual()
        if self.peek().text == ",":
            self.advance()
            obj = self.parse_individual()
            self.expect_sym(")")
            self.expect_sym(".")
            if not isinstance(concept, Name):
                raise ParseError(
                    "a role assertion needs an atomic or inverse role", tok.span
                )
            # the bare name was buffered as a concept use; it is a role
            name, _, span = self.buffer[start]
            self.buffer[start] = (name, "role", span)
            self.axioms.append(RoleAssertion(Role(concept.name), subject, obj))
        else:
            self.expect_sym(")")
            self.expect_sym(".")
            self.axioms.append(ConceptAssertion(concept, subject))

    def parse(self) -> KnowledgeBase:
        while self.peek().kind != "EOF":
            self.parse_statement()
        vocab = Vocabulary(
            tuple(self.order["individual"]),
            tuple(self.order["concept"]),
            tuple(self.order["role"]),
        )
        abox = tuple(
            a
            for a in self.axioms
            if isinstance(
                a, (ConceptAssertion, RoleAssertion, SameIndividual, DifferentIndividuals)
            )
        )
        tbox = tuple(a for a in self.axioms if isinstance(a, GCI))
        rbox = tuple(a for a in self.axioms if isinstance(a, (RIA, DisjointRoles)))
        return KnowledgeBase(vocab, abox, tbox, rbox)


def parse_kb(text: str) -> KnowledgeBase:
    """Parse .kb text into a knowledge base; raises ParseError with a span."""
    return _Parser(text).parse()


def parse_axiom(text: str, vocabulary: Vocabulary) -> Axiom:
    """Parse a single axiom (trailing '.' optional) against a fixed vocabulary.

    Names not present in the vocabulary are a diagnostic error, as are names
    used in the wrong sort.
    """
    stripped = text.strip()
    if not stripped.endswith("."):
        stripped += "."
    parser = _Parser(stripped)
    parser.parse_statement()
    if parser.peek().kind != "EOF":
        raise ParseError("expected a single axiom", parser.peek().span)
    if len(parser.axioms) != 1:
        raise ParseError(
            "expected an axiom, not a declaration", SourceSpan(1, 1, 0)
        )
    by_sort = {
        "individual": vocabulary.individuals,
        "concept": vocabulary.concepts,
        "role": vocabulary.roles,
    }
    for name, (sort, span) in parser.sorts.items():
        if name not in by_sort[sort]:
            raise ParseError(
                f"{sort} name {name!r} does not occur in the knowledge base", span
            )
    return parser.axioms[0]


# ===========================================================================
# printing
# ===========================================================================

_OR, _AND, _UNARY, _PRIMARY = 1, 2, 3, 4


def print_role(r: RoleExpr) -> str:
    if isinstance(r, Role):
        return r.name
    if isinstance(r, Inverse):
        return f"inv({r.name})"
    if isinstance(r, Universal):
        return "U"
    raise TypeError(f"not a role expression: {r!r}")


def _level(c: ConceptExpr) -> int:
    if isinstance(c, Or):
        return _OR
    if isinstance(c, And):
        return _AND
    if isinstance(c, (Not, Exists, Forall, HasSelf, AtLeast, AtMost)):
        return _UNARY
    return _PRIMARY


def print_concept(c: ConceptExpr, level: int = _OR) -> str:
    if isinstance(c, Top):
        text = "Top"
    elif isinstance(c, Bot):
        text = "Bot"
    elif isinstance(c, Name):
        text = c.name
    elif isinstance(c, Nominal):
        text = "{" + ", ".join(c.members) + "}"
    elif isinstance(c, Not):
        text = f"not {print_concept(c.arg, _UNARY)}"
    elif isinstance(c, And):
        text = f"{print_concept(c.left, _AND)} and {print_concept(c.right, _UNARY)}"
    elif isinstance(c, Or):
        text = f"{print_concept(c.left, _OR)} or {print_concept(c.right, _AND)}"
    elif isinstance(c, Exists):
        text = f"some {print_role(c.role)} {print_concept(c.filler, _UNARY)}"
    elif isinstance(c, Forall):
        text = f"only {print_role(c.role)} {print_concept(c.filler, _UNARY)}"
    elif isinstance(c, HasSelf):
        text = f"self {print_role(c.role)}"
    elif isinstance(c, AtLeast):
        text = f">= {c.n} {print_role(c.role)} {print_concept(c.filler, _UNARY)}"
    elif isinstance(c, AtMost):
        text = f"<= {c.n} {print_role(c.role)} {print_concept(c.filler, _UNARY)}"
    else:
        raise TypeError(f"not a concept expression: {c!r}")
    if _level(c) < level:
        return f"({text})"
    return text


def print_axiom(ax: Axiom) -> str:
    if isinstance(ax, GCI):
        return f"{print_concept(ax.lhs)} SubClassOf {print_concept(ax.rhs)}."
    if isinstance(ax, RIA):
        chain = " o ".join(print_role(r) for r in ax.chain)
        return f"{chain} SubRoleOf {print_role(ax.sup)}."
    if isinstance(ax, DisjointRoles):
        return f"Disjoint({print_role(ax.first)}, {print_role(ax.second)})."
    if isinstance(ax, ConceptAssertion):
        return f"{print_concept(ax.concept)}({ax.individual})."
    if isinstance(ax, RoleAssertion):
        return f"{print_role(ax.role)}({ax.subject}, {ax.object})."
    if isinstance(ax, SameIndividual):
        return f"{ax.first} = {ax.second}."
    if isinstance(ax, DifferentIndividuals):
        return f"{ax.first} != {ax.second}."
    raise TypeError(f"not an axiom: {ax!r}")


def print_kb(kb: KnowledgeBase) -> str:
    """Deterministic .kb text; parse_kb of the result is structurally equal."""
    lines: list[str] = []
    for name in kb.vocabulary.individuals:
        lines.append(f"individual {name}.")
    for name in kb.vocabulary.concepts:
        lines.append(f"concept {name}.")
    for name in kb.vocabulary.roles:
        lines.append(f"role {name}.")
    for ax in kb.axioms():
        lines.append(print_axiom(ax))
    return "\n".join(lines) + ("\n" if lines else "")
