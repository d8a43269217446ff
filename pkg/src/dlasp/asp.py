"""A small disjunctive answer-set-programming engine.

Rules are disjunctive with default negation; bodies may carry count
expressions, which are restricted to constraint bodies (rules without heads)
and treated as post-hoc filters: a set is an answer set of the full program
iff it is an answer set of the constraint-free part and satisfies every
ground constraint.  Answer sets themselves are defined the classical way,
as subset-minimal models of the Gelfond-Lifschitz reduct.

solve() picks between two engines: a branch-and-propagate search for
guess-and-check programs (every non-constraint rule is a fact or one half of
a complementary guess pair, the shape the knowledge-base translation emits),
and naive subset enumeration over head-and-fact atoms for everything else
below a ground-atom cap.  Every yielded set is re-checked with
is_answer_set, unconditionally.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import product
from typing import Iterator, Optional, Sequence, Union

DEFAULT_NAIVE_CAP = 20

_PLAIN_CONST = re.compile(r"[a-z][A-Za-z0-9_]*\Z")

COUNT_OPS = ("<=", "<", "=", ">", ">=")


class UnsupportedProgramError(ValueError):
    """The program fits neither solve engine."""


# ===========================================================================
# syntax
# ===========================================================================


@dataclass(frozen=True)
class Constant:
    name: str

    def __str__(self) -> str:
        if _PLAIN_CONST.match(self.name):
            return self.name
        return '"' + self.name + '"'


@dataclass(frozen=True)
class Variable:
    name: str

    def __str__(self) -> str:
        return self.name


Term = Union[Constant, Variable]


@dataclass(frozen=True)
class Atom:
    pred: str
    args: tuple[Term, ...] = ()

    def __str__(self) -> str:
        if not self.args:
            return self.pred
        return f"{self.pred}({','.join(str(t) for t in self.args)})"

    def is_ground(self) -> bool:
        return all(isinstance(t, Constant) for t in self.args)

    def variables(self) -> set[str]:
        return {t.name for t in self.args if isinstance(t, Variable)}


def atom_key(a: Atom) -> tuple:
    return (a.pred, len(a.args), tuple(str(t) for t in a.args))


@dataclass(frozen=True)
class CountExpression:
    """#count over the instantiations of pattern governed by conditions.

    conditions are (atom, positive) pairs; an instantiation of the local
    variables is counted iff the instantiated pattern is in the candidate set
    and every condition holds with its sign.  N <op> bound decides the truth
    of the expression.
    """

    pattern: Atom
    conditions: tuple[tuple[Atom, bool], ...]
    op: str
    bound: int

    def __post_init__(self) -> None:
        if self.op not in COUNT_OPS:
            raise ValueError(f"bad comparison {self.op!r}")
        if self.bound < 0:
            raise ValueError("count bound must be a natural number")

    def variables(self) -> set[str]:
        out = set(self.pattern.variables())
        for a, _ in self.conditions:
            out |= a.variables()
        return out


@dataclass(frozen=True)
class Rule:
    """head1 | ... | headn :- pos, not neg, counts.

    Safety: every variable of the head and the negative body occurs in the
    positive body; count-expression variables are exempt (those not bound by
    the positive body are the count's local instantiation space).
    """

    head: tuple[Atom, ...] = ()
    pos: tuple[Atom, ...] = ()
    neg: tuple[Atom, ...] = ()
    counts: tuple[CountExpression, ...] = ()

    def __post_init__(self) -> None:
        if not (self.head or self.pos or self.neg or self.counts):
            raise ValueError("empty rule")
        bound = set()
        for a in self.pos:
            bound |= a.variables()
        for a in self.head + self.neg:
            loose = a.variables() - bound
            if loose:
                raise ValueError(f"unsafe variables {sorted(loose)} in {a}")
        if self.counts and self.head:
            raise ValueError("count expressions are allowed in constraints only")

    def is_ground(self) -> bool:
        return all(a.is_ground() for a in self.head + self.pos + self.neg)


@dataclass(frozen=True)
class Program:
    rules: tuple[Rule, ...] = ()
    facts: frozenset[Atom] = frozenset()

    def __post_init__(self) -> None:
        for f in self.facts:
            if not f.is_ground():
                raise ValueError(f"fact {f} is not ground")


def _constants_of(p: Program) -> list[str]:
    names: set[str] = set()

    def scan(a: Atom) -> None:
        for t in a.args:
            if isinstance(t, Constant):
                names.add(t.name)

    for f in p.facts:
        scan(f)
    for r in p.rules:
        for a in r.head + r.pos + r.neg:
            scan(a)
        for c in r.counts:
            scan(c.pattern)
            for a, _ in c.conditions:
                scan(a)
    return sorted(names)


# ===========================================================================
# grounding
# ===========================================================================


def _subst_atom(a: Atom, sub: dict[str, str]) -> Atom:
    return Atom(
        a.pred,
        tuple(
            Constant(sub[t.name]) if isinstance(t, Variable) and t.name in sub else t
            for t in a.args
        ),
    )


def _subst_count(c: CountExpression, sub: dict[str, str]) -> CountExpression:
    return CountExpression(
        _subst_atom(c.pattern, sub),
        tuple((_subst_atom(a, sub), sign) for a, sign in c.conditions),
        c.op,
        c.bound,
    )


def ground(p: Program) -> Program:
    """All instantiations of p's rules over the constants occurring in p.

    Count-expression variables not bound by the positive body stay variable;
    they are the counted pattern's local instantiation space.  Output order
    is deterministic: rules in order, substitutions in lexicographic order.
    """
    universe = _constants_of(p)
    out: list[Rule] = []
    seen: set[Rule] = set()
    for r in p.rules:
        outer: set[str] = set()
        for a in r.pos:
            outer |= a.variables()
        names = sorted(outer)
        assignments = product(universe, repeat=len(names)) if names else [()]
        for combo in assignments:
            sub = dict(zip(names, combo))
            g = Rule(
                tuple(_subst_atom(a, sub) for a in r.head),
                tuple(_subst_atom(a, sub) for a in r.pos),
                tuple(_subst_atom(a, sub) for a in r.neg),
                tuple(_subst_count(c, sub) for c in r.counts),
            )
            if g not in seen:
                seen.add(g)
                out.append(g)
    return Program(tuple(out), p.facts)


# ===========================================================================
# satisfaction, reduct, answer sets
# ===========================================================================


def _eval_count(
    c: CountExpression, i: frozenset[Atom] | set[Atom], universe: Sequence[str]
) -> bool:
    local = sorted(c.variables())
    n = 0
    assignments = product(universe, repeat=len(local)) if local else [()]
    for combo in assignments:
        sub = dict(zip(local, combo))
        if _subst_atom(c.pattern, sub) not in i:
            continue
        ok = True
        for a, sign in c.conditions:
            if (_subst_atom(a, sub) in i) != sign:
                ok = False
                break
        if ok:
            n += 1
    if c.op == "<=":
        return n <= c.bound
    if c.op == "<":
        return n < c.bound
    if c.op == "=":
        return n == c.bound
    if c.op == ">":
        return n > c.bound
    return n >= c.bound


def _body_holds(r: Rule, i: frozenset[Atom] | set[Atom], universe: Sequence[str]) -> bool:
    return (
        all(a in i for a in r.pos)
        and all(a not in i for a in r.neg)
        and all(_eval_count(c, i, universe) for c in r.counts)
    )


def satisfies(p: Program, i: frozenset[Atom] | set[Atom]) -> bool:
    """Classical satisfaction of every ground rule and fact of p by i."""
    g = p if all(r.is_ground() for r in p.rules) else ground(p)
    universe = _constants_of(g)
    for f in g.facts:
        if f not in i:
            return False
    for r in g.rules:
        if _body_holds(r, i, universe) and not any(h in i for h in r.head):
            return False
    return True


def gl_reduct(p: Program, i: frozenset[Atom] | set[Atom]) -> Program:
    """Gelfond-Lifschitz reduct of ground p with respect to i.

    Rules with a negative-body atom in i are dropped; count expressions are
    evaluated against i and the rule is kept, with the expression removed,
    only if they hold.  Remaining rules lose their negative bodies.  A
    constraint whose entire body falls away this way reduces to a falsity;
    it is rendered as ':- not __unsat__.' over the reserved, never-derivable
    predicate __unsat__, which fires in every candidate that avoids it.
    """
    universe = _constants_of(p)
    falsum = Atom("__unsat__", ())
    out: list[Rule] = []
    for r in p.rules:
        if not r.is_ground():
            raise ValueError("gl_reduct needs a ground program")
        if any(a in i for a in r.neg):
            continue
        if not all(_eval_count(c, i, universe) for c in r.counts):
            continue
        if r.head or r.pos:
            out.append(Rule(r.head, r.pos, (), ()))
        else:
            out.append(Rule((), (), (falsum,), ()))
    return Program(tuple(out), p.facts)


def _least_model(rules: Sequence[Rule], facts: frozenset[Atom]) -> frozenset[Atom]:
    model = set(facts)
    changed = True
    while changed:
        changed = False
        for r in rules:
            if r.head and all(a in model for a in r.pos):
                h = r.head[0]
                if h not in model:
                    model.add(h)
                    changed = True
    return frozenset(model)


def is_answer_set(p: Program, i: frozenset[Atom] | set[Atom]) -> bool:
    """Subset-minimal-model test of the reduct; exact for any program here."""
    g = p if all(r.is_ground() for r in p.rules) else ground(p)
    return _is_answer_set_ground(g, frozenset(i))


def _is_answer_set_ground(g: Program, i: frozenset[Atom]) -> bool:
    universe = _constants_of(g)
    reduct = gl_reduct(g, i)
    # i must satisfy the reduct (facts included)
    if not all(f in i for f in reduct.facts):
        return False
    definite = [r for r in reduct.rules if r.head]
    constraints = [r for r in reduct.rules if not r.head]
    for r in reduct.rules:
        if _body_holds(r, i, universe) and not any(h in i for h in r.head):
            return False
    if all(len(r.head) == 1 for r in definite):
        return i == _least_model(definite, reduct.facts)
    # disjunctive: look for a smaller model of the reduct inside i
    if not _models_reduct(definite, reduct.facts, i, universe):
        return False
    atoms = sorted(i - reduct.facts, key=atom_key)
    if len(atoms) > 22:
        raise UnsupportedProgramError("disjunctive minimality check too large")
    for mask in range((1 << len(atoms)) - 1):
        j = frozenset(reduct.facts) | frozenset(
            atoms[b] for b in range(len(atoms)) if mask >> b & 1
        )
        if _models_reduct(definite, reduct.facts, j, universe) and all(
            not _body_holds(r, j, universe) for r in constraints
        ):
            return False
    return True


def _models_reduct(
    definite: Sequence[Rule],
    facts: frozenset[Atom],
    j: frozenset[Atom],
    universe: Sequence[str],
) -> bool:
    if not all(f in j for f in facts):
        return False
    for r in definite:
        if all(a in j for a in r.pos) and not any(h in j for h in r.head):
            return False
    return True


class _GroundChecker:
    """Allocation-free answer-set verification for one ground program.

    Mirrors _is_answer_set_ground on normal programs, falling back to the
    general routine for disjunctive ones; built once per solve so the
    per-model check stays cheap.
    """

    def __init__(self, g: Program):
        self.program = g
        self.universe = _constants_of(g)
        self.normal = all(len(r.head) <= 1 for r in g.rules)

    def verify(self, i: frozenset[Atom]) -> bool:
        if not self.normal:
            return _is_answer_set_ground(self.program, i)
        g = self.program
        if not all(f in i for f in g.facts):
            return False
        kept: list[Rule] = []
        for r in g.rules:
            if any(a in i for a in r.neg):
                continue
            if r.counts and not all(
                _eval_count(c, i, self.universe) for c in r.counts
            ):
                continue
            if r.head:
                kept.append(r)
                continue
            # a surviving constraint: empty bodies fire vacuously
            if not r.pos or all(a in i for a in r.pos):
                return False
        model = set(g.facts)
        changed = True
        while changed:
            changed = False
            for r in kept:
                h = r.head[0]
                if h not in model and all(a in model for a in r.pos):
                    model.add(h)
                    changed = True
        return frozenset(model) == i


# ===========================================================================
# solving
# ===========================================================================


@dataclass
class SolveStats:
    ground_rules: int = 0
    branches: int = 0
    propagations: int = 0
    models: int = 0
    engine: str = ""


def solve(
    p: Program,
    limit: Optional[int] = None,
    *,
    naive_cap: int = DEFAULT_NAIVE_CAP,
    stats: Optional[SolveStats] = None,
) -> Iterator[frozenset[Atom]]:
    """Enumerate answer sets of p in a deterministic order.

    Guess-and-check programs go through branch-and-propagate; any other
    program is solved by subset enumeration when its head-and-fact atom count
    is within naive_cap, and refused otherwise.  Every yielded set passes
    is_answer_set (checked unconditionally).
    """
    if limit is not None and limit <= 0:
        return
    st = stats if stats is not None else SolveStats()
    g = ground(p)
    st.ground_rules = len(g.rules)
    shaped = _GuessCheck.detect(g)
    if shaped is not None:
        st.engine = "branch-and-propagate"
        models = shaped.enumerate(st)
    else:
        st.engine = "naive"
        models = _naive_enumerate(g, naive_cap, st)
    checker = _GroundChecker(g)
    n = 0
    for m in models:
        if not checker.verify(m):
            raise RuntimeError(f"engine produced a non-answer-set: {sorted(map(str, m))}")
        st.models += 1
        yield m
        n += 1
        if limit is not None and n >= limit:
            return


def _naive_enumerate(
    g: Program, cap: int, st: SolveStats
) -> Iterator[frozenset[Atom]]:
    cands: set[Atom] = set(g.facts)
    for r in g.rules:
        cands.update(r.head)
    atoms = sorted(cands, key=atom_key)
    if len(atoms) > cap:
        raise UnsupportedProgramError(
            f"{len(atoms)} candidate atoms exceed the naive-engine cap {cap}"
        )
    facts = g.facts
    checker = _GroundChecker(g)
    for mask in range(1 << len(atoms)):
        st.branches += 1
        i = frozenset(atoms[b] for b in range(len(atoms)) if mask >> b & 1)
        if not all(f in i for f in facts):
            continue
        if checker.verify(i):
            yield i


# ---------------------------------------------------------------------------
# branch and propagate

_TRUE, _FALSE, _UNDEC = 1, 0, -1


@dataclass
class _PlainLit:
    atom: int
    need: bool  # constraint fires only if atom has this value


@dataclass
class _CountItem:
    # one instantiation: fires contribution iff all (atom, need) hold
    lits: list[tuple[int, bool]]


@dataclass
class _CompiledConstraint:
    plain: list[_PlainLit]
    counts: list[tuple[list["_CountItem"], str, int]]


class _GuessCheck:
    """Search over complementary guess pairs, filtered by the constraints.

    For programs whose non-constraint rules are facts and complementary guess
    pairs with fact guards, the answer sets of the constraint-free part are
    exactly: all facts, plus one member of every pair (a member that is
    itself a fact is forced).  Constraints then act as filters, checked and
    propagated during the search; count expressions prune through
    necessity intervals and force at the boundary.
    """

    def __init__(self) -> None:
        self.index: dict[Atom, int] = {}
        self.atoms: list[Atom] = []
        self.value: list[int] = []
        self.partner: list[Optional[int]] = []
        self.branch_order: list[int] = []
        self.constraints: list[_CompiledConstraint] = []
        self.watch: dict[int, list[int]] = {}
        self.trail: list[int] = []

    # -- construction --------------------------------------------------

    def intern(self, a: Atom) -> int:
        hit = self.index.get(a)
        if hit is None:
            hit = len(self.atoms)
            self.index[a] = hit
            self.atoms.append(a)
            self.value.append(_UNDEC)
            self.partner.append(None)
        return hit

    @classmethod
    def detect(cls, g: Program) -> Optional["_GuessCheck"]:
        facts = set(g.facts)
        guesses: dict[Atom, tuple[Atom, int]] = {}
        constraints: list[Rule] = []
        for order, r in enumerate(g.rules):
            if not r.head:
                constraints.append(r)
            elif (
                len(r.head) == 1
                and len(r.neg) == 1
                and not r.counts
                and all(a in facts for a in r.pos)
            ):
                if r.head[0] in guesses:
                    return None
                guesses[r.head[0]] = (r.neg[0], order)
            else:
                return None
        eng = cls()
        paired: set[Atom] = set()
        for h, (n, order) in sorted(guesses.items(), key=lambda kv: kv[1][1]):
            if h in paired:
                continue
            back = guesses.get(n)
            if back is None or back[0] != h:
                return None
            paired.add(h)
            paired.add(n)
            hi, ni = eng.intern(h), eng.intern(n)
            eng.partner[hi] = ni
            eng.partner[ni] = hi
            eng.branch_order.append(hi)
        # initial values: facts true, fact partners per their own factness,
        # everything unpaired and unfact false
        for f in facts:
            fi = eng.intern(f)
            eng.value[fi] = _TRUE
        for hi in list(eng.branch_order):
            ni = eng.partner[hi]
            assert ni is not None
            hv, nv = eng.value[hi], eng.value[ni]
            if hv == _TRUE and nv == _UNDEC:
                eng.value[ni] = _FALSE
            elif nv == _TRUE and hv == _UNDEC:
                eng.value[hi] = _FALSE
        eng.branch_order = [
            hi for hi in eng.branch_order if eng.value[hi] == _UNDEC
        ]
        eng.branch_order.sort(key=lambda idx: atom_key(eng.atoms[idx]))
        universe = _constants_of(g)
        for r in constraints:
            eng.compile_constraint(r, universe)
        # unpaired, unfact atoms mentioned only in constraints stay false
        for idx in range(len(eng.atoms)):
            if eng.value[idx] == _UNDEC and eng.partner[idx] is None:
                eng.value[idx] = _FALSE
        return eng

    def compile_constraint(self, r: Rule, universe: Sequence[str]) -> None:
        cid = len(self.constraints)
        plain = [_PlainLit(self.intern(a), True) for a in r.pos]
        plain += [_PlainLit(self.intern(a), False) for a in r.neg]
        counts: list[tuple[list[_CountItem], str, int]] = []
        for c in r.counts:
            local = sorted(c.variables())
            items: list[_CountItem] = []
            assignments = product(universe, repeat=len(local)) if local else [()]
            for combo in assignments:
                sub = dict(zip(local, combo))
                lits = [(self.intern(_subst_atom(c.pattern, sub)), True)]
                lits += [
                    (self.intern(_subst_atom(a, sub)), sign)
                    for a, sign in c.conditions
                ]
                items.append(_CountItem(lits))
            counts.append((items, c.op, c.bound))
        comp = _CompiledConstraint(plain, counts)
        self.constraints.append(comp)
        touched = {pl.atom for pl in plain}
        for items, _, _ in counts:
            for item in items:
                touched.update(a for a, _ in item.lits)
        for a in touched:
            self.watch.setdefault(a, []).append(cid)

    # -- evaluation ----------------------------------------------------

    def check(self, cid: int) -> tuple[bool, list[tuple[int, bool]]]:
        """Returns (consistent, forced assignments) for one constraint."""
        comp = self.constraints[cid]
        undecided: list[_PlainLit] = []
        for pl in comp.plain:
            v = self.value[pl.atom]
            if v == _UNDEC:
                undecided.append(pl)
            elif (v == _TRUE) != pl.need:
                return True, []  # can never fire
        intervals: list[tuple[int, int]] = []
        for items, op, bound in comp.counts:
            nmin = nmax = 0
            for item in items:
                sat = True
                possible = True
                for a, need in item.lits:
                    v = self.value[a]
                    if v == _UNDEC:
                        sat = False
                    elif (v == _TRUE) != need:
                        sat = False
                        possible = False
                        break
                if possible:
                    nmax += 1
                    if sat:
                        nmin += 1
            lo, hi = _op_range(op, bound)
            if nmax < lo or nmin > hi:
                return True, []  # count cannot hold, constraint cannot fire
            intervals.append((nmin, nmax))
        # every count may hold; does it necessarily?
        necessary = []
        for (items, op, bound), (nmin, nmax) in zip(comp.counts, intervals):
            lo, hi = _op_range(op, bound)
            necessary.append(lo <= nmin and nmax <= hi)
        if not undecided and all(necessary):
            return False, []  # fires in every completion
        forced: list[tuple[int, bool]] = []
        if len(undecided) == 1 and all(necessary):
            pl = undecided[0]
            forced.append((pl.atom, not pl.need))
            return True, forced
        if not undecided and sum(1 for n in necessary if not n) == 1:
            k = necessary.index(False)
            items, op, bound = comp.counts[k]
            nmin, nmax = intervals[k]
            lo, hi = _op_range(op, bound)
            if op in (">", ">=") and nmin == lo - 1:
                # one more true instantiation would reach the firing range
                for item in items:
                    forced.extend(self._avoid_item(item))
            elif op in ("<", "<=") and nmax == hi + 1:
                # every possible instantiation has to come true
                for item in items:
                    forced.extend(self._require_item(item))
        return True, forced

    def _avoid_item(self, item: _CountItem) -> list[tuple[int, bool]]:
        undec = None
        for a, need in item.lits:
            v = self.value[a]
            if v == _UNDEC:
                if undec is not None:
                    return []
                undec = (a, need)
            elif (v == _TRUE) != need:
                return []  # already false, nothing to avoid
        if undec is None:
            return []  # already true; necessity interval handles it
        return [(undec[0], not undec[1])]

    def _require_item(self, item: _CountItem) -> list[tuple[int, bool]]:
        out = []
        for a, need in item.lits:
            v = self.value[a]
            if v == _UNDEC:
                out.append((a, need))
            elif (v == _TRUE) != need:
                return []  # impossible instantiation; not counted in nmax
        return out

    # -- search --------------------------------------------------------

    def assign(self, atom: int, val: bool, st: SolveStats) -> bool:
        queue = [(atom, val)]
        while queue:
            a, v = queue.pop()
            want = _TRUE if v else _FALSE
            cur = self.value[a]
            if cur != _UNDEC:
                if cur != want:
                    return False
                continue
            self.value[a] = want
            self.trail.append(a)
            st.propagations += 1
            part = self.partner[a]
            if part is not None and self.value[part] == _UNDEC:
                queue.append((part, not v))
            for cid in self.watch.get(a, ()):
                okay, forced = self.check(cid)
                if not okay:
                    return False
                queue.extend(forced)
        return True

    def undo(self, mark: int) -> None:
        while len(self.trail) > mark:
            self.value[self.trail.pop()] = _UNDEC

    def enumerate(self, st: SolveStats) -> Iterator[frozenset[Atom]]:
        for cid in range(len(self.constraints)):
            okay, forced = self.check(cid)
            if not okay:
                return
            for a, v in forced:
                if not self.assign(a, v, st):
                    return

        def model() -> frozenset[Atom]:
            return frozenset(
                self.atoms[i] for i in range(len(self.atoms)) if self.value[i] == _TRUE
            )

        order = self.branch_order

        def dfs(k: int) -> Iterator[frozenset[Atom]]:
            while k < len(order) and self.value[order[k]] != _UNDEC:
                k += 1
            if k == len(order):
                yield model()
                return
            atom = order[k]
            for val in (False, True):
                st.branches += 1
                mark = len(self.trail)
                if self.assign(atom, val, st):
                    yield from dfs(k + 1)
                self.undo(mark)

        yield from dfs(0)


def _op_range(op: str, bound: int) -> tuple[int, float]:
    """The [lo, hi] band of counts for which 'N op bound' holds."""
    if op == "<=":
        return 0, bound
    if op == "<":
        return 0, bound - 1
    if op == "=":
        return bound, bound
    if op == ">":
        return bound + 1, float("inf")
    return bound, float("inf")


# ===========================================================================
# emission
# ===========================================================================


def _emit_count(c: CountExpression, outer: set[str]) -> str:
    local = sorted(c.variables() - outer)
    tuple_part = ",".join(local) if local else "1"
    parts = [str(c.pattern)]
    for a, sign in c.conditions:
        parts.append(str(a) if sign else f"not {a}")
    return f"#count{{ {tuple_part} : {', '.join(parts)} }} {c.op} {c.bound}"


def emit_rule(r: Rule) -> str:
    outer: set[str] = set()
    for a in r.pos:
        outer |= a.variables()
    body = [str(a) for a in r.pos]
    body += [f"not {a}" for a in r.neg]
    body += [_emit_count(c, outer) for c in r.counts]
    head = " | ".join(str(a) for a in r.head)
    if not body:
        return f"{head}."
    if not head:
        return f":- {', '.join(body)}."
    return f"{head} :- {', '.join(body)}."


def emit_text(p: Program) -> str:
    """Deterministic solver-style text: facts first, then rules in order."""
    lines = [f"{a}." for a in sorted(p.facts, key=atom_key)]
    lines += [emit_rule(r) for r in p.rules]
    return "\n".join(lines) + ("\n" if lines else "")
