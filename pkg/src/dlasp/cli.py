"""Command-line interface.

Subcommands cover the reasoning services (check-sat, models, entails), the
pipeline stages (normalize, translate), and the semantics axiomatization
(axiomatize).  Knowledge bases are read from a file path, or from standard
input when the path is '-'.  Results go to standard output; diagnostics and
optional statistics go to standard error.  Exit status 2 signals a usage,
parse, or translation error; check-sat and entails use 1 for the negative
answer.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .asp import SolveStats
from .kb import (
    ConceptAssertion,
    ConceptFact,
    KnowledgeBase,
    Name,
    Role,
    RoleAssertion,
    facts_from_interpretation,
    sorted_facts,
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
from .normalize import NormalizedKB, normalize
from .reasoner import (
    axiomatize_bm,
    check_sat_bm,
    compile_kb,
    enumerate_models,
    entails_bm,
)
from .translate import UnsupportedConstructError


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _fact_line(fact) -> str:
    if isinstance(fact, ConceptFact):
        return print_axiom(ConceptAssertion(Name(fact.concept), fact.individual))
    return print_axiom(RoleAssertion(Role(fact.role), fact.subject, fact.object))


def _model_json(interp) -> str:
    payload = {
        "concepts": {
            a: sorted(interp.concept_ext[a]) for a in interp.vocabulary.concepts
        },
        "roles": {
            r: sorted([s, o] for s, o in interp.role_ext[r])
            for r in interp.vocabulary.roles
        },
    }
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def _print_stats(st: SolveStats) -> None:
    print(f"engine: {st.engine or 'none'}", file=sys.stderr)
    print(f"ground rules: {st.ground_rules}", file=sys.stderr)
    print(f"branches: {st.branches}", file=sys.stderr)
    print(f"propagations: {st.propagations}", file=sys.stderr)
    print(f"answer sets: {st.models}", file=sys.stderr)


def _cmd_check_sat(args) -> int:
    kb = parse_kb(_read_text(args.kb))
    st = SolveStats()
    sat = check_sat_bm(kb, stats=st)
    if args.stats:
        _print_stats(st)
    print("satisfiable" if sat else "unsatisfiable")
    return 0 if sat else 1


def _cmd_models(args) -> int:
    kb = parse_kb(_read_text(args.kb))
    st = SolveStats()
    count = 0
    for idx, interp in enumerate(enumerate_models(kb, args.limit, stats=st), start=1):
        count = idx
        if args.format == "json-lines":
            print(_model_json(interp))
            continue
        if idx > 1:
            print()
        print(f"% model {idx}")
        for fact in sorted_facts(facts_from_interpretation(interp)):
            print(_fact_line(fact))
    if args.stats:
        _print_stats(st)
    print(f"models: {count}", file=sys.stderr)
    return 0


def _cmd_entails(args) -> int:
    kb = parse_kb(_read_text(args.kb))
    axiom = parse_axiom(args.axiom, kb.vocabulary)
    st = SolveStats()
    got = entails_bm(kb, axiom, stats=st)
    if args.stats:
        _print_stats(st)
    if got.entailed:
        print("entailed")
        return 0
    print("not entailed")
    if got.countermodel is not None:
        print("% countermodel")
        for fact in sorted_facts(facts_from_interpretation(got.countermodel)):
            print(_fact_line(fact))
    return 1


def _legend(normalized: NormalizedKB) -> list[str]:
    fresh = normalized.fresh
    lines = []
    for concept, name in sorted(fresh.by_concept.items(), key=lambda kv: kv[1]):
        lines.append(f"# {name} stands for: {print_concept(concept)}")
    for prefix, name in sorted(fresh.by_chain_prefix.items(), key=lambda kv: kv[1]):
        first, second = prefix
        lines.append(
            f"# {name} stands for the chain: {print_role(first)} o {print_role(second)}"
        )
    for name in fresh.fresh_individuals:
        lines.append(f"# {name} is a fresh anchor individual")
    return lines


def _cmd_normalize(args) -> int:
    kb = parse_kb(_read_text(args.kb))
    normalized = normalize(kb)
    for line in _legend(normalized):
        print(line)
    out = print_kb(normalized.kb)
    if out:
        print(out, end="" if out.endswith("\n") else "\n")
    return 0


def _cmd_translate(args) -> int:
    from .asp import emit_text

    kb = parse_kb(_read_text(args.kb))
    compiled = compile_kb(kb)
    print(emit_text(compiled.program), end="")
    return 0


def _cmd_axiomatize(args) -> int:
    kb = parse_kb(_read_text(args.kb))
    out = print_kb(axiomatize_bm(kb))
    if out:
        print(out, end="" if out.endswith("\n") else "\n")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dlasp",
        description="Bounded-model reasoning for SROIQ knowledge bases "
        "by compilation to answer-set programs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help_text: str):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("kb", help="knowledge base file, or - for standard input")
        p.set_defaults(func=func)
        return p

    p = add("check-sat", _cmd_check_sat, "decide bounded satisfiability")
    p.add_argument("--stats", action="store_true", help="print search statistics")

    p = add("models", _cmd_models, "enumerate bounded models")
    p.add_argument("--limit", type=int, default=None, help="stop after this many models")
    p.add_argument(
        "--format",
        choices=("facts", "json-lines"),
        default="facts",
        help="output style (default: facts)",
    )
    p.add_argument("--stats", action="store_true", help="print search statistics")

    p = add("entails", _cmd_entails, "decide bounded entailment of one axiom")
    p.add_argument(
        "--axiom", required=True, help="the axiom, in knowledge-base syntax"
    )
    p.add_argument("--stats", action="store_true", help="print search statistics")

    add("normalize", _cmd_normalize, "print the normal form of the knowledge base")
    add("translate", _cmd_translate, "print the compiled answer-set program")
    add("axiomatize", _cmd_axiomatize, "print the bounded-semantics axiomatization")
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except UnsupportedConstructError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
