"""Command-line surface.

Subcommands: classify, profile, solve, check, normalize, reduce, gen.
Decisions go to stdout (text or ``--json``), never into the exit code:
0 means the command ran to completion, 2 is a usage/parse/format error,
3 means a resource cap was exceeded. ``ARITY_ASP_CAPS=enum,min``
overrides the enumeration and minimality caps.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from .arity import (
    AritySet,
    Schema,
    arity_of_rule,
    dump_arity_set,
    format_arity,
    load_arity_set,
    normalize,
    profile,
)
from .classifier import TaskKind, classify, condition_table
from .cnf import parse_cnf, serialize_cnf
from .errors import ArityAspError, OracleLimitExceeded, ParseError
from .gadgets import (
    chain_replace,
    fold_constraints,
    gadget_eas_R,
    gadget_sat_shape,
    gadget_supported,
    pad_to_explicit,
)
from .generate import random_program
from .parser import IDENT_RE, parse_program, serialize_program
from .program import Program
from .search import Task, decide
from .semantics import Caps, SemanticsKind, is_answer_set, is_supported_model

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CAPPED = 3

_TASK_NAMES = {kind.value: kind for kind in TaskKind}
_ENTAILMENT = {TaskKind.CRED_NEG, TaskKind.SKEP_NEG, TaskKind.SUPP_CRED_NEG, TaskKind.SUPP_SKEP_NEG}


def _caps_from_env() -> Caps:
    raw = os.environ.get("ARITY_ASP_CAPS")
    if not raw:
        return Caps()
    try:
        enum_cap, min_cap = (int(part) for part in raw.split(","))
        return Caps(enum_cap, min_cap)
    except (ValueError, TypeError) as exc:
        raise ArityAspError(f"bad ARITY_ASP_CAPS value {raw!r}: expected 'enum,min'") from exc


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _load_program(path: str) -> Program:
    return parse_program(_read(path))


def _emit(args, text_lines: list[str], payload: dict) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        for line in text_lines:
            print(line)


def _witness_text(p: Program, witness: Optional[frozenset]) -> str:
    if witness is None:
        return "-"
    return "{" + ",".join(sorted(p.table.name(a) for a in witness)) + "}"


def _witness_json(p: Program, witness: Optional[frozenset]):
    if witness is None:
        return None
    return sorted(p.table.name(a) for a in witness)


def _cmd_classify(args) -> int:
    d = load_arity_set(_read(args.arities))
    want = Schema(args.schema)
    if d.schema is not want:
        raise ArityAspError(
            f"arity file declares schema {d.schema.value!r}, command asked for {want.value!r}"
        )
    verdict = classify(_TASK_NAMES[args.task], d)
    _emit(
        args,
        [verdict.describe()],
        {"label": verdict.label.value, "condition": verdict.condition, "engine": str(verdict.engine)},
    )
    return EXIT_OK


def _cmd_profile(args) -> int:
    p = _load_program(args.program)
    arities = [arity_of_rule(r) for r in p.rules]
    antichain = normalize(profile(p))
    verdicts = {kind.value: classify(kind, profile(p)) for kind in TaskKind}
    lines = [
        "arities: " + " ".join(format_arity(a) for a in arities),
        "antichain: " + " ".join(format_arity(a) for a in antichain.sorted()),
    ]
    lines += [f"{name}: {v.describe()}" for name, v in verdicts.items()]
    _emit(
        args,
        lines,
        {
            "arities": [list(a) for a in arities],
            "antichain": [list(a) for a in antichain.sorted()],
            "verdicts": {
                name: {"label": v.label.value, "condition": v.condition, "engine": str(v.engine)}
                for name, v in verdicts.items()
            },
        },
    )
    return EXIT_OK


def _cmd_solve(args) -> int:
    kind = _TASK_NAMES[args.task]
    if kind in _ENTAILMENT and not args.atom:
        raise ArityAspError(f"task {args.task!r} needs --atom")
    if kind not in _ENTAILMENT and args.atom:
        raise ArityAspError(f"task {args.task!r} does not take --atom")
    p = _load_program(args.program)
    decision = decide(Task(kind, args.atom), p, _caps_from_env())
    _emit(
        args,
        [
            "YES" if decision.answer else "NO",
            _witness_text(p, decision.witness),
            str(decision.engine_used),
        ],
        {
            "answer": decision.answer,
            "witness": _witness_json(p, decision.witness),
            "engine": str(decision.engine_used),
            "verdict": {
                "label": decision.verdict.label.value,
                "condition": decision.verdict.condition,
            },
        },
    )
    return EXIT_OK


def _parse_model(p: Program, text: str) -> frozenset:
    names = [part.strip() for part in text.split(",") if part.strip()]
    atoms = set()
    for name in names:
        match = IDENT_RE.fullmatch(name)
        if not match:
            raise ArityAspError(f"bad atom name {name!r} in --model")
        atoms.add(p.table.intern(name))
    return frozenset(atoms)


def _cmd_check(args) -> int:
    p = _load_program(args.program)
    model = _parse_model(p, args.model)
    caps = _caps_from_env()
    if args.semantics == "answer":
        valid = is_answer_set(p, model, caps)
    else:
        valid = is_supported_model(p, model, caps)
    _emit(args, ["VALID" if valid else "INVALID"], {"valid": valid})
    return EXIT_OK


def _cmd_normalize(args) -> int:
    d = load_arity_set(_read(args.arities))
    result = normalize(d)
    _emit(args, [dump_arity_set(result)], json.loads(dump_arity_set(result)))
    return EXIT_OK


def _cmd_reduce(args) -> int:
    name = args.name
    if name.startswith("sat-shape-"):
        phi = parse_cnf(_read(args.input))
        out = gadget_sat_shape(phi, int(name.rsplit("-", 1)[1]))
        _emit(args, [serialize_cnf(out)], {"cnf": serialize_cnf(out)})
        return EXIT_OK
    if name == "eas-r":
        out_p = gadget_eas_R(parse_cnf(_read(args.input)))
        _emit(args, [serialize_program(out_p)], {"program": serialize_program(out_p)})
        return EXIT_OK
    if name in ("supp-7", "supp-8"):
        out_p = gadget_supported(parse_cnf(_read(args.input)), int(name[-1]))
        _emit(args, [serialize_program(out_p)], {"program": serialize_program(out_p)})
        return EXIT_OK
    if name == "pad":
        if not args.arities:
            raise ArityAspError("reduce --name pad needs --arities FILE")
        out_p = pad_to_explicit(_load_program(args.input), load_arity_set(_read(args.arities)))
        _emit(args, [serialize_program(out_p)], {"program": serialize_program(out_p)})
        return EXIT_OK
    if name == "fold":
        if not args.atom:
            raise ArityAspError("reduce --name fold needs --atom NAME")
        out_p = fold_constraints(_load_program(args.input), args.atom)
        _emit(args, [serialize_program(out_p)], {"program": serialize_program(out_p)})
        return EXIT_OK
    if name == "chain":
        p = _load_program(args.input)
        if args.atoms:
            atoms = []
            for part in args.atoms.split(","):
                ident = p.table.lookup(part.strip())
                if ident is None:
                    raise ArityAspError(f"unknown atom {part.strip()!r} in --atoms")
                atoms.append(ident)
        else:
            atoms = []
            for r in p.rules:
                if not r.head and not r.pos and len(r.neg) == 1 and r.neg[0] not in atoms:
                    atoms.append(r.neg[0])
        out_p, goal = chain_replace(p, atoms)
        goal_name = out_p.table.name(goal)
        _emit(
            args,
            [f"% query {goal_name}", serialize_program(out_p)],
            {"program": serialize_program(out_p), "query": goal_name},
        )
        return EXIT_OK
    raise ArityAspError(f"unknown reduction {name!r}")


def _cmd_gen(args) -> int:
    d = load_arity_set(_read(args.profile))
    p = random_program(d, args.atoms, args.rules, args.seed)
    _emit(args, [serialize_program(p)], {"program": serialize_program(p)})
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="arityasp",
        description="Arity-profile complexity classification and reasoning for disjunctive programs",
    )
    top.add_argument("--json", action="store_true", help="emit JSON instead of text")
    sub = top.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="complexity of a task for an arity-set class")
    c.add_argument("--task", required=True, choices=sorted(_TASK_NAMES))
    c.add_argument("--schema", required=True, choices=["implicit", "explicit"])
    c.add_argument("--arities", required=True, metavar="FILE")
    c.set_defaults(func=_cmd_classify)

    c = sub.add_parser("profile", help="arity profile and per-task verdicts of a program")
    c.add_argument("program", metavar="PROGRAM_FILE")
    c.set_defaults(func=_cmd_profile)

    c = sub.add_parser("solve", help="decide a task on a program")
    c.add_argument("--task", required=True, choices=sorted(_TASK_NAMES))
    c.add_argument("--atom", metavar="NAME")
    c.add_argument("program", metavar="PROGRAM_FILE")
    c.set_defaults(func=_cmd_solve)

    c = sub.add_parser("check", help="validate an interpretation against a program")
    c.add_argument("--semantics", required=True, choices=["answer", "supported"])
    c.add_argument("--model", required=True, metavar="ATOMS")
    c.add_argument("program", metavar="PROGRAM_FILE")
    c.set_defaults(func=_cmd_check)

    c = sub.add_parser("normalize", help="antichain form of an implicit arity set")
    c.add_argument("--arities", required=True, metavar="FILE")
    c.set_defaults(func=_cmd_normalize)

    c = sub.add_parser("reduce", help="run a reduction construction")
    c.add_argument(
        "--name",
        required=True,
        choices=[
            "sat-shape-1",
            "sat-shape-2",
            "sat-shape-3",
            "sat-shape-4",
            "eas-r",
            "supp-7",
            "supp-8",
            "pad",
            "fold",
            "chain",
        ],
    )
    c.add_argument("--arities", metavar="FILE", help="explicit target set for pad")
    c.add_argument("--atom", metavar="NAME", help="fresh atom for fold")
    c.add_argument("--atoms", metavar="NAMES", help="chain order, comma-separated")
    c.add_argument("input", metavar="INPUT_FILE")
    c.set_defaults(func=_cmd_reduce)

    c = sub.add_parser("gen", help="seeded random program for a profile")
    c.add_argument("--profile", required=True, metavar="ARITY_FILE")
    c.add_argument("--atoms", required=True, type=int)
    c.add_argument("--rules", required=True, type=int)
    c.add_argument("--seed", required=True, type=int)
    c.set_defaults(func=_cmd_gen)
    return top


def run(argv: list[str]) -> int:
    """Entry point used by tests; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except OracleLimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPPED
    except (ArityAspError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run(sys.argv[1:]))
